//! Builtin algebras and the `.alg.json` file format.
//!
//! | name         | dim | notes                                                     |
//! |--------------|-----|-----------------------------------------------------------|
//! | `abelian(n)` | n   | all brackets zero                                         |
//! | `so3`        | 3   | `[e1,e2]=e3`, `[e2,e3]=e1`, `[e3,e1]=e2`                  |
//! | `sl2`        | 3   | basis `h,e,f`; `[h,e]=2e`, `[h,f]=−2f`, `[e,f]=h`          |
//! | `m7`         | 7   | commutator algebra of the imaginary octonions (Mal'tsev, not Lie) |
//! | `nc3`        | 3   | `[e1,e2]=e1`, `[e2,e3]=e2`, `[e3,e1]=e3` (negative control) |

mod file;
pub mod octonion;

pub use file::{
    from_file, from_json_str, load, save, to_file, to_json_string, validate_file, AlgebraFile,
    BracketEntry,
};

use crate::algebra::{Algebra, RawAlgebra, RawBracket};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Names accepted by [`builtin`], with `abelian(n)` standing for any `n ≥ 1`.
pub const BUILTIN_NAMES: [&str; 5] = ["abelian(n)", "so3", "sl2", "m7", "nc3"];

pub fn builtin(name: &str) -> Result<Algebra> {
    let name = name.trim();
    if let Some(arg) = name
        .strip_prefix("abelian(")
        .and_then(|rest| rest.strip_suffix(')'))
    {
        let n: usize = arg
            .trim()
            .parse()
            .map_err(|_| Error::BadDimension(arg.to_string()))?;
        if n == 0 {
            return Err(Error::BadDimension(arg.to_string()));
        }
        return abelian(n);
    }
    match name {
        "so3" => so3(),
        "sl2" => sl2(),
        "m7" => m7(),
        "nc3" => nc3(),
        other => Err(Error::UnknownAlgebra(other.to_string())),
    }
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

pub fn abelian(n: usize) -> Result<Algebra> {
    Algebra::from_raw(RawAlgebra {
        name: format!("abelian({n})"),
        basis: labels("e", n),
        brackets: Vec::new(),
    })
}

pub fn so3() -> Result<Algebra> {
    Algebra::from_int_brackets(
        "so3",
        &["e1", "e2", "e3"],
        &[(0, 1, &[0, 0, 1]), (1, 2, &[1, 0, 0]), (0, 2, &[0, -1, 0])],
    )
}

pub fn sl2() -> Result<Algebra> {
    Algebra::from_int_brackets(
        "sl2",
        &["h", "e", "f"],
        &[(0, 1, &[0, 2, 0]), (0, 2, &[0, 0, -2]), (1, 2, &[1, 0, 0])],
    )
}

pub fn nc3() -> Result<Algebra> {
    Algebra::from_int_brackets(
        "nc3",
        &["e1", "e2", "e3"],
        &[(0, 1, &[1, 0, 0]), (1, 2, &[0, 1, 0]), (0, 2, &[0, 0, -1])],
    )
}

/// Imaginary octonions under `[a, b] = ab − ba`, read off from Cayley–Dickson
/// doubling of the quaternions. No normalising factor is applied, so the
/// nonzero constants are `±2`.
pub fn m7() -> Result<Algebra> {
    let mut brackets = Vec::new();
    for i in 0..7 {
        for j in i + 1..7 {
            let coords = octonion::imaginary_commutator(i + 1, j + 1);
            brackets.push(RawBracket {
                i,
                j,
                coords: coords.into_iter().map(Scalar::from_int).collect(),
            });
        }
    }
    Algebra::from_raw(RawAlgebra {
        name: "m7".into(),
        basis: labels("e", 7),
        brackets,
    })
}
