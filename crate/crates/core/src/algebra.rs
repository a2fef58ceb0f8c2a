//! Finite-dimensional anticommutative algebras given by structure constants,
//! together with the operations derived from the binary bracket: the
//! Yamaguti ternary bracket, left translations and the Yamagutian.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::linalg::{Operator, Vector};
use crate::scalar::Scalar;

/// An anticommutative algebra `[e_i, e_j] = Σ_k c_ij^k e_k`.
///
/// Only the pairs `i < j` are stored, so antisymmetry holds by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    basis: Vec<String>,
    /// `constants[pair_index(i, j)]` is `[e_i, e_j]` for `i < j`.
    constants: Vec<Vector>,
}

/// Unvalidated description of an algebra, as assembled by loaders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawAlgebra {
    pub name: String,
    pub basis: Vec<String>,
    /// Listed brackets; pairs that do not appear are zero.
    pub brackets: Vec<RawBracket>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawBracket {
    pub i: usize,
    pub j: usize,
    pub coords: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub location: String,
    pub message: String,
}

/// Outcome of [`validate`]: empty means the description is well formed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, location: impl Into<String>, message: impl Into<String>) {
        self.violations.push(Violation {
            location: location.into(),
            message: message.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (n, v) in self.violations.iter().enumerate() {
            if n > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}: {}", v.location, v.message)?;
        }
        Ok(())
    }
}

/// Checks table shape, index ranges, coordinate lengths and basis labels.
pub fn validate(raw: &RawAlgebra) -> ValidationReport {
    let mut report = ValidationReport::default();
    let dim = raw.basis.len();
    if dim == 0 {
        report.push("basis", "dimension must be positive");
    }
    let mut labels = HashSet::new();
    for (k, label) in raw.basis.iter().enumerate() {
        if label.trim().is_empty() {
            report.push(format!("basis[{k}]"), "empty label");
        } else if !labels.insert(label.as_str()) {
            report.push(format!("basis[{k}]"), format!("duplicate label `{label}`"));
        }
    }
    let mut seen = HashSet::new();
    for (n, b) in raw.brackets.iter().enumerate() {
        let loc = format!("brackets[{n}]");
        if b.i >= b.j {
            report.push(&loc, format!("i must be < j (got i={}, j={})", b.i, b.j));
        }
        if b.i >= dim || b.j >= dim {
            report.push(
                &loc,
                format!("index out of range (i={}, j={}, dim={dim})", b.i, b.j),
            );
        }
        if !seen.insert((b.i, b.j)) {
            report.push(&loc, format!("duplicate entry for pair ({}, {})", b.i, b.j));
        }
        if b.coords.len() != dim {
            report.push(
                format!("{loc}.coords"),
                format!("expected {dim} coordinates, found {}", b.coords.len()),
            );
        }
    }
    report
}

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * (2 * dim - i - 1) / 2 + (j - i - 1)
}

impl Algebra {
    /// Validates `raw` and builds the algebra.
    pub fn from_raw(raw: RawAlgebra) -> Result<Self> {
        let report = validate(&raw);
        if !report.is_valid() {
            return Err(Error::InvalidAlgebra(report));
        }
        let dim = raw.basis.len();
        let mut constants = vec![Vector::zero(dim); dim * (dim - 1) / 2];
        for b in raw.brackets {
            constants[pair_index(dim, b.i, b.j)] = Vector::from_coords(b.coords);
        }
        Ok(Algebra {
            name: raw.name,
            basis: raw.basis,
            constants,
        })
    }

    /// Convenience constructor from integer brackets `(i, j, coords)`.
    pub fn from_int_brackets(
        name: impl Into<String>,
        basis: &[&str],
        brackets: &[(usize, usize, &[i64])],
    ) -> Result<Self> {
        Algebra::from_raw(RawAlgebra {
            name: name.into(),
            basis: basis.iter().map(|s| s.to_string()).collect(),
            brackets: brackets
                .iter()
                .map(|&(i, j, c)| RawBracket {
                    i,
                    j,
                    coords: c.iter().map(|&x| Scalar::from_int(x)).collect(),
                })
                .collect(),
        })
    }

    /// The nonzero brackets `i < j` in lexicographic order.
    pub fn to_raw(&self) -> RawAlgebra {
        let dim = self.dim();
        let mut brackets = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let c = &self.constants[pair_index(dim, i, j)];
                if !c.is_zero() {
                    brackets.push(RawBracket {
                        i,
                        j,
                        coords: c.coords().to_vec(),
                    });
                }
            }
        }
        RawAlgebra {
            name: self.name.clone(),
            basis: self.basis.clone(),
            brackets,
        }
    }

    /// Re-checks the stored table; always valid for a constructed algebra.
    pub fn validate(&self) -> ValidationReport {
        let mut report = validate(&self.to_raw());
        let dim = self.dim();
        if self.constants.len() != dim * dim.saturating_sub(1) / 2 {
            report.push("constants", "table size does not match dimension");
        }
        for (n, c) in self.constants.iter().enumerate() {
            if c.dim() != dim {
                report.push(format!("constants[{n}]"), "wrong coordinate count");
            }
        }
        report
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_vector(&self, k: usize) -> Vector {
        Vector::basis(self.dim(), k)
    }

    /// `[e_i, e_j]` for any pair of indices.
    pub fn structure_constant(&self, i: usize, j: usize) -> Vector {
        let dim = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.constants[pair_index(dim, i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.constants[pair_index(dim, j, i)],
            std::cmp::Ordering::Equal => Vector::zero(dim),
        }
    }

    /// Whether all structure constants vanish.
    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(Vector::is_zero)
    }

    fn check(&self, op: &'static str, operand: &'static str, v: &Vector) -> Result<()> {
        check_dim(op, operand, self.dim(), v.dim())
    }

    /// Binary bracket `[x, y]`, extended bilinearly.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check("bracket", "x", x)?;
        self.check("bracket", "y", y)?;
        let dim = self.dim();
        let mut out = Vector::zero(dim);
        for (i, xi) in x.nonzero() {
            for (j, yj) in y.nonzero() {
                if i == j {
                    continue;
                }
                let coef = xi * yj;
                if i < j {
                    out.add_scaled(&coef, &self.constants[pair_index(dim, i, j)]);
                } else {
                    out.add_scaled(&-coef, &self.constants[pair_index(dim, j, i)]);
                }
            }
        }
        Ok(out)
    }

    /// Yamaguti bracket `[x,y,z] = [x,[y,z]] − [y,[x,z]] + [[x,y],z]`.
    pub fn yamaguti(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        self.check("yamaguti", "x", x)?;
        self.check("yamaguti", "y", y)?;
        self.check("yamaguti", "z", z)?;
        let a = self.bracket(x, &self.bracket(y, z)?)?;
        let b = self.bracket(y, &self.bracket(x, z)?)?;
        let c = self.bracket(&self.bracket(x, y)?, z)?;
        Ok(&(&a - &b) + &c)
    }

    /// Matrix of `y ↦ [x, y]`; column `k` is `[x, e_k]`.
    pub fn left_translation(&self, x: &Vector) -> Result<Operator> {
        self.check("left_translation", "x", x)?;
        let columns = (0..self.dim())
            .map(|k| self.bracket(x, &self.basis_vector(k)))
            .collect::<Result<Vec<_>>>()?;
        Operator::from_columns(&columns)
    }

    /// `Ŷ(x;y) = (1/6)([l⁺_x, l⁺_y] + l⁺_[x,y])`, built from left translations.
    ///
    /// Applied to `z` it agrees with `(1/6)·[x,y,z]`.
    pub fn yamagutian(&self, x: &Vector, y: &Vector) -> Result<Operator> {
        self.check("yamagutian", "x", x)?;
        self.check("yamagutian", "y", y)?;
        let lx = self.left_translation(x)?;
        let ly = self.left_translation(y)?;
        let lxy = self.left_translation(&self.bracket(x, y)?)?;
        let six = lx.commutator(&ly)?.try_add(&lxy)?;
        Ok(six.scale(&Scalar::ratio(1, 6).expect("nonzero denominator")))
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("basis", &self.basis)
            .field("brackets", &self.to_raw().brackets)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    fn e(a: &Algebra, k: usize) -> Vector {
        a.basis_vector(k)
    }

    #[test]
    fn so3_bracket_examples() {
        let so3 = builtin("so3").unwrap();
        assert_eq!(so3.bracket(&e(&so3, 0), &e(&so3, 1)).unwrap(), e(&so3, 2));
        // [e1 + e2, e2] = [e1, e2] + [e2, e2] = e3
        let x = &e(&so3, 0) + &e(&so3, 1);
        assert_eq!(so3.bracket(&x, &e(&so3, 1)).unwrap(), e(&so3, 2));
        assert!(so3.bracket(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn bracket_dimension_mismatch_names_operand() {
        let so3 = builtin("so3").unwrap();
        let err = so3.bracket(&Vector::zero(3), &Vector::zero(2)).unwrap_err();
        match err {
            Error::DimensionMismatch {
                op,
                operand,
                expected,
                found,
            } => {
                assert_eq!((op, operand, expected, found), ("bracket", "y", 3, 2));
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(so3
            .yamaguti(&Vector::zero(4), &Vector::zero(3), &Vector::zero(3))
            .is_err());
        assert!(so3.left_translation(&Vector::zero(1)).is_err());
        assert!(so3.yamagutian(&Vector::zero(3), &Vector::zero(5)).is_err());
    }

    #[test]
    fn yamaguti_examples() {
        let so3 = builtin("so3").unwrap();
        let (e1, e2) = (e(&so3, 0), e(&so3, 1));
        assert_eq!(
            so3.yamaguti(&e1, &e2, &e1).unwrap(),
            e2.scale(&Scalar::from_int(2))
        );
        assert!(so3.yamaguti(&e1, &e1, &e2).unwrap().is_zero());
        let ab = builtin("abelian(3)").unwrap();
        let x = Vector::from_ints(&[1, 2, 3]);
        let y = Vector::from_ints(&[0, -1, 5]);
        assert!(ab.yamaguti(&x, &y, &x).unwrap().is_zero());
    }

    #[test]
    fn left_translation_examples() {
        let so3 = builtin("so3").unwrap();
        let l3 = so3.left_translation(&e(&so3, 2)).unwrap();
        assert_eq!(l3.apply(&e(&so3, 0)).unwrap(), e(&so3, 1));
        assert!(so3.left_translation(&Vector::zero(3)).unwrap().is_zero());
        let ab = builtin("abelian(4)").unwrap();
        assert!(ab
            .left_translation(&Vector::from_ints(&[1, 1, 2, 3]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn yamagutian_examples() {
        let so3 = builtin("so3").unwrap();
        let (e1, e2, e3) = (e(&so3, 0), e(&so3, 1), e(&so3, 2));
        let third = Scalar::ratio(1, 3).unwrap();
        let y12 = so3.yamagutian(&e1, &e2).unwrap();
        assert_eq!(y12, so3.left_translation(&e3).unwrap().scale(&third));
        assert_eq!(y12.apply(&e1).unwrap(), e2.scale(&third));
        assert!(so3.yamagutian(&e2, &e2).unwrap().is_zero());
    }

    #[test]
    fn so3_adjoint_commutator() {
        let so3 = builtin("so3").unwrap();
        let l1 = so3.left_translation(&e(&so3, 0)).unwrap();
        let l2 = so3.left_translation(&e(&so3, 1)).unwrap();
        let l3 = so3.left_translation(&e(&so3, 2)).unwrap();
        assert_eq!(l1.commutator(&l2).unwrap(), l3);
    }

    #[test]
    fn validate_reports_locations() {
        let raw = RawAlgebra {
            name: "bad".into(),
            basis: vec!["a".into(), "b".into(), "a".into()],
            brackets: vec![
                RawBracket {
                    i: 0,
                    j: 1,
                    coords: vec![Scalar::one()],
                },
                RawBracket {
                    i: 2,
                    j: 1,
                    coords: vec![Scalar::zero(); 3],
                },
                RawBracket {
                    i: 0,
                    j: 5,
                    coords: vec![Scalar::zero(); 3],
                },
            ],
        };
        let report = validate(&raw);
        let locs: Vec<&str> = report
            .violations
            .iter()
            .map(|v| v.location.as_str())
            .collect();
        assert_eq!(
            locs,
            [
                "basis[2]",
                "brackets[0].coords",
                "brackets[1]",
                "brackets[2]"
            ]
        );
        assert!(report.violations[2].message.contains("i must be < j"));
        assert!(matches!(
            Algebra::from_raw(raw),
            Err(Error::InvalidAlgebra(_))
        ));
    }

    #[test]
    fn catalog_entries_validate() {
        for name in ["abelian(2)", "so3", "sl2", "m7", "nc3"] {
            let a = builtin(name).unwrap();
            assert!(a.validate().is_valid(), "{name}");
        }
    }
}
