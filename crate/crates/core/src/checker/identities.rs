//! The builtin identity catalogue.
//!
//! Each identity knows its variables, how often each occurs per monomial,
//! and how to evaluate both sides for a concrete assignment. Vector-level
//! identities also carry an equivalent DSL rendering whose evaluation
//! produces the same left and right values.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Operator, Vector};
use crate::scalar::Scalar;

/// Value of one side of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Vector(Vector),
    Operator(Operator),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Vector(v) => v.is_zero(),
            Value::Operator(m) => m.is_zero(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BuiltinIdentity {
    Anticommutativity,
    TernaryAntisymmetry,
    GltsC,
    GltsD,
    SagleYamaguti,
    GltsF,
    YamagutianAntisymmetry,
    YamagutianConstraint,
    Derivation,
    Reductivity,
    HiddenAssocOperator,
    TernaryDerivation,
    Maltsev,
    Jacobi,
}

use BuiltinIdentity::*;

impl BuiltinIdentity {
    pub const ALL: [BuiltinIdentity; 14] = [
        Anticommutativity,
        TernaryAntisymmetry,
        GltsC,
        GltsD,
        SagleYamaguti,
        GltsF,
        YamagutianAntisymmetry,
        YamagutianConstraint,
        Derivation,
        Reductivity,
        HiddenAssocOperator,
        TernaryDerivation,
        Maltsev,
        Jacobi,
    ];

    /// The six axioms of a general Lie triple system, in order.
    pub const GLTS: [BuiltinIdentity; 6] = [
        Anticommutativity,
        TernaryAntisymmetry,
        GltsC,
        GltsD,
        SagleYamaguti,
        GltsF,
    ];

    /// Everything that holds in every Mal'tsev algebra. `jacobi` is left
    /// out: it detects Lie algebras and fails on `m7`.
    pub fn maltsev_theory() -> impl Iterator<Item = BuiltinIdentity> {
        Self::ALL.into_iter().filter(|id| *id != Jacobi)
    }

    pub fn id(self) -> &'static str {
        match self {
            Anticommutativity => "anticommutativity",
            TernaryAntisymmetry => "ternary-antisymmetry",
            GltsC => "glts-c",
            GltsD => "glts-d",
            SagleYamaguti => "sagle-yamaguti",
            GltsF => "glts-f",
            YamagutianAntisymmetry => "yamagutian-antisymmetry",
            YamagutianConstraint => "yamagutian-constraint",
            Derivation => "derivation",
            Reductivity => "reductivity",
            HiddenAssocOperator => "hidden-assoc-operator",
            TernaryDerivation => "ternary-derivation",
            Maltsev => "maltsev",
            Jacobi => "jacobi",
        }
    }

    /// Variable names in stream order.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            Anticommutativity | YamagutianAntisymmetry => &["x", "y"],
            TernaryAntisymmetry | GltsC | YamagutianConstraint | Reductivity | Maltsev | Jacobi => {
                &["x", "y", "z"]
            }
            GltsD => &["x", "y", "z", "u"],
            SagleYamaguti | Derivation | HiddenAssocOperator => &["x", "y", "z", "w"],
            GltsF | TernaryDerivation => &["x", "y", "z", "w", "v"],
        }
    }

    pub fn arity(self) -> usize {
        self.variables().len()
    }

    /// Occurrences of each variable per monomial.
    pub fn multiplicities(self) -> Vec<usize> {
        match self {
            Maltsev => vec![2, 1, 1],
            other => vec![1; other.arity()],
        }
    }

    /// Whether the sides are operators rather than vectors.
    pub fn is_operator_level(self) -> bool {
        matches!(
            self,
            YamagutianAntisymmetry | YamagutianConstraint | Reductivity | HiddenAssocOperator
        )
    }

    /// Human-readable statement. `Y` is the Yamagutian, `l` the left translation.
    pub fn formula(self) -> &'static str {
        match self {
            Anticommutativity => "[x,y] = -[y,x]",
            TernaryAntisymmetry => "[x,y,z] = -[y,x,z]",
            GltsC => "[x,y,z] + [y,z,x] + [z,x,y] + [[x,y],z] + [[y,z],x] + [[z,x],y] = 0",
            GltsD => "[[x,y],z,u] + [[y,z],x,u] + [[z,x],y,u] = 0",
            SagleYamaguti => "[x,y,[z,w]] = [[x,y,z],w] + [z,[x,y,w]]",
            GltsF => "[x,y,[z,w,v]] = [[x,y,z],w,v] + [z,[x,y,w],v] + [z,w,[x,y,v]]",
            YamagutianAntisymmetry => "Y(x;y) = -Y(y;x)",
            YamagutianConstraint => "Y([x,y];z) + Y([y,z];x) + Y([z,x];y) = 0",
            Derivation => "Y(x;y)[z,w] = [Y(x;y)z,w] + [z,Y(x;y)w]",
            Reductivity => "6[Y(x;y), l_z] = l_[x,y,z]",
            HiddenAssocOperator => "6[Y(x;y), Y(z;w)] = Y([x,y,z];w) + Y(z;[x,y,w])",
            TernaryDerivation => "Y(x;y)[z,w,v] = [Y(x;y)z,w,v] + [z,Y(x;y)w,v] + [z,w,Y(x;y)v]",
            Maltsev => "[[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y]",
            Jacobi => "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0",
        }
    }

    /// The identity written in the bracket DSL, when it is vector-level.
    pub fn dsl(self) -> Option<&'static str> {
        Some(match self {
            Anticommutativity => "[x,y] = -[y,x]",
            TernaryAntisymmetry => "[x,y,z] = -[y,x,z]",
            GltsC => "[x,y,z] + [y,z,x] + [z,x,y] + [[x,y],z] + [[y,z],x] + [[z,x],y] = 0",
            GltsD => "[[x,y],z,u] + [[y,z],x,u] + [[z,x],y,u] = 0",
            SagleYamaguti => "[x,y,[z,w]] = [[x,y,z],w] + [z,[x,y,w]]",
            GltsF => "[x,y,[z,w,v]] = [[x,y,z],w,v] + [z,[x,y,w],v] + [z,w,[x,y,v]]",
            Derivation => "1/6*[x,y,[z,w]] = [1/6*[x,y,z],w] + [z,1/6*[x,y,w]]",
            TernaryDerivation => {
                "1/6*[x,y,[z,w,v]] = [1/6*[x,y,z],w,v] + [z,1/6*[x,y,w],v] + [z,w,1/6*[x,y,v]]"
            }
            Maltsev => "[[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y]",
            Jacobi => "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0",
            YamagutianAntisymmetry | YamagutianConstraint | Reductivity | HiddenAssocOperator => {
                return None
            }
        })
    }

    /// Both sides at one assignment; `vars` follows [`Self::variables`].
    pub fn evaluate(self, a: &Algebra, vars: &[Vector]) -> Result<(Value, Value)> {
        if vars.len() != self.arity() {
            return Err(Error::DimensionMismatch {
                op: "identity evaluation",
                operand: "assignment",
                expected: self.arity(),
                found: vars.len(),
            });
        }
        let b = |p: &Vector, q: &Vector| a.bracket(p, q);
        let t = |p: &Vector, q: &Vector, r: &Vector| a.yamaguti(p, q, r);
        let yam = |p: &Vector, q: &Vector| a.yamagutian(p, q);
        let vec = |v: Vector| Value::Vector(v);
        let op = |m: Operator| Value::Operator(m);
        let six = Scalar::from_int(6);
        let dim = a.dim();

        Ok(match self {
            Anticommutativity => {
                let (x, y) = (&vars[0], &vars[1]);
                (vec(b(x, y)?), vec(-&b(y, x)?))
            }
            TernaryAntisymmetry => {
                let (x, y, z) = (&vars[0], &vars[1], &vars[2]);
                (vec(t(x, y, z)?), vec(-&t(y, x, z)?))
            }
            GltsC => {
                let (x, y, z) = (&vars[0], &vars[1], &vars[2]);
                let terms = [
                    t(x, y, z)?,
                    t(y, z, x)?,
                    t(z, x, y)?,
                    b(&b(x, y)?, z)?,
                    b(&b(y, z)?, x)?,
                    b(&b(z, x)?, y)?,
                ];
                (vec(sum(dim, &terms)), vec(Vector::zero(dim)))
            }
            GltsD => {
                let (x, y, z, u) = (&vars[0], &vars[1], &vars[2], &vars[3]);
                let terms = [
                    t(&b(x, y)?, z, u)?,
                    t(&b(y, z)?, x, u)?,
                    t(&b(z, x)?, y, u)?,
                ];
                (vec(sum(dim, &terms)), vec(Vector::zero(dim)))
            }
            SagleYamaguti => {
                let (x, y, z, w) = (&vars[0], &vars[1], &vars[2], &vars[3]);
                let lhs = t(x, y, &b(z, w)?)?;
                let rhs = &b(&t(x, y, z)?, w)? + &b(z, &t(x, y, w)?)?;
                (vec(lhs), vec(rhs))
            }
            GltsF => {
                let (x, y, z, w, v) = (&vars[0], &vars[1], &vars[2], &vars[3], &vars[4]);
                let lhs = t(x, y, &t(z, w, v)?)?;
                let terms = [
                    t(&t(x, y, z)?, w, v)?,
                    t(z, &t(x, y, w)?, v)?,
                    t(z, w, &t(x, y, v)?)?,
                ];
                (vec(lhs), vec(sum(dim, &terms)))
            }
            YamagutianAntisymmetry => {
                let (x, y) = (&vars[0], &vars[1]);
                let neg = yam(y, x)?.scale(&Scalar::from_int(-1));
                (op(yam(x, y)?), op(neg))
            }
            YamagutianConstraint => {
                let (x, y, z) = (&vars[0], &vars[1], &vars[2]);
                let lhs = yam(&b(x, y)?, z)?
                    .try_add(&yam(&b(y, z)?, x)?)?
                    .try_add(&yam(&b(z, x)?, y)?)?;
                (op(lhs), op(Operator::zero(dim)))
            }
            Derivation => {
                let (x, y, z, w) = (&vars[0], &vars[1], &vars[2], &vars[3]);
                let d = yam(x, y)?;
                let lhs = d.apply(&b(z, w)?)?;
                let rhs = &b(&d.apply(z)?, w)? + &b(z, &d.apply(w)?)?;
                (vec(lhs), vec(rhs))
            }
            Reductivity => {
                let (x, y, z) = (&vars[0], &vars[1], &vars[2]);
                let lhs = yam(x, y)?.commutator(&a.left_translation(z)?)?.scale(&six);
                let rhs = a.left_translation(&t(x, y, z)?)?;
                (op(lhs), op(rhs))
            }
            HiddenAssocOperator => {
                let (x, y, z, w) = (&vars[0], &vars[1], &vars[2], &vars[3]);
                let lhs = yam(x, y)?.commutator(&yam(z, w)?)?.scale(&six);
                let rhs = yam(&t(x, y, z)?, w)?.try_add(&yam(z, &t(x, y, w)?)?)?;
                (op(lhs), op(rhs))
            }
            TernaryDerivation => {
                let (x, y, z, w, v) = (&vars[0], &vars[1], &vars[2], &vars[3], &vars[4]);
                let d = yam(x, y)?;
                let lhs = d.apply(&t(z, w, v)?)?;
                let terms = [
                    t(&d.apply(z)?, w, v)?,
                    t(z, &d.apply(w)?, v)?,
                    t(z, w, &d.apply(v)?)?,
                ];
                (vec(lhs), vec(sum(dim, &terms)))
            }
            Maltsev => {
                let (x, y, z) = (&vars[0], &vars[1], &vars[2]);
                let xy = b(x, y)?;
                let lhs = b(&xy, &b(x, z)?)?;
                let terms = [
                    b(&b(&xy, z)?, x)?,
                    b(&b(&b(y, z)?, x)?, x)?,
                    b(&b(&b(z, x)?, x)?, y)?,
                ];
                (vec(lhs), vec(sum(dim, &terms)))
            }
            Jacobi => {
                let (x, y, z) = (&vars[0], &vars[1], &vars[2]);
                let terms = [b(&b(x, y)?, z)?, b(&b(y, z)?, x)?, b(&b(z, x)?, y)?];
                (vec(sum(dim, &terms)), vec(Vector::zero(dim)))
            }
        })
    }
}

/// Left-to-right sum, matching the DSL evaluator's order.
fn sum(dim: usize, terms: &[Vector]) -> Vector {
    terms.iter().fold(Vector::zero(dim), |acc, t| &acc + t)
}

impl fmt::Display for BuiltinIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for BuiltinIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BuiltinIdentity::ALL
            .into_iter()
            .find(|id| id.id() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}
