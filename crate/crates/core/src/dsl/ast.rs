use std::fmt;

use crate::checker::Polarization;
use crate::scalar::Scalar;

/// Expression tree of one side of an identity.
///
/// The parser never produces a one-element `Sum`, and `Sum(vec![])` is the
/// literal `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Var(String),
    Scale(Scalar, Box<Expr>),
    Sum(Vec<Expr>),
    Bracket(Box<Expr>, Box<Expr>),
    Ternary(Box<Expr>, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn zero() -> Expr {
        Expr::Sum(Vec::new())
    }

    pub fn is_zero_literal(&self) -> bool {
        matches!(self, Expr::Sum(t) if t.is_empty())
    }

    pub(crate) fn negate(self) -> Expr {
        match self {
            Expr::Scale(c, f) => Expr::Scale(-c, f),
            z if z.is_zero_literal() => z,
            other => Expr::Scale(Scalar::from_int(-1), Box::new(other)),
        }
    }

    /// Range of the degree in `var` over the monomials of the expanded
    /// expression; `None` when there are no monomials at all.
    fn degree_range(&self, var: &str) -> Option<(usize, usize)> {
        match self {
            Expr::Var(name) => Some(if name == var { (1, 1) } else { (0, 0) }),
            Expr::Scale(_, f) => f.degree_range(var),
            Expr::Sum(terms) => terms
                .iter()
                .filter_map(|t| t.degree_range(var))
                .reduce(|(a, b), (c, d)| (a.min(c), b.max(d))),
            Expr::Bracket(p, q) => add_ranges([p.degree_range(var), q.degree_range(var)]),
            Expr::Ternary(p, q, r) => add_ranges([
                p.degree_range(var),
                q.degree_range(var),
                r.degree_range(var),
            ]),
        }
    }

    fn collect_vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Var(name) => {
                if !out.contains(&name.as_str()) {
                    out.push(name);
                }
            }
            Expr::Scale(_, f) => f.collect_vars(out),
            Expr::Sum(terms) => terms.iter().for_each(|t| t.collect_vars(out)),
            Expr::Bracket(p, q) => {
                p.collect_vars(out);
                q.collect_vars(out);
            }
            Expr::Ternary(p, q, r) => {
                p.collect_vars(out);
                q.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }
}

fn add_ranges<const N: usize>(parts: [Option<(usize, usize)>; N]) -> Option<(usize, usize)> {
    parts
        .into_iter()
        .try_fold((0, 0), |(lo, hi), p| p.map(|(a, b)| (lo + a, hi + b)))
}

/// A universally quantified variable and how it has to be sampled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    /// Largest number of occurrences within one monomial.
    pub multiplicity: usize,
    /// Whether every monomial has the same degree in this variable.
    pub homogeneous: bool,
}

impl Variable {
    pub fn polarization(&self) -> Polarization {
        if self.homogeneous {
            Polarization::Homogeneous(self.multiplicity)
        } else {
            Polarization::General(self.multiplicity)
        }
    }
}

/// A parsed identity `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityAst {
    /// In order of first appearance in the text.
    pub variables: Vec<Variable>,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl IdentityAst {
    pub fn new(lhs: Expr, rhs: Expr) -> Self {
        let mut names = Vec::new();
        lhs.collect_vars(&mut names);
        rhs.collect_vars(&mut names);
        let variables = names
            .iter()
            .map(|&name| {
                let range = [lhs.degree_range(name), rhs.degree_range(name)]
                    .into_iter()
                    .flatten()
                    .reduce(|(a, b), (c, d)| (a.min(c), b.max(d)));
                let (lo, hi) = range.unwrap_or((1, 1));
                Variable {
                    name: name.to_string(),
                    multiplicity: hi.max(1),
                    homogeneous: lo == hi,
                }
            })
            .collect();
        IdentityAst {
            variables,
            lhs,
            rhs,
        }
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.variables.iter().map(|v| v.multiplicity).collect()
    }

    pub fn variable_names(&self) -> Vec<String> {
        self.variables.iter().map(|v| v.name.clone()).collect()
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, e: &Expr, leading: bool) -> fmt::Result {
    match e {
        Expr::Scale(c, inner) if !leading && c.is_negative() => {
            f.write_str(" - ")?;
            let magnitude = -c;
            if magnitude.is_one() {
                write!(f, "{inner}")
            } else {
                write!(f, "{magnitude}*{inner}")
            }
        }
        _ if !leading => write!(f, " + {e}"),
        _ => write!(f, "{e}"),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(name) => f.write_str(name),
            Expr::Scale(c, inner) => {
                if c.is_negative() && c.abs().is_one() {
                    write!(f, "-{inner}")
                } else {
                    write!(f, "{c}*{inner}")
                }
            }
            Expr::Sum(terms) => {
                if terms.is_empty() {
                    return f.write_str("0");
                }
                for (n, t) in terms.iter().enumerate() {
                    write_term(f, t, n == 0)?;
                }
                Ok(())
            }
            Expr::Bracket(p, q) => write!(f, "[{p}, {q}]"),
            Expr::Ternary(p, q, r) => write!(f, "[{p}, {q}, {r}]"),
        }
    }
}

impl fmt::Display for IdentityAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}
