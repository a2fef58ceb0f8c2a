//! A small language for user-written bracket identities.
//!
//! `[a,b]` is the binary bracket and `[a,b,c]` the Yamaguti ternary bracket
//! derived from it. Coefficients are rationals, e.g.
//!
//! ```text
//! [x,y,z] = 2*[[x,y],z]
//! 1/6*[x,y,[z,w]] = [1/6*[x,y,z],w] + [z,1/6*[x,y,w]]
//! ```

mod ast;
mod parser;

pub use ast::{Expr, IdentityAst, Variable};
pub use parser::{parse_identities, parse_identity, ParseError};

use std::collections::HashMap;

use crate::algebra::Algebra;
use crate::checker::{
    run_check, CheckOptions, CheckReport, Polarization, SubstitutionStream, Value,
};
use crate::error::{check_dim, Error, Result};
use crate::linalg::Vector;

fn eval_expr<'a>(
    a: &Algebra,
    e: &Expr,
    lookup: &impl Fn(&str) -> Option<&'a Vector>,
) -> Result<Vector> {
    Ok(match e {
        Expr::Var(name) => lookup(name)
            .ok_or_else(|| Error::MissingVariable(name.clone()))?
            .clone(),
        Expr::Scale(c, inner) => eval_expr(a, inner, lookup)?.scale(c),
        Expr::Sum(terms) => {
            let mut acc = Vector::zero(a.dim());
            for t in terms {
                acc = acc.try_add(&eval_expr(a, t, lookup)?)?;
            }
            acc
        }
        Expr::Bracket(p, q) => a.bracket(&eval_expr(a, p, lookup)?, &eval_expr(a, q, lookup)?)?,
        Expr::Ternary(p, q, r) => a.yamaguti(
            &eval_expr(a, p, lookup)?,
            &eval_expr(a, q, lookup)?,
            &eval_expr(a, r, lookup)?,
        )?,
    })
}

/// Evaluates both sides of `ast` under `assignment`.
pub fn eval_ast(
    a: &Algebra,
    ast: &IdentityAst,
    assignment: &HashMap<String, Vector>,
) -> Result<(Vector, Vector)> {
    for var in &ast.variables {
        let v = assignment
            .get(&var.name)
            .ok_or_else(|| Error::MissingVariable(var.name.clone()))?;
        check_dim("eval_ast", "assignment", a.dim(), v.dim())?;
    }
    let lookup = |name: &str| assignment.get(name);
    Ok((
        eval_expr(a, &ast.lhs, &lookup)?,
        eval_expr(a, &ast.rhs, &lookup)?,
    ))
}

pub fn check_identity(a: &Algebra, ast: &IdentityAst) -> Result<CheckReport> {
    check_identity_with(a, ast, &CheckOptions::default())
}

/// Checks `ast` on `a` with the same stream and reporting rules as the builtins.
pub fn check_identity_with(
    a: &Algebra,
    ast: &IdentityAst,
    options: &CheckOptions,
) -> Result<CheckReport> {
    let shapes: Vec<Polarization> = ast.variables.iter().map(Variable::polarization).collect();
    let stream = SubstitutionStream::new(a.dim(), &shapes);
    let names = ast.variable_names();
    run_check(a, ast.to_string(), &names, &stream, options, |vars| {
        let lookup = |name: &str| names.iter().position(|n| n == name).map(|k| &vars[k]);
        Ok((
            Value::Vector(eval_expr(a, &ast.lhs, &lookup)?),
            Value::Vector(eval_expr(a, &ast.rhs, &lookup)?),
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;
    use crate::checker::{check_builtin, BuiltinIdentity};
    use crate::scalar::Scalar;

    fn assign(pairs: &[(&str, Vector)]) -> HashMap<String, Vector> {
        pairs
            .iter()
            .map(|(n, v)| (n.to_string(), v.clone()))
            .collect()
    }

    #[test]
    fn parse_examples() {
        let ast = parse_identity("[x,y] + [y,x] = 0").unwrap();
        assert_eq!(ast.variable_names(), ["x", "y"]);
        assert_eq!(ast.multiplicities(), [1, 1]);
        assert!(ast.rhs.is_zero_literal());

        let ast = parse_identity("[x,[y,z]] - [y,[x,z]] + [[x,y],z] - [x,y,z] = 0").unwrap();
        assert_eq!(ast.variable_names(), ["x", "y", "z"]);
        assert!(matches!(&ast.lhs, Expr::Sum(t) if t.len() == 4));
    }

    #[test]
    fn unterminated_bracket() {
        let err = parse_identity("[x,y,z").unwrap_err();
        assert_eq!(err.found, "end of input");
        assert_eq!((err.line, err.column), (1, 7));
        assert!(err.expected.contains(&"`]`".to_string()));
    }

    #[test]
    fn syntax_errors() {
        let err = parse_identity("[x,y,z,w] = 0").unwrap_err();
        assert!(err.to_string().contains("brackets take 2 or 3"), "{err}");
        assert_eq!(err.column, 1);
        assert!(parse_identity("[x] = 0")
            .unwrap_err()
            .to_string()
            .contains("1 argument"));
        assert!(parse_identity("[x,y] = 2").is_err());
        assert!(parse_identity("[x,y] = 1/0*x")
            .unwrap_err()
            .to_string()
            .contains("zero denominator"));
        assert!(parse_identity("[X,y] = 0").is_err());
        assert!(parse_identity("[x,y]").is_err());
        assert!(parse_identity("[x,y] = 0 = 0").is_err());
        assert!(parse_identity("2 [x,y] = 0")
            .unwrap_err()
            .expected
            .contains(&"`*`".to_string()));
        let err = parse_identity("[x,y]\n  = [y x]").unwrap_err();
        assert_eq!((err.line, err.column), (2, 8));
    }

    #[test]
    fn coefficients_and_unary_minus() {
        let ast = parse_identity("-[x,y] = -3/6*[y,x] - x + 0").unwrap();
        assert_eq!(
            ast.lhs,
            Expr::Scale(
                Scalar::from_int(-1),
                Box::new(Expr::Bracket(
                    Box::new(Expr::Var("x".into())),
                    Box::new(Expr::Var("y".into()))
                ))
            )
        );
        match &ast.rhs {
            Expr::Sum(t) => {
                assert!(matches!(&t[0], Expr::Scale(c, _) if *c == Scalar::ratio(-1, 2).unwrap()));
                assert!(matches!(&t[1], Expr::Scale(c, _) if *c == Scalar::from_int(-1)));
                assert!(t[2].is_zero_literal());
            }
            other => panic!("{other:?}"),
        }
        // the lone `x` term has degree 0 in y
        assert!(ast.variables[0].homogeneous);
        assert!(!ast.variables[1].homogeneous);
    }

    #[test]
    fn multiplicity_inference() {
        let ast = parse_identity(BuiltinIdentity::Maltsev.dsl().unwrap()).unwrap();
        assert_eq!(ast.multiplicities(), [2, 1, 1]);
        assert!(ast.variables.iter().all(|v| v.homogeneous));
        let ast = parse_identity("[x,[x,y]] = [x,y]").unwrap();
        assert_eq!(ast.multiplicities(), [2, 1]);
        assert!(!ast.variables[0].homogeneous);
        assert!(ast.variables[1].homogeneous);
        // sums inside brackets take the per-monomial maximum
        let ast = parse_identity("[x + y, x] = 0").unwrap();
        assert_eq!(ast.multiplicities(), [2, 1]);
    }

    #[test]
    fn eval_examples() {
        let so3 = builtin("so3").unwrap();
        let e = |k| so3.basis_vector(k);
        let ast = parse_identity("[x,y]=0").unwrap();
        let (l, r) = eval_ast(&so3, &ast, &assign(&[("x", e(0)), ("y", e(1))])).unwrap();
        assert_eq!((l, r), (e(2), Vector::zero(3)));

        let ast = parse_identity("[x,y,z]=2*[[x,y],z]").unwrap();
        let (l, r) = eval_ast(
            &so3,
            &ast,
            &assign(&[("x", e(0)), ("y", e(1)), ("z", e(0))]),
        )
        .unwrap();
        let two_e2 = e(1).scale(&Scalar::from_int(2));
        assert_eq!((l, r), (two_e2.clone(), two_e2));

        let ab = builtin("abelian(2)").unwrap();
        let ast = parse_identity(BuiltinIdentity::GltsF.dsl().unwrap()).unwrap();
        let v = Vector::from_ints(&[3, -1]);
        let all: Vec<(&str, Vector)> = ["x", "y", "z", "w", "v"]
            .iter()
            .map(|n| (*n, v.clone()))
            .collect();
        let (l, r) = eval_ast(&ab, &ast, &assign(&all)).unwrap();
        assert!(l.is_zero() && r.is_zero());
    }

    #[test]
    fn eval_errors() {
        let so3 = builtin("so3").unwrap();
        let ast = parse_identity("[x,y]=0").unwrap();
        assert!(matches!(
            eval_ast(&so3, &ast, &assign(&[("x", so3.basis_vector(0))])),
            Err(Error::MissingVariable(v)) if v == "y"
        ));
        assert!(matches!(
            eval_ast(
                &so3,
                &ast,
                &assign(&[("x", Vector::zero(2)), ("y", Vector::zero(3))])
            ),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn check_examples() {
        let so3 = builtin("so3").unwrap();
        let nc3 = builtin("nc3").unwrap();
        let sy = parse_identity(BuiltinIdentity::SagleYamaguti.dsl().unwrap()).unwrap();
        let r = check_identity(&so3, &sy).unwrap();
        let b = check_builtin(&so3, BuiltinIdentity::SagleYamaguti).unwrap();
        assert!(r.holds && b.holds);
        assert_eq!(r.substitutions_checked, b.substitutions_checked);

        assert!(
            check_identity(&nc3, &parse_identity("[x,y]+[y,x]=0").unwrap())
                .unwrap()
                .holds
        );

        let r = check_identity(&so3, &parse_identity("[x,y]=0").unwrap()).unwrap();
        assert!(!r.holds);
        let c = r.counterexample.unwrap();
        assert_eq!(c.substitution[0].vector, so3.basis_vector(0));
        assert_eq!(c.substitution[1].vector, so3.basis_vector(1));
        assert_eq!(r.substitutions_checked, 2);
    }

    #[test]
    fn inhomogeneous_identity_is_checked_soundly() {
        // In dimension 1, `x = y` holds whenever x and y are basis vectors,
        // but not for x = 0.
        let a = builtin("abelian(1)").unwrap();
        let ast = parse_identity("x = y").unwrap();
        assert!(ast.variables.iter().all(|v| !v.homogeneous));
        let r = check_identity(&a, &ast).unwrap();
        assert!(!r.holds);
        let c = r.counterexample.unwrap();
        assert!(c.substitution[0].vector.is_zero());
    }
}
