//! Exhaustive identity checking with counterexample reporting.
//!
//! Each check walks a [`SubstitutionStream`] and compares both sides exactly.
//! The reported counterexample is always the first failing assignment in
//! stream order, whatever the number of workers.

mod identities;
mod stream;

pub use identities::{BuiltinIdentity, Value};
pub use stream::{candidates, substitution_stream, Polarization, SubstitutionStream};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Keep going after the first counterexample and count every violation.
    pub exhaustive: bool,
    /// Worker threads; 1 runs on the calling thread.
    pub workers: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            exhaustive: false,
            workers: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assignment {
    pub name: String,
    pub vector: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub substitution: Vec<Assignment>,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub identity: String,
    pub algebra: String,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
    /// Stream position of the counterexample (1-based), or the stream length
    /// when the identity holds or the run was exhaustive.
    pub substitutions_checked: u64,
    /// Number of failing substitutions; only counted in exhaustive mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violations: Option<u64>,
}

/// Verdicts of the Mal'tsev and Sagle–Yamaguti checks on one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub maltsev: CheckReport,
    pub sagle_yamaguti: CheckReport,
    pub agree: bool,
}

enum Outcome<T> {
    Pass,
    Fail(T),
}

/// Stream index, substitution, left value, right value.
type Failure = (u64, Vec<Vector>, Value, Value);

/// Runs `eval` over the stream and assembles a report.
pub(crate) fn run_check<F>(
    algebra: &Algebra,
    identity: String,
    names: &[String],
    stream: &SubstitutionStream,
    options: &CheckOptions,
    eval: F,
) -> Result<CheckReport>
where
    F: Fn(&[Vector]) -> Result<(Value, Value)> + Sync,
{
    assert_eq!(names.len(), stream.arity());
    let probe = |index: u64| -> Result<Outcome<(Vec<Vector>, Value, Value)>> {
        let vars = stream.get(index);
        let (lhs, rhs) = eval(&vars)?;
        Ok(if lhs == rhs {
            Outcome::Pass
        } else {
            Outcome::Fail((vars, lhs, rhs))
        })
    };
    // First failure (or error) in stream order, plus the violation count in
    // exhaustive mode.
    let search = || -> Result<(Option<Failure>, Option<u64>)> {
        let first = if options.workers <= 1 {
            let mut found = None;
            for i in 0..stream.len() {
                if let Outcome::Fail((v, l, r)) = probe(i)? {
                    found = Some((i, v, l, r));
                    break;
                }
            }
            found
        } else {
            (0..stream.len())
                .into_par_iter()
                .map(|i| (i, probe(i)))
                .find_map_first(|(i, r)| match r {
                    Ok(Outcome::Pass) => None,
                    Ok(Outcome::Fail((v, l, r))) => Some(Ok((i, v, l, r))),
                    Err(e) => Some(Err(e)),
                })
                .transpose()?
        };
        let violations = if !options.exhaustive {
            None
        } else if first.is_none() {
            Some(0)
        } else {
            let start = first.as_ref().map_or(0, |f| f.0);
            let failing = |i: u64| probe(i).map(|o| matches!(o, Outcome::Fail(_)) as u64);
            let count: u64 = if options.workers <= 1 {
                (start..stream.len())
                    .map(failing)
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .sum()
            } else {
                (start..stream.len())
                    .into_par_iter()
                    .map(failing)
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .sum()
            };
            Some(count)
        };
        Ok((first, violations))
    };

    let (first, violations) = if options.workers <= 1 {
        search()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(options.workers)
            .build()
            .map_err(|e| Error::Pool(e.to_string()))?
            .install(search)?
    };

    let substitutions_checked = match (&first, options.exhaustive) {
        (Some((i, ..)), false) => i + 1,
        _ => stream.len(),
    };
    let counterexample = first.map(|(_, vars, lhs, rhs)| Counterexample {
        substitution: names
            .iter()
            .zip(vars)
            .map(|(name, vector)| Assignment {
                name: name.clone(),
                vector,
            })
            .collect(),
        lhs,
        rhs,
    });
    Ok(CheckReport {
        identity,
        algebra: algebra.name().to_string(),
        holds: counterexample.is_none(),
        counterexample,
        substitutions_checked,
        violations,
    })
}

pub fn check_builtin(algebra: &Algebra, id: BuiltinIdentity) -> Result<CheckReport> {
    check_builtin_with(algebra, id, &CheckOptions::default())
}

pub fn check_builtin_with(
    algebra: &Algebra,
    id: BuiltinIdentity,
    options: &CheckOptions,
) -> Result<CheckReport> {
    let stream = substitution_stream(algebra.dim(), &id.multiplicities());
    let names: Vec<String> = id.variables().iter().map(|s| s.to_string()).collect();
    run_check(
        algebra,
        id.id().to_string(),
        &names,
        &stream,
        options,
        |vars| id.evaluate(algebra, vars),
    )
}

/// The six general-Lie-triple-system axioms, with the ternary bracket
/// derived from the binary one.
pub fn check_glts(algebra: &Algebra) -> Result<Vec<CheckReport>> {
    check_glts_with(algebra, &CheckOptions::default())
}

pub fn check_glts_with(algebra: &Algebra, options: &CheckOptions) -> Result<Vec<CheckReport>> {
    BuiltinIdentity::GLTS
        .iter()
        .map(|&id| check_builtin_with(algebra, id, options))
        .collect()
}

pub fn check_equivalence(algebra: &Algebra) -> Result<EquivalenceReport> {
    let maltsev = check_builtin(algebra, BuiltinIdentity::Maltsev)?;
    let sagle_yamaguti = check_builtin(algebra, BuiltinIdentity::SagleYamaguti)?;
    let agree = maltsev.holds == sagle_yamaguti.holds;
    Ok(EquivalenceReport {
        maltsev,
        sagle_yamaguti,
        agree,
    })
}
