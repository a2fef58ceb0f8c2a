//! Command-line front end: `list`, `check` and `table`.
//!
//! Exit codes: 0 when every selected identity holds, 1 when at least one is
//! violated, 2 on usage, I/O or parse errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use maltsev::catalog::{self, BUILTIN_NAMES};
use maltsev::checker::{check_builtin_with, BuiltinIdentity, CheckOptions, CheckReport, Value};
use maltsev::dsl::{check_identity_with, parse_identities, IdentityAst};
use maltsev::{Algebra, Error, Vector};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "maltsev",
    version,
    about = "Exact identity checks for Mal'tsev algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List builtin algebras and identities
    List {
        #[arg(long)]
        json: bool,
    },
    /// Check identities on an algebra
    Check {
        /// Builtin name (abelian(n), so3, sl2, m7, nc3) or a path ending in .alg.json
        algebra: String,
        /// Builtin identity id, or `all`; may be repeated
        #[arg(long = "identity", value_name = "ID", num_args = 1..)]
        identities: Vec<String>,
        /// File with one DSL identity per line
        #[arg(long, value_name = "FILE")]
        dsl: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Count every violation instead of stopping at the first
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 1, value_name = "N")]
        workers: usize,
    },
    /// Print the structure table
    Table {
        algebra: String,
        /// Print Yamaguti brackets [e_i, e_j, e_k] instead of binary brackets
        #[arg(long)]
        ternary: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSource {
    Builtin(String),
    File(PathBuf),
}

impl AlgebraSource {
    pub fn parse(arg: &str) -> Self {
        if arg.ends_with(".alg.json") {
            AlgebraSource::File(PathBuf::from(arg))
        } else {
            AlgebraSource::Builtin(arg.to_string())
        }
    }

    pub fn load(&self) -> Result<Algebra, Error> {
        match self {
            AlgebraSource::Builtin(name) => catalog::builtin(name),
            AlgebraSource::File(path) => catalog::load(path),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Everything `check` needs, after argument parsing.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub algebra: AlgebraSource,
    pub builtins: Vec<BuiltinIdentity>,
    pub dsl: Option<PathBuf>,
    pub format: OutputFormat,
    pub exhaustive: bool,
    pub workers: usize,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

/// Resolves `--identity` values. No selection at all means `all`, which is
/// every identity that holds in Mal'tsev algebras (everything but `jacobi`).
fn select_builtins(ids: &[String], have_dsl: bool) -> Result<Vec<BuiltinIdentity>, CliError> {
    let mut out: Vec<BuiltinIdentity> = Vec::new();
    if ids.is_empty() && !have_dsl {
        out.extend(BuiltinIdentity::maltsev_theory());
    }
    for id in ids {
        if id == "all" {
            out.extend(BuiltinIdentity::maltsev_theory());
        } else {
            out.push(
                id.parse()
                    .map_err(|_| CliError::Usage(format!("unknown identity `{id}`")))?,
            );
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command.unwrap_or(Command::List { json: false }) {
        Command::List { json } => cmd_list(json, out).map(|_| EXIT_OK),
        Command::Check {
            algebra,
            identities,
            dsl,
            json,
            exhaustive,
            workers,
        } => select_builtins(&identities, dsl.is_some()).and_then(|builtins| {
            if workers == 0 {
                return Err(CliError::Usage("--workers must be at least 1".into()));
            }
            let config = RunConfig {
                algebra: AlgebraSource::parse(&algebra),
                builtins,
                dsl,
                format: if json {
                    OutputFormat::Json
                } else {
                    OutputFormat::Text
                },
                exhaustive,
                workers,
            };
            cmd_check(&config, out)
        }),
        Command::Table {
            algebra,
            ternary,
            json,
        } => cmd_table(&AlgebraSource::parse(&algebra), ternary, json, out).map(|_| EXIT_OK),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

#[derive(Serialize)]
struct IdentityListing {
    id: &'static str,
    arity: usize,
    formula: &'static str,
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Core(Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    })
}

fn cmd_list(json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    if json {
        let listing: Vec<IdentityListing> = BuiltinIdentity::ALL
            .iter()
            .map(|id| IdentityListing {
                id: id.id(),
                arity: id.arity(),
                formula: id.formula(),
            })
            .collect();
        let text = serde_json::to_string_pretty(&listing).expect("listing serializes");
        writeln!(out, "{text}").map_err(io_err)?;
        return Ok(());
    }
    let mut text = String::from("Algebras:\n");
    for name in BUILTIN_NAMES {
        text.push_str(&format!("  {name}\n"));
    }
    text.push_str("\nIdentities (Y = Yamagutian, l = left translation):\n");
    for id in BuiltinIdentity::ALL {
        text.push_str(&format!(
            "  {:<24} arity {}  {}\n",
            id.id(),
            id.arity(),
            id.formula()
        ));
    }
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn load_dsl(path: &Path) -> Result<Vec<IdentityAst>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_identities(&text).map_err(|e| {
        CliError::Usage(format!(
            "{}:{}:{}: {}",
            path.display(),
            e.line,
            e.column,
            e.detail()
        ))
    })
}

/// Runs the builtins first, then the DSL identities, each in the given order.
pub fn run_checks(
    algebra: &Algebra,
    builtins: &[BuiltinIdentity],
    dsl: &[IdentityAst],
    options: &CheckOptions,
) -> Result<Vec<CheckReport>, Error> {
    let mut reports = Vec::with_capacity(builtins.len() + dsl.len());
    for &id in builtins {
        reports.push(check_builtin_with(algebra, id, options)?);
    }
    for ast in dsl {
        reports.push(check_identity_with(algebra, ast, options)?);
    }
    Ok(reports)
}

fn cmd_check(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let algebra = config.algebra.load()?;
    let dsl = match &config.dsl {
        Some(path) => load_dsl(path)?,
        None => Vec::new(),
    };
    let options = CheckOptions {
        exhaustive: config.exhaustive,
        workers: config.workers,
    };
    let reports = run_checks(&algebra, &config.builtins, &dsl, &options)?;
    let all_hold = reports.iter().all(|r| r.holds);
    let text = match config.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&reports).expect("reports serialize");
            s.push('\n');
            s
        }
        OutputFormat::Text => render_reports(&algebra, &reports),
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(if all_hold { EXIT_OK } else { EXIT_VIOLATION })
}

fn render_value(labels: &[String], value: &Value) -> String {
    match value {
        Value::Vector(v) => v.display_with(labels).to_string(),
        Value::Operator(m) => {
            let rows: Vec<String> = m
                .rows()
                .map(|r| {
                    let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                    format!("[{}]", cells.join(", "))
                })
                .collect();
            format!("[{}]", rows.join(", "))
        }
    }
}

pub fn render_reports(algebra: &Algebra, reports: &[CheckReport]) -> String {
    let labels = algebra.basis_labels();
    let mut s = String::new();
    for r in reports {
        match &r.counterexample {
            None => {
                s.push_str(&format!(
                    "PASS  {} on {} ({} substitutions",
                    r.identity, r.algebra, r.substitutions_checked
                ));
                if let Some(v) = r.violations {
                    s.push_str(&format!(", {v} violations"));
                }
                s.push_str(")\n");
            }
            Some(c) => {
                s.push_str(&format!(
                    "FAIL  {} on {} (counterexample at substitution {}",
                    r.identity, r.algebra, r.substitutions_checked
                ));
                if let Some(v) = r.violations {
                    s.push_str(&format!(", {v} violations"));
                }
                s.push_str(")\n");
                let subst: Vec<String> = c
                    .substitution
                    .iter()
                    .map(|a| format!("{} = {}", a.name, a.vector.display_with(labels)))
                    .collect();
                s.push_str(&format!("      {}\n", subst.join(", ")));
                s.push_str(&format!("      lhs = {}\n", render_value(labels, &c.lhs)));
                s.push_str(&format!("      rhs = {}\n", render_value(labels, &c.rhs)));
            }
        }
    }
    let holding = reports.iter().filter(|r| r.holds).count();
    s.push_str(&format!(
        "{holding} of {} identities hold on {}\n",
        reports.len(),
        algebra.name()
    ));
    s
}

#[derive(Serialize, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub indices: Vec<usize>,
    pub args: Vec<String>,
    pub result: Vector,
}

/// Binary brackets for `i < j`, or Yamaguti brackets for every triple, in
/// lexicographic index order.
pub fn table_entries(algebra: &Algebra, ternary: bool) -> Result<Vec<TableEntry>, Error> {
    let n = algebra.dim();
    let labels = algebra.basis_labels();
    let e = |k| algebra.basis_vector(k);
    let mut entries = Vec::new();
    if ternary {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    entries.push(TableEntry {
                        indices: vec![i, j, k],
                        args: vec![labels[i].clone(), labels[j].clone(), labels[k].clone()],
                        result: algebra.yamaguti(&e(i), &e(j), &e(k))?,
                    });
                }
            }
        }
    } else {
        for i in 0..n {
            for j in i + 1..n {
                entries.push(TableEntry {
                    indices: vec![i, j],
                    args: vec![labels[i].clone(), labels[j].clone()],
                    result: algebra.bracket(&e(i), &e(j))?,
                });
            }
        }
    }
    Ok(entries)
}

fn cmd_table(
    source: &AlgebraSource,
    ternary: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let algebra = source.load()?;
    let entries = table_entries(&algebra, ternary)?;
    let text = if json {
        let mut s = serde_json::to_string_pretty(&entries).expect("table serializes");
        s.push('\n');
        s
    } else {
        let labels = algebra.basis_labels();
        entries
            .iter()
            .map(|t| {
                format!(
                    "[{}] = {}\n",
                    t.args.join(", "),
                    t.result.display_with(labels)
                )
            })
            .collect()
    };
    out.write_all(text.as_bytes()).map_err(io_err)
}
