//! Command-line interface.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spst_core::characters::{decompose, kronecker_finite, schur_module_character, MAX_T};
use spst_core::kronecker::stable_kronecker;
use spst_core::symfunc::render_terms;
use spst_core::transitions::{schur_to_stable_specht, MatrixKind};
use spst_core::{Basis, Error as CoreError, Partition};

use crate::expr::{self, OutputBasis, Value};
use crate::session::Session;
use crate::store::{self, Store};
use crate::tables::{self, Direction, Format};
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "spst", version, about = "Schur and stable Specht basis transitions")]
pub struct Cli {
    /// Neither read nor write the table cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the expansion tables between s and s-dagger.
    Tables(TablesArgs),
    /// Print a single coefficient of a transition matrix.
    Coef {
        #[arg(value_enum)]
        kind: CoefKind,
        #[arg(value_parser = parse_partition)]
        row: Partition,
        #[arg(value_parser = parse_partition)]
        col: Partition,
    },
    /// Decompose the restriction of S_lambda(C^t) into Specht modules.
    Restrict {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        t: usize,
    },
    /// Stable or finite Kronecker coefficient.
    Kron(KronArgs),
    /// Evaluate a symmetric-function expression.
    Eval {
        expr: String,
        #[arg(long, default_value_t = 8)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = EvalBasis::Schur)]
        basis: EvalBasis,
    },
    /// Run invariant suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(long, default_value_t = 5)]
    pub max_degree: usize,
    /// Both directions when omitted.
    #[arg(long, value_enum)]
    pub direction: Option<Direction>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct KronArgs {
    #[arg(value_parser = parse_partition)]
    pub alpha: Partition,
    #[arg(value_parser = parse_partition)]
    pub beta: Partition,
    #[arg(value_parser = parse_partition)]
    pub gamma: Partition,
    /// Stable coefficient (the default).
    #[arg(long, conflicts_with = "t")]
    pub stable: bool,
    /// Finite coefficient for the padded partitions of t.
    #[arg(long)]
    pub t: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoefKind {
    A,
    B,
    S2m,
    M2s,
    M2sp,
    Sp2m,
}

impl CoefKind {
    fn matrix_kind(self) -> MatrixKind {
        match self {
            CoefKind::A => MatrixKind::A,
            CoefKind::B => MatrixKind::B,
            CoefKind::S2m => MatrixKind::SToM,
            CoefKind::M2s => MatrixKind::MToS,
            CoefKind::M2sp => MatrixKind::MToSp,
            CoefKind::Sp2m => MatrixKind::SpToM,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalBasis {
    Schur,
    P,
    Sdag,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.trim().parse::<Partition>().map_err(|e| e.to_string())
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::PadTooSmall { .. }
            | CoreError::DegreeTooLarge { .. }
            | CoreError::InvalidArgument(_)
            | CoreError::OracleBudgetExceeded { .. } => EXIT_USAGE,
            CoreError::NonIntegralResult(_) | CoreError::NotACharacter { .. } => EXIT_INTERNAL,
        };
        Failure { code, message: e.to_string() }
    }
}

fn session(no_cache: bool) -> Session {
    if no_cache {
        Session::uncached()
    } else {
        Session::cached(Store::new(store::default_dir()), |m| eprintln!("warning: {}", m))
    }
}

/// Runs a parsed command; returns the text for stdout and the exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32), Failure> {
    let session = session(cli.no_cache);
    let out = match &cli.command {
        Command::Tables(args) => {
            let directions = match args.direction {
                Some(d) => vec![d],
                None => vec![Direction::SchurToDagger, Direction::DaggerToSchur],
            };
            let parts: Vec<String> = directions
                .into_iter()
                .map(|d| tables::render(&session, d, args.max_degree, args.format))
                .collect::<Result<_, _>>()?;
            let separator = if args.format == Format::Json { "" } else { "\n" };
            parts.join(separator)
        }
        Command::Coef { kind, row, col } => {
            let m = session.matrix(kind.matrix_kind(), row.size().max(col.size()))?;
            format!("{}\n", m.get(row, col))
        }
        Command::Restrict { lambda, t } => {
            check_t(*t)?;
            session.character_tables_up_to(*t);
            session.character_table(lambda.size());
            let mult = decompose(&schur_module_character(lambda, *t)?)?;
            format!("{}\n", render_terms(mult.iter(), "Sp"))
        }
        Command::Kron(args) => {
            let v = match args.t {
                Some(t) => {
                    check_t(t)?;
                    session.character_table(t);
                    kronecker_finite(&args.alpha, &args.beta, &args.gamma, t)?
                }
                None => {
                    let cap = args.alpha.size() + args.beta.size();
                    session.matrix(MatrixKind::A, cap)?;
                    session.matrix(MatrixKind::B, cap)?;
                    stable_kronecker(&args.alpha, &args.beta, &args.gamma)?
                }
            };
            format!("{}\n", v)
        }
        Command::Eval { expr, cap, basis } => {
            if *cap > MAX_T {
                return Err(Failure::usage(format!("--cap {} exceeds the maximum {}", cap, MAX_T)));
            }
            let parsed = expr::parse(expr).map_err(|e| Failure::usage(format!("{}\n  {}\n  {}^", e, expr, " ".repeat(e.offset))))?;
            if let Some(d) = max_sdag_degree(&parsed) {
                session.matrix(MatrixKind::B, d.min(*cap))?;
            }
            let schur = match expr::eval(&parsed, *cap, OutputBasis::Schur) {
                Ok(Value::Sym(f)) => f,
                Ok(Value::StableSpecht(_)) => unreachable!("schur output requested"),
                Err(e) => return Err(Failure { message: e.to_string(), ..Failure::from(e.source) }),
            };
            let value = match basis {
                EvalBasis::Schur => schur.to_string(),
                EvalBasis::P => schur.to_basis(Basis::Power).to_string(),
                EvalBasis::Sdag => {
                    session.matrix(MatrixKind::A, schur.degree().unwrap_or(0))?;
                    schur_to_stable_specht(&schur)?.to_string()
                }
            };
            format!("{}\n", value)
        }
        Command::Verify { suite, max_degree } => {
            let mut reports = Vec::new();
            for s in suite.expand() {
                eprintln!("running {} up to degree {}", s.name(), max_degree);
                reports.push(verify::run(&session, s, *max_degree)?);
            }
            let code = if reports.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_VERIFY_FAILED };
            return Ok((verify::summary(&reports), code));
        }
    };
    Ok((out, EXIT_OK))
}

fn check_t(t: usize) -> Result<(), Failure> {
    if t == 0 || t > MAX_T {
        return Err(Failure::usage(format!("--t must be between 1 and {}", MAX_T)));
    }
    Ok(())
}

fn max_sdag_degree(e: &expr::Expr) -> Option<usize> {
    use expr::ExprKind::*;
    match &e.kind {
        Int(_) => None,
        Atom { kind, index } => (*kind == expr::AtomKind::StableSpecht).then(|| index.size()),
        Neg(a) => max_sdag_degree(a),
        Add(a, b) | Sub(a, b) | Mul(a, b) | Plethysm(a, b) => max_sdag_degree(a).max(max_sdag_degree(b)),
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = std::panic::catch_unwind(|| execute(&cli));
    match result {
        Ok(Ok((out, code))) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return EXIT_INTERNAL;
            }
            code
        }
        Ok(Err(f)) => {
            eprintln!("error: {}", f.message);
            f.code
        }
        Err(_) => EXIT_INTERNAL,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<(String, i32), Failure> {
        let mut full = vec!["spst", "--no-cache"];
        full.extend_from_slice(args);
        execute(&Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn coefficient_queries() {
        assert_eq!(run(&["coef", "b", "[1]", "[2,1]"]).unwrap().0, "3\n");
        assert_eq!(run(&["coef", "a", "[3,1]", "[]"]).unwrap().0, "2\n");
        assert_eq!(run(&["coef", "m2s", "[2]", "[1]"]).unwrap().0, "-1\n");
        assert_eq!(run(&["coef", "sp2m", "[2]", "[1]"]).unwrap().0, "-1\n");
    }

    #[test]
    fn kronecker_queries() {
        assert_eq!(run(&["kron", "[1]", "[1]", "[1,1]", "--stable"]).unwrap().0, "1\n");
        assert_eq!(run(&["kron", "[1]", "[1]", "[1,1]"]).unwrap().0, "1\n");
        assert_eq!(run(&["kron", "[1]", "[1]", "[3]", "--t", "6"]).unwrap().0, "0\n");
        assert_eq!(run(&["kron", "[3]", "[]", "[]", "--t", "4"]).unwrap_err().code, EXIT_USAGE);
    }

    #[test]
    fn restriction() {
        assert_eq!(run(&["restrict", "[1]", "--t", "3"]).unwrap().0, "Sp[3] + Sp[2,1]\n");
        assert_eq!(run(&["restrict", "[1,1]", "--t", "1"]).unwrap().0, "0\n");
        assert_eq!(run(&["restrict", "[1]", "--t", "13"]).unwrap_err().code, EXIT_USAGE);
    }

    #[test]
    fn evaluation() {
        assert_eq!(run(&["eval", "sdag[2]"]).unwrap().0, "-2*s[1] + s[2]\n");
        assert_eq!(run(&["eval", "s[1,1,1]", "--basis", "sdag"]).unwrap().0, "sdag[1,1] + sdag[1,1,1]\n");
        assert_eq!(run(&["eval", "s[2]", "--basis", "p", "--cap", "2"]).unwrap().0, "1/2*p[2] + 1/2*p[1,1]\n");
        let err = run(&["eval", "s[2,"]).unwrap_err();
        assert_eq!(err.code, EXIT_USAGE);
        assert!(err.message.contains("offset 4"));
        assert_eq!(run(&["eval", "s[1]", "--cap", "13"]).unwrap_err().code, EXIT_USAGE);
    }

    #[test]
    fn tables_default_to_both_directions() {
        let (out, code) = run(&["tables", "--max-degree", "1"]).unwrap();
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "s[1] = 1 + sdag[1]\n\nsdag[1] = -1 + s[1]\n");
    }

    #[test]
    fn verify_reports() {
        let (out, code) = run(&["verify", "--suite", "signs", "--max-degree", "3"]).unwrap();
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("suite"));
        assert!(out.contains("signs"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(main_with_args(["spst", "coef", "q", "[1]", "[1]"]), EXIT_USAGE);
        assert_eq!(main_with_args(["spst", "coef", "a", "[1,2]", "[1]"]), EXIT_USAGE);
        assert_eq!(main_with_args(["spst", "kron", "[1]", "[1]", "[1]", "--stable", "--t", "3"]), EXIT_USAGE);
    }
}
