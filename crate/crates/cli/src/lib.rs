//! Library half of the `pfs` command-line tool: argument definitions, input
//! parsing, output formatting and command dispatch. `main.rs` only wires
//! these to the process.
//!
//! Exit codes: 0 success, 2 parse or format error, 3 domain error, 4 kind
//! mismatch, 5 divisor containing zero.

use std::fmt;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pseudo_fuzzy::arith::{self, BinaryOpCode, CutTable, DEFAULT_LEVELS, DEFAULT_ORACLE_GRID};
use pseudo_fuzzy::membership::DEFAULT_EPS;
use pseudo_fuzzy::{Error, Kind, MembershipPair, PseudoTfn, Tolerance};

pub mod document;
pub mod format;

pub use document::{parse_curve, parse_ptfn, PtfnDocument};

/// Error carrying the process exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(Error),
}

impl CliError {
    pub fn parse(msg: impl Into<String>) -> Self {
        CliError::Parse(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(Error::KindMismatch { .. }) => 4,
            CliError::Domain(Error::DivisorStraddlesZero { .. }) => 5,
            CliError::Domain(_) => 3,
        }
    }

    fn context(self, what: &str) -> Self {
        match self {
            CliError::Parse(msg) => CliError::Parse(format!("{what}: {msg}")),
            other => other,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Parse(format!("write failed: {e}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => f.write_str(msg),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pfs",
    version,
    about = "Pseudo fuzzy sets and pseudo triangular fuzzy numbers"
)]
pub struct Cli {
    /// Absolute tolerance for classification and kind checks.
    #[arg(long, global = true, default_value_t = DEFAULT_EPS)]
    pub eps: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print `x,mu,lambda` for one point.
    Eval {
        /// JSON document path, or `-` for standard input.
        doc: String,
        #[arg(allow_negative_numbers = true)]
        x: f64,
    },
    /// Sample the number as an `x,mu,lambda` CSV curve.
    Curve(CurveArgs),
    /// Print the case (A, B or C) of a membership pair.
    Classify {
        #[arg(allow_negative_numbers = true)]
        mu: f64,
        #[arg(allow_negative_numbers = true)]
        lambda: f64,
    },
    /// Print `lo,hi` of an alpha-cut (`mu`) or beta-cut (`lambda`).
    Cut {
        doc: String,
        #[arg(allow_negative_numbers = true)]
        level: f64,
        #[arg(long, value_enum, default_value_t = Which::Mu)]
        which: Which,
    },
    /// Combine two numbers and print the result as an `alpha,lo,hi` table.
    Arith {
        #[arg(value_enum)]
        op: Op,
        left: String,
        right: String,
        #[arg(long, default_value_t = DEFAULT_LEVELS)]
        levels: usize,
        /// Compute the table by brute-force sup-min over sampled supports.
        #[arg(long)]
        oracle: bool,
        /// Samples per operand support for `--oracle`.
        #[arg(long, default_value_t = DEFAULT_ORACLE_GRID)]
        grid: usize,
    },
    /// Multiply a number by a crisp factor and print its `alpha,lo,hi` table.
    Scale {
        doc: String,
        #[arg(allow_negative_numbers = true)]
        factor: f64,
        #[arg(long, default_value_t = DEFAULT_LEVELS)]
        levels: usize,
    },
    /// Print the crisp point at level `r`, position `s` within the cut.
    Point {
        doc: String,
        #[arg(allow_negative_numbers = true)]
        r: f64,
        #[arg(allow_negative_numbers = true)]
        s: f64,
    },
    /// Check a number (or a CSV curve) against its kind identity.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    pub doc: String,
    /// Number of sample points, both ends included.
    #[arg(short = 'n', long = "points", default_value_t = 101)]
    pub points: usize,
    /// Defaults to one support width left of `a`.
    #[arg(long, allow_negative_numbers = true)]
    pub xmin: Option<f64>,
    /// Defaults to one support width right of `c`.
    #[arg(long, allow_negative_numbers = true)]
    pub xmax: Option<f64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// JSON document to sample; omit when using `--table`.
    #[arg(required_unless_present = "table", conflicts_with = "table")]
    pub doc: Option<String>,
    #[arg(long, default_value_t = 101)]
    pub grid: usize,
    /// Check an `x,mu,lambda` CSV instead of a document.
    #[arg(long, requires = "kind")]
    pub table: Option<String>,
    /// Kind rule to check the table against.
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Mu,
    Lambda,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl From<Op> for BinaryOpCode {
    fn from(op: Op) -> Self {
        match op {
            Op::Add => BinaryOpCode::Add,
            Op::Sub => BinaryOpCode::Sub,
            Op::Mul => BinaryOpCode::Mul,
            Op::Div => BinaryOpCode::Div,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Dependent,
    Independent,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Dependent => Kind::Dependent,
            KindArg::Independent => Kind::Independent,
        }
    }
}

fn finite_arg(what: &'static str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { what, value: v }.into())
    }
}

fn write_pair_row(out: &mut dyn Write, x: f64, pair: &MembershipPair) -> Result<(), CliError> {
    writeln!(out, "{}", format::row(&[x, pair.mu(), pair.lambda()]))?;
    Ok(())
}

fn write_table(out: &mut dyn Write, table: &CutTable) -> Result<(), CliError> {
    writeln!(out, "# kind={}", table.kind())?;
    writeln!(out, "alpha,lo,hi")?;
    for (alpha, cut) in table.rows() {
        writeln!(out, "{}", format::row(&[*alpha, cut.lo(), cut.hi()]))?;
    }
    Ok(())
}

fn load_pair(left: &str, right: &str) -> Result<(PseudoTfn, PseudoTfn), CliError> {
    if left == "-" && right == "-" {
        return Err(CliError::parse(
            "standard input can supply only one document",
        ));
    }
    Ok((document::load_ptfn(left)?, document::load_ptfn(right)?))
}

/// Runs one parsed command, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let tol = Tolerance::new(cli.eps)?;
    match &cli.command {
        Command::Eval { doc, x } => {
            let p = document::load_ptfn(doc)?;
            let x = finite_arg("x", *x)?;
            write_pair_row(out, x, &p.pair_at(x)?)?;
        }
        Command::Curve(args) => {
            let p = document::load_ptfn(&args.doc)?;
            let (lo, hi) = p.verification_window();
            let set = p.discretize(
                args.points,
                args.xmin.unwrap_or(lo),
                args.xmax.unwrap_or(hi),
            )?;
            writeln!(out, "x,mu,lambda")?;
            for e in &set {
                write_pair_row(out, e.x, &e.pair)?;
            }
        }
        Command::Classify { mu, lambda } => {
            let pair = MembershipPair::new(*mu, *lambda)?;
            writeln!(out, "{}", pair.classify(tol))?;
        }
        Command::Cut { doc, level, which } => {
            let p = document::load_ptfn(doc)?;
            let cut = match which {
                Which::Mu => p.alpha_cut(*level)?,
                Which::Lambda => p.beta_cut(*level)?,
            };
            writeln!(out, "{}", format::row(&[cut.lo(), cut.hi()]))?;
        }
        Command::Arith {
            op,
            left,
            right,
            levels,
            oracle,
            grid,
        } => {
            let (p, q) = load_pair(left, right)?;
            let table = if *oracle {
                arith::extension_oracle(&p, &q, (*op).into(), *grid, *levels)?
            } else {
                arith::binary_table(&p, &q, (*op).into(), *levels)?
            };
            write_table(out, &table)?;
        }
        Command::Scale {
            doc,
            factor,
            levels,
        } => {
            let p = document::load_ptfn(doc)?;
            let scaled = arith::scale(&p, *factor)?;
            write_table(out, &CutTable::of(&scaled, *levels)?)?;
        }
        Command::Point { doc, r, s } => {
            let p = document::load_ptfn(doc)?;
            writeln!(out, "{}", format::num(p.parametric_point(*r, *s)?))?;
        }
        Command::Verify(args) => {
            let violation = match (&args.doc, &args.table, args.kind) {
                (_, Some(table), Some(kind)) => {
                    let set = document::parse_curve(&document::read_input(table)?)
                        .map_err(|e| e.context(table))?;
                    Kind::from(kind).first_violation(&set, tol)
                }
                (Some(doc), _, _) => {
                    document::load_ptfn(doc)?.first_kind_violation(args.grid, tol)?
                }
                _ => {
                    return Err(CliError::parse(
                        "verify needs a document or --table with --kind",
                    ))
                }
            };
            match violation {
                None => writeln!(out, "ok")?,
                Some(x) => writeln!(out, "violation at x={}", format::num(x))?,
            }
        }
    }
    Ok(())
}
