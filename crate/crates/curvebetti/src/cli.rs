//! Command-line surface: `betti`, `verify`, `bounds`, `bresinsky`.
//!
//! Exit codes: 0 success/pass, 1 check failed, 2 invalid input,
//! 3 truncated scan or window breach, 4 inconclusive check. Errors are
//! reported as one JSON object on stderr.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::betti::{betti_affine, betti_j, betti_projective, ProjectiveMode};
use crate::semigroup::periodicity_threshold;
use crate::simplicial::FieldSpec;
use crate::verify::{self, Status, VerificationReport};
use crate::{CurveSequence, Error, Result};

#[derive(Parser)]
#[command(
    name = "curvebetti",
    version,
    about = "Graded Betti tables of shifted monomial curve ideals, with structural checks"
)]
pub struct Cli {
    /// Worker threads (falls back to CURVEBETTI_THREADS, then all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute the Betti table of the (homogenized) shifted curve ideal
    Betti(BettiArgs),
    /// Run one structural check and print its JSON report
    Verify(VerifyArgs),
    /// Print the derived constants and shift thresholds of a sequence
    Bounds(BoundsArgs),
    /// Sharpness-family diagnostics for four-term sequences
    Bresinsky(BresinskyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Args)]
pub struct BettiArgs {
    /// Strictly increasing exponent sequence, e.g. 1,2,3,7,10
    #[arg(long, value_delimiter = ',', required = true)]
    pub seq: Vec<u64>,
    #[arg(long)]
    pub shift: u64,
    /// Print the affine (semigroup-graded) table instead
    #[arg(long)]
    pub affine: bool,
    /// Coefficient field: q or p:<prime>
    #[arg(long, default_value = "q")]
    pub field: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Degree cap for scan mode
    #[arg(long)]
    pub lmax: Option<u32>,
    /// Widening of the high-block window in rigorous mode
    #[arg(long)]
    pub buffer: Option<u64>,
    /// Force full enumeration
    #[arg(long, conflicts_with = "rigorous")]
    pub scan: bool,
    /// Force windowed enumeration (needs a shift above the threshold)
    #[arg(long)]
    pub rigorous: bool,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CheckKind {
    Shift,
    Affine,
    Period,
    DoubleCone,
    Deletion,
    Inhomog,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub which: CheckKind,
    #[arg(long, value_delimiter = ',', required = true)]
    pub seq: Vec<u64>,
    #[arg(long)]
    pub shift: u64,
    /// Number of periods compared by the period check
    #[arg(long, default_value_t = 1)]
    pub periods: u32,
    /// Widening of the high-block window in rigorous mode
    #[arg(long)]
    pub buffer: Option<u64>,
    #[arg(long, default_value = "q")]
    pub field: String,
}

#[derive(Args)]
pub struct BoundsArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub seq: Vec<u64>,
    /// Also report the row shift for this shift value
    #[arg(long)]
    pub shift: Option<u64>,
    #[arg(long, default_value = "q")]
    pub field: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Args)]
pub struct BresinskyArgs {
    /// Family parameter (at least 2)
    #[arg(long = "h")]
    pub h: u64,
    #[arg(long)]
    pub shift: u64,
    /// Include the candidate generator families in the report
    #[arg(long)]
    pub families: bool,
    #[arg(long, default_value = "q")]
    pub field: String,
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| std::env::var("CURVEBETTI_THREADS").ok()?.parse().ok());
    if let Some(t) = threads {
        // ignore the error if a global pool was already installed
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!(
                "{}",
                json!({"error": error_kind(&e), "message": e.to_string()})
            );
            error_exit_code(&e)
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Betti(args) => cmd_betti(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Bresinsky(args) => cmd_bresinsky(args),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidSequence(_) => "invalid-sequence",
        Error::InvalidInput(_) => "invalid-input",
        Error::NotCoprime { .. } => "not-coprime",
        Error::NotRepresentable { .. } => "not-representable",
        Error::InvalidVertex(_) => "invalid-vertex",
        Error::EmptyTable => "empty-table",
        Error::ScanTruncated { .. } => "scan-truncated",
        Error::WindowBreach { .. } => "window-breach",
        Error::WeightMismatch { .. } => "weight-mismatch",
    }
}

fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::ScanTruncated { .. } | Error::WindowBreach { .. } => 3,
        _ => 2,
    }
}

fn status_exit_code(status: Status) -> i32 {
    match status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Inconclusive => 4,
    }
}

fn cmd_betti(args: BettiArgs) -> Result<i32> {
    let curve = CurveSequence::new(&args.seq)?;
    let field: FieldSpec = args.field.parse()?;
    let sc = curve.shift(args.shift)?;
    let mode = if args.scan {
        ProjectiveMode::Scan { l_max: args.lmax }
    } else {
        let (_, reg_j) = betti_j(&curve, field, None)?;
        let windowed = sc.weight() > periodicity_threshold(&curve, reg_j);
        if args.rigorous || windowed {
            ProjectiveMode::Rigorous {
                reg_j,
                buffer: args.buffer,
            }
        } else {
            ProjectiveMode::Scan { l_max: args.lmax }
        }
    };
    let (table, ledger) = betti_projective(&sc, field, mode)?;
    let table = if args.affine {
        betti_affine(&sc, field, &ledger)?
    } else {
        table
    };
    match args.format {
        Format::Table => print!("{}", table.render_text()),
        Format::Json => println!("{}", table.to_json()),
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32> {
    let curve = CurveSequence::new(&args.seq)?;
    let field: FieldSpec = args.field.parse()?;
    let (_, reg_j) = betti_j(&curve, field, None)?;
    let j = args.shift;
    let buf = args.buffer;
    let report: VerificationReport = match args.which {
        CheckKind::Shift => verify::check_shift(&curve, j, field, reg_j, buf)?,
        CheckKind::Affine => verify::check_affine_equality(&curve, j, field, reg_j, buf)?,
        CheckKind::Period => {
            verify::check_main_periodicity(&curve, j, args.periods, field, reg_j, buf)?
        }
        CheckKind::DoubleCone => verify::check_double_cone(&curve, j, field, reg_j, buf)?,
        CheckKind::Deletion => verify::check_deletion(&curve, j, field, reg_j, buf)?,
        CheckKind::Inhomog => verify::check_inhomogeneous_shape(&curve, j, field, reg_j, buf)?,
    };
    println!("{}", report.to_json());
    Ok(status_exit_code(report.status))
}

fn cmd_bounds(args: BoundsArgs) -> Result<i32> {
    let curve = CurveSequence::new(&args.seq)?;
    let field: FieldSpec = args.field.parse()?;
    let (_, reg_j) = betti_j(&curve, field, None)?;
    let threshold = periodicity_threshold(&curve, reg_j);
    let offsets = curve.offsets();
    let envelope = 4 * offsets[0] * offsets[1] * (offsets[1] + 1);
    let mut out = json!({
        "seq": curve.exponents(),
        "b": offsets,
        "d": curve.offset_gcd(),
        "c": curve.conductor(),
        "B": curve.margin(),
        "regJ": reg_j,
        "N": threshold,
        "envelope": envelope,
        "degenerate": curve.is_degenerate(),
    });
    if let Some(j) = args.shift {
        let sc = curve.shift(j)?;
        let obj = out.as_object_mut().unwrap();
        obj.insert("e".into(), json!(sc.row_shift()));
        obj.insert("shift".into(), json!(j));
    }
    match args.format {
        Format::Json => println!("{out}"),
        Format::Table => {
            for (k, v) in out.as_object().unwrap() {
                println!("{k:>10}: {v}");
            }
        }
    }
    Ok(0)
}

fn cmd_bresinsky(args: BresinskyArgs) -> Result<i32> {
    let field: FieldSpec = args.field.parse()?;
    let report = verify::bresinsky_mu_check(args.h, args.shift, field)?;
    let mut out = report.to_json();
    if args.families {
        let ctx = verify::bresinsky_context(args.h, args.shift)?;
        let families: Vec<serde_json::Value> = verify::bresinsky_family(&ctx)?
            .iter()
            .map(|p| p.to_json())
            .collect();
        out.as_object_mut()
            .unwrap()
            .insert("families".into(), json!(families));
    }
    println!("{out}");
    Ok(status_exit_code(report.status))
}
