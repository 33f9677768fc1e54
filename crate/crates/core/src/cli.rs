//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource
//! limit exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::lie::{build_cartan, dualize, kostant_partition, CartanDatum, Content};
use crate::localization::{localized_integral, sl2_quasimap_fixed_point, FixedPointDatum};
use crate::partition::{
    j_function, z_series_affine_toda, z_series_affine_whittaker, z_series_toda, z_series_whittaker_run,
    SeriesTable,
};
use crate::sl2::{check_commutators, closed_form_a, sl2_vars};
use crate::toda::{check_affine_toda, check_finite_toda, residual_report_json};
use crate::verma::{
    numeric_gram, rank, sample_points, LowestWeight, DEFAULT_AFFINE_CAP, DEFAULT_FINITE_CAP,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Largest cap accepted for rank-one finite types, whose weight spaces are one-dimensional.
pub const RANK_ONE_CAP: i64 = 40;

#[derive(Parser, Debug)]
#[command(name = "whittaker-z", version, about = "Exact partition-function tables and their cross-checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the Z table from Whittaker vectors.
    Z(TableArgs),
    /// Cross-check the Whittaker, Toda, closed-form and localization oracles.
    Verify(VerifyArgs),
    /// Emit the J-function table (finite types only).
    Jfun(TableArgs),
    /// Integrate 1 by localization over fixed points read from JSON.
    Localize(LocalizeArgs),
}

#[derive(Args, Debug)]
struct Common {
    /// Type name, e.g. A2, G2, A1~, dual(B3).
    #[arg(long = "type", value_name = "TYPE")]
    type_name: String,
    /// Height cap (total-content cap for affine types).
    #[arg(long)]
    cap: Option<i64>,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Verify this JSON table instead of only the freshly computed one.
    #[arg(long, value_name = "PATH")]
    table: Option<PathBuf>,
    /// Write the Toda residual report (JSON) here.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct LocalizeArgs {
    /// JSON file with one fixed point or an array of them.
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
}

/// A failed run: exit code and message.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Usage(_) | Error::Parse { .. } => EXIT_USAGE,
            Error::Resource(_) => EXIT_RESOURCE,
            _ => EXIT_MISMATCH,
        };
        Failure(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(EXIT_USAGE, format!("i/o error: {e}"))
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if code == EXIT_OK { stdout } else { stderr };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    let result = match cli.command {
        Command::Z(a) => cmd_table(&a, false, stdout),
        Command::Jfun(a) => cmd_table(&a, true, stdout),
        Command::Verify(a) => cmd_verify(&a, stdout),
        Command::Localize(a) => cmd_localize(&a, stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

fn resolve(common: &Common) -> Result<(CartanDatum, i64), Failure> {
    let c = build_cartan(&common.type_name)?;
    let limit = if c.is_affine() {
        DEFAULT_AFFINE_CAP
    } else if c.size() == 1 {
        RANK_ONE_CAP
    } else {
        DEFAULT_FINITE_CAP
    };
    let cap = common.cap.unwrap_or(if c.is_affine() { 5 } else { limit.min(DEFAULT_FINITE_CAP) });
    if cap < 0 {
        return Err(Failure(EXIT_USAGE, "cap must be non-negative".into()));
    }
    if cap > limit {
        return Err(Failure(
            EXIT_RESOURCE,
            format!("cap {cap} exceeds the limit {limit} for {}", c.label()),
        ));
    }
    Ok((c, cap))
}

fn whittaker_table(c: &CartanDatum, cap: i64) -> Result<SeriesTable, Failure> {
    Ok(if c.is_affine() {
        z_series_affine_whittaker(c, cap)?
    } else {
        z_series_whittaker_run(c, cap)?.table
    })
}

fn emit(text: &str, out: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_table(a: &TableArgs, jfun: bool, stdout: &mut dyn Write) -> Result<(), Failure> {
    let (c, cap) = resolve(&a.common)?;
    if jfun && c.is_affine() {
        return Err(Failure(
            EXIT_USAGE,
            "the J-function of an affine type is not available; use `z`".into(),
        ));
    }
    let mut table = whittaker_table(&c, cap)?;
    if jfun {
        table = j_function(&table)?;
    }
    let text = match a.format {
        Format::Json => table.to_json(),
        Format::Csv => table.to_csv(),
    };
    emit(&text, &a.out, stdout)
}

struct Report<'a> {
    out: &'a mut dyn Write,
    failure: Option<String>,
}

impl Report<'_> {
    fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) -> Result<(), Failure> {
        writeln!(self.out, "{} {name}", if ok { "ok  " } else { "FAIL" })?;
        if !ok && self.failure.is_none() {
            let d = detail();
            writeln!(self.out, "     first offending content: {d}")?;
            self.failure = Some(format!("{name}: {d}"));
        }
        Ok(())
    }
}

fn first_difference(x: &SeriesTable, y: &SeriesTable) -> Option<String> {
    for (theta, v) in x.entries() {
        match y.get(theta) {
            Some(w) if w == v => {}
            _ => return Some(format!("{theta:?}")),
        }
    }
    y.entries()
        .find(|(theta, _)| x.get(theta).is_none())
        .map(|(theta, _)| format!("{theta:?}"))
}

fn cmd_verify(a: &VerifyArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let (c, cap) = resolve(&a.common)?;
    let mut report = Report {
        out: stdout,
        failure: None,
    };
    let (whittaker, toda, residuals) = if c.is_affine() {
        let w = z_series_affine_whittaker(&c, cap)?;
        let t = z_series_affine_toda(&c, cap)?;
        let r = check_affine_toda(&w)?;
        (w, t, r)
    } else {
        let mut run = z_series_whittaker_run(&c, cap)?;
        let t = z_series_toda(&c, cap)?;
        let r = check_finite_toda(&run.table)?;
        let mut bad = None;
        for (theta, _) in run.table.entries() {
            if !run.solver.verify(theta, &run.components)? {
                bad = Some(format!("{theta:?}"));
                break;
            }
        }
        report.check("whittaker vector property f_i w = w / h", bad.is_none(), || {
            bad.clone().unwrap_or_default()
        })?;
        (run.table, t, r)
    };
    let diff = first_difference(&whittaker, &toda);
    report.check("whittaker table equals toda table", diff.is_none(), || {
        diff.clone().unwrap_or_default()
    })?;
    let bad = residuals.iter().find(|r| !r.is_zero()).map(|r| format!("{:?}", r.theta));
    report.check("toda residuals vanish", bad.is_none(), || bad.clone().unwrap_or_default())?;
    if let Some(p) = &a.out {
        std::fs::write(p, residual_report_json(&residuals))?;
    }

    // rank of the Gram matrix at a seeded point equals the Kostant count
    let working = dualize(&c);
    let lam = LowestWeight::standard(&working)?;
    let values = sample_points(lam.vars().len(), a.common.seed, 8)
        .iter()
        .find_map(|p| lam.evaluate_at(p).ok())
        .ok_or_else(|| Failure(EXIT_MISMATCH, "no pole-free sample point".into()))?;
    let mut bad_rank = None;
    for (theta, _) in whittaker.entries() {
        let dim = usize::try_from(&kostant_partition(&working, theta)?).unwrap_or(usize::MAX);
        if rank(&numeric_gram(&working, theta, &values)) != dim {
            bad_rank = Some(format!("{theta:?}"));
            break;
        }
    }
    report.check("gram rank equals Kostant partition count", bad_rank.is_none(), || {
        bad_rank.clone().unwrap_or_default()
    })?;

    if c.size() == 1 && !c.is_affine() {
        let d_bad = (0..=cap).find(|&d| {
            whittaker.get(&Content::new(vec![d])) != Some(&closed_form_a(d as u32))
        });
        report.check("sl2 closed form", d_bad.is_none(), || format!("{:?}", d_bad.map(|d| vec![d])))?;
        let l_bad = (1..=cap).find(|&d| {
            sl2_quasimap_fixed_point(d as u32)
                .and_then(|p| localized_integral(&[p]))
                .map_or(true, |v| Some(&v) != whittaker.get(&Content::new(vec![d])))
        });
        report.check("localization", l_bad.is_none(), || format!("{:?}", l_bad.map(|d| vec![d])))?;
        let lam = crate::arith::RationalFunction::parse("a1 / h", &sl2_vars())?;
        let comm = check_commutators(20, &lam)?;
        report.check("sl2 commutation relations", comm.is_empty(), || {
            format!("{:?}", comm.first())
        })?;
    }

    if let Some(path) = &a.table {
        let text = std::fs::read_to_string(path)?;
        let given = SeriesTable::from_json(&text)?;
        if given.algebra().matrix() != c.matrix() || given.algebra().kind() != c.kind() {
            return Err(Failure(
                EXIT_USAGE,
                format!("table is for {}, not {}", given.algebra().label(), c.label()),
            ));
        }
        let diff = first_difference(&given, &whittaker);
        report.check("input table equals computed table", diff.is_none(), || {
            diff.clone().unwrap_or_default()
        })?;
        let res = if c.is_affine() {
            check_affine_toda(&given)?
        } else {
            check_finite_toda(&given)?
        };
        let bad = res.iter().find(|r| !r.is_zero()).map(|r| format!("{:?}", r.theta));
        report.check("input table toda residuals vanish", bad.is_none(), || {
            bad.clone().unwrap_or_default()
        })?;
    }
    match report.failure {
        None => Ok(()),
        Some(msg) => Err(Failure(EXIT_MISMATCH, format!("mismatch in {msg}"))),
    }
}

fn cmd_localize(a: &LocalizeArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&a.input)?;
    let points = FixedPointDatum::from_json(&text)?;
    writeln!(stdout, "{}", localized_integral(&points)?)?;
    Ok(())
}
