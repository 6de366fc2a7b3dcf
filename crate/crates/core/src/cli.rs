//! Command-line front end.
//!
//! Every subcommand writes its data (CSV or pretty JSON) to `--out`, or to
//! stdout when `--out` is absent, and prints a one-line verdict to stderr.
//! Exit status: 0 pass, 1 fail (including refused constructions and failed
//! audits), 2 configuration, parse or tolerance errors. Output depends only
//! on the arguments: random probe points come from the seeded generator in
//! [`crate::rng`] and parallel work is aggregated in index order.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::additive::{
    construct_spectrum, finite_local_complexity_audit, lemma_4_1_scan, parity_audit, plus_space_report,
};
use crate::error::{Error, Result};
use crate::frames::{bessel_count_check, jp_verify_additive, jp_verify_with_rows, probe_frame_bounds};
use crate::measures::Measure;
use crate::pointsets::{gap_stats, parse_f64, PointSet1D, PointSet2D};
use crate::rng::{closed_grid, half_open_grid, uniform_pairs, uniform_points};
use crate::specfun::{big_f, hurwitz_zeta2, EvalPolicy};
use crate::theorems::{
    check_rmk_1_2, check_thm_1_1, check_thm_1_5, cor_1_4_sharpness, gap_upper_bound_sharp, prop_2_1_scan,
};

/// Equispaced probe grid `start:stop:count`, both endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl std::str::FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Parse { field: "grid".into(), message: format!("`{s}` is not start:stop:count") });
        }
        let start = parse_f64("grid", parts[0])?;
        let stop = parse_f64("grid", parts[1])?;
        let count: usize = parts[2].trim().parse().map_err(|_| Error::Parse {
            field: "grid".into(),
            message: format!("count `{}` is not a non-negative integer", parts[2]),
        })?;
        if count < 1 {
            return Err(Error::Parse { field: "grid".into(), message: "count must be at least 1".into() });
        }
        Ok(GridSpec { start, stop, count })
    }
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        closed_grid(self.start, self.stop, self.count)
    }
}

fn arg<T: std::str::FromStr<Err = Error>>(s: &str) -> std::result::Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn real(s: &str) -> std::result::Result<f64, String> {
    parse_f64("value", s).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "framegap", version, about = "Frame bounds, spectral gaps and spectra of additive measures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate ζ(2, x) and x·ζ(2, x).
    Zeta {
        #[arg(long, value_parser = real, allow_negative_numbers = true)]
        x: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Frame functional and probe frame bounds on a grid (CSV).
    FrameFunctional {
        #[arg(long, value_parser = arg::<Measure>, default_value = "lebesgue:0")]
        measure: Measure,
        #[arg(long, value_parser = arg::<PointSet1D>)]
        set: PointSet1D,
        #[arg(long, value_parser = arg::<GridSpec>, default_value = "0:1:101")]
        grid: GridSpec,
        #[arg(long, value_parser = real, default_value = "10000")]
        radius: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Spectrum test Σ|μ̂(ξ+λ)|² ≡ 1 on probes (CSV).
    JpVerify {
        #[arg(long, value_parser = arg::<Measure>, default_value = "lebesgue:0")]
        measure: Measure,
        #[arg(long, value_parser = arg::<PointSet1D>)]
        set: PointSet1D,
        /// Probe grid; default 257 points on [0, 1).
        #[arg(long, value_parser = arg::<GridSpec>)]
        grid: Option<GridSpec>,
        /// Number of extra seeded random probes in [0, 1).
        #[arg(long, default_value_t = 64)]
        random: usize,
        #[arg(long, value_parser = real, default_value = "10000")]
        radius: f64,
        #[arg(long, value_parser = real, default_value = "1e-6")]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Spectrum test for an additive measure (JSON).
    JpAdditive {
        #[arg(long, value_parser = real, allow_negative_numbers = true)]
        t1: f64,
        #[arg(long, value_parser = real, allow_negative_numbers = true)]
        t2: f64,
        /// Candidate spectrum; defaults to the constructed one.
        #[arg(long, value_parser = arg::<PointSet2D>)]
        set: Option<PointSet2D>,
        /// Number of seeded random probes in [0, 1)².
        #[arg(long, default_value_t = 64)]
        count: usize,
        #[arg(long, default_value_t = 200)]
        n_terms: i64,
        #[arg(long, value_parser = real, default_value = "1e-6")]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Gap statistics of a set over a window (JSON).
    Gaps {
        #[arg(long, value_parser = arg::<PointSet1D>)]
        set: PointSet1D,
        #[arg(long, value_parser = real, allow_negative_numbers = true, default_value = "0")]
        lo: f64,
        #[arg(long, value_parser = real, allow_negative_numbers = true, default_value = "10")]
        hi: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Sharp tight-frame family (1/n)Z with n = ⌊A⌋ + 1 (CSV).
    Prop21 {
        /// Comma-separated values of A.
        #[arg(long = "a", value_parser = real, value_delimiter = ',', default_value = "1,2.5,10,99.5,999.5")]
        a_values: Vec<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Build the explicit spectrum of an additive measure (JSON).
    ConstructSpectrum {
        #[arg(long, value_parser = real, allow_negative_numbers = true)]
        t1: f64,
        #[arg(long, value_parser = real, allow_negative_numbers = true)]
        t2: f64,
        #[arg(long, default_value_t = 100)]
        n_range: i64,
        #[command(flatten)]
        output: Output,
    },
    /// Small-frequency zero-set scan (JSON).
    Lemma41 {
        #[arg(long, value_parser = real, allow_negative_numbers = true)]
        t1: f64,
        #[arg(long, value_parser = real, allow_negative_numbers = true)]
        t2: f64,
        /// λ1 grid step over (0, 0.8].
        #[arg(long, value_parser = real, default_value = "1e-3")]
        step: f64,
        #[arg(long, value_parser = real, default_value = "1e-9")]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Numeric non-spectrality report for the Plus space (JSON).
    PlusSpace {
        #[command(flatten)]
        output: Output,
    },
    /// Inequality checkers.
    Theorem {
        #[command(subcommand)]
        which: TheoremCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum TheoremCommand {
    /// g_min·g_max ≤ C²π²/A.
    #[command(name = "thm1-1")]
    Thm11 {
        #[arg(long, value_parser = real)]
        g_min: f64,
        #[arg(long, value_parser = real)]
        g_max: f64,
        #[arg(long, value_parser = real, default_value_t = std::f64::consts::FRAC_1_PI)]
        c: f64,
        #[arg(long = "a", value_parser = real)]
        a: f64,
        #[command(flatten)]
        output: Output,
    },
    /// g_min² ≤ C²π²/(3(A−1)).
    #[command(name = "rmk1-2")]
    Rmk12 {
        #[arg(long, value_parser = real)]
        g_min: f64,
        #[arg(long, value_parser = real, default_value_t = std::f64::consts::FRAC_1_PI)]
        c: f64,
        #[arg(long = "a", value_parser = real)]
        a: f64,
        #[command(flatten)]
        output: Output,
    },
    /// 4/(π²B) ≤ g_max ≤ sup gap ≤ π²B/A + 2.
    #[command(name = "thm1-5")]
    Thm15 {
        #[arg(long, value_parser = real)]
        g_max: f64,
        #[arg(long, value_parser = real)]
        sup_gap: f64,
        #[arg(long = "a", value_parser = real)]
        a: f64,
        #[arg(long = "b", value_parser = real)]
        b: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Sharp and relaxed upper bounds on any gap.
    #[command(name = "gap-bound")]
    GapBound {
        #[arg(long = "a", value_parser = real)]
        a: f64,
        #[arg(long = "b", value_parser = real)]
        b: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Unit-window counts against ⌊π²B/4⌋.
    #[command(name = "lemma3-1")]
    Lemma31 {
        #[arg(long, value_parser = arg::<PointSet1D>)]
        set: PointSet1D,
        #[arg(long = "b", value_parser = real)]
        b: f64,
        /// Equispaced centers on [0, 1]; as many seeded random ones are added.
        #[arg(long, default_value_t = 500)]
        centers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// A·g_min(Λ_A) along an increasing schedule (CSV).
    #[command(name = "cor1-4")]
    Cor14 {
        #[arg(long = "a", value_parser = real, value_delimiter = ',', default_value = "9.5,99.5,999.5")]
        a_values: Vec<f64>,
        #[command(flatten)]
        output: Output,
    },
}

/// Result of one command: serialized data, a verdict line, and pass/fail.
pub struct Outcome {
    pub data: Vec<u8>,
    pub verdict: String,
    pub pass: bool,
}

fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut v = serde_json::to_vec_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    v.push(b'\n');
    Ok(v)
}

/// CSV with a header row and LF line endings.
pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.into_inner().map_err(|e| Error::Io(e.to_string()))
}

fn outcome(data: Vec<u8>, pass: bool, verdict: String) -> Outcome {
    Outcome { data, verdict, pass }
}

fn verdict_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Execute a parsed command.
pub fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Zeta { x, .. } => {
            let z = hurwitz_zeta2(*x, EvalPolicy::default())?;
            let f = big_f(*x)?;
            let data = to_json(&json!({ "x": x, "zeta2": z, "big_f": f }))?;
            Ok(outcome(data, true, format!("zeta(2, {x:?}) = {z:?}")))
        }
        Command::FrameFunctional { measure, set, grid, radius, .. } => {
            let r = probe_frame_bounds(measure, set, &grid.points(), *radius)?;
            let data = to_csv(&r.points)?;
            Ok(outcome(
                data,
                true,
                format!(
                    "probe bounds A ≤ {:?}, B ≥ {:?} over {} probes (tail ≤ {:e})",
                    r.a_lower_probe, r.b_upper_probe, r.samples, r.tail_bound_max
                ),
            ))
        }
        Command::JpVerify { measure, set, grid, random, radius, tol, seed, .. } => {
            let mut probes = match grid {
                Some(g) => g.points(),
                None => half_open_grid(0.0, 1.0, 257),
            };
            probes.extend(uniform_points(*seed, *random, 0.0, 1.0));
            let (v, rows) = jp_verify_with_rows(measure, set, &probes, *radius, *tol)?;
            Ok(outcome(
                to_csv(&rows)?,
                v.pass,
                format!(
                    "{}: worst residual {:e} at xi = {} (tol {:e})",
                    verdict_word(v.pass),
                    v.worst_residual,
                    v.worst_xi,
                    v.tolerance
                ),
            ))
        }
        Command::JpAdditive { t1, t2, set, count, n_terms, tol, seed, .. } => {
            let s = match set {
                Some(s) => s.clone(),
                None => construct_spectrum(*t1, *t2)?.set,
            };
            let probes = uniform_pairs(*seed, *count, 0.0, 1.0);
            let v = jp_verify_additive(*t1, *t2, &s, &probes, *n_terms, *tol)?;
            let data = to_json(&json!({ "t1": t1, "t2": t2, "set": s.to_string(), "result": v }))?;
            Ok(outcome(
                data,
                v.verdict.pass,
                format!(
                    "{}: worst residual {:e}, method gap {:e}",
                    verdict_word(v.verdict.pass),
                    v.verdict.worst_residual,
                    v.max_method_gap
                ),
            ))
        }
        Command::Gaps { set, lo, hi, .. } => {
            let g = gap_stats(set, (*lo, *hi))?;
            let data = to_json(&json!({ "set": set.to_string(), "window": [lo, hi], "stats": g }))?;
            Ok(outcome(
                data,
                true,
                format!("g_min = {:?}, g_max = {:?}, sup = {:?}", g.ess_min_gap, g.ess_max_gap, g.sup_gap),
            ))
        }
        Command::Prop21 { a_values, .. } => {
            let rows = prop_2_1_scan(a_values)?;
            let pass = rows.iter().all(|r| r.pass);
            Ok(outcome(to_csv(&rows)?, pass, format!("{}: {} rows", verdict_word(pass), rows.len())))
        }
        Command::ConstructSpectrum { t1, t2, n_range, .. } => {
            let c = construct_spectrum(*t1, *t2)?;
            let parity = parity_audit(&c, *n_range)?;
            let flc = finite_local_complexity_audit(&c, (*n_range).max(1))?;
            let pass = parity.pass && flc.pass;
            let data = to_json(&json!({
                "construction": c,
                "descriptor": c.set.to_string(),
                "parity_audit": parity,
                "local_complexity": flc,
            }))?;
            Ok(outcome(data, pass, format!("{}: spectrum {}", verdict_word(pass), c.set)))
        }
        Command::Lemma41 { t1, t2, step, tol, .. } => {
            if !(*step > 0.0 && *step <= 0.8) {
                return Err(Error::Parse { field: "step".into(), message: format!("{step} not in (0, 0.8]") });
            }
            let n = (0.8 / step + 1e-9).floor() as usize;
            let grid: Vec<f64> = (1..=n).map(|k| k as f64 * step).collect();
            let scan = lemma_4_1_scan(*t1, *t2, &grid, *tol)?;
            let data = to_json(&json!({ "t1": t1, "t2": t2, "step": step, "scan": scan }))?;
            Ok(outcome(
                data,
                true,
                format!("PASS: {} solutions, all on λ2 = ±λ1", scan.solutions.len()),
            ))
        }
        Command::PlusSpace { .. } => {
            let r = plus_space_report()?;
            Ok(outcome(to_json(&r)?, true, format!("PASS: {}", r.conclusion)))
        }
        Command::Theorem { which } => execute_theorem(which),
    }
}

fn execute_theorem(which: &TheoremCommand) -> Result<Outcome> {
    match which {
        TheoremCommand::Thm11 { g_min, g_max, c, a, .. } => {
            let v = check_thm_1_1(*g_min, *g_max, *c, *a)?;
            Ok(outcome(to_json(&v)?, v.pass, format!("{}: {:?} ≤ {:?}", verdict_word(v.pass), v.lhs, v.rhs)))
        }
        TheoremCommand::Rmk12 { g_min, c, a, .. } => {
            let v = check_rmk_1_2(*g_min, *c, *a)?;
            Ok(outcome(to_json(&v)?, v.pass, format!("{}: {:?} ≤ {:?}", verdict_word(v.pass), v.lhs, v.rhs)))
        }
        TheoremCommand::Thm15 { g_max, sup_gap, a, b, .. } => {
            let v = check_thm_1_5(*g_max, *sup_gap, *a, *b)?;
            let failed: Vec<&str> = [("lower", v.lower.pass), ("middle", v.middle.pass), ("upper", v.upper.pass)]
                .iter()
                .filter(|x| !x.1)
                .map(|x| x.0)
                .collect();
            let msg = if failed.is_empty() { "all links hold".to_string() } else { format!("failed: {}", failed.join(", ")) };
            Ok(outcome(to_json(&v)?, v.pass, format!("{}: {msg}", verdict_word(v.pass))))
        }
        TheoremCommand::GapBound { a, b, .. } => {
            let g = gap_upper_bound_sharp(*a, *b)?;
            let pass = g.closed_form < g.relaxed && g.zeta_inverse.is_none_or(|z| z < g.relaxed);
            Ok(outcome(
                to_json(&g)?,
                pass,
                format!("{}: sharp {:?} < relaxed {:?}", verdict_word(pass), g.closed_form, g.relaxed),
            ))
        }
        TheoremCommand::Lemma31 { set, b, centers, seed, .. } => {
            let mut cs = closed_grid(0.0, 1.0, *centers);
            cs.extend(uniform_points(*seed, *centers, 0.0, 1.0));
            let r = bessel_count_check(set, *b, &cs)?;
            Ok(outcome(
                to_json(&r)?,
                r.pass,
                format!("{}: max count {} ≤ cap {}", verdict_word(r.pass), r.max_count, r.cap),
            ))
        }
        TheoremCommand::Cor14 { a_values, .. } => {
            let t = cor_1_4_sharpness(a_values)?;
            Ok(outcome(
                to_csv(&t.rows)?,
                t.monotone,
                format!("{}: 1 − A·g_min monotone along schedule", verdict_word(t.monotone)),
            ))
        }
    }
}

fn output_path(command: &Command) -> Option<&PathBuf> {
    let o = match command {
        Command::Zeta { output, .. }
        | Command::FrameFunctional { output, .. }
        | Command::JpVerify { output, .. }
        | Command::JpAdditive { output, .. }
        | Command::Gaps { output, .. }
        | Command::Prop21 { output, .. }
        | Command::ConstructSpectrum { output, .. }
        | Command::Lemma41 { output, .. }
        | Command::PlusSpace { output } => output,
        Command::Theorem { which } => match which {
            TheoremCommand::Thm11 { output, .. }
            | TheoremCommand::Rmk12 { output, .. }
            | TheoremCommand::Thm15 { output, .. }
            | TheoremCommand::GapBound { output, .. }
            | TheoremCommand::Lemma31 { output, .. }
            | TheoremCommand::Cor14 { output, .. } => output,
        },
    };
    o.out.as_ref()
}

/// Exit status for an error: 1 for mathematical failures, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotSpectral { .. }
        | Error::AuditFailure { .. }
        | Error::OffLineSolutions { .. }
        | Error::LinkFailed { .. } => 1,
        _ => 2,
    }
}

/// Parse arguments, run, write outputs; returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let written = match output_path(&cli.command) {
                Some(p) => std::fs::write(p, &o.data),
                None => std::io::stdout().write_all(&o.data),
            };
            if let Err(e) = written {
                eprintln!("error: {}", Error::from(e));
                return 2;
            }
            eprintln!("{}", o.verdict);
            if o.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
