//! The `deutsch` command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

mod verify;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::asymptotics::{self, SeriesCache};
use crate::closedforms;
use crate::paths::{is_dyck, stanley_ok, Enumerator, DEFAULT_CAP};

pub use verify::{run_checks, CheckOutcome, VerifyOptions};

pub const CAP_ENV: &str = "DEUTSCH_ENUM_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "deutsch", version, about = "Exact enumeration of Deutsch paths")]
pub struct Cli {
    /// Longest path the brute-force enumerator will generate.
    #[arg(long, global = true, env = CAP_ENV, default_value_t = DEFAULT_CAP)]
    pub cap: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the coefficients of a generating function.
    Series(SeriesArgs),
    /// Count paths of one length by brute force.
    Count(CountArgs),
    /// Cross-check brute force, slice recurrence and closed forms.
    Verify(VerifyArgs),
    /// Compare exact coefficients with their asymptotic predictions.
    Asymptotics(AsymptoticsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    Phi0,
    #[value(name = "phi0-t")]
    Phi0T,
    Stanley,
    Open,
    Motzkin,
    MeanNumerator,
    V,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(value_enum)]
    pub name: SeriesName,
    #[arg(long)]
    pub order: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupBy {
    SingleUpRuns,
    Mountains,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long)]
    pub length: usize,
    /// Only paths ending at this level.
    #[arg(long, conflicts_with = "open")]
    pub end_level: Option<u64>,
    /// Any end level (the default unless --end-level or --stanley is given).
    #[arg(long)]
    pub open: bool,
    /// Closed paths whose returns to the axis all start at odd levels.
    #[arg(long)]
    pub stanley: bool,
    /// Only unit down-steps.
    #[arg(long)]
    pub dyck_only: bool,
    #[arg(long, value_enum)]
    pub by: Option<GroupBy>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 10)]
    pub max_length: usize,
    #[arg(long, default_value_t = 30)]
    pub max_order: usize,
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Args, Debug)]
pub struct AsymptoticsArgs {
    /// One or more lengths, comma separated.
    #[arg(long = "n", value_delimiter = ',', required = true)]
    pub ns: Vec<usize>,
}

/// One output line: a key and its exact values rendered as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub key: String,
    pub values: Vec<String>,
}

impl OutputRecord {
    fn new(key: impl ToString, values: Vec<String>) -> Self {
        OutputRecord { key: key.to_string(), values }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure { code: EXIT_USAGE, message: message.to_string() }
}

fn write_records(out: &mut dyn Write, format: Format, records: &[OutputRecord]) -> std::io::Result<()> {
    match format {
        Format::Tsv => {
            for r in records {
                let mut fields = vec![r.key.as_str()];
                fields.extend(r.values.iter().map(String::as_str));
                writeln!(out, "{}", fields.join("\t"))?;
            }
        }
        Format::Json => {
            serde_json::to_writer(&mut *out, records)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn series_records(args: &SeriesArgs) -> Result<Vec<OutputRecord>, Failure> {
    let order = args.order;
    let fail = |e: closedforms::ClosedFormError| Failure { code: EXIT_MISMATCH, message: e.to_string() };
    let coeffs: Vec<String> = match args.name {
        SeriesName::Phi0 => strings(closedforms::phi0(order).map_err(fail)?.coeffs()),
        SeriesName::Phi0T => strings(closedforms::phi0_t(order).map_err(fail)?.coeffs()),
        SeriesName::Stanley => strings(closedforms::stanley_series(order).map_err(fail)?.coeffs()),
        SeriesName::Open => strings(closedforms::open_paths(order).map_err(fail)?.coeffs()),
        SeriesName::Motzkin => strings(closedforms::motzkin(order).coeffs()),
        SeriesName::MeanNumerator => strings(closedforms::mean_numerator(order).map_err(fail)?.coeffs()),
        SeriesName::V => strings(closedforms::v_series(order).coeffs()),
    };
    Ok(coeffs
        .into_iter()
        .enumerate()
        .map(|(n, c)| OutputRecord::new(n, vec![c]))
        .collect())
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(T::to_string).collect()
}

fn count_records(args: &CountArgs, enumerator: Enumerator) -> Result<Vec<OutputRecord>, Failure> {
    if args.stanley && args.open {
        return Err(usage("--stanley applies to closed paths only and cannot be combined with --open"));
    }
    if args.stanley && args.end_level.is_some_and(|j| j != 0) {
        return Err(usage("--stanley applies to closed paths only (end level 0)"));
    }
    let end_level = if args.stanley { Some(0) } else { args.end_level };
    let filter = |p: &crate::paths::Path, s: &crate::paths::PathStats| {
        end_level.is_none_or(|j| s.end_level == j)
            && (!args.dyck_only || is_dyck(p))
            && (!args.stanley || stanley_ok(p).unwrap_or(false))
    };
    let records = match args.by {
        None => {
            let total = enumerator.count(args.length, filter).map_err(usage)?;
            vec![OutputRecord::new(total, Vec::new())]
        }
        Some(by) => {
            let hist = enumerator
                .histogram(args.length, filter, |_, s| match by {
                    GroupBy::SingleUpRuns => s.single_up_runs,
                    GroupBy::Mountains => s.mountains,
                })
                .map_err(usage)?;
            hist.into_iter()
                .map(|(k, c)| OutputRecord::new(k, vec![c.to_string()]))
                .collect()
        }
    };
    Ok(records)
}

fn asymptotics_records(args: &AsymptoticsArgs) -> Result<Vec<OutputRecord>, Failure> {
    if let Some(&n) = args.ns.iter().find(|&&n| n < 2) {
        return Err(usage(format!("--n must be at least 2, got {n}")));
    }
    let order = args.ns.iter().copied().max().unwrap_or(2);
    let cache = SeriesCache::new(order).map_err(|e| Failure { code: EXIT_MISMATCH, message: e.to_string() })?;
    let reports = asymptotics::trend(&args.ns, &cache).map_err(usage)?;
    Ok(reports
        .iter()
        .map(|r| {
            OutputRecord::new(
                r.n,
                vec![
                    format!("total={}", r.exact_total),
                    format!("weighted={}", r.exact_weighted),
                    format!("mean={}", r.mean),
                    format!("mean_decimal={}", r.mean_decimal),
                    format!("predicted_mean_decimal={:.12}", r.predicted_mean),
                    format!("mean_rel_error_decimal={:.6e}", r.mean_relative_error),
                    format!("total_rel_error_decimal={:.6e}", r.total_relative_error),
                    format!("weighted_rel_error_decimal={:.6e}", r.weighted_relative_error),
                ],
            )
        })
        .collect())
}

fn verify_lines(args: &VerifyArgs, enumerator: Enumerator) -> Result<(Vec<String>, bool), Failure> {
    let opts = VerifyOptions {
        max_length: args.max_length,
        max_order: args.max_order,
        inject_fault: args.inject_fault,
    };
    let outcomes = run_checks(opts, enumerator).map_err(usage)?;
    let ok = outcomes.iter().all(CheckOutcome::passed);
    let lines = outcomes
        .iter()
        .map(|o| match &o.failure {
            None => format!("PASS\t{}", o.name),
            Some(why) => format!("FAIL\t{}\t{why}", o.name),
        })
        .collect();
    Ok((lines, ok))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let enumerator = Enumerator::with_cap(cli.cap);
    let io = |e: std::io::Error| Failure { code: EXIT_MISMATCH, message: e.to_string() };
    match &cli.command {
        Command::Series(args) => write_records(out, cli.format, &series_records(args)?).map_err(io)?,
        Command::Count(args) => write_records(out, cli.format, &count_records(args, enumerator)?).map_err(io)?,
        Command::Asymptotics(args) => write_records(out, cli.format, &asymptotics_records(args)?).map_err(io)?,
        Command::Verify(args) => {
            let (lines, ok) = verify_lines(args, enumerator)?;
            match cli.format {
                Format::Tsv => lines.iter().try_for_each(|l| writeln!(out, "{l}")).map_err(io)?,
                Format::Json => {
                    let records: Vec<OutputRecord> = lines
                        .iter()
                        .map(|l| {
                            let mut parts = l.split('\t');
                            let status = parts.next().unwrap_or_default();
                            OutputRecord::new(status, parts.map(str::to_string).collect())
                        })
                        .collect();
                    write_records(out, Format::Json, &records).map_err(io)?;
                }
            }
            return Ok(if ok { EXIT_OK } else { EXIT_MISMATCH });
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (program name first) and runs the command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "deutsch: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["deutsch"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn values(tsv: &str) -> Vec<String> {
        tsv.lines().map(|l| l.split('\t').nth(1).unwrap().to_string()).collect()
    }

    #[test]
    fn series_phi0() {
        let (code, out, _) = run_capture(&["series", "phi0", "--order", "7"]);
        assert_eq!(code, 0);
        assert_eq!(values(&out), ["1", "0", "1", "1", "3", "6", "15", "36"]);
    }

    #[test]
    fn series_stanley_and_marked() {
        let (_, out, _) = run_capture(&["series", "stanley", "--order", "10"]);
        assert_eq!(values(&out), ["1", "0", "1", "0", "2", "2", "7", "14", "37", "90", "233"]);
        let (_, out, _) = run_capture(&["series", "phi0-t", "--order", "4"]);
        assert_eq!(values(&out), ["1", "0", "t", "1", "2+t^2"]);
    }

    #[test]
    fn json_carries_the_same_values() {
        let (_, tsv, _) = run_capture(&["series", "mean-numerator", "--order", "9"]);
        let (_, json, _) = run_capture(&["series", "mean-numerator", "--order", "9", "--format", "json"]);
        let parsed: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
        let from_json: Vec<String> = parsed.iter().map(|r| r["values"][0].as_str().unwrap().to_string()).collect();
        assert_eq!(from_json, values(&tsv));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["series", "nope", "--order", "3"]).0, 2);
        assert_eq!(run_capture(&["series", "phi0", "--order", "-1"]).0, 2);
        let (code, _, err) = run_capture(&["count", "--length", "4", "--open", "--stanley"]);
        assert_eq!(code, 2);
        assert!(err.contains("--stanley"));
        assert_eq!(run_capture(&["count", "--length", "20"]).0, 2);
        assert_eq!(run_capture(&["asymptotics", "--n", "1"]).0, 2);
    }

    #[test]
    fn counts() {
        assert_eq!(run_capture(&["count", "--length", "5", "--end-level", "0"]).1, "6\n");
        assert_eq!(run_capture(&["count", "--length", "6", "--stanley"]).1, "7\n");
        assert_eq!(run_capture(&["count", "--length", "6", "--stanley", "--dyck-only"]).1, "2\n");
        let (_, out, _) = run_capture(&["count", "--length", "7", "--end-level", "0", "--by", "single-up-runs"]);
        assert_eq!(out, "0\t17\n1\t13\n2\t6\n");
        assert_eq!(run_capture(&["count", "--length", "6"]).1, "51\n");
    }

    #[test]
    fn cap_flag_overrides_default() {
        assert_eq!(run_capture(&["--cap", "3", "count", "--length", "4"]).0, 2);
    }

    #[test]
    fn verify_passes_and_detects_faults() {
        let (code, out, _) = run_capture(&["verify", "--max-length", "6", "--max-order", "12"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.lines().all(|l| l.starts_with("PASS")));
        let (code, out, _) = run_capture(&["verify", "--max-length", "6", "--max-order", "12", "--inject-fault"]);
        assert_eq!(code, 1);
        assert!(out.contains("FAIL\tclosed-counts\tclosed z^2"), "{out}");
        let (code, _, _) = run_capture(&["verify", "--max-length", "0", "--max-order", "0"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn asymptotics_spot_values() {
        let (code, out, _) = run_capture(&["asymptotics", "--n", "2,7"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert!(lines[0].contains("mean=1\t"));
        assert!(lines[1].contains("mean=25/36\t"));
    }
}
