//! Command-line front end for the `fibonomial` crate.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use fibonomial::exact::{BigInt, BigRational, TruncSeries};
use fibonomial::fibonomial::fibonomial_product;
use fibonomial::series_cf::{ab_inverse_pair, cf_column_variant, cf_eval, cf_row_variant, column_target, gf_signed_row, row_target};
use fibonomial::verify::{run_suite, Method, Suite, VerificationReport, DEFAULT_MAX_N};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "fibonomial", version, about = "Exact Fibonomial coefficients and identity checks")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Upper bound on n for `verify`.
    #[arg(long = "max-n", global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: u64,
    /// Worker threads for `verify` (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Also write the verification report as JSON to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    Row,
    Column,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    /// Σ δ_k C(n,k)_F x^k
    SignedRow,
    /// Σ C(n+k,k)_F x^k
    Column,
    /// Σ (−1)^{C(k+1,2)} C(n+1,k)_F x^k
    Row,
    /// Σ (−1)^k C(n+k,n)_F x^k together with its inverse
    InversePair,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute C(n,k)_F by one route, or by every route with `--method all`.
    Eval {
        n: u64,
        k: u64,
        #[arg(long, default_value = "product")]
        method: String,
    },
    /// Print rows 0..ROWS-1 of the Fibonomial triangle.
    Triangle {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        rows: u64,
    },
    /// Expand the row or column continued fraction.
    Cf {
        #[arg(value_enum)]
        variant: Variant,
        n: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
    },
    /// Run an identity suite and report pass/fail per entry.
    Verify {
        #[arg(default_value = "all", value_parser = clap::value_parser!(Suite))]
        suite: Suite,
    },
    /// Print a generating function to the given order.
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        n: u64,
        order: u64,
    },
}

struct Usage(String);

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<fibonomial::Error> for Failure {
    fn from(e: fibonomial::Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u.0)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

/// Exit status for a finished verification run: recorded discrepancies do not fail it.
pub fn report_exit_code(report: &VerificationReport) -> i32 {
    if report.is_success() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Eval { n, k, method } => eval(cli.format, *n, *k, method, out),
        Command::Triangle { rows } => triangle(cli.format, *rows, out),
        Command::Cf { variant, n, order } => cf(cli.format, *variant, *n, *order as usize, out),
        Command::Verify { suite } => verify(cli, *suite, out),
        Command::Series { kind, n, order } => series(cli.format, *kind, *n, *order as usize, out),
    }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json value"))?;
    Ok(())
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn eval(format: Format, n: u64, k: u64, method: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let methods: Vec<Method> = if method == "all" {
        Method::ALL.to_vec()
    } else {
        vec![method.parse().map_err(|_| Usage(format!("unknown method `{method}`")))?]
    };
    if k > n {
        return Err(Usage(format!("k = {k} exceeds n = {n}")).into());
    }
    let values = methods
        .iter()
        .map(|m| m.evaluate(n, k))
        .collect::<Result<Vec<BigInt>, _>>()?;
    let agree = values.iter().all(|v| *v == values[0]);
    match format {
        Format::Json => {
            let routes: serde_json::Map<String, Value> = methods
                .iter()
                .zip(&values)
                .map(|(m, v)| (m.name().to_string(), Value::String(v.to_string())))
                .collect();
            emit_json(out, &json!({ "n": n, "k": k, "values": routes, "agree": agree }))?;
        }
        Format::Text if methods.len() == 1 => writeln!(out, "{}", values[0])?,
        Format::Text => {
            for (m, v) in methods.iter().zip(&values) {
                writeln!(out, "{m}\t{v}")?;
            }
        }
    }
    Ok(if agree { EXIT_OK } else { EXIT_FAILURE })
}

fn triangle(format: Format, rows: u64, out: &mut dyn Write) -> Result<i32, Failure> {
    let table = (0..rows)
        .map(|n| (0..=n).map(|k| fibonomial_product(n, k)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        Format::Json => {
            let rows: Vec<Vec<String>> = table.iter().map(|r| strings(r)).collect();
            emit_json(out, &json!({ "rows": rows }))?;
        }
        Format::Text => {
            for row in &table {
                writeln!(out, "{}", strings(row).join(" "))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cf(format: Format, variant: Variant, n: u64, order: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = match variant {
        Variant::Row => cf_row_variant(n),
        Variant::Column => cf_column_variant(n),
    };
    let series = cf_eval(&spec, order)?;
    match format {
        Format::Json => {
            let levels: Vec<Value> = spec
                .levels
                .iter()
                .map(|l| json!({ "nu": l.numerator.to_string(), "mu": l.slope.to_string() }))
                .collect();
            let v = json!({
                "variant": if variant == Variant::Row { "row" } else { "column" },
                "n": n,
                "order": order,
                "initial": spec.initial.to_string(),
                "levels": levels,
                "coefficients": strings(series.coeffs()),
            });
            emit_json(out, &v)?;
        }
        Format::Text => {
            writeln!(out, "initial {}", spec.initial)?;
            for (j, l) in spec.levels.iter().enumerate() {
                writeln!(out, "level {}: nu={} mu={}", j + 1, l.numerator, l.slope)?;
            }
            writeln!(out, "{}", strings(series.coeffs()).join(","))?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(cli: &Cli, suite: Suite, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = run_suite(suite, cli.max_n, cli.jobs)?;
    if let Some(path) = &cli.report {
        std::fs::write(path, report.to_json())?;
    }
    match cli.format {
        Format::Json => out.write_all(report.to_json().as_bytes())?,
        Format::Text => out.write_all(report.render_text().as_bytes())?,
    }
    Ok(report_exit_code(&report))
}

fn series(format: Format, kind: SeriesKind, n: u64, order: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut named: Vec<(&str, TruncSeries<BigInt>)> = match kind {
        SeriesKind::SignedRow => vec![("signed-row", gf_signed_row(n, order)?)],
        SeriesKind::Column => {
            let exact = cf_eval(&cf_column_variant(n), order)?;
            let target = column_target(n, order);
            if exact != target.map(|c| BigRational::from_integer(c.clone())) {
                return Err(Failure::Failed("column series disagrees with its continued fraction".into()));
            }
            vec![("column", target)]
        }
        SeriesKind::Row => vec![("row", row_target(n, order))],
        SeriesKind::InversePair => {
            let (a, b) = ab_inverse_pair(n, order)?;
            vec![("a", a), ("b", b)]
        }
    };
    match format {
        Format::Json => {
            let map: serde_json::Map<String, Value> = named
                .drain(..)
                .map(|(name, s)| (name.to_string(), json!(strings(s.coeffs()))))
                .collect();
            emit_json(out, &json!({ "n": n, "order": order, "series": map }))?;
        }
        Format::Text => {
            for (name, s) in &named {
                writeln!(out, "{name}: {}", strings(s.coeffs()).join(","))?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use fibonomial::verify::{Entry, Params, Verdict};

    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["fibonomial"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn failing_report_maps_to_exit_one() {
        let pass = Entry::new("x", Params::new(), Verdict::equal(&1, &1));
        let recorded = Entry::new("y", Params::new(), Verdict::equal(&1, &2).recorded());
        let fail = Entry::new("z", Params::new(), Verdict::equal(&1, &2));
        let ok = VerificationReport::from_entries(vec![pass.clone(), recorded.clone()]);
        assert_eq!(report_exit_code(&ok), EXIT_OK);
        let bad = VerificationReport::from_entries(vec![pass, recorded, fail]);
        assert_eq!(report_exit_code(&bad), EXIT_FAILURE);
    }

    #[test]
    fn library_errors_map_to_exit_one() {
        let f: Failure = fibonomial::Error::NotInvertible.into();
        assert!(matches!(f, Failure::Failed(_)));
    }

    #[test]
    fn eval_routes() {
        let (code, out, _) = run_str(&["eval", "7", "3", "--method", "all"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), Method::ALL.len());
        assert!(out.lines().all(|l| l.ends_with("\t260")));
        assert_eq!(run_str(&["eval", "3", "4"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["eval", "3", "1", "--method", "guess"]).0, EXIT_USAGE);
    }
}
