use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use s6q_core::pencil::special_parameters;
use s6q_core::{run_certificate, Certificate, Rat};

const DEFAULT_SAMPLE: &str = "1,3,-1,5,7/3";

#[derive(Parser)]
#[command(
    name = "s6q",
    version,
    about = "Certify non-rationality of the S6-invariant quartic threefolds X_t"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the certificate for one or more parameter values.
    Verify(VerifyArgs),
    /// Run the sample, the special parameters and the gated values 0 and 4.
    Report(CommonArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["t", "sample", "special"])))]
struct VerifyArgs {
    /// A rational parameter, e.g. `1`, `-3`, `7/3`.
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    t: Option<Rat>,
    /// The default sample of generic parameters.
    #[arg(long)]
    sample: bool,
    /// The special parameters 2, 6 and 10/7.
    #[arg(long)]
    special: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print per-parameter wall-clock times to stderr.
    #[arg(long)]
    timing: bool,
    /// Comma-separated parameters used by `--sample` and `report`.
    #[arg(
        long,
        env = "QC_DEFAULT_SAMPLE",
        value_delimiter = ',',
        value_parser = parse_rat,
        default_value = DEFAULT_SAMPLE,
        allow_hyphen_values = true
    )]
    sample_values: Vec<Rat>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| format!("{e} (expected an integer or p/q)"))
}

fn run_all(ts: &[Rat]) -> Vec<(Certificate, Duration)> {
    ts.par_iter()
        .map(|t| {
            let start = Instant::now();
            let cert = run_certificate(t);
            (cert, start.elapsed())
        })
        .collect()
}

fn render(certs: &[Certificate], format: Format, single: bool) -> String {
    match format {
        Format::Json if single => certs[0].to_json() + "\n",
        Format::Json => serde_json::to_string_pretty(certs).expect("serializable") + "\n",
        Format::Text => certs
            .iter()
            .map(Certificate::to_text)
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn render_report(certs: &[Certificate], format: Format) -> String {
    match format {
        Format::Json => {
            let summary: Vec<_> = certs
                .iter()
                .map(|c| json!({ "t": c.t.to_string(), "verdict": c.verdict.to_string(), "as_expected": c.is_as_expected() }))
                .collect();
            let doc = json!({ "summary": summary, "certificates": certs });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut out = String::from("summary\n");
            for c in certs {
                let mark = if c.is_as_expected() {
                    "ok"
                } else {
                    "UNEXPECTED"
                };
                out.push_str(&format!(
                    "  t = {:<6} {:<26} {mark}\n",
                    c.t.to_string(),
                    c.verdict.to_string()
                ));
            }
            out.push('\n');
            out.push_str(&render(certs, Format::Text, false));
            out
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (ts, common, single, report) = match &cli.command {
        Command::Verify(v) => {
            let ts = if let Some(t) = &v.t {
                vec![t.clone()]
            } else if v.sample {
                v.common.sample_values.clone()
            } else {
                special_parameters().to_vec()
            };
            (ts, &v.common, v.t.is_some(), false)
        }
        Command::Report(c) => {
            let mut ts = c.sample_values.clone();
            ts.extend(special_parameters());
            ts.extend([Rat::from(0), Rat::from(4)]);
            (ts, c, false, true)
        }
    };

    let results = run_all(&ts);
    let certs: Vec<Certificate> = results.iter().map(|(c, _)| c.clone()).collect();
    let body = if report {
        render_report(&certs, common.format)
    } else {
        render(&certs, common.format, single)
    };
    print!("{body}");

    if common.timing {
        for (c, d) in &results {
            eprintln!("timing: t = {} {:.3}s", c.t, d.as_secs_f64());
        }
    }

    if certs.iter().all(Certificate::is_as_expected) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
