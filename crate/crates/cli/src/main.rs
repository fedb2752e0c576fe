//! `dcpell`: sequences, quaternions, identity checks and sweeps.
//!
//! Exit codes: 0 success or equality, 1 mathematical inequality or
//! inconsistency, 2 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dcpell_core::verifier::{
    parse_ids, parse_k_list, parse_range, reports_to_json, summary_csv, summary_line,
};
use dcpell_core::{
    binet_quaternion, build_quaternion, check_one, format_rational, parse_rational, seq_binet,
    seq_term, sweep, Bindings, DualComplexQ, Error, IdentityId, Rational, SequenceFamily,
    SequenceSpec, SweepConfig, Verdict,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "dcpell",
    version,
    about = "Exact dual-complex k-Pell arithmetic and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Level {
    Number,
    Quaternion,
}

#[derive(Subcommand)]
enum Command {
    /// Print terms of a sequence
    Seq {
        #[arg(long, default_value = "pell")]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
        to: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print a dual-complex quaternion
    Quat {
        #[arg(long, default_value = "pell")]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check one identity at one parameter tuple
    Identity {
        #[arg(long)]
        id: String,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Sweep identities over a parameter grid
    Sweep {
        #[arg(long, default_value = "all")]
        ids: String,
        /// Comma-separated k values
        #[arg(long, default_value = "1,2,3")]
        k: String,
        #[arg(long, default_value = "0..20", allow_hyphen_values = true)]
        n: String,
        #[arg(long, default_value = "0..20", allow_hyphen_values = true)]
        m: String,
        #[arg(long, default_value = "1..8", allow_hyphen_values = true)]
        r: String,
        #[arg(long, default_value_t = 5)]
        max_counterexamples: usize,
        /// Report JSON destination
        #[arg(long)]
        out: Option<PathBuf>,
        /// Summary format (plain lines or CSV)
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Evaluate a Binet form and compare it with the recurrence
    Binet {
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Level::Number)]
        level: Level,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

/// Usage problems map to exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn positive_k(text: &str) -> Result<Rational, Usage> {
    let k = parse_rational(text)?;
    SequenceSpec::new(SequenceFamily::KPell, k.clone())?;
    Ok(k)
}

fn render_dc(value: &DualComplexQ, format: Format) -> String {
    match format {
        Format::Plain => value.to_string(),
        Format::Csv => value.coefficients().map(format_rational).join(","),
        Format::Json => serde_json::to_string(value).expect("serializable"),
    }
}

fn run(command: Command) -> Result<u8, Usage> {
    match command {
        Command::Seq {
            family,
            k,
            from,
            to,
            format,
        } => {
            let family: SequenceFamily = family.parse()?;
            let spec = SequenceSpec::new(family, parse_rational(&k)?)?;
            if from > to {
                return Err(Usage(format!("--from {from} exceeds --to {to}")));
            }
            let rows: Vec<(i64, String)> = (from..=to)
                .map(|n| (n, format_rational(&seq_term(&spec, n))))
                .collect();
            match format {
                Format::Csv => println!(
                    "{}",
                    rows.iter()
                        .map(|(_, v)| v.as_str())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                Format::Plain => rows.iter().for_each(|(n, v)| println!("{n} {v}")),
                Format::Json => {
                    let body: Vec<_> = rows
                        .iter()
                        .map(|(n, v)| json!({"n": n, "value": v}))
                        .collect();
                    println!("{}", serde_json::Value::Array(body));
                }
            }
            Ok(0)
        }
        Command::Quat {
            family,
            k,
            n,
            format,
        } => {
            let family: SequenceFamily = family.parse()?;
            let q = build_quaternion(family, &parse_rational(&k)?, n)?;
            println!("{}", render_dc(q.value(), format));
            Ok(0)
        }
        Command::Identity {
            id,
            k,
            n,
            m,
            r,
            format,
        } => {
            let id: IdentityId = id.parse()?;
            let k = k.as_deref().map(parse_rational).transpose()?;
            let result = check_one(id, &Bindings { k, n, m, r })?;
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string(&result).expect("serializable"))
                }
                Format::Csv => println!(
                    "{},{},{}",
                    result.equal,
                    render_dc(&result.lhs, Format::Csv),
                    render_dc(&result.rhs, Format::Csv)
                ),
                Format::Plain => {
                    println!("equal: {}", result.equal);
                    println!("lhs: {}", result.lhs);
                    println!("rhs: {}", result.rhs);
                }
            }
            Ok(if result.equal { 0 } else { 1 })
        }
        Command::Sweep {
            ids,
            k,
            n,
            m,
            r,
            max_counterexamples,
            out,
            format,
        } => {
            let config = SweepConfig {
                ids: parse_ids(&ids)?,
                k_values: parse_k_list(&k)?,
                n_range: parse_range(&n)?,
                m_range: parse_range(&m)?,
                r_range: parse_range(&r)?,
                max_counterexamples,
            };
            for k in &config.k_values {
                positive_k(&format_rational(k))?;
            }
            let reports = sweep(&config);
            if let Some(path) = out {
                fs::write(&path, reports_to_json(&reports) + "\n")
                    .map_err(|e| Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            match format {
                Format::Csv => print!("{}", summary_csv(&reports)),
                Format::Json => println!("{}", reports_to_json(&reports)),
                Format::Plain => reports.iter().for_each(|r| println!("{}", summary_line(r))),
            }
            Ok(if reports.iter().all(|r| r.verdict == Verdict::Holds) {
                0
            } else {
                1
            })
        }
        Command::Binet {
            k,
            n,
            level,
            format,
        } => {
            let k = positive_k(&k)?;
            let family = SequenceSpec::new(SequenceFamily::KPell, k.clone())?;
            let (rendered, consistent) = match level {
                Level::Number => {
                    let value = seq_binet(&k, n)?;
                    let consistent = value == seq_term(&family, n as i64);
                    let text = format_rational(&value);
                    (json!(text), consistent)
                }
                Level::Quaternion => {
                    let value = binet_quaternion(&k, n)?;
                    let consistent =
                        &value == build_quaternion(SequenceFamily::KPell, &k, n as i64)?.value();
                    let rendered = match format {
                        Format::Json => serde_json::to_value(&value).expect("serializable"),
                        other => json!(render_dc(&value, other)),
                    };
                    (rendered, consistent)
                }
            };
            match format {
                Format::Json => {
                    println!("{}", json!({"value": rendered, "consistent": consistent}))
                }
                _ => {
                    println!(
                        "{}",
                        rendered
                            .as_str()
                            .map(str::to_string)
                            .unwrap_or_else(|| rendered.to_string())
                    );
                    println!("consistent: {consistent}");
                }
            }
            Ok(if consistent { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
