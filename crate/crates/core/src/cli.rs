//! Command-line front end.
//!
//! Lists are printed as JSON lines, reports as a single JSON document. Exit
//! codes: 0 success, 1 verification failure, 2 usage or input error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::complexify::{complexification_table, fibre, image, is_surjective};
use crate::error::Error;
use crate::oracle::{CentralizerReport, DimensionOracle};
use crate::orbit_index::{enumerate_orbits, orbits_with_partition, AlgebraSpec, OrbitIndex};
use crate::partitions::Partition;
use crate::poset::{closure_order_sl, dominance_projection_so, DOMINANCE_PROJECTION_NOTE};
use crate::verify::{run_checks, Family, SweepConfig};

#[derive(Debug, Parser)]
#[command(name = "nilorbits", version, about = "Nilpotent orbits and their complexification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List I(g), one JSON index per line.
    Orbits { algebra: AlgebraSpec },
    /// Each index of I(g) with its image in I(g_C).
    Complexify { algebra: AlgebraSpec },
    /// Image of the complexification map, missed orbits and surjectivity.
    Image { algebra: AlgebraSpec },
    /// Real orbits complexifying to the given complex orbit.
    Fibre {
        algebra: AlgebraSpec,
        /// Complex orbit index as JSON, e.g. '{"partition":[2,2],"decoration":"+"}'.
        orbit: String,
    },
    /// Export the closure order on sl(n,C), or the dominance projection on so(m,C).
    Poset {
        family: PosetFamily,
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Centralizer and orbit dimension of a complex orbit.
    Dim {
        algebra: AlgebraSpec,
        /// Partition as JSON or comma list, e.g. [2,1,1] or 2,1,1.
        partition: String,
    },
    /// Run every property sweep.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = Family::ALL.to_vec())]
        families: Vec<Family>,
        /// Include two-term direct sums.
        #[arg(long)]
        sums: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PosetFamily {
    Sl,
    So,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        CliOutput { code: 0, stdout, stderr: String::new() }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        CliOutput { code: 2, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput { code: 2, stdout: String::new(), stderr: text }
            } else {
                CliOutput::ok(text)
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(e) => CliOutput::input_error(e),
    }
}

fn json_lines<T: Serialize>(items: impl IntoIterator<Item = T>) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(&item).expect("serializable"));
        out.push('\n');
    }
    out
}

fn document<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn parse_partition(text: &str) -> Result<Partition, Error> {
    let trimmed = text.trim();
    let parse_err = |reason: &str| Error::Parse { token: text.to_string(), reason: reason.to_string() };
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed).map_err(|e| parse_err(&e.to_string()));
    }
    let parts = trimmed
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<usize>().map_err(|_| parse_err("expected positive integers")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts)
}

fn execute(command: Command) -> Result<CliOutput, Error> {
    Ok(match command {
        Command::Orbits { algebra } => CliOutput::ok(json_lines(enumerate_orbits(&algebra)?)),
        Command::Complexify { algebra } => {
            #[derive(Serialize)]
            struct Row {
                orbit: OrbitIndex,
                image: OrbitIndex,
            }
            let rows = complexification_table(&algebra)?.into_iter().map(|(orbit, image)| Row { orbit, image });
            CliOutput::ok(json_lines(rows))
        }
        Command::Image { algebra } => {
            #[derive(Serialize)]
            struct ImageReport {
                algebra: AlgebraSpec,
                image: Vec<OrbitIndex>,
                missed: Vec<OrbitIndex>,
                surjective: bool,
                theorem_predicate: bool,
                agree: bool,
            }
            let report = is_surjective(&algebra)?;
            CliOutput::ok(document(&ImageReport {
                image: image(&algebra)?,
                algebra: report.algebra,
                missed: report.missed,
                surjective: report.surjective,
                theorem_predicate: report.theorem_predicate,
                agree: report.agree,
            }))
        }
        Command::Fibre { algebra, orbit } => {
            let theta: OrbitIndex = serde_json::from_str(&orbit)
                .map_err(|e| Error::Parse { token: orbit.clone(), reason: e.to_string() })?;
            CliOutput::ok(json_lines(fibre(&algebra, &theta)?))
        }
        Command::Poset { family, n, format } => match family {
            PosetFamily::Sl => {
                let poset = closure_order_sl(n)?;
                CliOutput::ok(match format {
                    Format::Json => format!("{}\n", poset.to_json()),
                    Format::Dot => poset.export_dot(None),
                })
            }
            PosetFamily::So => {
                let poset = dominance_projection_so(n)?;
                CliOutput::ok(match format {
                    Format::Json => {
                        let body = poset.to_json();
                        format!("{{\"relation\":\"{DOMINANCE_PROJECTION_NOTE}\",{}\n", &body[1..])
                    }
                    Format::Dot => poset.export_dot(Some(DOMINANCE_PROJECTION_NOTE)),
                })
            }
        },
        Command::Dim { algebra, partition } => {
            let member = algebra.as_simple().ok_or_else(|| Error::NotSimple(algebra.to_string()))?;
            if !member.is_complex() {
                return Err(Error::NotComplex(member.to_string()));
            }
            let lambda = parse_partition(&partition)?;
            if orbits_with_partition(member, &lambda).is_empty() {
                return Err(Error::InvalidOrbit { algebra: member.to_string(), orbit: lambda.to_string() });
            }
            let report = DimensionOracle::new().complex_report(member, &lambda)?;
            #[derive(Serialize)]
            struct DimReport {
                algebra: AlgebraSpec,
                partition: Partition,
                #[serde(flatten)]
                report: CentralizerReport,
            }
            CliOutput::ok(document(&DimReport { algebra, partition: lambda, report }))
        }
        Command::Verify { max_n, families, sums } => {
            let config = SweepConfig::new(max_n, families.into_iter().collect::<BTreeSet<_>>(), sums)?;
            verify_output(&config)
        }
    })
}

fn verify_output(config: &SweepConfig) -> CliOutput {
    let outcomes = run_checks(config);
    let mut stdout = String::new();
    let mut total = 0;
    let mut failures = 0;
    for o in &outcomes {
        total += o.assertions;
        failures += o.failures.len();
        if o.passed() {
            writeln!(stdout, "ok    {} ({})", o.name, o.assertions).unwrap();
        } else {
            writeln!(stdout, "FAIL  {} ({} of {} failed)", o.name, o.failures.len(), o.assertions).unwrap();
            for f in o.failures.iter().take(5) {
                writeln!(stdout, "      {f}").unwrap();
            }
        }
    }
    writeln!(stdout, "verified {total} checks, {failures} failures").unwrap();
    CliOutput { code: if failures == 0 { 0 } else { 1 }, stdout, stderr: String::new() }
}
