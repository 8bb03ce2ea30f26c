use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use ctrlperm::report::{self, ReportOptions, SpecFile};
use ctrlperm::systems::{self, Family, OracleLimits, SystemSpec};

/// Controllability of bilinear systems via orbit partitions of the symmetric
/// group, cross-checked by an exact Lie-closure rank test.
///
/// The oracle size guard (n <= 12 for so_n/sphere, N <= 8 for
/// multi_agent/markov) can be overridden with CTRLPERM_ORACLE_MAX_N.
#[derive(Parser)]
#[command(name = "ctrlperm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one spec file. Exit 0 = controllable, 1 = not, 2 = input error.
    Analyze {
        spec: PathBuf,
        /// Also run the exact Lie-closure oracle and compare.
        #[arg(long)]
        oracle: bool,
        /// Include the control graph in DOT format.
        #[arg(long)]
        dot: bool,
        /// Include the echelon basis of the generated algebra (implies --oracle).
        #[arg(long)]
        dump_basis: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Run both methods on a spec file or a seeded random batch. Exit 0 iff all agree.
    Compare {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        spec: Option<PathBuf>,
        /// Random batch: letters, pairs per instance, seed, instance count.
        #[arg(long, num_args = 4, value_names = ["N", "M", "SEED", "COUNT"])]
        random: Option<Vec<u64>>,
        /// Family used for --random.
        #[arg(long, default_value = "so_n", value_parser = parse_family)]
        family: Family,
    },
    /// Experimental subgroup diagnostic for generators given as matrices.
    Probe {
        spec: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Print a random spec (ChaCha8, seeded) with M distinct pairs on N letters.
    Gen {
        #[arg(value_parser = parse_family)]
        family: Family,
        n: usize,
        m: usize,
        seed: u64,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct Format {
    /// JSON output (default).
    #[arg(long)]
    json: bool,
    /// Human-readable output.
    #[arg(long)]
    text: bool,
}

fn parse_family(s: &str) -> Result<Family, String> {
    serde_json::from_value(serde_json::Value::String(s.to_string()))
        .map_err(|_| format!("unknown family `{s}` (so_n, multi_agent, markov, sphere)"))
}

fn read_spec_file(path: &Path) -> anyhow::Result<SpecFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(SpecFile::parse(&text)?)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Analyze { spec, oracle, dot, dump_basis, format } => {
            let file = read_spec_file(&spec)?;
            if file.is_probe() {
                bail!("spec has matrix generators; use the probe subcommand");
            }
            let spec = file.to_system_spec()?;
            let report = if oracle || dump_basis {
                systems::analyze_with_oracle(&spec, OracleLimits::from_env())?
            } else {
                systems::analyze(&spec)?
            };
            let options = ReportOptions { dot, dump_basis };
            if format.text {
                println!("{}", report::report_text(&report, &spec, options)?);
            } else {
                println!("{}", report::to_canonical_string(&report::report_json(&report, &spec, options)?));
            }
            Ok(if report.controllable { 0 } else { 1 })
        }
        Command::Compare { spec, random, family } => {
            let specs: Vec<SystemSpec> = match (spec, random) {
                (Some(path), None) => {
                    let file = read_spec_file(&path)?;
                    if file.is_probe() {
                        bail!("spec has matrix generators; use the probe subcommand");
                    }
                    vec![file.to_system_spec()?]
                }
                (None, Some(r)) => {
                    let [n, m, seed, count] = r[..] else { bail!("--random takes N M SEED COUNT") };
                    report::random_specs(family, n as usize, m as usize, seed, count as usize)?
                }
                _ => bail!("give a spec file or --random"),
            };
            compare(&specs)
        }
        Command::Probe { spec, format } => {
            let file = read_spec_file(&spec)?;
            let gens = file.probe_generators()?;
            let r = systems::nonstandard_probe(&gens, file.n)?;
            if format.text {
                println!("{}", report::probe_text(&r));
            } else {
                println!("{}", report::to_canonical_string(&report::probe_json(&r)));
            }
            Ok(0)
        }
        Command::Gen { family, n, m, seed } => {
            let spec = report::random_spec(family, n, m, seed)?;
            let value = serde_json::to_value(SpecFile::from_system_spec(&spec))?;
            println!("{}", report::to_canonical_string(&value));
            Ok(0)
        }
    }
}

fn compare(specs: &[SystemSpec]) -> anyhow::Result<u8> {
    let limits = OracleLimits::from_env();
    let rows: Vec<_> = specs
        .par_iter()
        .map(|spec| systems::analyze_with_oracle(spec, limits))
        .collect::<Result<_, _>>()?;
    println!("{:>5}  {:<18}  {:>10}  {:>10}  {:>9}  agree", "#", "class", "permutation", "oracle", "dim");
    let mut agreed = 0;
    let mut disagreements = Vec::new();
    for (idx, (spec, r)) in specs.iter().zip(&rows).enumerate() {
        let o = r.oracle.as_ref().expect("oracle ran");
        let verdict = |c: bool| if c { "ctrl" } else { "not-ctrl" };
        println!(
            "{idx:>5}  {:<18}  {:>10}  {:>10}  {:>4}/{:<4}  {}",
            r.method_class.to_string(),
            verdict(r.controllable),
            verdict(o.controllable),
            o.dim,
            o.target_dim,
            if o.agrees { "yes" } else { "NO" }
        );
        if o.agrees {
            agreed += 1;
        } else {
            disagreements.push((idx, SpecFile::from_system_spec(spec).canonical_json()));
        }
    }
    for (idx, json) in &disagreements {
        println!("disagreement #{idx}: {json}");
    }
    println!("{agreed}/{} agree", specs.len());
    Ok(if disagreements.is_empty() { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
