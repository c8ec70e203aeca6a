use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rooted_cubes::verify::{run_named, CHECK_NAMES};
use rooted_cubes::{cubes, Family};
use rooted_cubes_cli::analyze;

/// Exit codes: 0 success, 1 a check found failures, 2 usage or input error.
const EXIT_FAILURES: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "rooted-cubes",
    version,
    about = "Cubical sets of set families and their homology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a JSON analysis of the family in FILE.
    Analyze { file: PathBuf },
    /// Run a named verification sweep and print its JSON report.
    Verify {
        /// One of the check names, or `all`.
        check: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the cubical set of the family in FILE as Wavefront OBJ (n ≤ 3).
    ExportObj {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn read_family(path: &Path) -> Result<Family, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Family::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Analyze { file } => {
            let family = read_family(&file)?;
            let report = analyze(&family).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?);
            Ok(0)
        }
        Command::Verify {
            check,
            n,
            samples,
            seed,
        } => {
            let names: Vec<&str> = if check == "all" {
                CHECK_NAMES.to_vec()
            } else if CHECK_NAMES.contains(&check.as_str()) {
                vec![check.as_str()]
            } else {
                return Err(format!(
                    "unknown check '{check}'; expected one of {} or all",
                    CHECK_NAMES.join(", ")
                ));
            };
            let mut reports = Vec::with_capacity(names.len());
            for name in names {
                let report = run_named(name, n, samples, seed).map_err(|e| format!("{name}: {e}"))?;
                eprintln!(
                    "{name} n={n}: {} tested, {} failures ({} ms)",
                    report.families_tested,
                    report.failures.len(),
                    report.elapsed.as_millis()
                );
                reports.push(report);
            }
            for report in &reports {
                println!("{}", report.to_json());
            }
            Ok(if reports.iter().all(|r| r.passed()) {
                0
            } else {
                EXIT_FAILURES
            })
        }
        Command::ExportObj { file, out } => {
            let family = read_family(&file)?;
            let obj = cubes(&family).to_obj().map_err(|e| e.to_string())?;
            fs::write(&out, obj).map_err(|e| format!("{}: {e}", out.display()))?;
            eprintln!("wrote {}", out.display());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
