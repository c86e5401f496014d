use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fibration::{enk_factorization, lemma52_factorization, load_dataset};
use kirby::build_kirby;
use scenarios::{alexander_check, gurtas_relation, verify, verify_conjugation_identities, ScenarioError};
use surface_model::Arrangement;

#[derive(Parser)]
#[command(name = "enk-verify", about = "Handle-decomposition certificates for E(n)_K with K = T(2, 2h+1)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Gurtas,
    Conjugation,
    Alexander,
}

#[derive(Subcommand)]
enum Command {
    /// Certify the disk piece and report the closed handle vector.
    Verify {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dataset: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check a mapping-class relation on the dataset.
    Relations {
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dataset: Option<PathBuf>,
    },
    /// Print fibration and diagram invariants.
    Invariants {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dataset: Option<PathBuf>,
    },
}

enum Failure {
    Verification(String),
    Input(String),
}

impl From<ScenarioError> for Failure {
    fn from(e: ScenarioError) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Verification(e.to_string())
        }
    }
}

fn dataset(h: usize, n: usize, path: Option<&PathBuf>) -> Result<Arrangement, Failure> {
    load_dataset(h, n, path.map(PathBuf::as_path)).map_err(|e| Failure::Input(e.to_string()))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Verify { h, n, dataset: path, report, format } => {
            let ds = dataset(h, n, path.as_ref())?;
            let r = verify(h, n, &ds)?;
            let out = match format {
                Format::Json => r.to_json() + "\n",
                Format::Text => r.to_text(),
            };
            match report {
                Some(p) => std::fs::write(&p, out).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
                None => print!("{out}"),
            }
            Ok(r.certified())
        }
        Command::Relations { check, h, n, dataset: path } => {
            let ds = dataset(h, n, path.as_ref())?;
            match check {
                Check::Gurtas => {
                    let (homology, battery) = gurtas_relation(h, n, &ds)?;
                    println!("W({h},{n})^2 homology identity: {}", verdict(homology));
                    println!("W({h},{n})^2 fixes the battery: {}", verdict(battery));
                    Ok(homology && battery)
                }
                Check::Conjugation => {
                    let r = verify_conjugation_identities(h, n, &ds)?;
                    for c in &r.checks {
                        println!("{}: {}", c.name, verdict(c.holds));
                    }
                    Ok(r.holds())
                }
                Check::Alexander => {
                    let (p, ok) = alexander_check(h, &ds)?;
                    println!("torus-knot block characteristic polynomial: {p}");
                    println!("equals (t^{}+1)/(t+1) up to sign: {}", 2 * h + 1, verdict(ok));
                    Ok(ok)
                }
            }
        }
        Command::Invariants { h, n, dataset: path } => {
            let ds = dataset(h, n, path.as_ref())?;
            let enk = enk_factorization(h, n, &ds).map_err(ScenarioError::from)?;
            let l52 = lemma52_factorization(h, n, &ds).map_err(ScenarioError::from)?;
            for (name, f) in [("E(n)_K over the sphere", &enk), ("disk piece W.W'", &l52)] {
                let inv = f.invariants().map_err(ScenarioError::from)?;
                println!(
                    "{name}: genus {}, {} vanishing cycles, chi = {}, H1 = {}",
                    inv.genus, inv.cycles, inv.euler, inv.h1
                );
            }
            let k = build_kirby(&l52).map_err(ScenarioError::from)?;
            println!(
                "disk piece diagram: {} one-handles, {} two-handles, chi = {}, H1 = {}",
                k.one_handle_count(),
                k.two_handle_count(),
                k.euler(),
                k.h1()
            );
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verification(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
