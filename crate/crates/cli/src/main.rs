//! `moufang` — classify finite multiplication tables, extract and verify
//! translation triples, and rebuild Moufang loops from them.
//!
//! Exit codes are stable across subcommands: 0 when every requested check
//! passed, 1 when a check failed (the law and its minimal witness are
//! printed), 2 on usage or parse errors.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use moufang_cli::format::{self, ParseError};
use moufang_core::axioms::{classify, StructureClass};
use moufang_core::triality::{self, TranslationTriple, TrialityError};
use moufang_core::{fixtures, CayleyTable};

#[derive(Parser)]
#[command(
    name = "moufang",
    version,
    about = "Finite Moufang loop toolkit: axiom ladder, translation triples, reconstruction",
    after_help = "Pass `-` as a file name to read from standard input."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Climb the ladder groupoid -> quasigroup -> loop -> IP-loop ->
    /// Moufang loop -> group; exits 0 when the table is at least Moufang
    Classify {
        /// Cayley table file
        table: String,
    },
    /// Extract the translation triple (S, T, P) of a Moufang loop
    Extract {
        /// Cayley table file
        table: String,
    },
    /// Verify the reconstruction hypotheses of a triple against a table
    Verify {
        /// Triple file
        triple: String,
        /// Cayley table file
        table: String,
    },
    /// Rebuild the multiplication table from a bare triple
    Reconstruct {
        /// Triple file
        triple: String,
    },
    /// Extract a triple and rebuild the table, checking for an exact match
    Roundtrip {
        /// Cayley table file
        table: String,
    },
    /// Verify the hypotheses and run every derived proposition
    Suite {
        /// Cayley table file
        table: String,
        /// Verify this triple instead of extracting one from the table
        #[arg(long)]
        triple: Option<String>,
    },
    /// Write a fixture table to standard output
    #[command(subcommand)]
    Generate(Generate),
}

#[derive(Subcommand)]
enum Generate {
    /// Cyclic group of order N
    Cyclic { n: usize },
    /// Symmetric group on three points, order 6
    S3,
    /// Chein double of S3, the smallest nonassociative Moufang loop
    CheinS3,
    /// Deterministic random loop of order N with unit 0
    Random { n: usize, seed: u64 },
}

enum CliError {
    Io { path: String, message: String },
    Parse { path: String, error: ParseError },
    Invalid(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
            CliError::Parse { path, error } => write!(f, "{path}: {error}"),
            CliError::Invalid(message) => write!(f, "{message}"),
        }
    }
}

fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io {
                path: "<stdin>".into(),
                message: e.to_string(),
            })?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.into(),
            message: e.to_string(),
        })
    }
}

fn load_table(path: &str) -> Result<CayleyTable, CliError> {
    format::parse_cayley(&read_source(path)?).map_err(|error| CliError::Parse {
        path: path.into(),
        error,
    })
}

fn load_triple(path: &str) -> Result<TranslationTriple, CliError> {
    format::parse_triple(&read_source(path)?).map_err(|error| CliError::Parse {
        path: path.into(),
        error,
    })
}

fn structural(err: TrialityError) -> CliError {
    CliError::Invalid(err.to_string())
}

fn run_classify(table: &str) -> Result<bool, CliError> {
    let tbl = load_table(table)?;
    let classification = classify(&tbl);
    match classification.class {
        StructureClass::MoufangLoop => println!("Moufang loop (non-associative)"),
        other => println!("{other}"),
    }
    if let Some(blocking) = &classification.blocking {
        println!("{blocking}");
    }
    Ok(classification.class >= StructureClass::MoufangLoop)
}

fn run_extract(table: &str) -> Result<bool, CliError> {
    let tbl = load_table(table)?;
    match triality::extract_triple(&tbl) {
        Ok(triple) => {
            print!("{}", format::emit_triple(&triple));
            Ok(true)
        }
        Err(TrialityError::ExtractionRefused { report }) => {
            println!("{report}");
            Ok(false)
        }
        Err(other) => Err(structural(other)),
    }
}

fn run_verify(triple: &str, table: &str) -> Result<bool, CliError> {
    let triple = load_triple(triple)?;
    let tbl = load_table(table)?;
    let report = triality::verify_hypotheses(&triple, &tbl).map_err(structural)?;
    for r in report.reports() {
        println!("{r}");
    }
    println!(
        "hypotheses: {}",
        if report.overall { "PASS" } else { "FAIL" }
    );
    Ok(report.overall)
}

fn run_reconstruct(triple: &str) -> Result<bool, CliError> {
    let triple = load_triple(triple)?;
    match triality::reconstruct_multiplication(&triple) {
        Ok(tbl) => {
            print!("{}", format::emit_cayley(&tbl));
            Ok(true)
        }
        Err(
            err @ (TrialityError::MissingBarCandidate { .. }
            | TrialityError::SeparationViolated { .. }
            | TrialityError::HypothesesNotSatisfied { .. }
            | TrialityError::ReconstructionFailed { .. }),
        ) => {
            println!("FAIL {err}");
            Ok(false)
        }
        Err(other) => Err(structural(other)),
    }
}

fn run_roundtrip(table: &str) -> Result<bool, CliError> {
    let tbl = load_table(table)?;
    let triple = match triality::extract_triple(&tbl) {
        Ok(triple) => triple,
        Err(TrialityError::ExtractionRefused { report }) => {
            println!("{report}");
            return Ok(false);
        }
        Err(other) => return Err(structural(other)),
    };
    match triality::reconstruct_multiplication(&triple) {
        Ok(rebuilt) if rebuilt == tbl => {
            println!("round-trip OK");
            Ok(true)
        }
        Ok(rebuilt) => {
            let n = tbl.order();
            let (g, h) = (0..n)
                .flat_map(|g| (0..n).map(move |h| (g, h)))
                .find(|&(g, h)| tbl.product(g, h) != rebuilt.product(g, h))
                .expect("tables differ");
            println!(
                "round-trip mismatch at ({g}, {h}): table has {}, reconstruction has {}",
                tbl.product(g, h),
                rebuilt.product(g, h)
            );
            Ok(false)
        }
        Err(err) => {
            println!("FAIL {err}");
            Ok(false)
        }
    }
}

fn run_suite(table: &str, triple: Option<&str>) -> Result<bool, CliError> {
    let tbl = load_table(table)?;
    let triple = match triple {
        Some(path) => load_triple(path)?,
        None => match triality::extract_triple(&tbl) {
            Ok(triple) => triple,
            Err(TrialityError::ExtractionRefused { report }) => {
                println!("{report}");
                return Ok(false);
            }
            Err(other) => return Err(structural(other)),
        },
    };
    let hypotheses = triality::verify_hypotheses(&triple, &tbl).map_err(structural)?;
    for r in hypotheses.reports() {
        println!("{r}");
    }
    if !hypotheses.overall {
        println!("hypotheses: FAIL");
        return Ok(false);
    }
    let reports = triality::run_proposition_suite(&triple, &tbl).map_err(structural)?;
    for r in &reports {
        println!("{r}");
    }
    let all = reports.iter().all(|r| r.passed);
    println!(
        "suite: {} ({} hypotheses, {} propositions)",
        if all { "PASS" } else { "FAIL" },
        2 + hypotheses.conjugation.len() + 1,
        reports.len()
    );
    Ok(all)
}

fn run_generate(what: Generate) -> Result<bool, CliError> {
    let tbl = match what {
        Generate::Cyclic { n } => {
            fixtures::cyclic_group(n).map_err(|e| CliError::Invalid(e.to_string()))?
        }
        Generate::S3 => fixtures::symmetric_group_3(),
        Generate::CheinS3 => {
            fixtures::chein_double(&fixtures::symmetric_group_3()).expect("S3 is a group")
        }
        Generate::Random { n, seed } => {
            fixtures::random_loop(n, seed).map_err(|e| CliError::Invalid(e.to_string()))?
        }
    };
    print!("{}", format::emit_cayley(&tbl));
    Ok(true)
}

fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Classify { table } => run_classify(&table),
        Command::Extract { table } => run_extract(&table),
        Command::Verify { triple, table } => run_verify(&triple, &table),
        Command::Reconstruct { triple } => run_reconstruct(&triple),
        Command::Roundtrip { table } => run_roundtrip(&table),
        Command::Suite { table, triple } => run_suite(&table, triple.as_deref()),
        Command::Generate(what) => run_generate(what),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
