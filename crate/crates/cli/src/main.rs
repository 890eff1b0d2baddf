//! `hsnum`: exact Hurwitz and Hurwitz-Severi number calculator.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 usage, 3 cap exceeded,
//! 4 engine disagreement, 5 unbendable (or degenerate degree-1 projection),
//! 6 empty variety.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use hsnum_core::arith::factorial;
use hsnum_core::severi::EngineProvider;
use hsnum_core::verify::{all_pass, reference_checks};
use hsnum_core::{
    classify, dims, hs_number, hurwitz_all_engines, hurwitz_simple_capped, node_count,
    HurwitzError, HurwitzProvider, HurwitzQuery, Kind, SeveriError, SeveriTriple, TupleCount,
};

use hsnum_cli::config::{resolve, ConfigError, MethodArg, Settings, CAP_ENV_VAR};
use hsnum_cli::record::{
    check_csv_row, check_md_rows, CheckRecord, EngineValue, HurwitzRecord, OutputRecord,
    RationalParts, CHECK_CSV_HEADER, CSV_HEADER, HURWITZ_CSV_HEADER, MD_HEADER, MD_RULE,
};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP_EXCEEDED: u8 = 3;
const EXIT_DISAGREEMENT: u8 = 4;
const EXIT_UNBENDABLE: u8 = 5;
const EXIT_EMPTY: u8 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Parser)]
#[command(
    name = "hsnum",
    version,
    about = "Exact Hurwitz numbers and Hurwitz-Severi numbers for plane-curve triples"
)]
struct Cli {
    /// Output format for records
    #[arg(long, global = true, value_enum, default_value = "md")]
    format: Format,

    /// Hurwitz engine: auto cross-checks small instances, all runs every
    /// feasible engine and compares
    #[arg(long, global = true, value_enum)]
    method: Option<MethodArg>,

    /// Ceiling on C(d,2)^r for the brute-force engine
    #[arg(long, global = true)]
    cap: Option<u64>,

    /// Fail (exit 3) if any table row exceeds the brute-force cap
    #[arg(long, global = true)]
    strict: bool,

    /// Config file with operational knobs (default: ./hsnum.toml if present)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a triple (g, d, l): bendability, dimensions, node count
    Classify {
        g: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        l: u32,
    },
    /// Compute the ordinary Hurwitz number h_{g,1^d} and the cover count h/d!
    Hurwitz {
        g: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
    },
    /// Compute the Hurwitz-Severi number of a triple (g, d, l)
    Hs {
        g: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        l: u32,
    },
    /// Emit one record per triple with g <= MAX_G, d <= MAX_D, l <= MAX_L
    Table {
        max_g: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        max_d: u32,
        max_l: u32,
    },
    /// Recompute the built-in reference values and print a pass/fail table
    #[command(name = "verify-paper")]
    VerifyPaper,
}

/// Provider that runs every feasible engine and demands agreement.
struct AllEnginesProvider {
    cap: u64,
}

impl HurwitzProvider for AllEnginesProvider {
    fn hurwitz(&self, g: u32, d: u32) -> Result<TupleCount, HurwitzError> {
        hurwitz_all_engines(HurwitzQuery::new(g, d), self.cap).map(|(_, consensus)| consensus)
    }
}

fn provider_for(settings: Settings) -> Box<dyn HurwitzProvider> {
    match settings.method.library_method() {
        Some(method) => Box::new(EngineProvider {
            method,
            cap: settings.cap,
        }),
        None => Box::new(AllEnginesProvider { cap: settings.cap }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env_cap = std::env::var(CAP_ENV_VAR).ok();
    let settings = match resolve(
        cli.cap,
        cli.method,
        cli.strict,
        cli.config.as_deref(),
        env_cap.as_deref(),
    ) {
        Ok(settings) => settings,
        Err(err) => return usage_error(&err),
    };
    match cli.command {
        Command::Classify { g, d, l } => cmd_classify(g, d, l, cli.format),
        Command::Hurwitz { g, d } => cmd_hurwitz(g, d, cli.format, settings),
        Command::Hs { g, d, l } => cmd_hs(g, d, l, cli.format, settings),
        Command::Table { max_g, max_d, max_l } => {
            cmd_table(max_g, max_d, max_l, cli.format, settings)
        }
        Command::VerifyPaper => cmd_verify_paper(cli.format, settings),
    }
}

fn usage_error(err: &ConfigError) -> ExitCode {
    eprintln!("hsnum: {err}");
    ExitCode::from(EXIT_USAGE)
}

/// Status of a row for which no value was computed.
fn bare_status(t: SeveriTriple) -> &'static str {
    let c = classify(t);
    if !c.nonempty {
        "empty"
    } else if c.kind == Kind::Unbendable {
        "unbendable"
    } else if t.d == 1 {
        "degenerate"
    } else {
        "ok"
    }
}

fn base_record(t: SeveriTriple) -> OutputRecord {
    let c = classify(t);
    let dd = dims(t);
    OutputRecord {
        g: t.g,
        d: t.d,
        l: t.l,
        kind: c.kind.as_str().to_string(),
        strongly: c.strongly_bendable,
        nonempty: c.nonempty,
        nodes: node_count(t),
        dim_w: dd.variety,
        dim_w_tilde: dd.orbit_space,
        dim_p: dd.target,
        h: None,
        hs: None,
        status: bare_status(t).to_string(),
        warnings: Vec::new(),
    }
}

fn print_single_record(record: &OutputRecord, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(record).expect("serialize")),
        Format::Csv => {
            println!("{CSV_HEADER}");
            println!("{}", record.csv_row());
        }
        Format::Md => {
            println!("{MD_HEADER}");
            println!("{MD_RULE}");
            println!("{}", record.md_row());
        }
    }
}

fn cmd_classify(g: u32, d: u32, l: u32, format: Format) -> ExitCode {
    let record = base_record(SeveriTriple::new(g, d, l));
    print_single_record(&record, format);
    ExitCode::SUCCESS
}

fn hurwitz_exit(err: &HurwitzError) -> ExitCode {
    eprintln!("hsnum: {err}");
    match err {
        HurwitzError::CapExceeded { .. } => ExitCode::from(EXIT_CAP_EXCEEDED),
        HurwitzError::MethodDisagreement { .. } => ExitCode::from(EXIT_DISAGREEMENT),
    }
}

fn cmd_hurwitz(g: u32, d: u32, format: Format, settings: Settings) -> ExitCode {
    let query = HurwitzQuery::new(g, d);
    let engines: Vec<EngineValue>;
    let h;
    match settings.method.library_method() {
        Some(method) => match hurwitz_simple_capped(query, method, settings.cap) {
            Ok(count) => {
                engines = vec![EngineValue {
                    engine: settings.method.name().to_string(),
                    h: count.value.to_string(),
                }];
                h = count.value;
            }
            Err(err) => return hurwitz_exit(&err),
        },
        None => match hurwitz_all_engines(query, settings.cap) {
            Ok((results, consensus)) => {
                engines = results
                    .into_iter()
                    .map(|(engine, value)| EngineValue {
                        engine: engine.to_string(),
                        h: value.to_string(),
                    })
                    .collect();
                h = consensus.value;
            }
            Err(err) => return hurwitz_exit(&err),
        },
    }
    let pair = BigRational::new(h.clone(), factorial(d as u64));
    let record = HurwitzRecord {
        g,
        d,
        r: query.transpositions(),
        method: settings.method.name().to_string(),
        engines,
        h: h.to_string(),
        pair: RationalParts::from_rational(&pair),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string(&record).expect("serialize")),
        Format::Csv => {
            println!("{HURWITZ_CSV_HEADER}");
            println!("{}", record.csv_row());
        }
        Format::Md => println!("{}", record.md_table()),
    }
    ExitCode::SUCCESS
}

fn severi_exit(err: &SeveriError) -> ExitCode {
    match err {
        SeveriError::Hurwitz(inner) => hurwitz_exit(inner),
        SeveriError::EmptyVariety { .. } => {
            eprintln!("hsnum: {err}");
            ExitCode::from(EXIT_EMPTY)
        }
        SeveriError::UnbendableUnsupported { .. } | SeveriError::DegenerateProjection { .. } => {
            eprintln!("hsnum: {err}");
            ExitCode::from(EXIT_UNBENDABLE)
        }
    }
}

fn cmd_hs(g: u32, d: u32, l: u32, format: Format, settings: Settings) -> ExitCode {
    let triple = SeveriTriple::new(g, d, l);
    let provider = provider_for(settings);
    match hs_number(triple, provider.as_ref()) {
        Ok(hs) => {
            let mut record = base_record(triple);
            record.h = Some(hs.hurwitz_input.value.to_string());
            record.hs = Some(RationalParts::from_rational(&hs.value));
            record.status = "ok".to_string();
            record.warnings = hs.warnings;
            print_single_record(&record, format);
            ExitCode::SUCCESS
        }
        Err(err) => severi_exit(&err),
    }
}

fn cmd_table(max_g: u32, max_d: u32, max_l: u32, format: Format, settings: Settings) -> ExitCode {
    let provider = provider_for(settings);
    let mut records = Vec::new();
    let mut any_capped = false;
    // Deterministic row order: lexicographic in (d, l, g).
    for d in 1..=max_d {
        for l in 0..=max_l {
            for g in 0..=max_g {
                let triple = SeveriTriple::new(g, d, l);
                let mut record = base_record(triple);
                if record.status == "ok" {
                    match hs_number(triple, provider.as_ref()) {
                        Ok(hs) => {
                            record.h = Some(hs.hurwitz_input.value.to_string());
                            record.hs = Some(RationalParts::from_rational(&hs.value));
                            record.warnings = hs.warnings;
                        }
                        Err(SeveriError::Hurwitz(HurwitzError::CapExceeded { .. })) => {
                            record.status = "cap_exceeded".to_string();
                            any_capped = true;
                        }
                        Err(err) => return severi_exit(&err),
                    }
                }
                records.push(record);
            }
        }
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string(&records).expect("serialize")),
        Format::Csv => {
            println!("{CSV_HEADER}");
            for record in &records {
                println!("{}", record.csv_row());
            }
        }
        Format::Md => {
            println!("{MD_HEADER}");
            println!("{MD_RULE}");
            for record in &records {
                println!("{}", record.md_row());
            }
        }
    }
    if any_capped && settings.strict {
        eprintln!("hsnum: some rows exceeded the brute-force cap (strict mode)");
        ExitCode::from(EXIT_CAP_EXCEEDED)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_verify_paper(format: Format, settings: Settings) -> ExitCode {
    let provider = provider_for(settings);
    let reports = reference_checks(provider.as_ref());
    let checks: Vec<CheckRecord> = reports.iter().map(CheckRecord::from_report).collect();
    match format {
        Format::Json => println!("{}", serde_json::to_string(&checks).expect("serialize")),
        Format::Csv => {
            println!("{CHECK_CSV_HEADER}");
            for check in &checks {
                println!("{}", check_csv_row(check));
            }
        }
        Format::Md => {
            print!("{}", check_md_rows(&checks));
            let passed = checks.iter().filter(|c| c.pass).count();
            println!();
            println!("{passed}/{} checks passed", checks.len());
        }
    }
    if all_pass(&reports) {
        ExitCode::SUCCESS
    } else {
        eprintln!("hsnum: verification failed");
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}
