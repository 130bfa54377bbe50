use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pgq::app::{self, AppError, Check, CheckResult};

#[derive(Parser)]
#[command(version, about = "Sliding-hole groups on PG(2,q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the hole group at q, report its order and run every check
    Analyze {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        alpha: Option<usize>,
        /// Also write the report as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run selected checks
    Verify {
        #[arg(long)]
        q: u64,
        /// `all` or a comma-separated list
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// Cycle types of collinear generators on their line
    CycleTable {
        #[arg(long, value_delimiter = ',', default_values_t = [5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29])]
        q: Vec<u64>,
    },
    /// Serve the puzzle API
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

fn print_checks(checks: &[CheckResult]) {
    for c in checks {
        let status = serde_json::to_value(c.status).expect("plain enum");
        println!(
            "  {:<13} {:<20} {:>7} cases  {:>9.1} ms  {}",
            c.check.name(),
            status.as_str().unwrap_or_default(),
            c.cases,
            c.elapsed_ms,
            c.detail
        );
        if let Some(ce) = &c.counterexample {
            println!("    counterexample: {ce}");
        }
    }
}

fn run(cli: Cli) -> Result<bool, AppError> {
    match cli.command {
        Command::Analyze { q, alpha, json } => {
            let r = app::analyze(q, alpha)?;
            println!("q = {}, alpha = {}, |Omega| = {}", r.q, r.alpha, r.degree);
            println!(
                "generators: {} pairs, {} nonidentity, {} identity, {} used",
                r.generators_raw, r.generators_nonidentity, r.generators_identity, r.generators_used
            );
            println!("order: {} ({})", r.order, r.classification);
            if let Some(note) = &r.note {
                println!("note: {note}");
            }
            println!(
                "parity: {} even, {} odd; primitive: {}",
                r.parity.even, r.parity.odd, r.primitive
            );
            print_checks(&r.checks);
            println!(
                "time: {:.0} ms total ({:.0} ms chain)",
                r.timings.total_ms, r.timings.chain_ms
            );
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&r).expect("report serializes");
                std::fs::write(&path, text)
                    .map_err(|e| AppError::InvalidInput(format!("{}: {e}", path.display())))?;
            }
            Ok(r.all_checks_pass())
        }
        Command::Verify { q, checks } => {
            let checks = Check::parse_list(&checks)?;
            let results = app::verify(q, &checks)?;
            println!("q = {q}");
            print_checks(&results);
            Ok(results.iter().all(CheckResult::passed))
        }
        Command::CycleTable { q } => {
            let rows = app::cycle_table(&q)?;
            println!("{:>4}  {:<16} {:<16} {:>6} {:>8}", "q", "cycle type", "reference", "lines", "pairs");
            for r in &rows {
                let show = |t: &Option<pgq::permgrp::CycleType>| {
                    t.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
                };
                println!(
                    "{:>4}  {:<16} {:<16} {:>6} {:>8}{}",
                    r.q,
                    r.cycle_type.as_ref().map_or_else(|| "not uniform".into(), ToString::to_string),
                    show(&r.reference),
                    r.lines,
                    r.pairs,
                    if r.ok() { "" } else { "  MISMATCH" }
                );
            }
            Ok(rows.iter().all(app::CycleRow::ok))
        }
        Command::Serve { port } => {
            let addr = SocketAddr::from(([0, 0, 0, 0], port));
            let rt = tokio::runtime::Runtime::new()
                .map_err(|e| AppError::InvalidInput(e.to_string()))?;
            eprintln!("listening on http://{addr}");
            rt.block_on(app::server::serve(addr))
                .map_err(|e| AppError::InvalidInput(e.to_string()))?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
