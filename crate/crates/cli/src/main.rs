//! `parsep`: partition class counts, the staircase bijection, and exact
//! q-series identity checks as reproducible batch commands.

mod args;
mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command};
use report::RunReport;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let result = match &cli.command {
        Command::Count(q) => commands::run_count(q, cli.limit),
        Command::List(q) => commands::run_list(q, cli.limit),
        Command::Map(m) => commands::run_map(m),
        Command::Verify(v) => commands::run_verify(v, cli.limit, cli.jobs),
        Command::Series(s) => commands::run_series(s, cli.limit),
        Command::Identity(i) => commands::run_identity(i, cli.limit),
    };
    match result {
        Ok(mut out) => {
            out.parameters.insert("jobs".into(), cli.jobs.to_string());
            if let Some(seed) = cli.seed {
                out.parameters.insert("seed".into(), seed.to_string());
            }
            if cli.json {
                let run = RunReport {
                    command: cli.command.name().to_string(),
                    elapsed_ms: started.elapsed().as_millis(),
                    parameters: out.parameters,
                    pass: out.pass,
                    results: out.results,
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&run).expect("report serializes")
                );
            } else {
                print!("{}", out.text);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
