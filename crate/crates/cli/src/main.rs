use std::process::ExitCode;

use clap::{Parser, Subcommand};
use macbax_cli::job::{CliError, JobArgs};
use macbax_cli::suites::Suite;
use macbax_cli::{commands, suites};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "macbax", version, about = "Macdonald, q-Whittaker and Jack polynomials and their Baxter operators")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand a family polynomial in the monomial basis.
    Expand(JobArgs),
    /// Hamiltonian eigenvalue table.
    Table(JobArgs),
    /// Run a verification suite; exit 1 on failure.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Negative control: perturb the expected value of the first case.
        #[arg(long)]
        debug_perturb: bool,
        #[command(flatten)]
        job: JobArgs,
    },
    /// Baxter eigenvalues, or z-type operator coefficients with --z-order.
    Baxter(JobArgs),
}

fn emit(v: &Value, job: &JobArgs) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(v).expect("json") + "\n";
    match &job.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Invalid(format!("{}: {}", path.display(), e))),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Expand(j) => commands::expand(j).and_then(|v| emit(&v, j)).map(|_| true),
        Cmd::Table(j) => commands::table(j).and_then(|v| emit(&v, j)).map(|_| true),
        Cmd::Baxter(j) => commands::baxter(j).and_then(|v| emit(&v, j)).map(|_| true),
        Cmd::Verify { suite, debug_perturb, job } => suites::run(*suite, job, *debug_perturb).and_then(|(v, ok)| {
            emit(&v, job)?;
            if !ok {
                if let Some(w) = v.get("first_failure") {
                    eprintln!("verification failed: {}", w);
                }
            }
            Ok(ok)
        }),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("macbax: {}", e);
            ExitCode::from(2)
        }
    }
}
