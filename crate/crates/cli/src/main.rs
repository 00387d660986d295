use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use superjordan_cli::eval::{eval_in, table_of};
use superjordan_cli::{run_suite, Construction, Suite, SuiteConfig};

const USAGE_EXIT: u8 = 3;

#[derive(Parser)]
#[command(name = "superjordan", version, about = "Exact checks on Jordan superalgebras over x^2 + y^4 = 1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exits 0 on pass, 1 on fail, 2 if inconclusive.
    Verify {
        #[arg(long, value_enum)]
        construction: Construction,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Samples per parity pattern, or number of random seeds and probes.
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        max_deg: usize,
        #[arg(long, default_value_t = 24)]
        window: usize,
        #[arg(long, default_value_t = 48)]
        max_window: usize,
        /// Degree bound for probes (default 16) and certificates (default 8).
        #[arg(long)]
        deg_bound: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Also write the report as JSON.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Evaluate an element expression and print its canonical form.
    Eval {
        #[arg(long, value_enum)]
        construction: Construction,
        expr: String,
    },
    /// Print the multiplication table on the generators of a construction.
    Table {
        #[arg(long, value_enum)]
        construction: Construction,
    },
}

/// Writes to stdout, stopping quietly if the reader has gone away.
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE_EXIT)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE_EXIT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Verify {
            construction,
            suite,
            trials,
            max_deg,
            window,
            max_window,
            deg_bound,
            seed,
            json,
        } => {
            let cfg = SuiteConfig {
                construction,
                suite,
                trials,
                max_deg,
                window,
                max_window,
                deg_bound,
                seed,
                json_path: json,
            };
            let report = match run_suite(&cfg) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            emit(&report.render());
            if let Some(path) = &cfg.json_path {
                if let Err(e) = std::fs::write(path, report.to_json()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(USAGE_EXIT);
                }
            }
            ExitCode::from(report.overall.exit_code())
        }
        Command::Eval { construction, expr } => match eval_in(construction, &expr) {
            Ok(s) => {
                emit(&format!("{s}\n"));
                ExitCode::SUCCESS
            }
            Err(e) => usage(e),
        },
        Command::Table { construction } => match table_of(construction) {
            Ok(rows) => {
                let text: String = rows.iter().map(|(a, b, c)| format!("{a} * {b} = {c}\n")).collect();
                emit(&text);
                ExitCode::SUCCESS
            }
            Err(e) => usage(e),
        },
    }
}
