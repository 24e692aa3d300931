use clap::error::ErrorKind;
use clap::Parser;

use zerosum_cli::args::Cli;
use zerosum_cli::commands;

/// Exit codes: 0 success with zero failures, 1 usage/resource/input errors,
/// 2 verification failure (a counterexample).
fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match commands::run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.report_text);
            std::process::exit(if outcome.failed > 0 { 2 } else { 0 });
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}
