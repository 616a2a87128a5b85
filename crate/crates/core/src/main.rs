use std::io::Write;

use clap::Parser;

use kirchhoff::cli::{execute, exit_code, report_exit_code, Cli};

fn main() {
    let cli = Cli::parse();
    let code = match execute(&cli.command) {
        Ok(doc) => {
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{}", doc.to_json());
            report_exit_code(&doc)
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    std::process::exit(code);
}
