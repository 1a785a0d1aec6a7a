mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{Failure, Output};

fn run(cli: &Cli) -> Result<Output, Failure> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Failure::Input("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Input(e.to_string()))?;
    }
    match &cli.command {
        Command::Factor(a) => commands::factor(a),
        Command::Code(a) => commands::code(a),
        Command::Verify(a) => commands::verify(a),
        Command::Enumerate(a) => commands::enumerate(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (stdout, failure) = match run(&cli) {
        Ok(out) => (out.stdout, out.failure),
        Err(f) => (String::new(), Some(f)),
    };
    let mut lock = std::io::stdout().lock();
    let _ = lock.write_all(stdout.as_bytes());
    let _ = lock.flush();
    match failure {
        None => ExitCode::SUCCESS,
        Some(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
