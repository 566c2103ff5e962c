use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use rt_lens::args::Cli;
use rt_lens::commands::{configure_threads, run};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = configure_threads(cli.threads).and_then(|()| run(cli, &mut out));
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
