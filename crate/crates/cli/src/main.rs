use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};

use per4_cli::{execute, Cli, EXIT_ERROR};

fn write(path: &std::path::Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn run(cli: &Cli) -> Result<i32, String> {
    let out = execute(&cli.command)?;
    let json = out.document.to_json();
    match &cli.json_out {
        Some(p) => write(p, &json)?,
        None => print!("{json}"),
    }
    if let (Some(p), Some(svg)) = (&cli.svg_out, &out.svg) {
        write(p, svg)?;
    }
    if let Some(s) = &out.document.summary {
        eprintln!(
            "{} passed, {} failed, {} flagged",
            s.pass, s.fail, s.flagged
        );
        for name in out.document.failed() {
            eprintln!("failed: {name}");
        }
    }
    Ok(out.exit)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit()
        }
        Err(e) => {
            let _ = e.print();
            eprintln!("\n{}", Cli::command().render_usage());
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };
    let code =
        std::panic::catch_unwind(|| run(&cli)).unwrap_or_else(|_| Err("internal error".into()));
    match code {
        Ok(c) => ExitCode::from(c as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
