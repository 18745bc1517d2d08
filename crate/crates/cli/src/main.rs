use clap::Parser;

use simspec_cli::{emit_report, run, RunConfig};

fn main() {
    let config = RunConfig::parse();
    let code = match run(&config).and_then(|(report, status)| {
        emit_report(&report, config.format, config.out.as_deref())?;
        Ok(status)
    }) {
        Ok(status) => {
            if status == simspec_cli::Status::Incomplete {
                eprintln!("simspec: budget exhausted; the report is partial");
            }
            status.code()
        }
        Err(e) => {
            eprintln!("simspec: {:#}", e);
            1
        }
    };
    std::process::exit(code);
}
