use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use graded_o_cli::{run, JobSpec};

fn main() -> ExitCode {
    let job = match JobSpec::try_parse() {
        Ok(job) => job,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&job) {
        Ok(report) => {
            eprint!("{}", report.stderr);
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.stdout.as_bytes());
            ExitCode::from(report.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
