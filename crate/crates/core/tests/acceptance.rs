use std::process::ExitCode;

use permspectra::verify::{verify_all, VerifyConfig, CRITERIA};

fn main() -> ExitCode {
    let reports = match verify_all(&VerifyConfig::default()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("criteria could not be evaluated: {e}");
            return ExitCode::FAILURE;
        }
    };
    for r in &reports {
        println!("{}", r.line());
    }
    if reports.len() == CRITERIA.len() && reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
