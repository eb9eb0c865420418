// Runs the acceptance criteria and prints one line per criterion.

use permspectra::verify::{verify_all, VerifyConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = VerifyConfig {
        only: Some(6),
        ..VerifyConfig::default()
    };
    for report in verify_all(&config)? {
        println!("{}", report.line());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
