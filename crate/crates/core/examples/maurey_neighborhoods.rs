// Transposition-graph neighbourhoods of a coset against the Maurey lower
// bound, evaluated with rigorous rational enclosures.

use permspectra::families::{t_coset, CosetSpec};
use permspectra::rational::to_string;
use permspectra::search::maurey_check;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = t_coset(5, &CosetSpec::fixing(5, 2)?)?;
    let report = maurey_check(&x)?;
    println!("|X| = {}, h0 >= {}", report.size, to_string(&report.h0_lower));
    for row in &report.rows {
        println!("h = {}: |N_h| = {}, bound below {}", row.h, row.exact, to_string(&row.bound_upper));
    }
    assert!(report.holds());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
