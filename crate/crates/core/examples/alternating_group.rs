// A_n: restricted spectra, the transposition isomorphism between the two
// Cayley graphs, and the non-negative W_1 function.

use permspectra::families::verify_w1_counterexample;
use permspectra::rational::to_string;
use permspectra::spectral::{an_restriction, hoffman_bound, phi_isomorphism_check};
use permspectra::{Guardrail, WeightedCayleySpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let guard = Guardrail::default();
    for n in [5, 6] {
        let spec = WeightedCayleySpec::uniform_even_derangement(n)?;
        let table = an_restriction(&spec)?;
        let report = hoffman_bound(&table)?;
        println!("A_{n}: {} eigenvalue classes, bound {}", table.entries.len(), to_string(&report.bound));
        let phi = phi_isomorphism_check(&spec, &guard)?;
        println!("  phi check over {} pairs: {}", phi.pairs_checked, phi.passed());
    }
    for n in 4..=6 {
        let w1 = verify_w1_counterexample(n, &guard)?;
        println!(
            "W_1 at n={n}: min on A_n {}, value at (1 2) {}",
            to_string(&w1.min_on_an),
            to_string(&w1.value_at_transposition)
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
