// Class weightings whose fat eigenvalues sit at omega(n, t), found by
// exact linear algebra; each gives the Hoffman bound (n - t)!.

use permspectra::partitions::factorial;
use permspectra::rational::{qi, to_string};
use permspectra::spectral::{cayley_spectrum, hoffman_bound, solve_weights, WeightSolution};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (n, t) in [(4, 1), (5, 2), (6, 2), (7, 3)] {
        match solve_weights(n, t)? {
            WeightSolution::Feasible { spec, strict } => {
                let report = hoffman_bound(&cayley_spectrum(&spec))?;
                assert_eq!(report.bound, qi(factorial(n - t)));
                let weights: Vec<String> = spec
                    .weights
                    .iter()
                    .map(|(c, w)| format!("{c}:{}", to_string(w)))
                    .collect();
                println!("n={n} t={t} strict={strict} bound={} weights {}", report.bound, weights.join(" "));
            }
            WeightSolution::Infeasible {
                partition,
                eigenvalue,
                exhaustive,
            } => {
                println!(
                    "n={n} t={t}: no admissible weighting ({partition} at {}, exhaustive={exhaustive})",
                    to_string(&eigenvalue)
                );
            }
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
