// Hoffman and cross-intersecting bounds for the derangement graph, and the
// stability bound for a family off the extremal ones.

use permspectra::families::build_d;
use permspectra::rational::{q, to_string};
use permspectra::spectral::{cayley_spectrum, cross_bound, hoffman_bound, stability_distance_bound};
use permspectra::WeightedCayleySpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = WeightedCayleySpec::uniform_derangement(5)?;
    let table = cayley_spectrum(&spec);
    let report = hoffman_bound(&table)?;
    println!(
        "S_5: |X| <= {} (lambda_max {}, lambda_min {}, attained on {:?})",
        to_string(&report.bound),
        to_string(&report.lambda_max),
        to_string(&report.lambda_min),
        report.achieving_partitions
    );
    let cross = cross_bound(&table)?;
    println!("cross-intersecting pairs: |X||Y| <= {}", to_string(&cross.bound));

    let d = build_d(5, 1)?;
    let alpha = q(d.len() as i64, 120);
    let bound = stability_distance_bound(&table, &alpha)?;
    println!("|D| = {}, squared distance from U at most {}", d.len(), to_string(&bound));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
