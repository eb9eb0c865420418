// Eigenvalues of the uniformly weighted derangement graph, one per
// irreducible character.

use permspectra::permcore::derangement_counts;
use permspectra::render;
use permspectra::spectral::{cayley_spectrum, omega};
use permspectra::WeightedCayleySpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 4..=6 {
        let counts = derangement_counts(n);
        let spec = WeightedCayleySpec::uniform_derangement(n)?;
        let table = cayley_spectrum(&spec);
        println!("n = {n}: d = {}, e = {}, o = {}", counts.d, counts.e, counts.o);
        print!("{}", render::spectrum_csv(&table)?);
        assert_eq!(table.lambda_min(), &omega(n, 1)?);
        assert_eq!(table.total_multiplicity(), permspectra::partitions::factorial(n));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
