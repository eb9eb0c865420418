// Projections of indicator functions onto isotypic components and onto
// V_t, the span of the t-coset indicators.

use permspectra::families::{build_d, t_coset, CosetSpec};
use permspectra::rational::to_string;
use permspectra::{Guardrail, Projector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 5;
    let projector = Projector::new(n, &Guardrail::default())?;

    let coset = t_coset(n, &CosetSpec::new(n, vec![(2, 4)])?)?.indicator()?;
    assert_eq!(projector.project_v_t(&coset, 1)?, coset);

    let d = build_d(n, 1)?.indicator()?;
    for alpha in ["[5]", "[4,1]", "[3,2]"] {
        let p = projector.isotypic_projection(&d, &alpha.parse()?)?;
        println!("||P_{alpha}(v_D)||^2 = {}", to_string(&p.norm_sq()));
    }
    println!("residual outside V_1: {}", to_string(&projector.residual_norm_sq(&d, 1)?));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
