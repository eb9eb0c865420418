// The non-trivial families D and B, the two cross-intersecting pairs, and
// their closed-form sizes.

use permspectra::families::{
    build_b_alternating, build_b_size, build_cross_pair_min, build_cross_pair_prod, build_cross_prod_sizes,
    build_d, build_d_size, contained_in_t_coset, default_cross_tau, double_translate, is_cross_t_intersecting,
    is_t_intersecting, pair_isomorphic,
};
use permspectra::Permutation;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (n, t) in [(5, 1), (6, 1), (6, 2)] {
        let d = build_d(n, t)?;
        assert!(is_t_intersecting(&d, t) && contained_in_t_coset(&d, t).is_none());
        println!("|D({n},{t})| = {} = {}", d.len(), build_d_size(n, t));
    }
    let b = build_b_alternating(6, 1)?;
    println!("|B(6,1)| = {} = {}, all even: {}", b.len(), build_b_size(6, 1), b.all_even());

    let n = 5;
    let (f, g) = build_cross_pair_min(n, 1, &default_cross_tau(n, 1)?)?;
    println!("min pair: {} x {}, cross-intersecting {}", f.len(), g.len(), is_cross_t_intersecting(&f, &g, 1)?);
    let (a, c) = build_cross_pair_prod(n, 1)?;
    println!("product pair: {} x {} (closed form {:?})", a.len(), c.len(), build_cross_prod_sizes(n, 1));

    let pi = Permutation::parse(n, "(1 3)(2 5)")?;
    let rho = Permutation::parse(n, "(2 4 5)")?;
    let (f2, g2) = (double_translate(&f, &pi, &rho)?, double_translate(&g, &pi, &rho)?);
    let witness = pair_isomorphic((&f2, &g2), (&f, &g))?.ok_or("translate not recognised")?;
    println!("translated pair recovered with pi = {}, rho = {}", witness.0, witness.1);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
