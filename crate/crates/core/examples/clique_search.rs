// Exact maximum t-intersecting families by clique search, including the
// largest families outside every t-coset.

use std::time::Duration;

use permspectra::families::build_d_size;
use permspectra::search::{max_nontrivial_t_intersecting, max_t_intersecting, SearchOptions};
use permspectra::{GroupMode, Guardrail};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let guard = Guardrail::default();
    let options = SearchOptions {
        timeout: Some(Duration::from_secs(30)),
    };
    for (n, t, group) in [(4, 1, GroupMode::Sym), (5, 1, GroupMode::Sym), (5, 2, GroupMode::Sym), (5, 1, GroupMode::Alt)] {
        let r = max_t_intersecting(n, t, group, &guard, options)?;
        println!("{group:?} n={n} t={t}: optimum {} ({:?})", r.optimum, r.status);
    }
    for (n, t) in [(4, 1), (5, 1), (6, 2)] {
        let r = max_nontrivial_t_intersecting(n, t, &guard, options)?;
        println!("non-trivial n={n} t={t}: optimum {} vs |D| = {}", r.optimum, build_d_size(n, t));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
