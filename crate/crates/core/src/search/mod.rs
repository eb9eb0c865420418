//! Exact searches over small symmetric and alternating groups: maximum
//! `t`-intersecting families (as cliques of the agreement graph),
//! non-trivial maxima, Hoffman tightness, and transposition-graph
//! neighborhoods.
//!
//! The agreement graph is vertex-transitive under left translation, so
//! every search fixes the identity (the lexicographically first vertex)
//! inside the clique.

pub mod clique;
pub mod maurey;

use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::Projector;
use crate::error::{Error, Result};
use crate::families::{build_d, contained_in_t_coset, t_coset, CosetSpec, Family};
use crate::guard::Guardrail;
use crate::partitions::factorial;
use crate::permcore::{group_elements, GroupMode, Permutation};
use crate::rational::{self, Q};
use crate::spectral::{cayley_spectrum, hoffman_bound, WeightedCayleySpec};

pub use clique::naive_max_clique;
pub use maurey::{maurey_check, neighborhood_profile, transposition_neighborhood, MaureyReport, MaureyRow};

use clique::{all_of_size, color_bound, expand, expand_parallel, lex_least, Shared};

/// `σ ~ π` iff they agree on at least `t` points; vertices in lexicographic
/// order, so vertex 0 is the identity.
pub struct AgreementGraph {
    pub n: usize,
    pub t: usize,
    pub group: GroupMode,
    pub vertices: Vec<Permutation>,
    pub adjacency: Vec<FixedBitSet>,
}

impl AgreementGraph {
    pub fn new(n: usize, t: usize, group: GroupMode, guard: &Guardrail) -> Result<Self> {
        let vertices = group_elements(n, group, guard)?;
        let size = vertices.len();
        let adjacency = (0..size)
            .into_par_iter()
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(size);
                for j in 0..size {
                    if i != j && vertices[i].agreements_unchecked(&vertices[j]) >= t {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        Ok(AgreementGraph {
            n,
            t,
            group,
            vertices,
            adjacency,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn family(&self, indices: &[usize]) -> Family {
        Family::new(self.n, indices.iter().map(|&i| self.vertices[i].clone()))
            .expect("vertices share the graph's degree")
    }

    fn indices_of(&self, f: &Family) -> Vec<usize> {
        f.iter()
            .map(|p| self.vertices.binary_search(p).expect("family inside the group"))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    ProvedOptimal,
    BoundOnly,
    /// The feasible set is empty.
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub t: usize,
    pub group: GroupMode,
    pub optimum: usize,
    pub upper_bound: usize,
    pub witness: Family,
    pub status: SearchStatus,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    pub timeout: Option<Duration>,
}

fn check_t(n: usize, t: usize) -> Result<()> {
    if t < 1 || t > n {
        return Err(Error::TOutOfRange { n, t });
    }
    Ok(())
}

/// The pointwise stabilizer of `[t]`, restricted to the group.
fn seed_coset(n: usize, t: usize, group: GroupMode) -> Result<Family> {
    let coset = t_coset(n, &CosetSpec::fixing(n, t)?)?;
    match group {
        GroupMode::Sym => Ok(coset),
        GroupMode::Alt => Family::new(n, coset.iter().filter(|p| p.is_even()).cloned()),
    }
}

/// Maximum `t`-intersecting family in `S_n` or `A_n`, with the
/// lexicographically least optimal witness.
pub fn max_t_intersecting(
    n: usize,
    t: usize,
    group: GroupMode,
    guard: &Guardrail,
    options: SearchOptions,
) -> Result<SearchResult> {
    check_t(n, t)?;
    let start = Instant::now();
    let graph = AgreementGraph::new(n, t, group, guard)?;
    let seed = graph.indices_of(&seed_coset(n, t, group)?);
    let shared = Shared::new(seed, options.timeout.map(|d| start + d));
    let neighbors = graph.adjacency[0].clone();
    expand_parallel(&graph.adjacency, &[0], &neighbors, &shared);
    let best = shared.best();
    let mut nodes = shared.nodes.load(std::sync::atomic::Ordering::Relaxed);
    if shared.timed_out.load(std::sync::atomic::Ordering::Relaxed) {
        let witness = graph.family(&shared.witness.lock().expect("witness lock"));
        return Ok(SearchResult {
            n,
            t,
            group,
            optimum: best,
            upper_bound: 1 + color_bound(&graph.adjacency, &neighbors),
            witness,
            status: SearchStatus::BoundOnly,
            stats: SearchStats {
                nodes,
                elapsed_ms: start.elapsed().as_millis(),
            },
        });
    }
    let mut chosen = Vec::new();
    let found = lex_least(&graph.adjacency, &mut chosen, &neighbors, best - 1, &mut nodes);
    debug_assert!(found, "an optimum clique through the identity exists");
    let mut members = vec![0];
    members.extend(chosen);
    Ok(SearchResult {
        n,
        t,
        group,
        optimum: best,
        upper_bound: best,
        witness: graph.family(&members),
        status: SearchStatus::ProvedOptimal,
        stats: SearchStats {
            nodes,
            elapsed_ms: start.elapsed().as_millis(),
        },
    })
}

/// Every clique of the given size containing the identity, in
/// lexicographic order. By vertex-transitivity, every clique of that size
/// is a left translate of one of these.
pub fn all_maximum_through_identity(graph: &AgreementGraph, size: usize) -> Vec<Family> {
    if size == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut nodes = 0;
    all_of_size(
        &graph.adjacency,
        &mut Vec::new(),
        &graph.adjacency[0],
        size - 1,
        &mut out,
        &mut nodes,
    );
    out.into_iter()
        .map(|mut c| {
            c.insert(0, 0);
            graph.family(&c)
        })
        .collect()
}

/// Maximum `t`-intersecting family of `S_n` not contained in any `t`-coset.
///
/// Branching keeps the set `S` of points fixed by every chosen member;
/// while `|S| ≥ t` the clique must still gain a member moving a point of
/// `S`, and the branches enumerate the first such member.
pub fn max_nontrivial_t_intersecting(
    n: usize,
    t: usize,
    guard: &Guardrail,
    options: SearchOptions,
) -> Result<SearchResult> {
    check_t(n, t)?;
    let start = Instant::now();
    if t == n {
        return Ok(SearchResult {
            n,
            t,
            group: GroupMode::Sym,
            optimum: 0,
            upper_bound: 0,
            witness: Family::empty(n),
            status: SearchStatus::Infeasible,
            stats: SearchStats { nodes: 0, elapsed_ms: 0 },
        });
    }
    let graph = AgreementGraph::new(n, t, GroupMode::Sym, guard)?;
    let seed = if n >= t + 2 { graph.indices_of(&build_d(n, t)?) } else { Vec::new() };
    let shared = Shared::new(seed, options.timeout.map(|d| start + d));
    let fixed: Vec<u64> = graph
        .vertices
        .iter()
        .map(|p| (1..=n).filter(|&i| p.apply(i) == i).fold(0u64, |m, i| m | 1 << (i - 1)))
        .collect();
    let mut stack = vec![0];
    nontrivial_rec(&graph.adjacency, &fixed, t, &mut stack, graph.adjacency[0].clone(), fixed[0], &shared);

    let timed_out = shared.timed_out.load(std::sync::atomic::Ordering::Relaxed);
    let best = shared.best();
    let witness = graph.family(&shared.witness.lock().expect("witness lock"));
    let status = match (timed_out, best) {
        (true, _) => SearchStatus::BoundOnly,
        (false, 0) => SearchStatus::Infeasible,
        (false, _) => SearchStatus::ProvedOptimal,
    };
    let upper_bound = if timed_out { 1 + color_bound(&graph.adjacency, &graph.adjacency[0]) } else { best };
    Ok(SearchResult {
        n,
        t,
        group: GroupMode::Sym,
        optimum: best,
        upper_bound,
        witness,
        status,
        stats: SearchStats {
            nodes: shared.nodes.load(std::sync::atomic::Ordering::Relaxed),
            elapsed_ms: start.elapsed().as_millis(),
        },
    })
}

fn nontrivial_rec(
    adj: &[FixedBitSet],
    fixed: &[u64],
    t: usize,
    stack: &mut Vec<usize>,
    p: FixedBitSet,
    common: u64,
    shared: &Shared,
) {
    if (common.count_ones() as usize) < t {
        shared.offer(stack);
        expand(adj, stack, p, shared);
        return;
    }
    if shared.tick() || stack.len() + color_bound(adj, &p) <= shared.best() {
        return;
    }
    let movers: Vec<usize> = p.ones().filter(|&v| fixed[v] & common != common).collect();
    let mut p = p;
    for v in movers {
        let next = clique::intersect(&p, &adj[v]);
        stack.push(v);
        nontrivial_rec(adj, fixed, t, stack, next, common & fixed[v], shared);
        stack.pop();
        p.set(v, false);
        if stack.len() + color_bound(adj, &p) <= shared.best() {
            return;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightnessReport {
    pub size: usize,
    #[serde(with = "rational")]
    pub bound: Q,
    pub meets_bound: bool,
    #[serde(with = "rational::opt")]
    pub residual: Option<Q>,
    pub coset: Option<CosetSpec>,
    pub tight: bool,
}

/// For a family meeting the Hoffman bound of `spec`: checks that its
/// indicator lies in `V_t` and that it is a `t`-coset.
pub fn verify_hoffman_tightness(
    f: &Family,
    t: usize,
    spec: &WeightedCayleySpec,
    projector: &Projector,
) -> Result<TightnessReport> {
    let report = hoffman_bound(&cayley_spectrum(spec))?;
    let size = f.len();
    let meets_bound = report.bound == Q::from_integer(size.into());
    if !meets_bound {
        return Ok(TightnessReport {
            size,
            bound: report.bound,
            meets_bound,
            residual: None,
            coset: None,
            tight: false,
        });
    }
    let residual = projector.residual_norm_sq(&f.indicator()?, t)?;
    let n = f.degree();
    let coset = contained_in_t_coset(f, t).filter(|_| size as u128 == factorial(n - t));
    let tight = residual.is_zero() && coset.is_some();
    Ok(TightnessReport {
        size,
        bound: report.bound,
        meets_bound,
        residual: Some(residual),
        coset,
        tight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_maxima() {
        let g = Guardrail::default();
        for (n, expect) in [(3, 2), (4, 6)] {
            let r = max_t_intersecting(n, 1, GroupMode::Sym, &g, SearchOptions::default()).unwrap();
            assert_eq!(r.optimum, expect);
            assert_eq!(r.status, SearchStatus::ProvedOptimal);
            assert_eq!(r.witness.len(), expect);
            assert!(crate::families::is_t_intersecting(&r.witness, 1));
            let graph = AgreementGraph::new(n, 1, GroupMode::Sym, &g).unwrap();
            assert_eq!(naive_max_clique(&graph.adjacency), expect);
        }
    }

    #[test]
    fn lex_least_witness_is_the_first_coset() {
        let g = Guardrail::default();
        let r = max_t_intersecting(4, 1, GroupMode::Sym, &g, SearchOptions::default()).unwrap();
        assert_eq!(r.witness, t_coset(4, &CosetSpec::fixing(4, 1).unwrap()).unwrap());
    }

    #[test]
    fn nontrivial_edge_cases() {
        let g = Guardrail::default();
        let r = max_nontrivial_t_intersecting(4, 4, &g, SearchOptions::default()).unwrap();
        assert_eq!(r.status, SearchStatus::Infeasible);
        let r = max_nontrivial_t_intersecting(4, 1, &g, SearchOptions::default()).unwrap();
        assert!(r.optimum >= 4);
        assert!(contained_in_t_coset(&r.witness, 1).is_none());
        assert!(crate::families::is_t_intersecting(&r.witness, 1));
    }
}
