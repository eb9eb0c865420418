//! Bitset branch-and-bound for maximum cliques with greedy-coloring bounds.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

/// Shared search state: a monotone incumbent with its clique, node counter
/// and deadline.
pub(crate) struct Shared {
    pub best: AtomicUsize,
    pub witness: Mutex<Vec<usize>>,
    pub nodes: AtomicU64,
    pub timed_out: AtomicBool,
    pub deadline: Option<Instant>,
}

impl Shared {
    pub fn new(initial: Vec<usize>, deadline: Option<Instant>) -> Self {
        Shared {
            best: AtomicUsize::new(initial.len()),
            witness: Mutex::new(initial),
            nodes: AtomicU64::new(0),
            timed_out: AtomicBool::new(false),
            deadline,
        }
    }

    pub fn tick(&self) -> bool {
        let count = self.nodes.fetch_add(1, Ordering::Relaxed);
        if count.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out.store(true, Ordering::Relaxed);
                }
            }
        }
        self.timed_out.load(Ordering::Relaxed)
    }

    pub fn best(&self) -> usize {
        self.best.load(Ordering::Relaxed)
    }

    pub fn offer(&self, clique: &[usize]) {
        if clique.len() <= self.best() {
            return;
        }
        let mut w = self.witness.lock().expect("witness lock");
        if clique.len() > self.best() {
            *w = clique.to_vec();
            self.best.store(clique.len(), Ordering::Relaxed);
        }
    }
}

/// Greedy sequential coloring of `p`; returns vertices in color order with
/// the running color number, so `colors[i]` bounds the clique size inside
/// `order[..=i]`.
pub(crate) fn color_sort(adj: &[FixedBitSet], p: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = p.clone();
    let mut order = Vec::with_capacity(p.count_ones(..));
    let mut colors = Vec::with_capacity(order.capacity());
    let mut color = 0;
    while !uncolored.is_clear() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.ones().next() {
            uncolored.set(v, false);
            avail.set(v, false);
            avail.difference_with(&adj[v]);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

pub(crate) fn intersect(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut out = a.clone();
    out.intersect_with(b);
    out
}

/// Extends `stack` by cliques inside `p`, raising the incumbent whenever a
/// larger clique is found.
pub(crate) fn expand(adj: &[FixedBitSet], stack: &mut Vec<usize>, p: FixedBitSet, shared: &Shared) {
    if shared.tick() {
        return;
    }
    let (order, colors) = color_sort(adj, &p);
    let mut p = p;
    for idx in (0..order.len()).rev() {
        if stack.len() + colors[idx] <= shared.best() {
            return;
        }
        let v = order[idx];
        let next = intersect(&p, &adj[v]);
        stack.push(v);
        if next.is_clear() {
            shared.offer(stack);
        } else {
            expand(adj, stack, next, shared);
        }
        stack.pop();
        p.set(v, false);
    }
}

/// [`expand`] with the top-level branches run in parallel against one
/// incumbent.
pub(crate) fn expand_parallel(adj: &[FixedBitSet], base: &[usize], p: &FixedBitSet, shared: &Shared) {
    let (order, colors) = color_sort(adj, p);
    // branch i: include order[i], restricted to order[..i]
    (0..order.len()).into_par_iter().rev().for_each(|i| {
        if base.len() + colors[i] <= shared.best() {
            return;
        }
        let mut rest = FixedBitSet::with_capacity(p.len());
        for &u in &order[..i] {
            rest.insert(u);
        }
        rest.intersect_with(&adj[order[i]]);
        let mut stack = base.to_vec();
        stack.push(order[i]);
        if rest.is_clear() {
            shared.offer(&stack);
        } else {
            expand(adj, &mut stack, rest, shared);
        }
    });
}

/// Greedy-coloring upper bound on the clique number of `p`.
pub(crate) fn color_bound(adj: &[FixedBitSet], p: &FixedBitSet) -> usize {
    color_sort(adj, p).1.last().copied().unwrap_or(0)
}

/// Lexicographically least clique of size `target` inside `p` (vertices are
/// indices in lexicographic order), extending `chosen`.
pub(crate) fn lex_least(
    adj: &[FixedBitSet],
    chosen: &mut Vec<usize>,
    p: &FixedBitSet,
    target: usize,
    nodes: &mut u64,
) -> bool {
    *nodes += 1;
    if chosen.len() == target {
        return true;
    }
    let need = target - chosen.len();
    if p.count_ones(..) < need {
        return false;
    }
    let (_, colors) = color_sort(adj, p);
    if colors.last().copied().unwrap_or(0) < need {
        return false;
    }
    let mut rest = p.clone();
    for v in p.ones() {
        rest.set(v, false);
        let next = intersect(&rest, &adj[v]);
        chosen.push(v);
        if lex_least(adj, chosen, &next, target, nodes) {
            return true;
        }
        chosen.pop();
        if rest.count_ones(..) < need {
            break;
        }
    }
    false
}

/// Every clique of size `target` inside `p` extending `chosen`, in
/// lexicographic order.
pub(crate) fn all_of_size(
    adj: &[FixedBitSet],
    chosen: &mut Vec<usize>,
    p: &FixedBitSet,
    target: usize,
    out: &mut Vec<Vec<usize>>,
    nodes: &mut u64,
) {
    *nodes += 1;
    if chosen.len() == target {
        out.push(chosen.clone());
        return;
    }
    let need = target - chosen.len();
    if p.count_ones(..) < need {
        return;
    }
    let (_, colors) = color_sort(adj, p);
    if colors.last().copied().unwrap_or(0) < need {
        return;
    }
    let mut rest = p.clone();
    for v in p.ones() {
        rest.set(v, false);
        let next = intersect(&rest, &adj[v]);
        chosen.push(v);
        all_of_size(adj, chosen, &next, target, out, nodes);
        chosen.pop();
        if rest.count_ones(..) < need {
            break;
        }
    }
}

/// Exhaustive maximum clique by plain subset recursion, no bounds; the
/// reference for small graphs.
pub fn naive_max_clique(adj: &[FixedBitSet]) -> usize {
    fn rec(adj: &[FixedBitSet], p: FixedBitSet, depth: usize) -> usize {
        let mut best = depth;
        let mut rest = p.clone();
        for v in p.ones() {
            rest.set(v, false);
            best = best.max(rec(adj, intersect(&rest, &adj[v]), depth + 1));
        }
        best
    }
    let mut all = FixedBitSet::with_capacity(adj.len());
    all.insert_range(..);
    rec(adj, all, 0)
}
