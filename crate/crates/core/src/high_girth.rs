//! Greedy independent-set extraction for graphs of girth at least `2p`.
//!
//! While some vertex has residual degree below `k^(1/(p-1)) + 1`, it is
//! peeled into the solution and its closed neighborhood removed. If the
//! solution reaches size `k` we are done; otherwise every survivor has
//! high degree and a BFS layering from any survivor yields an independent
//! layer of size at least `k` at depth `p - 1`. On a graph with at least
//! `k * (k^(1/(p-1)) + 2)` vertices one of the two phases must deliver.

use crate::alpha::{is_independent_set, IndependentSetResult};
use crate::error::{Error, Result};
use crate::pattern::girth;
use crate::trigraph::{Trigraph, VertexId};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighGirthGreedyResult {
    pub set: IndependentSetResult,
    /// Whether the input met the size hypothesis `n >= k * (k^(1/(p-1)) + 2)`.
    /// When it did, the returned set is guaranteed to have at least `k`
    /// vertices; otherwise the set is best-effort and may be smaller.
    pub met_size_hypothesis: bool,
}

/// The irrational peeling threshold `deg < k^(1/(p-1)) + 1` evaluated in
/// integers: degree 0 always qualifies, otherwise `(deg - 1)^(p-1) < k`.
fn qualifies(deg: usize, k: u64, p: u32) -> bool {
    if deg == 0 {
        return true;
    }
    match ((deg - 1) as u128).checked_pow(p - 1) {
        Some(pow) => pow < k as u128,
        None => false,
    }
}

/// Integer form of `n >= k * (k^(1/(p-1)) + 2)`, i.e.
/// `n - 2k >= k^(p/(p-1))`, i.e. `(n - 2k)^(p-1) >= k^p`.
fn meets_size_hypothesis(n: usize, k: u64, p: u32) -> bool {
    let n = n as u128;
    let k = k as u128;
    if n < 2 * k {
        return false;
    }
    let lhs = (n - 2 * k).checked_pow(p - 1);
    let rhs = k.checked_pow(p);
    match (lhs, rhs) {
        (Some(l), Some(r)) => l >= r,
        (None, _) => true,
        (Some(_), None) => false,
    }
}

pub fn greedy_high_girth_is(g: &Trigraph, k: u64, p: u32) -> Result<HighGirthGreedyResult> {
    if k < 2 || p < 2 {
        return Err(Error::usage("greedy extraction needs k >= 2 and p >= 2"));
    }
    if !g.is_graph() {
        return Err(Error::usage(
            "greedy extraction requires a graph (no switchable pairs)",
        ));
    }
    if let Some(girth) = girth(g)? {
        if girth < 2 * p as usize {
            return Err(Error::usage(format!(
                "girth {girth} is below the required 2p = {}",
                2 * p
            )));
        }
    }
    let n = g.n();
    let met = meets_size_hypothesis(n, k, p);

    let adj: Vec<Vec<VertexId>> = g.vertices().map(|v| g.strong_neighbors(v)).collect();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| adj[v].len()).collect();
    let mut solution: Vec<VertexId> = Vec::new();

    loop {
        if solution.len() as u64 >= k {
            return finish(g, solution, met, k);
        }
        // Lowest id among minimum-degree qualifying vertices.
        let pick = (0..n)
            .filter(|&v| alive[v] && qualifies(degree[v], k, p))
            .min_by_key(|&v| (degree[v], v));
        let Some(v) = pick else { break };
        assert!(
            qualifies(degree[v], k, p),
            "peeled vertex must satisfy (deg - 1)^(p-1) < k"
        );
        solution.push(v);
        for &u in adj[v].iter().chain(std::iter::once(&v)) {
            if alive[u] {
                alive[u] = false;
                for &w in &adj[u] {
                    if alive[w] {
                        degree[w] -= 1;
                    }
                }
            }
        }
    }

    if !alive.iter().any(|&a| a) {
        // Exhausted without reaching k; only possible below the size
        // hypothesis (each peel removes fewer than k^(1/(p-1)) + 2
        // vertices and fewer than k peels happened).
        assert!(!met, "survivors must exist under the size hypothesis");
        return finish(g, solution, met, k);
    }

    // BFS layering from the lowest surviving id. Survivors are
    // non-adjacent to everything in `solution` (closed neighborhoods were
    // removed), so the union stays independent.
    let root = (0..n).find(|&v| alive[v]).unwrap();
    let min_degree = (0..n)
        .filter(|&v| alive[v])
        .map(|v| degree[v])
        .min()
        .unwrap();
    let mut layer_of = vec![usize::MAX; n];
    layer_of[root] = 0;
    let mut layers: Vec<Vec<VertexId>> = vec![vec![root]];
    for depth in 1..=(p as usize - 1) {
        let mut next = Vec::new();
        for &u in &layers[depth - 1] {
            for &v in &adj[u] {
                if alive[v] && layer_of[v] == usize::MAX {
                    layer_of[v] = depth;
                    next.push(v);
                }
            }
        }
        next.sort_unstable();
        assert_layer_facts(g, &adj, &alive, &layer_of, &layers[depth - 1], &next, min_degree, depth);
        layers.push(next);
    }

    solution.extend(&layers[p as usize - 1]);
    finish(g, solution, met, k)
}

/// Structural facts of the layering argument, checked at runtime: layers
/// up to depth p-1 are independent, each new-layer vertex has exactly one
/// neighbor one layer down, and the layer sizes grow geometrically with
/// the residual minimum degree.
#[allow(clippy::too_many_arguments)]
fn assert_layer_facts(
    g: &Trigraph,
    adj: &[Vec<VertexId>],
    alive: &[bool],
    layer_of: &[usize],
    previous: &[VertexId],
    current: &[VertexId],
    min_degree: usize,
    depth: usize,
) {
    for (i, &u) in current.iter().enumerate() {
        for &v in &current[i + 1..] {
            assert!(
                !g.strongly_adjacent(u, v),
                "layer {depth} must be independent"
            );
        }
    }
    for &v in current {
        let back = adj[v]
            .iter()
            .filter(|&&u| alive[u] && layer_of[u] == depth - 1)
            .count();
        assert_eq!(back, 1, "one neighbor into the previous layer");
    }
    assert!(
        current.len() >= previous.len() * min_degree.saturating_sub(1),
        "layer growth below the degree bound"
    );
}

fn finish(
    g: &Trigraph,
    mut solution: Vec<VertexId>,
    met: bool,
    k: u64,
) -> Result<HighGirthGreedyResult> {
    solution.sort_unstable();
    assert!(
        is_independent_set(g, &solution),
        "extracted set must be independent"
    );
    if met {
        assert!(
            solution.len() as u64 >= k,
            "size hypothesis met but extraction fell short"
        );
    }
    let total_weight = g.total_weight(&solution);
    Ok(HighGirthGreedyResult {
        set: IndependentSetResult {
            vertices: solution,
            total_weight,
        },
        met_size_hypothesis: met,
    })
}
