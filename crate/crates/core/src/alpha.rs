//! Exact maximum-weight independent set over trigraphs, plus enumeration
//! of maximal independent sets.
//!
//! An independent set is a set of pairwise *antiadjacent* vertices, so
//! only strong edges conflict: a switchable pair may sit inside an
//! independent set. Everything here therefore works on the strong-edge
//! graph of the input.

use crate::error::{Error, Result};
use crate::trigraph::{Trigraph, VertexId};
use serde::{Deserialize, Serialize};

/// Default vertex-count guard for the branch-and-bound path.
pub const DEFAULT_BRANCH_AND_BOUND_LIMIT: usize = 60;
/// Default vertex-count guard for the subset-enumeration path.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentSetResult {
    pub vertices: Vec<VertexId>,
    pub total_weight: u64,
}

impl IndependentSetResult {
    fn from_set(t: &Trigraph, mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        let total_weight = t.total_weight(&vertices);
        IndependentSetResult {
            vertices,
            total_weight,
        }
    }

    pub fn validate(&self, t: &Trigraph) -> bool {
        is_independent_set(t, &self.vertices) && self.total_weight == t.total_weight(&self.vertices)
    }
}

/// Pairwise antiadjacent (no strong edge inside the set).
pub fn is_independent_set(t: &Trigraph, set: &[VertexId]) -> bool {
    set.iter().enumerate().all(|(i, &u)| {
        set[i + 1..]
            .iter()
            .all(|&v| v != u && t.antiadjacent(u, v))
    })
}

/// Maximum-weight independent set by branch and bound with the default
/// size guard.
pub fn alpha_exact(t: &Trigraph) -> Result<IndependentSetResult> {
    alpha_exact_with_limit(t, DEFAULT_BRANCH_AND_BOUND_LIMIT)
}

/// Branch and bound. At every node: strip degree-0 vertices (always
/// taken) and degree-1 vertices that dominate their neighbor, split what
/// remains into connected components, and only then branch on a
/// maximum-degree vertex (taken first; the exclude branch is skipped when
/// its remaining total weight cannot beat the include branch).
pub fn alpha_exact_with_limit(t: &Trigraph, max_n: usize) -> Result<IndependentSetResult> {
    if t.n() > max_n {
        return Err(Error::capacity(format!(
            "branch-and-bound guard: n = {} exceeds limit {max_n}",
            t.n()
        )));
    }
    let adj: Vec<Vec<VertexId>> = t.vertices().map(|v| t.strong_neighbors(v)).collect();
    let alive: std::collections::BTreeSet<VertexId> = t.vertices().collect();
    let (set, _) = solve_rec(t, &adj, alive);
    Ok(IndependentSetResult::from_set(t, set))
}

fn solve_rec(
    t: &Trigraph,
    adj: &[Vec<VertexId>],
    mut alive: std::collections::BTreeSet<VertexId>,
) -> (Vec<VertexId>, u64) {
    let mut chosen: Vec<VertexId> = Vec::new();

    // Safe reductions, applied to exhaustion: isolated vertices are
    // always taken; a pendant vertex at least as heavy as its neighbor is
    // always taken. These dissolve the long paths that subdivision-style
    // instances are made of.
    loop {
        let mut action: Option<(VertexId, Option<VertexId>)> = None;
        for &v in &alive {
            let mut nbrs = adj[v].iter().filter(|u| alive.contains(u));
            match (nbrs.next(), nbrs.next()) {
                (None, _) => {
                    action = Some((v, None));
                    break;
                }
                (Some(&u), None) if t.weight(v) >= t.weight(u) => {
                    action = Some((v, Some(u)));
                    break;
                }
                _ => {}
            }
        }
        match action {
            Some((v, dropped)) => {
                chosen.push(v);
                alive.remove(&v);
                if let Some(u) = dropped {
                    alive.remove(&u);
                }
            }
            None => break,
        }
    }
    if alive.is_empty() {
        let w = t.total_weight(&chosen);
        return (chosen, w);
    }

    // Solve connected components independently.
    let components = split_components(adj, &alive);
    if components.len() > 1 {
        for comp in components {
            let (sub, _) = solve_rec(t, adj, comp);
            chosen.extend(sub);
        }
        let w = t.total_weight(&chosen);
        return (chosen, w);
    }

    // Branch on a maximum-degree vertex, include first.
    let pivot = *alive
        .iter()
        .max_by_key(|&&v| {
            (
                adj[v].iter().filter(|u| alive.contains(u)).count(),
                std::cmp::Reverse(v),
            )
        })
        .unwrap();

    let mut include_alive = alive.clone();
    include_alive.remove(&pivot);
    for u in &adj[pivot] {
        include_alive.remove(u);
    }
    let (mut include_set, include_w) = solve_rec(t, adj, include_alive);
    include_set.push(pivot);
    let include_w = include_w + t.weight(pivot);

    // Bound: the exclude branch cannot beat the include branch unless the
    // total weight left after dropping the pivot exceeds it.
    alive.remove(&pivot);
    let exclude_bound: u64 = alive.iter().map(|&v| t.weight(v)).sum();
    let (best_set, _best_w) = if exclude_bound > include_w {
        let (exclude_set, exclude_w) = solve_rec(t, adj, alive);
        if exclude_w > include_w {
            (exclude_set, exclude_w)
        } else {
            (include_set, include_w)
        }
    } else {
        (include_set, include_w)
    };
    chosen.extend(best_set);
    let w = t.total_weight(&chosen);
    (chosen, w)
}

fn split_components(
    adj: &[Vec<VertexId>],
    alive: &std::collections::BTreeSet<VertexId>,
) -> Vec<std::collections::BTreeSet<VertexId>> {
    let mut seen: std::collections::HashSet<VertexId> = std::collections::HashSet::new();
    let mut comps = Vec::new();
    for &start in alive {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = std::collections::BTreeSet::new();
        comp.insert(start);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if alive.contains(&v) && seen.insert(v) {
                    comp.insert(v);
                    stack.push(v);
                }
            }
        }
        comps.push(comp);
    }
    comps
}

/// Independent second strategy: scan all vertex subsets. Usable only for
/// small instances; kept as an oracle for the branch-and-bound path.
pub fn alpha_exact_enumeration(t: &Trigraph) -> Result<IndependentSetResult> {
    let n = t.n();
    if n > DEFAULT_ENUMERATION_LIMIT {
        return Err(Error::capacity(format!(
            "enumeration guard: n = {n} exceeds limit {DEFAULT_ENUMERATION_LIMIT}"
        )));
    }
    let conflict: Vec<u32> = t
        .vertices()
        .map(|v| {
            t.strong_neighbors(v)
                .into_iter()
                .fold(0u32, |m, u| m | 1 << u)
        })
        .collect();
    let mut best_mask = 0u32;
    let mut best_weight = 0u64;
    for mask in 0u32..1 << n {
        let mut ok = true;
        #[allow(clippy::needless_range_loop)]
        for v in 0..n {
            if mask & (1 << v) != 0 && conflict[v] & mask != 0 {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        let w: u64 = (0..n).filter(|v| mask & (1 << v) != 0).map(|v| t.weight(v)).sum();
        if w > best_weight {
            best_weight = w;
            best_mask = mask;
        }
    }
    let vertices: Vec<VertexId> = (0..n).filter(|v| best_mask & (1 << v) != 0).collect();
    Ok(IndependentSetResult::from_set(t, vertices))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalSetEnumeration {
    pub sets: Vec<Vec<VertexId>>,
    /// True when enumeration stopped after exceeding the cap; `sets` then
    /// holds `cap + 1` entries.
    pub overflowed: bool,
}

/// Enumerates inclusion-maximal independent sets (maximal cliques of the
/// strong-edge complement) by pivoting Bron–Kerbosch, stopping once
/// `cap + 1` sets are found.
pub fn enumerate_maximal_independent_sets(t: &Trigraph, cap: usize) -> MaximalSetEnumeration {
    let n = t.n();
    let compat: Vec<Vec<bool>> = t
        .vertices()
        .map(|u| {
            t.vertices()
                .map(|v| u != v && t.antiadjacent(u, v))
                .collect()
        })
        .collect();
    let mut sets = Vec::new();
    let mut r = Vec::new();
    let p: Vec<VertexId> = (0..n).collect();
    let x: Vec<VertexId> = Vec::new();
    bron_kerbosch(&compat, &mut r, p, x, cap, &mut sets);
    let overflowed = sets.len() > cap;
    MaximalSetEnumeration { sets, overflowed }
}

fn bron_kerbosch(
    compat: &[Vec<bool>],
    r: &mut Vec<VertexId>,
    p: Vec<VertexId>,
    x: Vec<VertexId>,
    cap: usize,
    out: &mut Vec<Vec<VertexId>>,
) {
    if out.len() > cap {
        return;
    }
    if p.is_empty() && x.is_empty() {
        let mut s = r.clone();
        s.sort_unstable();
        out.push(s);
        return;
    }
    // Pivot with the most compatibilities inside P.
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| (p.iter().filter(|&&v| compat[u][v]).count(), std::cmp::Reverse(u)))
        .unwrap();
    let candidates: Vec<VertexId> = p.iter().copied().filter(|&v| !compat[pivot][v]).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let p_next: Vec<VertexId> = p.iter().copied().filter(|&u| compat[v][u]).collect();
        let x_next: Vec<VertexId> = x.iter().copied().filter(|&u| compat[v][u]).collect();
        r.push(v);
        bron_kerbosch(compat, r, p_next, x_next, cap, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
        if out.len() > cap {
            return;
        }
    }
}
