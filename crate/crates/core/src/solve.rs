//! Decision procedure for weighted independent set on bull-free
//! monogamous trigraphs: repeatedly contract a minimum homogeneous set to
//! a single vertex weighted by the best independent set inside it, then
//! finish the irreducible instance exactly. Certificates are lifted back
//! through every contraction.

use crate::alpha::{alpha_exact_with_limit, IndependentSetResult, DEFAULT_BRANCH_AND_BOUND_LIMIT};
use crate::error::{Error, Result};
use crate::homogeneous::find_minimally_sided_homogeneous_set;
use crate::pattern::find_bull;
use crate::trigraph::{Trigraph, VertexId};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "answer", rename_all = "kebab-case")]
pub enum WisOutcome {
    /// An independent set of weight at least `k` exists; the certificate
    /// is a maximum-weight one.
    Yes { certificate: IndependentSetResult },
    /// No such set; `alpha` is the exact optimum with its certificate.
    No { alpha: IndependentSetResult },
}

pub fn solve_wis(t: &Trigraph, k: u64) -> Result<WisOutcome> {
    solve_wis_with_limit(t, k, DEFAULT_BRANCH_AND_BOUND_LIMIT)
}

pub fn solve_wis_with_limit(t: &Trigraph, k: u64, max_n: usize) -> Result<WisOutcome> {
    if let Some(bull) = find_bull(t) {
        return Err(Error::NotBullFree(bull.vertices));
    }
    if !t.is_monogamous() {
        return Err(Error::usage(
            "solver requires a monogamous trigraph (each vertex in at most one switchable pair)",
        ));
    }
    let best = max_weight_by_contraction(t, max_n)?;
    debug_assert!(best.validate(t));
    if best.total_weight >= k {
        Ok(WisOutcome::Yes { certificate: best })
    } else {
        Ok(WisOutcome::No { alpha: best })
    }
}

/// Exact maximum-weight independent set with contraction: as long as a
/// homogeneous set exists, replace it by one vertex whose weight is the
/// optimum inside the set (computed recursively), solve the smaller
/// instance, and splice the inner certificate back in.
fn max_weight_by_contraction(t: &Trigraph, max_n: usize) -> Result<IndependentSetResult> {
    if t.n() == 0 {
        return Ok(IndependentSetResult {
            vertices: vec![],
            total_weight: 0,
        });
    }
    if let Some(hs) = find_minimally_sided_homogeneous_set(t) {
        let (inner_t, inner_map) = t.induced(&hs.vertices);
        let inner = max_weight_by_contraction(&inner_t, max_n)?;
        let inner_vertices: Vec<VertexId> =
            inner.vertices.iter().map(|&v| inner_map[v]).collect();

        let (contracted, outer_map, merged) = contract_set(t, &hs.vertices, inner.total_weight);
        let outer = max_weight_by_contraction(&contracted, max_n)?;

        let mut vertices: Vec<VertexId> = Vec::new();
        for &v in &outer.vertices {
            if v == merged {
                vertices.extend(&inner_vertices);
            } else {
                vertices.push(outer_map[v]);
            }
        }
        vertices.sort_unstable();
        let total_weight = t.total_weight(&vertices);
        debug_assert_eq!(total_weight, outer.total_weight);
        return Ok(IndependentSetResult {
            vertices,
            total_weight,
        });
    }
    alpha_exact_with_limit(t, max_n)
}

/// Contracts a homogeneous set to a single vertex carrying `weight`.
/// Returns the contracted trigraph, the map from its ids back to
/// original ids (the merged vertex maps to the set's minimum id), and
/// the merged vertex's new id.
fn contract_set(
    t: &Trigraph,
    set: &[VertexId],
    weight: u64,
) -> (Trigraph, Vec<VertexId>, VertexId) {
    let outside: Vec<VertexId> = t.vertices().filter(|v| !set.contains(v)).collect();
    let n = outside.len() + 1;
    let merged = n - 1;
    let mut c = Trigraph::new(n);
    let mut map = outside.clone();
    map.push(set[0]);
    for (i, &u) in outside.iter().enumerate() {
        c.set_weight(i, t.weight(u));
        for (j, &v) in outside.iter().enumerate().skip(i + 1) {
            c.set_theta(i, j, t.theta(u, v));
        }
        // All of the set looks the same from outside; sample one member.
        let value = t.theta(u, set[0]);
        debug_assert!(set.iter().all(|&s| t.theta(u, s) == value));
        c.set_theta(i, merged, value);
    }
    c.set_weight(merged, weight);
    (c, map, merged)
}
