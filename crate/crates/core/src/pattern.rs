//! Induced-pattern detection: bulls in trigraphs, holes of a given length,
//! triangles, and girth.
//!
//! Bulls use trigraph semantics (pattern edges must be adjacent, pattern
//! non-edges antiadjacent, so a switchable pair satisfies both). Holes and
//! girth are graph notions here: inputs with switchable pairs are rejected
//! rather than given a guessed semantics.

use crate::error::{Error, Result};
use crate::trigraph::{Trigraph, VertexId};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternKind {
    Bull,
    Hole,
    Triangle,
}

/// A concrete occurrence of a pattern. For a bull the vertices are ordered
/// `[x1, x2, x3, y, z]` with triangle `{x1, x2, x3}` and pendants `y` at
/// `x1`, `z` at `x2`; for holes and triangles they are in cycle order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    pub vertices: Vec<VertexId>,
}

impl PatternWitness {
    /// Re-checks this witness against a host trigraph.
    pub fn verify(&self, t: &Trigraph) -> bool {
        let vs = &self.vertices;
        let distinct = {
            let mut s = vs.clone();
            s.sort_unstable();
            s.dedup();
            s.len() == vs.len()
        };
        if !distinct || vs.iter().any(|&v| v >= t.n()) {
            return false;
        }
        match self.kind {
            PatternKind::Bull => {
                if vs.len() != 5 {
                    return false;
                }
                let (x1, x2, x3, y, z) = (vs[0], vs[1], vs[2], vs[3], vs[4]);
                let edges = [(x1, x2), (x2, x3), (x3, x1), (x1, y), (x2, z)];
                let non_edges = [(x1, z), (x2, y), (x3, y), (x3, z), (y, z)];
                edges.iter().all(|&(a, b)| t.adjacent(a, b))
                    && non_edges.iter().all(|&(a, b)| t.antiadjacent(a, b))
            }
            PatternKind::Hole => {
                let k = vs.len();
                if k < 4 {
                    return false;
                }
                for i in 0..k {
                    for j in i + 1..k {
                        let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                        if consecutive {
                            if !t.adjacent(vs[i], vs[j]) {
                                return false;
                            }
                        } else if !t.antiadjacent(vs[i], vs[j]) {
                            return false;
                        }
                    }
                }
                true
            }
            PatternKind::Triangle => {
                vs.len() == 3
                    && t.adjacent(vs[0], vs[1])
                    && t.adjacent(vs[1], vs[2])
                    && t.adjacent(vs[0], vs[2])
            }
        }
    }
}

/// Finds an induced bull, if any: five vertices whose bull edges are all
/// adjacent and whose bull non-edges are all antiadjacent. Exhaustive
/// over ordered 5-tuples with early pruning on the triangle; returns the
/// first witness in enumeration order.
pub fn find_bull(t: &Trigraph) -> Option<PatternWitness> {
    let n = t.n();
    for a in 0..n {
        for b in 0..n {
            if b == a || !t.adjacent(a, b) {
                continue;
            }
            for c in 0..n {
                // Triangle {a, b, c} with pendant roles on a and b.
                if c == a || c == b || !t.adjacent(a, c) || !t.adjacent(b, c) {
                    continue;
                }
                for y in 0..n {
                    if y == a || y == b || y == c {
                        continue;
                    }
                    if !(t.adjacent(a, y) && t.antiadjacent(b, y) && t.antiadjacent(c, y)) {
                        continue;
                    }
                    for z in 0..n {
                        if z == a || z == b || z == c || z == y {
                            continue;
                        }
                        if t.adjacent(b, z)
                            && t.antiadjacent(a, z)
                            && t.antiadjacent(c, z)
                            && t.antiadjacent(y, z)
                        {
                            let w = PatternWitness {
                                kind: PatternKind::Bull,
                                vertices: vec![a, b, c, y, z],
                            };
                            debug_assert!(w.verify(t));
                            return Some(w);
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn is_bull_free(t: &Trigraph) -> bool {
    find_bull(t).is_none()
}

/// Finds an induced cycle of exactly `length` vertices in a graph.
///
/// DFS over partial induced paths with chord pruning. Each cycle is
/// enumerated once: the path starts at its minimum vertex and the second
/// vertex is smaller than the last.
pub fn find_hole(t: &Trigraph, length: usize) -> Result<Option<PatternWitness>> {
    if length < 4 {
        return Err(Error::usage("hole length must be at least 4"));
    }
    if !t.is_graph() {
        return Err(Error::usage(
            "hole search requires a graph (no switchable pairs)",
        ));
    }
    let mut path = Vec::with_capacity(length);
    for s in t.vertices() {
        path.push(s);
        if let Some(w) = extend_hole(t, length, &mut path) {
            return Ok(Some(w));
        }
        path.pop();
    }
    Ok(None)
}

fn extend_hole(t: &Trigraph, length: usize, path: &mut Vec<VertexId>) -> Option<PatternWitness> {
    let s = path[0];
    let last = *path.last().unwrap();
    if path.len() == length - 1 {
        // Final vertex: adjacent to both ends, no chords to the interior.
        for v in s + 1..t.n() {
            if path.contains(&v) || !t.adjacent(v, last) || !t.adjacent(v, s) {
                continue;
            }
            if v <= path[1] {
                continue; // canonical direction
            }
            if path[1..path.len() - 1].iter().all(|&u| t.antiadjacent(u, v)) {
                let mut vs = path.clone();
                vs.push(v);
                let w = PatternWitness {
                    kind: PatternKind::Hole,
                    vertices: vs,
                };
                debug_assert!(w.verify(t));
                return Some(w);
            }
        }
        return None;
    }
    for v in s + 1..t.n() {
        if path.contains(&v) || !t.adjacent(v, last) {
            continue;
        }
        // No chord back to any earlier path vertex, including the start.
        if !path[..path.len() - 1].iter().all(|&u| t.antiadjacent(u, v)) {
            continue;
        }
        path.push(v);
        if let Some(w) = extend_hole(t, length, path) {
            return Some(w);
        }
        path.pop();
    }
    None
}

/// Length of a shortest cycle of a graph; `None` for forests.
///
/// One BFS per root: every non-tree edge `(u, v)` seen from root `s`
/// closes a walk of length `dist(u) + dist(v) + 1` that contains a cycle
/// no longer than that, and rooting at a vertex of a shortest cycle
/// realizes its exact length.
pub fn girth(t: &Trigraph) -> Result<Option<usize>> {
    if !t.is_graph() {
        return Err(Error::usage(
            "girth requires a graph (no switchable pairs)",
        ));
    }
    let n = t.n();
    let adj: Vec<Vec<VertexId>> = t.vertices().map(|v| t.strong_neighbors(v)).collect();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v && parent[v] != u {
                    let cand = dist[u] + dist[v] + 1;
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    Ok(best)
}

/// True when no three vertices are pairwise adjacent. In a trigraph a
/// switchable pair counts as adjacent, so three mutually switchable
/// vertices do form a triangle.
pub fn is_triangle_free(t: &Trigraph) -> bool {
    find_triangle(t).is_none()
}

pub fn find_triangle(t: &Trigraph) -> Option<PatternWitness> {
    let n = t.n();
    for a in 0..n {
        for b in a + 1..n {
            if !t.adjacent(a, b) {
                continue;
            }
            for c in b + 1..n {
                if t.adjacent(a, c) && t.adjacent(b, c) {
                    return Some(PatternWitness {
                        kind: PatternKind::Triangle,
                        vertices: vec![a, b, c],
                    });
                }
            }
        }
    }
    None
}

/// The bull as a graph: triangle `{0, 1, 2}` with pendants `3` at `0`
/// and `4` at `1`.
pub fn bull_graph() -> Trigraph {
    Trigraph::from_strong_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])
}

/// Petersen graph (outer C5, inner pentagram, spokes).
pub fn petersen_graph() -> Trigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Trigraph::from_strong_edges(10, &edges)
}
