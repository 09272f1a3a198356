//! The trigraph data model: a symmetric ternary adjacency structure over
//! dense integer vertex ids with non-negative integer vertex weights.
//!
//! Every unordered pair of distinct vertices carries one of three values:
//! `+1` (strong edge), `-1` (strong antiedge), or `0` (switchable pair).
//! Two vertices are *adjacent* when the pair value is `>= 0` and
//! *antiadjacent* when it is `<= 0`; a switchable pair counts as both.
//! A trigraph with no switchable pairs is an ordinary graph.

use serde::{Deserialize, Serialize};

pub type VertexId = usize;

/// Pair value for a strong edge.
pub const STRONG_EDGE: i8 = 1;
/// Pair value for a switchable (undecided) pair.
pub const SWITCHABLE: i8 = 0;
/// Pair value for a strong antiedge.
pub const STRONG_ANTIEDGE: i8 = -1;

/// Relation of a single vertex to a set of vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetRelation {
    /// Strongly adjacent to every member of the set.
    StronglyComplete,
    /// Strongly antiadjacent to every member of the set.
    StronglyAnticomplete,
    /// Neither of the above (any switchable pair into the set forces this).
    Mixed,
}

/// A trigraph on `n` vertices, stored as a dense symmetric ternary matrix.
///
/// Construction defaults every pair to a strong antiedge and every weight
/// to 1; strong edges and switchable pairs are set explicitly. Instances
/// are treated as immutable once built: all queries take `&self`.
#[derive(Clone, PartialEq, Eq)]
pub struct Trigraph {
    n: usize,
    theta: Vec<i8>,
    weights: Vec<u64>,
}

impl std::fmt::Debug for Trigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Trigraph(n={}", self.n)?;
        for u in 0..self.n {
            for v in u + 1..self.n {
                match self.theta(u, v) {
                    STRONG_EDGE => write!(f, ", {u}-{v}")?,
                    SWITCHABLE => write!(f, ", {u}~{v}")?,
                    _ => {}
                }
            }
        }
        write!(f, ")")
    }
}

impl Trigraph {
    /// Edgeless trigraph (all pairs strong antiedges), unit weights.
    pub fn new(n: usize) -> Self {
        let mut theta = vec![STRONG_ANTIEDGE; n * n];
        // Keep the unused diagonal at a canonical value so structural
        // equality works across construction paths.
        for v in 0..n {
            theta[v * n + v] = 0;
        }
        Trigraph {
            n,
            theta,
            weights: vec![1; n],
        }
    }

    /// Graph constructor: listed pairs become strong edges, the rest
    /// strong antiedges.
    pub fn from_strong_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut t = Trigraph::new(n);
        for &(u, v) in edges {
            t.set_theta(u, v, STRONG_EDGE);
        }
        t
    }

    /// Path v0 - v1 - ... - v(n-1).
    pub fn path(n: usize) -> Self {
        Trigraph::from_strong_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    /// Cycle on n vertices (n >= 3).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Trigraph::from_strong_edges(n, &edges)
    }

    /// Complete graph on n vertices.
    pub fn complete(n: usize) -> Self {
        let mut t = Trigraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                t.set_theta(u, v, STRONG_EDGE);
            }
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    /// The stored pair value. Panics on out-of-range ids or `u == v`:
    /// the value of a vertex with itself is undefined.
    #[inline]
    pub fn theta(&self, u: VertexId, v: VertexId) -> i8 {
        assert!(u != v, "theta is undefined on (v, v)");
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.theta[u * self.n + v]
    }

    /// Sets a pair value symmetrically. Panics on misuse, like `theta`.
    pub fn set_theta(&mut self, u: VertexId, v: VertexId, value: i8) {
        assert!(u != v, "theta is undefined on (v, v)");
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert!((-1..=1).contains(&value), "pair value must be -1, 0 or +1");
        self.theta[u * self.n + v] = value;
        self.theta[v * self.n + u] = value;
    }

    pub fn weight(&self, v: VertexId) -> u64 {
        self.weights[v]
    }

    pub fn set_weight(&mut self, v: VertexId, w: u64) {
        self.weights[v] = w;
    }

    pub fn total_weight(&self, set: &[VertexId]) -> u64 {
        set.iter().map(|&v| self.weights[v]).sum()
    }

    #[inline]
    pub fn strongly_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.theta(u, v) == STRONG_EDGE
    }

    #[inline]
    pub fn strongly_antiadjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.theta(u, v) == STRONG_ANTIEDGE
    }

    #[inline]
    pub fn semiadjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.theta(u, v) == SWITCHABLE
    }

    /// Adjacent in the trigraph sense: strong edge or switchable pair.
    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.theta(u, v) >= 0
    }

    /// Antiadjacent in the trigraph sense: strong antiedge or switchable pair.
    #[inline]
    pub fn antiadjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.theta(u, v) <= 0
    }

    /// True when no pair is switchable, i.e. the structure is a graph.
    pub fn is_graph(&self) -> bool {
        self.vertices()
            .all(|u| (u + 1..self.n).all(|v| self.theta(u, v) != SWITCHABLE))
    }

    /// All switchable pairs, as ordered `(u, v)` with `u < v`.
    pub fn switchable_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in u + 1..self.n {
                if self.theta(u, v) == SWITCHABLE {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Every vertex belongs to at most one switchable pair.
    pub fn is_monogamous(&self) -> bool {
        let mut count = vec![0usize; self.n];
        for (u, v) in self.switchable_pairs() {
            count[u] += 1;
            count[v] += 1;
            if count[u] > 1 || count[v] > 1 {
                return false;
            }
        }
        true
    }

    /// Vertices strongly adjacent to `v`.
    pub fn strong_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.vertices()
            .filter(|&u| u != v && self.strongly_adjacent(u, v))
            .collect()
    }

    /// Vertices adjacent to `v` (strong edges and switchable pairs).
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.vertices()
            .filter(|&u| u != v && self.adjacent(u, v))
            .collect()
    }

    pub fn strong_degree(&self, v: VertexId) -> usize {
        self.vertices()
            .filter(|&u| u != v && self.strongly_adjacent(u, v))
            .count()
    }

    /// Number of strong edges.
    pub fn strong_edge_count(&self) -> usize {
        let mut m = 0;
        for u in self.vertices() {
            for v in u + 1..self.n {
                if self.theta(u, v) == STRONG_EDGE {
                    m += 1;
                }
            }
        }
        m
    }

    /// Complement: every pair value negated, weights preserved. An
    /// involution; switchable pairs are fixed points.
    pub fn complement(&self) -> Trigraph {
        let mut t = self.clone();
        for x in &mut t.theta {
            *x = -*x;
        }
        t
    }

    /// The realization obtained by deciding every switchable pair as a
    /// strong antiedge. The output is a graph and preserves all strong
    /// edges and strong antiedges.
    pub fn realize_antiedges(&self) -> Trigraph {
        let mut t = self.clone();
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && t.theta[u * self.n + v] == SWITCHABLE {
                    t.theta[u * self.n + v] = STRONG_ANTIEDGE;
                }
            }
        }
        t
    }

    /// Induced subtrigraph on `set`, together with the relabeling map:
    /// entry `i` of the map is the original id of new vertex `i`.
    /// Vertices are relabeled in ascending original-id order.
    ///
    /// Panics if `set` contains an out-of-range id or a duplicate.
    pub fn induced(&self, set: &[VertexId]) -> (Trigraph, Vec<VertexId>) {
        let mut map: Vec<VertexId> = set.to_vec();
        map.sort_unstable();
        assert!(
            map.windows(2).all(|w| w[0] != w[1]),
            "induced set contains duplicates"
        );
        assert!(
            map.iter().all(|&v| v < self.n),
            "induced set contains out-of-range id"
        );
        let mut t = Trigraph::new(map.len());
        for (i, &u) in map.iter().enumerate() {
            t.weights[i] = self.weights[u];
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                t.set_theta(i, j, self.theta(u, v));
            }
        }
        (t, map)
    }

    /// Classification of vertex `v` against a non-empty set it does not
    /// belong to. Any switchable pair into the set yields `Mixed`.
    pub fn classify(&self, v: VertexId, set: &[VertexId]) -> SetRelation {
        assert!(!set.is_empty(), "classify against an empty set");
        assert!(!set.contains(&v), "classify requires v outside the set");
        let mut all_plus = true;
        let mut all_minus = true;
        for &u in set {
            match self.theta(u, v) {
                STRONG_EDGE => all_minus = false,
                STRONG_ANTIEDGE => all_plus = false,
                _ => {
                    all_plus = false;
                    all_minus = false;
                }
            }
            if !all_plus && !all_minus {
                return SetRelation::Mixed;
            }
        }
        if all_plus {
            SetRelation::StronglyComplete
        } else {
            SetRelation::StronglyAnticomplete
        }
    }

    /// True when every `a`-`b` pair across the two sets is a strong edge.
    pub fn strongly_complete(&self, a: &[VertexId], b: &[VertexId]) -> bool {
        a.iter()
            .all(|&u| b.iter().all(|&v| self.strongly_adjacent(u, v)))
    }

    /// True when every `a`-`b` pair across the two sets is a strong antiedge.
    pub fn strongly_anticomplete(&self, a: &[VertexId], b: &[VertexId]) -> bool {
        a.iter()
            .all(|&u| b.iter().all(|&v| self.strongly_antiadjacent(u, v)))
    }
}
