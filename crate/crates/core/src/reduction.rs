//! Sparse 3-SAT to independent-set hardness instances.
//!
//! Each clause becomes a triangle, one vertex per literal; for every
//! variable, all edges between its positive and negative occurrences are
//! added. That conflict graph has an independent set of size `m` (the
//! clause count) exactly when the formula is satisfiable. Replacing every
//! edge with a path through `q` fresh internal vertices, for the smallest
//! even `q` with `3(q + 1) >= 2p`, removes all bulls and all holes
//! shorter than `2p` while shifting the target to `|E| * q/2 + m`.
//!
//! The repair procedure turns any independent set of the subdivided
//! graph into one of equal size whose original vertices are independent
//! in the conflict graph, by shifting selections along one conflicted
//! path at a time; a satisfying assignment can then be read off the
//! selected original vertices.

use crate::alpha::is_independent_set;
use crate::error::{Error, Result};
use crate::pattern::{find_bull, find_hole, PatternWitness};
use crate::trigraph::{Trigraph, VertexId, STRONG_EDGE};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A literal is a non-zero signed variable index (1-based magnitude).
pub type Literal = i32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Occurrence count of every literal, with multiplicity. Index
    /// `2 * (var - 1)` holds the positive literal, `+ 1` the negative.
    pub fn occurrence_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; 2 * self.num_vars];
        for clause in &self.clauses {
            for &lit in clause {
                let var = lit.unsigned_abs() as usize - 1;
                counts[2 * var + usize::from(lit < 0)] += 1;
            }
        }
        counts
    }

    /// The smallest sparsity constant the formula satisfies: the maximum
    /// number of times any single literal appears.
    pub fn sparsity(&self) -> usize {
        self.occurrence_counts().into_iter().max().unwrap_or(0)
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let value = assignment[lit.unsigned_abs() as usize - 1];
                (lit > 0) == value
            })
        })
    }
}

/// Satisfiability by assignment scan; the desk-scale oracle.
pub fn brute_force_satisfiable(phi: &CnfFormula) -> Option<Vec<bool>> {
    assert!(phi.num_vars <= 24, "assignment scan limited to 24 variables");
    for mask in 0u32..1 << phi.num_vars {
        let assignment: Vec<bool> = (0..phi.num_vars).map(|v| mask & (1 << v) != 0).collect();
        if phi.satisfied_by(&assignment) {
            return Some(assignment);
        }
    }
    None
}

/// DIMACS CNF parser restricted to width-3 clauses.
pub fn parse_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[Literal; 3]> = Vec::new();
    let mut pending: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(line_no, "duplicate problem line"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 || fields[1] != "cnf" {
                return Err(Error::parse(line_no, "expected `p cnf <vars> <clauses>`"));
            }
            let nv = fields[2]
                .parse()
                .map_err(|_| Error::parse(line_no, "invalid variable count"))?;
            let nc = fields[3]
                .parse()
                .map_err(|_| Error::parse(line_no, "invalid clause count"))?;
            header = Some((nv, nc));
            continue;
        }
        let Some((nv, _)) = header else {
            return Err(Error::parse(line_no, "clause before the problem line"));
        };
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| Error::parse(line_no, format!("invalid literal `{tok}`")))?;
            if lit == 0 {
                if pending.len() != 3 {
                    return Err(Error::parse(
                        line_no,
                        format!("clause of width {} (exactly 3 required)", pending.len()),
                    ));
                }
                clauses.push([pending[0], pending[1], pending[2]]);
                pending.clear();
            } else {
                if lit.unsigned_abs() as usize > nv {
                    return Err(Error::parse(
                        line_no,
                        format!("literal {lit} exceeds declared variable count {nv}"),
                    ));
                }
                pending.push(lit);
            }
        }
    }
    let Some((nv, nc)) = header else {
        return Err(Error::parse(last_line, "missing problem line"));
    };
    if !pending.is_empty() {
        return Err(Error::parse(last_line, "unterminated clause"));
    }
    if clauses.len() != nc {
        return Err(Error::parse(
            last_line,
            format!("clause count {} does not match declared {nc}", clauses.len()),
        ));
    }
    Ok(CnfFormula {
        num_vars: nv,
        clauses,
    })
}

/// Conflict graph: vertex `3j + i` is literal slot `i` of clause `j`.
/// Clause triangles plus all positive/negative edges per variable.
pub fn build_conflict_graph(phi: &CnfFormula) -> (Trigraph, Vec<(usize, Literal)>) {
    let m = phi.num_clauses();
    let mut g = Trigraph::new(3 * m);
    let labels: Vec<(usize, Literal)> = phi
        .clauses
        .iter()
        .enumerate()
        .flat_map(|(j, clause)| clause.iter().map(move |&lit| (j, lit)))
        .collect();
    for j in 0..m {
        g.set_theta(3 * j, 3 * j + 1, STRONG_EDGE);
        g.set_theta(3 * j, 3 * j + 2, STRONG_EDGE);
        g.set_theta(3 * j + 1, 3 * j + 2, STRONG_EDGE);
    }
    for u in 0..3 * m {
        for v in u + 1..3 * m {
            if labels[u].1 == -labels[v].1 {
                g.set_theta(u, v, STRONG_EDGE);
            }
        }
    }
    // Two triangle edges plus at most one conflict per opposite
    // occurrence of the literal.
    debug_assert!({
        let c = phi.sparsity();
        g.vertices().all(|v| g.strong_degree(v) <= c + 2)
    });
    (g, labels)
}

/// Smallest even `q` with `3(q + 1) >= 2p`.
pub fn compute_q(p: u32) -> Result<u32> {
    if p < 3 {
        return Err(Error::usage("the reduction requires p >= 3"));
    }
    let mut q = 0;
    while 3 * (q + 1) < 2 * p {
        q += 2;
    }
    Ok(q)
}

/// One subdivided edge: the original endpoints and the internal path
/// vertices in order from `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdividedEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub internal: Vec<VertexId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VertexLabel {
    Original {
        clause: usize,
        literal: Literal,
    },
    /// `position` is 1-based along the path of edge `paths[edge]`,
    /// walking from `u` to `v`.
    Internal {
        edge: usize,
        position: usize,
    },
}

/// Replaces every edge of a graph by a path through `q` fresh internal
/// vertices (`q` even, at least 2). Original ids are preserved; internal
/// ids are appended in sorted-edge order.
pub fn subdivide(g: &Trigraph, q: u32) -> Result<(Trigraph, Vec<SubdividedEdge>)> {
    if q < 2 || !q.is_multiple_of(2) {
        return Err(Error::usage("subdivision needs an even q >= 2"));
    }
    if !g.is_graph() {
        return Err(Error::usage("subdivision requires a graph"));
    }
    let n = g.n();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.strongly_adjacent(u, v) {
                edges.push((u, v));
            }
        }
    }
    let q = q as usize;
    let mut out = Trigraph::new(n + q * edges.len());
    for v in 0..n {
        out.set_weight(v, g.weight(v));
    }
    let mut paths = Vec::with_capacity(edges.len());
    let mut next = n;
    for (u, v) in edges {
        let internal: Vec<VertexId> = (next..next + q).collect();
        next += q;
        let mut prev = u;
        for &w in &internal {
            out.set_theta(prev, w, STRONG_EDGE);
            prev = w;
        }
        out.set_theta(prev, v, STRONG_EDGE);
        paths.push(SubdividedEdge { u, v, internal });
    }
    Ok((out, paths))
}

/// Everything produced by the reduction, including the labelings needed
/// to pull solutions back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub conflict_graph: Trigraph,
    /// The subdivided conflict graph.
    pub graph: Trigraph,
    pub labels: Vec<VertexLabel>,
    pub paths: Vec<SubdividedEdge>,
    pub num_vars: usize,
    pub num_clauses: usize,
    pub p: u32,
    pub q: u32,
    pub target_k: u64,
}

impl ReductionArtifact {
    pub fn original_edge_count(&self) -> usize {
        self.paths.len()
    }

    pub fn is_original(&self, v: VertexId) -> bool {
        matches!(self.labels[v], VertexLabel::Original { .. })
    }
}

pub fn reduce(phi: &CnfFormula, p: u32) -> Result<ReductionArtifact> {
    let q = compute_q(p)?;
    let (conflict_graph, conflict_labels) = build_conflict_graph(phi);
    let (graph, paths) = subdivide(&conflict_graph, q)?;
    let mut labels: Vec<VertexLabel> = conflict_labels
        .into_iter()
        .map(|(clause, literal)| VertexLabel::Original { clause, literal })
        .collect();
    for (edge, path) in paths.iter().enumerate() {
        for (i, _) in path.internal.iter().enumerate() {
            labels.push(VertexLabel::Internal {
                edge,
                position: i + 1,
            });
        }
    }
    debug_assert_eq!(labels.len(), graph.n());
    let m = phi.num_clauses() as u64;
    let target_k = paths.len() as u64 * (q as u64 / 2) + m;
    Ok(ReductionArtifact {
        conflict_graph,
        graph,
        labels,
        paths,
        num_vars: phi.num_vars,
        num_clauses: phi.num_clauses(),
        p,
        q,
        target_k,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleCheck {
    pub length: usize,
    pub witness: Option<PatternWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceVerification {
    pub bull: Option<PatternWitness>,
    pub holes: Vec<HoleCheck>,
}

impl InstanceVerification {
    pub fn passed(&self) -> bool {
        self.bull.is_none() && self.holes.iter().all(|h| h.witness.is_none())
    }
}

/// Confirms the subdivided graph is free of induced bulls and of holes of
/// length 4 through `2p - 1`. The exhaustive hole search is guarded to
/// `2p - 1 <= 9`.
pub fn verify_instance(art: &ReductionArtifact) -> Result<InstanceVerification> {
    verify_reduced_graph(&art.graph, art.p)
}

/// Same check against a bare graph, for artifacts reloaded from disk.
pub fn verify_reduced_graph(g: &Trigraph, p: u32) -> Result<InstanceVerification> {
    if p < 3 {
        return Err(Error::usage("the reduction requires p >= 3"));
    }
    if 2 * p - 1 > 9 {
        return Err(Error::capacity(
            "exhaustive hole verification supports 2p - 1 <= 9",
        ));
    }
    let bull = find_bull(g);
    let mut holes = Vec::new();
    for length in 4..=(2 * p as usize - 1) {
        holes.push(HoleCheck {
            length,
            witness: find_hole(g, length)?,
        });
    }
    Ok(InstanceVerification { bull, holes })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairResult {
    pub vertices: Vec<VertexId>,
    /// Conflict count after each pass; strictly decreasing to zero.
    pub eta_trace: Vec<usize>,
}

fn conflicted_edges(art: &ReductionArtifact, selected: &BTreeSet<VertexId>) -> Vec<usize> {
    art.paths
        .iter()
        .enumerate()
        .filter(|(_, path)| selected.contains(&path.u) && selected.contains(&path.v))
        .map(|(i, _)| i)
        .collect()
}

/// Rewrites an independent set of the subdivided graph into one of equal
/// cardinality with no original edge selected at both endpoints.
///
/// While a conflicted original edge exists, take the first one (paths are
/// in ascending endpoint order), walk its path `u = x_0, x_1, ..., x_q,
/// x_{q+1} = v`, find the smallest `i >= 1` with `x_i` and `x_{i+1}` both
/// unselected, and shift: deselect `x_0, x_2, ..., x_{i-1}`, select
/// `x_1, x_3, ..., x_i`. The gap index is always odd and the shift frees
/// `u` while preserving size and independence.
pub fn repair_independent_set(art: &ReductionArtifact, set: &[VertexId]) -> Result<RepairResult> {
    if set.iter().any(|&v| v >= art.graph.n()) {
        return Err(Error::usage("set contains an out-of-range vertex"));
    }
    if !is_independent_set(&art.graph, set) {
        return Err(Error::usage("set is not independent in the subdivided graph"));
    }
    let mut selected: BTreeSet<VertexId> = set.iter().copied().collect();
    let original_size = selected.len();
    let mut eta_trace = Vec::new();
    let mut eta = conflicted_edges(art, &selected).len();
    while eta > 0 {
        let edge = conflicted_edges(art, &selected)[0];
        let path = &art.paths[edge];
        // x_0 .. x_{q+1} including both endpoints.
        let mut walk = vec![path.u];
        walk.extend(&path.internal);
        walk.push(path.v);
        let q = path.internal.len();
        let gap = (1..=q)
            .find(|&i| !selected.contains(&walk[i]) && !selected.contains(&walk[i + 1]))
            .expect("an even-length path between selected endpoints has a double gap");
        assert!(gap % 2 == 1, "the first double gap sits at an odd index");
        for j in 0..=(gap - 1) / 2 {
            let removed = selected.remove(&walk[2 * j]);
            debug_assert!(removed, "alternation forces even positions selected");
            selected.insert(walk[2 * j + 1]);
        }
        let next_eta = conflicted_edges(art, &selected).len();
        assert!(next_eta < eta, "each pass must strictly decrease conflicts");
        assert_eq!(selected.len(), original_size, "cardinality must be preserved");
        let as_vec: Vec<VertexId> = selected.iter().copied().collect();
        assert!(
            is_independent_set(&art.graph, &as_vec),
            "independence must be preserved"
        );
        eta = next_eta;
        eta_trace.push(eta);
    }
    Ok(RepairResult {
        vertices: selected.into_iter().collect(),
        eta_trace,
    })
}

/// Reads a satisfying assignment off an independent set of size at least
/// `target_k`: after repair, at least `m` original vertices are selected,
/// one per clause triangle, and their literal labels are consistent.
/// Variables not mentioned default to false.
pub fn extract_assignment(art: &ReductionArtifact, set: &[VertexId]) -> Result<Vec<bool>> {
    if (set.len() as u64) < art.target_k {
        return Err(Error::usage(format!(
            "set of size {} is below the target {}",
            set.len(),
            art.target_k
        )));
    }
    let repaired = repair_independent_set(art, set)?;
    let originals: Vec<VertexId> = repaired
        .vertices
        .iter()
        .copied()
        .filter(|&v| art.is_original(v))
        .collect();
    if originals.len() < art.num_clauses {
        return Err(Error::Internal(format!(
            "repaired set projects to {} original vertices, below the clause count {}",
            originals.len(),
            art.num_clauses
        )));
    }
    let mut assignment = vec![false; art.num_vars];
    for &v in &originals {
        let VertexLabel::Original { literal, .. } = art.labels[v] else {
            unreachable!()
        };
        let var = literal.unsigned_abs() as usize - 1;
        assignment[var] = literal > 0;
    }
    // Selected originals are independent in the conflict graph, so no
    // variable is set both ways; one per triangle satisfies every clause.
    Ok(assignment)
}

/// Forward direction: an independent set of exactly the target size built
/// from a satisfying assignment — one true-literal vertex per clause plus
/// `q/2` internal vertices per original edge.
pub fn lift_assignment(art: &ReductionArtifact, assignment: &[bool]) -> Result<Vec<VertexId>> {
    let mut selected: Vec<VertexId> = Vec::new();
    let mut clause_done = vec![false; art.num_clauses];
    for (v, label) in art.labels.iter().enumerate() {
        let VertexLabel::Original { clause, literal } = *label else {
            continue;
        };
        if clause_done[clause] {
            continue;
        }
        let var = literal.unsigned_abs() as usize - 1;
        if var >= assignment.len() {
            return Err(Error::usage("assignment too short for the formula"));
        }
        if (literal > 0) == assignment[var] {
            clause_done[clause] = true;
            selected.push(v);
        }
    }
    if clause_done.iter().any(|&done| !done) {
        return Err(Error::usage("assignment does not satisfy every clause"));
    }
    let chosen: BTreeSet<VertexId> = selected.iter().copied().collect();
    for path in &art.paths {
        let q = path.internal.len();
        if chosen.contains(&path.u) {
            // Skip x_1 (adjacent to u); take even positions up to x_q.
            selected.extend((1..=q / 2).map(|j| path.internal[2 * j - 1]));
        } else {
            // Take odd positions x_1, x_3, ..., x_{q-1}.
            selected.extend((0..q / 2).map(|j| path.internal[2 * j]));
        }
    }
    selected.sort_unstable();
    assert_eq!(selected.len() as u64, art.target_k);
    assert!(is_independent_set(&art.graph, &selected));
    Ok(selected)
}
