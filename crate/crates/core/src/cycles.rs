//! Enumeration of 3- to 6-cycles, the exiting-edge functional `f`, and the
//! structural precondition check used by the Wiener polarity formula.
//!
//! A cycle is stored once in canonical form: lowest vertex id first, then
//! the lexicographically smaller of the two traversal directions. Every
//! simple k-cycle counts, chords or not; there is no restriction to induced
//! or face cycles.

use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

use crate::graph::{Graph, VertexId};

pub const MIN_CYCLE_LEN: usize = 3;
pub const MAX_CYCLE_LEN: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("cycle length {k} is outside the supported range {MIN_CYCLE_LEN}..={MAX_CYCLE_LEN}")]
    UnsupportedLength { k: usize },
    #[error("graph contains a 3-cycle; the degree-sum formula for exiting edges only holds on triangle-free graphs (run check_preconditions first)")]
    TrianglePresent,
    #[error("the given vertex sequence is not a 4-cycle of the graph")]
    NotAFourCycle,
}

/// A simple cycle in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<VertexId>,
}

impl Cycle {
    /// Canonicalizes an arbitrary rotation/direction of a cycle's vertex
    /// sequence. Panics if the sequence is shorter than 3 or repeats a vertex.
    pub fn new(vertices: Vec<VertexId>) -> Self {
        assert!(vertices.len() >= 3, "a cycle needs at least 3 vertices");
        let distinct: BTreeSet<_> = vertices.iter().collect();
        assert_eq!(
            distinct.len(),
            vertices.len(),
            "cycle vertices must be distinct"
        );

        let k = vertices.len();
        let start = (0..k)
            .min_by_key(|&i| vertices[i])
            .expect("nonempty sequence");
        let forward: Vec<VertexId> = (0..k).map(|i| vertices[(start + i) % k]).collect();
        let backward: Vec<VertexId> = (0..k).map(|i| vertices[(start + k - i) % k]).collect();
        let canonical = if forward <= backward {
            forward
        } else {
            backward
        };
        Cycle {
            vertices: canonical,
        }
    }

    fn from_canonical(vertices: Vec<VertexId>) -> Self {
        debug_assert_eq!(Cycle::new(vertices.clone()).vertices, vertices);
        Cycle { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// The cycle's edges as normalized `(min, max)` pairs.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| {
                let u = self.vertices[i];
                let v = self.vertices[(i + 1) % k];
                (u.min(v), u.max(v))
            })
            .collect()
    }

    pub fn edge_set(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.edges().into_iter().collect()
    }

    pub fn shared_edge_count(&self, other: &Cycle) -> usize {
        let mine = self.edge_set();
        other.edges().iter().filter(|e| mine.contains(e)).count()
    }
}

impl std::fmt::Display for Cycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ids: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", ids.join("-"))
    }
}

/// All simple k-cycles of `g`, each exactly once in canonical form, sorted.
///
/// Rooted depth-first search from every vertex: a cycle is emitted only at
/// the root equal to its minimal vertex, and only in the traversal direction
/// whose second vertex is smaller than its last, which kills rotation and
/// reflection duplicates.
pub fn enumerate_cycles(g: &Graph, k: usize) -> Result<Vec<Cycle>, CycleError> {
    if !(MIN_CYCLE_LEN..=MAX_CYCLE_LEN).contains(&k) {
        return Err(CycleError::UnsupportedLength { k });
    }
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(k);
    for root in g.vertices() {
        path.push(root);
        extend_cycle(g, root, k, &mut path, &mut out);
        path.pop();
    }
    out.sort();
    Ok(out)
}

fn extend_cycle(
    g: &Graph,
    root: VertexId,
    k: usize,
    path: &mut Vec<VertexId>,
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().expect("path never empty");
    if path.len() == k {
        if g.has_edge(last, root) && path[1] < path[k - 1] {
            out.push(Cycle::from_canonical(path.clone()));
        }
        return;
    }
    for &w in g.neighbors(last) {
        if w > root && !path.contains(&w) {
            path.push(w);
            extend_cycle(g, root, k, path, out);
            path.pop();
        }
    }
}

/// Enumerated 3- to 6-cycles of one graph plus the exiting-edge functional.
///
/// `f_value` is the degree-sum expression over all 4-cycles; it counts
/// (cycle, exiting edge) pairs exactly when the graph is triangle-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleInventory {
    cycles_by_length: BTreeMap<usize, Vec<Cycle>>,
    f_value: u64,
}

impl CycleInventory {
    pub fn build(g: &Graph) -> Self {
        let mut cycles_by_length = BTreeMap::new();
        for k in MIN_CYCLE_LEN..=MAX_CYCLE_LEN {
            let cycles = enumerate_cycles(g, k).expect("k is in range");
            cycles_by_length.insert(k, cycles);
        }
        let f_value = cycles_by_length[&4]
            .iter()
            .map(|c| degree_sum_minus_eight(g, c))
            .sum();
        CycleInventory {
            cycles_by_length,
            f_value,
        }
    }

    pub fn cycles(&self, k: usize) -> &[Cycle] {
        &self.cycles_by_length[&k]
    }

    pub fn count(&self, k: usize) -> usize {
        self.cycles_by_length[&k].len()
    }

    pub fn f_value(&self) -> u64 {
        self.f_value
    }
}

fn degree_sum_minus_eight(g: &Graph, c: &Cycle) -> u64 {
    let sum: usize = c.vertices().iter().map(|&v| g.degree(v)).sum();
    (sum - 8) as u64
}

fn has_triangle(g: &Graph) -> bool {
    !enumerate_cycles(g, 3).expect("3 is in range").is_empty()
}

/// Number of edges sharing exactly one vertex with the 4-cycle `c`, computed
/// as `deg(u1)+deg(u2)+deg(u3)+deg(u4) - 8`. Requires a triangle-free graph;
/// with triangles a 4-cycle may carry a chord and the expression overcounts.
pub fn exiting_edge_count(g: &Graph, c: &Cycle) -> Result<u64, CycleError> {
    if has_triangle(g) {
        return Err(CycleError::TrianglePresent);
    }
    let is_four_cycle = c.len() == 4 && c.edges().iter().all(|&(u, v)| g.has_edge(u, v));
    if !is_four_cycle {
        return Err(CycleError::NotAFourCycle);
    }
    Ok(degree_sum_minus_eight(g, c))
}

/// The exiting-edge functional: the number of ordered pairs `(C, e)` where
/// `C` is a 4-cycle and the edge `e` shares exactly one vertex with `C`.
/// Zero when the graph has no 4-cycle.
pub fn f_of(g: &Graph) -> Result<u64, CycleError> {
    if has_triangle(g) {
        return Err(CycleError::TrianglePresent);
    }
    Ok(CycleInventory::build(g).f_value())
}

/// The worst-overlapping pair of cycles found by the precondition scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePairOverlap {
    pub first: Cycle,
    pub second: Cycle,
    pub shared_edges: usize,
}

/// Outcome of checking the structural hypotheses of the Wiener polarity
/// formula: no triangles, at most two common edges between distinct cycles
/// of length 4-6, and at most one common edge between distinct 4-cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreconditionReport {
    pub triangle_free: bool,
    /// Worst pair among all distinct cycles of C4 ∪ C5 ∪ C6 (None if fewer than two cycles).
    pub max_shared_edges_456: Option<CyclePairOverlap>,
    /// Worst pair among distinct 4-cycles (None if fewer than two 4-cycles).
    pub max_shared_edges_44: Option<CyclePairOverlap>,
    pub passes: bool,
}

impl PreconditionReport {
    /// One-line description of the first violated hypothesis, for error
    /// messages and CLI diagnostics.
    pub fn violation_summary(&self) -> String {
        if !self.triangle_free {
            return "graph contains a 3-cycle".to_string();
        }
        if let Some(pair) = &self.max_shared_edges_44 {
            if pair.shared_edges > 1 {
                return format!(
                    "4-cycles {} and {} share {} edges (at most 1 allowed)",
                    pair.first, pair.second, pair.shared_edges
                );
            }
        }
        if let Some(pair) = &self.max_shared_edges_456 {
            if pair.shared_edges > 2 {
                return format!(
                    "cycles {} and {} share {} edges (at most 2 allowed)",
                    pair.first, pair.second, pair.shared_edges
                );
            }
        }
        "no violation".to_string()
    }
}

/// Checks the formula's structural preconditions. Violations are report
/// content, never errors.
pub fn check_preconditions(g: &Graph) -> PreconditionReport {
    let inventory = CycleInventory::build(g);
    preconditions_from(&inventory)
}

pub(crate) fn preconditions_from(inventory: &CycleInventory) -> PreconditionReport {
    let triangle_free = inventory.count(3) == 0;

    let small: Vec<&Cycle> = [4, 5, 6]
        .iter()
        .flat_map(|&k| inventory.cycles(k).iter())
        .collect();
    let max_shared_edges_456 = worst_pair(&small);
    let fours: Vec<&Cycle> = inventory.cycles(4).iter().collect();
    let max_shared_edges_44 = worst_pair(&fours);

    let passes = triangle_free
        && max_shared_edges_456
            .as_ref()
            .is_none_or(|p| p.shared_edges <= 2)
        && max_shared_edges_44
            .as_ref()
            .is_none_or(|p| p.shared_edges <= 1);

    PreconditionReport {
        triangle_free,
        max_shared_edges_456,
        max_shared_edges_44,
        passes,
    }
}

fn worst_pair(cycles: &[&Cycle]) -> Option<CyclePairOverlap> {
    let mut worst: Option<CyclePairOverlap> = None;
    for (i, a) in cycles.iter().enumerate() {
        for b in &cycles[i + 1..] {
            let shared = a.shared_edge_count(b);
            if worst.as_ref().is_none_or(|w| shared > w.shared_edges) {
                worst = Some(CyclePairOverlap {
                    first: (*a).clone(),
                    second: (*b).clone(),
                    shared_edges: shared,
                });
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn c6() -> Graph {
        parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 0").unwrap()
    }

    fn k23() -> Graph {
        // parts {0,1} and {2,3,4}
        parse_edge_list("0 2\n0 3\n0 4\n1 2\n1 3\n1 4").unwrap()
    }

    fn naphthalene() -> Graph {
        parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n5 6\n6 7\n7 8\n8 9\n9 0").unwrap()
    }

    #[test]
    fn canonical_form_is_rotation_and_reflection_invariant() {
        let a = Cycle::new(vec![3, 4, 5, 0, 1, 2]);
        let b = Cycle::new(vec![2, 1, 0, 5, 4, 3]);
        let c = Cycle::new(vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(a, c);
        assert_eq!(b, c);
        assert_eq!(c.vertices(), &[0, 1, 2, 3, 4, 5]);
        // direction choice: second element smaller than last
        let d = Cycle::new(vec![0, 5, 4, 3, 2, 1]);
        assert_eq!(d.vertices(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn six_cycle_counts() {
        let g = c6();
        assert_eq!(enumerate_cycles(&g, 6).unwrap().len(), 1);
        assert_eq!(enumerate_cycles(&g, 4).unwrap().len(), 0);
        assert_eq!(enumerate_cycles(&g, 3).unwrap().len(), 0);
        assert_eq!(enumerate_cycles(&g, 5).unwrap().len(), 0);
    }

    #[test]
    fn k23_has_three_4_cycles() {
        let cycles = enumerate_cycles(&k23(), 4).unwrap();
        assert_eq!(cycles.len(), 3);
        for c in &cycles {
            assert_eq!(exiting_edge_count(&k23(), c).unwrap(), 2);
        }
    }

    #[test]
    fn naphthalene_has_two_hexagons_and_no_ten_cycle_leak() {
        let g = naphthalene();
        assert_eq!(enumerate_cycles(&g, 6).unwrap().len(), 2);
        assert_eq!(enumerate_cycles(&g, 4).unwrap().len(), 0);
        assert_eq!(enumerate_cycles(&g, 5).unwrap().len(), 0);
    }

    #[test]
    fn chorded_six_cycle_still_counts() {
        // C6 plus the chord 0-3: the hexagon itself remains a 6-cycle and the
        // chord creates two quadrilaterals.
        let g = parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3").unwrap();
        assert_eq!(enumerate_cycles(&g, 6).unwrap().len(), 1);
        assert_eq!(enumerate_cycles(&g, 4).unwrap().len(), 2);
    }

    #[test]
    fn length_out_of_range_is_an_error() {
        assert!(matches!(
            enumerate_cycles(&c6(), 7),
            Err(CycleError::UnsupportedLength { k: 7 })
        ));
        assert!(matches!(
            enumerate_cycles(&c6(), 2),
            Err(CycleError::UnsupportedLength { k: 2 })
        ));
    }

    #[test]
    fn exiting_edges_on_plain_and_pendant_squares() {
        let square = parse_edge_list("0 1\n1 2\n2 3\n3 0").unwrap();
        let c = &enumerate_cycles(&square, 4).unwrap()[0];
        assert_eq!(exiting_edge_count(&square, c).unwrap(), 0);

        let pendant = parse_edge_list("0 1\n1 2\n2 3\n3 0\n2 4").unwrap();
        let c = &enumerate_cycles(&pendant, 4).unwrap()[0];
        assert_eq!(exiting_edge_count(&pendant, c).unwrap(), 1);
    }

    #[test]
    fn exiting_edge_count_matches_direct_edge_scan() {
        // the degree-sum value is literally the number of edges meeting the
        // cycle in exactly one vertex
        for g in [k23(), naphthalene()] {
            for c in enumerate_cycles(&g, 4).unwrap() {
                let on_cycle: std::collections::BTreeSet<_> =
                    c.vertices().iter().copied().collect();
                let direct = g
                    .edges()
                    .filter(|&(u, v)| on_cycle.contains(&u) != on_cycle.contains(&v))
                    .count() as u64;
                assert_eq!(exiting_edge_count(&g, &c).unwrap(), direct);
            }
        }
    }

    #[test]
    fn exiting_edge_count_rejects_non_cycles() {
        // 0 and 1 are on the same side of K2,3, so this is no cycle of g
        let g = k23();
        let not_a_cycle = Cycle::new(vec![0, 1, 2, 3]);
        assert_eq!(
            exiting_edge_count(&g, &not_a_cycle),
            Err(CycleError::NotAFourCycle)
        );
        // right length is required too
        let hexagon = Cycle::new(vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(
            exiting_edge_count(&c6(), &hexagon),
            Err(CycleError::NotAFourCycle)
        );
    }

    #[test]
    fn exiting_edge_count_requires_triangle_free() {
        // a 4-cycle sharing a vertex with a triangle
        let g = parse_edge_list("0 1\n1 2\n2 3\n3 0\n0 4\n4 5\n5 0").unwrap();
        let c = enumerate_cycles(&g, 4).unwrap().remove(0);
        assert_eq!(exiting_edge_count(&g, &c), Err(CycleError::TrianglePresent));
        assert_eq!(f_of(&g), Err(CycleError::TrianglePresent));
    }

    #[test]
    fn f_on_trees_and_k23() {
        let tree = parse_edge_list("0 1\n1 2\n1 3\n3 4").unwrap();
        assert_eq!(f_of(&tree).unwrap(), 0);
        assert_eq!(f_of(&k23()).unwrap(), 6);
    }

    #[test]
    fn f_matches_definitional_pair_count() {
        // independent oracle: count (C, e) pairs with |e ∩ V(C)| = 1 directly
        for g in [k23(), naphthalene(), c6()] {
            let mut pairs = 0u64;
            for c in enumerate_cycles(&g, 4).unwrap() {
                let on_cycle: std::collections::BTreeSet<_> =
                    c.vertices().iter().copied().collect();
                pairs += g
                    .edges()
                    .filter(|&(u, v)| on_cycle.contains(&u) != on_cycle.contains(&v))
                    .count() as u64;
            }
            assert_eq!(f_of(&g).unwrap(), pairs);
        }
    }

    #[test]
    fn preconditions_ok_on_hexagon_and_naphthalene() {
        assert!(check_preconditions(&c6()).passes);
        assert!(check_preconditions(&naphthalene()).passes);
    }

    #[test]
    fn preconditions_fail_on_k23() {
        let report = check_preconditions(&k23());
        assert!(report.triangle_free);
        let worst44 = report.max_shared_edges_44.as_ref().unwrap();
        assert_eq!(worst44.shared_edges, 2);
        assert!(!report.passes);
        assert!(report.violation_summary().contains("share 2 edges"));
    }

    #[test]
    fn no_two_cycles_share_an_edge_set() {
        for g in [k23(), naphthalene(), c6()] {
            let inv = CycleInventory::build(&g);
            let mut seen = std::collections::BTreeSet::new();
            for k in MIN_CYCLE_LEN..=MAX_CYCLE_LEN {
                for c in inv.cycles(k) {
                    assert!(seen.insert(c.edge_set()), "duplicate cycle {c}");
                }
            }
        }
    }
}
