//! Zagreb indices, the path-of-length-three count, and the Wiener polarity
//! index — by brute-force breadth-first oracle and by the cycle-census
//! formula with its preconditions enforced.
//!
//! All arithmetic is exact integer arithmetic; every quantity is a count.

use thiserror::Error;

use crate::cycles::{CycleInventory, PreconditionReport};
use crate::graph::{distances_from, validate_connected, Graph, GraphError};

/// First Zagreb index: sum of squared degrees. Zero for an edgeless graph.
pub fn first_zagreb(g: &Graph) -> i64 {
    g.vertices().map(|v| (g.degree(v) as i64).pow(2)).sum()
}

/// Second Zagreb index: sum over edges of the endpoint degree product.
pub fn second_zagreb(g: &Graph) -> i64 {
    g.edges()
        .map(|(u, v)| g.degree(u) as i64 * g.degree(v) as i64)
        .sum()
}

/// Number of paths of length three, `Σ_{uv∈E} (deg(u)-1)(deg(v)-1)`.
/// Always equals `M2 - M1 + |E|`.
pub fn path3_count(g: &Graph) -> i64 {
    g.edges()
        .map(|(u, v)| (g.degree(u) as i64 - 1) * (g.degree(v) as i64 - 1))
        .sum()
}

/// Wiener polarity index by definition: the number of unordered vertex pairs
/// at distance exactly three, from per-source breadth-first rows.
pub fn wiener_polarity_oracle(g: &Graph) -> Result<i64, GraphError> {
    validate_connected(g)?;
    let mut pairs = 0i64;
    for u in g.vertices() {
        let row = distances_from(g, u)?;
        pairs += row.dist.iter().filter(|&(&v, &d)| v > u && d == 3).count() as i64;
    }
    Ok(pairs)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    /// The graph violates the structural hypotheses; the raw right-hand side
    /// can be silently wrong there (even negative), so the formula refuses.
    #[error("formula preconditions violated: {}", .report.violation_summary())]
    PreconditionsViolated { report: Box<PreconditionReport> },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Wiener polarity index by the closed formula
/// `M2 - M1 - f - 4|C4| - 5|C5| - 3|C6| + |E|`.
///
/// Refuses with the precondition report when the graph has a triangle, two
/// cycles of length 4-6 sharing more than two edges, or two 4-cycles
/// sharing more than one edge.
pub fn wiener_polarity_formula(g: &Graph) -> Result<i64, FormulaError> {
    validate_connected(g)?;
    let inventory = CycleInventory::build(g);
    let report = crate::cycles::preconditions_from(&inventory);
    if !report.passes {
        return Err(FormulaError::PreconditionsViolated {
            report: Box::new(report),
        });
    }
    Ok(formula_value(g, &inventory))
}

fn formula_value(g: &Graph, inventory: &CycleInventory) -> i64 {
    second_zagreb(g)
        - first_zagreb(g)
        - inventory.f_value() as i64
        - 4 * inventory.count(4) as i64
        - 5 * inventory.count(5) as i64
        - 3 * inventory.count(6) as i64
        + g.edge_count() as i64
}

/// Everything the toolkit knows about one graph's indices.
///
/// `wp_formula` is present exactly when the preconditions pass; a failed
/// check leaves the diagnostic in `preconditions` rather than a silent gap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub m1: i64,
    pub m2: i64,
    pub p3: i64,
    pub edge_count: usize,
    pub c4: usize,
    pub c5: usize,
    pub c6: usize,
    pub f: i64,
    pub wp_formula: Option<i64>,
    pub wp_oracle: i64,
    pub preconditions: PreconditionReport,
}

impl IndexReport {
    pub fn preconditions_pass(&self) -> bool {
        self.preconditions.passes
    }
}

/// Assembles the full report for a connected graph.
pub fn full_report(g: &Graph) -> Result<IndexReport, GraphError> {
    validate_connected(g)?;
    let inventory = CycleInventory::build(g);
    let preconditions = crate::cycles::preconditions_from(&inventory);
    let wp_formula = preconditions.passes.then(|| formula_value(g, &inventory));
    Ok(IndexReport {
        m1: first_zagreb(g),
        m2: second_zagreb(g),
        p3: path3_count(g),
        edge_count: g.edge_count(),
        c4: inventory.count(4),
        c5: inventory.count(5),
        c6: inventory.count(6),
        f: inventory.f_value() as i64,
        wp_formula,
        wp_oracle: wiener_polarity_oracle(g)?,
        preconditions,
    })
}
