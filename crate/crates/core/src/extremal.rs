//! Extremal families and exhaustive enumeration of catafused systems.
//!
//! Grows dualist blueprints hexagon by hexagon over all attachment choices,
//! pruning lattice collisions early and deduplicating shapes by their
//! canonical cell set; final results are deduplicated by exact graph
//! canonical form, which is the ground truth for "up to isomorphism".

use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::chem::lattice::{canonical_cells, Cell, DIRECTION_COUNT};
use crate::chem::{
    build, classify_hexagons, closed_form_report, BuildError, BuiltSystem, HexClass,
    PolycyclicSpec, SpecError, SpecNode, SystemKind,
};
use crate::graph::Graph;
use crate::indices::{
    first_zagreb, second_zagreb, wiener_polarity_formula, wiener_polarity_oracle,
};

/// Default ceiling for exhaustive enumeration. Desk-scale verification stays
/// below it; the CLI can override it through an environment variable.
pub const DEFAULT_MAX_H: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error(
        "h = {h} exceeds the exhaustive enumeration guard ({guard}); raise the guard to go further"
    )]
    GuardExceeded { h: usize, guard: usize },
    #[error("h = {h} is out of range for a {kind} system")]
    InvalidH { h: usize, kind: SystemKind },
    #[error("the {class} family is not defined for h = {h}")]
    FamilyUndefined { class: FamilyClass, h: usize },
    #[error("hexagon {id} is not in the blueprint")]
    UnknownHexagon { id: u32 },
    #[error("hexagon {id} is not a terminal hexagon")]
    TargetNotTerminal { id: u32 },
    #[error("extension expects {expected} placement direction(s), got {got}")]
    PlacementArity { expected: usize, got: usize },
    #[error("placement does not make the target hexagon {expected}")]
    PlacementClass { expected: HexClass },
    #[error("invalid placement: {0}")]
    Spec(#[from] SpecError),
    #[error("placement is not lattice-realizable: {0}")]
    Unrealizable(#[from] BuildError),
}

/// How one extension step reshapes its terminal target hexagon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionKind {
    /// Attach two hexagons; the target becomes branched.
    Branch,
    /// Attach one hexagon off-axis; the target becomes angular.
    Bend,
    /// Attach one hexagon straight on; the target stays on a line.
    Straight,
}

impl ExtensionKind {
    fn arity(self) -> usize {
        match self {
            ExtensionKind::Branch => 2,
            ExtensionKind::Bend | ExtensionKind::Straight => 1,
        }
    }

    fn target_class(self) -> HexClass {
        match self {
            ExtensionKind::Branch => HexClass::Branched,
            ExtensionKind::Bend => HexClass::Angular,
            ExtensionKind::Straight => HexClass::Linear,
        }
    }
}

/// One extension step: which terminal hexagon to grow from, and where the
/// new hexagon(s) go.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionStep {
    pub kind: ExtensionKind,
    pub target: u32,
    pub directions: Vec<u8>,
}

/// Applies one extension step to a blueprint. The target must be terminal,
/// the placement must be lattice-realizable, and the target's class after
/// the step must match the step kind.
pub fn apply_extension(
    spec: &PolycyclicSpec,
    step: &ExtensionStep,
) -> Result<PolycyclicSpec, ExtremalError> {
    if spec.node(step.target).is_none() {
        return Err(ExtremalError::UnknownHexagon { id: step.target });
    }
    if spec.tree_degree(step.target) != 1 {
        return Err(ExtremalError::TargetNotTerminal { id: step.target });
    }
    let expected = step.kind.arity();
    if step.directions.len() != expected {
        return Err(ExtremalError::PlacementArity {
            expected,
            got: step.directions.len(),
        });
    }

    let mut nodes: Vec<SpecNode> = spec.nodes().copied().collect();
    let mut next_id = spec.max_id() + 1;
    for &direction in &step.directions {
        nodes.push(SpecNode {
            id: next_id,
            parent: Some(step.target),
            direction,
        });
        next_id += 1;
    }
    let grown = PolycyclicSpec::new(spec.kind(), nodes)?;
    grown.place()?;
    let class = classify_hexagons(&grown).per_hexagon[&step.target];
    if class != step.kind.target_class() {
        return Err(ExtremalError::PlacementClass {
            expected: step.kind.target_class(),
        });
    }
    Ok(grown)
}

/// The named families whose members this module can generate and recognize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyClass {
    /// The unique linear chain; the Wiener polarity minimum.
    LinearChain,
    /// Built from the two-hexagon seed by branching steps (plus one bend for
    /// odd h); exactly the Wiener polarity maximum.
    MaxWp,
    /// Odd h only: branching steps plus one straight step. Matches the
    /// maximal branched count but falls one segment short.
    NearMaxWp,
}

impl std::fmt::Display for FamilyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            FamilyClass::LinearChain => "linear",
            FamilyClass::MaxWp => "max",
            FamilyClass::NearMaxWp => "near_max",
        };
        write!(f, "{name}")
    }
}

/// The unique linear chain on `h` hexagons.
pub fn linear_chain(h: usize, kind: SystemKind) -> Result<BuiltSystem, ExtremalError> {
    let min = match kind {
        SystemKind::Benzenoid => 1,
        SystemKind::Phenylene => 2,
    };
    if h < min {
        return Err(ExtremalError::InvalidH { h, kind });
    }
    let sys = build(&PolycyclicSpec::linear(kind, h)).expect("chains always realize");
    Ok(sys)
}

/// Generates every member of a family at `h` hexagons, up to isomorphism,
/// by exploring all step orders, targets, and placements.
pub fn generate_family(
    h: usize,
    kind: SystemKind,
    class: FamilyClass,
) -> Result<Vec<BuiltSystem>, ExtremalError> {
    let (branch_steps, single_step) = match class {
        FamilyClass::LinearChain => {
            return Ok(vec![linear_chain(h, kind)?]);
        }
        FamilyClass::MaxWp => {
            if h < 2 {
                return Err(ExtremalError::FamilyUndefined { class, h });
            }
            if h % 2 == 0 {
                (h / 2 - 1, None)
            } else {
                ((h - 1) / 2 - 1, Some(ExtensionKind::Bend))
            }
        }
        FamilyClass::NearMaxWp => {
            if h < 3 || h % 2 == 0 {
                return Err(ExtremalError::FamilyUndefined { class, h });
            }
            ((h - 1) / 2 - 1, Some(ExtensionKind::Straight))
        }
    };

    // states keyed by (canonical shape, steps remaining); the single bend or
    // straight step interleaves at every position of the step order
    let seed = PolycyclicSpec::linear(kind, 2);
    let singles = usize::from(single_step.is_some());
    let mut frontier: BTreeMap<(Vec<Cell>, usize, usize), PolycyclicSpec> = BTreeMap::new();
    frontier.insert((shape_key(&seed), branch_steps, singles), seed);
    let mut complete: BTreeMap<Vec<Cell>, PolycyclicSpec> = BTreeMap::new();

    while let Some(((shape, branches_left, singles_left), spec)) = frontier.pop_first() {
        if branches_left == 0 && singles_left == 0 {
            complete.entry(shape).or_insert(spec);
            continue;
        }
        if branches_left > 0 {
            for grown in applications(&spec, ExtensionKind::Branch) {
                frontier
                    .entry((shape_key(&grown), branches_left - 1, singles_left))
                    .or_insert(grown);
            }
        }
        if singles_left > 0 {
            let kind = single_step.expect("singles_left > 0 implies a single step kind");
            for grown in applications(&spec, kind) {
                frontier
                    .entry((shape_key(&grown), branches_left, singles_left - 1))
                    .or_insert(grown);
            }
        }
    }

    Ok(dedup_by_graph(complete.into_values()))
}

/// Every realizable application of one extension kind to one blueprint.
fn applications(spec: &PolycyclicSpec, kind: ExtensionKind) -> Vec<PolycyclicSpec> {
    let mut out = Vec::new();
    for target in spec.terminals() {
        let placements: Vec<Vec<u8>> = match kind {
            ExtensionKind::Branch => {
                let mut pairs = Vec::new();
                for d1 in 0..DIRECTION_COUNT {
                    for d2 in d1 + 1..DIRECTION_COUNT {
                        pairs.push(vec![d1, d2]);
                    }
                }
                pairs
            }
            _ => (0..DIRECTION_COUNT).map(|d| vec![d]).collect(),
        };
        for directions in placements {
            let step = ExtensionStep {
                kind,
                target,
                directions,
            };
            if let Ok(grown) = apply_extension(spec, &step) {
                out.push(grown);
            }
        }
    }
    out
}

fn shape_key(spec: &PolycyclicSpec) -> Vec<Cell> {
    let cells: Vec<Cell> = spec
        .place()
        .expect("only realizable specs are kept")
        .into_values()
        .collect();
    canonical_cells(&cells)
}

fn dedup_by_graph<I: IntoIterator<Item = PolycyclicSpec>>(specs: I) -> Vec<BuiltSystem> {
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut out = Vec::new();
    for spec in specs {
        let sys = build(&spec).expect("placement was already validated");
        if seen.insert(canonical_form(&sys.graph)) {
            out.push(sys);
        }
    }
    out
}

/// Exhaustively enumerates every lattice-realizable catacondensed system
/// with exactly `h` hexagons, once up to isomorphism, under the default
/// guard.
pub fn enumerate_catafused(h: usize, kind: SystemKind) -> Result<Vec<BuiltSystem>, ExtremalError> {
    enumerate_catafused_with_limit(h, kind, DEFAULT_MAX_H)
}

/// Exhaustive enumeration with an explicit guard.
pub fn enumerate_catafused_with_limit(
    h: usize,
    kind: SystemKind,
    guard: usize,
) -> Result<Vec<BuiltSystem>, ExtremalError> {
    if h > guard {
        return Err(ExtremalError::GuardExceeded { h, guard });
    }
    let min = match kind {
        SystemKind::Benzenoid => 1,
        SystemKind::Phenylene => 2,
    };
    if h < min {
        return Err(ExtremalError::InvalidH { h, kind });
    }

    let mut level: BTreeMap<Vec<Cell>, PolycyclicSpec> = BTreeMap::new();
    let single = PolycyclicSpec::linear(kind, 1);
    level.insert(shape_key(&single), single);

    for _ in 1..h {
        let mut next: BTreeMap<Vec<Cell>, PolycyclicSpec> = BTreeMap::new();
        for spec in level.values() {
            for node in spec.nodes().copied().collect::<Vec<_>>() {
                if spec.tree_degree(node.id) >= 3 {
                    continue;
                }
                let used: BTreeSet<u8> = spec.incident_directions(node.id).into_iter().collect();
                for direction in (0..DIRECTION_COUNT).filter(|d| !used.contains(d)) {
                    let mut nodes: Vec<SpecNode> = spec.nodes().copied().collect();
                    nodes.push(SpecNode {
                        id: spec.max_id() + 1,
                        parent: Some(node.id),
                        direction,
                    });
                    let Ok(candidate) = PolycyclicSpec::new(kind, nodes) else {
                        continue;
                    };
                    if candidate.place().is_ok() {
                        next.entry(shape_key(&candidate)).or_insert(candidate);
                    }
                }
            }
        }
        level = next;
    }

    Ok(dedup_by_graph(level.into_values()))
}

/// Outcome of the minimum/maximum scan at one hexagon count.
#[derive(Debug, Clone)]
pub struct ExtremalReport {
    pub kind: SystemKind,
    pub h: usize,
    pub system_count: usize,
    pub min_value: i64,
    pub min_witnesses: Vec<BuiltSystem>,
    pub max_value: i64,
    pub max_witnesses: Vec<BuiltSystem>,
    pub family_size: usize,
    pub min_unique_is_linear: bool,
    pub max_set_equals_family: bool,
    /// Odd h only: the near-maximal family matches the maximal branched
    /// count but stays below the maximum index.
    pub near_max_consistent: Option<bool>,
    pub counterexamples: Vec<String>,
}

impl ExtremalReport {
    pub fn passed(&self) -> bool {
        self.min_unique_is_linear
            && self.max_set_equals_family
            && self.near_max_consistent.unwrap_or(true)
            && self.counterexamples.is_empty()
    }
}

/// Scans every system with `h` hexagons and checks the extremal structure:
/// the minimum is attained exactly by the linear chain, the maximum exactly
/// by the branching-built family, and (odd h) the near-maximal family tops
/// the branched count but not the segment count. Failed checks land in the
/// report as counterexamples, never as a crash.
pub fn verify_extremal(h: usize, kind: SystemKind) -> Result<ExtremalReport, ExtremalError> {
    verify_extremal_with_limit(h, kind, DEFAULT_MAX_H)
}

pub fn verify_extremal_with_limit(
    h: usize,
    kind: SystemKind,
    guard: usize,
) -> Result<ExtremalReport, ExtremalError> {
    if h < 2 {
        return Err(ExtremalError::InvalidH { h, kind });
    }
    let systems = enumerate_catafused_with_limit(h, kind, guard)?;
    let mut counterexamples = Vec::new();

    let wp_of = |sys: &BuiltSystem| -> i64 {
        closed_form_report(&sys.profile, kind)
            .expect("profile comes from a built system")
            .wp
    };
    let min_value = systems.iter().map(&wp_of).min().expect("h >= 1 enumerates");
    let max_value = systems.iter().map(&wp_of).max().expect("h >= 1 enumerates");
    let min_witnesses: Vec<BuiltSystem> = systems
        .iter()
        .filter(|s| wp_of(s) == min_value)
        .cloned()
        .collect();
    let max_witnesses: Vec<BuiltSystem> = systems
        .iter()
        .filter(|s| wp_of(s) == max_value)
        .cloned()
        .collect();

    let linear = linear_chain(h, kind)?;
    let min_unique_is_linear = min_witnesses.len() == 1
        && canonical_form(&min_witnesses[0].graph) == canonical_form(&linear.graph);
    if !min_unique_is_linear {
        counterexamples.push(format!(
            "minimum {min_value} attained by {} system(s), expected the linear chain alone",
            min_witnesses.len()
        ));
    }

    let family = generate_family(h, kind, FamilyClass::MaxWp)?;
    let family_forms: BTreeSet<CanonicalForm> =
        family.iter().map(|s| canonical_form(&s.graph)).collect();
    let max_forms: BTreeSet<CanonicalForm> = max_witnesses
        .iter()
        .map(|s| canonical_form(&s.graph))
        .collect();
    let max_set_equals_family = family_forms == max_forms;
    if !max_set_equals_family {
        counterexamples.push(format!(
            "maximum witnesses ({}) differ from the generated family ({})",
            max_forms.len(),
            family_forms.len()
        ));
    }

    let near_max_consistent = if h % 2 == 1 {
        let near = generate_family(h, kind, FamilyClass::NearMaxWp)?;
        let max_b = systems.iter().map(|s| s.profile.b).max().unwrap_or(0);
        let mut ok = !near.is_empty();
        for sys in &near {
            let wp = wp_of(sys);
            if sys.profile.b != max_b || sys.profile.s + 1 != h - 1 || wp + 1 != max_value {
                ok = false;
                counterexamples.push(format!(
                    "near-maximal member with b={} s={} wp={wp} (expected b={max_b}, s={}, wp={})",
                    sys.profile.b,
                    sys.profile.s,
                    h - 2,
                    max_value - 1
                ));
            }
        }
        Some(ok)
    } else {
        None
    };

    Ok(ExtremalReport {
        kind,
        h,
        system_count: systems.len(),
        min_value,
        min_witnesses,
        max_value,
        max_witnesses,
        family_size: family.len(),
        min_unique_is_linear,
        max_set_equals_family,
        near_max_consistent,
        counterexamples,
    })
}

/// Result of the three-way agreement sweep over one enumeration level.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub kind: SystemKind,
    pub h: usize,
    pub system_count: usize,
    pub mismatches: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// For every system with `h` hexagons, checks that the closed form, the
/// cycle-census formula, and the breadth-first oracle agree on the Wiener
/// polarity index, and that the closed Zagreb values match the generic ones.
pub fn agreement_sweep(
    h: usize,
    kind: SystemKind,
    guard: usize,
) -> Result<SweepReport, ExtremalError> {
    let systems = enumerate_catafused_with_limit(h, kind, guard)?;
    let mut mismatches = Vec::new();
    for sys in &systems {
        let closed = closed_form_report(&sys.profile, kind).expect("built profile");
        let formula = wiener_polarity_formula(&sys.graph);
        let oracle = wiener_polarity_oracle(&sys.graph);
        let spec_line = sys.spec.to_spec_text().replace('\n', " ; ");
        match (formula, oracle) {
            (Ok(f), Ok(o)) => {
                if closed.wp != f || f != o {
                    mismatches.push(format!(
                        "wp mismatch closed={} formula={f} oracle={o} spec: {spec_line}",
                        closed.wp
                    ));
                }
            }
            (f, o) => mismatches.push(format!(
                "computation failed formula={f:?} oracle={o:?} spec: {spec_line}"
            )),
        }
        if closed.m1 != first_zagreb(&sys.graph) || closed.m2 != second_zagreb(&sys.graph) {
            mismatches.push(format!(
                "zagreb mismatch closed=({}, {}) generic=({}, {}) spec: {spec_line}",
                closed.m1,
                closed.m2,
                first_zagreb(&sys.graph),
                second_zagreb(&sys.graph)
            ));
        }
    }
    Ok(SweepReport {
        kind,
        h,
        system_count: systems.len(),
        mismatches,
    })
}

/// Canonical-form index of the named families at one hexagon count, used to
/// tag enumerated systems.
#[derive(Debug, Clone)]
pub struct FamilyIndex {
    linear: Option<CanonicalForm>,
    max: BTreeSet<CanonicalForm>,
    near_max: BTreeSet<CanonicalForm>,
}

impl FamilyIndex {
    pub fn build(h: usize, kind: SystemKind) -> Result<Self, ExtremalError> {
        let linear = linear_chain(h, kind).ok().map(|s| canonical_form(&s.graph));
        let collect = |class: FamilyClass| -> Result<BTreeSet<CanonicalForm>, ExtremalError> {
            match generate_family(h, kind, class) {
                Ok(members) => Ok(members.iter().map(|s| canonical_form(&s.graph)).collect()),
                Err(ExtremalError::FamilyUndefined { .. }) => Ok(BTreeSet::new()),
                Err(e) => Err(e),
            }
        };
        Ok(FamilyIndex {
            linear,
            max: collect(FamilyClass::MaxWp)?,
            near_max: collect(FamilyClass::NearMaxWp)?,
        })
    }

    /// All family tags of a graph; empty means "other".
    pub fn tags(&self, g: &Graph) -> Vec<FamilyClass> {
        let form = canonical_form(g);
        let mut tags = Vec::new();
        if self.linear.as_ref() == Some(&form) {
            tags.push(FamilyClass::LinearChain);
        }
        if self.max.contains(&form) {
            tags.push(FamilyClass::MaxWp);
        }
        if self.near_max.contains(&form) {
            tags.push(FamilyClass::NearMaxWp);
        }
        tags
    }
}
