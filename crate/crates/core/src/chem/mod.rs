//! Catacondensed benzenoid graphs and phenylenes built from dualist-tree
//! blueprints on the hexagonal lattice.
//!
//! A blueprint ([`PolycyclicSpec`]) is a rooted tree of hexagons whose edges
//! carry lattice directions. Building places each hexagon on a lattice cell;
//! tree-adjacent hexagons share exactly one edge (benzenoid) or get joined
//! by a quadrilateral of two fresh edges (phenylene). A spec is rejected as
//! unrealizable when two hexagons land on one cell or when hexagons that are
//! not tree-adjacent end up sharing an edge, which would make the system
//! pericondensed (or worse), outside what this module generates.
//!
//! ```
//! use wiener_polarity::chem::{build, parse_spec, SystemKind};
//!
//! // naphthalene: two fused hexagons
//! let spec = parse_spec("0 -1 0\n1 0 0", SystemKind::Benzenoid).unwrap();
//! let system = build(&spec).unwrap();
//! assert_eq!(system.graph.vertex_count(), 10);
//! assert_eq!(system.graph.edge_count(), 11);
//! assert_eq!(system.profile.s, 1);
//! ```

pub mod lattice;

use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

use crate::cycles::Cycle;
use crate::graph::{Graph, VertexId};
use lattice::{opposite, Cell, Corner, DIRECTION_COUNT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SystemKind {
    Benzenoid,
    Phenylene,
}

impl std::fmt::Display for SystemKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SystemKind::Benzenoid => write!(f, "benzenoid"),
            SystemKind::Phenylene => write!(f, "phenylene"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("line {line}: expected `id parent direction`, found {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("duplicate hexagon id {id}")]
    DuplicateId { id: u32 },
    #[error("direction {direction} is outside 0..=5")]
    DirectionOutOfRange { direction: i64 },
    #[error("spec has no root (exactly one hexagon must have parent -1)")]
    NoRoot,
    #[error("spec has multiple roots: hexagons {first} and {second}")]
    MultipleRoots { first: u32, second: u32 },
    #[error("hexagon {id} names unknown parent {parent}")]
    UnknownParent { id: u32, parent: u32 },
    #[error("cycle in parent links: hexagon {id} is not reachable from the root")]
    ParentCycle { id: u32 },
    #[error("hexagon {id} has tree degree {degree}, but a dualist tree allows at most 3")]
    DegreeExceeded { id: u32, degree: usize },
    #[error("hexagon {id} has two incident tree edges with the same direction {direction}")]
    DuplicateDirection { id: u32, direction: u8 },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<SpecError>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("spec not realizable as catacondensed system: hexagons {a} and {b} occupy the same lattice cell")]
    CellCollision { a: u32, b: u32 },
    #[error("spec not realizable as catacondensed system: hexagons {a} and {b} share an edge but are not tree-adjacent")]
    AccidentalAdjacency { a: u32, b: u32 },
    #[error("a phenylene needs at least two hexagons, got {h}")]
    TooFewHexagons { h: usize },
    #[error("expected a {expected} spec, got {actual}")]
    KindMismatch {
        expected: SystemKind,
        actual: SystemKind,
    },
}

/// One hexagon of a blueprint. `direction` is the lattice direction from the
/// parent's cell to this hexagon's cell; it is meaningless (and normalized to
/// zero) on the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecNode {
    pub id: u32,
    pub parent: Option<u32>,
    pub direction: u8,
}

/// Dualist tree of a catacondensed system: a rooted tree with
/// direction-labeled edges, the blueprint for construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolycyclicSpec {
    kind: SystemKind,
    nodes: BTreeMap<u32, SpecNode>,
    children: BTreeMap<u32, Vec<u32>>,
    root: u32,
}

impl PolycyclicSpec {
    /// Validates tree shape, degree bound, and per-hexagon direction
    /// distinctness. Lattice realizability is checked by `build`.
    pub fn new(kind: SystemKind, nodes: Vec<SpecNode>) -> Result<Self, SpecError> {
        if nodes.is_empty() {
            return Err(SpecError::NoRoot);
        }
        let mut map: BTreeMap<u32, SpecNode> = BTreeMap::new();
        let mut root = None;
        for mut node in nodes {
            if node.direction >= DIRECTION_COUNT {
                return Err(SpecError::DirectionOutOfRange {
                    direction: node.direction as i64,
                });
            }
            if node.parent.is_none() {
                node.direction = 0;
                match root {
                    None => root = Some(node.id),
                    Some(first) => {
                        return Err(SpecError::MultipleRoots {
                            first,
                            second: node.id,
                        })
                    }
                }
            }
            if map.insert(node.id, node).is_some() {
                return Err(SpecError::DuplicateId { id: node.id });
            }
        }
        let root = root.ok_or(SpecError::NoRoot)?;

        let mut children: BTreeMap<u32, Vec<u32>> =
            map.keys().map(|&id| (id, Vec::new())).collect();
        for node in map.values() {
            if let Some(parent) = node.parent {
                if !map.contains_key(&parent) {
                    return Err(SpecError::UnknownParent {
                        id: node.id,
                        parent,
                    });
                }
                children.get_mut(&parent).unwrap().push(node.id);
            }
        }

        // every node must be reachable from the root, otherwise the parent
        // links contain a cycle
        let mut reached = BTreeSet::from([root]);
        let mut queue = vec![root];
        while let Some(id) = queue.pop() {
            for &child in &children[&id] {
                if reached.insert(child) {
                    queue.push(child);
                }
            }
        }
        if let Some(&stray) = map.keys().find(|id| !reached.contains(id)) {
            return Err(SpecError::ParentCycle { id: stray });
        }

        let spec = PolycyclicSpec {
            kind,
            nodes: map,
            children,
            root,
        };
        for &id in spec.nodes.keys() {
            let degree = spec.tree_degree(id);
            if degree > 3 {
                return Err(SpecError::DegreeExceeded { id, degree });
            }
            let dirs = spec.incident_directions(id);
            let distinct: BTreeSet<u8> = dirs.iter().copied().collect();
            if distinct.len() != dirs.len() {
                let dup = dirs
                    .iter()
                    .copied()
                    .find(|d| dirs.iter().filter(|&&x| x == *d).count() > 1)
                    .expect("a duplicate exists");
                return Err(SpecError::DuplicateDirection { id, direction: dup });
            }
        }
        Ok(spec)
    }

    /// The unique (up to isomorphism) linear-chain blueprint on `h` hexagons.
    pub fn linear(kind: SystemKind, h: usize) -> Self {
        assert!(h >= 1, "a linear chain needs at least one hexagon");
        let nodes = (0..h as u32)
            .map(|id| SpecNode {
                id,
                parent: id.checked_sub(1),
                direction: 0,
            })
            .collect();
        Self::new(kind, nodes).expect("a chain is always a valid spec")
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    /// Same tree, other construction kind.
    pub fn with_kind(&self, kind: SystemKind) -> Self {
        let mut out = self.clone();
        out.kind = kind;
        out
    }

    pub fn hexagon_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn max_id(&self) -> u32 {
        *self.nodes.keys().last().expect("spec is nonempty")
    }

    pub fn node(&self, id: u32) -> Option<&SpecNode> {
        self.nodes.get(&id)
    }

    /// Nodes in ascending id order.
    pub fn nodes(&self) -> impl Iterator<Item = &SpecNode> {
        self.nodes.values()
    }

    pub fn children(&self, id: u32) -> &[u32] {
        &self.children[&id]
    }

    pub fn tree_degree(&self, id: u32) -> usize {
        self.children[&id].len() + usize::from(self.nodes[&id].parent.is_some())
    }

    /// Hexagons adjacent to exactly one other hexagon, ascending.
    pub fn terminals(&self) -> Vec<u32> {
        self.nodes
            .keys()
            .copied()
            .filter(|&id| self.tree_degree(id) == 1)
            .collect()
    }

    /// Directions of all tree edges incident to `id`, as seen from `id`.
    pub fn incident_directions(&self, id: u32) -> Vec<u8> {
        let mut dirs = Vec::new();
        if self.nodes[&id].parent.is_some() {
            dirs.push(opposite(self.nodes[&id].direction));
        }
        for &child in &self.children[&id] {
            dirs.push(self.nodes[&child].direction);
        }
        dirs
    }

    fn tree_adjacent(&self, a: u32, b: u32) -> bool {
        self.nodes[&a].parent == Some(b) || self.nodes[&b].parent == Some(a)
    }

    /// Places every hexagon on its lattice cell and verifies that the cell
    /// set realizes a catacondensed system.
    pub fn place(&self) -> Result<BTreeMap<u32, Cell>, BuildError> {
        let mut cells: BTreeMap<u32, Cell> = BTreeMap::new();
        cells.insert(self.root, Cell::ORIGIN);
        let mut queue = vec![self.root];
        while let Some(id) = queue.pop() {
            let cell = cells[&id];
            for &child in &self.children[&id] {
                cells.insert(child, cell.neighbor(self.nodes[&child].direction));
                queue.push(child);
            }
        }

        let mut occupied: BTreeMap<Cell, u32> = BTreeMap::new();
        for (&id, &cell) in &cells {
            if let Some(&other) = occupied.get(&cell) {
                return Err(BuildError::CellCollision { a: other, b: id });
            }
            occupied.insert(cell, id);
        }
        for (&id, &cell) in &cells {
            for d in 0..DIRECTION_COUNT {
                if let Some(&other) = occupied.get(&cell.neighbor(d)) {
                    if other > id && !self.tree_adjacent(id, other) {
                        return Err(BuildError::AccidentalAdjacency { a: id, b: other });
                    }
                }
            }
        }
        Ok(cells)
    }

    /// Serializes back to the `id parent direction` line format.
    pub fn to_spec_text(&self) -> String {
        let mut out = String::new();
        for node in self.nodes.values() {
            let parent = node.parent.map_or(-1, |p| p as i64);
            let direction = if node.parent.is_some() {
                node.direction
            } else {
                0
            };
            out.push_str(&format!("{} {} {}\n", node.id, parent, direction));
        }
        out
    }
}

/// Parses a blueprint from line-oriented text: one `id parent direction`
/// triple per line, parent `-1` on the root (whose direction is ignored).
/// `#` comments and blank lines are skipped.
pub fn parse_spec(text: &str, kind: SystemKind) -> Result<PolycyclicSpec, SpecError> {
    let mut nodes = Vec::new();
    let mut seen = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let at_line = |source: SpecError| SpecError::AtLine {
            line,
            source: Box::new(source),
        };
        let malformed = || SpecError::MalformedLine {
            line,
            content: content.to_string(),
        };
        let mut parts = content.split_whitespace();
        let (a, b, c) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), Some(c), None) => (a, b, c),
            _ => return Err(malformed()),
        };
        let id: u32 = a.parse().map_err(|_| malformed())?;
        let parent_raw: i64 = b.parse().map_err(|_| malformed())?;
        let direction_raw: i64 = c.parse().map_err(|_| malformed())?;
        if !seen.insert(id) {
            return Err(at_line(SpecError::DuplicateId { id }));
        }
        let parent = match parent_raw {
            -1 => None,
            p if p >= 0 && p <= u32::MAX as i64 => Some(p as u32),
            _ => return Err(malformed()),
        };
        if parent.is_some() && !(0..DIRECTION_COUNT as i64).contains(&direction_raw) {
            return Err(at_line(SpecError::DirectionOutOfRange {
                direction: direction_raw,
            }));
        }
        nodes.push(SpecNode {
            id,
            parent,
            direction: if parent.is_some() {
                direction_raw as u8
            } else {
                0
            },
        });
    }
    PolycyclicSpec::new(kind, nodes)
}

/// Per-hexagon classification within a catacondensed system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HexClass {
    /// Adjacent to exactly one other inner face.
    Terminal,
    /// Adjacent to exactly three other inner faces.
    Branched,
    /// Two neighbors whose free degree-2 vertices are adjacent.
    Angular,
    /// Two neighbors on opposite sides.
    Linear,
    /// The single hexagon of an h = 1 system.
    Lone,
}

impl std::fmt::Display for HexClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            HexClass::Terminal => "terminal",
            HexClass::Branched => "branched",
            HexClass::Angular => "angular",
            HexClass::Linear => "linear",
            HexClass::Lone => "lone",
        };
        write!(f, "{name}")
    }
}

/// Structural counts of a built system: hexagon classes, segment count, and
/// internal vertices (always zero for catacondensed systems).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexProfile {
    pub h: usize,
    pub t: usize,
    pub b: usize,
    pub a: usize,
    pub l: usize,
    pub s: usize,
    pub n_i: usize,
    pub per_hexagon: BTreeMap<u32, HexClass>,
}

/// Classifies every hexagon of a blueprint and counts segments.
///
/// Degree decides terminal/branched; for degree two, the hexagon is linear
/// iff its two incident directions are opposite (`d1 ≡ d2 + 3 (mod 6)`),
/// which on the built graph is the same as its two degree-2 vertices being
/// non-adjacent. Segments are maximal chains of tree edges joined through
/// linear hexagons; the count is cross-checked against `s = 2b + a + 1`.
pub fn classify_hexagons(spec: &PolycyclicSpec) -> HexProfile {
    let h = spec.hexagon_count();
    let mut per_hexagon = BTreeMap::new();
    let mut counts = [0usize; 4]; // t, b, a, l
    for node in spec.nodes() {
        let dirs = spec.incident_directions(node.id);
        let class = match dirs.len() {
            0 => HexClass::Lone,
            1 => HexClass::Terminal,
            2 => {
                if opposite(dirs[0]) == dirs[1] {
                    HexClass::Linear
                } else {
                    HexClass::Angular
                }
            }
            3 => HexClass::Branched,
            d => unreachable!("tree degree {d} was rejected at validation"),
        };
        match class {
            HexClass::Terminal => counts[0] += 1,
            HexClass::Branched => counts[1] += 1,
            HexClass::Angular => counts[2] += 1,
            HexClass::Linear => counts[3] += 1,
            HexClass::Lone => {}
        }
        per_hexagon.insert(node.id, class);
    }
    let [t, b, a, l] = counts;

    let s = if h == 1 {
        1 // a single hexagon is the degenerate linear chain
    } else {
        segment_count(spec, &per_hexagon)
    };

    if h >= 2 {
        debug_assert_eq!(t, b + 2);
        debug_assert_eq!(2 * b + a, s - 1);
        debug_assert_eq!(t + b + a + l, h);
    }

    HexProfile {
        h,
        t,
        b,
        a,
        l,
        s,
        n_i: 0,
        per_hexagon,
    }
}

/// Counts maximal linear chains directly: tree edges are merged whenever they
/// meet at a linear hexagon; the classes that remain are the segments.
fn segment_count(spec: &PolycyclicSpec, classes: &BTreeMap<u32, HexClass>) -> usize {
    // edge i = the parent link of the i-th non-root node (ascending id)
    let edge_ids: Vec<u32> = spec
        .nodes()
        .filter(|n| n.parent.is_some())
        .map(|n| n.id)
        .collect();
    let edge_index: BTreeMap<u32, usize> = edge_ids
        .iter()
        .enumerate()
        .map(|(i, &id)| (id, i))
        .collect();

    let mut parent: Vec<usize> = (0..edge_ids.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }

    for (&id, &class) in classes {
        if class != HexClass::Linear {
            continue;
        }
        // a linear hexagon has exactly two incident edges: its own parent
        // link and the parent link of its single child
        let mut incident = Vec::with_capacity(2);
        if spec.node(id).unwrap().parent.is_some() {
            incident.push(edge_index[&id]);
        }
        for &child in spec.children(id) {
            incident.push(edge_index[&child]);
        }
        debug_assert_eq!(incident.len(), 2);
        let (x, y) = (
            find(&mut parent, incident[0]),
            find(&mut parent, incident[1]),
        );
        parent[x] = y;
    }

    let roots: BTreeSet<usize> = (0..edge_ids.len()).map(|i| find(&mut parent, i)).collect();
    roots.len()
}

/// A constructed benzenoid or phenylene: the molecular graph plus the face
/// bookkeeping behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltSystem {
    pub spec: PolycyclicSpec,
    pub graph: Graph,
    pub profile: HexProfile,
    pub hexagon_faces: BTreeMap<u32, Cycle>,
    /// Empty for benzenoids; one 4-cycle per hexagon adjacency for phenylenes.
    pub quadrilateral_faces: Vec<Cycle>,
}

/// Builds the system the spec's kind asks for.
pub fn build(spec: &PolycyclicSpec) -> Result<BuiltSystem, BuildError> {
    match spec.kind() {
        SystemKind::Benzenoid => build_benzenoid(spec),
        SystemKind::Phenylene => build_phenylene(spec),
    }
}

/// Places hexagons on the lattice and merges shared corners: tree-adjacent
/// hexagons end up sharing exactly one edge.
pub fn build_benzenoid(spec: &PolycyclicSpec) -> Result<BuiltSystem, BuildError> {
    if spec.kind() != SystemKind::Benzenoid {
        return Err(BuildError::KindMismatch {
            expected: SystemKind::Benzenoid,
            actual: spec.kind(),
        });
    }
    let cells = spec.place()?;

    // corner -> vertex id, assigned in (hexagon id, corner index) order so
    // construction is deterministic
    let mut vertex_of: BTreeMap<Corner, VertexId> = BTreeMap::new();
    let mut next_id: VertexId = 0;
    let mut edges: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut hexagon_faces = BTreeMap::new();

    for node in spec.nodes() {
        let corners = cells[&node.id].corners();
        let ring: Vec<VertexId> = corners
            .iter()
            .map(|&corner| {
                *vertex_of.entry(corner).or_insert_with(|| {
                    let id = next_id;
                    next_id += 1;
                    id
                })
            })
            .collect();
        for i in 0..6 {
            let (u, v) = (ring[i], ring[(i + 1) % 6]);
            edges.insert((u.min(v), u.max(v)));
        }
        hexagon_faces.insert(node.id, Cycle::new(ring));
    }

    let graph = Graph::from_edges(edges).expect("hexagon rings form a simple graph");
    Ok(BuiltSystem {
        spec: spec.clone(),
        graph,
        profile: classify_hexagons(spec),
        hexagon_faces,
        quadrilateral_faces: Vec::new(),
    })
}

/// Builds disjoint hexagon rings and joins each tree-adjacent pair with a
/// quadrilateral: the two copies of the shared edge plus two fresh edges
/// between corresponding copies, adding 2 vertices and 3 edges per adjacency
/// relative to the hexagonal squeeze.
pub fn build_phenylene(spec: &PolycyclicSpec) -> Result<BuiltSystem, BuildError> {
    if spec.kind() != SystemKind::Phenylene {
        return Err(BuildError::KindMismatch {
            expected: SystemKind::Phenylene,
            actual: spec.kind(),
        });
    }
    let h = spec.hexagon_count();
    if h < 2 {
        return Err(BuildError::TooFewHexagons { h });
    }
    let cells = spec.place()?;

    // every hexagon gets six fresh vertices: rank(hexagon) * 6 + corner index
    let rank: BTreeMap<u32, usize> = spec
        .nodes()
        .enumerate()
        .map(|(i, node)| (node.id, i))
        .collect();
    let vid = |hex: u32, corner_idx: usize| (rank[&hex] * 6 + corner_idx) as VertexId;

    let mut edges: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut hexagon_faces = BTreeMap::new();
    for node in spec.nodes() {
        let ring: Vec<VertexId> = (0..6).map(|i| vid(node.id, i)).collect();
        for i in 0..6 {
            let (u, v) = (ring[i], ring[(i + 1) % 6]);
            edges.insert((u.min(v), u.max(v)));
        }
        hexagon_faces.insert(node.id, Cycle::new(ring));
    }

    let corner_index = |hex: u32, corner: Corner| -> usize {
        cells[&hex]
            .corners()
            .iter()
            .position(|&c| c == corner)
            .expect("corner belongs to the hexagon")
    };

    let mut quadrilateral_faces = Vec::new();
    for node in spec.nodes() {
        let Some(parent) = node.parent else { continue };
        let child = node.id;
        let parent_corners = cells[&parent].corners();
        let child_corners = cells[&child].corners();
        let shared: Vec<Corner> = parent_corners
            .iter()
            .copied()
            .filter(|c| child_corners.contains(c))
            .collect();
        debug_assert_eq!(shared.len(), 2, "adjacent cells share one edge");
        let (k1, k2) = (shared[0], shared[1]);

        let p1 = vid(parent, corner_index(parent, k1));
        let p2 = vid(parent, corner_index(parent, k2));
        let c1 = vid(child, corner_index(child, k1));
        let c2 = vid(child, corner_index(child, k2));
        edges.insert((p1.min(c1), p1.max(c1)));
        edges.insert((p2.min(c2), p2.max(c2)));
        quadrilateral_faces.push(Cycle::new(vec![p1, p2, c2, c1]));
    }

    let graph = Graph::from_edges(edges).expect("phenylene construction forms a simple graph");
    Ok(BuiltSystem {
        spec: spec.clone(),
        graph,
        profile: classify_hexagons(spec),
        hexagon_faces,
        quadrilateral_faces,
    })
}

/// Contracts a phenylene's connector edges (the quadrilateral edges that do
/// not lie on any hexagon), merging the two copies of each shared edge back
/// together. The result is isomorphic to the benzenoid built from the same
/// blueprint.
pub fn hexagonal_squeeze(sys: &BuiltSystem) -> Result<Graph, BuildError> {
    if sys.spec.kind() != SystemKind::Phenylene {
        return Err(BuildError::KindMismatch {
            expected: SystemKind::Phenylene,
            actual: sys.spec.kind(),
        });
    }
    let hexagon_edges: BTreeSet<(VertexId, VertexId)> = sys
        .hexagon_faces
        .values()
        .flat_map(|face| face.edges())
        .collect();

    let mut representative: BTreeMap<VertexId, VertexId> =
        sys.graph.vertices().map(|v| (v, v)).collect();
    fn find(map: &mut BTreeMap<VertexId, VertexId>, v: VertexId) -> VertexId {
        let parent = map[&v];
        if parent == v {
            return v;
        }
        let root = find(map, parent);
        map.insert(v, root);
        root
    }
    for quad in &sys.quadrilateral_faces {
        for (u, v) in quad.edges() {
            if !hexagon_edges.contains(&(u, v)) {
                let (ru, rv) = (find(&mut representative, u), find(&mut representative, v));
                if ru != rv {
                    representative.insert(ru.max(rv), ru.min(rv));
                }
            }
        }
    }

    let contracted: BTreeSet<(VertexId, VertexId)> = sys
        .graph
        .edges()
        .filter_map(|(u, v)| {
            let (ru, rv) = (find(&mut representative, u), find(&mut representative, v));
            (ru != rv).then(|| (ru.min(rv), ru.max(rv)))
        })
        .collect();
    Ok(Graph::from_edges(contracted).expect("contraction of a simple graph stays simple"))
}

/// Closed-form values of the Zagreb indices and the Wiener polarity index
/// from the structural counts alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedFormReport {
    pub m1: i64,
    pub m2: i64,
    pub wp: i64,
}

/// Evaluates the per-kind closed formulas:
/// benzenoid `M1 = 26h-2`, `M2 = 33h+s+b-10`, `W_p = 9h+s+b-7`;
/// phenylene `M1 = 44h-20`, `M2 = 60h+s+b-37`, `W_p = 13h+s+b-11`.
pub fn closed_form_report(
    profile: &HexProfile,
    kind: SystemKind,
) -> Result<ClosedFormReport, BuildError> {
    let h = profile.h as i64;
    let s = profile.s as i64;
    let b = profile.b as i64;
    match kind {
        SystemKind::Benzenoid => Ok(ClosedFormReport {
            m1: 26 * h - 2,
            m2: 33 * h + s + b - 10,
            wp: 9 * h + s + b - 7,
        }),
        SystemKind::Phenylene => {
            if profile.h < 2 {
                return Err(BuildError::TooFewHexagons { h: profile.h });
            }
            Ok(ClosedFormReport {
                m1: 44 * h - 20,
                m2: 60 * h + s + b - 37,
                wp: 13 * h + s + b - 11,
            })
        }
    }
}

impl BuiltSystem {
    pub fn kind(&self) -> SystemKind {
        self.spec.kind()
    }

    /// Structured key-value metadata as `#`-prefixed lines, so the full
    /// export stays parseable as an edge list.
    pub fn metadata_lines(&self) -> Vec<String> {
        let p = &self.profile;
        let mut lines = vec![
            format!("# kind = {}", self.kind()),
            format!("# h = {}", p.h),
            format!("# t = {}", p.t),
            format!("# b = {}", p.b),
            format!("# a = {}", p.a),
            format!("# l = {}", p.l),
            format!("# s = {}", p.s),
            format!("# n_i = {}", p.n_i),
            format!("# vertices = {}", self.graph.vertex_count()),
            format!("# edges = {}", self.graph.edge_count()),
        ];
        for (id, face) in &self.hexagon_faces {
            let verts: Vec<String> = face.vertices().iter().map(|v| v.to_string()).collect();
            lines.push(format!(
                "# hexagon {id} = {} ; class = {}",
                verts.join(" "),
                self.profile.per_hexagon[id]
            ));
        }
        for (i, quad) in self.quadrilateral_faces.iter().enumerate() {
            let verts: Vec<String> = quad.vertices().iter().map(|v| v.to_string()).collect();
            lines.push(format!("# quadrilateral {i} = {}", verts.join(" ")));
        }
        lines
    }

    /// Edge-list export with the metadata block as leading comments.
    pub fn to_export_text(&self) -> String {
        let mut out = self.metadata_lines().join("\n");
        out.push('\n');
        out.push_str(&self.graph.to_edge_list());
        out
    }
}
