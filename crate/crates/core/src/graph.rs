//! Graph substrate: simple undirected graphs, edge-list parsing,
//! connectivity validation, and breadth-first distances.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

/// Vertex identifier. Ids are arbitrary non-negative integers and need not
/// be contiguous; nothing in this crate ever renumbers them behind your back.
pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: expected two whitespace-separated vertex ids, found {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: VertexId },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: VertexId, v: VertexId },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<GraphError>,
    },
    #[error("graph is disconnected: vertices {u} and {v} lie in different components")]
    Disconnected { u: VertexId, v: VertexId },
    #[error("vertex {vertex} is not in the graph")]
    UnknownVertex { vertex: VertexId },
}

/// Simple undirected graph. Adjacency is symmetric and free of self-loops
/// and duplicate edges by construction; the struct is immutable once built,
/// so it is safe to share across threads.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
    edge_count: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from an edge iterator. Endpoints become vertices.
    pub fn from_edges<I>(edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Self::with_vertices(std::iter::empty(), edges)
    }

    /// Builds a graph from explicit vertices plus edges; lets callers create
    /// isolated vertices, which the edge-list format cannot express.
    pub fn with_vertices<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::new();
        for v in vertices {
            g.insert_vertex(v);
        }
        for (u, v) in edges {
            g.insert_vertex(u);
            g.insert_vertex(v);
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_vertex(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
    }

    fn insert_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if self.adj[&u].contains(&v) {
            let (u, v) = (u.min(v), u.max(v));
            return Err(GraphError::DuplicateEdge { u, v });
        }
        self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    /// Vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().flat_map(|(&u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Neighbor set of `v`, ascending. Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.adj[&v]
    }

    /// Degree of `v`. Panics if `v` is not a vertex.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[&v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|nbrs| nbrs.contains(&v))
    }

    /// Canonical edge-list text: one `u v` line per edge with `u < v`,
    /// lines sorted. Parsing this text reproduces the graph exactly as long
    /// as every vertex is incident to an edge (isolated vertices have no
    /// representation in the edge-list format).
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses line-oriented edge-list text: one `u v` pair per line, `#` starts
/// a comment line, blank lines are ignored. The resulting graph has exactly
/// the vertices mentioned on some edge.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut g = Graph::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let malformed = || GraphError::MalformedLine {
            line,
            content: content.to_string(),
        };
        let mut parts = content.split_whitespace();
        let (a, b) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(malformed()),
        };
        let u: VertexId = a.parse().map_err(|_| malformed())?;
        let v: VertexId = b.parse().map_err(|_| malformed())?;
        g.insert_vertex(u);
        g.insert_vertex(v);
        g.insert_edge(u, v).map_err(|e| GraphError::AtLine {
            line,
            source: Box::new(e),
        })?;
    }
    Ok(g)
}

/// Succeeds iff `g` is connected. A single vertex (or the empty graph) counts
/// as connected. On failure the error names one vertex from each component.
pub fn validate_connected(g: &Graph) -> Result<(), GraphError> {
    let Some(start) = g.vertices().next() else {
        return Ok(());
    };
    let reached = bfs(g, start);
    if reached.len() < g.vertex_count() {
        let stray = g
            .vertices()
            .find(|v| !reached.contains_key(v))
            .expect("some vertex is unreached");
        return Err(GraphError::Disconnected { u: start, v: stray });
    }
    Ok(())
}

/// Hop distances from one source to every vertex of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: VertexId,
    pub dist: BTreeMap<VertexId, u32>,
}

/// Exact hop distances from `source` by breadth-first traversal.
pub fn distances_from(g: &Graph, source: VertexId) -> Result<DistanceRow, GraphError> {
    if !g.contains_vertex(source) {
        return Err(GraphError::UnknownVertex { vertex: source });
    }
    let dist = bfs(g, source);
    if dist.len() < g.vertex_count() {
        let stray = g
            .vertices()
            .find(|v| !dist.contains_key(v))
            .expect("some vertex is unreached");
        return Err(GraphError::Disconnected {
            u: source,
            v: stray,
        });
    }
    Ok(DistanceRow { source, dist })
}

fn bfs(g: &Graph, start: VertexId) -> BTreeMap<VertexId, u32> {
    let mut dist = BTreeMap::new();
    dist.insert(start, 0);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let du = dist[&u];
        for &v in g.neighbors(u) {
            if !dist.contains_key(&v) {
                dist.insert(v, du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}
