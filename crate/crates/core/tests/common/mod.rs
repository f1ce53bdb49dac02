//! Shared test support: independent oracles and graph corpora.
//!
//! The cycle counter here deliberately avoids the library's rooted-DFS
//! enumeration path: it scans every k-subset of vertices for Hamiltonian
//! cycles on that subset, so the two implementations can check each other.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use wiener_polarity::chem::{build, PolycyclicSpec, SystemKind};
use wiener_polarity::graph::{parse_edge_list, Graph, VertexId};

/// Counts simple k-cycles by brute force over vertex subsets: for each
/// k-subset, fix its smallest vertex and count permutations of the rest that
/// close into a cycle, halving for the two traversal directions.
pub fn subset_cycle_count(g: &Graph, k: usize) -> usize {
    let verts: Vec<VertexId> = g.vertices().collect();
    let mut total = 0;
    for subset in verts.iter().copied().combinations(k) {
        let first = subset[0];
        let rest = &subset[1..];
        let mut closed = 0;
        for perm in rest.iter().copied().permutations(k - 1) {
            let mut ok = g.has_edge(first, perm[0]) && g.has_edge(perm[k - 2], first);
            for w in perm.windows(2) {
                ok = ok && g.has_edge(w[0], w[1]);
            }
            if ok {
                closed += 1;
            }
        }
        debug_assert_eq!(closed % 2, 0);
        total += closed / 2;
    }
    total
}

/// The exiting-edge functional by its definition: ordered pairs `(C, e)`
/// where `C` is a 4-cycle (found by the subset scan) and the edge `e` has
/// exactly one endpoint on `C`.
pub fn subset_f_pair_count(g: &Graph) -> u64 {
    let verts: Vec<VertexId> = g.vertices().collect();
    let mut pairs = 0u64;
    for subset in verts.iter().copied().combinations(4) {
        let cycles_here = {
            let first = subset[0];
            let rest = &subset[1..];
            let mut closed = 0;
            for perm in rest.iter().copied().permutations(3) {
                if g.has_edge(first, perm[0])
                    && g.has_edge(perm[0], perm[1])
                    && g.has_edge(perm[1], perm[2])
                    && g.has_edge(perm[2], first)
                {
                    closed += 1;
                }
            }
            closed / 2
        };
        if cycles_here == 0 {
            continue;
        }
        let on_cycle: BTreeSet<VertexId> = subset.iter().copied().collect();
        let exits = g
            .edges()
            .filter(|&(u, v)| on_cycle.contains(&u) != on_cycle.contains(&v))
            .count() as u64;
        pairs += cycles_here as u64 * exits;
    }
    pairs
}

/// Seeded random connected graph: a random recursive tree plus extra edges.
/// With `triangle_free`, an extra edge is skipped whenever its endpoints
/// already share a neighbor. Vertex ids are optionally scattered to exercise
/// non-contiguous id handling.
pub fn random_connected_graph(
    rng: &mut ChaCha8Rng,
    n: usize,
    extra_prob: f64,
    triangle_free: bool,
) -> Graph {
    assert!(n >= 1);
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        adj[v].insert(parent);
        adj[parent].insert(v);
        edges.push((parent, v));
    }
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !adj[u].contains(&v))
        .collect();
    candidates.shuffle(rng);
    for (u, v) in candidates {
        if !rng.gen_bool(extra_prob) {
            continue;
        }
        if triangle_free && adj[u].intersection(&adj[v]).next().is_some() {
            continue;
        }
        adj[u].insert(v);
        adj[v].insert(u);
        edges.push((u, v));
    }
    let scatter: u32 = if rng.gen_bool(0.3) {
        rng.gen_range(2..5)
    } else {
        1
    };
    let offset: u32 = rng.gen_range(0..10);
    let id = |v: usize| v as u32 * scatter + offset;
    Graph::from_edges(edges.into_iter().map(|(u, v)| (id(u), id(v))))
        .expect("simple by construction")
}

/// Small named graphs exercised throughout the suites.
pub fn structured_graphs() -> Vec<(&'static str, Graph)> {
    let parse = |text: &str| parse_edge_list(text).unwrap();
    vec![
        ("K1", Graph::with_vertices([0], std::iter::empty()).unwrap()),
        ("K2", parse("0 1")),
        ("P4", parse("0 1\n1 2\n2 3")),
        ("P6", parse("0 1\n1 2\n2 3\n3 4\n4 5")),
        ("star5", parse("0 1\n0 2\n0 3\n0 4\n0 5")),
        ("C4", parse("0 1\n1 2\n2 3\n3 0")),
        ("C5", parse("0 1\n1 2\n2 3\n3 4\n4 0")),
        ("C6", parse("0 1\n1 2\n2 3\n3 4\n4 5\n5 0")),
        ("C6+chord", parse("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3")),
        ("C6+pendant", parse("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 6")),
        ("C4+pendant", parse("0 1\n1 2\n2 3\n3 0\n2 4")),
        ("triangle", parse("0 1\n1 2\n2 0")),
        ("K2,3", parse("0 2\n0 3\n0 4\n1 2\n1 3\n1 4")),
        (
            "naphthalene",
            parse("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n5 6\n6 7\n7 8\n8 9\n9 0"),
        ),
        (
            "theta_2_2_2",
            // two degree-3 hubs joined by three paths of length 3
            parse("0 2\n2 3\n3 1\n0 4\n4 5\n5 1\n0 6\n6 7\n7 1"),
        ),
        (
            "cube",
            parse("0 1\n0 2\n0 4\n1 3\n1 5\n2 3\n2 6\n3 7\n4 5\n4 6\n5 7\n6 7"),
        ),
        (
            "petersen",
            parse("0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5"),
        ),
    ]
}

/// Built benzenoids and phenylenes used as structured corpus members.
pub fn built_systems(max_h: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for h in 1..=max_h {
        let sys = build(&PolycyclicSpec::linear(SystemKind::Benzenoid, h)).unwrap();
        out.push((format!("linear_benzenoid_h{h}"), sys.graph));
        if h >= 2 {
            let sys = build(&PolycyclicSpec::linear(SystemKind::Phenylene, h)).unwrap();
            out.push((format!("linear_phenylene_h{h}"), sys.graph));
        }
    }
    out
}

/// The h = 6 example blueprint (t = 3, b = a = l = 1, s = 4).
pub const H6_EXAMPLE_SPEC: &str = "0 -1 0\n1 0 0\n2 0 2\n3 0 4\n4 3 3\n5 4 3\n";
