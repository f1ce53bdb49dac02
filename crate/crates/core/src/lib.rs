//! Wiener polarity index toolkit.
//!
//! The Wiener polarity index of a connected graph is the number of unordered
//! vertex pairs at distance exactly three. For triangle-free graphs whose
//! small cycles overlap in a controlled way it satisfies the closed identity
//!
//! ```text
//! W_p = M2 - M1 - f - 4|C4| - 5|C5| - 3|C6| + |E|
//! ```
//!
//! where `M1`, `M2` are the Zagreb indices, `Ck` the sets of k-cycles, and
//! `f` counts (4-cycle, exiting edge) pairs. This crate computes the index
//! both by that identity and by a breadth-first oracle, checks the structural
//! preconditions the identity needs, and refuses the formula path when they
//! fail (on `K_{2,3}` the raw right-hand side evaluates to -6 while the true
//! index is 0).
//!
//! On top of the generic machinery, the [`chem`] module constructs
//! catacondensed benzenoid graphs and phenylenes from dualist-tree
//! blueprints on the hexagonal lattice, and [`extremal`] enumerates all such
//! systems for small hexagon counts to verify the closed per-family formulas
//! `9h + s + b - 7` (benzenoid) and `13h + s + b - 11` (phenylene) together
//! with the extremal characterizations.
//!
//! ```
//! use wiener_polarity::graph::parse_edge_list;
//! use wiener_polarity::indices::{wiener_polarity_formula, wiener_polarity_oracle};
//!
//! // a hexagon has three antipodal pairs
//! let hexagon = parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 0").unwrap();
//! assert_eq!(wiener_polarity_oracle(&hexagon).unwrap(), 3);
//! assert_eq!(wiener_polarity_formula(&hexagon).unwrap(), 3);
//!
//! // K_{2,3} violates the preconditions, so the formula refuses
//! let k23 = parse_edge_list("0 2\n0 3\n0 4\n1 2\n1 3\n1 4").unwrap();
//! assert_eq!(wiener_polarity_oracle(&k23).unwrap(), 0);
//! assert!(wiener_polarity_formula(&k23).is_err());
//! ```

pub mod canon;
pub mod chem;
pub mod cycles;
pub mod extremal;
pub mod graph;
pub mod indices;
