//! Independence polynomials, h-polynomials of edge ideals, and the
//! pseudo-Gorenstein* property for finite simple graphs.
//!
//! A graph `G` with independence number `alpha` is pseudo-Gorenstein* (PG*)
//! when the h-polynomial of `S/I(G)` has degree `alpha` and leading
//! coefficient `1`; equivalently `P_G(-1) = (-1)^alpha`.
//!
//! ```
//! use pgstar_core::{analyze, cycle_graph};
//!
//! let report = analyze(&cycle_graph(5).unwrap());
//! assert_eq!(report.alpha, 2);
//! assert!(report.pseudo_gorenstein_star);
//! ```

pub mod corpus;
pub mod error;
pub mod families;
pub mod graph;
pub mod halgebra;
pub mod indpoly;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use graph::format::{
    detect_format, parse, parse_edge_list, parse_graph6, serialize_edge_list, to_graph6,
    InputFormat,
};
pub use graph::{
    cameron_walker, complete_multipartite, cycle_graph, edgeless_graph, maximal_independent_sets,
    maximal_independent_sets_capped, path_graph, suspension, CameronWalkerSpec, Graph, Relabeling,
    VertexSet,
};
pub use halgebra::{analyze, analyze_polynomial, h_polynomial, AnalysisReport};
pub use indpoly::{
    independence_number, independence_polynomial, independence_polynomial_bruteforce,
};
pub use poly::IntPolynomial;
pub use verify::{SweepConfig, Theorem, VerifyOutcome};

/// Re-exported so downstream crates can name coefficient types without a
/// direct dependency.
pub use num_bigint::BigInt;
