//! Combinatorial circular arc collections and the extremal theory of their
//! intersection graphs: agreement numbers, the Edge Formula `d + e = (C - n)/2`,
//! edge-maximizing constructions, exact and asymptotic bounds, and a
//! brute-force oracle for small `n`.

pub mod arcs;
pub mod asymptotic;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod oracle;

pub use arcs::{intersect_kind, normalize, Arc, ArcCollection, Intersection, LrSequence, Side};
pub use error::{Error, Result};
pub use extremal::{BoundReport, ExtremalParams};
pub use graph::{build_summary, check_edge_formula, IntersectionSummary};
