//! Intersection graphs and the Edge Formula.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::arcs::{intersect_kind, ArcCollection, Intersection};
use crate::error::{Error, Result};

/// Intersection graph of a collection, with double intersections marked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionSummary {
    pub n: usize,
    /// Intersecting pairs `(i, j)` with `i < j`, in lexicographic order.
    pub edges: Vec<(usize, usize)>,
    /// The subset of `edges` that doubly intersect.
    pub double_pairs: Vec<(usize, usize)>,
}

impl IntersectionSummary {
    pub fn e(&self) -> usize {
        self.edges.len()
    }

    pub fn d(&self) -> usize {
        self.double_pairs.len()
    }

    fn is_double(&self, edge: (usize, usize)) -> bool {
        self.double_pairs.binary_search(&edge).is_ok()
    }
}

pub fn build_summary(c: &ArcCollection) -> IntersectionSummary {
    let n = c.n();
    let mut edges = Vec::new();
    let mut double_pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match intersect_kind(c.arc(i), c.arc(j), n) {
                Intersection::None => {}
                Intersection::Single => edges.push((i, j)),
                Intersection::Double => {
                    edges.push((i, j));
                    double_pairs.push((i, j));
                }
            }
        }
    }
    IntersectionSummary { n, edges, double_pairs }
}

/// Both sides of `d + e = (C - n) / 2` for one collection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeFormulaReport {
    pub e: usize,
    pub d: usize,
    #[serde(rename = "C")]
    pub c: usize,
    pub n: usize,
    pub lhs: usize,
    /// `(C - n) / 2`, rounded down when `C - n` is odd (which makes `holds` false).
    pub rhs: usize,
    pub holds: bool,
}

pub fn check_edge_formula(c: &ArcCollection) -> EdgeFormulaReport {
    let summary = build_summary(c);
    let sum = c.running_count_sum();
    let n = c.n();
    let lhs = summary.d() + summary.e();
    let excess = sum - n;
    EdgeFormulaReport {
        e: summary.e(),
        d: summary.d(),
        c: sum,
        n,
        lhs,
        rhs: excess / 2,
        holds: excess.is_multiple_of(2) && lhs == excess / 2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dot,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" => Ok(GraphFormat::EdgeList),
            "dot" => Ok(GraphFormat::Dot),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn export_graph(s: &IntersectionSummary, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::EdgeList => {
            writeln!(out, "# n={} e={} d={}", s.n, s.e(), s.d()).unwrap();
            for &(i, j) in &s.edges {
                if s.is_double((i, j)) {
                    writeln!(out, "{i} {j} double").unwrap();
                } else {
                    writeln!(out, "{i} {j}").unwrap();
                }
            }
        }
        GraphFormat::Dot => {
            out.push_str("graph arcs {\n");
            for v in 0..s.n {
                writeln!(out, "  {v};").unwrap();
            }
            for &(i, j) in &s.edges {
                if s.is_double((i, j)) {
                    writeln!(out, "  {i} -- {j} [double=true, style=bold];").unwrap();
                } else {
                    writeln!(out, "  {i} -- {j};").unwrap();
                }
            }
            out.push_str("}\n");
        }
    }
    out
}
