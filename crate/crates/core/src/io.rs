//! JSON collection format.
//!
//! `{"n": 2, "arcs": [{"left": 0, "right": 2}, {"left": 1, "right": 3}]}` with
//! ranks in `0..2n`. Arcs may instead be given as `{"left_deg", "right_deg"}`
//! angles, which are rank-normalized. `n` is optional on input; when present it
//! must match the number of arcs. Other top-level fields are ignored, so
//! annotated outputs read back as collections.

use serde::{Deserialize, Serialize};

use crate::arcs::{normalize, Arc, ArcCollection};
use crate::error::{Error, Result};

#[derive(Serialize)]
struct Document<'a> {
    n: usize,
    arcs: &'a [Arc],
}

#[derive(Deserialize)]
struct RawDocument {
    n: Option<usize>,
    arcs: Vec<RawArc>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawArc {
    Ranks { left: usize, right: usize },
    Degrees { left_deg: f64, right_deg: f64 },
}

pub fn to_json(c: &ArcCollection) -> String {
    serde_json::to_string(&Document { n: c.n(), arcs: c.arcs() }).expect("plain data serializes")
}

pub fn to_json_value(c: &ArcCollection) -> serde_json::Value {
    serde_json::to_value(Document { n: c.n(), arcs: c.arcs() }).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<ArcCollection> {
    let doc: RawDocument = serde_json::from_str(text)?;
    if let Some(n) = doc.n {
        if n != doc.arcs.len() {
            return Err(Error::InvalidCollection(format!("n = {n} but {} arcs given", doc.arcs.len())));
        }
    }
    let ranks: Option<Vec<Arc>> = doc
        .arcs
        .iter()
        .map(|a| match *a {
            RawArc::Ranks { left, right } => Some(Arc::new(left, right)),
            RawArc::Degrees { .. } => None,
        })
        .collect();
    if let Some(arcs) = ranks {
        return ArcCollection::new(arcs);
    }
    let degrees: Option<Vec<(f64, f64)>> = doc
        .arcs
        .iter()
        .map(|a| match *a {
            RawArc::Degrees { left_deg, right_deg } => Some((left_deg, right_deg)),
            RawArc::Ranks { .. } => None,
        })
        .collect();
    match degrees {
        Some(raw) => normalize(&raw),
        None => Err(Error::Parse("arcs mix rank and degree forms".into())),
    }
}
