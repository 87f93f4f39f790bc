//! Brute-force ground truth: every arrangement of `n` arcs for small `n`,
//! seeded random arrangements, and exhaustive extremal sweeps.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arcs::{Arc, ArcCollection, Side};
use crate::error::{Error, Result};
use crate::extremal::{c_max, d_max, e_max, e_min, ExtremalParams};
use crate::graph::build_summary;

pub const DEFAULT_CEILING: usize = 5;

/// Which arrangements to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    /// Keep only arrangements with exactly this `(M, m)`.
    pub filter: Option<(usize, usize)>,
    /// Keep one representative per rotation/reflection class.
    pub dedupe: bool,
    pub ceiling: usize,
}

impl EnumerationSpec {
    pub fn new(n: usize) -> Self {
        EnumerationSpec { n, filter: None, dedupe: false, ceiling: DEFAULT_CEILING }
    }

    pub fn with_filter(mut self, max: usize, min: usize) -> Self {
        self.filter = Some((max, min));
        self
    }

    pub fn deduped(mut self) -> Self {
        self.dedupe = true;
        self
    }
}

/// Every assignment of the ranks `0..2n` to `n` unordered arcs, each with an
/// orientation: `(2n)! / n!` arrangements, grouped by the partner of rank 0.
/// Arcs are listed by their smaller rank.
pub fn enumerate(spec: EnumerationSpec) -> Result<impl Iterator<Item = ArcCollection>> {
    if spec.n == 0 {
        return Err(Error::Empty);
    }
    if spec.n > spec.ceiling {
        return Err(Error::CeilingExceeded { n: spec.n, ceiling: spec.ceiling });
    }
    let n = spec.n;
    let matchings = perfect_matchings(2 * n);
    let mut seen = HashSet::new();
    let iter = matchings
        .into_iter()
        .flat_map(move |pairs| {
            (0u32..1 << n).map(move |mask| {
                let arcs = pairs
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, b))| if mask >> i & 1 == 0 { Arc::new(a, b) } else { Arc::new(b, a) })
                    .collect();
                ArcCollection::new(arcs).expect("matching covers every rank once")
            })
        })
        .filter(move |c| match spec.filter {
            Some((max, min)) => {
                let p = c.agreement_profile();
                p.max == max && p.min == min
            }
            None => true,
        })
        .filter(move |c| !spec.dedupe || seen.insert(canonical_form(c)));
    Ok(iter)
}

fn perfect_matchings(points: usize) -> Vec<Vec<(usize, usize)>> {
    fn extend(rest: &[usize], current: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(current.clone());
            return;
        };
        for i in 0..tail.len() {
            let remaining: Vec<usize> = tail.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x).collect();
            current.push((first, tail[i]));
            extend(&remaining, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(&(0..points).collect::<Vec<_>>(), &mut Vec::new(), &mut out);
    out
}

/// Smallest sorted arc list over all rotations and reflections.
pub fn canonical_form(c: &ArcCollection) -> Vec<Arc> {
    let mut best: Option<Vec<Arc>> = None;
    for image in [c.clone(), c.reflected()] {
        for shift in 0..c.circumference() {
            let mut arcs = image.rotated(shift).into_arcs();
            arcs.sort();
            if best.as_ref().is_none_or(|b| arcs < *b) {
                best = Some(arcs);
            }
        }
    }
    best.unwrap()
}

/// Uniform random arrangement, reproducible from the seed.
pub fn random_collection(n: usize, seed: u64) -> Result<ArcCollection> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ranks: Vec<usize> = (0..2 * n).collect();
    ranks.shuffle(&mut rng);
    ArcCollection::new(ranks.chunks(2).map(|p| Arc::new(p[0], p[1])).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    E,
    D,
    C,
}

/// The numbers every certification needs from one arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CollectionStats {
    pub max: usize,
    pub min: usize,
    pub c: usize,
    pub e: usize,
    pub d: usize,
}

impl CollectionStats {
    pub fn of(c: &ArcCollection) -> Self {
        let profile = c.agreement_profile();
        let summary = build_summary(c);
        CollectionStats {
            max: profile.max,
            min: profile.min,
            c: profile.gap_counts.iter().sum(),
            e: summary.e(),
            d: summary.d(),
        }
    }

    fn get(&self, stat: Statistic) -> usize {
        match stat {
            Statistic::E => self.e,
            Statistic::D => self.d,
            Statistic::C => self.c,
        }
    }
}

/// Exact maximum of a statistic over all arrangements with exactly `(M, m)`.
pub fn brute_extremal(n: usize, max: usize, min: usize, stat: Statistic) -> Result<usize> {
    enumerate(EnumerationSpec::new(n).with_filter(max, min))?
        .map(|c| CollectionStats::of(&c).get(stat))
        .max()
        .ok_or_else(|| Error::Infeasible(format!("no arrangement of {n} arcs has M={max}, m={min}")))
}

/// Maxima of `C`, `e`, `d` for every realized `(M, m)`, plus each arrangement's
/// `(m, e, M)` for the forcing check, from a single pass.
#[derive(Debug, Clone, Default)]
pub struct ExhaustiveTable {
    pub n: usize,
    pub maxima: BTreeMap<(usize, usize), CollectionStats>,
    pub samples: Vec<CollectionStats>,
}

impl ExhaustiveTable {
    pub fn build(n: usize, ceiling: usize) -> Result<Self> {
        let spec = EnumerationSpec { ceiling, ..EnumerationSpec::new(n) };
        let mut table = ExhaustiveTable { n, ..Default::default() };
        for c in enumerate(spec)? {
            let s = CollectionStats::of(&c);
            table
                .maxima
                .entry((s.max, s.min))
                .and_modify(|best| {
                    best.c = best.c.max(s.c);
                    best.e = best.e.max(s.e);
                    best.d = best.d.max(s.d);
                })
                .or_insert(s);
            table.samples.push(s);
        }
        Ok(table)
    }

    /// Smallest maximum agreement among arrangements with minimum `min` and at
    /// least `edges` edges.
    pub fn weakest_agreement(&self, min: usize, edges: i64) -> Option<usize> {
        self.samples.iter().filter(|s| s.min == min && s.e as i64 >= edges).map(|s| s.max).min()
    }
}

/// One row of the certification table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    #[serde(rename = "M")]
    pub max: usize,
    #[serde(rename = "m")]
    pub min: usize,
    pub stat: &'static str,
    pub brute: Option<i64>,
    pub formula: i64,
    pub agree: bool,
}

/// Certifies `C_max`, `e_max`, `d_max` and the `e_min` guarantee against the
/// exhaustive table for one `n`.
pub fn certify(table: &ExhaustiveTable) -> Result<Vec<SweepRow>> {
    let n = table.n;
    let mut rows = Vec::new();
    for (&(max, min), best) in &table.maxima {
        let p = ExtremalParams::new(max, min, n)?;
        let mut row = |stat, brute: usize, formula: i64| {
            rows.push(SweepRow {
                n,
                max,
                min,
                stat,
                brute: Some(brute as i64),
                formula,
                agree: brute as i64 == formula,
            });
        };
        row("C", best.c, c_max(p)?);
        if max + min <= n + 1 {
            row("e", best.e, e_max(p)?.value);
        }
        row("d", best.d, d_max(p));
    }
    for min in 0..n {
        for max in min + 1..=n {
            if max + min > n + 1 {
                continue;
            }
            let threshold = e_min(ExtremalParams::new(max, min, n)?)?.value;
            let weakest = table.weakest_agreement(min, threshold);
            rows.push(SweepRow {
                n,
                max,
                min,
                stat: "e_min",
                brute: weakest.map(|w| w as i64),
                formula: max as i64,
                agree: weakest.is_none_or(|w| w >= max),
            });
        }
    }
    Ok(rows)
}

/// Whether `after` arises from `before` by sliding a single endpoint so that
/// every arc keeps or enlarges its point set.
///
/// Endpoints are compared by label in the canonical frame of `before`. Unmoved
/// endpoints keep their old positions and the moved one is placed between its
/// new neighbours; any endpoint whose removal makes the two orders equal is
/// tried as the moved one.
pub fn grows_by_one_move(before: &ArcCollection, after: &ArcCollection) -> bool {
    if before.n() != after.n() {
        return false;
    }
    let start = before.canonical_start();
    let old = before.frame_slots(start);
    let new = after.frame_slots(start);
    let circ = before.circumference() as f64;
    let old_pos = |label: (usize, Side)| old.iter().position(|&x| x == label).unwrap() as f64;
    let strip = |v: &[(usize, Side)], label| v.iter().copied().filter(|&x| x != label).collect::<Vec<_>>();

    new.iter().enumerate().any(|(new_at, &moved)| {
        if strip(&old, moved) != strip(&new, moved) {
            return false;
        }
        let placed = match (new_at.checked_sub(1), new.get(new_at + 1)) {
            (Some(prev), Some(&next)) => (old_pos(new[prev]) + old_pos(next)) / 2.0,
            (None, Some(&next)) => old_pos(next) - 0.5,
            (Some(prev), None) => old_pos(new[prev]) + 0.5,
            (None, None) => return false,
        };
        let now = |label| if label == moved { placed } else { old_pos(label) };
        let span = |l: f64, r: f64| (r - l).rem_euclid(circ);
        (0..before.n()).all(|i| {
            let (l0, r0) = (old_pos((i, Side::L)), old_pos((i, Side::R)));
            let (l1, r1) = (now((i, Side::L)), now((i, Side::R)));
            (l0 - l1).rem_euclid(circ) + span(l0, r0) <= span(l1, r1) + 1e-9
        })
    })
}
