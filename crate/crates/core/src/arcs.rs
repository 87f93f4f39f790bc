//! Arc collections on the combinatorial circle.
//!
//! A collection of `n` arcs is stored with its `2n` endpoints at the distinct
//! ranks `0..2n`. Rank `g` and rank `g + 1 (mod 2n)` are separated by the open
//! gap `g`; agreement numbers are constant on each gap, so the gap is the unit
//! of every count in this crate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which end of an arc an endpoint is, read clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    L,
    R,
}

impl Side {
    pub fn as_char(self) -> char {
        match self {
            Side::L => 'L',
            Side::R => 'R',
        }
    }

    fn step(self) -> isize {
        match self {
            Side::L => 1,
            Side::R => -1,
        }
    }
}

/// Closed clockwise interval from `left` to `right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
}

impl Arc {
    pub fn new(left: usize, right: usize) -> Self {
        Arc { left, right }
    }

    /// Clockwise distance from the left endpoint to the right endpoint.
    fn span(self, circumference: usize) -> usize {
        (self.right + circumference - self.left) % circumference
    }

    /// Whether the rank lies on the arc (endpoints included).
    pub fn contains(self, rank: usize, circumference: usize) -> bool {
        (rank + circumference - self.left) % circumference <= self.span(circumference)
    }

    /// Whether the open gap clockwise of `gap` lies inside the arc.
    pub fn covers_gap(self, gap: usize, circumference: usize) -> bool {
        (gap + circumference - self.left) % circumference < self.span(circumference)
    }

    fn endpoint(self, side: Side) -> usize {
        match side {
            Side::L => self.left,
            Side::R => self.right,
        }
    }
}

/// How two arcs of the same collection meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Intersection {
    None,
    Single,
    Double,
}

/// Classifies the intersection of two arcs drawn from a collection of `n` arcs.
///
/// Two arcs doubly intersect when each contains both endpoints of the other,
/// which is exactly when their union is the whole circle and they overlap in
/// two separate regions.
pub fn intersect_kind(a: Arc, b: Arc, n: usize) -> Intersection {
    let circ = 2 * n;
    let a_has_b = (a.contains(b.left, circ), a.contains(b.right, circ));
    let b_has_a = (b.contains(a.left, circ), b.contains(a.right, circ));
    if a_has_b == (true, true) && b_has_a == (true, true) {
        Intersection::Double
    } else if a_has_b.0 || b_has_a.0 {
        // On a circle two arcs meet iff one holds the other's left endpoint.
        Intersection::Single
    } else {
        Intersection::None
    }
}

/// `n` arcs whose endpoints occupy every rank in `0..2n` exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcCollection {
    arcs: Vec<Arc>,
}

impl ArcCollection {
    pub fn new(arcs: Vec<Arc>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::Empty);
        }
        let circ = 2 * arcs.len();
        let mut seen = vec![false; circ];
        for (i, arc) in arcs.iter().enumerate() {
            if arc.left == arc.right {
                return Err(Error::ZeroExtent { index: i });
            }
            for rank in [arc.left, arc.right] {
                if rank >= circ {
                    return Err(Error::RankOutOfRange { rank, limit: circ });
                }
                if std::mem::replace(&mut seen[rank], true) {
                    return Err(Error::InvalidCollection(format!("rank {rank} is used twice")));
                }
            }
        }
        Ok(ArcCollection { arcs })
    }

    /// Realizes an LR-sequence read from rank 0, where `wraps` arcs cover the
    /// gap just before rank 0.
    ///
    /// Endpoints are matched first-in first-out: the first `wraps` right
    /// endpoints close the wrapping arcs, whose left endpoints are the last
    /// `wraps` left endpoints; every other right endpoint closes the oldest
    /// open arc. Fails when that matching is not a valid collection.
    pub fn from_lr_fifo(symbols: &[Side], wraps: usize) -> Result<Self> {
        let lefts: Vec<usize> = positions(symbols, Side::L);
        let rights: Vec<usize> = positions(symbols, Side::R);
        let n = lefts.len();
        if rights.len() != n || n == 0 {
            return Err(Error::InvalidCollection("LR-sequence needs equally many L and R symbols".into()));
        }
        if wraps > n {
            return Err(Error::InvalidCollection(format!("{wraps} wrapping arcs exceed n={n}")));
        }
        let mut arcs = Vec::with_capacity(n);
        for i in 0..wraps {
            let (r, l) = (rights[i], lefts[n - wraps + i]);
            if r > l {
                return Err(Error::InvalidCollection(format!(
                    "wrapping arc {i} would close at position {r} after opening at {l}"
                )));
            }
            arcs.push(Arc::new(l, r));
        }
        for i in 0..n - wraps {
            let (l, r) = (lefts[i], rights[wraps + i]);
            if l > r {
                return Err(Error::InvalidCollection(format!("running count drops below {wraps} at position {r}")));
            }
            arcs.push(Arc::new(l, r));
        }
        ArcCollection::new(arcs)
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn circumference(&self) -> usize {
        2 * self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> Arc {
        self.arcs[index]
    }

    pub fn into_arcs(self) -> Vec<Arc> {
        self.arcs
    }

    /// For every rank, the arc owning it and which endpoint it is.
    pub fn endpoint_table(&self) -> Vec<(usize, Side)> {
        let mut table = vec![(0, Side::L); self.circumference()];
        for (i, arc) in self.arcs.iter().enumerate() {
            table[arc.left] = (i, Side::L);
            table[arc.right] = (i, Side::R);
        }
        table
    }

    pub fn agreement_profile(&self) -> AgreementProfile {
        let circ = self.circumference();
        let table = self.endpoint_table();
        // Gap 2n-1 sits between the last rank and rank 0: exactly the wrapping arcs cover it.
        let mut coverage = self.arcs.iter().filter(|a| a.left > a.right).count() as isize;
        let mut gap_counts = Vec::with_capacity(circ);
        for &(_, side) in &table {
            coverage += side.step();
            gap_counts.push(coverage as usize);
        }
        let max = *gap_counts.iter().max().unwrap();
        let min = *gap_counts.iter().min().unwrap();
        AgreementProfile { gap_counts, max, min }
    }

    fn check_start(&self, start: usize) -> Result<()> {
        if start >= self.circumference() {
            return Err(Error::RankOutOfRange { rank: start, limit: self.circumference() });
        }
        Ok(())
    }

    /// Endpoint types read clockwise from rank `start`.
    pub fn lr_sequence(&self, start: usize) -> Result<LrSequence> {
        self.check_start(start)?;
        let circ = self.circumference();
        let table = self.endpoint_table();
        let symbols = (0..circ).map(|k| table[(start + k) % circ].1).collect();
        Ok(LrSequence { symbols, start })
    }

    /// Agreement just clockwise of each endpoint, read from rank `start`.
    pub fn running_counts(&self, start: usize) -> Result<RunningCountSequence> {
        self.check_start(start)?;
        let circ = self.circumference();
        let profile = self.agreement_profile();
        let counts = (0..circ).map(|k| profile.gap_counts[(start + k) % circ]).collect();
        Ok(RunningCountSequence { counts })
    }

    /// The running count sum `C`. Every gap follows exactly one endpoint, so
    /// this is the total of the gap counts and does not depend on a start.
    pub fn running_count_sum(&self) -> usize {
        self.agreement_profile().gap_counts.iter().sum()
    }

    /// First rank of the canonical reading frame: the rank just clockwise of
    /// the lowest-ranked gap of minimum agreement.
    pub fn canonical_start(&self) -> usize {
        let profile = self.agreement_profile();
        let gap = profile.gap_counts.iter().position(|&c| c == profile.min).unwrap();
        (gap + 1) % self.circumference()
    }

    /// Position of a rank in the canonical reading frame.
    fn frame_position(&self, rank: usize, start: usize) -> usize {
        (rank + self.circumference() - start) % self.circumference()
    }

    /// Splits arcs into A-type (covering the minimum-agreement gap that closes
    /// the canonical frame) and B-type.
    pub fn classify_arcs(&self) -> ArcClasses {
        let start = self.canonical_start();
        let (a_type, b_type) = (0..self.n()).partition(|&i| {
            let arc = self.arcs[i];
            self.frame_position(arc.right, start) < self.frame_position(arc.left, start)
        });
        ArcClasses { a_type, b_type }
    }

    /// `(l, r)` for an A-type arc: left endpoints strictly before its right
    /// endpoint, and right endpoints strictly before its left endpoint, in the
    /// canonical frame.
    pub fn a_type_stats(&self, index: usize) -> Result<ATypeStats> {
        if index >= self.n() {
            return Err(Error::NotATypeArc(index));
        }
        let start = self.canonical_start();
        let arc = self.arcs[index];
        let r_pos = self.frame_position(arc.right, start);
        let l_pos = self.frame_position(arc.left, start);
        if r_pos >= l_pos {
            return Err(Error::NotATypeArc(index));
        }
        let seq = self.lr_sequence(start)?;
        let before = |end: usize, side: Side| seq.symbols[..end].iter().filter(|&&s| s == side).count();
        Ok(ATypeStats { l: before(r_pos, Side::L), r: before(l_pos, Side::R) })
    }

    /// Image under `rank -> rank + shift (mod 2n)`.
    pub fn rotated(&self, shift: usize) -> Self {
        let circ = self.circumference();
        let arcs = self.arcs.iter().map(|a| Arc::new((a.left + shift) % circ, (a.right + shift) % circ)).collect();
        ArcCollection { arcs }
    }

    /// Image under `rank -> 2n - 1 - rank`; reading direction flips, so left
    /// and right endpoints swap roles.
    pub fn reflected(&self) -> Self {
        let last = self.circumference() - 1;
        let arcs = self.arcs.iter().map(|a| Arc::new(last - a.right, last - a.left)).collect();
        ArcCollection { arcs }
    }

    /// Ranks of both endpoints of every arc, in frame order, starting at `start`.
    pub(crate) fn frame_slots(&self, start: usize) -> Vec<(usize, Side)> {
        let circ = self.circumference();
        let table = self.endpoint_table();
        (0..circ).map(|k| table[(start + k) % circ]).collect()
    }

    /// Inverse of [`frame_slots`](Self::frame_slots).
    pub(crate) fn from_frame_slots(slots: &[(usize, Side)], start: usize, n: usize) -> Result<Self> {
        let circ = 2 * n;
        let mut arcs = vec![Arc::new(0, 0); n];
        for (pos, &(arc, side)) in slots.iter().enumerate() {
            let rank = (start + pos) % circ;
            match side {
                Side::L => arcs[arc].left = rank,
                Side::R => arcs[arc].right = rank,
            }
        }
        ArcCollection::new(arcs)
    }

    /// Endpoint rank of the given arc and side.
    pub fn endpoint(&self, index: usize, side: Side) -> usize {
        self.arcs[index].endpoint(side)
    }
}

fn positions(symbols: &[Side], side: Side) -> Vec<usize> {
    symbols.iter().enumerate().filter(|(_, &s)| s == side).map(|(i, _)| i).collect()
}

/// Per-gap agreement numbers with their extremes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgreementProfile {
    /// Entry `g` counts the arcs covering the open gap clockwise of rank `g`.
    pub gap_counts: Vec<usize>,
    pub max: usize,
    pub min: usize,
}

impl AgreementProfile {
    /// `M / n`.
    pub fn agreement_proportion(&self, n: usize) -> f64 {
        self.max as f64 / n as f64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LrSequence {
    pub symbols: Vec<Side>,
    pub start: usize,
}

impl LrSequence {
    pub fn parse(text: &str) -> Result<Vec<Side>> {
        text.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                'L' | 'l' => Ok(Side::L),
                'R' | 'r' => Ok(Side::R),
                other => Err(Error::Parse(format!("unexpected symbol `{other}` in LR string"))),
            })
            .collect()
    }
}

impl fmt::Display for LrSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunningCountSequence {
    pub counts: Vec<usize>,
}

impl RunningCountSequence {
    pub fn sum(&self) -> usize {
        self.counts.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcClasses {
    pub a_type: Vec<usize>,
    pub b_type: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ATypeStats {
    pub l: usize,
    pub r: usize,
}

/// Rank-normalizes arcs given by angles in degrees, measured clockwise.
///
/// Angles are reduced modulo 360. Coincident angles are ordered left
/// endpoints first, then by arc index, so arcs that merely touch still
/// intersect.
pub fn normalize(raw: &[(f64, f64)]) -> Result<ArcCollection> {
    if raw.is_empty() {
        return Err(Error::Empty);
    }
    let mut endpoints = Vec::with_capacity(2 * raw.len());
    for (index, &(left, right)) in raw.iter().enumerate() {
        if !left.is_finite() || !right.is_finite() {
            return Err(Error::NonFiniteAngle { index });
        }
        let (left, right) = (left.rem_euclid(360.0), right.rem_euclid(360.0));
        if left == right {
            return Err(Error::ZeroExtent { index });
        }
        endpoints.push((left, Side::L, index));
        endpoints.push((right, Side::R, index));
    }
    endpoints.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut arcs = vec![Arc::new(0, 0); raw.len()];
    for (rank, &(_, side, index)) in endpoints.iter().enumerate() {
        match side {
            Side::L => arcs[index].left = rank,
            Side::R => arcs[index].right = rank,
        }
    }
    ArcCollection::new(arcs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coll(pairs: &[(usize, usize)]) -> ArcCollection {
        ArcCollection::new(pairs.iter().map(|&(l, r)| Arc::new(l, r)).collect()).unwrap()
    }

    fn lr(text: &str) -> Vec<Side> {
        LrSequence::parse(text).unwrap()
    }

    /// The five-arc example: LR-sequence LLRLRRLRLR read from rank 0 with one arc
    /// covering the gap before rank 0.
    fn five_arc_example() -> ArcCollection {
        ArcCollection::from_lr_fifo(&lr("LLRLRRLRLR"), 1).unwrap()
    }

    #[test]
    fn rejects_bad_collections() {
        assert_eq!(ArcCollection::new(vec![]), Err(Error::Empty));
        assert_eq!(ArcCollection::new(vec![Arc::new(1, 1)]), Err(Error::ZeroExtent { index: 0 }));
        assert!(matches!(ArcCollection::new(vec![Arc::new(0, 2)]), Err(Error::RankOutOfRange { rank: 2, limit: 2 })));
        assert!(matches!(ArcCollection::new(vec![Arc::new(0, 1), Arc::new(1, 2)]), Err(Error::InvalidCollection(_))));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&[(10.0, 200.0)]).unwrap().arcs(), &[Arc::new(0, 1)]);
        assert_eq!(normalize(&[(0.0, 90.0), (180.0, 270.0)]).unwrap().arcs(), &[Arc::new(0, 1), Arc::new(2, 3)]);
        let wrapping = normalize(&[(350.0, 20.0), (-90.0, 100.0)]).unwrap();
        assert_eq!(wrapping.arcs(), &[Arc::new(3, 0), Arc::new(2, 1)]);
        assert_eq!(normalize(&[]), Err(Error::Empty));
        assert_eq!(normalize(&[(5.0, 365.0)]), Err(Error::ZeroExtent { index: 0 }));
        assert_eq!(normalize(&[(0.0, f64::NAN)]), Err(Error::NonFiniteAngle { index: 0 }));
    }

    #[test]
    fn normalize_ties_match_a_perturbation() {
        // Shared left endpoint: both perturbations give the same classification.
        let shared = [(90.0, 200.0), (90.0, 300.0)];
        let tied = normalize(&shared).unwrap();
        let kind = intersect_kind(tied.arc(0), tied.arc(1), 2);
        for eps in [-1e-6, 1e-6] {
            let moved = normalize(&[(90.0 + eps, 200.0), (90.0, 300.0)]).unwrap();
            assert_eq!(intersect_kind(moved.arc(0), moved.arc(1), 2), kind);
        }
        // Right endpoint of one arc on the left endpoint of the next: touching
        // closed arcs meet, which is the perturbation moving the left endpoint back.
        let touching = normalize(&[(0.0, 90.0), (90.0, 180.0)]).unwrap();
        let early = normalize(&[(0.0, 90.0), (90.0 - 1e-6, 180.0)]).unwrap();
        assert_eq!(touching, early);
        assert_eq!(intersect_kind(touching.arc(0), touching.arc(1), 2), Intersection::Single);
    }

    #[test]
    fn intersect_kind_examples() {
        assert_eq!(intersect_kind(Arc::new(0, 1), Arc::new(2, 3), 2), Intersection::None);
        assert_eq!(intersect_kind(Arc::new(0, 2), Arc::new(1, 3), 2), Intersection::Single);
        assert_eq!(intersect_kind(Arc::new(2, 1), Arc::new(0, 3), 2), Intersection::Double);
    }

    /// Oracle for the four-endpoint configurations: sample the circle finely and
    /// test whether the union covers it and the overlap has two components.
    #[test]
    fn intersect_kind_matches_covering_oracle_on_all_pairs() {
        let covered = |a: Arc, x: f64| {
            let span = ((a.right + 4 - a.left) % 4) as f64;
            (x - a.left as f64).rem_euclid(4.0) <= span
        };
        for ranks in permutations4() {
            let a = Arc::new(ranks[0], ranks[1]);
            let b = Arc::new(ranks[2], ranks[3]);
            let samples: Vec<f64> = (0..400).map(|k| k as f64 * 0.01).collect();
            let both: Vec<bool> = samples.iter().map(|&x| covered(a, x) && covered(b, x)).collect();
            let union_all = samples.iter().all(|&x| covered(a, x) || covered(b, x));
            let overlap_runs = (0..both.len()).filter(|&i| both[i] && !both[(i + both.len() - 1) % both.len()]).count();
            let expected = if !both.iter().any(|&x| x) {
                Intersection::None
            } else if union_all && overlap_runs == 2 {
                Intersection::Double
            } else {
                Intersection::Single
            };
            assert_eq!(intersect_kind(a, b, 2), expected, "{a:?} {b:?}");
            assert_eq!(intersect_kind(b, a, 2), expected);
        }
    }

    fn permutations4() -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let v = [a, b, c, d];
                        if (0..4).all(|i| (0..i).all(|j| v[i] != v[j])) {
                            out.push(v);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn agreement_profile_examples() {
        let p = five_arc_example().agreement_profile();
        assert_eq!((p.max, p.min), (3, 1));
        assert!((p.agreement_proportion(5) - 0.6).abs() < 1e-15);

        let single = coll(&[(0, 1)]).agreement_profile();
        assert_eq!((single.max, single.min), (1, 0));

        let double = coll(&[(2, 1), (0, 3)]).agreement_profile();
        assert_eq!((double.max, double.min), (2, 1));
    }

    #[test]
    fn agreement_profile_matches_sample_points() {
        let c = five_arc_example();
        let circ = c.circumference() as f64;
        let p = c.agreement_profile();
        for (g, &count) in p.gap_counts.iter().enumerate() {
            let x = g as f64 + 0.5;
            let direct = c
                .arcs()
                .iter()
                .filter(|a| {
                    let span = (a.right as f64 - a.left as f64).rem_euclid(circ);
                    (x - a.left as f64).rem_euclid(circ) <= span
                })
                .count();
            assert_eq!(count, direct, "gap {g}");
        }
    }

    #[test]
    fn lr_sequence_examples() {
        let c = five_arc_example();
        assert_eq!(c.lr_sequence(0).unwrap().to_string(), "LLRLRRLRLR");
        assert_eq!(coll(&[(0, 1)]).lr_sequence(0).unwrap().to_string(), "LR");
        assert_eq!(c.lr_sequence(3).unwrap().to_string(), "LRRLRLRLLR");
        assert!(matches!(c.lr_sequence(10), Err(Error::RankOutOfRange { .. })));
    }

    #[test]
    fn running_counts_examples() {
        let c = five_arc_example();
        assert_eq!(c.running_counts(0).unwrap().counts, vec![2, 3, 2, 3, 2, 1, 2, 1, 2, 1]);
        assert_eq!(coll(&[(0, 1)]).running_counts(0).unwrap().counts, vec![1, 0]);
        assert_eq!(coll(&[(0, 1), (2, 3)]).running_counts(0).unwrap().counts, vec![1, 0, 1, 0]);
        assert!(c.running_counts(11).is_err());
    }

    #[test]
    fn running_count_sum_examples() {
        assert_eq!(five_arc_example().running_count_sum(), 19);
        assert_eq!(coll(&[(0, 1)]).running_count_sum(), 1);
        assert_eq!(coll(&[(0, 1), (2, 3)]).running_count_sum(), 2);
    }

    #[test]
    fn classification_of_double_pair() {
        let c = coll(&[(2, 1), (0, 3)]);
        let classes = c.classify_arcs();
        assert_eq!(classes.a_type.len(), 1);
        assert_eq!(classes.b_type.len(), 1);
        // canonical frame starts after gap 1, and arc 1 covers that gap
        assert_eq!(c.canonical_start(), 2);
        assert_eq!(classes.a_type, vec![1]);
        assert!(coll(&[(0, 1), (2, 3)]).classify_arcs().a_type.is_empty());
    }

    #[test]
    fn a_type_stats_errors_and_first_symbol() {
        let c = coll(&[(2, 1), (0, 3)]);
        assert_eq!(c.a_type_stats(0), Err(Error::NotATypeArc(0)));
        assert_eq!(c.a_type_stats(7), Err(Error::NotATypeArc(7)));
        // frame reads 2:L(arc0) 3:R(arc1) 0:L(arc1) 1:R(arc0)
        assert_eq!(c.a_type_stats(1).unwrap(), ATypeStats { l: 1, r: 1 });
        // the frame opens just after a minimum gap, so it can never open with R
        let five = five_arc_example();
        assert_eq!(five.lr_sequence(five.canonical_start()).unwrap().symbols[0], Side::L);
    }

    #[test]
    fn from_lr_fifo_rejects_unrealizable() {
        assert!(ArcCollection::from_lr_fifo(&lr("RL"), 0).is_err());
        assert!(ArcCollection::from_lr_fifo(&lr("LRR"), 0).is_err());
        assert!(ArcCollection::from_lr_fifo(&lr("LR"), 2).is_err());
        // two wrapping arcs whose right endpoints come after the left ones
        assert!(ArcCollection::from_lr_fifo(&lr("LRLR"), 2).is_err());
    }

    #[test]
    fn lr_parse_rejects_garbage() {
        assert_eq!(LrSequence::parse("L, R r l").unwrap(), vec![Side::L, Side::R, Side::R, Side::L]);
        assert!(LrSequence::parse("LXR").is_err());
    }
}
