//! Extremal counts for arc collections with prescribed maximum agreement `M`,
//! minimum agreement `m` and `n` arcs.
//!
//! The closed forms here are exact integer evaluations. Each piecewise bound
//! reports which case produced its value, and at the shared boundary of two
//! cases both are evaluated and required to agree.

mod construct;
mod extend;

pub use construct::{construct_a_max, construct_d_max};
pub use extend::{extend_step, extend_to_maximal, first_divergence};

use serde::Serialize;

use crate::arcs::{ArcCollection, LrSequence, RunningCountSequence, Side};
use crate::error::{Error, Result};

/// The triple `(M, m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExtremalParams {
    #[serde(rename = "M")]
    pub max: usize,
    #[serde(rename = "m")]
    pub min: usize,
    pub n: usize,
}

impl ExtremalParams {
    /// Requires `0 <= m <= M <= n` and `n >= 1`.
    pub fn new(max: usize, min: usize, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Infeasible("n must be at least 1".into()));
        }
        if min > max || max > n {
            return Err(Error::Infeasible(format!("need m <= M <= n, got M={max}, m={min}, n={n}")));
        }
        Ok(ExtremalParams { max, min, n })
    }

    /// Parameters realized by an actual collection.
    pub fn of(c: &ArcCollection) -> Self {
        let p = c.agreement_profile();
        ExtremalParams { max: p.max, min: p.min, n: c.n() }
    }

    fn ints(self) -> (i64, i64, i64) {
        (self.max as i64, self.min as i64, self.n as i64)
    }

    fn require_edge_regime(self) -> Result<()> {
        if self.max + self.min > self.n + 1 {
            return Err(Error::Infeasible(format!(
                "M + m = {} exceeds n + 1 = {}; every pair already intersects",
                self.max + self.min,
                self.n + 1
            )));
        }
        Ok(())
    }

    fn require_strict(self) -> Result<()> {
        if self.max <= self.min {
            return Err(Error::Infeasible(format!(
                "M={} must exceed m={}: agreement changes at every endpoint",
                self.max, self.min
            )));
        }
        Ok(())
    }
}

/// A closed-form value together with the case that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub value: i64,
    pub branch: &'static str,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl BoundReport {
    fn exact(value: i64, branch: &'static str) -> Self {
        BoundReport { value, branch, valid: true, reason: None }
    }
}

fn half(twice: i64) -> i64 {
    debug_assert_eq!(twice % 2, 0, "closed form must be even before halving");
    twice / 2
}

/// Maximal running count sum `(M + m)(M - m) + (2M - 1)(n - M + m)`.
pub fn c_max(p: ExtremalParams) -> Result<i64> {
    if p.max == 0 {
        return Err(Error::Infeasible("M must be at least 1".into()));
    }
    let (big, small, n) = p.ints();
    Ok((big + small) * (big - small) + (2 * big - 1) * (n - big + small))
}

/// `[m+1, ..., M, M-1, M, ..., M, M-1, ..., m+1, m]`, with the minimum last.
pub fn maximal_running_count_sequence(p: ExtremalParams) -> Result<RunningCountSequence> {
    let seq = maximal_lr_sequence(p)?;
    let mut count = p.min;
    let counts = seq
        .symbols
        .iter()
        .map(|s| {
            count = match s {
                Side::L => count + 1,
                Side::R => count - 1,
            };
            count
        })
        .collect();
    Ok(RunningCountSequence { counts })
}

/// `M - m` left endpoints, `RL` repeated `n - M + m` times, then `M - m` right
/// endpoints.
pub fn maximal_lr_sequence(p: ExtremalParams) -> Result<LrSequence> {
    p.require_strict()?;
    let ramp = p.max - p.min;
    let mut symbols = vec![Side::L; ramp];
    for _ in 0..p.n - ramp {
        symbols.extend([Side::R, Side::L]);
    }
    symbols.extend(std::iter::repeat_n(Side::R, ramp));
    Ok(LrSequence { symbols, start: 0 })
}

fn e_max_low(p: ExtremalParams) -> i64 {
    let (big, small, n) = p.ints();
    half(big + 2 * big * n + 2 * big * small - big * big - small * small - small - 2 * n)
}

fn e_max_high(p: ExtremalParams) -> i64 {
    let (big, small, n) = p.ints();
    half(big + 2 * big * n - 2 * big * small - big * big - small * small + 2 * small * n + small - 2 * n)
}

/// Piecewise `e_max` polynomial, also evaluated at `M = m` (and `M = 0`) where
/// `e_min` needs it.
fn e_max_formula(p: ExtremalParams) -> BoundReport {
    let twice_m = 2 * p.max;
    if twice_m == p.n + 1 {
        let (low, high) = (e_max_low(p), e_max_high(p));
        assert_eq!(low, high, "e_max cases disagree at 2M = n + 1 for {p:?}");
    }
    if twice_m <= p.n + 1 {
        BoundReport::exact(e_max_low(p), "2M<=n+1")
    } else {
        BoundReport::exact(e_max_high(p), "2M>=n+1")
    }
}

/// Largest edge count of any collection satisfying `(M, m, n)`, for `M + m <= n + 1`.
pub fn e_max(p: ExtremalParams) -> Result<BoundReport> {
    if p.max == 0 {
        return Err(Error::Infeasible("M must be at least 1".into()));
    }
    p.require_edge_regime()?;
    Ok(e_max_formula(p))
}

/// Edge count forcing maximum agreement at least `M` when the minimum is `m`:
/// `e_max(M - 1, m, n) + 1`.
pub fn e_min(p: ExtremalParams) -> Result<BoundReport> {
    p.require_strict()?;
    if p.max + p.min > p.n + 1 {
        return Err(Error::Infeasible(format!(
            "M + m = {} > n + 1: no edge count can force agreement {}",
            p.max + p.min,
            p.max
        )));
    }
    let below = ExtremalParams { max: p.max - 1, ..p };
    let value = e_max_formula(below).value + 1;
    let (low, high) = (e_min_low(p), e_min_high(p));
    if 2 * p.max == p.n + 3 {
        assert_eq!(low, high, "e_min cases disagree at 2M = n + 3 for {p:?}");
    }
    let (direct, branch) = if 2 * p.max <= p.n + 3 { (low, "2M<=n+3") } else { (high, "2M>n+3") };
    debug_assert_eq!(direct, value);
    Ok(BoundReport::exact(value, branch))
}

// The e_min closed forms, kept separate from the e_max shift so the two routes
// check each other.
fn e_min_low(p: ExtremalParams) -> i64 {
    let (big, small, n) = p.ints();
    half(3 * big + 2 * big * n + 2 * big * small - big * big - 3 * small - small * small - 4 * n)
}

fn e_min_high(p: ExtremalParams) -> i64 {
    let (big, small, n) = p.ints();
    half(3 * big + 2 * big * n - 2 * big * small - big * big + 3 * small + 2 * small * n - small * small - 4 * n)
}

/// Double intersections of the A_max construction.
pub fn d_of_a_max(p: ExtremalParams) -> Result<BoundReport> {
    p.require_edge_regime()?;
    let (big, small, n) = p.ints();
    if 2 * big <= n + 1 {
        Ok(BoundReport::exact(0, "2M<=n+1"))
    } else {
        Ok(BoundReport::exact(small * (2 * big - n - 1), "2M>n+1"))
    }
}

/// True when `M + m >= n + 1`, the regime in which every pair of arcs meets.
pub fn all_edges_check(p: ExtremalParams) -> bool {
    p.max + p.min > p.n
}

/// Largest number of double intersections under `(M, m, n)`:
/// `m(M - 1) - C(m, 2)`.
pub fn d_max(p: ExtremalParams) -> i64 {
    let (big, small, _) = p.ints();
    half(small * (2 * big - small - 1))
}

/// Sum over A-type arcs of `l - r + m`, read in the canonical frame.
pub fn di_lower_bound(c: &ArcCollection) -> i64 {
    let m = c.agreement_profile().min as i64;
    c.classify_arcs()
        .a_type
        .iter()
        .map(|&i| {
            let stats = c.a_type_stats(i).expect("classified as A-type");
            stats.l as i64 - stats.r as i64 + m
        })
        .sum()
}

/// Edge count bound when `d` double intersections are prescribed:
/// `(C_max - n) / 2 - d`. Flagged invalid when `d > d_max`.
pub fn e_min_given_d(p: ExtremalParams, d: u64) -> Result<BoundReport> {
    let (big, small, n) = p.ints();
    let base = half(-big * big + 2 * n * big + 2 * small * big + big - small * small - 2 * n - small);
    let mut report = BoundReport::exact(base - d as i64, "given-d");
    let limit = d_max(p);
    if d as i64 > limit {
        report.valid = false;
        report.reason = Some(format!("d = {d} exceeds d_max = {limit}; not realizable"));
    }
    Ok(report)
}

/// [`e_min_given_d`] with `d = dprop * C(n, 2)`, which must be a whole count.
pub fn e_min_given_p(p: ExtremalParams, dprop: f64) -> Result<BoundReport> {
    if !(0.0..=1.0).contains(&dprop) {
        return Err(Error::Domain(format!("double-intersection proportion {dprop} is outside [0, 1]")));
    }
    let pairs = (p.n * (p.n - 1) / 2) as f64;
    let d = dprop * pairs;
    if (d - d.round()).abs() > 1e-9 {
        return Err(Error::Domain(format!("{dprop} * C(n, 2) = {d} is not a whole count")));
    }
    e_min_given_d(p, d.round() as u64)
}
