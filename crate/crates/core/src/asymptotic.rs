//! Limits as `n` grows with `M = beta * n`, `m = gamma * M` and
//! `d = p * C(n, 2)`: the edge proportion `alpha` that forces agreement
//! proportion `beta`, and the candidate-restricted voting bounds.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

const TOLERANCE: f64 = 1e-12;

fn check_domain(beta: f64, gamma: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::Domain(format!("gamma = {gamma} is outside [0, 1]")));
    }
    if !(beta >= 0.0 && beta * (1.0 + gamma) <= 1.0 + TOLERANCE) {
        return Err(Error::Domain(format!("beta = {beta} is outside [0, 1/(1+gamma)] for gamma = {gamma}")));
    }
    Ok(())
}

fn alpha_low(beta: f64, gamma: f64) -> f64 {
    beta * (2.0 - (1.0 - gamma).powi(2) * beta)
}

fn alpha_high(beta: f64, gamma: f64) -> f64 {
    let s = beta * (gamma + 1.0);
    s * (2.0 - s)
}

/// Edge proportion forcing agreement proportion `beta` when the minimum is a
/// `gamma` fraction of the maximum. Defined for `0 <= beta <= 1/(1+gamma)`.
pub fn alpha(beta: f64, gamma: f64) -> Result<f64> {
    check_domain(beta, gamma)?;
    Ok(if beta <= 0.5 { alpha_low(beta, gamma) } else { alpha_high(beta, gamma) })
}

/// Both cases of [`alpha`] evaluated at the same point, for continuity checks.
pub fn alpha_branches(beta: f64, gamma: f64) -> (f64, f64) {
    (alpha_low(beta, gamma), alpha_high(beta, gamma))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlphaWithP {
    pub value: f64,
    /// False when `p` exceeds `p_max(beta, gamma)`: no collection realizes the
    /// three proportions together, and the value then lies below the interval
    /// bound `beta (2 - beta)`.
    pub valid: bool,
}

/// `beta (2 - (1 - gamma)^2 beta) - p`.
pub fn alpha_with_p(beta: f64, gamma: f64, p: f64) -> Result<AlphaWithP> {
    check_domain(beta, gamma)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("p = {p} is outside [0, 1]")));
    }
    Ok(AlphaWithP { value: alpha_low(beta, gamma) - p, valid: p <= p_max(beta, gamma)? + TOLERANCE })
}

/// Largest realizable double-intersection proportion, `beta^2 gamma (2 - gamma)`.
pub fn p_max(beta: f64, gamma: f64) -> Result<f64> {
    check_domain(beta, gamma)?;
    Ok(beta * beta * gamma * (2.0 - gamma))
}

/// The `beta` at which `p_max` reaches `p`.
pub fn beta_star(p: f64, gamma: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&gamma) || p < 0.0 {
        return Err(Error::Domain(format!("need p >= 0 and gamma in [0, 1], got p = {p}, gamma = {gamma}")));
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    if gamma == 0.0 {
        return Err(Error::Domain("with gamma = 0 no beta realizes p > 0".into()));
    }
    Ok((p / (gamma * (2.0 - gamma))).sqrt())
}

/// Upper bound on the edges of `n` arcs with endpoints on `candidates` slots
/// and maximum agreement `max`: `(2 n M - n^2 / N - n) / 2`. Pass
/// `f64::INFINITY` for the unrestricted limit.
pub fn voting_e_max(n: u64, max: u64, candidates: f64) -> Result<f64> {
    if n == 0 || max == 0 || candidates.is_nan() || candidates <= 0.0 {
        return Err(Error::Domain(format!("need positive n, M, N; got n = {n}, M = {max}, N = {candidates}")));
    }
    if max > n {
        return Err(Error::Domain(format!("M = {max} exceeds n = {n}")));
    }
    let (n, max) = (n as f64, max as f64);
    Ok((2.0 * n * max - n * n / candidates - n) / 2.0)
}

/// `2 beta - 1/N`.
pub fn voting_alpha(beta: f64, candidates: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&beta) || candidates.is_nan() || candidates < 1.0 {
        return Err(Error::Domain(format!("need beta in [0, 1] and N >= 1, got {beta}, {candidates}")));
    }
    Ok(2.0 * beta - 1.0 / candidates)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveRow {
    pub beta: f64,
    pub alpha: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
}

/// `steps` evenly spaced rows over `beta` in `[0, 1/(1+gamma)]`. With `p`, rows
/// carry the prescribed-`p` value and its validity flag.
pub fn sample_curve(gamma: f64, p: Option<f64>, steps: usize) -> Result<Vec<CurveRow>> {
    if steps < 2 {
        return Err(Error::Domain(format!("need at least 2 steps, got {steps}")));
    }
    let top = 1.0 / (1.0 + gamma);
    (0..steps)
        .map(|i| {
            let beta = if i + 1 == steps { top } else { top * i as f64 / (steps - 1) as f64 };
            match p {
                None => Ok(CurveRow { beta, alpha: alpha(beta, gamma)?, valid: None }),
                Some(p) => {
                    let r = alpha_with_p(beta, gamma, p)?;
                    Ok(CurveRow { beta, alpha: r.value, valid: Some(r.valid) })
                }
            }
        })
        .collect()
}

/// CSV with header `beta,alpha[,valid]` and nine decimals.
pub fn curve_csv(rows: &[CurveRow]) -> String {
    let with_flag = rows.first().is_some_and(|r| r.valid.is_some());
    let mut out = String::from(if with_flag { "beta,alpha,valid\n" } else { "beta,alpha\n" });
    for row in rows {
        write!(out, "{:.9},{:.9}", row.beta, row.alpha).unwrap();
        if let Some(valid) = row.valid {
            write!(out, ",{valid}").unwrap();
        }
        out.push('\n');
    }
    out
}
