use crate::arcs::{Arc, ArcCollection, Side};
use crate::error::{Error, Result};
use crate::graph::build_summary;

use super::{d_max, maximal_lr_sequence, ExtremalParams};

/// The edge-maximizing collection on the maximal LR-sequence, read from rank 0.
///
/// With the left endpoints numbered `L_1..L_n` and right endpoints `R_1..R_n`
/// in reading order, the A-type arc `A_i` runs from `L_{n-m+i}` around to
/// `R_i`, and the B-type arc `B_{m+i}` runs from `L_i` to `R_{m+i}`. Arcs are
/// returned A-type first. No arc properly contains another.
pub fn construct_a_max(p: ExtremalParams) -> Result<ArcCollection> {
    p.require_strict()?;
    p.require_edge_regime()?;
    let seq = maximal_lr_sequence(p)?;
    let lefts = ranks_of(&seq.symbols, Side::L);
    let rights = ranks_of(&seq.symbols, Side::R);
    let (n, m) = (p.n, p.min);
    let a_type = (0..m).map(|i| Arc::new(lefts[n - m + i], rights[i]));
    let b_type = (0..n - m).map(|i| Arc::new(lefts[i], rights[m + i]));
    ArcCollection::new(a_type.chain(b_type).collect())
}

/// A collection with `d_max(M, m, n)` double intersections.
///
/// Starts from the maximal LR-sequence and turns its first `m` plateau `RL`
/// pairs into A-type arcs, each missing only the gap between its own right and
/// left endpoint. Each such right endpoint sits where agreement is `M`, so each
/// A-type arc doubly meets the `M - 1` other arcs there. Remaining endpoints are
/// paired first-in first-out as B-type arcs. The achieved count is checked
/// against `d_max` before returning.
pub fn construct_d_max(p: ExtremalParams) -> Result<ArcCollection> {
    if p.min == 0 {
        return Err(Error::Infeasible("the d_max construction needs m >= 1".into()));
    }
    p.require_strict()?;
    let seq = maximal_lr_sequence(p)?;
    let ramp = p.max - p.min;
    let plateau_pairs = p.n - ramp;
    if p.min > plateau_pairs {
        return Err(Error::Infeasible(format!("{} A-type arcs do not fit in {plateau_pairs} plateau pairs", p.min)));
    }
    let mut arcs = Vec::with_capacity(p.n);
    let mut in_a_type = vec![false; 2 * p.n];
    for i in 0..p.min {
        let right = ramp + 2 * i;
        debug_assert_eq!((seq.symbols[right], seq.symbols[right + 1]), (Side::R, Side::L));
        arcs.push(Arc::new(right + 1, right));
        in_a_type[right] = true;
        in_a_type[right + 1] = true;
    }
    let mut open = std::collections::VecDeque::new();
    for (rank, &side) in seq.symbols.iter().enumerate() {
        if in_a_type[rank] {
            continue;
        }
        match side {
            Side::L => open.push_back(rank),
            Side::R => {
                let left = open
                    .pop_front()
                    .ok_or_else(|| Error::Infeasible(format!("no open B-type arc to close at rank {rank}")))?;
                arcs.push(Arc::new(left, rank));
            }
        }
    }
    let c = ArcCollection::new(arcs)?;
    let achieved = build_summary(&c).d() as i64;
    let target = d_max(p);
    if achieved != target {
        return Err(Error::Infeasible(format!("construction reached d = {achieved}, short of d_max = {target}")));
    }
    Ok(c)
}

fn ranks_of(symbols: &[Side], side: Side) -> Vec<usize> {
    symbols.iter().enumerate().filter(|(_, &s)| s == side).map(|(i, _)| i).collect()
}
