//! Growing arcs toward the maximal running count sum.
//!
//! Every move happens in the canonical reading frame (minimum agreement `m` in
//! the last position) and only lengthens one arc by carrying one endpoint past
//! a neighbouring endpoint. The frame never changes: counts only rise and the
//! closing gap is never crossed.

use crate::arcs::{ArcCollection, Side};
use crate::error::{Error, Result};

use super::{c_max, maximal_running_count_sequence, ExtremalParams};

/// First index where `counts` falls below the maximal running count sequence.
pub fn first_divergence(counts: &[usize], p: ExtremalParams) -> Result<Option<usize>> {
    let target = maximal_running_count_sequence(p)?;
    if target.counts.len() != counts.len() {
        return Err(Error::Infeasible(format!(
            "sequence of length {} does not match 2n = {}",
            counts.len(),
            target.counts.len()
        )));
    }
    Ok(counts.iter().zip(&target.counts).position(|(r, best)| r < best))
}

/// One extension move: the result contains `c` arc by arc, keeps `M` and `m`,
/// and has running count sum exactly two larger.
///
/// Let `j` be the first frame position whose running count is below the
/// maximal sequence; it is a right endpoint. If every later left endpoint
/// directly follows a right endpoint, a right endpoint from the run starting at
/// `j - 1` is carried clockwise past the next left endpoint. Otherwise the first
/// later left endpoint `k` that follows another left endpoint is used: the pair
/// `R L` just before it becomes `L R`, moving whichever left endpoint does not
/// belong to that right endpoint's own arc.
pub fn extend_step(c: &ArcCollection) -> Result<ArcCollection> {
    let p = ExtremalParams::of(c);
    if c.running_count_sum() as i64 >= c_max(p)? {
        return Err(Error::AlreadyMaximal);
    }
    let start = c.canonical_start();
    let mut slots = c.frame_slots(start);
    let counts = c.running_counts(start)?.counts;
    let j = first_divergence(&counts, p)?.expect("below C_max implies a divergence");
    debug_assert_eq!(slots[j].1, Side::R);
    debug_assert!(j >= 1, "the first count always matches m + 1");

    let unpaired_left = (j + 1..slots.len()).find(|&k| slots[k].1 == Side::L && slots[k - 1].1 == Side::L);
    match unpaired_left {
        None => {
            debug_assert_eq!(slots[j - 1].1, Side::R);
            let next_left =
                (j + 1..slots.len()).find(|&t| slots[t].1 == Side::L).expect("a left endpoint follows j below C_max");
            // The right endpoint at j - 1 may belong to the arc that opens at
            // next_left; the one at j then cannot.
            let mover = if slots[j - 1].0 != slots[next_left].0 { j - 1 } else { j };
            let slot = slots.remove(mover);
            slots.insert(next_left, slot);
        }
        Some(k) => {
            debug_assert_eq!(slots[k - 2].1, Side::R);
            if slots[k - 1].0 != slots[k - 2].0 {
                slots.swap(k - 2, k - 1);
            } else {
                let slot = slots.remove(k);
                slots.insert(k - 2, slot);
            }
        }
    }
    ArcCollection::from_frame_slots(&slots, start, c.n())
}

/// Applies [`extend_step`] until the running count sum reaches `C_max`.
pub fn extend_to_maximal(c: &ArcCollection) -> ArcCollection {
    let mut current = c.clone();
    loop {
        match extend_step(&current) {
            Ok(next) => current = next,
            Err(Error::AlreadyMaximal) => return current,
            Err(e) => unreachable!("extension of a valid collection failed: {e}"),
        }
    }
}
