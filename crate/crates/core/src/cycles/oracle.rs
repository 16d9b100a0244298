//! Exhaustive search for a minimum-weight persistent 1-cycle.
//!
//! Exponential in the number of edges of `K_b`; meant as a test oracle for
//! small instances only.

use std::collections::HashMap;

use crate::cycles::verify::verify_with;
use crate::error::{Error, Result};
use crate::filtration::{Chain, Filtration, Interval};
use crate::persistence::Reduction;

/// Largest number of edges in `K_b` the search accepts.
pub const MAX_ORACLE_EDGES: usize = 25;

/// A persistent 1-cycle for `interval` of minimum total weight (ties broken
/// by edge count, then by ids), using at most `budget` edges. `None` when no
/// such cycle fits the budget.
pub fn brute_force_minimal_cycle(f: &Filtration, interval: &Interval, budget: usize) -> Result<Option<Chain>> {
    brute_force_with(f, &Reduction::new(f), interval, budget)
}

pub fn brute_force_with(
    f: &Filtration,
    reduction: &Reduction,
    interval: &Interval,
    budget: usize,
) -> Result<Option<Chain>> {
    let b = interval.birth;
    if !f.cell(b)?.is_edge() {
        return Err(Error::NotPositiveEdge(b));
    }
    let others: Vec<usize> = f.cells()[..b - 1]
        .iter()
        .filter(|c| c.is_edge())
        .map(|c| c.id)
        .collect();
    if others.len() + 1 > MAX_ORACLE_EDGES {
        return Err(Error::InstanceTooLarge {
            edges: others.len() + 1,
            limit: MAX_ORACLE_EDGES,
        });
    }

    // Vertex parity as a bitmask over the vertices these edges touch.
    let mut bit: HashMap<usize, u32> = HashMap::new();
    let mut mask_of = |e: usize| -> u64 {
        let (u, v) = f.endpoints(e).expect("edge");
        let n = bit.len() as u32;
        let bu = *bit.entry(u).or_insert(n);
        let n = bit.len() as u32;
        let bv = *bit.entry(v).or_insert(n);
        (1u64 << bu) ^ (1u64 << bv)
    };
    let base = mask_of(b);
    let masks: Vec<u64> = others.iter().map(|&e| mask_of(e)).collect();

    // Gray-code walk over all subsets of `others`.
    let n = others.len();
    let mut parity = base;
    let mut chosen: u32 = 0;
    let mut count = 0usize;
    let mut cycles: Vec<u32> = Vec::new();
    let total: u64 = 1u64 << n;
    for step in 0..total {
        if step > 0 {
            let flip = step.trailing_zeros() as usize;
            chosen ^= 1 << flip;
            parity ^= masks[flip];
            if chosen & (1 << flip) != 0 {
                count += 1;
            } else {
                count -= 1;
            }
        }
        if parity == 0 && count < budget {
            cycles.push(chosen);
        }
    }

    let mut candidates: Vec<(f64, Chain)> = cycles
        .into_iter()
        .map(|set| {
            let ids = (0..n)
                .filter(|k| set & (1 << k) != 0)
                .map(|k| others[k])
                .chain(std::iter::once(b));
            let chain = Chain::from_ids(1, ids);
            (f.weight(&chain), chain)
        })
        .collect();
    candidates.sort_by(|(wa, a), (wb, b)| {
        wa.total_cmp(wb)
            .then_with(|| a.len().cmp(&b.len()))
            .then_with(|| a.ids().cmp(b.ids()))
    });
    Ok(candidates
        .into_iter()
        .map(|(_, c)| c)
        .find(|c| verify_with(f, reduction, interval, c).is_accept()))
}
