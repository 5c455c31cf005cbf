//! Clique number and the greedy high-degree clique listing.

use alloc::vec::Vec;

use crate::{Error, Graph};

/// Largest order accepted by [`clique_number`].
pub const CLIQUE_ORDER_LIMIT: usize = 64;

/// Exact clique number by branch and bound over `u64` vertex masks.
pub fn clique_number(g: &Graph) -> Result<usize, Error> {
    let n = g.order();
    if n > CLIQUE_ORDER_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: CLIQUE_ORDER_LIMIT,
        });
    }
    let masks: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    expand(&masks, 0, all, &mut best);
    Ok(best)
}

fn expand(masks: &[u64], size: usize, mut candidates: u64, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    while candidates != 0 {
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        expand(masks, size + 1, candidates & masks[v], best);
    }
}

/// The greedy listing over `S = {v : deg(v) >= min_degree}`: repeatedly move
/// the lowest-indexed vertex of `U` into `T` and shrink `U` to its
/// neighbourhood. Returns `T` in insertion order.
pub fn greedy_degree_clique(g: &Graph, min_degree: usize) -> Vec<usize> {
    let mut u: Vec<usize> = (0..g.order())
        .filter(|&v| g.degree(v) >= min_degree)
        .collect();
    let mut t = Vec::new();
    while let Some(&v) = u.first() {
        t.push(v);
        u.retain(|&w| g.has_edge(v, w));
    }
    t
}
