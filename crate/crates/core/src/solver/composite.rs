//! Composite-modulus solver: extract zero-sum groups modulo the smaller
//! factor from a sliding pool, then recurse on the group quotients.

use crate::error::Error;
use crate::types::{Instance, Selection, MAX_MODULUS};

/// Execution record of one composite-modulus solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeTrace {
    /// The `2q - 1` extracted groups, each exactly `p` input positions.
    pub groups: Vec<Vec<usize>>,
    /// Per-group quotient: the group's residue sum divided by `p`.
    pub quotients: Vec<u64>,
    /// Which groups the recursive modulo-`q` solve picked.
    pub outer: Selection,
}

/// Solves for `n = p * q` and returns the grouping record.
pub fn egz_composite_traced(
    p: u64,
    q: u64,
    values: &[i64],
) -> Result<(Selection, CompositeTrace), Error> {
    if p < 2 || q < 2 {
        return Err(Error::Contract("both factors must be at least 2"));
    }
    let n = match p.checked_mul(q) {
        Some(n) if n <= MAX_MODULUS => n,
        _ => {
            return Err(Error::Contract(
                "product of factors exceeds the supported modulus",
            ))
        }
    };
    let instance = Instance::new(n, values)?;
    solve(p, q, &instance)
}

/// Solves for `n = p * q`: `n` of the `2n - 1` values summing to a
/// multiple of `n`.
pub fn egz_composite(p: u64, q: u64, values: &[i64]) -> Result<Selection, Error> {
    egz_composite_traced(p, q, values).map(|(selection, _)| selection)
}

pub(crate) fn solve(
    p: u64,
    q: u64,
    instance: &Instance,
) -> Result<(Selection, CompositeTrace), Error> {
    debug_assert_eq!(p * q, instance.n());
    let res = instance.residues();
    let pu = p as usize;
    let group_count = 2 * q as usize - 1;

    // The pool holds p - 1 leftover positions between rounds; each round
    // tops it up to 2p - 1 with the next block of fresh positions and
    // extracts a zero-sum group modulo p.
    let mut pool: Vec<usize> = (0..pu - 1).collect();
    let mut groups: Vec<Vec<usize>> = Vec::with_capacity(group_count);
    let mut sub_values: Vec<i64> = Vec::with_capacity(2 * pu - 1);
    for i in 1..=group_count {
        pool.extend(i * pu - 1..(i + 1) * pu - 1);
        sub_values.clear();
        sub_values.extend(pool.iter().map(|&pos| res[pos] as i64));
        let inner = Instance::new(p, &sub_values)?;
        let picked = super::solve(&inner)?;
        let mut group = Vec::with_capacity(pu);
        let mut rest = Vec::with_capacity(pu - 1);
        for (slot, &pos) in pool.iter().enumerate() {
            if picked.mask()[slot] {
                group.push(pos);
            } else {
                rest.push(pos);
            }
        }
        if group.len() != pu {
            return Err(Error::Invariant("inner solve selected a wrong-size group"));
        }
        groups.push(group);
        pool = rest;
    }

    // Each group sum is below p * n < 2^62 and divisible by p, so the
    // quotients are exact and below n.
    let mut quotients: Vec<u64> = Vec::with_capacity(group_count);
    for group in &groups {
        let sum: u64 = group.iter().map(|&pos| res[pos]).sum();
        if sum % p != 0 {
            return Err(Error::Invariant(
                "group sum not divisible by the inner factor",
            ));
        }
        quotients.push(sum / p);
    }
    let outer_values: Vec<i64> = quotients.iter().map(|&x| x as i64).collect();
    let outer_instance = Instance::new(q, &outer_values)?;
    let outer = super::solve(&outer_instance)?;

    let mut mask = vec![false; res.len()];
    for (gi, group) in groups.iter().enumerate() {
        if outer.mask()[gi] {
            for &pos in group {
                mask[pos] = true;
            }
        }
    }
    let trace = CompositeTrace {
        groups,
        quotients,
        outer,
    };
    Ok((Selection::from_mask(mask), trace))
}
