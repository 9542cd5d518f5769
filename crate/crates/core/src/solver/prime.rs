//! Prime-modulus solver: equal-residue shortcut, reachable-sum table
//! growth driven by binary search, and swap-chain reconstruction.

use crate::error::Error;
use crate::modarith::{self, mod_inverse};
use crate::types::{Instance, ResidueTable, Selection, SortedView, MAX_MODULUS};

/// Result of one [`find_t`] search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FindT {
    /// The located residue: outside the table, with `(value - d) mod p`
    /// inside it.
    pub value: u64,
    /// Membership probes made by the search loop.
    pub probes: u32,
}

/// Finds a residue outside the membership table whose predecessor under
/// a shift by `d` is inside it.
///
/// `u` must be a member of the table, `v` a non-member, and `d` a
/// nonzero residue, all modulo the prime `p`. The search halves an
/// index interval along the cycle `0, d, 2d, ...`, so it makes at most
/// `ceil(log2(2p))` probes; the exact count is reported in
/// [`FindT::probes`].
pub fn find_t(p: u64, table: &ResidueTable, d: u64, u: u64, v: u64) -> Result<FindT, Error> {
    if p < 2 || p > MAX_MODULUS {
        return Err(Error::InvalidModulus(p));
    }
    if table.modulus() != p {
        return Err(Error::Contract("membership table modulus must equal p"));
    }
    if d == 0 || d >= p {
        return Err(Error::Contract(
            "difference must be a nonzero canonical residue",
        ));
    }
    if u >= p || !table.contains(u) {
        return Err(Error::Contract("u must be a member residue"));
    }
    if v >= p || table.contains(v) {
        return Err(Error::Contract("v must be a non-member residue"));
    }
    let d_inv = mod_inverse(d, p)?;
    // Walk positions of u and v along the cycle; v sits one lap ahead so
    // the interval is never empty. All products stay below 2^63.
    let mut low = u * d_inv % p;
    let mut high = p + v * d_inv % p;
    let mut probes = 0;
    while low + 1 != high {
        let mid = (low + high) / 2;
        probes += 1;
        if table.contains(mid * d % p) {
            low = mid;
        } else {
            high = mid;
        }
    }
    Ok(FindT {
        value: high * d % p,
        probes,
    })
}

/// One table-growth step of a prime-modulus solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthStep {
    /// 0-based step index `j`: the step offers to swap sorted slot `j`
    /// out for sorted slot `j + p`.
    pub swap_index: usize,
    /// Residue entering minus residue leaving, mod p.
    pub difference: u64,
    /// Residue this step added to the table.
    pub value: u64,
    /// Membership probes spent locating `value`.
    pub probes: u32,
}

/// Execution record of one prime-modulus solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTrace {
    /// Input positions in stable residue order.
    pub order: Vec<usize>,
    /// Sorted slot at which the equal-residue shortcut fired, if it did.
    pub shortcut: Option<usize>,
    /// Sum of the first p sorted residues mod p; `None` when the
    /// shortcut answered.
    pub seed: Option<u64>,
    /// Table-growth steps in execution order; `steps[j].swap_index == j`.
    pub steps: Vec<GrowthStep>,
    /// Step indices visited by the reconstruction walk, in walk order.
    pub walk: Vec<usize>,
}

/// Solves a prime-modulus instance and returns the execution trace.
pub fn egz_prime_traced(p: u64, values: &[i64]) -> Result<(Selection, PrimeTrace), Error> {
    let instance = Instance::new(p, values)?;
    solve(&instance)
}

/// Solves a prime-modulus instance: `p` of the `2p - 1` values summing
/// to a multiple of `p`.
pub fn egz_prime(p: u64, values: &[i64]) -> Result<Selection, Error> {
    egz_prime_traced(p, values).map(|(selection, _)| selection)
}

pub(crate) fn solve(instance: &Instance) -> Result<(Selection, PrimeTrace), Error> {
    let p = instance.n();
    if !modarith::is_prime(p) {
        return Err(Error::Contract("modulus must be prime"));
    }
    let res = instance.residues();
    let pu = p as usize;
    let order = SortedView::new(res, p).into_order();
    let sorted: Vec<u64> = order.iter().map(|&pos| res[pos]).collect();
    let mut mask = vec![false; res.len()];

    // p + 1 equal residues sit together after sorting; p of them sum to
    // a multiple of p directly.
    for i in 0..pu {
        if sorted[i] == sorted[i + pu - 1] {
            for &pos in &order[i..i + pu] {
                mask[pos] = true;
            }
            let trace = PrimeTrace {
                order,
                shortcut: Some(i),
                seed: None,
                steps: Vec::new(),
                walk: Vec::new(),
            };
            return Ok((Selection::from_mask(mask), trace));
        }
    }

    // Seed sum of the first p sorted residues; each term is below p, so
    // the sum stays below p^2 < 2^62.
    let seed = sorted[..pu].iter().sum::<u64>() % p;
    let mut table = ResidueTable::new(p);
    table.insert(seed);

    // Step j swaps sorted slot j out for slot j + p; its difference is
    // nonzero because the shortcut scan above found no equal pair that
    // far apart. Only the found value and its probe count are recorded
    // here (probe counts stay below ceil(log2(2p)) + 1 <= 33); the full
    // trace records are expanded after the loop, off the hot path.
    let mut step_values: Vec<u32> = Vec::with_capacity(pu - 1);
    let mut step_probes: Vec<u8> = Vec::with_capacity(pu - 1);
    for j in 0..pu - 1 {
        if table.contains(0) {
            break;
        }
        let d = (sorted[j + pu] + p - sorted[j]) % p;
        let found = find_t(p, &table, d, seed, 0)?;
        table.insert(found.value);
        step_values.push(found.value as u32);
        step_probes.push(found.probes as u8);
    }
    if !table.contains(0) {
        return Err(Error::Invariant("reachable table never contained zero"));
    }

    // Step index that added each residue to the table; u32::MAX marks
    // residues never reached. Step values are pairwise distinct, so
    // each slot is written at most once.
    const UNREACHED: u32 = u32::MAX;
    let mut parent = vec![UNREACHED; pu];
    for (j, &value) in step_values.iter().enumerate() {
        parent[value as usize] = j as u32;
    }

    // Start from the first p sorted positions, then walk the parent
    // chain from residue 0 back to the seed, applying each recorded
    // swap. Step indices strictly decrease, so the walk ends.
    for &pos in &order[..pu] {
        mask[pos] = true;
    }
    let mut walk = Vec::new();
    let mut c = 0u64;
    while c != seed {
        let j = parent[c as usize];
        if j == UNREACHED {
            return Err(Error::Invariant(
                "reconstruction walk hit an unrecorded residue",
            ));
        }
        let j = j as usize;
        if walk.len() == pu {
            return Err(Error::Invariant(
                "reconstruction walk exceeded the table size",
            ));
        }
        walk.push(j);
        mask[order[j + pu]] = true;
        mask[order[j]] = false;
        let d = (sorted[j + pu] + p - sorted[j]) % p;
        c = (c + p - d) % p;
    }
    let steps: Vec<GrowthStep> = step_values
        .iter()
        .zip(&step_probes)
        .enumerate()
        .map(|(j, (&value, &probes))| GrowthStep {
            swap_index: j,
            difference: (sorted[j + pu] + p - sorted[j]) % p,
            value: value as u64,
            probes: probes as u32,
        })
        .collect();

    let trace = PrimeTrace {
        order,
        shortcut: None,
        seed: Some(seed),
        steps,
        walk,
    };
    Ok((Selection::from_mask(mask), trace))
}
