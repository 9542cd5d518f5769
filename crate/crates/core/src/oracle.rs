//! Independent ground-truth implementations used to cross-check the
//! solver, plus the linear-time certificate check.
//!
//! The quadratic prime solver shares no machinery with the fast path:
//! it sorts with the standard library, materializes every reachable-sum
//! set explicitly, and backtracks over stored derivations instead of
//! parent pointers.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;

use crate::error::Error;
use crate::modarith;
use crate::types::{Instance, Selection, MAX_MODULUS};

/// `S ⊕ {0, shift}` modulo `p`: the union of `S` and `S` shifted.
pub fn oplus(set: &BTreeSet<u64>, p: u64, shift: u64) -> Result<BTreeSet<u64>, Error> {
    if p == 0 || p > MAX_MODULUS {
        return Err(Error::InvalidModulus(p));
    }
    if set.is_empty() {
        return Err(Error::Contract("oplus requires a non-empty set"));
    }
    if shift >= p {
        return Err(Error::Contract("shift must be a canonical residue"));
    }
    let mut out = set.clone();
    for &s in set {
        if s >= p {
            return Err(Error::Contract("set elements must be canonical residues"));
        }
        out.insert((s + shift) % p);
    }
    Ok(out)
}

/// How a residue first became reachable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Derivation {
    /// 0-based index into the shift sequence.
    pub step: usize,
    /// The already-reachable residue the shift was applied to.
    pub predecessor: u64,
}

/// Explicitly materialized reachable-sum sets `S_1 ⊆ ... ⊆ S_k`, with
/// first-derivation provenance for every residue beyond the seed.
#[derive(Debug, Clone)]
pub struct ExplicitSetState {
    p: u64,
    seed: u64,
    shifts: Vec<u64>,
    sets: Vec<BTreeSet<u64>>,
    provenance: HashMap<u64, Derivation>,
}

impl ExplicitSetState {
    /// Grows `S_1 = {seed}` by one shift per step.
    pub fn materialize(p: u64, seed: u64, shifts: &[u64]) -> Result<Self, Error> {
        if p == 0 || p > MAX_MODULUS {
            return Err(Error::InvalidModulus(p));
        }
        if seed >= p {
            return Err(Error::Contract("seed must be a canonical residue"));
        }
        let mut sets = vec![BTreeSet::from([seed])];
        let mut provenance = HashMap::new();
        for (step, &shift) in shifts.iter().enumerate() {
            let prev = sets.last().unwrap();
            let next = oplus(prev, p, shift)?;
            for &r in &next {
                if !prev.contains(&r) {
                    let predecessor = (r + p - shift) % p;
                    debug_assert!(prev.contains(&predecessor));
                    let first = provenance.insert(r, Derivation { step, predecessor });
                    debug_assert!(first.is_none());
                }
            }
            sets.push(next);
        }
        Ok(Self {
            p,
            seed,
            shifts: shifts.to_vec(),
            sets,
            provenance,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn shifts(&self) -> &[u64] {
        &self.shifts
    }

    /// `sets()[k]` holds the residues reachable after `k` shifts.
    pub fn sets(&self) -> &[BTreeSet<u64>] {
        &self.sets
    }

    /// First derivation of a residue; `None` for the seed and for
    /// residues that never appeared.
    pub fn derivation(&self, residue: u64) -> Option<Derivation> {
        self.provenance.get(&residue).copied()
    }
}

/// Quadratic prime-case solver materializing every reachable-sum set.
///
/// Returns the set state alongside the selection when the growth branch
/// ran, `None` when the equal-residue shortcut answered.
pub fn solve_prime_quadratic_traced(
    p: u64,
    values: &[i64],
) -> Result<(Selection, Option<ExplicitSetState>), Error> {
    let instance = Instance::new(p, values)?;
    if !modarith::is_prime(p) {
        return Err(Error::Contract("modulus must be prime"));
    }
    let res = instance.residues();
    let pu = p as usize;
    let mut order: Vec<usize> = (0..res.len()).collect();
    order.sort_by_key(|&pos| res[pos]);

    let mut mask = vec![false; res.len()];

    // Equal residues p slots apart mean p + 1 equal values in a row.
    for i in 0..pu - 1 {
        if res[order[i]] == res[order[i + pu]] {
            for &pos in &order[i..i + pu] {
                mask[pos] = true;
            }
            return Ok((Selection::from_mask(mask), None));
        }
    }

    let seed = order[..pu].iter().map(|&pos| res[pos]).sum::<u64>() % p;
    let shifts: Vec<u64> = (0..pu - 1)
        .map(|j| (res[order[j + pu]] + p - res[order[j]]) % p)
        .collect();
    let state = ExplicitSetState::materialize(p, seed, &shifts)?;
    if !state.sets().last().unwrap().contains(&0) {
        return Err(Error::Invariant("final reachable set misses zero"));
    }

    for &pos in &order[..pu] {
        mask[pos] = true;
    }
    let mut current = 0u64;
    let mut visited = 0;
    while current != seed {
        let Some(derivation) = state.derivation(current) else {
            return Err(Error::Invariant(
                "backtrack hit a residue with no derivation",
            ));
        };
        visited += 1;
        if visited > pu {
            return Err(Error::Invariant("backtrack exceeded the set count"));
        }
        mask[order[derivation.step + pu]] = true;
        mask[order[derivation.step]] = false;
        current = derivation.predecessor;
    }
    Ok((Selection::from_mask(mask), Some(state)))
}

/// Quadratic prime-case solver; see [`solve_prime_quadratic_traced`].
pub fn solve_prime_quadratic(p: u64, values: &[i64]) -> Result<Selection, Error> {
    solve_prime_quadratic_traced(p, values).map(|(selection, _)| selection)
}

/// Cap for [`solve_exhaustive`]: `C(2n - 1, n)` subsets stay manageable.
pub const EXHAUSTIVE_CAP: u64 = 12;

/// Tries every size-`n` subset in lexicographic position order and
/// returns the first valid selection, or `None` if no subset works.
pub fn solve_exhaustive(n: u64, values: &[i64]) -> Result<Option<Selection>, Error> {
    if n > EXHAUSTIVE_CAP {
        return Err(Error::Contract("exhaustive search is capped at n = 12"));
    }
    let instance = Instance::new(n, values)?;
    let res = instance.residues();
    for combo in (0..res.len()).combinations(n as usize) {
        let sum: u64 = combo.iter().map(|&pos| res[pos]).sum();
        if sum % n == 0 {
            let mut mask = vec![false; res.len()];
            for pos in combo {
                mask[pos] = true;
            }
            return Ok(Some(Selection::from_mask(mask)));
        }
    }
    Ok(None)
}

/// Why a selection is not a valid certificate, or [`Verdict::Valid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// The number of selected positions differs from `n`.
    WrongCardinality {
        selected: u64,
    },
    /// The selected residues sum to this nonzero remainder modulo `n`.
    SumNotDivisible {
        remainder: u64,
    },
}

/// Classifies a selection against an instance in `O(n)` time.
pub fn classify_selection(n: u64, values: &[i64], mask: &[bool]) -> Result<Verdict, Error> {
    let instance = Instance::new(n, values)?;
    if mask.len() != instance.residues().len() {
        return Err(Error::WrongLength {
            expected: 2 * n - 1,
            got: mask.len() as u64,
        });
    }
    let selected = mask.iter().filter(|&&b| b).count() as u64;
    if selected != n {
        return Ok(Verdict::WrongCardinality { selected });
    }
    let sum: u64 = instance
        .residues()
        .iter()
        .zip(mask)
        .filter_map(|(&r, &b)| b.then_some(r))
        .sum();
    let remainder = sum % n;
    if remainder != 0 {
        return Ok(Verdict::SumNotDivisible { remainder });
    }
    Ok(Verdict::Valid)
}

/// `true` iff the selection is a valid certificate for the instance.
pub fn check_selection(n: u64, values: &[i64], mask: &[bool]) -> Result<bool, Error> {
    Ok(classify_selection(n, values, mask)? == Verdict::Valid)
}
