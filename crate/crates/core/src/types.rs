//! Problem instances, selection certificates, and the residue-sorted view.

use crate::error::Error;
use crate::modarith;

/// Largest supported modulus.
///
/// Keeping `n < 2^31` bounds every intermediate product and sum of
/// residues below `2^63`, so all arithmetic stays in `u64`.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

/// A solver input: a modulus `n` and exactly `2n - 1` values, stored as
/// canonical residues in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    n: u64,
    residues: Vec<u64>,
}

impl Instance {
    /// Validates the length and reduces every value modulo `n`.
    pub fn new(n: u64, values: &[i64]) -> Result<Self, Error> {
        if n == 0 || n > MAX_MODULUS {
            return Err(Error::InvalidModulus(n));
        }
        let expected = 2 * n - 1;
        if values.len() as u64 != expected {
            return Err(Error::WrongLength {
                expected,
                got: values.len() as u64,
            });
        }
        let residues = values
            .iter()
            .map(|&x| modarith::reduce(x, n))
            .collect::<Result<_, _>>()?;
        Ok(Self { n, residues })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Canonical residues in input order; length `2n - 1`.
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }
}

/// A 0/1 selection over the input positions.
///
/// A valid certificate for modulus `n` has exactly `n` ones and the
/// selected residues sum to a multiple of `n`; validity is checked by
/// [`crate::oracle::check_selection`], not enforced here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    mask: Vec<bool>,
}

impl Selection {
    pub fn from_mask(mask: Vec<bool>) -> Self {
        Self { mask }
    }

    /// One flag per input position, in input order.
    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn count_selected(&self) -> u64 {
        self.mask.iter().filter(|&&b| b).count() as u64
    }

    /// Indices of the selected positions, ascending, 0-based.
    pub fn selected_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }
}

/// A membership set over the residues `0..modulus`.
///
/// Bit-packed so that tables for moduli in the millions stay small
/// enough to survive the scattered probing done by
/// [`crate::find_t`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueTable {
    modulus: u64,
    bits: Vec<u64>,
}

impl ResidueTable {
    /// An empty table over `0..modulus`.
    pub fn new(modulus: u64) -> Self {
        Self {
            modulus,
            bits: vec![0; modulus.div_ceil(64) as usize],
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Marks `residue` as a member.
    ///
    /// # Panics
    /// If `residue` is not below the modulus.
    pub fn insert(&mut self, residue: u64) {
        assert!(residue < self.modulus, "residue out of range");
        self.bits[(residue >> 6) as usize] |= 1 << (residue & 63);
    }

    /// Unmarks `residue`.
    ///
    /// # Panics
    /// If `residue` is not below the modulus.
    pub fn remove(&mut self, residue: u64) {
        assert!(residue < self.modulus, "residue out of range");
        self.bits[(residue >> 6) as usize] &= !(1 << (residue & 63));
    }

    /// Whether `residue` is a member; `residue` must be below the
    /// modulus.
    #[inline]
    pub fn contains(&self, residue: u64) -> bool {
        debug_assert!(residue < self.modulus);
        self.bits[(residue >> 6) as usize] >> (residue & 63) & 1 == 1
    }
}

/// A permutation of input positions that orders them by residue while
/// keeping equal residues in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortedView {
    order: Vec<usize>,
}

impl SortedView {
    /// Stable counting sort over the residue classes; `O(len + modulus)`.
    ///
    /// Every residue must be below `modulus`.
    pub fn new(residues: &[u64], modulus: u64) -> Self {
        let mut class_start = vec![0usize; modulus as usize];
        for &r in residues {
            class_start[r as usize] += 1;
        }
        let mut total = 0;
        for slot in class_start.iter_mut() {
            let count = *slot;
            *slot = total;
            total += count;
        }
        let mut order = vec![0usize; residues.len()];
        for (pos, &r) in residues.iter().enumerate() {
            order[class_start[r as usize]] = pos;
            class_start[r as usize] += 1;
        }
        Self { order }
    }

    /// Input positions in residue order; `order()[0]` holds a smallest
    /// residue's position.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn into_order(self) -> Vec<usize> {
        self.order
    }
}
