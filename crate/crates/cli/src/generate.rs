//! Reproducible instance generation.
//!
//! Values come from a SplitMix64 stream, so a given `(n, seed,
//! distribution)` triple prints the same instance on every platform and
//! toolchain release.

use clap::ValueEnum;

/// SplitMix64: 64 bits of state, one output per step.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Draw from `[0, bound)`; the modulo bias is below `2^-32` for the
    /// bounds used here.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Instance value distributions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Distribution {
    /// Independent uniform residues.
    Uniform,
    /// One residue repeated at least n times, rest uniform.
    AdversarialEqual,
    /// Residues 0 and 1 only.
    TwoClass,
}

/// The `2n - 1` values of the instance `(n, seed, dist)`.
pub fn instance_values(n: u64, seed: u64, dist: Distribution) -> Vec<u64> {
    let len = (2 * n - 1) as usize;
    let mut rng = SplitMix64::new(seed);
    let mut values = Vec::with_capacity(len);
    match dist {
        Distribution::Uniform => {
            values.extend((0..len).map(|_| rng.below(n)));
        }
        Distribution::AdversarialEqual => {
            let repeated = rng.below(n);
            let copies = (n + rng.below(n)) as usize;
            values.extend(std::iter::repeat(repeated).take(copies));
            values.extend((copies..len).map(|_| rng.below(n)));
        }
        Distribution::TwoClass => {
            let classes = n.min(2);
            values.extend((0..len).map(|_| rng.below(classes)));
        }
    }
    values
}

/// Uniform instance solved by bench trial `trial`; trial 0 is the
/// warmup instance.
pub fn bench_instance(n: u64, trial: u32) -> Vec<i64> {
    instance_values(n, bench_seed(n, trial), Distribution::Uniform)
        .into_iter()
        .map(|v| v as i64)
        .collect()
}

/// Per-trial seed: a fixed scramble of `(n, trial)` so trials differ
/// but reruns are identical.
pub fn bench_seed(n: u64, trial: u32) -> u64 {
    SplitMix64::new(n ^ (trial as u64).wrapping_mul(0xA076_1D64_78BD_642F)).next_u64()
}
