//! Solver timing on deterministic per-trial instances.

use std::time::Instant;

use egz_core::{egz, modarith, oracle};

use crate::generate;

/// One timed solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub n: u64,
    /// `"prime"`, `"power2"`, or `"composite"`.
    pub kind: &'static str,
    /// 1-based trial number.
    pub trial: u32,
    pub elapsed_ns: u128,
}

/// Modulus class reported in bench output. Primes win ties: 2 is
/// `"prime"`, not `"power2"`.
pub fn classify(n: u64) -> &'static str {
    if modarith::is_prime(n) {
        "prime"
    } else if n.is_power_of_two() {
        "power2"
    } else {
        "composite"
    }
}

/// Runs `warmup` untimed solves, then `trials` timed ones, each on the
/// instance derived from `bench_seed(n, trial)`. Only the solve itself
/// is timed; every result is verified afterwards.
pub fn time_solves(n: u64, trials: u32, warmup: u32) -> Result<Vec<BenchRecord>, egz_core::Error> {
    let kind = classify(n);
    let warmup_values = generate::bench_instance(n, 0);
    for _ in 0..warmup {
        egz(n, &warmup_values)?;
    }
    let mut records = Vec::with_capacity(trials as usize);
    for trial in 1..=trials {
        let values = generate::bench_instance(n, trial);
        let start = Instant::now();
        let selection = egz(n, &values)?;
        let elapsed = start.elapsed();
        if !oracle::check_selection(n, &values, selection.mask())? {
            return Err(egz_core::Error::Invariant(
                "bench solve produced an invalid selection",
            ));
        }
        records.push(BenchRecord {
            n,
            kind,
            trial,
            elapsed_ns: elapsed.as_nanos().max(1),
        });
    }
    Ok(records)
}
