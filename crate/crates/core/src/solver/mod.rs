//! The fast solver: dispatch on the smallest prime factor, reachable-sum
//! growth for prime moduli, pooled recursion for composite ones.

mod composite;
mod prime;

pub use composite::{egz_composite, egz_composite_traced, CompositeTrace};
pub use prime::{egz_prime, egz_prime_traced, find_t, FindT, GrowthStep, PrimeTrace};

use crate::error::Error;
use crate::modarith;
use crate::types::{Instance, Selection};

/// Finds `n` of the given `2n - 1` values whose sum is divisible by `n`.
///
/// Runs in `O(n log n)` time. The returned selection has exactly `n`
/// positions set, in input order.
pub fn egz(n: u64, values: &[i64]) -> Result<Selection, Error> {
    let instance = Instance::new(n, values)?;
    solve(&instance)
}

pub(crate) fn solve(instance: &Instance) -> Result<Selection, Error> {
    let n = instance.n();
    if n == 1 {
        return Ok(Selection::from_mask(vec![true]));
    }
    let p = modarith::smallest_prime_factor(n)?;
    if p == n {
        prime::solve(instance).map(|(selection, _)| selection)
    } else {
        composite::solve(p, n / p, instance).map(|(selection, _)| selection)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::check_selection;

    #[test]
    fn single_value_is_always_selected() {
        let selection = egz(1, &[41]).unwrap();
        assert_eq!(selection.mask(), &[true]);
    }

    #[test]
    fn dispatches_prime_and_composite() {
        let values = [0, 1, 6, 2, 7, 3, 8, 4, 9];
        assert!(check_selection(5, &values, egz(5, &values).unwrap().mask()).unwrap());

        let zeros = [0i64; 7];
        assert!(check_selection(4, &zeros, egz(4, &zeros).unwrap().mask()).unwrap());
    }

    #[test]
    fn rejects_invalid_input() {
        assert!(egz(0, &[]).is_err());
        assert!(egz(3, &[1, 2]).is_err());
    }
}
