//! Fast recurrence for permutations avoiding `12…r`:
//!
//! ```text
//! a(n) = n a(n-1) - C(n,r) a(n-r) + C(n,r+1) a(n-r-1) - C(n,2r) a(n-2r) + ...
//! ```

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::denominator::{denom_coeff, PatternLength};

fn cache() -> &'static Mutex<HashMap<u32, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `a_r(n)`, the number of permutations of length `n` avoiding `12…r`.
///
/// Every `a_r(0..=n)` is cached per `r` for later calls.
pub fn count_permutations(n: usize, r: PatternLength) -> BigUint {
    permutation_counts(n, r)
        .pop()
        .expect("counts include index n")
}

/// `a_r(0), ..., a_r(n)`.
pub fn permutation_counts(n: usize, r: PatternLength) -> Vec<BigUint> {
    let mut guard = cache().lock().unwrap_or_else(|e| e.into_inner());
    let seq = guard.entry(r.get()).or_insert_with(|| vec![BigInt::one()]);
    while seq.len() <= n {
        let m = seq.len();
        let mut acc = BigInt::zero();
        // binom = C(m, k), advanced incrementally.
        let mut binom = BigInt::one();
        for k in 1..=m {
            binom = binom * (m - k + 1) / k;
            match denom_coeff(k, r) {
                -1 => acc += &binom * &seq[m - k],
                1 => acc -= &binom * &seq[m - k],
                _ => {}
            }
        }
        seq.push(acc);
    }
    seq[..=n]
        .iter()
        .map(|v| v.to_biguint().expect("permutation counts are non-negative"))
        .collect()
}
