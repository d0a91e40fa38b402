//! Words in which every letter appears exactly `s` times.
//!
//! Plugging `s^n` into the fundamental recurrence only ever reaches vectors
//! of the shape `s^{k_s} (s-1)^{k_{s-1}} ... 1^{k_1}`, so the state is the
//! [`ClassProfile`] `(k_s, ..., k_1)`. Picking `i_j` of the `k_j` letters with
//! `j` copies left moves them into class `j - 1`:
//!
//! ```text
//! F(k) = Σ_{i ≤ k, |i| ≥ 1} w_{|i|} Π_j C(k_j, i_j) F(k'),   k'_j = k_j - i_j + i_{j+1}
//! ```
//!
//! There are `O(n^s)` states for `s^n` and the whole table costs
//! `O(n^{s+1})` big-integer operations for fixed `r`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};

use crate::denominator::{denom_coeff, p_polys_upto, PatternLength};
use crate::error::{Error, Result};
use crate::multiset::{BinomialTable, ClassProfile};
use crate::tpoly::{Coefficient, TPoly};

/// Memoized class-profile recurrence for one `(s, r)`.
pub struct UniformEnumerator<T> {
    s: u32,
    r: PatternLength,
    weight_source: fn(usize, PatternLength) -> Vec<T>,
    weights: Vec<T>,
    // Key: counts[j - 1] for j = 1..=s, trailing zeros trimmed.
    memo: HashMap<Vec<u32>, T>,
    binom: BinomialTable,
}

fn signed_weights(k_max: usize, r: PatternLength) -> Vec<BigInt> {
    let mut w = vec![BigInt::from(0); k_max + 1];
    for (k, slot) in w.iter_mut().enumerate().skip(1) {
        *slot = BigInt::from(-denom_coeff(k, r));
    }
    w
}

fn polynomial_weights(k_max: usize, r: PatternLength) -> Vec<TPoly> {
    let mut w = p_polys_upto(k_max, r);
    w[0] = TPoly::zero();
    if k_max >= 1 {
        w[1] = TPoly::one();
    }
    w
}

impl UniformEnumerator<BigInt> {
    pub fn avoiders(s: u32, r: PatternLength) -> Result<Self> {
        Self::build(s, r, signed_weights)
    }
}

impl UniformEnumerator<TPoly> {
    pub fn occurrences(s: u32, r: PatternLength) -> Result<Self> {
        Self::build(s, r, polynomial_weights)
    }
}

impl<T: Coefficient> UniformEnumerator<T> {
    fn build(s: u32, r: PatternLength, weight_source: fn(usize, PatternLength) -> Vec<T>) -> Result<Self> {
        if s < 1 {
            return Err(Error::InvalidArgument(
                "letter multiplicity s must be at least 1".into(),
            ));
        }
        Ok(UniformEnumerator {
            s,
            r,
            weight_source,
            weights: Vec::new(),
            memo: HashMap::new(),
            binom: BinomialTable::new(),
        })
    }

    pub fn multiplicity(&self) -> u32 {
        self.s
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Value for `s^n`.
    pub fn term(&mut self, n: u32) -> T {
        let profile = ClassProfile::uniform(self.s, n);
        self.eval(&profile)
    }

    /// Values for `s^0, s^1, ..., s^nmax`.
    pub fn terms(&mut self, nmax: u32) -> Vec<T> {
        // The largest term reaches most smaller states; compute it first.
        self.term(nmax);
        (0..=nmax).map(|n| self.term(n)).collect()
    }

    /// Value at an arbitrary profile whose multiplicities do not exceed `s`.
    pub fn eval(&mut self, profile: &ClassProfile) -> T {
        assert!(
            profile.max_multiplicity() <= self.s as usize,
            "profile exceeds the enumerator's multiplicity"
        );
        let counts: Vec<u32> = (1..=profile.max_multiplicity()).map(|j| profile.count(j)).collect();
        self.eval_counts(&counts)
    }

    fn eval_counts(&mut self, counts: &[u32]) -> T {
        if counts.is_empty() {
            return T::one();
        }
        if let Some(v) = self.memo.get(counts) {
            return v.clone();
        }
        let active: usize = counts.iter().map(|&c| c as usize).sum();
        if self.weights.len() <= active {
            self.weights = (self.weight_source)(active, self.r);
        }
        let widest = counts.iter().copied().max().unwrap_or(0) as usize;
        self.binom.ensure(widest);

        let depth = counts.len();
        let mut picks = vec![0u32; depth];
        let mut by_k: Vec<T> = vec![T::zero(); active + 1];
        let mut next = vec![0u32; depth];
        loop {
            let mut pos = 0;
            while pos < depth {
                if picks[pos] < counts[pos] {
                    picks[pos] += 1;
                    break;
                }
                picks[pos] = 0;
                pos += 1;
            }
            if pos == depth {
                break;
            }
            let k: usize = picks.iter().map(|&i| i as usize).sum();
            if self.weights[k].is_zero() {
                continue;
            }

            // Index idx holds class j = idx + 1; picked letters drop to class j - 1.
            let mut factor = BigInt::from(1);
            for idx in 0..depth {
                let above = if idx + 1 < depth { picks[idx + 1] } else { 0 };
                next[idx] = counts[idx] - picks[idx] + above;
                let (c, i) = (counts[idx] as usize, picks[idx] as usize);
                if i > 0 && i < c {
                    factor *= self.binom.get(c, i);
                }
            }
            let mut len = depth;
            while len > 0 && next[len - 1] == 0 {
                len -= 1;
            }
            let key = &next[..len];
            let sub = match self.memo.get(key) {
                Some(v) => v.clone(),
                None => {
                    let owned = key.to_vec();
                    self.eval_counts(&owned)
                }
            };
            by_k[k].add_in_place(&sub.scale(&factor));
        }

        let mut total = T::zero();
        for (k, partial) in by_k.iter().enumerate() {
            if !partial.is_zero() {
                total.add_in_place(&self.weights[k].mul_ref(partial));
            }
        }
        self.memo.insert(counts.to_vec(), total.clone());
        total
    }
}

/// `f_r(s^n)`: words using each of `1..=n` exactly `s` times that avoid `12…r`.
pub fn count_uniform(s: u32, n: u32, r: PatternLength) -> Result<BigUint> {
    let v = UniformEnumerator::avoiders(s, r)?.term(n);
    Ok(v.to_biguint().expect("avoider counts are non-negative"))
}

/// `g_r(s^n; t)`.
pub fn weight_uniform(s: u32, n: u32, r: PatternLength) -> Result<TPoly> {
    Ok(UniformEnumerator::occurrences(s, r)?.term(n))
}

/// `f_r(s^0), ..., f_r(s^nmax)` from one shared table.
pub fn uniform_counts(s: u32, nmax: u32, r: PatternLength) -> Result<Vec<BigUint>> {
    Ok(UniformEnumerator::avoiders(s, r)?
        .terms(nmax)
        .into_iter()
        .map(|v| v.to_biguint().expect("avoider counts are non-negative"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::avoid::count_avoiders;
    use crate::multiset::MultiplicityVector;
    use crate::permutations::count_permutations;
    use num_bigint::BigInt;

    fn r(v: u32) -> PatternLength {
        PatternLength::new(v).unwrap()
    }

    #[test]
    fn rejects_zero_multiplicity() {
        assert!(count_uniform(0, 3, r(3)).is_err());
        assert!(weight_uniform(0, 3, r(3)).is_err());
    }

    #[test]
    fn two_letters_cannot_form_triple() {
        assert_eq!(count_uniform(2, 2, r(3)).unwrap(), BigUint::from(6u32));
        assert_eq!(weight_uniform(2, 2, r(3)).unwrap(), TPoly::constant(6));
    }

    #[test]
    fn agrees_with_other_paths() {
        assert_eq!(count_uniform(1, 4, r(3)).unwrap(), BigUint::from(17u32));
        assert_eq!(
            count_uniform(2, 3, r(3)).unwrap(),
            count_avoiders(&MultiplicityVector::uniform(2, 3), r(3))
        );
        assert_eq!(weight_uniform(1, 3, r(3)).unwrap(), TPoly::from_i64s(&[5, 1]));
        for n in 0..=12 {
            assert_eq!(count_uniform(1, n, r(4)).unwrap(), count_permutations(n as usize, r(4)));
        }
    }

    #[test]
    fn weighted_at_zero_is_count() {
        for s in 1..=2 {
            for rv in 2..=3 {
                let mut w = UniformEnumerator::occurrences(s, r(rv)).unwrap();
                let mut c = UniformEnumerator::avoiders(s, r(rv)).unwrap();
                for n in 0..=6 {
                    assert_eq!(w.term(n).eval(&BigInt::from(0)), c.term(n), "s={s} n={n} r={rv}");
                }
            }
        }
    }

    #[test]
    fn mixed_profile_matches_general_engine() {
        let mut e = UniformEnumerator::avoiders(3, r(3)).unwrap();
        let profile = ClassProfile::new(vec![2, 1, 2]);
        let got = e.eval(&profile);
        assert_eq!(got, BigInt::from(count_avoiders(&profile.to_vector(), r(3))));
    }
}
