//! Avoidance counts `f_r(m)` and weight enumerators `g_r(m; t)` for an
//! arbitrary multiplicity vector.
//!
//! Both satisfy a recurrence of the form
//!
//! ```text
//! h(m) = Σ_{k ≥ 1} w_k Σ_{v ∈ V_k} h(m - v),        h(()) = 1
//! ```
//!
//! where `V_k` is the set of 0-1 vectors with `k` ones, i.e. the ways to pick
//! `k` distinct letters and strip one copy from each. For avoidance
//! `w_k = -c_k` (see [`denom_coeff`]); for the weight enumerator `w_1 = 1`
//! and `w_k = P_k(t)` for `k ≥ r`.
//!
//! Because `h` is symmetric, the letters picked within one class of equal
//! multiplicities are interchangeable: picking `i` of the `c` letters with
//! multiplicity `j` contributes a factor `C(c, i)` and turns them into
//! letters of multiplicity `j - 1`. The memo key is the canonical vector.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};

use crate::denominator::{denom_coeff, p_polys_upto, PatternLength};
use crate::multiset::{BinomialTable, MultiplicityVector};
use crate::tpoly::{Coefficient, TPoly};

/// Memoized evaluator of one recurrence for a fixed pattern length. Reusing
/// an `Enumerator` across calls shares the memo.
pub struct Enumerator<T> {
    r: PatternLength,
    weight_source: fn(usize, PatternLength) -> Vec<T>,
    weights: Vec<T>,
    memo: HashMap<MultiplicityVector, T>,
    binom: BinomialTable,
}

fn avoidance_weights(k_max: usize, r: PatternLength) -> Vec<BigInt> {
    (0..=k_max)
        .map(|k| if k == 0 { BigInt::from(0) } else { BigInt::from(-denom_coeff(k, r)) })
        .collect()
}

fn occurrence_weights(k_max: usize, r: PatternLength) -> Vec<TPoly> {
    let p = p_polys_upto(k_max, r);
    (0..=k_max)
        .map(|k| match k {
            0 => TPoly::zero(),
            1 => TPoly::one(),
            _ => p[k].clone(),
        })
        .collect()
}

impl Enumerator<BigInt> {
    /// Counts arrangements avoiding `12…r`.
    pub fn avoiders(r: PatternLength) -> Self {
        Self::with_weights(r, avoidance_weights)
    }
}

impl Enumerator<TPoly> {
    /// Weight enumerator by number of occurrences of `12…r`.
    pub fn occurrences(r: PatternLength) -> Self {
        Self::with_weights(r, occurrence_weights)
    }
}

impl<T: Coefficient> Enumerator<T> {
    fn with_weights(r: PatternLength, weight_source: fn(usize, PatternLength) -> Vec<T>) -> Self {
        Enumerator {
            r,
            weight_source,
            weights: Vec::new(),
            memo: HashMap::new(),
            binom: BinomialTable::new(),
        }
    }

    pub fn pattern_length(&self) -> PatternLength {
        self.r
    }

    /// Number of memoized states.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn eval(&mut self, m: &MultiplicityVector) -> T {
        if m.is_empty() {
            return T::one();
        }
        if let Some(v) = self.memo.get(m) {
            return v.clone();
        }
        if self.weights.len() <= m.len() {
            self.weights = (self.weight_source)(m.len(), self.r);
        }

        let classes = m.classes();
        let max_class = classes.iter().map(|&(_, c)| c).max().unwrap_or(0);
        self.binom.ensure(max_class);

        // Sum over V_k grouped by k, multiplied by w_k at the end.
        let mut by_k: Vec<T> = vec![T::zero(); m.len() + 1];
        let mut picks = vec![0usize; classes.len()];
        let mut child = Vec::with_capacity(m.len());
        loop {
            // Odometer increment over picks[c] in 0..=class size.
            let mut pos = 0;
            while pos < picks.len() {
                if picks[pos] < classes[pos].1 {
                    picks[pos] += 1;
                    break;
                }
                picks[pos] = 0;
                pos += 1;
            }
            if pos == picks.len() {
                break;
            }

            let k: usize = picks.iter().sum();
            if self.weights[k].is_zero() {
                continue;
            }

            child.clear();
            let mut factor = BigInt::from(1);
            for (&(value, count), &i) in classes.iter().zip(&picks) {
                child.extend(std::iter::repeat_n(value, count - i));
                if value > 1 {
                    child.extend(std::iter::repeat_n(value - 1, i));
                }
                if i > 0 && i < count {
                    factor *= self.binom.get(count, i);
                }
            }
            let sub = self.eval(&MultiplicityVector::from_sorted_unchecked(child.clone()));
            by_k[k].add_in_place(&sub.scale(&factor));
        }

        let mut total = T::zero();
        for (k, partial) in by_k.iter().enumerate() {
            if !partial.is_zero() {
                total.add_in_place(&self.weights[k].mul_ref(partial));
            }
        }
        self.memo.insert(m.clone(), total.clone());
        total
    }
}

/// `f_r(m)`: arrangements of the multiset `m` with no `r` consecutive
/// strictly increasing letters.
pub fn count_avoiders(m: &MultiplicityVector, r: PatternLength) -> BigUint {
    let v = Enumerator::avoiders(r).eval(m);
    v.to_biguint().expect("avoider counts are non-negative")
}

/// `g_r(m; t) = Σ_w t^{occurrences of 12…r in w}` over all arrangements.
pub fn weight_enumerator(m: &MultiplicityVector, r: PatternLength) -> TPoly {
    Enumerator::occurrences(r).eval(m)
}
