//! Truncated multivariate power series, used to expand the denominators
//! directly and compare every coefficient with the recurrences, plus an
//! exact check of the exponential generating function for permutations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::avoid::Enumerator;
use crate::denominator::{denom_coeff, p_polys_upto, PatternLength};
use crate::error::{Error, Result};
use crate::multiset::MultiplicityVector;
use crate::permutations::permutation_counts;
use crate::report::{Mismatch, VerificationReport};
use crate::tpoly::{Coefficient, TPoly};

/// A polynomial in `x_1..x_nvars` with every term of total degree at most
/// `cap`. Terms beyond the cap are dropped by every operation.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C> {
    nvars: usize,
    cap: u32,
    terms: BTreeMap<Vec<u32>, C>,
}

fn degree(exps: &[u32]) -> u32 {
    exps.iter().sum()
}

impl<C: Coefficient> TruncatedSeries<C> {
    pub fn zero(nvars: usize, cap: u32) -> Self {
        TruncatedSeries {
            nvars,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, cap: u32) -> Self {
        let mut s = Self::zero(nvars, cap);
        s.add_term(vec![0; nvars], C::one());
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Nonzero terms in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &C)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c · x^exps`; silently ignored above the cap.
    pub fn add_term(&mut self, exps: Vec<u32>, c: C) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if degree(&exps) > self.cap || c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                existing.add_in_place(&c);
                if existing.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_shape(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_shape(other);
        let mut out = Self::zero(self.nvars, self.cap);
        for (ea, ca) in &self.terms {
            let da = degree(ea);
            for (eb, cb) in &other.terms {
                if da + degree(eb) > self.cap {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul_ref(cb));
            }
        }
        out
    }

    fn check_shape(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "series over different variable sets");
        assert_eq!(self.cap, other.cap, "series with different degree caps");
    }
}

/// `e_k(x_1..x_nvars)` truncated at total degree `cap`; zero when
/// `k > nvars` or `k > cap`.
pub fn elementary_symmetric<C: Coefficient>(nvars: usize, k: usize, cap: u32) -> TruncatedSeries<C> {
    let mut out = TruncatedSeries::zero(nvars, cap);
    if k > nvars || k as u64 > u64::from(cap) {
        return out;
    }
    // Walk k-subsets of 0..nvars in lexicographic order.
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut e = vec![0u32; nvars];
        for &i in &idx {
            e[i] = 1;
        }
        out.add_term(e, C::one());
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] < nvars - k + pos {
                idx[pos] += 1;
                for q in pos + 1..k {
                    idx[q] = idx[q - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `Σ_k c_k e_k` with the signs of [`denom_coeff`].
pub fn avoidance_denominator(nvars: usize, r: PatternLength, cap: u32) -> TruncatedSeries<BigInt> {
    let mut den = TruncatedSeries::zero(nvars, cap);
    for k in 0..=nvars.min(cap as usize) {
        let c = denom_coeff(k, r);
        if c != 0 {
            let ek = elementary_symmetric::<BigInt>(nvars, k, cap);
            for (e, _) in ek.terms() {
                den.add_term(e.to_vec(), BigInt::from(c));
            }
        }
    }
    den
}

/// `1 - e_1 - Σ_{k≥r} P_k(t) e_k`.
pub fn weighted_denominator(nvars: usize, r: PatternLength, cap: u32) -> TruncatedSeries<TPoly> {
    let top = nvars.min(cap as usize);
    let p = p_polys_upto(top.max(1), r);
    let mut den = TruncatedSeries::zero(nvars, cap);
    for (k, pk) in p.iter().enumerate().take(top + 1) {
        let c = match k {
            0 => TPoly::one(),
            1 => TPoly::constant(-1),
            _ => pk.scale(&BigInt::from(-1)),
        };
        if c.is_zero() {
            continue;
        }
        let ek = elementary_symmetric::<BigInt>(nvars, k, cap);
        for (e, _) in ek.terms() {
            den.add_term(e.to_vec(), c.clone());
        }
    }
    den
}

/// `1 / den` up to the cap, solved degree by degree:
/// `S_d = -Σ_{j=1..d} den_j S_{d-j}`.
pub fn expand_reciprocal<C: Coefficient>(den: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    let nvars = den.nvars();
    let cap = den.cap();
    if den.coeff(&vec![0; nvars]) != C::one() {
        return Err(Error::InvalidArgument(
            "reciprocal needs a constant term of exactly 1".into(),
        ));
    }
    let minus_one = BigInt::from(-1);
    let mut den_by_degree: Vec<Vec<(&[u32], &C)>> = vec![Vec::new(); cap as usize + 1];
    for (e, c) in den.terms() {
        den_by_degree[degree(e) as usize].push((e, c));
    }

    let mut by_degree: Vec<BTreeMap<Vec<u32>, C>> = vec![BTreeMap::new(); cap as usize + 1];
    by_degree[0].insert(vec![0; nvars], C::one());
    for d in 1..=cap as usize {
        let mut level: BTreeMap<Vec<u32>, C> = BTreeMap::new();
        for j in 1..=d {
            for &(de, dc) in &den_by_degree[j] {
                for (se, sc) in &by_degree[d - j] {
                    let e: Vec<u32> = de.iter().zip(se).map(|(a, b)| a + b).collect();
                    let term = dc.mul_ref(sc).scale(&minus_one);
                    level
                        .entry(e)
                        .and_modify(|v| v.add_in_place(&term))
                        .or_insert(term);
                }
            }
        }
        level.retain(|_, v| !v.is_zero());
        by_degree[d] = level;
    }

    let mut out = TruncatedSeries::zero(nvars, cap);
    for level in by_degree {
        for (e, c) in level {
            out.add_term(e, c);
        }
    }
    Ok(out)
}

/// All exponent vectors of length `nvars` with total degree at most `cap`.
pub fn exponent_vectors(nvars: usize, cap: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, left: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=budget {
            prefix.push(v);
            rec(prefix, left - 1, budget - v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(nvars), nvars, cap, &mut out);
    out
}

/// Expands the reciprocal of the avoidance denominator (or the weighted
/// one) over `nvars` variables and compares every coefficient of total
/// degree `≤ cap` with the recurrence value at that multiplicity vector.
pub fn verify_against_recurrence(
    nvars: usize,
    r: PatternLength,
    cap: u32,
    weighted: bool,
) -> Result<VerificationReport> {
    let label = format!(
        "{} series nvars={nvars} r={r} degree={cap}",
        if weighted { "weighted" } else { "unweighted" }
    );
    if weighted {
        let series = expand_reciprocal(&weighted_denominator(nvars, r, cap))?;
        let mut rec = Enumerator::occurrences(r);
        Ok(compare_coefficients(label, &series, |m| rec.eval(m)))
    } else {
        let series = expand_reciprocal(&avoidance_denominator(nvars, r, cap))?;
        let mut rec = Enumerator::avoiders(r);
        Ok(compare_coefficients(label, &series, |m| rec.eval(m)))
    }
}

fn compare_coefficients<C: Coefficient + std::fmt::Display>(
    label: String,
    series: &TruncatedSeries<C>,
    mut expected: impl FnMut(&MultiplicityVector) -> C,
) -> VerificationReport {
    let mut checked = 0;
    for e in exponent_vectors(series.nvars(), series.cap()) {
        let want = expected(&MultiplicityVector::new(&e));
        let got = series.coeff(&e);
        checked += 1;
        if want != got {
            return VerificationReport {
                label,
                checked,
                mismatch: Some(Mismatch {
                    location: format!("{e:?}"),
                    expected: want.to_string(),
                    actual: got.to_string(),
                }),
            };
        }
    }
    VerificationReport {
        label,
        checked,
        mismatch: None,
    }
}

/// Multiplies `Σ_{n≤N} a_r(n) x^n / n!` by `Σ_k c_k x^k / k!` in exact
/// rationals and checks the product is `1 + O(x^{N+1})`.
pub fn egf_check(r: PatternLength, nmax: usize) -> VerificationReport {
    let label = format!("egf r={r} nmax={nmax}");
    let counts = permutation_counts(nmax, r);
    let mut factorials = vec![BigInt::one()];
    for i in 1..=nmax {
        let next = &factorials[i - 1] * BigInt::from(i);
        factorials.push(next);
    }
    let series: Vec<BigRational> = counts
        .iter()
        .zip(&factorials)
        .map(|(a, f)| BigRational::new(BigInt::from(a.clone()), f.clone()))
        .collect();
    let den: Vec<BigRational> = (0..=nmax)
        .map(|k| BigRational::new(BigInt::from(denom_coeff(k, r)), factorials[k].clone()))
        .collect();

    for n in 0..=nmax {
        let mut acc = BigRational::zero();
        for k in 0..=n {
            acc += &series[n - k] * &den[k];
        }
        let want = if n == 0 { BigRational::one() } else { BigRational::zero() };
        if acc != want {
            return VerificationReport {
                label,
                checked: n + 1,
                mismatch: Some(Mismatch {
                    location: format!("x^{n}"),
                    expected: want.to_string(),
                    actual: acc.to_string(),
                }),
            };
        }
    }
    VerificationReport {
        label,
        checked: nmax + 1,
        mismatch: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: u32) -> PatternLength {
        PatternLength::new(v).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn elementary_symmetric_terms() {
        let e1 = elementary_symmetric::<BigInt>(3, 1, 5);
        let exps: Vec<&[u32]> = e1.terms().map(|(e, _)| e).collect();
        assert_eq!(exps.len(), 3);
        assert!(exps.contains(&&[1, 0, 0][..]));
        let e3 = elementary_symmetric::<BigInt>(3, 3, 5);
        assert_eq!(e3.len(), 1);
        assert_eq!(e3.coeff(&[1, 1, 1]), big(1));
        assert_eq!(elementary_symmetric::<BigInt>(4, 2, 5).len(), 6);
        assert!(elementary_symmetric::<BigInt>(3, 4, 5).is_empty());
        assert!(elementary_symmetric::<BigInt>(4, 3, 2).is_empty());
        assert_eq!(elementary_symmetric::<BigInt>(2, 0, 0).len(), 1);
    }

    #[test]
    fn denominators() {
        let d = avoidance_denominator(3, r(3), 3);
        assert_eq!(d.len(), 5);
        assert_eq!(d.coeff(&[0, 0, 0]), big(1));
        assert_eq!(d.coeff(&[0, 1, 0]), big(-1));
        assert_eq!(d.coeff(&[1, 1, 1]), big(1));

        let d4 = avoidance_denominator(4, r(3), 4);
        assert_eq!(d4.coeff(&[1, 1, 1, 0]), big(1));
        assert_eq!(d4.coeff(&[1, 1, 1, 1]), big(-1));
        assert_eq!(d4.coeff(&[1, 1, 0, 0]), big(0));
        assert_eq!(d4.len(), 1 + 4 + 4 + 1);

        let d2 = avoidance_denominator(2, r(3), 2);
        assert_eq!(d2.len(), 3);
    }

    #[test]
    fn geometric_series() {
        let mut den = TruncatedSeries::<BigInt>::one(1, 3);
        den.add_term(vec![1], big(-1));
        let inv = expand_reciprocal(&den).unwrap();
        for j in 0..=3 {
            assert_eq!(inv.coeff(&[j]), big(1));
        }
        assert_eq!(inv.len(), 4);
    }

    #[test]
    fn reciprocal_needs_unit_constant() {
        let mut den = TruncatedSeries::<BigInt>::zero(1, 3);
        den.add_term(vec![0], big(2));
        assert!(matches!(expand_reciprocal(&den), Err(Error::InvalidArgument(_))));
        assert!(expand_reciprocal(&TruncatedSeries::<BigInt>::zero(2, 3)).is_err());
    }

    #[test]
    fn reciprocal_coefficients() {
        let inv = expand_reciprocal(&avoidance_denominator(3, r(3), 6)).unwrap();
        assert_eq!(inv.coeff(&[1, 1, 1]), big(5));
        assert_eq!(inv.coeff(&[1, 0, 0]), big(1));
        let back = inv.mul(&avoidance_denominator(3, r(3), 6));
        assert_eq!(back, TruncatedSeries::one(3, 6));
    }

    #[test]
    fn verify_small_cases() {
        assert!(verify_against_recurrence(3, r(3), 6, false).unwrap().passed());
        assert!(verify_against_recurrence(4, r(3), 6, true).unwrap().passed());
        let one_var = verify_against_recurrence(1, r(2), 5, false).unwrap();
        assert!(one_var.passed());
        assert_eq!(one_var.checked, 6);
        let inv = expand_reciprocal(&avoidance_denominator(1, r(2), 5)).unwrap();
        for j in 0..=5 {
            assert_eq!(inv.coeff(&[j]), big(1));
        }
    }

    #[test]
    fn egf_small_cases() {
        assert!(egf_check(r(3), 12).passed());
        assert!(egf_check(r(2), 10).passed());
        assert!(egf_check(r(9), 8).passed());
    }

    #[test]
    fn exponent_vector_count() {
        // C(nvars + cap, cap)
        assert_eq!(exponent_vectors(3, 4).len(), 35);
        assert_eq!(exponent_vectors(1, 0), vec![vec![0]]);
    }
}
