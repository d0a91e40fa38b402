//! Ground truth by exhaustion: every arrangement of a multiset, and every
//! cluster on an increasing word. Nothing here shares code with the
//! recurrences it is used to check.

use num_bigint::{BigInt, BigUint};

use crate::denominator::{denom_coeff, p_poly, PatternLength};
use crate::multiset::MultiplicityVector;
use crate::report::{Mismatch, VerificationReport};
use crate::tpoly::TPoly;

pub type Word = Vec<u32>;

/// Number of positions `i` with `w[i] < w[i+1] < ... < w[i+r-1]`.
pub fn occurrences(w: &[u32], r: PatternLength) -> usize {
    let r = r.get() as usize;
    if w.len() < r {
        return 0;
    }
    // Length of the strictly increasing run ending at the current letter.
    let mut count = 0;
    let mut run = 1;
    for i in 1..w.len() {
        run = if w[i - 1] < w[i] { run + 1 } else { 1 };
        if run >= r {
            count += 1;
        }
    }
    count
}

/// Lexicographic stream of all distinct arrangements of a multiset.
pub struct MultisetWords {
    next: Option<Word>,
}

impl Iterator for MultisetWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(current)
    }
}

fn next_permutation(w: &mut [u32]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Every word that uses letter `i` exactly `m.parts()[i - 1]` times, each
/// word yielded once, in lexicographic order.
pub fn words_of_multiset(m: &MultiplicityVector) -> MultisetWords {
    let mut first = Vec::with_capacity(m.total() as usize);
    for (i, &p) in m.parts().iter().enumerate() {
        first.extend(std::iter::repeat_n(i as u32 + 1, p as usize));
    }
    MultisetWords { next: Some(first) }
}

/// Arrangements of `m` with no occurrence of `12…r`.
pub fn oracle_count(m: &MultiplicityVector, r: PatternLength) -> BigUint {
    let n = words_of_multiset(m)
        .filter(|w| occurrences(w, r) == 0)
        .count();
    BigUint::from(n)
}

/// `Σ_w t^{occurrences(w)}` over all arrangements of `m`.
pub fn oracle_weight(m: &MultiplicityVector, r: PatternLength) -> TPoly {
    let mut histogram: Vec<u64> = Vec::new();
    for w in words_of_multiset(m) {
        let k = occurrences(&w, r);
        if histogram.len() <= k {
            histogram.resize(k + 1, 0);
        }
        histogram[k] += 1;
    }
    TPoly::from_coeffs(histogram.into_iter().map(BigInt::from).collect())
}

/// A set of marks `[u, u + r - 1]` (1-based, inclusive) on a word of
/// length `len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub len: usize,
    pub starts: Vec<usize>,
}

impl Cluster {
    pub fn marks(&self, r: PatternLength) -> impl Iterator<Item = (usize, usize)> + '_ {
        let r = r.get() as usize;
        self.starts.iter().map(move |&u| (u, u + r - 1))
    }

    /// Marks fit in the word, start strictly increasing, each overlaps the
    /// previous one, and together they cover every position.
    pub fn is_valid(&self, r: PatternLength) -> bool {
        let r = r.get() as usize;
        let Some((&first, &last)) = self.starts.first().zip(self.starts.last()) else {
            return false;
        };
        first == 1
            && last + r - 1 == self.len
            && self
                .starts
                .windows(2)
                .all(|w| w[0] < w[1] && w[1] < w[0] + r)
    }
}

/// All clusters of `12…r` marks on the increasing word `12…k`.
pub fn clusters(k: usize, r: PatternLength) -> Vec<Cluster> {
    let rl = r.get() as usize;
    let mut out = Vec::new();
    if k < rl {
        return out;
    }
    let last_start = k - rl + 1;
    let mut starts = vec![1];
    extend_clusters(&mut starts, last_start, rl, k, &mut out);
    out
}

fn extend_clusters(
    starts: &mut Vec<usize>,
    last_start: usize,
    r: usize,
    k: usize,
    out: &mut Vec<Cluster>,
) {
    let u = *starts.last().expect("at least one mark");
    if u == last_start {
        out.push(Cluster {
            len: k,
            starts: starts.clone(),
        });
        return;
    }
    for next in u + 1..=(u + r - 1).min(last_start) {
        starts.push(next);
        extend_clusters(starts, last_start, r, k, out);
        starts.pop();
    }
}

/// `Σ (t - 1)^{#marks}` over [`clusters`]`(k, r)`: the coefficient of
/// `x_1 x_2 ... x_k` in the weighted cluster generating function.
pub fn oracle_cluster_poly(k: usize, r: PatternLength) -> TPoly {
    let mut by_marks: Vec<u64> = Vec::new();
    for c in clusters(k, r) {
        let j = c.starts.len();
        if by_marks.len() <= j {
            by_marks.resize(j + 1, 0);
        }
        by_marks[j] += 1;
    }
    let t_minus_1 = TPoly::t() - TPoly::one();
    let mut acc = TPoly::zero();
    for (j, &count) in by_marks.iter().enumerate() {
        if count > 0 {
            acc += &(t_minus_1.pow(j as u32) * TPoly::constant(count));
        }
    }
    acc
}

/// Compares [`oracle_cluster_poly`] with [`p_poly`] for `k = 1..=kmax`, and
/// checks that at `t = 0` each value is `-c_k` (zero below `r`).
pub fn verify_clusters(r: PatternLength, kmax: usize) -> VerificationReport {
    let label = format!("cluster r={r} kmax={kmax}");
    let zero = BigInt::from(0);
    for k in 1..=kmax {
        let direct = oracle_cluster_poly(k, r);
        let recurrence = p_poly(k, r);
        let fail = |expected: String, actual: String| VerificationReport {
            label: label.clone(),
            checked: k,
            mismatch: Some(Mismatch {
                location: format!("k={k}"),
                expected,
                actual,
            }),
        };
        if direct != recurrence {
            return fail(recurrence.to_string(), direct.to_string());
        }
        let want_at_zero = if k < r.get() as usize {
            BigInt::from(0)
        } else {
            BigInt::from(-denom_coeff(k, r))
        };
        let at_zero = direct.eval(&zero);
        if at_zero != want_at_zero {
            return fail(format!("{want_at_zero} at t=0"), format!("{at_zero} at t=0"));
        }
    }
    VerificationReport {
        label,
        checked: kmax,
        mismatch: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiset::multinomial;

    fn r(v: u32) -> PatternLength {
        PatternLength::new(v).unwrap()
    }

    fn mv(parts: &[u32]) -> MultiplicityVector {
        MultiplicityVector::new(parts)
    }

    #[test]
    fn occurrence_counts() {
        assert_eq!(occurrences(&[8, 3, 1, 4, 5, 6, 1, 7, 8], r(3)), 3);
        assert_eq!(occurrences(&[1, 2, 3, 4], r(3)), 2);
        assert_eq!(occurrences(&[2, 1], r(3)), 0);
        assert_eq!(occurrences(&[], r(2)), 0);
        // Equal neighbours break a run.
        assert_eq!(occurrences(&[1, 2, 2, 3], r(2)), 2);
    }

    #[test]
    fn word_streams() {
        let words: Vec<Word> = words_of_multiset(&mv(&[2, 1])).collect();
        assert_eq!(words, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
        let empty: Vec<Word> = words_of_multiset(&mv(&[])).collect();
        assert_eq!(empty, vec![Vec::<u32>::new()]);
        assert_eq!(words_of_multiset(&mv(&[1, 1, 1])).count(), 6);
        let m = mv(&[3, 2, 2, 1]);
        assert_eq!(BigUint::from(words_of_multiset(&m).count()), multinomial(&m));
    }

    #[test]
    fn oracle_values() {
        assert_eq!(oracle_count(&mv(&[1, 1, 1]), r(3)), BigUint::from(5u32));
        assert_eq!(oracle_count(&mv(&[2, 1]), r(3)), BigUint::from(3u32));
        assert_eq!(oracle_count(&mv(&[1, 1, 1, 1]), r(2)), BigUint::from(1u32));
        assert_eq!(oracle_weight(&mv(&[1, 1, 1]), r(3)), TPoly::from_i64s(&[5, 1]));
        assert_eq!(oracle_weight(&mv(&[2, 1]), r(3)), TPoly::constant(3));
        assert_eq!(oracle_weight(&mv(&[1, 1]), r(2)), TPoly::from_i64s(&[1, 1]));
    }

    #[test]
    fn cluster_polys() {
        let tm1 = TPoly::t() - TPoly::one();
        assert_eq!(oracle_cluster_poly(3, r(3)), tm1);
        assert_eq!(oracle_cluster_poly(4, r(3)), tm1.pow(2));
        assert_eq!(oracle_cluster_poly(2, r(3)), TPoly::zero());
        // Second mark on 123456 under r = 4 starts at 2 or 3.
        let zero = BigInt::from(0);
        let c6 = oracle_cluster_poly(6, r(4)).eval(&zero);
        let c5 = oracle_cluster_poly(5, r(4)).eval(&zero);
        let c4 = oracle_cluster_poly(4, r(4)).eval(&zero);
        assert_eq!(c6, -c5 - c4);
    }

    #[test]
    fn enumerated_clusters_are_valid() {
        for rv in 2..=5 {
            for k in 1..=10 {
                for c in clusters(k, r(rv)) {
                    assert!(c.is_valid(r(rv)), "{c:?}");
                    let covered: usize = c
                        .marks(r(rv))
                        .fold((0, 0), |(cov, end), (a, b)| (cov + b.max(end) - (a - 1).max(end), b.max(end)))
                        .0;
                    assert_eq!(covered, k);
                }
            }
        }
    }

    #[test]
    fn invalid_clusters_rejected() {
        // 145632 marked [1,3],[4,6]: marks do not overlap.
        assert!(!Cluster { len: 6, starts: vec![1, 4] }.is_valid(r(3)));
        assert!(Cluster { len: 6, starts: vec![1, 2, 4] }.is_valid(r(3)));
        assert!(!Cluster { len: 6, starts: vec![] }.is_valid(r(3)));
    }
}
