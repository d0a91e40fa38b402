//! Letter multiplicities: the argument `m` of every counting function.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};

/// How many copies of each letter a word uses, in canonical form: parts
/// sorted non-increasing with zeros removed.
///
/// Every count in this crate is symmetric in the letters, so the canonical
/// form is also the memo key of the recurrences. The empty vector stands for
/// the empty word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiplicityVector {
    parts: Vec<u32>,
}

impl MultiplicityVector {
    /// Canonicalizes non-negative parts. Infallible counterpart of
    /// [`canonicalize`].
    pub fn new(parts: &[u32]) -> Self {
        let mut parts: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        MultiplicityVector { parts }
    }

    /// `n` letters, each used `s` times.
    pub fn uniform(s: u32, n: usize) -> Self {
        Self::new(&vec![s; n])
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        MultiplicityVector { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of distinct letters.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Word length.
    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Groups equal parts: `(multiplicity, how many letters have it)`, in
    /// decreasing multiplicity.
    pub fn classes(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((value, count)) if *value == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Debug for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Removes zeros and sorts the parts into non-increasing order.
pub fn canonicalize(parts: &[i64]) -> Result<MultiplicityVector> {
    let mut out = Vec::with_capacity(parts.len());
    for &p in parts {
        if p < 0 {
            return Err(Error::InvalidArgument(format!(
                "multiplicity {p} is negative"
            )));
        }
        let p = u32::try_from(p)
            .map_err(|_| Error::InvalidArgument(format!("multiplicity {p} is too large")))?;
        out.push(p);
    }
    Ok(MultiplicityVector::new(&out))
}

/// Number of letters grouped by how many copies each has left to place.
///
/// `count(j)` is the number of letters with exactly `j` unplaced copies,
/// for `j = 1..=s`. This is the state of the uniform-multiplicity
/// recurrence; it is a reindexing of a [`MultiplicityVector`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ClassProfile {
    // counts[j - 1] = letters with j copies left.
    counts: Vec<u32>,
}

impl ClassProfile {
    /// `counts[j - 1]` letters have `j` copies left.
    pub fn new(mut counts: Vec<u32>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        ClassProfile { counts }
    }

    /// The profile of `s^n`.
    pub fn uniform(s: u32, n: u32) -> Self {
        let mut counts = vec![0; s as usize];
        if s > 0 {
            counts[s as usize - 1] = n;
        }
        Self::new(counts)
    }

    pub fn count(&self, j: usize) -> u32 {
        j.checked_sub(1)
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Largest remaining multiplicity, 0 for the completed word.
    pub fn max_multiplicity(&self) -> usize {
        self.counts.len()
    }

    pub fn is_complete(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn from_vector(m: &MultiplicityVector) -> Self {
        let mut counts = vec![0; m.parts().first().copied().unwrap_or(0) as usize];
        for &p in m.parts() {
            counts[p as usize - 1] += 1;
        }
        Self::new(counts)
    }

    pub fn to_vector(&self) -> MultiplicityVector {
        let mut parts = Vec::new();
        for j in (1..=self.counts.len()).rev() {
            parts.extend(std::iter::repeat_n(j as u32, self.count(j) as usize));
        }
        MultiplicityVector::from_sorted_unchecked(parts)
    }
}

/// `(Σ m_i)! / Π m_i!`, the number of distinct arrangements of the multiset.
pub fn multinomial(m: &MultiplicityVector) -> BigUint {
    // Product of binomials C(m_1 + ... + m_i, m_i) keeps intermediates small.
    let mut acc = BigUint::one();
    let mut running = 0u64;
    for &p in m.parts() {
        running += u64::from(p);
        acc *= binomial_u(running, u64::from(p));
    }
    acc
}

fn binomial_u(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Pascal's triangle grown on demand.
#[derive(Debug, Default, Clone)]
pub(crate) struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub(crate) fn new() -> Self {
        BinomialTable {
            rows: vec![vec![BigInt::one()]],
        }
    }

    pub(crate) fn ensure(&mut self, n: usize) {
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 present");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigInt::one());
            for w in prev.windows(2) {
                row.push(&w[0] + &w[1]);
            }
            row.push(BigInt::one());
            self.rows.push(row);
        }
    }

    /// `C(n, k)`; callers must have called [`ensure`](Self::ensure) for `n`
    /// and guarantee `k <= n`.
    pub(crate) fn get(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(parts: &[u32]) -> MultiplicityVector {
        MultiplicityVector::new(parts)
    }

    #[test]
    fn canonicalize_sorts_and_drops_zeros() {
        assert_eq!(canonicalize(&[1, 2, 0, 1]).unwrap().parts(), &[2, 1, 1]);
        assert!(canonicalize(&[]).unwrap().is_empty());
        assert_eq!(canonicalize(&[3, 3]).unwrap().parts(), &[3, 3]);
        assert_eq!(canonicalize(&[1, 2, 0, 1]).unwrap().total(), 4);
    }

    #[test]
    fn canonicalize_rejects_negative() {
        assert!(matches!(
            canonicalize(&[1, -1]),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(&mv(&[2, 1])), BigUint::from(3u32));
        assert_eq!(multinomial(&mv(&[])), BigUint::from(1u32));
        // 6! / (2! 2! 2!) = 720 / 8
        assert_eq!(multinomial(&mv(&[2, 2, 2])), BigUint::from(720u32 / 8));
    }

    #[test]
    fn classes_group_equal_parts() {
        assert_eq!(mv(&[1, 3, 3, 1, 2]).classes(), vec![(3, 2), (2, 1), (1, 2)]);
        assert!(mv(&[]).classes().is_empty());
    }

    #[test]
    fn profile_roundtrip() {
        let m = mv(&[3, 1, 1, 2, 3]);
        let p = ClassProfile::from_vector(&m);
        assert_eq!(p.count(3), 2);
        assert_eq!(p.count(2), 1);
        assert_eq!(p.count(1), 2);
        assert_eq!(p.count(4), 0);
        assert_eq!(p.to_vector(), m);
        assert!(ClassProfile::new(vec![0, 0]).is_complete());
        assert_eq!(ClassProfile::uniform(2, 5).to_vector(), MultiplicityVector::uniform(2, 5));
    }

    #[test]
    fn pascal_rows() {
        let mut t = BinomialTable::new();
        t.ensure(10);
        assert_eq!(t.get(10, 3), &BigInt::from(120));
        assert_eq!(t.get(0, 0), &BigInt::from(1));
    }
}
