//! Coefficients of the generating-function denominators.
//!
//! Avoiders are counted by `1 / Σ_k c_k e_k` with the sign pattern of
//! [`denom_coeff`]; the `t`-weighted enumerator has denominator
//! `1 - e_1 - Σ_{k≥r} P_k(t) e_k` with the cluster polynomials of [`p_poly`].

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::tpoly::TPoly;

/// Length `r ≥ 2` of the forbidden increasing run `12…r`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PatternLength(u32);

impl PatternLength {
    pub fn new(r: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidArgument(format!(
                "pattern length must be at least 2, got {r}"
            )));
        }
        Ok(PatternLength(r))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub(crate) fn as_usize(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for PatternLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<u32> for PatternLength {
    type Error = Error;

    fn try_from(r: u32) -> Result<Self> {
        PatternLength::new(r)
    }
}

/// Coefficient of `e_k` in `1 - e_1 + e_r - e_{r+1} + e_{2r} - e_{2r+1} + ...`.
pub fn denom_coeff(k: usize, r: PatternLength) -> i8 {
    let r = r.as_usize();
    match k {
        0 => 1,
        1 => -1,
        _ if k < r => 0,
        _ if k.is_multiple_of(r) => 1,
        _ if k % r == 1 => -1,
        _ => 0,
    }
}

fn p_cache() -> &'static Mutex<HashMap<u32, Vec<TPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<TPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The cluster polynomial `P_k(t)` attached to `e_k` in the weighted
/// denominator: `0` for `k < r`, `t - 1` for `k = r`, and
/// `(t - 1) (P_{k-1} + ... + P_{k-r+1})` beyond.
///
/// Values are cached per `r` for the lifetime of the process.
pub fn p_poly(k: usize, r: PatternLength) -> TPoly {
    let mut cache = p_cache().lock().unwrap_or_else(|e| e.into_inner());
    let seq = cache.entry(r.get()).or_default();
    extend_p_polys(seq, k, r.as_usize());
    seq[k].clone()
}

/// `P_0..=P_k` for one `r`, taken from the shared cache.
pub(crate) fn p_polys_upto(k: usize, r: PatternLength) -> Vec<TPoly> {
    let mut cache = p_cache().lock().unwrap_or_else(|e| e.into_inner());
    let seq = cache.entry(r.get()).or_default();
    extend_p_polys(seq, k, r.as_usize());
    seq[..=k].to_vec()
}

fn extend_p_polys(seq: &mut Vec<TPoly>, k: usize, r: usize) {
    let t_minus_1 = TPoly::t() - TPoly::one();
    while seq.len() <= k {
        let i = seq.len();
        let next = if i < r {
            TPoly::zero()
        } else if i == r {
            t_minus_1.clone()
        } else {
            let mut sum = TPoly::zero();
            for back in 1..r {
                sum += &seq[i - back];
            }
            &t_minus_1 * &sum
        };
        seq.push(next);
    }
}
