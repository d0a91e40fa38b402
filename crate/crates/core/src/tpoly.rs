//! Dense univariate polynomials in `t` over the integers.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The coefficient ring a recurrence runs over: plain integers for
/// avoidance counts, [`TPoly`] for weight enumerators.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One {
    fn add_in_place(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn scale(&self, factor: &BigInt) -> Self;
}

impl Coefficient for BigInt {
    fn add_in_place(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn scale(&self, factor: &BigInt) -> Self {
        self * factor
    }
}

/// A polynomial `c_0 + c_1 t + c_2 t^2 + ...` with exact integer
/// coefficients. Trailing zeros are never stored, so the zero polynomial
/// has an empty coefficient list and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: Vec<BigInt>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn pow(&self, mut exp: u32) -> TPoly {
        let mut base = self.clone();
        let mut acc = TPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Space-separated ascending coefficients; `"0"` for the zero polynomial.
    pub fn to_coeff_string(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Zero for TPoly {
    fn zero() -> Self {
        TPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for TPoly {
    fn one() -> Self {
        TPoly::one()
    }
}

impl Coefficient for TPoly {
    fn add_in_place(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn scale(&self, factor: &BigInt) -> Self {
        if Zero::is_zero(factor) {
            return TPoly::zero();
        }
        TPoly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }
}

impl From<BigInt> for TPoly {
    fn from(c: BigInt) -> Self {
        TPoly::from_coeffs(vec![c])
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly[{}]", self.to_coeff_string())
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if Zero::is_zero(c) {
                continue;
            }
            let negative = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("t")?,
                1 => write!(f, "{mag}t")?,
                _ if unit => write!(f, "t^{i}")?,
                _ => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl Add for &TPoly {
    type Output = TPoly;

    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TPoly {
    type Output = TPoly;

    fn add(mut self, rhs: TPoly) -> TPoly {
        self += &rhs;
        self
    }
}

impl Neg for &TPoly {
    type Output = TPoly;

    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &TPoly {
    type Output = TPoly;

    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += &-rhs;
        out
    }
}

impl Sub for TPoly {
    type Output = TPoly;

    fn sub(self, rhs: TPoly) -> TPoly {
        &self - &rhs
    }
}

impl Mul for &TPoly {
    type Output = TPoly;

    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Mul for TPoly {
    type Output = TPoly;

    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_empty() {
        assert!(TPoly::from_i64s(&[0, 0, 0]).coeffs().is_empty());
        assert_eq!(TPoly::zero().degree(), None);
        assert_eq!(TPoly::zero().to_coeff_string(), "0");
    }

    #[test]
    fn arithmetic_trims() {
        let a = TPoly::from_i64s(&[1, 2, 3]);
        let b = TPoly::from_i64s(&[0, 0, -3]);
        assert_eq!((&a + &b), TPoly::from_i64s(&[1, 2]));
        assert_eq!((&a - &a), TPoly::zero());
        assert_eq!((&a * &TPoly::zero()), TPoly::zero());
    }

    #[test]
    fn square_of_t_minus_one() {
        let tm1 = TPoly::t() - TPoly::one();
        assert_eq!(tm1.pow(2), TPoly::from_i64s(&[1, -2, 1]));
        assert_eq!(tm1.pow(0), TPoly::one());
        assert_eq!(tm1.to_string(), "t - 1");
        assert_eq!(tm1.pow(2).to_string(), "t^2 - 2t + 1");
    }

    #[test]
    fn eval_horner() {
        let p = TPoly::from_i64s(&[1, 11, 11, 1]);
        assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(24));
        assert_eq!(p.eval(&BigInt::from(0)), BigInt::from(1));
        assert_eq!(p.eval(&BigInt::from(-1)), BigInt::from(0));
    }
}
