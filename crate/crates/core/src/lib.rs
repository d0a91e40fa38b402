//! Exact enumeration of words over `{1..n}` with prescribed letter
//! multiplicities that avoid, or contain a given number of, the increasing
//! consecutive pattern `12…r`.
//!
//! The counting side is built on the symmetric-function denominator
//!
//! ```text
//! F_r = 1 / (1 - e_1 + e_r - e_{r+1} + e_{2r} - e_{2r+1} + ...)
//! ```
//!
//! and its `t`-weighted refinement, turned into memoized recurrences:
//!
//! * [`avoid`]: avoidance counts `f_r(m)` and weight enumerators `g_r(m; t)`
//!   for an arbitrary multiplicity vector,
//! * [`permutations`]: the fast recurrence for permutations (`m = 1^n`),
//! * [`uniform`]: the class-profile recurrence for `m = s^n`, polynomial in
//!   `n` for every fixed `s`.
//!
//! [`oracle`] and [`series`] are independent checks (exhaustive enumeration,
//! direct cluster enumeration, truncated series expansion, EGF product) and
//! [`oeis`] compares computed sequences with OEIS b-files.

pub mod avoid;
pub mod denominator;
pub mod error;
pub mod multiset;
pub mod oeis;
pub mod oracle;
pub mod permutations;
pub mod report;
pub mod series;
pub mod tpoly;
pub mod uniform;

pub use avoid::{count_avoiders, weight_enumerator, Enumerator};
pub use denominator::{denom_coeff, p_poly, PatternLength};
pub use error::{Error, Result};
pub use multiset::{canonicalize, multinomial, ClassProfile, MultiplicityVector};
pub use permutations::count_permutations;
pub use report::{Mismatch, VerificationReport};
pub use tpoly::{Coefficient, TPoly};
pub use uniform::{count_uniform, weight_uniform, UniformEnumerator};
