//! Exact arithmetic from first principles.
//!
//! The crate builds a number tower with no floating point anywhere:
//!
//! * [`naturals`] — arbitrary-precision naturals, the ground level.
//! * [`completion`] — group completion of a commutative cancellation
//!   semigroup by pairs-up-to-congruence; instantiated three times to
//!   construct the integers, the positive rationals, and the signed
//!   rationals, together with a sampling law harness.
//! * [`anthyphairesis`] — reciprocal subtraction: traced gcd, continued
//!   fractions, quadratic-surd periodicity, convergents.
//! * [`parity`] — Pythagorean triples, parity lemmas, the side/diagonal
//!   descent, and pebble-figure renders.
//! * [`interval`] — closed rational intervals with outward rounding and
//!   a directed integer-square-root based `sqrt`.
//! * [`exhaustion`] — two-sided polygon bounds for π, circle-area
//!   ratios, the geometric-series table, a ruler-and-compass product,
//!   and the square-root spiral.
//! * [`reals`] — constructive reals as precision-indexed interval
//!   streams with semidecidable comparison.
//!
//! Every number produced here is either an exact rational or a pair of
//! exact rationals bracketing the intended value from both sides.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod anthyphairesis;
pub mod completion;
mod error;
pub mod exhaustion;
pub mod interval;
pub mod naturals;
pub mod parity;
pub mod reals;

pub use completion::{CanonInt, CanonRat, Sign};
pub use error::{Error, Result};
pub use interval::RationalInterval;
pub use naturals::Natural;
pub use reals::RealStream;
