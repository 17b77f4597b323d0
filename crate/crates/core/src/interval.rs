//! Closed intervals with exact rational endpoints.
//!
//! Everything downstream that cannot be an exact rational is a pair of
//! rationals provably straddling the intended value. The operations
//! here keep that promise under arithmetic: endpoints are combined so
//! the result interval contains every product, sum, root, or mean of
//! members of the inputs. Rounding, where unavoidable, is always
//! outward and always to dyadic rationals, so precision is spent
//! shrinking the gap and never on a one-sided guess.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::completion::{CanonInt, CanonRat};
use crate::error::{Error, Result};
use crate::naturals::Natural;

/// A closed interval `[lo, hi]`, `lo <= hi`, both exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalInterval {
    lo: CanonRat,
    hi: CanonRat,
}

impl RationalInterval {
    /// The interval `[lo, hi]`.
    ///
    /// # Panics
    ///
    /// Panics when `lo > hi`; the callers that could produce a crossed
    /// pair check order first and treat it as a precision failure.
    pub fn new(lo: CanonRat, hi: CanonRat) -> RationalInterval {
        assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        RationalInterval { lo, hi }
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: CanonRat) -> RationalInterval {
        RationalInterval { lo: x.clone(), hi: x }
    }

    /// Lower endpoint.
    pub fn lo(&self) -> &CanonRat {
        &self.lo
    }

    /// Upper endpoint.
    pub fn hi(&self) -> &CanonRat {
        &self.hi
    }

    /// `hi - lo`.
    pub fn width(&self) -> CanonRat {
        &self.hi - &self.lo
    }

    /// `(lo + hi) / 2`.
    pub fn midpoint(&self) -> CanonRat {
        &(&self.lo + &self.hi) * &CanonRat::ratio(1, 2)
    }

    /// Whether `x` lies in the closed interval.
    pub fn contains(&self, x: &CanonRat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Whether `other` lies entirely inside `self`.
    pub fn encloses(&self, other: &RationalInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Whether the two intervals share at least one point.
    pub fn intersects(&self, other: &RationalInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Multiplies by an exact rational, swapping endpoints when the
    /// factor is negative.
    pub fn scale(&self, factor: &CanonRat) -> RationalInterval {
        let a = &self.lo * factor;
        let b = &self.hi * factor;
        if a <= b {
            RationalInterval { lo: a, hi: b }
        } else {
            RationalInterval { lo: b, hi: a }
        }
    }

    /// Widens both endpoints outward to multiples of `2^-bits`.
    ///
    /// The result encloses `self` and is wider by less than
    /// `2^(1-bits)`.
    pub fn round_out(&self, bits: u32) -> RationalInterval {
        let scale = Natural::pow2(bits);
        let lo = dyadic(self.lo.scaled_floor(&scale), bits);
        let hi = dyadic(self.hi.scaled_ceil(&scale), bits);
        RationalInterval { lo, hi }
    }

    /// Endpoint-wise harmonic mean `2xy/(x+y)`.
    ///
    /// On positive inputs the mean increases in each argument, so
    /// pairing lows with lows and highs with highs yields an interval
    /// containing the mean of any two members. All four endpoints
    /// must be positive.
    pub fn harmonic_mean(&self, other: &RationalInterval) -> Result<RationalInterval> {
        for end in [&self.lo, &other.lo] {
            if !end.is_positive() {
                return Err(Error::NonPositive {
                    what: "harmonic mean endpoint",
                    value: end.to_string(),
                });
            }
        }
        let two = CanonRat::ratio(2, 1);
        let h = |x: &CanonRat, y: &CanonRat| {
            (&(&two * x) * y).div(&(x + y)).expect("positive endpoints")
        };
        Ok(RationalInterval { lo: h(&self.lo, &other.lo), hi: h(&self.hi, &other.hi) })
    }

    /// Square root with outward dyadic rounding at `bits`: lower ends
    /// round down, upper ends round up. The lower endpoint must be
    /// nonnegative.
    pub fn sqrt_outward(&self, bits: u32) -> Result<RationalInterval> {
        Ok(RationalInterval {
            lo: sqrt_lower(&self.lo, bits)?,
            hi: sqrt_upper(&self.hi, bits)?,
        })
    }

    /// The exact range of `x^2` over the interval. Tighter than
    /// multiplying the interval by itself, which treats the factors
    /// as independent and can report negative products.
    pub fn square(&self) -> RationalInterval {
        let lo2 = &self.lo * &self.lo;
        let hi2 = &self.hi * &self.hi;
        if self.contains(&CanonRat::zero()) {
            RationalInterval { lo: CanonRat::zero(), hi: lo2.max(hi2) }
        } else {
            let (lo, hi) = if lo2 <= hi2 { (lo2, hi2) } else { (hi2, lo2) };
            RationalInterval { lo, hi }
        }
    }

    /// `[1/hi, 1/lo]` for an interval strictly on one side of zero.
    pub fn reciprocal(&self) -> Result<RationalInterval> {
        if self.contains(&CanonRat::zero()) {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalInterval { lo: self.hi.inv()?, hi: self.lo.inv()? })
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Add for &RationalInterval {
    type Output = RationalInterval;
    fn add(self, other: &RationalInterval) -> RationalInterval {
        RationalInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }
}

impl Neg for &RationalInterval {
    type Output = RationalInterval;
    fn neg(self) -> RationalInterval {
        RationalInterval { lo: -&self.hi, hi: -&self.lo }
    }
}

impl Sub for &RationalInterval {
    type Output = RationalInterval;
    fn sub(self, other: &RationalInterval) -> RationalInterval {
        self + &-other
    }
}

impl Mul for &RationalInterval {
    type Output = RationalInterval;
    fn mul(self, other: &RationalInterval) -> RationalInterval {
        // Either factor may straddle zero, so take the extremes of
        // all four endpoint products.
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().expect("four products").clone();
        let hi = products.iter().max().expect("four products").clone();
        RationalInterval { lo, hi }
    }
}

fn dyadic(scaled: CanonInt, bits: u32) -> CanonRat {
    CanonRat::new(scaled, Natural::pow2(bits)).expect("power of two denominator")
}

fn check_nonnegative(x: &CanonRat) -> Result<()> {
    if x.is_negative() {
        return Err(Error::NonPositive { what: "square root argument", value: x.to_string() });
    }
    Ok(())
}

/// The largest dyadic rational `r` with denominator `2^(bits+1)`
/// produced by integer square root such that `r^2 <= x`.
pub fn sqrt_lower(x: &CanonRat, bits: u32) -> Result<CanonRat> {
    check_nonnegative(x)?;
    let k = bits + 1;
    // r = isqrt(floor(x * 4^k)) gives r^2 <= x * 4^k.
    let scaled = x.scaled_floor(&Natural::pow2(2 * k)).abs();
    dyadic_root(scaled.isqrt(), k)
}

/// A dyadic rational `r` with denominator `2^(bits+1)` such that
/// `r^2 >= x`, exact when `x` is a dyadic square.
pub fn sqrt_upper(x: &CanonRat, bits: u32) -> Result<CanonRat> {
    check_nonnegative(x)?;
    let k = bits + 1;
    let scale = Natural::pow2(2 * k);
    let ceil = x.scaled_ceil(&scale).abs();
    let r = ceil.isqrt();
    // (r+1)^2 > ceil(x * 4^k) >= x * 4^k, except when x * 4^k is
    // exactly the perfect square r^2; then r itself is the root.
    let exact = &r * &r == ceil && x.scaled_floor(&scale).abs() == ceil;
    let root = if exact { r } else { r + Natural::one() };
    dyadic_root(root, k)
}

/// Two-sided square root: an interval of width at most `2^-bits`
/// whose endpoint squares bracket `x`.
pub fn sqrt_interval(x: &CanonRat, bits: u32) -> Result<RationalInterval> {
    Ok(RationalInterval::new(sqrt_lower(x, bits)?, sqrt_upper(x, bits)?))
}

fn dyadic_root(r: Natural, k: u32) -> Result<CanonRat> {
    CanonRat::new(CanonInt::from_natural(r), Natural::pow2(k))
}
