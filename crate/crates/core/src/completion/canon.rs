//! Canonical signed integers and rationals.
//!
//! [`CanonInt`] is the canonical-form view of an account class (sign
//! plus magnitude); [`CanonRat`] is the canonical-form view of a
//! fraction class extended with sign (reduced numerator over a positive
//! denominator). Reduction goes through the reciprocal-subtraction gcd,
//! the same algorithm the rest of the crate exposes.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::anthyphairesis::gcd_value;
use crate::error::{Error, Result};
use crate::naturals::Natural;

/// Sign of a canonical integer.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sign {
    /// Strictly below zero.
    Negative,
    /// Exactly zero.
    Zero,
    /// Strictly above zero.
    Positive,
}

/// A signed integer in canonical form: a sign and a magnitude, with
/// `sign == Zero` exactly when the magnitude is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonInt {
    sign: Sign,
    magnitude: Natural,
}

impl CanonInt {
    /// Builds from a sign and magnitude, normalizing the zero case.
    pub fn from_parts(sign: Sign, magnitude: Natural) -> CanonInt {
        if magnitude.is_zero() {
            CanonInt { sign: Sign::Zero, magnitude }
        } else if sign == Sign::Zero {
            // A nonzero magnitude with no sign defaults to positive.
            CanonInt { sign: Sign::Positive, magnitude }
        } else {
            CanonInt { sign, magnitude }
        }
    }

    /// Zero.
    pub fn zero() -> CanonInt {
        CanonInt { sign: Sign::Zero, magnitude: Natural::zero() }
    }

    /// One.
    pub fn one() -> CanonInt {
        CanonInt::from_natural(Natural::one())
    }

    /// Embeds a natural as a nonnegative integer.
    pub fn from_natural(n: Natural) -> CanonInt {
        let sign = if n.is_zero() { Sign::Zero } else { Sign::Positive };
        CanonInt { sign, magnitude: n }
    }

    /// The sign.
    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// The magnitude, forgetting the sign.
    pub fn magnitude(&self) -> &Natural {
        &self.magnitude
    }

    /// True when zero.
    pub fn is_zero(&self) -> bool {
        self.sign == Sign::Zero
    }

    /// True when strictly positive.
    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Positive
    }

    /// True when strictly negative.
    pub fn is_negative(&self) -> bool {
        self.sign == Sign::Negative
    }

    /// Absolute value as a natural.
    pub fn abs(&self) -> Natural {
        self.magnitude.clone()
    }
}

impl From<i64> for CanonInt {
    fn from(v: i64) -> CanonInt {
        let sign = match v.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        };
        CanonInt { sign, magnitude: Natural::from(v.unsigned_abs()) }
    }
}

impl Add for &CanonInt {
    type Output = CanonInt;

    fn add(self, rhs: &CanonInt) -> CanonInt {
        match (self.sign, rhs.sign) {
            (Sign::Zero, _) => rhs.clone(),
            (_, Sign::Zero) => self.clone(),
            (a, b) if a == b => CanonInt {
                sign: a,
                magnitude: &self.magnitude + &rhs.magnitude,
            },
            // Opposite signs: the larger magnitude wins.
            (a, _) => match self.magnitude.cmp(&rhs.magnitude) {
                Ordering::Equal => CanonInt::zero(),
                Ordering::Greater => CanonInt::from_parts(
                    a,
                    self.magnitude.checked_sub(&rhs.magnitude).expect("larger minuend"),
                ),
                Ordering::Less => CanonInt::from_parts(
                    rhs.sign,
                    rhs.magnitude.checked_sub(&self.magnitude).expect("larger minuend"),
                ),
            },
        }
    }
}

impl Sub for &CanonInt {
    type Output = CanonInt;
    fn sub(self, rhs: &CanonInt) -> CanonInt {
        self + &(-rhs)
    }
}

impl Mul for &CanonInt {
    type Output = CanonInt;

    fn mul(self, rhs: &CanonInt) -> CanonInt {
        let sign = match (self.sign, rhs.sign) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        };
        CanonInt::from_parts(sign, &self.magnitude * &rhs.magnitude)
    }
}

impl Neg for &CanonInt {
    type Output = CanonInt;

    fn neg(self) -> CanonInt {
        let sign = match self.sign {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        };
        CanonInt { sign, magnitude: self.magnitude.clone() }
    }
}

impl Ord for CanonInt {
    fn cmp(&self, other: &CanonInt) -> Ordering {
        let rank = |s: Sign| match s {
            Sign::Negative => 0,
            Sign::Zero => 1,
            Sign::Positive => 2,
        };
        match rank(self.sign).cmp(&rank(other.sign)) {
            Ordering::Equal => match self.sign {
                Sign::Zero => Ordering::Equal,
                Sign::Positive => self.magnitude.cmp(&other.magnitude),
                Sign::Negative => other.magnitude.cmp(&self.magnitude),
            },
            o => o,
        }
    }
}

impl PartialOrd for CanonInt {
    fn partial_cmp(&self, other: &CanonInt) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CanonInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Negative {
            write!(f, "-")?;
        }
        write!(f, "{}", self.magnitude)
    }
}

impl fmt::Debug for CanonInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for CanonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for CanonInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<CanonInt> {
        if let Some(rest) = s.strip_prefix('-') {
            let mag: Natural = rest.parse()?;
            if mag.is_zero() {
                return Err(Error::Parse {
                    input: s.into(),
                    reason: "zero has no sign".into(),
                });
            }
            Ok(CanonInt::from_parts(Sign::Negative, mag))
        } else {
            Ok(CanonInt::from_natural(s.parse()?))
        }
    }
}

/// A signed rational in canonical form: reduced numerator over a
/// denominator `>= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonRat {
    numerator: CanonInt,
    denominator: Natural,
}

impl CanonRat {
    /// Builds `numerator / denominator`, reducing to lowest terms.
    /// A zero denominator is a domain error.
    pub fn new(numerator: CanonInt, denominator: Natural) -> Result<CanonRat> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numerator.is_zero() {
            return Ok(CanonRat { numerator: CanonInt::zero(), denominator: Natural::one() });
        }
        let g = gcd_value(numerator.magnitude(), &denominator);
        let (num_mag, _) = numerator.magnitude().divmod(&g).expect("gcd is nonzero");
        let (den, _) = denominator.divmod(&g).expect("gcd is nonzero");
        Ok(CanonRat {
            numerator: CanonInt::from_parts(numerator.sign(), num_mag),
            denominator: den,
        })
    }

    /// Zero.
    pub fn zero() -> CanonRat {
        CanonRat { numerator: CanonInt::zero(), denominator: Natural::one() }
    }

    /// One.
    pub fn one() -> CanonRat {
        CanonRat { numerator: CanonInt::one(), denominator: Natural::one() }
    }

    /// Embeds an integer.
    pub fn from_int(n: CanonInt) -> CanonRat {
        CanonRat { numerator: n, denominator: Natural::one() }
    }

    /// Embeds a natural.
    pub fn from_natural(n: Natural) -> CanonRat {
        CanonRat::from_int(CanonInt::from_natural(n))
    }

    /// `2^-k`.
    pub fn pow2_inv(k: u32) -> CanonRat {
        CanonRat { numerator: CanonInt::one(), denominator: Natural::pow2(k) }
    }

    /// Shorthand for small literals: `CanonRat::ratio(-5, 3)` is -5/3.
    pub fn ratio(num: i64, den: u64) -> CanonRat {
        CanonRat::new(CanonInt::from(num), Natural::from(den)).expect("nonzero literal denominator")
    }

    /// The reduced numerator.
    pub fn numerator(&self) -> &CanonInt {
        &self.numerator
    }

    /// The denominator (always `>= 1`).
    pub fn denominator(&self) -> &Natural {
        &self.denominator
    }

    /// True when zero.
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// True when strictly positive.
    pub fn is_positive(&self) -> bool {
        self.numerator.is_positive()
    }

    /// True when strictly negative.
    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }

    /// Sign of the value.
    pub fn sign(&self) -> Sign {
        self.numerator.sign()
    }

    /// Absolute value.
    pub fn abs(&self) -> CanonRat {
        CanonRat {
            numerator: CanonInt::from_natural(self.numerator.abs()),
            denominator: self.denominator.clone(),
        }
    }

    /// Multiplicative inverse; zero is a domain error.
    pub fn inv(&self) -> Result<CanonRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(CanonRat {
            numerator: CanonInt::from_parts(self.numerator.sign(), self.denominator.clone()),
            denominator: self.numerator.abs(),
        })
    }

    /// `self / rhs`; division by zero is a domain error.
    pub fn div(&self, rhs: &CanonRat) -> Result<CanonRat> {
        Ok(self * &rhs.inv()?)
    }

    /// `⌊self⌋` as an integer.
    pub fn floor(&self) -> CanonInt {
        let (q, r) = self
            .numerator
            .magnitude()
            .divmod(&self.denominator)
            .expect("denominator is nonzero");
        match self.numerator.sign() {
            Sign::Zero => CanonInt::zero(),
            Sign::Positive => CanonInt::from_natural(q),
            Sign::Negative => {
                // Round away from zero when the division is inexact.
                let mag = if r.is_zero() { q } else { q + Natural::one() };
                CanonInt::from_parts(Sign::Negative, mag)
            }
        }
    }

    /// `⌈self⌉` as an integer.
    pub fn ceil(&self) -> CanonInt {
        -&(-self).floor()
    }

    /// `⌊self * scale⌋`.
    pub fn scaled_floor(&self, scale: &Natural) -> CanonInt {
        (self * &CanonRat::from_natural(scale.clone())).floor()
    }

    /// `⌈self * scale⌉`.
    pub fn scaled_ceil(&self, scale: &Natural) -> CanonInt {
        (self * &CanonRat::from_natural(scale.clone())).ceil()
    }

    /// Nearest multiple of `1/scale` (half rounds up).
    pub fn scaled_nearest(&self, scale: &Natural) -> CanonInt {
        let shifted = &(self * &CanonRat::from_natural(scale.clone())) + &CanonRat::ratio(1, 2);
        shifted.floor()
    }

    /// Crude upper bound on `log2 |self|`, zero-clamped: the smallest
    /// `s >= 0` with `|self| <= 2^s`. Returns 0 for zero.
    pub fn log2_bound(&self) -> u32 {
        if self.is_zero() {
            return 0;
        }
        let nb = self.numerator.magnitude().bits();
        let db = self.denominator.bits();
        // |n/d| < 2^nb / 2^(db-1), so nb - db + 1 bits always suffice.
        u32::try_from((nb + 1).saturating_sub(db)).expect("bit counts fit")
    }
}

impl Add for &CanonRat {
    type Output = CanonRat;

    fn add(self, rhs: &CanonRat) -> CanonRat {
        let num = &(&self.numerator * &CanonInt::from_natural(rhs.denominator.clone()))
            + &(&rhs.numerator * &CanonInt::from_natural(self.denominator.clone()));
        CanonRat::new(num, &self.denominator * &rhs.denominator).expect("nonzero denominators")
    }
}

impl Sub for &CanonRat {
    type Output = CanonRat;
    fn sub(self, rhs: &CanonRat) -> CanonRat {
        self + &(-rhs)
    }
}

impl Mul for &CanonRat {
    type Output = CanonRat;

    fn mul(self, rhs: &CanonRat) -> CanonRat {
        CanonRat::new(
            &self.numerator * &rhs.numerator,
            &self.denominator * &rhs.denominator,
        )
        .expect("nonzero denominators")
    }
}

impl Neg for &CanonRat {
    type Output = CanonRat;

    fn neg(self) -> CanonRat {
        CanonRat {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }
}

impl Ord for CanonRat {
    fn cmp(&self, other: &CanonRat) -> Ordering {
        // Cross-multiply: n1/d1 <> n2/d2 iff n1*d2 <> n2*d1 (d > 0).
        let lhs = &self.numerator * &CanonInt::from_natural(other.denominator.clone());
        let rhs = &other.numerator * &CanonInt::from_natural(self.denominator.clone());
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for CanonRat {
    fn partial_cmp(&self, other: &CanonRat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CanonRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl fmt::Debug for CanonRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for CanonRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `p/q`, `-p/q`, `n`, or `-n` with canonical natural parts;
/// the result is reduced, so `136/6` parses to `68/3`.
impl FromStr for CanonRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<CanonRat> {
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (num_str, den): (&str, Natural) = match body.split_once('/') {
            Some((n, d)) => (n, d.parse()?),
            None => (body, Natural::one()),
        };
        let num_mag: Natural = num_str.parse()?;
        if neg && num_mag.is_zero() {
            return Err(Error::Parse { input: s.into(), reason: "zero has no sign".into() });
        }
        let sign = if neg { Sign::Negative } else { Sign::Positive };
        CanonRat::new(CanonInt::from_parts(sign, num_mag), den)
    }
}

/// Decimal rendering of `x` rounded toward minus infinity at
/// `digits` fractional places.
pub fn decimal_down(x: &CanonRat, digits: u32) -> String {
    render_scaled(x.scaled_floor(&Natural::pow10(digits)), digits)
}

/// Decimal rendering of `x` rounded toward plus infinity at
/// `digits` fractional places.
pub fn decimal_up(x: &CanonRat, digits: u32) -> String {
    render_scaled(x.scaled_ceil(&Natural::pow10(digits)), digits)
}

/// Decimal rendering of `x` rounded to the nearest multiple of
/// `10^-digits` (half up).
pub fn decimal_nearest(x: &CanonRat, digits: u32) -> String {
    render_scaled(x.scaled_nearest(&Natural::pow10(digits)), digits)
}

fn render_scaled(scaled: CanonInt, digits: u32) -> String {
    let (int, frac) = scaled
        .magnitude()
        .divmod(&Natural::pow10(digits))
        .expect("positive power of ten");
    let sign = if scaled.is_negative() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    let frac = frac.to_string();
    let pad = "0".repeat(digits as usize - frac.len());
    format!("{sign}{int}.{pad}{frac}")
}
