//! Arbitrary-precision natural numbers.
//!
//! [`Natural`] is the ground level of the tower: every other number in
//! this crate reduces to operations defined here. Zero is included.
//! Subtraction is partial (a domain error when the minuend is smaller,
//! never a wrap-around), and `divmod` insists on a nonzero divisor.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An arbitrary-precision natural number (including zero).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    /// The natural 0.
    pub fn zero() -> Natural {
        Natural(BigUint::zero())
    }

    /// The natural 1.
    pub fn one() -> Natural {
        Natural(BigUint::one())
    }

    /// `2^k`.
    pub fn pow2(k: u32) -> Natural {
        Natural(BigUint::one() << k)
    }

    /// `10^k`.
    pub fn pow10(k: u32) -> Natural {
        Natural(BigUint::from(10u32).pow(k))
    }

    /// True when this is 0.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// True when this is 1.
    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// True when divisible by two. Zero counts as even.
    pub fn is_even(&self) -> bool {
        self.0.is_even()
    }

    /// Bit length; 0 for the number 0.
    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    /// `self^exp`.
    pub fn pow(&self, exp: u32) -> Natural {
        Natural(self.0.pow(exp))
    }

    /// Partial subtraction: `self - other`, defined only when
    /// `self >= other`.
    pub fn checked_sub(&self, other: &Natural) -> Result<Natural> {
        if self >= other {
            Ok(Natural(&self.0 - &other.0))
        } else {
            Err(Error::SubtractionUnderflow {
                minuend: self.to_string(),
                subtrahend: other.to_string(),
            })
        }
    }

    /// Euclidean division: returns `(q, r)` with `self = q*d + r` and
    /// `r < d`. The divisor must be nonzero.
    pub fn divmod(&self, d: &Natural) -> Result<(Natural, Natural)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.0.div_rem(&d.0);
        Ok((Natural(q), Natural(r)))
    }

    /// Integer square root: the unique `r` with `r^2 <= self < (r+1)^2`.
    pub fn isqrt(&self) -> Natural {
        Natural(self.0.sqrt())
    }

    /// Halve an even natural exactly.
    pub fn half(&self) -> Result<Natural> {
        if self.is_even() {
            Ok(Natural(&self.0 >> 1))
        } else {
            Err(Error::WrongParity {
                figure: "half",
                expected: "an even",
                n: self.to_string(),
            })
        }
    }

}

impl From<u64> for Natural {
    fn from(n: u64) -> Natural {
        Natural(BigUint::from(n))
    }
}

impl From<u128> for Natural {
    fn from(n: u128) -> Natural {
        Natural(BigUint::from(n))
    }
}

impl TryFrom<&Natural> for u64 {
    type Error = Error;

    fn try_from(n: &Natural) -> Result<u64> {
        u64::try_from(&n.0).map_err(|_| Error::Parse {
            input: n.to_string(),
            reason: "does not fit in 64 bits".into(),
        })
    }
}

impl Add for Natural {
    type Output = Natural;
    fn add(self, rhs: Natural) -> Natural {
        Natural(self.0 + rhs.0)
    }
}

impl Add for &Natural {
    type Output = Natural;
    fn add(self, rhs: &Natural) -> Natural {
        Natural(&self.0 + &rhs.0)
    }
}

impl Mul for Natural {
    type Output = Natural;
    fn mul(self, rhs: Natural) -> Natural {
        Natural(self.0 * rhs.0)
    }
}

impl Mul for &Natural {
    type Output = Natural;
    fn mul(self, rhs: &Natural) -> Natural {
        Natural(&self.0 * &rhs.0)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Natural {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses canonical decimal (no leading zeros except `"0"`) or
/// hexadecimal with a `0x` prefix (no leading zeros except `"0x0"`).
impl FromStr for Natural {
    type Err = Error;

    fn from_str(s: &str) -> Result<Natural> {
        let bad = |reason: &str| Error::Parse {
            input: s.into(),
            reason: reason.into(),
        };
        if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
            if hex.is_empty() {
                return Err(bad("no digits after 0x"));
            }
            if !hex.bytes().all(|b| b.is_ascii_hexdigit()) {
                return Err(bad("invalid hexadecimal digit"));
            }
            if hex.len() > 1 && hex.starts_with('0') {
                return Err(bad("leading zero"));
            }
            let v = BigUint::parse_bytes(hex.as_bytes(), 16).ok_or_else(|| bad("bad hex"))?;
            return Ok(Natural(v));
        }
        if s.is_empty() {
            return Err(bad("empty string"));
        }
        if !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("invalid decimal digit"));
        }
        if s.len() > 1 && s.starts_with('0') {
            return Err(bad("leading zero"));
        }
        let v = BigUint::parse_bytes(s.as_bytes(), 10).ok_or_else(|| bad("bad decimal"))?;
        Ok(Natural(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn n(v: u64) -> Natural {
        Natural::from(v)
    }

    /// Independent route to 2^65: doubling by self-addition only.
    fn doubled_ones(times: u32) -> Natural {
        let mut v = Natural::one();
        for _ in 0..times {
            v = &v + &v;
        }
        v
    }

    /// Schoolbook digit-vector multiplication, little-endian base 10.
    /// Shares no code with the BigUint path.
    fn digit_mul(a: &str, b: &str) -> String {
        let da: Vec<u32> = a.bytes().rev().map(|c| (c - b'0') as u32).collect();
        let db: Vec<u32> = b.bytes().rev().map(|c| (c - b'0') as u32).collect();
        let mut out = vec![0u32; da.len() + db.len()];
        for (i, x) in da.iter().enumerate() {
            let mut carry = 0;
            for (j, y) in db.iter().enumerate() {
                let t = out[i + j] + x * y + carry;
                out[i + j] = t % 10;
                carry = t / 10;
            }
            out[i + db.len()] += carry;
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out.iter().rev().map(|d| char::from(b'0' + *d as u8)).collect()
    }

    #[test]
    fn doubling_oracle_pins_two_to_the_sixty_fifth() {
        // 2^64 + 2^64 frozen from the doubling oracle.
        let expected = "36893488147419103232";
        assert_eq!(doubled_ones(65).to_string(), expected);
        let big = Natural::pow2(64);
        assert_eq!((&big + &big).to_string(), expected);
    }

    #[test]
    fn digit_oracle_pins_square_of_2_32_plus_1() {
        let x = (Natural::pow2(32) + Natural::one()).to_string();
        let expected = "18446744082299486209";
        assert_eq!(digit_mul(&x, &x), expected);
        let x = Natural::pow2(32) + Natural::one();
        assert_eq!((&x * &x).to_string(), expected);
    }

    #[test]
    fn isqrt_on_a_round_power_of_ten() {
        let v = Natural::pow10(18) + Natural::one();
        assert_eq!(v.isqrt(), Natural::pow10(9));
    }

    #[test]
    fn isqrt_bracket_holds_on_a_dense_range() {
        for a in 0u64..=100_000 {
            let a = n(a);
            let r = a.isqrt();
            let r1 = &r + &Natural::one();
            assert!(&r * &r <= a, "isqrt too big at {a}");
            assert!(a < &r1 * &r1, "isqrt too small at {a}");
        }
    }

    #[test]
    fn isqrt_bracket_holds_on_random_256_bit_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..100 {
            let mut bytes = [0u8; 32];
            rng.fill(&mut bytes);
            let a = Natural(BigUint::from_bytes_le(&bytes));
            let r = a.isqrt();
            let r1 = &r + &Natural::one();
            assert!(&r * &r <= a);
            assert!(a < &r1 * &r1);
        }
    }

    #[test]
    fn divmod_reassembles_the_dividend() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10_000 {
            let a = n(rng.gen());
            let d = n(rng.gen_range(1..=u64::MAX));
            let (q, r) = a.divmod(&d).unwrap();
            assert!(r < d);
            assert_eq!(&(&q * &d) + &r, a);
        }
    }

    #[test]
    fn divmod_by_zero_is_a_domain_error() {
        assert_eq!(n(5).divmod(&Natural::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn subtraction_underflow_is_a_domain_error_not_a_wrap() {
        assert_eq!(n(7).checked_sub(&n(7)).unwrap(), Natural::zero());
        let err = n(3).checked_sub(&n(5)).unwrap_err();
        assert_eq!(err.code(), "subtraction-underflow");
    }

    #[test]
    fn sampled_commutativity_and_associativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..1_000 {
            let a = n(rng.gen_range(0..=10_000));
            let b = n(rng.gen_range(0..=10_000));
            let c = n(rng.gen_range(0..=10_000));
            assert_eq!(&a + &b, &b + &a);
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }

    #[test]
    fn parse_accepts_canonical_decimal_and_hex() {
        assert_eq!("0".parse::<Natural>().unwrap(), Natural::zero());
        assert_eq!("136".parse::<Natural>().unwrap(), n(136));
        assert_eq!("0xff".parse::<Natural>().unwrap(), n(255));
        assert_eq!("0xFF".parse::<Natural>().unwrap(), n(255));
        assert_eq!("0x0".parse::<Natural>().unwrap(), Natural::zero());
    }

    #[test]
    fn parse_rejects_noncanonical_forms() {
        for s in ["", "007", "01", "+3", "-3", " 1", "1 ", "1_0", "0x", "0x0f", "0xG", "12a"] {
            assert!(s.parse::<Natural>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn display_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1_000 {
            let a = n(rng.gen());
            assert_eq!(a.to_string().parse::<Natural>().unwrap(), a);
        }
    }
}
