//! Group completion of a commutative cancellation semigroup.
//!
//! Given a carrier set with one commutative, associative, cancellative
//! operation, the completion works with ordered pairs `(x, y)` read as
//! "x with y taken away", identified by the congruence
//!
//! ```text
//! (x, y) ~ (u, v)   iff   x o v = y o u
//! ```
//!
//! Pairs combine componentwise, every class `[(x, y)]` has the inverse
//! `[(y, x)]`, any diagonal pair `(x, x)` represents the identity, and
//! `x` embeds as `[(w o x, w)]` for a fixed unit `w`. The result is a
//! commutative group whether or not the carrier had an identity or
//! inverses of its own.
//!
//! Three instantiations drive the rest of the crate:
//!
//! * positive naturals under addition: classes are the integers
//!   ([`CanonInt`] is the canonical view, sign and magnitude);
//! * positive naturals under multiplication: pairs are fractions and
//!   classes are the positive rationals (reduced by the gcd);
//! * positive rationals under addition: classes are the signed
//!   rationals ([`CanonRat`]).
//!
//! Multiplication of account classes and addition of fraction classes
//! are extra structure defined on representatives; the law harness in
//! [`laws`] checks they respect the congruence instead of assuming it.

use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::naturals::Natural;

mod canon;
pub mod laws;

pub use canon::{decimal_down, decimal_nearest, decimal_up, CanonInt, CanonRat, Sign};

/// A carrier set with one binary operation, as the completion needs
/// it: element validity, the operation, an optional identity witness,
/// and enough extra structure to canonicalize pairs and draw samples.
pub trait CcsCarrier {
    /// The element type.
    type Elem: Clone + Eq + fmt::Display + fmt::Debug;

    /// Human-readable name of the structure, e.g. `"(N+, +)"`.
    fn name(&self) -> &'static str;

    /// The operation.
    fn combine(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// The identity element, when the carrier has one.
    fn identity(&self) -> Option<Self::Elem>;

    /// A fixed unit used by the embedding and by canonical forms.
    fn unit(&self) -> Self::Elem;

    /// True when the element belongs to the carrier.
    fn is_valid(&self, a: &Self::Elem) -> bool;

    /// The unique minimal representative of the pair's class.
    fn canonical_pair(&self, p: &CcsPair<Self>) -> CcsPair<Self>
    where
        Self: Sized;

    /// How a pair is written: `9~4` for difference-like carriers,
    /// `9/4` for ratio-like ones.
    fn pair_separator(&self) -> char;

    /// Draws a bounded random element.
    fn sample(&self, rng: &mut ChaCha8Rng, bound: u64) -> Self::Elem;
}

/// An ordered pair over a carrier, read as "first with second taken
/// away" (or "first over second" for ratio-like carriers).
pub struct CcsPair<C: CcsCarrier> {
    /// The positive part.
    pub first: C::Elem,
    /// The part taken away.
    pub second: C::Elem,
}

impl<C: CcsCarrier> CcsPair<C> {
    /// Builds a pair.
    pub fn new(first: C::Elem, second: C::Elem) -> CcsPair<C> {
        CcsPair { first, second }
    }
}

impl<C: CcsCarrier> Clone for CcsPair<C> {
    fn clone(&self) -> Self {
        CcsPair { first: self.first.clone(), second: self.second.clone() }
    }
}

impl<C: CcsCarrier> PartialEq for CcsPair<C> {
    fn eq(&self, other: &Self) -> bool {
        self.first == other.first && self.second == other.second
    }
}

impl<C: CcsCarrier> Eq for CcsPair<C> {}

impl<C: CcsCarrier> fmt::Debug for CcsPair<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.first, self.second)
    }
}

/// The defining congruence: `(x, y) ~ (u, v)` iff `x o v = y o u`.
pub fn pair_congruent<C: CcsCarrier>(c: &C, p: &CcsPair<C>, q: &CcsPair<C>) -> bool {
    c.combine(&p.first, &q.second) == c.combine(&p.second, &q.first)
}

/// Componentwise combination; well-defined on classes.
pub fn pair_combine<C: CcsCarrier>(c: &C, p: &CcsPair<C>, q: &CcsPair<C>) -> CcsPair<C> {
    CcsPair::new(c.combine(&p.first, &q.first), c.combine(&p.second, &q.second))
}

/// A congruence class, stored by its canonical representative.
pub struct CcsClass<C: CcsCarrier> {
    canonical: CcsPair<C>,
}

impl<C: CcsCarrier> Clone for CcsClass<C> {
    fn clone(&self) -> Self {
        CcsClass { canonical: self.canonical.clone() }
    }
}

impl<C: CcsCarrier> PartialEq for CcsClass<C> {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl<C: CcsCarrier> Eq for CcsClass<C> {}

impl<C: CcsCarrier> fmt::Debug for CcsClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}]", self.canonical)
    }
}

impl<C: CcsCarrier> CcsClass<C> {
    /// The class of a pair.
    pub fn of(c: &C, p: &CcsPair<C>) -> CcsClass<C> {
        CcsClass { canonical: c.canonical_pair(p) }
    }

    /// The canonical representative.
    pub fn canonical(&self) -> &CcsPair<C> {
        &self.canonical
    }

    /// True when the pair belongs to this class.
    pub fn contains(&self, c: &C, p: &CcsPair<C>) -> bool {
        pair_congruent(c, &self.canonical, p)
    }

    /// Group operation on classes.
    pub fn combine(&self, c: &C, other: &CcsClass<C>) -> CcsClass<C> {
        CcsClass::of(c, &pair_combine(c, &self.canonical, &other.canonical))
    }

    /// The inverse class: swap the components.
    pub fn inverse(&self, c: &C) -> CcsClass<C> {
        CcsClass::of(
            c,
            &CcsPair::new(self.canonical.second.clone(), self.canonical.first.clone()),
        )
    }
}

/// The identity class `[(w, w)]`.
pub fn identity_class<C: CcsCarrier>(c: &C) -> CcsClass<C> {
    let w = c.unit();
    CcsClass::of(c, &CcsPair::new(w.clone(), w))
}

/// Embeds a carrier element: `x` becomes `[(w o x, w)]`.
pub fn embed<C: CcsCarrier>(c: &C, x: &C::Elem) -> CcsClass<C> {
    let w = c.unit();
    CcsClass::of(c, &CcsPair::new(c.combine(&w, x), w))
}

/// Positive naturals under addition. Pairs over this carrier are
/// accounts (`9~4` reads "9 with 4 taken away") and classes are the
/// integers.
#[derive(Clone, Copy, Debug, Default)]
pub struct AdditiveNaturals;

/// Positive naturals under multiplication. Pairs over this carrier are
/// fractions and classes are the positive rationals.
#[derive(Clone, Copy, Debug, Default)]
pub struct MultiplicativeNaturals;

/// Positive rationals under addition. Pairs over this carrier complete
/// to the signed rationals.
#[derive(Clone, Copy, Debug, Default)]
pub struct AdditiveRationals;

impl CcsCarrier for AdditiveNaturals {
    type Elem = Natural;

    fn name(&self) -> &'static str {
        "(N+, +)"
    }

    fn combine(&self, a: &Natural, b: &Natural) -> Natural {
        a + b
    }

    fn identity(&self) -> Option<Natural> {
        // Zero is excluded from the carrier, so addition has none.
        None
    }

    fn unit(&self) -> Natural {
        Natural::one()
    }

    fn is_valid(&self, a: &Natural) -> bool {
        !a.is_zero()
    }

    fn canonical_pair(&self, p: &CcsPair<Self>) -> CcsPair<Self> {
        let one = Natural::one();
        match p.first.cmp(&p.second) {
            std::cmp::Ordering::Greater => {
                let d = p.first.checked_sub(&p.second).expect("first is larger");
                CcsPair::new(d + one.clone(), one)
            }
            std::cmp::Ordering::Less => {
                let d = p.second.checked_sub(&p.first).expect("second is larger");
                CcsPair::new(one.clone(), d + one)
            }
            std::cmp::Ordering::Equal => CcsPair::new(one.clone(), one),
        }
    }

    fn pair_separator(&self) -> char {
        '~'
    }

    fn sample(&self, rng: &mut ChaCha8Rng, bound: u64) -> Natural {
        Natural::from(rng.gen_range(1..=bound.max(1)))
    }
}

impl CcsCarrier for MultiplicativeNaturals {
    type Elem = Natural;

    fn name(&self) -> &'static str {
        "(N+, x)"
    }

    fn combine(&self, a: &Natural, b: &Natural) -> Natural {
        a * b
    }

    fn identity(&self) -> Option<Natural> {
        Some(Natural::one())
    }

    fn unit(&self) -> Natural {
        Natural::one()
    }

    fn is_valid(&self, a: &Natural) -> bool {
        !a.is_zero()
    }

    fn canonical_pair(&self, p: &CcsPair<Self>) -> CcsPair<Self> {
        let g = crate::anthyphairesis::gcd_value(&p.first, &p.second);
        let (f, _) = p.first.divmod(&g).expect("gcd of positives is positive");
        let (s, _) = p.second.divmod(&g).expect("gcd of positives is positive");
        CcsPair::new(f, s)
    }

    fn pair_separator(&self) -> char {
        '/'
    }

    fn sample(&self, rng: &mut ChaCha8Rng, bound: u64) -> Natural {
        Natural::from(rng.gen_range(1..=bound.max(1)))
    }
}

impl CcsCarrier for AdditiveRationals {
    type Elem = CanonRat;

    fn name(&self) -> &'static str {
        "(Q+, +)"
    }

    fn combine(&self, a: &CanonRat, b: &CanonRat) -> CanonRat {
        a + b
    }

    fn identity(&self) -> Option<CanonRat> {
        None
    }

    fn unit(&self) -> CanonRat {
        CanonRat::one()
    }

    fn is_valid(&self, a: &CanonRat) -> bool {
        a.is_positive()
    }

    fn canonical_pair(&self, p: &CcsPair<Self>) -> CcsPair<Self> {
        let one = CanonRat::one();
        let d = &p.first - &p.second;
        if d.is_positive() {
            CcsPair::new(&d + &one, one)
        } else if d.is_negative() {
            CcsPair::new(one.clone(), &one - &d)
        } else {
            CcsPair::new(one.clone(), one)
        }
    }

    fn pair_separator(&self) -> char {
        '~'
    }

    fn sample(&self, rng: &mut ChaCha8Rng, bound: u64) -> CanonRat {
        let b = bound.max(1);
        CanonRat::ratio(rng.gen_range(1..=b) as i64, rng.gen_range(1..=b))
    }
}

/// An account pair: two positive naturals under addition.
pub type AccountPair = CcsPair<AdditiveNaturals>;

/// A fraction pair: two positive naturals under multiplication.
pub type FractionPair = CcsPair<MultiplicativeNaturals>;

/// Multiplication of accounts on representatives:
/// `(m~n) x (p~q) = (mp + nq) ~ (mq + np)`.
pub fn account_mul(a: &AccountPair, b: &AccountPair) -> AccountPair {
    let (m, n) = (&a.first, &a.second);
    let (p, q) = (&b.first, &b.second);
    CcsPair::new(&(m * p) + &(n * q), &(m * q) + &(n * p))
}

/// Addition of fractions on representatives:
/// `m/n + p/q = (mq + np) / nq`.
pub fn fraction_add(a: &FractionPair, b: &FractionPair) -> FractionPair {
    let (m, n) = (&a.first, &a.second);
    let (p, q) = (&b.first, &b.second);
    CcsPair::new(&(m * q) + &(n * p), n * q)
}

/// The signed integer an account class denotes.
pub fn canonicalize_int(p: &AccountPair) -> CanonInt {
    match p.first.cmp(&p.second) {
        std::cmp::Ordering::Greater => CanonInt::from_natural(
            p.first.checked_sub(&p.second).expect("first is larger"),
        ),
        std::cmp::Ordering::Less => CanonInt::from_parts(
            Sign::Negative,
            p.second.checked_sub(&p.first).expect("second is larger"),
        ),
        std::cmp::Ordering::Equal => CanonInt::zero(),
    }
}

/// The positive rational a fraction class denotes.
///
/// The components must be positive; a zero component is a domain
/// error.
pub fn canonicalize_rat(p: &FractionPair) -> Result<CanonRat> {
    if p.first.is_zero() || p.second.is_zero() {
        return Err(Error::NonPositive {
            what: "fraction component",
            value: "0".into(),
        });
    }
    CanonRat::new(CanonInt::from_natural(p.first.clone()), p.second.clone())
}

/// The signed rational a pair of positive rationals denotes:
/// first minus second.
pub fn rational_value(p: &CcsPair<AdditiveRationals>) -> CanonRat {
    &p.first - &p.second
}

/// Parses an account pair: `9~4` (a tilde for "taken away").
pub fn parse_account(s: &str) -> Result<AccountPair> {
    let (a, b) = split_pair(s, '~')?;
    let pair = CcsPair::new(a.parse()?, b.parse()?);
    check_positive(&AdditiveNaturals, &pair)?;
    Ok(pair)
}

/// Parses a fraction pair: `136/6`.
pub fn parse_fraction(s: &str) -> Result<FractionPair> {
    let (a, b) = split_pair(s, '/')?;
    let pair = CcsPair::new(a.parse()?, b.parse()?);
    check_positive(&MultiplicativeNaturals, &pair)?;
    Ok(pair)
}

fn split_pair(s: &str, sep: char) -> Result<(&str, &str)> {
    // The circled-minus sign is accepted as a synonym for '~'.
    let normalized = if sep == '~' && s.contains('\u{2296}') {
        return match s.split_once('\u{2296}') {
            Some((a, b)) => Ok((a.trim(), b.trim())),
            None => unreachable!("contains checked above"),
        };
    } else {
        s
    };
    normalized
        .split_once(sep)
        .map(|(a, b)| (a.trim(), b.trim()))
        .ok_or_else(|| Error::Parse {
            input: s.into(),
            reason: format!("expected two parts separated by {sep:?}"),
        })
}

fn check_positive<C: CcsCarrier>(c: &C, p: &CcsPair<C>) -> Result<()> {
    if c.is_valid(&p.first) && c.is_valid(&p.second) {
        Ok(())
    } else {
        Err(Error::NonPositive { what: "pair component", value: format!("{:?}", p) })
    }
}

/// Renders a pair with its carrier's separator: `9~4` or `136/6`.
pub fn render_pair<C: CcsCarrier>(c: &C, p: &CcsPair<C>) -> String {
    format!("{}{}{}", p.first, c.pair_separator(), p.second)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Natural {
        Natural::from(v)
    }

    fn acct(a: u64, b: u64) -> AccountPair {
        CcsPair::new(n(a), n(b))
    }

    fn frac(a: u64, b: u64) -> FractionPair {
        CcsPair::new(n(a), n(b))
    }

    #[test]
    fn congruence_matches_the_cross_sums() {
        let c = AdditiveNaturals;
        assert!(pair_congruent(&c, &acct(9, 4), &acct(6, 1)));
        assert!(!pair_congruent(&c, &acct(9, 4), &acct(6, 2)));
        let m = MultiplicativeNaturals;
        assert!(pair_congruent(&m, &frac(136, 6), &frac(68, 3)));
        assert!(!pair_congruent(&m, &frac(2, 3), &frac(3, 2)));
    }

    #[test]
    fn account_canonical_forms() {
        let c = AdditiveNaturals;
        assert_eq!(c.canonical_pair(&acct(9, 4)), acct(6, 1));
        assert_eq!(c.canonical_pair(&acct(4, 9)), acct(1, 6));
        assert_eq!(c.canonical_pair(&acct(7, 7)), acct(1, 1));
        assert_eq!(canonicalize_int(&acct(9, 4)), CanonInt::from(5));
        assert_eq!(canonicalize_int(&acct(4, 9)), CanonInt::from(-5));
        assert_eq!(canonicalize_int(&acct(7, 7)), CanonInt::zero());
    }

    #[test]
    fn fraction_canonical_forms() {
        let m = MultiplicativeNaturals;
        assert_eq!(m.canonical_pair(&frac(136, 6)), frac(68, 3));
        assert_eq!(canonicalize_rat(&frac(136, 6)).unwrap(), CanonRat::ratio(68, 3));
        assert!(canonicalize_rat(&frac(0, 6)).is_err());
    }

    #[test]
    fn account_multiplication_on_representatives() {
        // (3~1) x (1~2) = (3 + 2) ~ (6 + 1) = 5~7, the integer -2.
        let p = account_mul(&acct(3, 1), &acct(1, 2));
        assert_eq!(p, acct(5, 7));
        assert_eq!(canonicalize_int(&p), CanonInt::from(-2));
        // (2~1) squared is the multiplicative identity witness 1.
        let one = account_mul(&acct(2, 1), &acct(2, 1));
        assert_eq!(canonicalize_int(&one), CanonInt::from(1));
    }

    #[test]
    fn fraction_addition_on_representatives() {
        // 1/2 + 1/3 = 5/6.
        let s = fraction_add(&frac(1, 2), &frac(1, 3));
        assert_eq!(canonicalize_rat(&s).unwrap(), CanonRat::ratio(5, 6));
    }

    #[test]
    fn embedding_uses_the_unit() {
        let c = AdditiveNaturals;
        let e = embed(&c, &n(3));
        assert_eq!(e.canonical(), &acct(4, 1));
        let m = MultiplicativeNaturals;
        let e = embed(&m, &n(3));
        assert_eq!(e.canonical(), &frac(3, 1));
    }

    #[test]
    fn classes_form_a_group() {
        let c = AdditiveNaturals;
        let five = CcsClass::of(&c, &acct(9, 4));
        let minus_five = five.inverse(&c);
        assert_eq!(five.combine(&c, &minus_five), identity_class(&c));
        assert_eq!(identity_class(&c).combine(&c, &five), five);
    }

    #[test]
    fn rational_pairs_complete_to_signed_values() {
        let q = AdditiveRationals;
        let p = CcsPair::<AdditiveRationals>::new(CanonRat::ratio(1, 2), CanonRat::ratio(2, 1));
        assert_eq!(rational_value(&p), CanonRat::ratio(-3, 2));
        let canon = q.canonical_pair(&p);
        assert_eq!(canon.first, CanonRat::one());
        assert_eq!(canon.second, CanonRat::ratio(5, 2));
        assert!(pair_congruent(&q, &p, &canon));
    }

    #[test]
    fn pair_text_forms() {
        let p = parse_account("9~4").unwrap();
        assert_eq!(p, acct(9, 4));
        let p = parse_account("9\u{2296}4").unwrap();
        assert_eq!(p, acct(9, 4));
        assert_eq!(render_pair(&AdditiveNaturals, &p), "9~4");
        let f = parse_fraction("136/6").unwrap();
        assert_eq!(f, frac(136, 6));
        assert_eq!(render_pair(&MultiplicativeNaturals, &f), "136/6");
        assert!(parse_account("9~0").is_err());
        assert!(parse_fraction("5").is_err());
    }
}
