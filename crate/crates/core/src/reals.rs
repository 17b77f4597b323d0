//! Constructive reals as interval streams.
//!
//! A real number is represented by a rule that, asked for precision `k`,
//! returns a rational interval of width at most `2^-k` containing the
//! number. Arithmetic builds new rules out of old ones, probing the
//! operands just hard enough that the combined interval meets its own
//! width bound. Nothing here ever rounds a value; every printed digit
//! and every comparison verdict is backed by an interval the caller can
//! recompute.
//!
//! Equality of streams is undecidable, so comparisons take a probe
//! budget and may come back undecided. That is not a weakness of the
//! implementation: two rules for the same number will never separate,
//! no matter how far they are probed.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::anthyphairesis::{cf_reconstruct, CFExpansion};
use crate::completion::{decimal_nearest, CanonInt, CanonRat};
use crate::error::{Error, Result};
use crate::exhaustion::{pi_bounds, pi_enclosure, MAX_DOUBLINGS};
use crate::interval::RationalInterval;
use crate::naturals::Natural;

/// Default probe budget, in bits, for searches that must separate two
/// streams before they can answer.
pub const DEFAULT_PROBE_BUDGET: u32 = 256;

/// Verdict of comparing two streams under a probe budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    /// The left stream separated strictly below the right one.
    Less,
    /// The left stream separated strictly above the right one.
    Greater,
    /// No probe up to the budget separated the two.
    UndecidedAtBudget,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = match self {
            Comparison::Less => "less",
            Comparison::Greater => "greater",
            Comparison::UndecidedAtBudget => "undecided-at-budget",
        };
        write!(f, "{word}")
    }
}

type Seq = Box<dyn Fn(u64) -> CanonRat + Send + Sync>;
type Modulus = Box<dyn Fn(u32) -> u64 + Send + Sync>;

enum NodeKind {
    Constant(CanonRat),
    // Periodic expansion, bracketed by consecutive convergents.
    Convergents(CFExpansion),
    Add(RealStream, RealStream),
    Mul(RealStream, RealStream),
    Neg(RealStream),
    Inv(RealStream),
    Sup(Vec<RealStream>),
    MonotoneLimit { seq: Seq, modulus: Modulus },
    Pi,
}

struct Node {
    kind: NodeKind,
    // Memoized approximations; repeated probes at one precision must
    // return the identical interval.
    cache: Mutex<BTreeMap<u32, RationalInterval>>,
}

/// A constructive real: an on-demand source of nested-precision rational
/// intervals around one fixed number. Cloning is cheap and shares the
/// approximation cache.
#[derive(Clone)]
pub struct RealStream {
    node: Arc<Node>,
}

impl RealStream {
    fn with_kind(kind: NodeKind) -> RealStream {
        RealStream {
            node: Arc::new(Node { kind, cache: Mutex::new(BTreeMap::new()) }),
        }
    }

    /// An interval of width at most `2^-k` containing the number.
    pub fn approx(&self, k: u32) -> Result<RationalInterval> {
        if let Some(hit) = self.node.cache.lock().expect("cache lock").get(&k) {
            return Ok(hit.clone());
        }
        let fresh = self.compute(k)?;
        debug_assert!(
            fresh.width() <= CanonRat::pow2_inv(k),
            "stream interval too wide at k = {k}"
        );
        let mut cache = self.node.cache.lock().expect("cache lock");
        Ok(cache.entry(k).or_insert(fresh).clone())
    }

    fn compute(&self, k: u32) -> Result<RationalInterval> {
        match &self.node.kind {
            NodeKind::Constant(x) => Ok(RationalInterval::point(x.clone())),
            NodeKind::Convergents(e) => Ok(convergent_bracket(e, k)),
            NodeKind::Add(x, y) => {
                // Each operand contributes at most 2^-(k+2) of width and
                // the dyadic rounding at k+2 bits at most 2^-(k+1).
                let a = x.approx(k + 2)?;
                let b = y.approx(k + 2)?;
                Ok((&a + &b).round_out(k + 2))
            }
            NodeKind::Mul(x, y) => {
                // A coarse probe sizes the fine one: intervals within
                // 2^-k' of the factors multiply to a width of at most
                // (|x| + |y| + 2) * 2^-k'.
                let cx = x.approx(2)?;
                let cy = y.approx(2)?;
                let mx = cx.lo().abs().max(cx.hi().abs());
                let my = cy.lo().abs().max(cy.hi().abs());
                let slack = &(&mx + &my) + &CanonRat::ratio(2, 1);
                let s = slack.log2_bound();
                let a = x.approx(k + s + 2)?;
                let b = y.approx(k + s + 2)?;
                Ok((&a * &b).round_out(k + 2))
            }
            NodeKind::Neg(x) => Ok(-&x.approx(k)?),
            NodeKind::Inv(x) => invert(x, k),
            NodeKind::Sup(xs) => {
                // Pointwise maxima of the endpoints; the width never
                // exceeds the widest operand interval.
                let mut lo: Option<CanonRat> = None;
                let mut hi: Option<CanonRat> = None;
                for x in xs {
                    let i = x.approx(k)?;
                    lo = Some(lo.map_or_else(|| i.lo().clone(), |v| v.max(i.lo().clone())));
                    hi = Some(hi.map_or_else(|| i.hi().clone(), |v| v.max(i.hi().clone())));
                }
                Ok(RationalInterval::new(
                    lo.expect("nonempty supremum"),
                    hi.expect("nonempty supremum"),
                ))
            }
            NodeKind::MonotoneLimit { seq, modulus } => monotone_approx(seq, modulus, k),
            NodeKind::Pi => pi_approx(k),
        }
    }

    /// A short account of how this stream was built.
    pub fn describe(&self) -> String {
        match &self.node.kind {
            NodeKind::Constant(x) => format!("rational {x}"),
            NodeKind::Convergents(e) => format!("continued fraction {e}"),
            NodeKind::Add(..) => "sum of two streams".into(),
            NodeKind::Mul(..) => "product of two streams".into(),
            NodeKind::Neg(..) => "negation of a stream".into(),
            NodeKind::Inv(..) => "reciprocal of a stream".into(),
            NodeKind::Sup(xs) => format!("supremum of {} streams", xs.len()),
            NodeKind::MonotoneLimit { .. } => "limit of a monotone sequence".into(),
            NodeKind::Pi => "pi by polygon exhaustion".into(),
        }
    }
}

impl fmt::Debug for RealStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealStream({})", self.describe())
    }
}

/// The stream of an exact rational: every probe is the same point.
pub fn real_from_rational(x: CanonRat) -> RealStream {
    RealStream::with_kind(NodeKind::Constant(x))
}

/// The stream of a continued fraction. A finite expansion collapses to
/// its exact rational value; a periodic one is bracketed by consecutive
/// convergents, which straddle the value and close in at quadratic
/// speed in the denominators.
pub fn real_from_cf(e: &CFExpansion) -> Result<RealStream> {
    if e.is_finite() {
        Ok(real_from_rational(cf_reconstruct(e)?))
    } else {
        Ok(RealStream::with_kind(NodeKind::Convergents(e.clone())))
    }
}

/// The sum of two streams.
pub fn real_add(x: &RealStream, y: &RealStream) -> RealStream {
    RealStream::with_kind(NodeKind::Add(x.clone(), y.clone()))
}

/// The product of two streams.
pub fn real_mul(x: &RealStream, y: &RealStream) -> RealStream {
    RealStream::with_kind(NodeKind::Mul(x.clone(), y.clone()))
}

/// The negation of a stream.
pub fn real_neg(x: &RealStream) -> RealStream {
    RealStream::with_kind(NodeKind::Neg(x.clone()))
}

/// The reciprocal of a stream. Probing it first searches for an interval
/// separating the operand from zero; a stream that never separates
/// (such as one for zero itself) reports `CannotSeparate` instead of
/// looping forever.
pub fn real_inv(x: &RealStream) -> RealStream {
    RealStream::with_kind(NodeKind::Inv(x.clone()))
}

/// The circle constant as a stream, backed by polygon exhaustion with a
/// doubling count chosen from the precision requested.
pub fn pi_stream() -> RealStream {
    RealStream::with_kind(NodeKind::Pi)
}

/// The pointwise supremum of finitely many streams.
pub fn supremum_finite(xs: &[RealStream]) -> Result<RealStream> {
    if xs.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(RealStream::with_kind(NodeKind::Sup(xs.to_vec())))
}

/// The limit of a nondecreasing rational sequence with an explicit rate:
/// `modulus(k)` names an index past which the sequence stays within
/// `2^-k` of its limit. Monotonicity is spot-checked at probe time, not
/// proved; a decreasing pair among the samples raises `NotMonotone`.
pub fn limit_of_monotone(
    seq: impl Fn(u64) -> CanonRat + Send + Sync + 'static,
    modulus: impl Fn(u32) -> u64 + Send + Sync + 'static,
) -> RealStream {
    RealStream::with_kind(NodeKind::MonotoneLimit {
        seq: Box::new(seq),
        modulus: Box::new(modulus),
    })
}

/// The limit of the dyadic walk that halves its remaining distance at
/// every step: the partial sums `1/2 + 1/4 + ... + 1/2^n`, which sit
/// exactly `2^-n` below their limit.
pub fn zeno_stream() -> RealStream {
    limit_of_monotone(
        |n| {
            let n = u32::try_from(n).unwrap_or(u32::MAX);
            &CanonRat::one() - &CanonRat::pow2_inv(n)
        },
        |k| u64::from(k),
    )
}

/// Compares two streams by probing both at increasing precision until
/// their intervals separate. Streams for one and the same number never
/// separate, so the budget caps how hard to try before conceding.
pub fn real_compare(x: &RealStream, y: &RealStream, probe_budget: u32) -> Result<Comparison> {
    for k in probe_schedule(probe_budget) {
        let a = x.approx(k)?;
        let b = y.approx(k)?;
        if a.hi() < b.lo() {
            return Ok(Comparison::Less);
        }
        if b.hi() < a.lo() {
            return Ok(Comparison::Greater);
        }
    }
    Ok(Comparison::UndecidedAtBudget)
}

/// A rational strictly between two streams, assuming the first is below
/// the second. Probes until the intervals separate and returns the
/// midpoint of the gap between them; separation the wrong way around
/// reports the violated ordering instead.
pub fn rational_between(x: &RealStream, y: &RealStream, probe_budget: u32) -> Result<CanonRat> {
    for k in probe_schedule(probe_budget) {
        let a = x.approx(k)?;
        let b = y.approx(k)?;
        if a.hi() < b.lo() {
            return Ok(&(a.hi() + b.lo()) * &CanonRat::ratio(1, 2));
        }
        if b.hi() < a.lo() {
            return Err(Error::NonPositive {
                what: "the gap from the first stream up to the second",
                value: (b.hi() - a.lo()).to_string(),
            });
        }
    }
    Err(Error::CannotSeparate { budget: probe_budget })
}

/// The least multiplier `n` with `n * a > b`, verified by interval
/// separation. Multiples that cannot be told apart from `b` within the
/// budget are skipped, so the returned witness is always strict; for
/// `a = 1/1000, b = 1` that skips the exact hit at 1000 and answers
/// 1001.
pub fn archimedean_witness(
    a: &RealStream,
    b: &RealStream,
    probe_budget: u32,
) -> Result<Natural> {
    let witness = separate_from_zero(a, probe_budget)?;
    if witness.hi() < &CanonRat::zero() {
        return Err(Error::NonPositive {
            what: "the step of an Archimedean search",
            value: witness.hi().to_string(),
        });
    }
    // An a-priori cap from a >= d > 0 and a coarse upper bound on b, so
    // a misbehaving stream cannot send the search off to infinity.
    let d = witness.lo().clone();
    let b_hi = b.approx(1)?.hi().clone();
    let cap = {
        let q = b_hi.div(&d).expect("positive divisor").ceil();
        let base = if q.is_positive() { q.abs() } else { Natural::zero() };
        &base + &Natural::from(2u64)
    };
    let mut n = Natural::one();
    while n <= cap {
        let multiple = real_mul(
            a,
            &real_from_rational(CanonRat::from_natural(n.clone())),
        );
        if real_compare(&multiple, b, probe_budget)? == Comparison::Greater {
            return Ok(n);
        }
        n = &n + &Natural::one();
    }
    Err(Error::CannotSeparate { budget: probe_budget })
}

/// Renders a stream as a decimal with `digits` places after the point
/// and an explicit one-ulp slop marker. The probe is taken narrower
/// than one ulp of the output, so every printed digit is certified up
/// to that final slop.
pub fn render(x: &RealStream, digits: u32) -> Result<String> {
    // 10/3 bits per decimal digit overshoots log2(10) = 3.32...
    let k = digits * 10 / 3 + 4;
    let probe = x.approx(k)?;
    let shown = decimal_nearest(&probe.midpoint(), digits);
    Ok(format!("{shown} ±1 ulp"))
}

// Probe precisions 0, 1, 2, 4, 8, ... capped by and ending at the
// budget itself.
fn probe_schedule(budget: u32) -> Vec<u32> {
    let mut ks = vec![0u32];
    let mut k = 1u32;
    while k < budget {
        ks.push(k);
        k = k.saturating_mul(2);
    }
    if budget > 0 {
        ks.push(budget);
    }
    ks
}

fn separate_from_zero(x: &RealStream, budget: u32) -> Result<RationalInterval> {
    let zero = CanonRat::zero();
    for k in probe_schedule(budget) {
        let probe = x.approx(k)?;
        if !probe.contains(&zero) {
            return Ok(probe);
        }
    }
    Err(Error::CannotSeparate { budget })
}

fn intersect(a: &RationalInterval, b: &RationalInterval) -> Option<RationalInterval> {
    let lo = a.lo().max(b.lo()).clone();
    let hi = a.hi().min(b.hi()).clone();
    (lo <= hi).then(|| RationalInterval::new(lo, hi))
}

fn invert(x: &RealStream, k: u32) -> Result<RationalInterval> {
    let witness = separate_from_zero(x, DEFAULT_PROBE_BUDGET)?;
    // Distance from zero: the witness pins |x| >= d > 0, and 1/x over an
    // interval within d/4 of x has width at most 2 * 2^-k' / d^2.
    let zero = CanonRat::zero();
    let d = if *witness.lo() > zero {
        witness.lo().clone()
    } else {
        witness.hi().abs()
    };
    let s = d.inv().expect("positive distance").log2_bound();
    let fine = x.approx(k + 2 * s + 2)?;
    let boxed = intersect(&fine, &witness).expect("probes of one stream overlap");
    Ok(boxed
        .reciprocal()
        .expect("witness separated from zero")
        .round_out(k + 2))
}

fn convergent_bracket(e: &CFExpansion, k: u32) -> RationalInterval {
    // Consecutive convergents p_i/q_i straddle the value and differ by
    // exactly 1/(q_i q_{i+1}); walk until that clears the target width.
    let threshold = Natural::pow2(k);
    let a0 = e.quotient(0).expect("expansions are nonempty").clone();
    let (mut p_back, mut q_back) = (Natural::one(), Natural::zero());
    let (mut p, mut q) = (a0, Natural::one());
    let mut i = 1usize;
    loop {
        let a = e.quotient(i).expect("periodic expansions never end").clone();
        let p_next = &(&a * &p) + &p_back;
        let q_next = &(&a * &q) + &q_back;
        if &q * &q_next >= threshold {
            let c1 = ratio_of(&p, &q);
            let c2 = ratio_of(&p_next, &q_next);
            return if c1 <= c2 {
                RationalInterval::new(c1, c2)
            } else {
                RationalInterval::new(c2, c1)
            };
        }
        p_back = p;
        p = p_next;
        q_back = q;
        q = q_next;
        i += 1;
    }
}

fn ratio_of(p: &Natural, q: &Natural) -> CanonRat {
    CanonRat::new(CanonInt::from_natural(p.clone()), q.clone()).expect("positive denominator")
}

fn monotone_approx(seq: &Seq, modulus: &Modulus, k: u32) -> Result<RationalInterval> {
    let n = modulus(k);
    // Spot checks, not a proof: adjacent pairs at the start, midway and
    // at the tail index must be nondecreasing.
    for base in [0, n / 2, n] {
        if seq(base + 1) < seq(base) {
            return Err(Error::NotMonotone { index: base });
        }
    }
    let x = seq(n);
    let hi = &x + &CanonRat::pow2_inv(k);
    Ok(RationalInterval::new(x, hi))
}

fn pi_approx(k: u32) -> Result<RationalInterval> {
    // Each doubling quarters the polygon gap, so k/2 + 2 doublings put
    // it below 2^-k with room for the dyadic rounding of the rows.
    let target = CanonRat::pow2_inv(k);
    let mut doublings = (k / 2 + 2).min(MAX_DOUBLINGS);
    loop {
        let rows = pi_bounds(doublings, k + 16)?;
        let enclosure = pi_enclosure(&rows);
        if enclosure.width() <= target {
            return Ok(enclosure);
        }
        if doublings == MAX_DOUBLINGS {
            return Err(Error::PrecisionBudget { what: "tightening the pi stream" });
        }
        doublings += 1;
    }
}
