//! Reciprocal subtraction: traced gcd, continued fractions, and
//! quadratic-surd periodicity.
//!
//! The same quotient sequence appears three ways here. Run on two
//! naturals it is the gcd algorithm and each row records
//! `dividend = quotient x divisor + remainder`. Read off the quotients
//! and it is the continued-fraction expansion of their ratio. Run on
//! `sqrt(d)` for a non-square `d` the process never terminates but its
//! state becomes periodic, and detecting the first repeated state
//! yields the periodic expansion.
//!
//! Applied to a pair of line segments the process decides
//! commensurability: it terminates exactly when the ratio is rational
//! (a dichotomy this module realizes as "finite expansion" versus
//! "periodic expansion" for the quadratic case). The expansion of a
//! ratio is finite with a last quotient of at least 2 (a trailing 1 is
//! merged into its predecessor), which makes the form canonical: equal
//! ratios give equal expansions.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::completion::{CanonInt, CanonRat};
use crate::error::{Error, Result};
use crate::naturals::Natural;

/// Default cap on single subtractions in [`gcd_literal`].
pub const LITERAL_STEP_CAP: u64 = 1_000_000;

/// One division step: `dividend = quotient x divisor + remainder`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TraceRow {
    /// The number being divided this step.
    pub dividend: Natural,
    /// How many times the divisor fits.
    pub quotient: Natural,
    /// The number divided by.
    pub divisor: Natural,
    /// What is left over; strictly smaller than the divisor.
    pub remainder: Natural,
}

/// A full run of the subtraction process on two naturals.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GcdTrace {
    /// The division rows, in order. Empty when the second operand is 0.
    pub rows: Vec<TraceRow>,
    /// The greatest common divisor: the last nonzero remainder, or the
    /// first operand when there are no rows.
    pub gcd: Natural,
}

/// Greatest common divisor with the full division trace.
///
/// The operands may not both be zero.
pub fn gcd(a: &Natural, b: &Natural) -> Result<GcdTrace> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    let mut rows = Vec::new();
    while !y.is_zero() {
        let (q, r) = x.divmod(&y).expect("loop guard keeps divisor nonzero");
        rows.push(TraceRow {
            dividend: x.clone(),
            quotient: q,
            divisor: y.clone(),
            remainder: r.clone(),
        });
        x = y;
        y = r;
    }
    Ok(GcdTrace { rows, gcd: x })
}

/// Greatest common divisor without the trace.
///
/// Follows the convention `gcd(0, 0) = 0` so that reduction code can
/// use it unconditionally; the traced form rejects that input instead.
pub fn gcd_value(a: &Natural, b: &Natural) -> Natural {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = x.divmod(&y).expect("loop guard keeps divisor nonzero");
        x = y;
        y = r;
    }
    x
}

/// True when the operands share no divisor beyond 1.
pub fn coprime(a: &Natural, b: &Natural) -> bool {
    gcd_value(a, b).is_one()
}

/// One phase of the literal process: `subtrahend` was taken away from
/// `from` repeatedly (`times` single subtractions) until `remainder`
/// was too small to continue.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LiteralPhase {
    /// Value at the start of the phase.
    pub from: Natural,
    /// What was subtracted each step.
    pub subtrahend: Natural,
    /// How many single subtractions ran.
    pub times: u64,
    /// Value left when the phase stopped.
    pub remainder: Natural,
}

/// A run of the literal one-subtraction-at-a-time process.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LiteralTrace {
    /// The phases, one per divisor.
    pub phases: Vec<LiteralPhase>,
    /// The greatest common divisor.
    pub gcd: Natural,
    /// Total single subtractions across all phases.
    pub steps: u64,
}

/// The gcd by honest repeated subtraction, one unit at a time, capped
/// at `cap` single subtractions (use [`LITERAL_STEP_CAP`] by default).
///
/// Each phase performs real subtractions rather than a division, so
/// the cost is the sum of all quotients; the cap turns a pathological
/// input into a clean error rather than a stall.
pub fn gcd_literal(a: &Natural, b: &Natural, cap: u64) -> Result<LiteralTrace> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    let mut phases = Vec::new();
    let mut steps = 0u64;
    while !y.is_zero() {
        let from = x.clone();
        let mut times = 0u64;
        while x >= y {
            x = x.checked_sub(&y).expect("loop guard keeps minuend larger");
            times += 1;
            steps += 1;
            if steps > cap {
                return Err(Error::StepBudget { budget: cap });
            }
        }
        phases.push(LiteralPhase {
            from,
            subtrahend: y.clone(),
            times,
            remainder: x.clone(),
        });
        std::mem::swap(&mut x, &mut y);
        // Now y holds the remainder of the finished phase.
    }
    Ok(LiteralTrace { phases, gcd: x, steps })
}

/// Renders a trace in the boxed-table layout, columns aligned and the
/// terminal remainder (the gcd) wrapped in parentheses:
///
/// ```text
/// 136 = 22 x 6 + 4
///   6 =  1 x 4 + (2)
///   4 =  2 x 2 + 0
/// ```
pub fn render_trace(trace: &GcdTrace) -> String {
    let marked: Vec<String> = trace
        .rows
        .iter()
        .map(|r| {
            if !r.remainder.is_zero() && r.remainder == trace.gcd {
                format!("({})", r.remainder)
            } else {
                r.remainder.to_string()
            }
        })
        .collect();
    let cells: Vec<[String; 4]> = trace
        .rows
        .iter()
        .zip(&marked)
        .map(|(r, rem)| {
            [r.dividend.to_string(), r.quotient.to_string(), r.divisor.to_string(), rem.clone()]
        })
        .collect();
    render_rows(&cells, &[])
}

/// Renders a literal trace in the same layout, the quotient column now
/// counting real subtractions.
pub fn render_literal(trace: &LiteralTrace) -> String {
    let cells: Vec<[String; 4]> = trace
        .phases
        .iter()
        .map(|p| {
            [p.from.to_string(), p.times.to_string(), p.subtrahend.to_string(), p.remainder.to_string()]
        })
        .collect();
    let notes: Vec<String> = trace
        .phases
        .iter()
        .map(|p| {
            let s = if p.times == 1 { "subtraction" } else { "subtractions" };
            format!("({} {})", p.times, s)
        })
        .collect();
    render_rows(&cells, &notes)
}

fn render_rows(cells: &[[String; 4]], notes: &[String]) -> String {
    let mut widths = [0usize; 4];
    for row in cells {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for (i, row) in cells.iter().enumerate() {
        // The remainder is the last column; padding it would leave
        // trailing spaces on short rows, so it stays flush.
        let line = format!(
            "{:>w0$} = {:>w1$} x {:>w2$} + {}",
            row[0],
            row[1],
            row[2],
            row[3],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2],
        );
        out.push_str(line.trim_end());
        if let Some(note) = notes.get(i) {
            out.push_str("    ");
            out.push_str(note);
        }
        out.push('\n');
    }
    out
}

/// A continued-fraction expansion, finite or eventually periodic.
///
/// Canonical form: at least one quotient, no zero quotient after the
/// first, and a finite expansion of length over one never ends in 1
/// (the constructor merges a trailing 1 into its predecessor, so
/// `[3; 1, 1]` becomes `[3; 2]`). Periodic tails are nonempty with
/// every entry at least 1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CFExpansion {
    quotients: Vec<Natural>,
    periodic_tail: Option<Vec<Natural>>,
}

impl CFExpansion {
    /// Builds a finite expansion, canonicalizing a trailing 1.
    pub fn finite(mut quotients: Vec<Natural>) -> Result<CFExpansion> {
        if quotients.is_empty() {
            return Err(Error::EmptyExpansion);
        }
        for (i, q) in quotients.iter().enumerate().skip(1) {
            if q.is_zero() {
                return Err(Error::InvalidQuotient { position: i });
            }
        }
        if quotients.len() > 1 && quotients.last().expect("nonempty").is_one() {
            quotients.pop();
            let last = quotients.last_mut().expect("still nonempty");
            *last = &*last + &Natural::one();
        }
        Ok(CFExpansion { quotients, periodic_tail: None })
    }

    /// Builds an eventually periodic expansion.
    pub fn periodic(head: Vec<Natural>, tail: Vec<Natural>) -> Result<CFExpansion> {
        if head.is_empty() {
            return Err(Error::EmptyExpansion);
        }
        for (i, q) in head.iter().enumerate().skip(1) {
            if q.is_zero() {
                return Err(Error::InvalidQuotient { position: i });
            }
        }
        if tail.is_empty() {
            return Err(Error::EmptyExpansion);
        }
        for (i, q) in tail.iter().enumerate() {
            if q.is_zero() {
                return Err(Error::InvalidQuotient { position: head.len() + i });
            }
        }
        Ok(CFExpansion { quotients: head, periodic_tail: Some(tail) })
    }

    /// The non-repeating quotients (all of them, when finite).
    pub fn quotients(&self) -> &[Natural] {
        &self.quotients
    }

    /// The repeating block, if any.
    pub fn periodic_tail(&self) -> Option<&[Natural]> {
        self.periodic_tail.as_deref()
    }

    /// True when the expansion terminates.
    pub fn is_finite(&self) -> bool {
        self.periodic_tail.is_none()
    }

    /// Number of quotients, when finite.
    pub fn finite_len(&self) -> Option<usize> {
        self.is_finite().then_some(self.quotients.len())
    }

    /// Quotient `i`, unrolling the periodic tail as far as needed.
    pub fn quotient(&self, i: usize) -> Option<&Natural> {
        if i < self.quotients.len() {
            return Some(&self.quotients[i]);
        }
        let tail = self.periodic_tail.as_ref()?;
        Some(&tail[(i - self.quotients.len()) % tail.len()])
    }
}

impl fmt::Display for CFExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.quotients[0])?;
        let rest: Vec<String> = self.quotients[1..].iter().map(|q| q.to_string()).collect();
        let tail = self.periodic_tail.as_ref().map(|t| {
            let inner: Vec<String> = t.iter().map(|q| q.to_string()).collect();
            format!("({})", inner.join(", "))
        });
        let mut parts = rest;
        if let Some(t) = tail {
            parts.push(t);
        }
        if !parts.is_empty() {
            write!(f, "; {}", parts.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Parses the bracket form: `[5; 1, 2]`, `[7]`, or `[1; (2)]` with an
/// optional non-repeating part before the parenthesized block.
impl FromStr for CFExpansion {
    type Err = Error;

    fn from_str(s: &str) -> Result<CFExpansion> {
        let bad = |reason: &str| Error::Parse { input: s.into(), reason: reason.into() };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| bad("expected [ ... ]"))?;
        let (a0_str, rest) = match inner.split_once(';') {
            Some((a, r)) => (a.trim(), Some(r.trim())),
            None => (inner.trim(), None),
        };
        let a0: Natural = a0_str.parse()?;
        let mut head = vec![a0];
        let mut tail: Option<Vec<Natural>> = None;
        if let Some(rest) = rest {
            if rest.is_empty() {
                return Err(bad("nothing after ';'"));
            }
            let (finite_part, periodic_part) = match rest.find('(') {
                Some(open) => {
                    let inside = rest[open + 1..]
                        .trim_end()
                        .strip_suffix(')')
                        .ok_or_else(|| bad("unclosed '('"))?;
                    (rest[..open].trim_end().trim_end_matches(','), Some(inside))
                }
                None => (rest, None),
            };
            for tok in finite_part.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                head.push(tok.parse()?);
            }
            if let Some(p) = periodic_part {
                let mut block = Vec::new();
                for tok in p.split(',') {
                    let tok = tok.trim();
                    if tok.is_empty() {
                        return Err(bad("empty entry in periodic block"));
                    }
                    block.push(tok.parse()?);
                }
                tail = Some(block);
            }
        }
        match tail {
            Some(t) => CFExpansion::periodic(head, t),
            None => CFExpansion::finite(head),
        }
    }
}

/// Continued-fraction expansion of `p/q` (with `q >= 1`): exactly the
/// quotient column of the gcd trace.
pub fn cf_expand(p: &Natural, q: &Natural) -> Result<CFExpansion> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let trace = gcd(p, q)?;
    CFExpansion::finite(trace.rows.iter().map(|r| r.quotient.clone()).collect())
}

/// Exact value of a finite expansion, folded from the right.
/// Periodic expansions denote irrationals and are a domain error.
pub fn cf_reconstruct(e: &CFExpansion) -> Result<CanonRat> {
    if !e.is_finite() {
        return Err(Error::PeriodicReconstruct);
    }
    let mut value = CanonRat::from_natural(e.quotients().last().expect("nonempty").clone());
    for a in e.quotients().iter().rev().skip(1) {
        // Inner quotients are >= 1, so value stays positive here.
        value = &CanonRat::from_natural(a.clone()) + &value.inv().expect("positive tail value");
    }
    Ok(value)
}

/// The first `count` convergents `p_k/q_k`, each in lowest terms.
///
/// A finite expansion has exactly as many convergents as quotients;
/// asking for more is a domain error. Periodic expansions supply any
/// number.
pub fn convergents(e: &CFExpansion, count: usize) -> Result<Vec<CanonRat>> {
    if let Some(len) = e.finite_len() {
        if count > len {
            return Err(Error::ConvergentIndex { wanted: count, have: len });
        }
    }
    let mut out = Vec::with_capacity(count);
    // Three-term recurrence: h_k = a_k h_(k-1) + h_(k-2), same for q.
    let (mut h2, mut h1) = (Natural::zero(), Natural::one());
    let (mut k2, mut k1) = (Natural::one(), Natural::zero());
    for i in 0..count {
        let a = e.quotient(i).expect("length checked above");
        let h = &(a * &h1) + &h2;
        let k = &(a * &k1) + &k2;
        out.push(
            CanonRat::new(CanonInt::from_natural(h.clone()), k.clone())
                .expect("convergent denominators are positive"),
        );
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
    }
    Ok(out)
}

/// Denominators `q_0 .. q_(count-1)` of the convergents.
pub fn convergent_denominators(e: &CFExpansion, count: usize) -> Result<Vec<Natural>> {
    if let Some(len) = e.finite_len() {
        if count > len {
            return Err(Error::ConvergentIndex { wanted: count, have: len });
        }
    }
    let mut out = Vec::with_capacity(count);
    let (mut k2, mut k1) = (Natural::one(), Natural::zero());
    for i in 0..count {
        let a = e.quotient(i).expect("length checked above");
        let k = &(a * &k1) + &k2;
        out.push(k.clone());
        k2 = k1;
        k1 = k;
    }
    Ok(out)
}

/// The classical gap bound `1/(q_k q_(k+1))` on the distance between
/// the value and its `k`-th convergent.
pub fn approximation_gap(e: &CFExpansion, k: usize) -> Result<CanonRat> {
    let dens = convergent_denominators(e, k + 2)?;
    let prod = &dens[k] * &dens[k + 1];
    CanonRat::new(CanonInt::one(), prod).map_err(|_| Error::ConvergentIndex {
        wanted: k + 1,
        have: k,
    })
}

/// One state of the surd expansion: the value `(p + sqrt(d)) / q`
/// together with the quotient extracted from it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SurdStep {
    /// Additive part of the state.
    pub p: Natural,
    /// Divisor part of the state; always at least 1.
    pub q: Natural,
    /// The quotient this state produced.
    pub quotient: Natural,
}

/// The periodic expansion of a square root.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SurdExpansion {
    /// The radicand.
    pub d: Natural,
    /// The expansion; always eventually periodic.
    pub expansion: CFExpansion,
    /// The states visited up to the first repeat, starting after the
    /// leading quotient.
    pub steps: Vec<SurdStep>,
    /// Set when the classical shape check (the tail ends in twice the
    /// leading quotient) did not hold; recorded for review, not an
    /// error.
    pub anomaly: Option<String>,
}

/// Expands `sqrt(d)` for a non-square `d >= 2`.
///
/// Runs the state recurrence on `(p + sqrt(d))/q` triples and detects
/// the period as the first repeated `(p, q)` state, so the result does
/// not rely on any closed-form period length.
pub fn surd_cf(d: &Natural) -> Result<SurdExpansion> {
    let two = &Natural::one() + &Natural::one();
    if *d < two {
        return Err(Error::SurdTooSmall { n: d.to_string() });
    }
    let a0 = d.isqrt();
    if &(&a0 * &a0) == d {
        return Err(Error::PerfectSquare { n: d.to_string(), root: a0.to_string() });
    }
    let mut p = a0.clone();
    let mut q = d.checked_sub(&(&a0 * &a0)).expect("d exceeds its isqrt squared");
    let mut seen: HashMap<(Natural, Natural), usize> = HashMap::new();
    let mut quots: Vec<Natural> = Vec::new();
    let mut steps: Vec<SurdStep> = Vec::new();
    loop {
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            let head: Vec<Natural> =
                std::iter::once(a0.clone()).chain(quots[..start].iter().cloned()).collect();
            let tail: Vec<Natural> = quots[start..].to_vec();
            let twice_a0 = &a0 * &two;
            let anomaly = (tail.last() != Some(&twice_a0)).then(|| {
                format!("periodic tail ends in {} rather than 2x{}",
                    tail.last().expect("nonempty period"), a0)
            });
            let expansion = CFExpansion::periodic(head, tail)?;
            return Ok(SurdExpansion { d: d.clone(), expansion, steps, anomaly });
        }
        seen.insert((p.clone(), q.clone()), quots.len());
        // floor((p + sqrt(d))/q) = floor((p + a0)/q) for q > 0, since
        // sqrt(d) is irrational and a0 is its floor.
        let (a, _) = (&a0 + &p).divmod(&q).expect("state divisor is nonzero");
        steps.push(SurdStep { p: p.clone(), q: q.clone(), quotient: a.clone() });
        let p_next = (&a * &q).checked_sub(&p).expect("state invariant: aq >= p");
        let (q_next, rem) = d
            .checked_sub(&(&p_next * &p_next))
            .expect("state invariant: p bounded by sqrt(d)")
            .divmod(&q)
            .expect("state divisor is nonzero");
        debug_assert!(rem.is_zero(), "q must divide d - p^2");
        quots.push(a);
        p = p_next;
        q = q_next;
    }
}
