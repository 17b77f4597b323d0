//! Pythagorean triples, the parity lemmas, and descent.
//!
//! Everything here is finite and checkable: triples are enumerated by
//! brute force, the six even/odd lemmas are verified against every
//! enumerated triple, and the impossibility of an isoceles Pythagorean
//! triple (a, a, c) is both searched for directly and walked as a
//! halving descent. The pebble renders draw the counting arguments
//! behind the lemmas as text figures whose identities are re-counted
//! from the placed pebbles, not assumed.

use std::fmt;
use std::str::FromStr;

use num_integer::Roots;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::naturals::Natural;

/// A triple of positive lengths; being Pythagorean is a predicate,
/// not an invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triple {
    a: Natural,
    b: Natural,
    c: Natural,
}

impl Triple {
    /// A triple of positive components.
    pub fn new(a: Natural, b: Natural, c: Natural) -> Result<Triple> {
        for side in [&a, &b, &c] {
            if side.is_zero() {
                return Err(Error::NonPositive { what: "triple side", value: side.to_string() });
            }
        }
        Ok(Triple { a, b, c })
    }

    fn of(a: u64, b: u64, c: u64) -> Triple {
        Triple { a: a.into(), b: b.into(), c: c.into() }
    }

    /// First leg.
    pub fn a(&self) -> &Natural {
        &self.a
    }

    /// Second leg.
    pub fn b(&self) -> &Natural {
        &self.b
    }

    /// Hypotenuse.
    pub fn c(&self) -> &Natural {
        &self.c
    }

    /// Exact check of `a^2 + b^2 = c^2`.
    pub fn is_pythagorean(&self) -> bool {
        &(&self.a * &self.a) + &(&self.b * &self.b) == &self.c * &self.c
    }

    /// `(a/2, b/2, c/2)`; every component must be even.
    pub fn halve(&self) -> Result<Triple> {
        for side in [&self.a, &self.b, &self.c] {
            if !side.is_even() {
                return Err(Error::WrongParity {
                    figure: "halving a triple",
                    expected: "an even",
                    n: side.to_string(),
                });
            }
        }
        Ok(Triple {
            a: self.a.half().expect("even"),
            b: self.b.half().expect("even"),
            c: self.c.half().expect("even"),
        })
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// All Pythagorean triples with hypotenuse at most `c_max`, brute
/// forced; `(3, 4, 5)` and `(4, 3, 5)` both count.
pub fn find_triples(c_max: u64) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 1..=c_max {
        for b in 1..=c_max {
            let s = u128::from(a) * u128::from(a) + u128::from(b) * u128::from(b);
            let c = s.sqrt();
            if c * c == s && c <= u128::from(c_max) {
                out.push(Triple::of(a, b, c as u64));
            }
        }
    }
    out
}

fn multiple_of_four(n: &Natural) -> bool {
    n.is_even() && n.half().expect("even").is_even()
}

/// One parity lemma checked against every enumerated triple.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    /// 1 through 6.
    pub lemma: u8,
    /// The claim.
    pub statement: &'static str,
    /// Triples whose hypothesis applied.
    pub applicable: u64,
    /// Triples where the hypothesis held but the conclusion failed.
    pub violations: Vec<Triple>,
}

/// The six lemmas over all triples with hypotenuse at most `c_max`.
#[derive(Clone, Debug, Serialize)]
pub struct ParityReport {
    /// The enumeration bound.
    pub c_max: u64,
    /// Every triple found (both leg orders).
    pub triples: Vec<Triple>,
    /// One entry per lemma.
    pub lemmas: Vec<LemmaCheck>,
}

impl ParityReport {
    /// True when no lemma has a violating triple.
    pub fn all_ok(&self) -> bool {
        self.lemmas.iter().all(|l| l.violations.is_empty())
    }
}

impl fmt::Display for ParityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Pythagorean triples with c <= {}: {} found", self.c_max, self.triples.len())?;
        for l in &self.lemmas {
            writeln!(
                f,
                "  lemma {}: {} -- {} applicable, {} violations",
                l.lemma,
                l.statement,
                l.applicable,
                l.violations.len()
            )?;
        }
        write!(f, "{}", if self.all_ok() { "all lemmas hold" } else { "LEMMA VIOLATED" })
    }
}

/// Enumerates triples up to `c_max` and checks each lemma on every
/// triple whose hypothesis applies.
pub fn check_parity_lemmas(c_max: u64) -> ParityReport {
    type Pred = fn(&Triple) -> bool;
    let lemmas: [(u8, &'static str, Pred, Pred); 6] = [
        (
            1,
            "if c is even then a and b are both even",
            |t| t.c.is_even(),
            |t| t.a.is_even() && t.b.is_even(),
        ),
        (
            2,
            "if c is even then (a/2, b/2, c/2) is a Pythagorean triple",
            |t| t.c.is_even(),
            |t| t.halve().map(|h| h.is_pythagorean()).unwrap_or(false),
        ),
        (
            3,
            "if c is a multiple of four then so are a and b",
            |t| multiple_of_four(&t.c),
            |t| multiple_of_four(&t.a) && multiple_of_four(&t.b),
        ),
        (
            4,
            "if c is odd then one of a, b is odd and the other even",
            |t| !t.c.is_even(),
            |t| t.a.is_even() != t.b.is_even(),
        ),
        (
            5,
            "if any two of a, b, c are even then so is the third",
            |t| {
                [&t.a, &t.b, &t.c].iter().filter(|s| s.is_even()).count() >= 2
            },
            |t| t.a.is_even() && t.b.is_even() && t.c.is_even(),
        ),
        (
            6,
            "if one of a, b, c is odd then two are odd and one is even",
            |t| [&t.a, &t.b, &t.c].iter().any(|s| !s.is_even()),
            |t| [&t.a, &t.b, &t.c].iter().filter(|s| !s.is_even()).count() == 2,
        ),
    ];

    let triples = find_triples(c_max);
    let mut report = ParityReport { c_max, triples, lemmas: Vec::new() };
    for (lemma, statement, hypothesis, conclusion) in lemmas {
        let mut check = LemmaCheck { lemma, statement, applicable: 0, violations: Vec::new() };
        for t in &report.triples {
            if hypothesis(t) {
                check.applicable += 1;
                if !conclusion(t) {
                    check.violations.push(t.clone());
                }
            }
        }
        report.lemmas.push(check);
    }
    report
}

/// How a halving descent on a candidate `(a, a, c)` ended.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DescentEnding {
    /// `2a^2 != c^2`: the candidate never was a counterexample.
    NotATriple,
    /// The chain reached an odd hypotenuse, where `2a^2 = c^2` pits
    /// an even left side against an odd right side.
    OddHypotenuse,
}

/// The descent on one isoceles candidate.
#[derive(Clone, Debug, Serialize)]
pub struct DescentReport {
    /// The leg.
    pub a: Natural,
    /// The hypotenuse.
    pub c: Natural,
    /// `2a^2`.
    pub twice_a_squared: Natural,
    /// `c^2`.
    pub c_squared: Natural,
    /// Halving chain, starting from `(a, a, c)`; empty unless the
    /// candidate really were Pythagorean.
    pub chain: Vec<Triple>,
    /// Where the walk stopped.
    pub ending: DescentEnding,
}

impl fmt::Display for DescentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "candidate (a, a, c) = ({}, {}, {})", self.a, self.a, self.c)?;
        match self.ending {
            DescentEnding::NotATriple => {
                let (lo, hi) = if self.twice_a_squared < self.c_squared {
                    (&self.twice_a_squared, &self.c_squared)
                } else {
                    (&self.c_squared, &self.twice_a_squared)
                };
                let off = hi.checked_sub(lo).expect("ordered");
                write!(
                    f,
                    "2 x {}^2 = {} and {}^2 = {} differ by {}: not a Pythagorean triple",
                    self.a, self.twice_a_squared, self.c, self.c_squared, off
                )
            }
            DescentEnding::OddHypotenuse => {
                for t in &self.chain {
                    writeln!(f, "  {t}")?;
                }
                write!(
                    f,
                    "hypotenuse {} is odd, so 2a^2 (even) cannot equal c^2 (odd)",
                    self.chain.last().expect("nonempty chain").c()
                )
            }
        }
    }
}

/// Walks the halving descent on the candidate `(a, a, c)`.
///
/// In practice the candidate is never Pythagorean and the report says
/// how far from `2a^2 = c^2` it lands; the halving chain exists for
/// the sake of the argument it executes.
pub fn incommensurability_descent(a: &Natural, c: &Natural) -> Result<DescentReport> {
    for (what, v) in [("leg", a), ("hypotenuse", c)] {
        if v.is_zero() {
            return Err(Error::NonPositive { what, value: v.to_string() });
        }
    }
    let twice_a_squared = &Natural::from(2u64) * &(a * a);
    let c_squared = c * c;
    let mut report = DescentReport {
        a: a.clone(),
        c: c.clone(),
        twice_a_squared,
        c_squared,
        chain: Vec::new(),
        ending: DescentEnding::NotATriple,
    };
    if report.twice_a_squared != report.c_squared {
        return Ok(report);
    }
    // Unreachable for genuine naturals; the walk below is the
    // argument that makes it so.
    let mut t = Triple::new(a.clone(), a.clone(), c.clone())?;
    report.chain.push(t.clone());
    while t.c().is_even() {
        t = t.halve()?;
        report.chain.push(t.clone());
    }
    report.ending = DescentEnding::OddHypotenuse;
    Ok(report)
}

/// Exhaustive search for isoceles Pythagorean triples.
#[derive(Clone, Debug, Serialize)]
pub struct DescentSearch {
    /// Bound on both the leg and the hypotenuse.
    pub n_max: u64,
    /// Legs examined.
    pub candidates_checked: u64,
    /// Triples found; always empty.
    pub found: Vec<Triple>,
}

impl fmt::Display for DescentSearch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.found.is_empty() {
            write!(
                f,
                "no (a, a, c) Pythagorean triple with a, c <= {} ({} candidates checked)",
                self.n_max, self.candidates_checked
            )
        } else {
            write!(f, "impossible: found {:?}", self.found)
        }
    }
}

/// Checks every leg `a <= n_max` for a hypotenuse `c <= n_max` with
/// `2a^2 = c^2`.
pub fn descent_search(n_max: u64) -> DescentSearch {
    let mut search = DescentSearch { n_max, candidates_checked: 0, found: Vec::new() };
    for a in 1..=n_max {
        search.candidates_checked += 1;
        let s = 2 * u128::from(a) * u128::from(a);
        let c = s.sqrt();
        if c * c == s && c <= u128::from(n_max) {
            search.found.push(Triple::of(a, a, c as u64));
        }
    }
    search
}

/// A refutation of one alleged fraction for the square root of two.
#[derive(Clone, Debug, Serialize)]
pub struct Sqrt2Witness {
    /// Alleged numerator.
    pub p: Natural,
    /// Alleged denominator.
    pub q: Natural,
    /// `p^2`.
    pub p_squared: Natural,
    /// `2q^2`.
    pub twice_q_squared: Natural,
    /// Which side is larger: `"p^2"` or `"2q^2"`.
    pub larger: &'static str,
}

impl fmt::Display for Sqrt2Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "if sqrt(2) = {}/{} then 2 x {}^2 = {}^2; but {} and {} differ: {} is larger",
            self.p, self.q, self.q, self.p, self.twice_q_squared, self.p_squared, self.larger
        )
    }
}

/// Shows `2q^2 != p^2` by exact arithmetic.
pub fn sqrt2_irrationality_witness(p: &Natural, q: &Natural) -> Result<Sqrt2Witness> {
    for (what, v) in [("numerator", p), ("denominator", q)] {
        if v.is_zero() {
            return Err(Error::NonPositive { what, value: v.to_string() });
        }
    }
    let p_squared = p * p;
    let twice_q_squared = &Natural::from(2u64) * &(q * q);
    // 2q^2 = p^2 has no solution in positive naturals, so the two
    // squares always order strictly.
    let larger = if p_squared > twice_q_squared { "p^2" } else { "2q^2" };
    Ok(Sqrt2Witness { p: p.clone(), q: q.clone(), p_squared, twice_q_squared, larger })
}

/// Which pebble figure to draw.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PebbleKind {
    /// An odd square as four equal rectangles around a center pebble.
    OddSquare,
    /// An even square as four equal quadrants.
    EvenSquare,
    /// An even multitude of odd numbers, paired into even rectangles.
    SumOfOdds,
}

impl fmt::Display for PebbleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PebbleKind::OddSquare => "odd-square",
            PebbleKind::EvenSquare => "even-square",
            PebbleKind::SumOfOdds => "sum-of-odds",
        })
    }
}

impl FromStr for PebbleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<PebbleKind> {
        match s {
            "odd-square" => Ok(PebbleKind::OddSquare),
            "even-square" => Ok(PebbleKind::EvenSquare),
            "sum-of-odds" => Ok(PebbleKind::SumOfOdds),
            _ => Err(Error::Parse {
                input: s.into(),
                reason: "expected odd-square, even-square, or sum-of-odds".into(),
            }),
        }
    }
}

/// Figures larger than this do not render usefully in a terminal.
pub const PEBBLE_MAX: u64 = 99;

/// The odd value rows are made of in the sum-of-odds figure.
pub const SUM_OF_ODDS_VALUE: u64 = 11;

/// A rendered pebble figure with its counted identity.
#[derive(Clone, Debug, Serialize)]
pub struct PebbleFigure {
    /// The figure kind.
    pub kind: PebbleKind,
    /// Side length, or the multitude for the sum figure.
    pub n: u64,
    /// The text diagram.
    pub diagram: String,
    /// The identity the figure depicts, e.g. `25 = 4 x 6 + 1`.
    pub identity: String,
    /// Pebbles actually placed; always the left side of the identity.
    pub total: u64,
}

const UP: u8 = 1;
const DOWN: u8 = 2;
const LEFT: u8 = 4;
const RIGHT: u8 = 8;

/// Pebbles live at even (row, col); partition lines at the odd
/// coordinates between them.
struct Canvas {
    rows: usize,
    cols: usize,
    pebbles: Vec<bool>,
    lines: Vec<u8>,
}

impl Canvas {
    fn new(rows: usize, cols: usize) -> Canvas {
        Canvas { rows, cols, pebbles: vec![false; rows * cols], lines: vec![0; rows * cols] }
    }

    fn pebble(&mut self, r: usize, c: usize) {
        self.pebbles[r * self.cols + c] = true;
    }

    fn vertical(&mut self, col: usize, r0: usize, r1: usize) {
        for r in r0..=r1 {
            let mut m = 0;
            if r > r0 {
                m |= UP;
            }
            if r < r1 {
                m |= DOWN;
            }
            self.lines[r * self.cols + col] |= m;
        }
    }

    fn horizontal(&mut self, row: usize, c0: usize, c1: usize) {
        for c in c0..=c1 {
            let mut m = 0;
            if c > c0 {
                m |= LEFT;
            }
            if c < c1 {
                m |= RIGHT;
            }
            self.lines[row * self.cols + c] |= m;
        }
    }

    fn render(&self) -> String {
        let glyph = |m: u8| match (m & UP != 0, m & DOWN != 0, m & LEFT != 0, m & RIGHT != 0) {
            (_, _, false, false) => '│',
            (false, false, _, _) => '─',
            (true, false, true, false) => '┘',
            (true, false, false, true) => '└',
            (false, true, true, false) => '┐',
            (false, true, false, true) => '┌',
            (true, true, true, false) => '┤',
            (true, true, false, true) => '├',
            (true, false, true, true) => '┴',
            (false, true, true, true) => '┬',
            (true, true, true, true) => '┼',
        };
        let mut out = String::new();
        for r in 0..self.rows {
            let mut line = String::new();
            for c in 0..self.cols {
                let i = r * self.cols + c;
                if self.pebbles[i] {
                    line.push('∘');
                } else if self.lines[i] != 0 {
                    line.push(glyph(self.lines[i]));
                } else {
                    line.push(' ');
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    fn pebble_count(&self) -> u64 {
        self.pebbles.iter().filter(|&&p| p).count() as u64
    }
}

/// Draws one of the three figures and re-counts its identity from the
/// placed pebbles.
pub fn pebble_render(kind: PebbleKind, n: u64) -> Result<PebbleFigure> {
    if n == 0 {
        return Err(Error::NonPositive { what: "figure size", value: n.to_string() });
    }
    if n > PEBBLE_MAX {
        return Err(Error::RenderBudget { n: n.to_string(), max: PEBBLE_MAX });
    }
    match kind {
        PebbleKind::OddSquare => odd_square(n),
        PebbleKind::EvenSquare => even_square(n),
        PebbleKind::SumOfOdds => sum_of_odds(n),
    }
}

fn odd_square(n: u64) -> Result<PebbleFigure> {
    if n % 2 == 0 {
        return Err(Error::WrongParity {
            figure: "the odd square figure",
            expected: "an odd",
            n: n.to_string(),
        });
    }
    let side = n as usize;
    let k = side / 2;
    let span = 2 * side - 1;
    let mut canvas = Canvas::new(span, span);
    // Four k-by-(k+1) rectangles pinwheel around the center pebble.
    let mut pieces = [0u64; 4];
    for j in 0..side {
        for i in 0..side {
            canvas.pebble(2 * j, 2 * i);
            if (i, j) == (k, k) {
                continue;
            }
            let piece = if i < k && j <= k {
                0 // upper left, k wide and k+1 tall
            } else if j < k {
                1 // upper right, k+1 wide and k tall
            } else if i > k {
                2 // lower right
            } else {
                3 // lower left
            };
            pieces[piece] += 1;
        }
    }
    if k > 0 {
        canvas.vertical(2 * k - 1, 0, 2 * k + 1);
        canvas.vertical(2 * k + 1, 2 * k - 1, span - 1);
        canvas.horizontal(2 * k + 1, 0, 2 * k + 1);
        canvas.horizontal(2 * k - 1, 2 * k - 1, span - 1);
    }
    let quarter = pieces[0];
    let total = canvas.pebble_count();
    assert!(pieces.iter().all(|&p| p == quarter), "unequal pieces");
    assert_eq!(total, 4 * quarter + 1, "pebbles lost");
    assert_eq!(total, n * n, "not a square");
    Ok(PebbleFigure {
        kind: PebbleKind::OddSquare,
        n,
        diagram: canvas.render(),
        identity: format!("{} = 4 x {} + 1", total, quarter),
        total,
    })
}

fn even_square(n: u64) -> Result<PebbleFigure> {
    if n % 2 != 0 {
        return Err(Error::WrongParity {
            figure: "the even square figure",
            expected: "an even",
            n: n.to_string(),
        });
    }
    let side = n as usize;
    let m = side / 2;
    let span = 2 * side - 1;
    let mut canvas = Canvas::new(span, span);
    let mut quadrants = [0u64; 4];
    for j in 0..side {
        for i in 0..side {
            canvas.pebble(2 * j, 2 * i);
            quadrants[usize::from(i >= m) + 2 * usize::from(j >= m)] += 1;
        }
    }
    canvas.vertical(2 * m - 1, 0, span - 1);
    canvas.horizontal(2 * m - 1, 0, span - 1);
    let quarter = quadrants[0];
    let total = canvas.pebble_count();
    assert!(quadrants.iter().all(|&q| q == quarter), "unequal quadrants");
    assert_eq!(total, 4 * quarter, "pebbles lost");
    assert_eq!(total, n * n, "not a square");
    Ok(PebbleFigure {
        kind: PebbleKind::EvenSquare,
        n,
        diagram: canvas.render(),
        identity: format!("{} = 4 x {}", total, quarter),
        total,
    })
}

fn sum_of_odds(multitude: u64) -> Result<PebbleFigure> {
    if multitude % 2 != 0 {
        return Err(Error::WrongParity {
            figure: "the paired sum of odds",
            expected: "an even",
            n: multitude.to_string(),
        });
    }
    let v = SUM_OF_ODDS_VALUE as usize;
    let pairs = (multitude / 2) as usize;
    // Each pair of odd rows abuts into a 2-by-v rectangle, which is
    // even however odd v is; pairs are separated by blank lines.
    let rows = 3 * pairs - 1;
    let mut canvas = Canvas::new(rows, 2 * v - 1);
    for p in 0..pairs {
        for r in [3 * p, 3 * p + 1] {
            for i in 0..v {
                canvas.pebble(r, 2 * i);
            }
        }
    }
    let total = canvas.pebble_count();
    assert_eq!(total, multitude * SUM_OF_ODDS_VALUE, "pebbles lost");
    assert_eq!(total % 2, 0, "sum came out odd");
    let terms = vec![SUM_OF_ODDS_VALUE.to_string(); multitude as usize].join(" + ");
    Ok(PebbleFigure {
        kind: PebbleKind::SumOfOdds,
        n: multitude,
        diagram: canvas.render(),
        identity: format!("{} = {} (even)", terms, total),
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Natural {
        Natural::from(n)
    }

    #[test]
    fn pythagorean_predicate_matches_the_classic_examples() {
        assert!(Triple::of(3, 4, 5).is_pythagorean());
        assert!(Triple::of(8, 15, 17).is_pythagorean());
        assert!(!Triple::of(2, 3, 4).is_pythagorean());
        assert_eq!(
            Triple::new(nat(0), nat(1), nat(1)).unwrap_err().code(),
            "non-positive"
        );
    }

    #[test]
    fn smallest_hypotenuse_finds_both_leg_orders() {
        let t = find_triples(5);
        assert_eq!(t, vec![Triple::of(3, 4, 5), Triple::of(4, 3, 5)]);
        assert!(find_triples(4).is_empty());
    }

    #[test]
    fn triples_up_to_twenty() {
        let t = find_triples(20);
        assert_eq!(t.len(), 12);
        for (a, b, c) in [(3, 4, 5), (6, 8, 10), (5, 12, 13), (9, 12, 15), (8, 15, 17)] {
            assert!(t.contains(&Triple::of(a, b, c)), "missing ({a}, {b}, {c})");
            assert!(t.contains(&Triple::of(b, a, c)), "missing ({b}, {a}, {c})");
        }
        assert!(t.iter().all(Triple::is_pythagorean));
    }

    #[test]
    fn halving_even_triples() {
        assert_eq!(Triple::of(6, 8, 10).halve().unwrap(), Triple::of(3, 4, 5));
        assert_eq!(Triple::of(12, 16, 20).halve().unwrap(), Triple::of(6, 8, 10));
        assert_eq!(Triple::of(3, 4, 5).halve().unwrap_err().code(), "wrong-parity");
    }

    #[test]
    fn lemmas_hold_up_to_a_hundred() {
        let report = check_parity_lemmas(100);
        assert!(report.all_ok(), "{report}");
        assert_eq!(report.lemmas.len(), 6);
        // Lemma 1 and 2 share a hypothesis and therefore a count.
        assert_eq!(report.lemmas[0].applicable, report.lemmas[1].applicable);
        // Lemma 6 applies whenever any side is odd, which pairs with
        // lemma 5's all-even triples to cover everything.
        let all_even = report
            .triples
            .iter()
            .filter(|t| t.a().is_even() && t.b().is_even() && t.c().is_even())
            .count() as u64;
        assert_eq!(report.lemmas[5].applicable + all_even, report.triples.len() as u64);
    }

    #[test]
    fn a_vacuous_bound_passes() {
        let report = check_parity_lemmas(4);
        assert!(report.triples.is_empty());
        assert!(report.all_ok());
        assert!(report.lemmas.iter().all(|l| l.applicable == 0));
    }

    #[test]
    fn descent_reports_the_near_miss() {
        let r = incommensurability_descent(&nat(12), &nat(17)).unwrap();
        assert_eq!(r.twice_a_squared, nat(288));
        assert_eq!(r.c_squared, nat(289));
        assert_eq!(r.ending, DescentEnding::NotATriple);
        assert!(r.chain.is_empty());
        assert!(format!("{r}").contains("differ by 1"));

        let r = incommensurability_descent(&nat(5), &nat(7)).unwrap();
        assert_eq!(r.twice_a_squared, nat(50));
        assert_eq!(r.c_squared, nat(49));
        assert_eq!(incommensurability_descent(&nat(0), &nat(1)).unwrap_err().code(), "non-positive");
    }

    #[test]
    fn the_isoceles_search_comes_up_empty() {
        let s = descent_search(2000);
        assert!(s.found.is_empty());
        assert_eq!(s.candidates_checked, 2000);
        assert!(format!("{s}").contains("no (a, a, c)"));
    }

    #[test]
    fn sqrt2_witnesses_for_the_convergent_fractions() {
        let w = sqrt2_irrationality_witness(&nat(7), &nat(5)).unwrap();
        assert_eq!((w.p_squared, w.twice_q_squared), (nat(49), nat(50)));
        assert_eq!(w.larger, "2q^2");
        let w = sqrt2_irrationality_witness(&nat(17), &nat(12)).unwrap();
        assert_eq!((w.p_squared, w.twice_q_squared), (nat(289), nat(288)));
        assert_eq!(w.larger, "p^2");
        let w = sqrt2_irrationality_witness(&nat(1), &nat(1)).unwrap();
        assert_eq!((w.p_squared, w.twice_q_squared), (nat(1), nat(2)));
        assert_eq!(
            sqrt2_irrationality_witness(&nat(3), &nat(0)).unwrap_err().code(),
            "non-positive"
        );
    }

    #[test]
    fn the_five_by_five_pinwheel() {
        let fig = pebble_render(PebbleKind::OddSquare, 5).unwrap();
        assert_eq!(fig.identity, "25 = 4 x 6 + 1");
        assert_eq!(fig.total, 25);
        let expected = "\
∘ ∘│∘ ∘ ∘
   │
∘ ∘│∘ ∘ ∘
   ├─┬───
∘ ∘│∘│∘ ∘
───┴─┤
∘ ∘ ∘│∘ ∘
     │
∘ ∘ ∘│∘ ∘
";
        assert_eq!(fig.diagram, expected);
    }

    #[test]
    fn the_six_by_six_quadrants() {
        let fig = pebble_render(PebbleKind::EvenSquare, 6).unwrap();
        assert_eq!(fig.identity, "36 = 4 x 9");
        let expected = "\
∘ ∘ ∘│∘ ∘ ∘
     │
∘ ∘ ∘│∘ ∘ ∘
     │
∘ ∘ ∘│∘ ∘ ∘
─────┼─────
∘ ∘ ∘│∘ ∘ ∘
     │
∘ ∘ ∘│∘ ∘ ∘
     │
∘ ∘ ∘│∘ ∘ ∘
";
        assert_eq!(fig.diagram, expected);
    }

    #[test]
    fn degenerate_and_small_squares_still_count() {
        let one = pebble_render(PebbleKind::OddSquare, 1).unwrap();
        assert_eq!(one.identity, "1 = 4 x 0 + 1");
        assert_eq!(one.diagram, "∘\n");
        let three = pebble_render(PebbleKind::OddSquare, 3).unwrap();
        assert_eq!(three.identity, "9 = 4 x 2 + 1");
        let two = pebble_render(PebbleKind::EvenSquare, 2).unwrap();
        assert_eq!(two.identity, "4 = 4 x 1");
    }

    #[test]
    fn every_renderable_square_identity_checks_out() {
        for n in (1..=PEBBLE_MAX).step_by(2) {
            let fig = pebble_render(PebbleKind::OddSquare, n).unwrap();
            assert_eq!(fig.total, n * n);
            assert_eq!(fig.total % 4, 1);
        }
        for n in (2..=PEBBLE_MAX).step_by(2) {
            let fig = pebble_render(PebbleKind::EvenSquare, n).unwrap();
            assert_eq!(fig.total, n * n);
            assert_eq!(fig.total % 4, 0);
        }
    }

    #[test]
    fn paired_odds_sum_even() {
        let fig = pebble_render(PebbleKind::SumOfOdds, 4).unwrap();
        assert_eq!(fig.identity, "11 + 11 + 11 + 11 = 44 (even)");
        assert_eq!(fig.total, 44);
        let row = "∘ ∘ ∘ ∘ ∘ ∘ ∘ ∘ ∘ ∘ ∘";
        let expected = format!("{row}\n{row}\n\n{row}\n{row}\n");
        assert_eq!(fig.diagram, expected);
    }

    #[test]
    fn figure_domain_errors() {
        assert_eq!(pebble_render(PebbleKind::OddSquare, 6).unwrap_err().code(), "wrong-parity");
        assert_eq!(pebble_render(PebbleKind::EvenSquare, 5).unwrap_err().code(), "wrong-parity");
        assert_eq!(pebble_render(PebbleKind::SumOfOdds, 3).unwrap_err().code(), "wrong-parity");
        assert_eq!(pebble_render(PebbleKind::OddSquare, 101).unwrap_err().code(), "render-budget");
        assert_eq!(pebble_render(PebbleKind::OddSquare, 0).unwrap_err().code(), "non-positive");
        assert_eq!("odd-square".parse::<PebbleKind>().unwrap(), PebbleKind::OddSquare);
        assert!("pinwheel".parse::<PebbleKind>().is_err());
    }
}
