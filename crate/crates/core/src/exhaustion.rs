//! Squeezing a magnitude between things that can be counted.
//!
//! A circle's perimeter is bounded below by inscribed polygons and
//! above by circumscribed ones, and doubling the number of sides more
//! than halves the gap, so any claimed error bound is eventually
//! beaten. This module runs that argument numerically for the unit
//! circle: every row of the table carries rational semiperimeter
//! bounds with the true value strictly between them. The same squeeze
//! justifies the area ratio of two circles, the geometric series
//! behind the runner paradox, and the spiral of square-root
//! hypotenuses; the straightedge product needs no squeeze at all and
//! comes out exact.
//!
//! Doubling uses the semiperimeter mean recurrences (circumscribed:
//! harmonic mean of the current pair; inscribed: geometric mean of
//! the new circumscribed and old inscribed) rather than the nested
//! radical for the side length, which cancels catastrophically.
//! Antiquity ran the same numbers with hand-picked fractions such as
//! 265/153 below the square root of three; here directed-rounded
//! dyadic intervals play that role.

use std::fmt;

use serde::Serialize;

use crate::completion::CanonRat;
use crate::error::{Error, Result};
use crate::interval::{sqrt_interval, RationalInterval};
use crate::naturals::Natural;

/// Cap on polygon doublings; sides grow as `6 * 2^k`.
pub const MAX_DOUBLINGS: u32 = 64;

/// One row of the polygon table.
#[derive(Clone, Debug, Serialize)]
pub struct PolygonBoundsRow {
    /// Number of sides.
    pub sides: Natural,
    /// Inscribed semiperimeter `b_n`; its lower end is a strict lower
    /// bound for pi.
    pub inscribed_semiperimeter: RationalInterval,
    /// Circumscribed semiperimeter `a_n`; its upper end is a strict
    /// upper bound for pi.
    pub circumscribed_semiperimeter: RationalInterval,
    /// `hi(a_n) - lo(b_n)`, the certified enclosure width.
    pub gap: CanonRat,
}

/// Where the doubling starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StartPolygon {
    /// Hexagon: inscribed semiperimeter exactly 3, circumscribed the
    /// square root of 12.
    Hexagon,
    /// Square: circumscribed semiperimeter exactly 4, inscribed the
    /// square root of 8.
    Square,
}

impl StartPolygon {
    fn sides(self) -> u64 {
        match self {
            StartPolygon::Hexagon => 6,
            StartPolygon::Square => 4,
        }
    }
}

fn scheduled_bits(bits: u32, doublings: u32) -> u32 {
    bits.max(16 + 4 * doublings)
}

/// `doublings` rows of two-sided pi bounds from the hexagon.
pub fn pi_bounds(doublings: u32, bits: u32) -> Result<Vec<PolygonBoundsRow>> {
    pi_bounds_from(StartPolygon::Hexagon, doublings, bits)
}

/// As [`pi_bounds`], from a chosen start polygon.
///
/// Working precision is `max(bits, 16 + 4 * doublings)`; if rounding
/// slack ever breaks an ordering invariant the whole table is retried
/// once at double precision before giving up.
pub fn pi_bounds_from(
    start: StartPolygon,
    doublings: u32,
    bits: u32,
) -> Result<Vec<PolygonBoundsRow>> {
    if doublings > MAX_DOUBLINGS {
        return Err(Error::DoublingsLimit { requested: doublings, max: MAX_DOUBLINGS });
    }
    let scheduled = scheduled_bits(bits, doublings);
    match rows_at(start, doublings, scheduled) {
        Err(Error::PrecisionBudget { .. }) => rows_at(start, doublings, scheduled * 2),
        other => other,
    }
}

fn rows_at(start: StartPolygon, doublings: u32, bits: u32) -> Result<Vec<PolygonBoundsRow>> {
    let budget = || Error::PrecisionBudget { what: "doubling the polygon bounds" };
    let (mut inscribed, mut circumscribed) = match start {
        StartPolygon::Hexagon => (
            RationalInterval::point(CanonRat::ratio(3, 1)),
            sqrt_interval(&CanonRat::ratio(12, 1), bits)?,
        ),
        StartPolygon::Square => (
            sqrt_interval(&CanonRat::ratio(8, 1), bits)?,
            RationalInterval::point(CanonRat::ratio(4, 1)),
        ),
    };
    let mut sides = Natural::from(start.sides());
    let two = Natural::from(2u64);
    let mut rows = Vec::with_capacity(doublings as usize + 1);
    push_row(&mut rows, &sides, &inscribed, &circumscribed).ok_or_else(budget)?;
    for _ in 0..doublings {
        let next_circ = circumscribed.harmonic_mean(&inscribed)?.round_out(bits);
        let next_insc = (&next_circ * &inscribed).sqrt_outward(bits)?;
        // The true semiperimeters tighten monotonically; rounding
        // slack may not undo that, or the row is not trustworthy.
        if next_insc.lo() < inscribed.lo() || next_circ.hi() > circumscribed.hi() {
            return Err(budget());
        }
        inscribed = next_insc;
        circumscribed = next_circ;
        sides = &sides * &two;
        push_row(&mut rows, &sides, &inscribed, &circumscribed).ok_or_else(budget)?;
    }
    Ok(rows)
}

fn push_row(
    rows: &mut Vec<PolygonBoundsRow>,
    sides: &Natural,
    inscribed: &RationalInterval,
    circumscribed: &RationalInterval,
) -> Option<()> {
    // The sandwich itself: the inscribed lower end must stay strictly
    // below the circumscribed upper end.
    if inscribed.lo() >= circumscribed.hi() {
        return None;
    }
    rows.push(PolygonBoundsRow {
        sides: sides.clone(),
        inscribed_semiperimeter: inscribed.clone(),
        circumscribed_semiperimeter: circumscribed.clone(),
        gap: circumscribed.hi() - inscribed.lo(),
    });
    Some(())
}

/// The certified pi enclosure of a table's last row.
pub fn pi_enclosure(rows: &[PolygonBoundsRow]) -> RationalInterval {
    let last = rows.last().expect("at least the start row");
    RationalInterval::new(
        last.inscribed_semiperimeter.lo().clone(),
        last.circumscribed_semiperimeter.hi().clone(),
    )
}

/// `1/2 * h * p`, the area of a regular polygon with apothem `h` and
/// perimeter `p`.
pub fn polygon_area(h: &CanonRat, p: &CanonRat) -> Result<CanonRat> {
    for (what, v) in [("apothem", h), ("perimeter", p)] {
        if !v.is_positive() {
            return Err(Error::NonPositive { what, value: v.to_string() });
        }
    }
    Ok(&CanonRat::ratio(1, 2) * &(h * p))
}

/// Two-sided bounds on the area of a circle of radius `r`.
pub fn circle_area_bounds(r: &CanonRat, doublings: u32, bits: u32) -> Result<RationalInterval> {
    if !r.is_positive() {
        return Err(Error::NonPositive { what: "radius", value: r.to_string() });
    }
    let rows = pi_bounds(doublings, bits)?;
    let area = pi_enclosure(&rows).scale(&(r * r));
    Ok(area.round_out(scheduled_bits(bits, doublings)))
}

/// Outcome of checking two circle areas against the squared ratio of
/// their diameters.
#[derive(Clone, Debug, Serialize)]
pub struct AreaRatioCheck {
    /// First radius.
    pub r1: CanonRat,
    /// Second radius.
    pub r2: CanonRat,
    /// Interval certainly containing `area(r1) / area(r2)`.
    pub ratio: RationalInterval,
    /// `(d1/d2)^2`, computed exactly.
    pub expected: CanonRat,
    /// Whether the interval contains the exact ratio.
    pub contains: bool,
}

impl fmt::Display for AreaRatioCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "area({}) : area({}) lies in {}; (d1/d2)^2 = {} is {}",
            self.r1,
            self.r2,
            self.ratio,
            self.expected,
            if self.contains { "inside" } else { "OUTSIDE" }
        )
    }
}

/// Checks that circle areas stand in the squared ratio of their
/// diameters.
pub fn area_ratio_check(
    r1: &CanonRat,
    r2: &CanonRat,
    doublings: u32,
    bits: u32,
) -> Result<AreaRatioCheck> {
    let a1 = circle_area_bounds(r1, doublings, bits)?;
    let a2 = circle_area_bounds(r2, doublings, bits)?;
    let ratio = &a1 * &a2.reciprocal()?;
    let expected = (r1 * r1).div(&(r2 * r2))?;
    let contains = ratio.contains(&expected);
    Ok(AreaRatioCheck { r1: r1.clone(), r2: r2.clone(), ratio, expected, contains })
}

/// One consecutive pair that failed the halving test.
#[derive(Clone, Debug, Serialize)]
pub struct HalvingFailure {
    /// Sides of the earlier row.
    pub from_sides: Natural,
    /// Sides of the later row.
    pub to_sides: Natural,
    /// Gap of the earlier row.
    pub gap_before: CanonRat,
    /// Gap of the later row; not below half the earlier gap.
    pub gap_after: CanonRat,
}

/// Result of checking that each doubling beats half the previous gap.
#[derive(Clone, Debug, Serialize)]
pub struct HalvingCheck {
    /// Consecutive pairs compared.
    pub pairs: u64,
    /// Pairs that failed; empty on success.
    pub failures: Vec<HalvingFailure>,
}

impl HalvingCheck {
    /// True when every compared pair more than halved the gap.
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for HalvingCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "gap more than halved at each of {} doublings", self.pairs)
        } else {
            for fail in &self.failures {
                writeln!(
                    f,
                    "{} -> {} sides: gap {} -> {}, not below half",
                    fail.from_sides, fail.to_sides, fail.gap_before, fail.gap_after
                )?;
            }
            write!(f, "{} of {} pairs failed", self.failures.len(), self.pairs)
        }
    }
}

/// Verifies `gap(k+1) < gap(k) / 2` for each consecutive pair of
/// rows. A single row passes vacuously.
pub fn exhaustion_halving_check(rows: &[PolygonBoundsRow]) -> HalvingCheck {
    let mut check = HalvingCheck { pairs: 0, failures: Vec::new() };
    for pair in rows.windows(2) {
        check.pairs += 1;
        let half_before = &pair[0].gap * &CanonRat::ratio(1, 2);
        if pair[1].gap >= half_before {
            check.failures.push(HalvingFailure {
                from_sides: pair[0].sides.clone(),
                to_sides: pair[1].sides.clone(),
                gap_before: pair[0].gap.clone(),
                gap_after: pair[1].gap.clone(),
            });
        }
    }
    check
}

/// One row of the runner's geometric series.
#[derive(Clone, Debug, Serialize)]
pub struct ZenoRow {
    /// Step index, from 1.
    pub n: u32,
    /// The step `a_n = 1/2^n`.
    pub a_n: CanonRat,
    /// The partial sum `t_n = (2^n - 1)/2^n`.
    pub t_n: CanonRat,
}

/// Exact partial sums of `1/2 + 1/4 + ...` up to `n_max` terms.
pub fn zeno_table(n_max: u32) -> Vec<ZenoRow> {
    let mut rows = Vec::with_capacity(n_max as usize);
    let mut t = CanonRat::zero();
    for n in 1..=n_max {
        let a = CanonRat::pow2_inv(n);
        t = &t + &a;
        rows.push(ZenoRow { n, a_n: a, t_n: t.clone() });
    }
    rows
}

/// A labeled point of the straightedge construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledPoint {
    /// Point name.
    pub label: char,
    /// Abscissa.
    pub x: CanonRat,
    /// Ordinate.
    pub y: CanonRat,
}

impl LabeledPoint {
    fn new(label: char, x: CanonRat, y: CanonRat) -> LabeledPoint {
        LabeledPoint { label, x, y }
    }
}

impl fmt::Display for LabeledPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ({}, {})", self.label, self.x, self.y)
    }
}

/// The straightedge product construction, in exact coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct RulerProduct {
    /// First factor, laid out along the baseline as `AB`.
    pub a: CanonRat,
    /// Second factor, laid out along the oblique ray as `AE`.
    pub b: CanonRat,
    /// `|AD| = a * b`.
    pub length: CanonRat,
    /// A, B, C, E, D.
    pub points: Vec<LabeledPoint>,
    /// Exact verification of `AE x AB = AC x AD`.
    pub ratio_verified: bool,
}

impl fmt::Display for RulerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.points {
            writeln!(f, "{p}")?;
        }
        write!(f, "AD = {} x {} = {}", self.a, self.b, self.length)
    }
}

/// Multiplies two lengths with a straightedge: mark `B` at distance
/// `a` on the baseline and `C` (unit) and `E` (distance `b`) on an
/// oblique ray, then draw the line through `E` parallel to `CB`; it
/// cuts the baseline at `D` with `AD = ab`, by similar triangles.
///
/// The oblique ray is taken along slope 1 and measured by its
/// parameter rather than by Euclidean length; the stretch factor is
/// shared by `AC` and `AE`, so it cancels from every ratio.
pub fn ruler_compass_product(a: &CanonRat, b: &CanonRat) -> Result<RulerProduct> {
    for (what, v) in [("first factor", a), ("second factor", b)] {
        if !v.is_positive() {
            return Err(Error::NonPositive { what, value: v.to_string() });
        }
    }
    let zero = CanonRat::zero;
    let pt_a = LabeledPoint::new('A', zero(), zero());
    let pt_b = LabeledPoint::new('B', a.clone(), zero());
    let pt_c = LabeledPoint::new('C', CanonRat::one(), CanonRat::one());
    let pt_e = LabeledPoint::new('E', b.clone(), b.clone());
    // Line through E with direction B - C meets the baseline where
    // the parameter cancels E's height.
    let t = pt_e.y.div(&(&pt_c.y - &pt_b.y))?;
    let dx = &(&pt_b.x - &pt_c.x) * &t;
    let pt_d = LabeledPoint::new('D', &pt_e.x + &dx, zero());
    let length = pt_d.x.clone();
    let ratio_verified = &pt_e.x * &pt_b.x == &pt_c.x * &pt_d.x;
    Ok(RulerProduct {
        a: a.clone(),
        b: b.clone(),
        length,
        points: vec![pt_a, pt_b, pt_c, pt_e, pt_d],
        ratio_verified,
    })
}

/// One triangle of the square-root spiral.
#[derive(Clone, Debug, Serialize)]
pub struct TheodorusStep {
    /// Step index, from 1; the hypotenuse brackets the square root of
    /// `k + 1`.
    pub k: u32,
    /// Vertex abscissa.
    pub x: RationalInterval,
    /// Vertex ordinate.
    pub y: RationalInterval,
    /// Distance of the vertex from the origin.
    pub hypotenuse: RationalInterval,
}

/// Unit-leg right triangles stacked on each other's hypotenuses,
/// starting from (1, 0). Step `k` rotates the running vertex by a
/// unit leg, so its hypotenuse interval brackets the square root of
/// `k + 1`, verified exactly by squaring the endpoints.
pub fn theodorus_vertices(k_max: u32, bits: u32) -> Result<Vec<TheodorusStep>> {
    if k_max == 0 {
        return Err(Error::NonPositive { what: "step count", value: "0".into() });
    }
    let scheduled = bits.max(32);
    match theodorus_at(k_max, scheduled) {
        Err(Error::PrecisionBudget { .. }) => theodorus_at(k_max, scheduled * 2),
        other => other,
    }
}

fn theodorus_at(k_max: u32, bits: u32) -> Result<Vec<TheodorusStep>> {
    let mut x = RationalInterval::point(CanonRat::one());
    let mut y = RationalInterval::point(CanonRat::zero());
    let mut steps = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        let norm = (&x.square() + &y.square()).sqrt_outward(bits)?;
        let inv_norm = norm.reciprocal().map_err(|_| Error::PrecisionBudget {
            what: "separating a spiral hypotenuse from zero",
        })?;
        // Unit leg perpendicular to the current hypotenuse.
        let next_x = &x - &(&y * &inv_norm);
        let next_y = &y + &(&x * &inv_norm);
        let hypotenuse = (&next_x.square() + &next_y.square()).sqrt_outward(bits)?;
        let target = CanonRat::ratio(i64::from(k) + 1, 1);
        if hypotenuse.lo() * hypotenuse.lo() > target || hypotenuse.hi() * hypotenuse.hi() < target
        {
            return Err(Error::PrecisionBudget { what: "bracketing a spiral hypotenuse" });
        }
        steps.push(TheodorusStep {
            k,
            x: next_x.clone(),
            y: next_y.clone(),
            hypotenuse: hypotenuse.round_out(bits),
        });
        x = next_x.round_out(bits);
        y = next_y.round_out(bits);
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: u64) -> CanonRat {
        CanonRat::ratio(n, d)
    }

    #[test]
    fn the_hexagon_row_is_exact_below_and_rooted_above() {
        let rows = pi_bounds(0, 32).unwrap();
        assert_eq!(rows.len(), 1);
        let row = &rows[0];
        assert_eq!(row.sides, Natural::from(6u64));
        assert_eq!(row.inscribed_semiperimeter, RationalInterval::point(r(3, 1)));
        let circ = &row.circumscribed_semiperimeter;
        assert!(circ.lo() * circ.lo() <= r(12, 1));
        assert!(circ.hi() * circ.hi() >= r(12, 1));
        assert!(circ.lo() > &r(34641, 10000));
        assert!(circ.hi() < &r(34642, 10000));
    }

    #[test]
    fn four_doublings_reach_the_ninety_six_gon_bounds() {
        let rows = pi_bounds(4, 32).unwrap();
        assert_eq!(rows.len(), 5);
        let last = rows.last().unwrap();
        assert_eq!(last.sides, Natural::from(96u64));
        assert!(last.inscribed_semiperimeter.lo() >= &r(31410, 10000));
        assert!(last.circumscribed_semiperimeter.hi() <= &r(31428, 10000));
        // 3.14103 and 3.14271 to five places.
        assert!(last.inscribed_semiperimeter.lo() > &r(314103, 100000));
        assert!(last.inscribed_semiperimeter.lo() < &r(314104, 100000));
        assert!(last.circumscribed_semiperimeter.hi() < &r(314272, 100000));
        assert!(last.circumscribed_semiperimeter.hi() > &r(314270, 100000));
    }

    #[test]
    fn bounds_tighten_monotonically() {
        let rows = pi_bounds(8, 64).unwrap();
        for pair in rows.windows(2) {
            assert!(
                pair[1].inscribed_semiperimeter.lo() >= pair[0].inscribed_semiperimeter.lo()
            );
            assert!(
                pair[1].circumscribed_semiperimeter.hi()
                    <= pair[0].circumscribed_semiperimeter.hi()
            );
            assert!(pair[1].gap < pair[0].gap);
        }
    }

    #[test]
    fn the_square_start_runs_the_classic_proof_shape() {
        let rows = pi_bounds_from(StartPolygon::Square, 4, 32).unwrap();
        assert_eq!(rows[0].circumscribed_semiperimeter, RationalInterval::point(r(4, 1)));
        let last = rows.last().unwrap();
        assert_eq!(last.sides, Natural::from(64u64));
        assert!(last.inscribed_semiperimeter.lo() > &r(3, 1));
        assert!(last.circumscribed_semiperimeter.hi() < &r(315, 100));
    }

    #[test]
    fn the_doubling_cap_is_enforced() {
        assert_eq!(pi_bounds(65, 16).unwrap_err().code(), "doublings-limit");
    }

    #[test]
    fn halving_check_on_real_rows_and_degenerate_input() {
        let rows = pi_bounds(10, 128).unwrap();
        let check = exhaustion_halving_check(&rows);
        assert!(check.ok(), "{check}");
        assert_eq!(check.pairs, 10);
        let single = exhaustion_halving_check(&rows[..1]);
        assert!(single.ok());
        assert_eq!(single.pairs, 0);
    }

    #[test]
    fn polygon_area_halves_the_product() {
        assert_eq!(polygon_area(&r(1, 1), &r(8, 1)).unwrap(), r(4, 1));
        assert_eq!(polygon_area(&r(3, 2), &r(4, 3)).unwrap(), r(1, 1));
        assert_eq!(polygon_area(&r(0, 1), &r(8, 1)).unwrap_err().code(), "non-positive");
    }

    #[test]
    fn circle_areas_scale_with_the_squared_radius() {
        let unit = circle_area_bounds(&r(1, 1), 4, 32).unwrap();
        assert!(unit.contains(&r(314159, 100000)));
        let double = circle_area_bounds(&r(2, 1), 4, 32).unwrap();
        assert!(double.contains(&r(1256637, 100000)));
        let half = circle_area_bounds(&r(1, 2), 4, 32).unwrap();
        assert!(half.contains(&r(785398, 1000000)));
        assert_eq!(circle_area_bounds(&r(-1, 1), 4, 32).unwrap_err().code(), "non-positive");
    }

    #[test]
    fn area_ratios_match_squared_diameter_ratios() {
        for (r1, r2, num, den) in [(1, 2, 1u64, 4u64), (3, 5, 9, 25), (7, 7, 1, 1)] {
            let check = area_ratio_check(&r(r1, 1), &r(r2, 1), 4, 32).unwrap();
            assert_eq!(check.expected, CanonRat::ratio(num as i64, den));
            assert!(check.contains, "{check}");
        }
    }

    #[test]
    fn zeno_partial_sums_are_exact() {
        let rows = zeno_table(20);
        assert_eq!(rows[2].t_n, r(7, 8));
        assert_eq!(rows[0].t_n, r(1, 2));
        assert_eq!(rows[19].t_n, r(1048575, 1048576));
        for row in &rows {
            assert_eq!(&r(1, 1) - &row.t_n, CanonRat::pow2_inv(row.n));
            assert!(row.t_n < r(1, 1));
        }
        for pair in rows.windows(2) {
            assert_eq!(pair[1].t_n, &pair[0].t_n + &pair[1].a_n);
        }
    }

    #[test]
    fn the_straightedge_product_is_exact() {
        let p = ruler_compass_product(&r(3, 2), &r(4, 3)).unwrap();
        assert_eq!(p.length, r(2, 1));
        assert!(p.ratio_verified);
        let labels: Vec<char> = p.points.iter().map(|q| q.label).collect();
        assert_eq!(labels, vec!['A', 'B', 'C', 'E', 'D']);
        assert_eq!(p.points[4], LabeledPoint::new('D', r(2, 1), r(0, 1)));

        assert_eq!(ruler_compass_product(&r(1, 1), &r(7, 3)).unwrap().length, r(7, 3));
        assert_eq!(ruler_compass_product(&r(17, 3), &r(3, 17)).unwrap().length, r(1, 1));
        assert_eq!(
            ruler_compass_product(&r(0, 1), &r(1, 1)).unwrap_err().code(),
            "non-positive"
        );
    }

    #[test]
    fn the_spiral_brackets_every_square_root() {
        let steps = theodorus_vertices(16, 64).unwrap();
        assert_eq!(steps.len(), 16);
        for step in &steps {
            let target = r(i64::from(step.k) + 1, 1);
            let h = &step.hypotenuse;
            assert!(h.lo() * h.lo() <= target, "step {}", step.k);
            assert!(h.hi() * h.hi() >= target, "step {}", step.k);
        }
        // The second vertex is exact: one unit right, one unit up.
        assert_eq!(steps[0].x, RationalInterval::point(r(1, 1)));
        assert_eq!(steps[0].y, RationalInterval::point(r(1, 1)));
        // Step 3 brackets the exact root 2.
        assert!(steps[2].hypotenuse.contains(&r(2, 1)));
        assert_eq!(theodorus_vertices(0, 64).unwrap_err().code(), "non-positive");
    }
}
