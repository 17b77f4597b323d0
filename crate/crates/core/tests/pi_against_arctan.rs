//! The polygon bounds judged by a route with no polygons in it: an
//! alternating arctangent series pins pi to better than 1e-36, and the
//! doubling tables must enclose that value at every scale.

use arithmos::completion::CanonRat;
use arithmos::exhaustion::{exhaustion_halving_check, pi_bounds, pi_bounds_from, pi_enclosure, StartPolygon};
use arithmos_testkit::machin_pi_interval;

fn tenth_power(n: u32) -> CanonRat {
    CanonRat::ratio(1, 10u64.pow(n))
}

#[test]
fn the_96_gon_brackets_the_arctan_value() {
    let rows = pi_bounds(4, 32).expect("four doublings");
    let enclosure = pi_enclosure(&rows);
    let oracle = machin_pi_interval();
    assert!(enclosure.lo() >= &"3141/1000".parse().expect("ratio"));
    assert!(enclosure.hi() <= &"3143/1000".parse().expect("ratio"));
    assert!(
        enclosure.lo() < oracle.lo() && oracle.hi() < enclosure.hi(),
        "oracle [{}, {}] escapes the polygon enclosure [{}, {}]",
        oracle.lo(),
        oracle.hi(),
        enclosure.lo(),
        enclosure.hi(),
    );
    // The oracle itself is sharp far past the 1e-8 the table is held to.
    assert!(oracle.width() < tenth_power(8));
}

#[test]
fn twenty_doublings_at_128_bits_close_below_1e10() {
    let rows = pi_bounds(20, 128).expect("twenty doublings");
    let last = rows.last().expect("nonempty");
    assert!(
        last.gap < tenth_power(10),
        "gap {} still above 1e-10",
        last.gap,
    );
    let oracle = machin_pi_interval();
    let enclosure = pi_enclosure(&rows);
    assert!(enclosure.lo() < oracle.lo() && oracle.hi() < enclosure.hi());
}

#[test]
fn the_square_start_also_encloses_the_oracle() {
    let rows = pi_bounds_from(StartPolygon::Square, 6, 64).expect("square start");
    let enclosure = pi_enclosure(&rows);
    let oracle = machin_pi_interval();
    assert!(enclosure.lo() < oracle.lo() && oracle.hi() < enclosure.hi());
}

#[test]
fn ten_doublings_more_than_halve_every_gap() {
    let rows = pi_bounds(10, 128).expect("ten doublings");
    let check = exhaustion_halving_check(&rows);
    assert_eq!(check.pairs, 10);
    assert!(check.failures.is_empty(), "failures: {:?}", check.failures);
}
