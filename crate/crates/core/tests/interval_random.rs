//! Interval arithmetic must never lose the exact answer: for point
//! inputs widened by outward rounding, the pure-rational result stays
//! inside through every operation.

use arithmos::completion::CanonRat;
use arithmos::interval::{sqrt_interval, RationalInterval};
use proptest::prelude::*;

fn ratio(num: i64, den: u64) -> CanonRat {
    CanonRat::ratio(num, den.max(1))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn arithmetic_keeps_the_exact_value_inside(
        an in -500i64..=500, ad in 1u64..=500,
        bn in -500i64..=500, bd in 1u64..=500,
        bits in 4u32..64,
    ) {
        let a = ratio(an, ad);
        let b = ratio(bn, bd);
        let ia = RationalInterval::point(a.clone()).round_out(bits);
        let ib = RationalInterval::point(b.clone()).round_out(bits);
        prop_assert!((&ia + &ib).contains(&(&a + &b)));
        prop_assert!((&ia - &ib).contains(&(&a - &b)));
        prop_assert!((&ia * &ib).contains(&(&a * &b)));
        let scaled = ia.scale(&b);
        prop_assert!(scaled.contains(&(&a * &b)));
        let squared = ia.square();
        prop_assert!(squared.contains(&(&a * &a)));
    }

    #[test]
    fn reciprocal_keeps_the_exact_value_inside(
        an in 1i64..=500, ad in 1u64..=500, bits in 10u32..64,
    ) {
        // Keep the interval clear of zero: positive point, outward
        // rounding by at most 2^-10 cannot reach it.
        let a = ratio(an + 1, ad);
        let ia = RationalInterval::point(a.clone()).round_out(bits);
        let r = ia.reciprocal().expect("separated from zero");
        prop_assert!(r.contains(&a.inv().expect("positive")));
    }

    #[test]
    fn sqrt_brackets_the_perfect_square_root(
        n in 1i64..=300, d in 1u64..=300, bits in 8u32..64,
    ) {
        let w = ratio(n, d);
        let square = &w * &w;
        let root = sqrt_interval(&square, bits).expect("nonnegative");
        prop_assert!(root.contains(&w), "sqrt({square}) lost {w}");
        prop_assert!(root.width() <= CanonRat::pow2_inv(bits));
    }
}
