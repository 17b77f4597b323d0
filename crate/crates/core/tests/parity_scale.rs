//! The parity lemmas and the descent claim at survey scale: every
//! brute-forced triple up to hypotenuse 500, every isoceles candidate
//! up to 2000, and the square-residue pattern behind both.

use arithmos::parity::{check_parity_lemmas, descent_search, sqrt2_irrationality_witness};
use arithmos::Natural;

#[test]
fn all_six_lemmas_hold_up_to_hypotenuse_500() {
    let report = check_parity_lemmas(500);
    assert_eq!(report.lemmas.len(), 6);
    for l in &report.lemmas {
        assert!(l.applicable > 0, "lemma {} never applied; bound too small", l.lemma);
        assert!(
            l.violations.is_empty(),
            "lemma {} violated by {:?}",
            l.lemma,
            l.violations,
        );
    }
    assert!(report.all_ok());
    assert!(report.triples.len() > 500, "survey unexpectedly thin");
}

#[test]
fn no_isoceles_triple_below_2000() {
    let search = descent_search(2000);
    assert_eq!(search.candidates_checked, 2000);
    assert!(search.found.is_empty(), "found {:?}", search.found);
}

#[test]
fn squares_leave_remainder_0_or_1_mod_4() {
    for n in 0u64..=500 {
        let r = (n * n) % 4;
        assert!(r == 0 || r == 1, "n = {n} gives {r}");
        // The two residues follow parity exactly.
        if n % 2 == 0 {
            assert_eq!(r, 0);
        } else {
            assert_eq!(r, 1);
        }
    }
}

#[test]
fn the_sqrt2_witness_rejects_lowest_terms_candidates() {
    // 99/70 and 1393/985 are classic near-misses; the refutation names
    // the parity pinch in each case.
    for (p, q) in [(99u64, 70u64), (1393, 985), (3, 2)] {
        let w = sqrt2_irrationality_witness(&Natural::from(p), &Natural::from(q))
            .expect("positive candidate");
        assert_ne!(w.p_squared, w.twice_q_squared, "{p}/{q} cannot square to 2");
    }
}
