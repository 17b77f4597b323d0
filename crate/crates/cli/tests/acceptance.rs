//! The acceptance gate. Each test runs one numbered criterion at its
//! stated tolerance and prints exactly one verdict line; run with
//! `cargo test --test acceptance -- --nocapture` to see them all.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use arithmos::anthyphairesis::{cf_expand, convergent_denominators, convergents, gcd, surd_cf};
use arithmos::completion::laws::{run_suite, LawConfig};
use arithmos::completion::CanonRat;
use arithmos::exhaustion::{
    area_ratio_check, exhaustion_halving_check, pi_bounds, pi_enclosure, ruler_compass_product,
    zeno_table,
};
use arithmos::interval::sqrt_interval;
use arithmos::parity::{check_parity_lemmas, descent_search};
use arithmos::reals::{real_compare, real_from_rational, zeno_stream, Comparison};
use arithmos::Natural;
use arithmos_testkit::{machin_pi_interval, random_rational_tree, run_bin};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn criterion(n: u32, body: impl FnOnce() -> String) {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(detail) => println!("ACCEPTANCE {n}: PASS \u{2014} {detail}"),
        Err(cause) => {
            let msg = cause
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| cause.downcast_ref::<&str>().copied())
                .unwrap_or("panic without message");
            println!("ACCEPTANCE {n}: FAIL \u{2014} {msg}");
            panic!("criterion {n} failed");
        }
    }
}

fn arithmos_bin(args: &[&str]) -> String {
    let run = run_bin(env!("CARGO_BIN_EXE_arithmos"), args);
    assert_eq!(run.status, 0, "args {args:?} stderr: {}", run.stderr);
    run.stdout
}

fn rat(s: &str) -> CanonRat {
    s.parse().unwrap_or_else(|e| panic!("bad ratio literal {s}: {e}"))
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1000.0
}

#[test]
fn acceptance_01_gcd_and_cf_transcripts() {
    criterion(1, || {
        let quartet = [
            ("17/3", "[5; 1, 2]"),
            ("136/6", "[22; 1, 2]"),
            ("12/5", "[2; 2, 2]"),
            ("22/6", "[3; 1, 2]"),
        ];
        let mut slowest = Duration::ZERO;
        for (input, want) in quartet {
            let r = rat(input);
            let (p, q) = (r.numerator().abs(), r.denominator().clone());
            cf_expand(&p, &q).expect("warm");
            let t = Instant::now();
            let e = cf_expand(&p, &q).expect("expansion");
            let took = t.elapsed();
            slowest = slowest.max(took);
            assert_eq!(e.to_string(), want, "cf {input}");
            assert!(took < Duration::from_millis(1), "cf {input} took {took:?}");
            assert_eq!(arithmos_bin(&["cf", input]), format!("{want}\n"));
        }
        let a = Natural::from(136u64);
        let b = Natural::from(6u64);
        gcd(&a, &b).expect("warm");
        let t = Instant::now();
        let trace = gcd(&a, &b).expect("trace");
        let took = t.elapsed();
        slowest = slowest.max(took);
        assert!(took < Duration::from_millis(1), "gcd took {took:?}");
        assert_eq!(trace.gcd, Natural::from(2u64));
        assert_eq!(trace.rows.len(), 3);
        assert_eq!(
            arithmos_bin(&["gcd", "136", "6", "--trace"]),
            "136 = 22 x 6 + 4\n  6 =  1 x 4 + (2)\n  4 =  2 x 2 + 0\ngcd(136, 6) = 2\n",
        );
        format!(
            "four cf tables and the three-row gcd trace exact; slowest call {} us",
            slowest.as_micros().max(1)
        )
    });
}

#[test]
fn acceptance_02_sqrt2_program() {
    criterion(2, || {
        let surd = surd_cf(&Natural::from(2u64)).expect("sqrt 2");
        assert_eq!(surd.expansion.quotients(), &[Natural::one()]);
        assert_eq!(
            surd.expansion.periodic_tail().expect("periodic"),
            &[Natural::from(2u64)],
        );
        let cs = convergents(&surd.expansion, 6).expect("convergents");
        let want = ["1/1", "3/2", "7/5", "17/12", "41/29"].map(rat);
        assert_eq!(&cs[..5], &want[..]);
        let qs = convergent_denominators(&surd.expansion, 6).expect("denominators");
        let root = sqrt_interval(&rat("2"), 64).expect("nonnegative");
        for k in 0..5 {
            let worst =
                (root.lo() - &cs[k]).abs().max((root.hi() - &cs[k]).abs());
            let bound = (&rat(&qs[k].to_string()) * &rat(&qs[k + 1].to_string()))
                .inv()
                .expect("positive");
            assert!(worst < bound, "gap law failed at convergent {k}");
        }
        "head [1], period [2], five exact convergents, gap law at 64 bits".into()
    });
}

#[test]
fn acceptance_03_pi_exhaustion() {
    criterion(3, || {
        let t = Instant::now();
        let rows = pi_bounds(4, 32).expect("96-gon");
        let enclosure = pi_enclosure(&rows);
        assert!(enclosure.lo() >= &rat("31410/10000"), "L = {}", enclosure.lo());
        assert!(enclosure.hi() <= &rat("31428/10000"), "U = {}", enclosure.hi());
        let oracle = machin_pi_interval();
        assert!(oracle.width() < rat("1/100000000"));
        assert!(
            enclosure.lo() < oracle.lo() && oracle.hi() < enclosure.hi(),
            "arctan value escapes the polygon bounds",
        );
        let fine = pi_bounds(20, 128).expect("fine table");
        let gap = &fine.last().expect("rows").gap;
        assert!(gap < &rat("1/10000000000"), "gap {gap}");
        let took = t.elapsed();
        assert!(took < Duration::from_secs(1), "took {took:?}");
        format!(
            "96-gon holds 3.1410 < pi < 3.1428 around the arctan value; 20 doublings gap at most {}; {:.0} ms",
            arithmos::completion::decimal_up(gap, 12),
            millis(took)
        )
    });
}

#[test]
fn acceptance_04_halving_lemma() {
    criterion(4, || {
        let rows = pi_bounds(10, 128).expect("ten doublings");
        let check = exhaustion_halving_check(&rows);
        assert_eq!(check.pairs, 10);
        assert!(check.failures.is_empty(), "{} failures", check.failures.len());
        "10 consecutive doublings each more than halve the gap, zero violations".into()
    });
}

#[test]
fn acceptance_05_parity_descent() {
    criterion(5, || {
        let t = Instant::now();
        let report = check_parity_lemmas(500);
        assert_eq!(report.lemmas.len(), 6);
        for l in &report.lemmas {
            assert!(l.violations.is_empty(), "lemma {} violated", l.lemma);
        }
        let search = descent_search(2000);
        assert!(search.found.is_empty(), "isoceles triple found: {:?}", search.found);
        for n in 0u64..=500 {
            assert!(matches!((n * n) % 4, 0 | 1), "n = {n}");
        }
        let took = t.elapsed();
        assert!(took < Duration::from_secs(5), "took {took:?}");
        format!(
            "{} triples meet all six lemmas; no (a, a, c) to 2000; squares mod 4 in {{0, 1}}; {:.0} ms",
            report.triples.len(),
            millis(took)
        )
    });
}

#[test]
fn acceptance_06_algebra_laws() {
    criterion(6, || {
        let cfg = LawConfig { seed: 0, samples: 1000, bound: 10_000 };
        let mut total = 0;
        for suite in ["ccs", "group", "field", "ordered-field"] {
            let report = run_suite(suite, &cfg).expect("known suite");
            assert!(report.all_ok(), "suite {suite} deviated");
            total += report.checks.len();
        }
        let group = run_suite("group", &cfg).expect("group suite");
        let table = [
            ("(N+, +)", "an identity element exists", false),
            ("(N+, +)", "every element has an inverse", false),
            ("(N+, x)", "an identity element exists", true),
            ("(N+, x)", "every element has an inverse", false),
            ("(Z, +)", "an identity element exists", true),
            ("(Z, +)", "every element has an inverse", true),
            ("(Q+, x)", "an identity element exists", true),
            ("(Q+, x)", "every element has an inverse", true),
        ];
        for (subject, name, expected) in table {
            let check = group
                .checks
                .iter()
                .find(|c| c.subject == subject && c.name == name)
                .unwrap_or_else(|| panic!("missing table entry {subject} / {name}"));
            assert_eq!(check.expected, expected, "{subject}: wrong expectation");
            assert_eq!(check.observed, expected, "{subject}: observation flipped");
        }
        format!("{total} checks across four suites at seed 0, presence/absence table as printed")
    });
}

#[test]
fn acceptance_07_zeno() {
    criterion(7, || {
        let rows = zeno_table(64);
        assert_eq!(rows[19].t_n, rat("1048575/1048576"));
        for row in &rows {
            let left = &CanonRat::one() - &row.t_n;
            assert_eq!(left, CanonRat::pow2_inv(row.n), "n = {}", row.n);
        }
        let walk = zeno_stream();
        let one = real_from_rational(CanonRat::one());
        assert_eq!(
            real_compare(&walk, &one, 16).expect("compare"),
            Comparison::UndecidedAtBudget,
        );
        let below = real_from_rational(&CanonRat::one() - &CanonRat::pow2_inv(8));
        assert_eq!(
            real_compare(&walk, &below, 16).expect("compare"),
            Comparison::Greater,
        );
        "t_20 exact, 1 - t_n = 2^-n through n = 64, limit undecided against 1 and above 1 - 2^-8".into()
    });
}

#[test]
fn acceptance_08_reals_properties() {
    criterion(8, || {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for i in 0..1000 {
            let sample = random_rational_tree(&mut rng, 5);
            for k in [8u32, 32, 128] {
                let iv = sample.stream.approx(k).unwrap_or_else(|e| {
                    panic!("tree {i} ({}) failed at {k} bits: {e}", sample.shape)
                });
                assert!(iv.width() <= CanonRat::pow2_inv(k), "tree {i} too wide at {k}");
                assert!(iv.contains(&sample.exact), "tree {i} lost its value at {k}");
            }
        }
        let out = arithmos_bin(&["real", "between", "sqrt:2", "3/2"]);
        let r = rat(out.trim());
        assert!(&r * &r > rat("2"), "between result {r} squares below 2");
        assert!(r < rat("3/2"), "between result {r} not below 3/2");
        assert_eq!(arithmos_bin(&["real", "archimedean", "2", "7"]), "4\n");
        format!("1000 trees within 2^-k at k in {{8, 32, 128}}; between gave {r}; witness 4")
    });
}

#[test]
fn acceptance_09_area_ratios() {
    criterion(9, || {
        let t = Instant::now();
        for (r1, r2) in [("1", "2"), ("3", "5"), ("2", "3")] {
            let check = area_ratio_check(&rat(r1), &rat(r2), 4, 32).expect("radii");
            assert!(check.contains, "({r1}, {r2}) expected {} outside", check.expected);
        }
        let took = t.elapsed();
        assert!(took < Duration::from_secs(1), "took {took:?}");
        format!("three squared-diameter ratios inside their area intervals; {:.0} ms", millis(took))
    });
}

#[test]
fn acceptance_10_ruler_compass() {
    criterion(10, || {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..1000 {
            let a = CanonRat::ratio(rng.gen_range(1i64..=300), rng.gen_range(1u64..=300));
            let b = CanonRat::ratio(rng.gen_range(1i64..=300), rng.gen_range(1u64..=300));
            let product = ruler_compass_product(&a, &b).expect("positive");
            assert_eq!(product.length, &a * &b, "AD != ab for {a} x {b}");
        }
        let out = arithmos_bin(&["ruler-product", "3/2", "4/3"]);
        assert!(out.ends_with("AD = 3/2 x 4/3 = 2/1\n"), "got: {out}");
        "1000 random products exact; golden 3/2 x 4/3 lands on 2".into()
    });
}
