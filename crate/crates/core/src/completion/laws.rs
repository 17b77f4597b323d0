//! A sampling law harness.
//!
//! Every algebraic claim the crate relies on is checked here on
//! bounded random samples drawn from a seeded generator, so runs are
//! reproducible. Claims come in two flavors: laws expected to hold on
//! every sample, and absences (no identity, no inverses) expected to
//! survive a bounded search. Both appear in the same report so the
//! presence/absence table of the four structures is part of the
//! output, not an assumption.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    account_mul, embed, fraction_add, identity_class, pair_combine, pair_congruent,
    AdditiveNaturals, AdditiveRationals, CanonRat, CcsCarrier, CcsClass, CcsPair,
    MultiplicativeNaturals,
};

/// How a suite samples: seed, sample count, and element bound.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct LawConfig {
    /// Seed for the generator; equal seeds give equal reports.
    pub seed: u64,
    /// Samples per check.
    pub samples: u32,
    /// Bound on sampled magnitudes.
    pub bound: u64,
}

impl Default for LawConfig {
    fn default() -> LawConfig {
        LawConfig { seed: 0, samples: 1000, bound: 10_000 }
    }
}

/// One checked claim.
#[derive(Clone, Debug, Serialize)]
pub struct LawCheck {
    /// The structure the claim is about.
    pub subject: String,
    /// The claim.
    pub name: String,
    /// Samples (or search candidates) examined.
    pub cases: u32,
    /// What the samples showed.
    pub observed: bool,
    /// What the structure is supposed to show.
    pub expected: bool,
}

impl LawCheck {
    /// True when observation matches expectation.
    pub fn ok(&self) -> bool {
        self.observed == self.expected
    }
}

/// A full suite run.
#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    /// Suite name: `ccs`, `group`, `field`, or `ordered-field`.
    pub suite: String,
    /// The sampling configuration used.
    pub config: LawConfig,
    /// All checks, in run order.
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    /// True when every check came out as expected.
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(LawCheck::ok)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} (seed {}, {} samples, bound {})",
            self.suite, self.config.seed, self.config.samples, self.config.bound
        )?;
        for c in &self.checks {
            let mark = if c.ok() { "ok  " } else { "FAIL" };
            let expect = if c.expected { "holds" } else { "absent" };
            writeln!(
                f,
                "  [{mark}] {:10} {} -> expected {expect}, sampled {} cases",
                c.subject, c.name, c.cases
            )?;
        }
        write!(f, "overall: {}", if self.all_ok() { "ok" } else { "FAIL" })
    }
}

/// Runs a suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, cfg: &LawConfig) -> Option<LawReport> {
    match name {
        "ccs" => Some(ccs_suite(cfg)),
        "group" => Some(group_suite(cfg)),
        "field" => Some(field_suite(cfg)),
        "ordered-field" => Some(ordered_field_suite(cfg)),
        _ => None,
    }
}

fn rng_for(cfg: &LawConfig) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed)
}

fn sample_pair<C: CcsCarrier>(c: &C, rng: &mut ChaCha8Rng, bound: u64) -> CcsPair<C> {
    CcsPair::new(c.sample(rng, bound), c.sample(rng, bound))
}

/// A pair congruent to `p`: both components combined with the same
/// element.
fn perturb<C: CcsCarrier>(c: &C, p: &CcsPair<C>, t: &C::Elem) -> CcsPair<C> {
    CcsPair::new(c.combine(&p.first, t), c.combine(&p.second, t))
}

fn hold_check(subject: &str, name: &str, cases: u32, violations: u32) -> LawCheck {
    LawCheck {
        subject: subject.into(),
        name: name.into(),
        cases,
        observed: violations == 0,
        expected: true,
    }
}

/// Semigroup and congruence checks for the pair construction over one
/// carrier.
fn ccs_checks<C: CcsCarrier>(c: &C, cfg: &LawConfig, out: &mut Vec<LawCheck>) {
    let rng = &mut rng_for(cfg);
    let n = cfg.samples;
    let subject = c.name();

    let mut closure = 0;
    let mut comm = 0;
    let mut assoc = 0;
    let mut cancel = 0;
    for _ in 0..n {
        let a = c.sample(rng, cfg.bound);
        let b = c.sample(rng, cfg.bound);
        let d = c.sample(rng, cfg.bound);
        if !c.is_valid(&c.combine(&a, &b)) {
            closure += 1;
        }
        if c.combine(&a, &b) != c.combine(&b, &a) {
            comm += 1;
        }
        if c.combine(&c.combine(&a, &b), &d) != c.combine(&a, &c.combine(&b, &d)) {
            assoc += 1;
        }
        if c.combine(&a, &d) == c.combine(&b, &d) && a != b {
            cancel += 1;
        }
    }
    out.push(hold_check(subject, "the operation is closed", n, closure));
    out.push(hold_check(subject, "the operation is commutative", n, comm));
    out.push(hold_check(subject, "the operation is associative", n, assoc));
    out.push(hold_check(subject, "the operation cancels", n, cancel));

    let mut refl = 0;
    let mut sym = 0;
    let mut trans = 0;
    let mut well = 0;
    let mut canon = 0;
    for _ in 0..n {
        let p = sample_pair(c, rng, cfg.bound);
        let q = sample_pair(c, rng, cfg.bound);
        let t1 = c.sample(rng, cfg.bound);
        let t2 = c.sample(rng, cfg.bound);
        let p1 = perturb(c, &p, &t1);
        let p2 = perturb(c, &p1, &t2);
        let q1 = perturb(c, &q, &t2);
        if !pair_congruent(c, &p, &p) {
            refl += 1;
        }
        if pair_congruent(c, &p, &p1) != pair_congruent(c, &p1, &p) {
            sym += 1;
        }
        if !(pair_congruent(c, &p, &p1) && pair_congruent(c, &p1, &p2) && pair_congruent(c, &p, &p2))
        {
            trans += 1;
        }
        if !pair_congruent(c, &pair_combine(c, &p, &q), &pair_combine(c, &p1, &q1)) {
            well += 1;
        }
        let same_class = pair_congruent(c, &p, &q);
        let same_canon = c.canonical_pair(&p) == c.canonical_pair(&q);
        if same_class != same_canon {
            canon += 1;
        }
        if c.canonical_pair(&p) != c.canonical_pair(&p2) {
            canon += 1;
        }
    }
    out.push(hold_check(subject, "the congruence is reflexive", n, refl));
    out.push(hold_check(subject, "the congruence is symmetric", n, sym));
    out.push(hold_check(subject, "the congruence is transitive", n, trans));
    out.push(hold_check(subject, "pair combination respects the congruence", n, well));
    out.push(hold_check(subject, "canonical forms identify classes", n, canon));
}

/// Suite `ccs`: the three carriers and the congruence machinery,
/// plus the representative-level product and sum.
pub fn ccs_suite(cfg: &LawConfig) -> LawReport {
    let mut checks = Vec::new();
    ccs_checks(&AdditiveNaturals, cfg, &mut checks);
    ccs_checks(&MultiplicativeNaturals, cfg, &mut checks);
    ccs_checks(&AdditiveRationals, cfg, &mut checks);

    let rng = &mut rng_for(cfg);
    let n = cfg.samples;
    let c = AdditiveNaturals;
    let mut acct = 0;
    for _ in 0..n {
        let p = sample_pair(&c, rng, cfg.bound);
        let q = sample_pair(&c, rng, cfg.bound);
        let t1 = c.sample(rng, cfg.bound);
        let t2 = c.sample(rng, cfg.bound);
        let prod = account_mul(&p, &q);
        let prod2 = account_mul(&perturb(&c, &p, &t1), &perturb(&c, &q, &t2));
        if !pair_congruent(&c, &prod, &prod2) {
            acct += 1;
        }
    }
    checks.push(hold_check("(N+, +)", "account multiplication respects the congruence", n, acct));

    let m = MultiplicativeNaturals;
    let mut fr = 0;
    for _ in 0..n {
        let p = sample_pair(&m, rng, cfg.bound);
        let q = sample_pair(&m, rng, cfg.bound);
        let t1 = m.sample(rng, cfg.bound);
        let t2 = m.sample(rng, cfg.bound);
        let sum = fraction_add(&p, &q);
        let sum2 = fraction_add(&perturb(&m, &p, &t1), &perturb(&m, &q, &t2));
        if !pair_congruent(&m, &sum, &sum2) {
            fr += 1;
        }
    }
    checks.push(hold_check("(N+, x)", "fraction addition respects the congruence", n, fr));

    LawReport { suite: "ccs".into(), config: *cfg, checks }
}

/// Group checks for one completion.
fn completion_checks<C: CcsCarrier>(
    c: &C,
    completed_name: &str,
    cfg: &LawConfig,
    out: &mut Vec<LawCheck>,
) {
    let rng = &mut rng_for(cfg);
    let n = cfg.samples;
    let e = identity_class(c);

    let mut ident = 0;
    let mut inv = 0;
    let mut assoc = 0;
    let mut comm = 0;
    let mut hom = 0;
    for _ in 0..n {
        let x = CcsClass::of(c, &sample_pair(c, rng, cfg.bound));
        let y = CcsClass::of(c, &sample_pair(c, rng, cfg.bound));
        let z = CcsClass::of(c, &sample_pair(c, rng, cfg.bound));
        if e.combine(c, &x) != x {
            ident += 1;
        }
        if x.combine(c, &x.inverse(c)) != e {
            inv += 1;
        }
        if x.combine(c, &y).combine(c, &z) != x.combine(c, &y.combine(c, &z)) {
            assoc += 1;
        }
        if x.combine(c, &y) != y.combine(c, &x) {
            comm += 1;
        }
        let a = c.sample(rng, cfg.bound);
        let b = c.sample(rng, cfg.bound);
        if embed(c, &c.combine(&a, &b)) != embed(c, &a).combine(c, &embed(c, &b)) {
            hom += 1;
        }
    }
    out.push(hold_check(completed_name, "the diagonal class is the identity", n, ident));
    out.push(hold_check(completed_name, "swapping components inverts", n, inv));
    out.push(hold_check(completed_name, "class combination is associative", n, assoc));
    out.push(hold_check(completed_name, "class combination is commutative", n, comm));
    out.push(hold_check(completed_name, "the embedding is a homomorphism", n, hom));
}

/// Bounded search for an identity in the carrier itself.
fn carrier_identity_check<C: CcsCarrier>(c: &C, cfg: &LawConfig, expected: bool) -> LawCheck {
    let rng = &mut rng_for(cfg);
    let n = cfg.samples;
    let observed = match c.identity() {
        Some(e) => {
            // A claimed identity must actually act as one.
            (0..n).all(|_| {
                let x = c.sample(rng, cfg.bound);
                c.combine(&e, &x) == x && c.combine(&x, &e) == x
            })
        }
        None => {
            // Search sampled candidates; each must fail on some probe.
            let probes: Vec<C::Elem> = (0..16).map(|_| c.sample(rng, cfg.bound)).collect();
            (0..n).any(|_| {
                let cand = c.sample(rng, cfg.bound);
                probes.iter().all(|x| c.combine(&cand, x) == *x)
            })
        }
    };
    LawCheck {
        subject: c.name().into(),
        name: "an identity element exists".into(),
        cases: n,
        observed,
        expected,
    }
}

/// Bounded search for inverses in the carrier itself.
fn carrier_inverse_check<C: CcsCarrier>(c: &C, cfg: &LawConfig, expected: bool) -> LawCheck {
    let rng = &mut rng_for(cfg);
    let n = cfg.samples.min(64);
    let observed = match c.identity() {
        None => false,
        Some(e) => (0..n).all(|_| {
            let x = c.sample(rng, cfg.bound);
            if x == e {
                return true;
            }
            // Bounded candidate search for a partner.
            (0..512).any(|_| {
                let y = c.sample(rng, cfg.bound);
                c.combine(&x, &y) == e
            })
        }),
    };
    LawCheck {
        subject: c.name().into(),
        name: "every element has an inverse".into(),
        cases: n,
        observed,
        expected,
    }
}

/// Identity and inverse checks for a completion, done constructively.
fn completion_presence_checks<C: CcsCarrier>(
    c: &C,
    completed_name: &str,
    cfg: &LawConfig,
    out: &mut Vec<LawCheck>,
) {
    let rng = &mut rng_for(cfg);
    let n = cfg.samples;
    let e = identity_class(c);
    let mut ident = 0;
    let mut inv = 0;
    for _ in 0..n {
        let x = CcsClass::of(c, &sample_pair(c, rng, cfg.bound));
        if e.combine(c, &x) != x {
            ident += 1;
        }
        if x.combine(c, &x.inverse(c)) != e {
            inv += 1;
        }
    }
    out.push(LawCheck {
        subject: completed_name.into(),
        name: "an identity element exists".into(),
        cases: n,
        observed: ident == 0,
        expected: true,
    });
    out.push(LawCheck {
        subject: completed_name.into(),
        name: "every element has an inverse".into(),
        cases: n,
        observed: inv == 0,
        expected: true,
    });
}

/// Suite `group`: the completion laws for all three instantiations and
/// the presence/absence table of the four structures.
pub fn group_suite(cfg: &LawConfig) -> LawReport {
    let mut checks = Vec::new();
    completion_checks(&AdditiveNaturals, "(Z, +)", cfg, &mut checks);
    completion_checks(&MultiplicativeNaturals, "(Q+, x)", cfg, &mut checks);
    completion_checks(&AdditiveRationals, "(Q, +)", cfg, &mut checks);

    // The table: addition on positive naturals has neither identity
    // nor inverses, multiplication has only the identity, and both
    // completions have both.
    checks.push(carrier_identity_check(&AdditiveNaturals, cfg, false));
    checks.push(carrier_inverse_check(&AdditiveNaturals, cfg, false));
    checks.push(carrier_identity_check(&MultiplicativeNaturals, cfg, true));
    checks.push(carrier_inverse_check(&MultiplicativeNaturals, cfg, false));
    completion_presence_checks(&AdditiveNaturals, "(Z, +)", cfg, &mut checks);
    completion_presence_checks(&MultiplicativeNaturals, "(Q+, x)", cfg, &mut checks);

    LawReport { suite: "group".into(), config: *cfg, checks }
}

fn sample_rat(rng: &mut ChaCha8Rng, bound: u64) -> CanonRat {
    let b = bound.max(1) as i64;
    CanonRat::ratio(rng.gen_range(-b..=b), rng.gen_range(1..=b as u64))
}

/// Suite `field`: the nine field laws on the signed rationals.
pub fn field_suite(cfg: &LawConfig) -> LawReport {
    let rng = &mut rng_for(cfg);
    let n = cfg.samples;
    let subject = "(Q, +, x)";
    let zero = CanonRat::zero();
    let one = CanonRat::one();

    let mut fails = [0u32; 9];
    for _ in 0..n {
        let a = sample_rat(rng, cfg.bound);
        let b = sample_rat(rng, cfg.bound);
        let c = sample_rat(rng, cfg.bound);
        if &(&a + &b) + &c != &a + &(&b + &c) {
            fails[0] += 1;
        }
        if &a + &b != &b + &a {
            fails[1] += 1;
        }
        if &a + &zero != a {
            fails[2] += 1;
        }
        if &a + &(-&a) != zero {
            fails[3] += 1;
        }
        if &(&a * &b) * &c != &a * &(&b * &c) {
            fails[4] += 1;
        }
        if &a * &b != &b * &a {
            fails[5] += 1;
        }
        if &a * &one != a {
            fails[6] += 1;
        }
        if !a.is_zero() && &a * &a.inv().expect("nonzero") != one {
            fails[7] += 1;
        }
        if &a * &(&b + &c) != &(&a * &b) + &(&a * &c) {
            fails[8] += 1;
        }
    }
    let names = [
        "addition is associative",
        "addition is commutative",
        "0 is the additive identity",
        "negation inverts addition",
        "multiplication is associative",
        "multiplication is commutative",
        "1 is the multiplicative identity",
        "reciprocals invert multiplication",
        "multiplication distributes over addition",
    ];
    let checks = names
        .iter()
        .zip(fails)
        .map(|(name, f)| hold_check(subject, name, n, f))
        .collect();
    LawReport { suite: "field".into(), config: *cfg, checks }
}

/// Suite `ordered-field`: the four order laws on the signed rationals.
pub fn ordered_field_suite(cfg: &LawConfig) -> LawReport {
    let rng = &mut rng_for(cfg);
    let n = cfg.samples;
    let subject = "(Q, <)";
    let zero = CanonRat::zero();

    let mut fails = [0u32; 4];
    for _ in 0..n {
        let a = sample_rat(rng, cfg.bound);
        let b = sample_rat(rng, cfg.bound);
        let c = sample_rat(rng, cfg.bound);
        let rels = [a < b, a == b, a > b];
        if rels.iter().filter(|&&r| r).count() != 1 {
            fails[0] += 1;
        }
        if a < b && b < c && !(a < c) {
            fails[1] += 1;
        }
        if a > zero && b > zero && !(&a + &b > zero && &a * &b > zero) {
            fails[2] += 1;
        }
        if (a < b) != (&b - &a > zero) {
            fails[3] += 1;
        }
    }
    let names = [
        "exactly one of <, =, > holds",
        "the order is transitive",
        "positives are closed under + and x",
        "a < b exactly when b - a is positive",
    ];
    let checks = names
        .iter()
        .zip(fails)
        .map(|(name, f)| hold_check(subject, name, n, f))
        .collect();
    LawReport { suite: "ordered-field".into(), config: *cfg, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> LawConfig {
        LawConfig { seed: 0, samples: 200, bound: 1000 }
    }

    #[test]
    fn all_suites_come_out_as_expected() {
        for name in ["ccs", "group", "field", "ordered-field"] {
            let report = run_suite(name, &small()).unwrap();
            assert!(report.all_ok(), "suite {name}:\n{report}");
        }
        assert!(run_suite("ring", &small()).is_none());
    }

    #[test]
    fn reports_are_reproducible_for_a_seed() {
        let a = format!("{}", ccs_suite(&small()));
        let b = format!("{}", ccs_suite(&small()));
        assert_eq!(a, b);
        let c = format!("{}", ccs_suite(&LawConfig { seed: 7, ..small() }));
        // A different seed may sample differently; the verdict stays.
        assert!(c.contains("overall: ok"));
    }

    #[test]
    fn the_presence_table_matches_the_four_structures() {
        let report = group_suite(&small());
        let find = |subject: &str, name: &str| {
            report
                .checks
                .iter()
                .find(|c| c.subject == subject && c.name.contains(name))
                .unwrap_or_else(|| panic!("missing {subject} / {name}"))
        };
        let table = [
            ("(N+, +)", "identity", false),
            ("(N+, +)", "inverse", false),
            ("(N+, x)", "identity", true),
            ("(N+, x)", "inverse", false),
            ("(Z, +)", "identity", true),
            ("(Z, +)", "inverse", true),
            ("(Q+, x)", "identity", true),
            ("(Q+, x)", "inverse", true),
        ];
        for (subject, name, expected) in table {
            let check = find(subject, name);
            assert_eq!(check.expected, expected, "{subject} {name}");
            assert!(check.ok(), "{subject} {name}");
        }
    }
}
