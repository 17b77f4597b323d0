//! One function per subcommand. Each returns the rendered text, the
//! JSON document with the same numeric content, and an optional
//! failure note for check-style commands whose verdict is negative.

use arithmos::anthyphairesis::{
    cf_expand, cf_reconstruct, convergents, gcd, gcd_literal, render_literal, render_trace,
    surd_cf, CFExpansion,
};
use arithmos::completion::laws::{run_suite, LawConfig};
use arithmos::exhaustion::{
    area_ratio_check, exhaustion_halving_check, pi_bounds_from, pi_enclosure, polygon_area,
    ruler_compass_product, theodorus_vertices, zeno_table, StartPolygon,
};
use arithmos::completion::{decimal_down, decimal_nearest, decimal_up};
use arithmos::parity::{
    descent_search, find_triples, incommensurability_descent, pebble_render, PebbleKind,
};
use arithmos::reals::{
    archimedean_witness, rational_between, real_add, real_compare, real_mul, render,
    supremum_finite, RealStream,
};
use arithmos::{Natural, Result};
use serde_json::{json, Value};

use crate::operands;
use crate::render::{bracket_list, table};

const GCD_LITERAL_CAP: u64 = 10_000;

pub struct CommandOutput {
    pub text: String,
    pub json: Value,
    /// Set when a check-style command ran fine but its verdict is
    /// negative; the caller turns it into a nonzero exit.
    pub failure: Option<String>,
}

impl CommandOutput {
    fn new(text: String, json: Value) -> CommandOutput {
        CommandOutput { text, json, failure: None }
    }
}

pub fn gcd_cmd(a: &str, b: &str, trace: bool, literal: bool) -> Result<CommandOutput> {
    let a = operands::natural(a)?;
    let b = operands::natural(b)?;
    let t = gcd(&a, &b)?;
    let mut text = String::new();
    let mut doc = json!({ "a": a, "b": b, "gcd": t.gcd, "rows": t.rows });
    if trace {
        text.push_str(&render_trace(&t));
    }
    if literal {
        let lit = gcd_literal(&a, &b, GCD_LITERAL_CAP)?;
        text.push_str(&render_literal(&lit));
        doc["literal"] = serde_json::to_value(&lit).expect("serializable trace");
    }
    text.push_str(&format!("gcd({a}, {b}) = {}\n", t.gcd));
    Ok(CommandOutput::new(text, doc))
}

pub fn coprime_cmd(a: &str, b: &str) -> Result<CommandOutput> {
    let a = operands::natural(a)?;
    let b = operands::natural(b)?;
    let t = gcd(&a, &b)?;
    let coprime = t.gcd == Natural::one();
    let text = if coprime {
        format!("{a} and {b} are prime to one another\n")
    } else {
        format!("{a} and {b} share the measure {}\n", t.gcd)
    };
    let doc = json!({ "a": a, "b": b, "gcd": t.gcd, "coprime": coprime });
    Ok(CommandOutput::new(text, doc))
}

pub fn cf_cmd(value: &str) -> Result<CommandOutput> {
    let r = operands::positive_rational("a continued-fraction operand", value)?;
    let e = cf_expand(&r.numerator().abs(), r.denominator())?;
    let text = format!("{e}\n");
    let doc = json!({ "input": value, "value": r, "quotients": e.quotients(), "display": e.to_string() });
    Ok(CommandOutput::new(text, doc))
}

pub fn cf_reconstruct_cmd(expansion: &str) -> Result<CommandOutput> {
    let e: CFExpansion = expansion.parse()?;
    let v = cf_reconstruct(&e)?;
    let text = format!("{v}\n");
    let doc = json!({ "input": expansion, "value": v });
    Ok(CommandOutput::new(text, doc))
}

pub fn surd_cmd(d: &str) -> Result<CommandOutput> {
    let d = operands::natural(d)?;
    let s = surd_cf(&d)?;
    let head = s.expansion.quotients();
    let period = s.expansion.periodic_tail().expect("surd expansions are periodic");
    let text = format!(
        "sqrt({d}) = {}\nhead   {}\nperiod {}\n",
        s.expansion,
        bracket_list(head),
        bracket_list(period),
    );
    let doc = json!({
        "d": d,
        "display": s.expansion.to_string(),
        "head": head,
        "period": period,
        "steps": s.steps,
        "anomaly": s.anomaly,
    });
    Ok(CommandOutput::new(text, doc))
}

pub fn convergents_cmd(value: &str, max: Option<u64>) -> Result<CommandOutput> {
    let wanted = usize::try_from(max.unwrap_or(5)).unwrap_or(usize::MAX);
    let e = if let Some(d) = value.trim().strip_prefix("sqrt:") {
        surd_cf(&operands::natural(d)?)?.expansion
    } else {
        let r = operands::positive_rational("a convergents operand", value)?;
        cf_expand(&r.numerator().abs(), r.denominator())?
    };
    // A finite expansion has only so many convergents to give.
    let count = e.finite_len().map_or(wanted, |len| wanted.min(len));
    let cs = convergents(&e, count)?;
    let mut text = String::new();
    for (i, c) in cs.iter().enumerate() {
        text.push_str(&format!("c{} = {c}\n", i + 1));
    }
    let doc = json!({ "input": value, "count": count, "convergents": cs });
    Ok(CommandOutput::new(text, doc))
}

pub fn triples_cmd(max: Option<u64>) -> Result<CommandOutput> {
    let c_max = max.unwrap_or(20);
    let triples = find_triples(c_max);
    let mut text = String::new();
    for t in &triples {
        text.push_str(&format!("{t}\n"));
    }
    text.push_str(&format!("{} triples with hypotenuse at most {c_max}\n", triples.len()));
    let doc = json!({ "c_max": c_max, "count": triples.len(), "triples": triples });
    Ok(CommandOutput::new(text, doc))
}

pub fn descent_check_cmd(a: &str, c: &str) -> Result<CommandOutput> {
    let report = incommensurability_descent(&operands::natural(a)?, &operands::natural(c)?)?;
    let text = format!("{report}\n");
    let doc = serde_json::to_value(&report).expect("serializable report");
    Ok(CommandOutput::new(text, doc))
}

pub fn descent_search_cmd(max: Option<u64>) -> Result<CommandOutput> {
    let n_max = max.unwrap_or(1000);
    let search = descent_search(n_max);
    let text = format!("{search}\n");
    let doc = serde_json::to_value(&search).expect("serializable search");
    Ok(CommandOutput::new(text, doc))
}

pub fn pebble_cmd(kind: PebbleKind, n: u64) -> Result<CommandOutput> {
    let figure = pebble_render(kind, n)?;
    let text = format!("{}{}\n", figure.diagram, figure.identity);
    let doc = serde_json::to_value(&figure).expect("serializable figure");
    Ok(CommandOutput::new(text, doc))
}

pub fn pi_cmd(
    doublings: Option<u32>,
    bits: Option<u32>,
    digits: Option<u32>,
    square: bool,
) -> Result<CommandOutput> {
    let doublings = doublings.unwrap_or(4);
    let bits = bits.unwrap_or(32);
    let digits = digits.unwrap_or(6);
    let start = if square { StartPolygon::Square } else { StartPolygon::Hexagon };
    let rows = pi_bounds_from(start, doublings, bits)?;
    let enclosure = pi_enclosure(&rows);
    let mut cells = vec![vec![
        "sides".to_string(),
        "inscribed".to_string(),
        "circumscribed".to_string(),
        "gap".to_string(),
    ]];
    for row in &rows {
        cells.push(vec![
            row.sides.to_string(),
            decimal_down(row.inscribed_semiperimeter.lo(), digits),
            decimal_up(row.circumscribed_semiperimeter.hi(), digits),
            decimal_up(&row.gap, digits),
        ]);
    }
    let mut text = table(&cells);
    text.push_str(&format!(
        "pi is between {} and {}\n",
        decimal_down(enclosure.lo(), digits),
        decimal_up(enclosure.hi(), digits),
    ));
    let doc = json!({
        "start": start,
        "doublings": doublings,
        "bits": bits,
        "rows": rows,
        "enclosure": enclosure,
    });
    Ok(CommandOutput::new(text, doc))
}

pub fn area_cmd(height: &str, perimeter: &str) -> Result<CommandOutput> {
    let h = operands::rational(height)?;
    let p = operands::rational(perimeter)?;
    let area = polygon_area(&h, &p)?;
    let text = format!("area = {area}\n");
    let doc = json!({ "height": h, "perimeter": p, "area": area });
    Ok(CommandOutput::new(text, doc))
}

pub fn ratio_areas_cmd(
    r1: &str,
    r2: &str,
    doublings: Option<u32>,
    bits: Option<u32>,
) -> Result<CommandOutput> {
    let r1 = operands::positive_rational("a circle radius", r1)?;
    let r2 = operands::positive_rational("a circle radius", r2)?;
    let check = area_ratio_check(&r1, &r2, doublings.unwrap_or(4), bits.unwrap_or(32))?;
    let text = format!("{check}\n");
    let failure =
        (!check.contains).then(|| format!("ratio interval misses ({})^2", check.expected));
    let doc = serde_json::to_value(&check).expect("serializable check");
    Ok(CommandOutput { text, json: doc, failure })
}

pub fn halving_cmd(doublings: Option<u32>, bits: Option<u32>) -> Result<CommandOutput> {
    let doublings = doublings.unwrap_or(10);
    let bits = bits.unwrap_or(128);
    let rows = pi_bounds_from(StartPolygon::Hexagon, doublings, bits)?;
    let check = exhaustion_halving_check(&rows);
    let text = format!("{check}\n");
    let failure = (!check.ok()).then(|| format!("{} of {} pairs failed", check.failures.len(), check.pairs));
    let doc = json!({ "doublings": doublings, "bits": bits, "ok": check.ok(), "check": check });
    Ok(CommandOutput { text, json: doc, failure })
}

pub fn zeno_cmd(max: Option<u64>) -> Result<CommandOutput> {
    let n_max = u32::try_from(max.unwrap_or(20)).unwrap_or(u32::MAX);
    let rows = zeno_table(n_max);
    let mut cells = vec![vec!["n".to_string(), "a_n".to_string(), "t_n".to_string()]];
    for row in &rows {
        cells.push(vec![row.n.to_string(), row.a_n.to_string(), row.t_n.to_string()]);
    }
    let text = table(&cells);
    let doc = json!({ "n_max": n_max, "rows": rows });
    Ok(CommandOutput::new(text, doc))
}

pub fn ruler_product_cmd(a: &str, b: &str) -> Result<CommandOutput> {
    let a = operands::rational(a)?;
    let b = operands::rational(b)?;
    let product = ruler_compass_product(&a, &b)?;
    let text = format!("{product}\n");
    let doc = serde_json::to_value(&product).expect("serializable construction");
    Ok(CommandOutput::new(text, doc))
}

pub fn theodorus_cmd(
    max: Option<u64>,
    bits: Option<u32>,
    digits: Option<u32>,
) -> Result<CommandOutput> {
    let k_max = u32::try_from(max.unwrap_or(16)).unwrap_or(u32::MAX);
    let bits = bits.unwrap_or(32);
    let digits = digits.unwrap_or(4);
    let steps = theodorus_vertices(k_max, bits)?;
    let mut text = String::new();
    for s in &steps {
        text.push_str(&format!(
            "k={}: P = ({}, {}), |P| in [{}, {}], brackets sqrt({})\n",
            s.k,
            decimal_nearest(&s.x.midpoint(), digits),
            decimal_nearest(&s.y.midpoint(), digits),
            decimal_down(s.hypotenuse.lo(), digits),
            decimal_up(s.hypotenuse.hi(), digits),
            s.k + 1,
        ));
    }
    let doc = json!({ "k_max": k_max, "bits": bits, "steps": steps });
    Ok(CommandOutput::new(text, doc))
}

fn rendered_stream(
    op: &str,
    raw: &[&str],
    result: &RealStream,
    bits: Option<u32>,
    digits: Option<u32>,
) -> Result<CommandOutput> {
    let bits = bits.unwrap_or(64);
    let digits = digits.unwrap_or(8);
    let interval = result.approx(bits)?;
    let decimal = render(result, digits)?;
    let text = format!("{}\n{}\n", result.describe(), decimal);
    let doc = json!({
        "op": op,
        "operands": raw,
        "bits": bits,
        "digits": digits,
        "decimal": decimal,
        "interval": interval,
    });
    Ok(CommandOutput::new(text, doc))
}

pub fn real_add_cmd(
    x: &str,
    y: &str,
    bits: Option<u32>,
    digits: Option<u32>,
) -> Result<CommandOutput> {
    let sum = real_add(&operands::stream(x)?, &operands::stream(y)?);
    rendered_stream("add", &[x, y], &sum, bits, digits)
}

pub fn real_mul_cmd(
    x: &str,
    y: &str,
    bits: Option<u32>,
    digits: Option<u32>,
) -> Result<CommandOutput> {
    let product = real_mul(&operands::stream(x)?, &operands::stream(y)?);
    rendered_stream("mul", &[x, y], &product, bits, digits)
}

pub fn real_sup_cmd(xs: &[String], bits: Option<u32>, digits: Option<u32>) -> Result<CommandOutput> {
    let streams: Vec<RealStream> =
        xs.iter().map(|s| operands::stream(s)).collect::<Result<_>>()?;
    let sup = supremum_finite(&streams)?;
    let raw: Vec<&str> = xs.iter().map(String::as_str).collect();
    rendered_stream("sup", &raw, &sup, bits, digits)
}

pub fn real_compare_cmd(x: &str, y: &str, max: Option<u64>) -> Result<CommandOutput> {
    let budget = u32::try_from(max.unwrap_or(256)).unwrap_or(u32::MAX);
    let verdict = real_compare(&operands::stream(x)?, &operands::stream(y)?, budget)?;
    let text = format!("{verdict}\n");
    let doc = json!({ "op": "compare", "operands": [x, y], "budget": budget, "verdict": verdict });
    Ok(CommandOutput::new(text, doc))
}

pub fn real_between_cmd(x: &str, y: &str, max: Option<u64>) -> Result<CommandOutput> {
    let budget = u32::try_from(max.unwrap_or(256)).unwrap_or(u32::MAX);
    let value = rational_between(&operands::stream(x)?, &operands::stream(y)?, budget)?;
    let text = format!("{value}\n");
    let doc = json!({ "op": "between", "operands": [x, y], "budget": budget, "value": value });
    Ok(CommandOutput::new(text, doc))
}

pub fn real_archimedean_cmd(x: &str, y: &str, max: Option<u64>) -> Result<CommandOutput> {
    let budget = u32::try_from(max.unwrap_or(256)).unwrap_or(u32::MAX);
    let witness = archimedean_witness(&operands::stream(x)?, &operands::stream(y)?, budget)?;
    let text = format!("{witness}\n");
    let doc = json!({ "op": "archimedean", "operands": [x, y], "budget": budget, "witness": witness });
    Ok(CommandOutput::new(text, doc))
}

pub fn laws_cmd(suite: &str, seed: Option<u64>, max: Option<u64>) -> Result<CommandOutput> {
    let cfg = LawConfig {
        seed: seed.unwrap_or(0),
        samples: u32::try_from(max.unwrap_or(1000)).unwrap_or(u32::MAX),
        bound: 10_000,
    };
    let report = run_suite(suite, &cfg).expect("suite names are closed");
    let deviations = report.checks.iter().filter(|c| !c.ok()).count();
    let failure =
        (deviations > 0).then(|| format!("{deviations} check(s) deviated in suite {suite}"));
    let text = format!("{report}\n");
    let doc = serde_json::to_value(&report).expect("serializable report");
    Ok(CommandOutput { text, json: doc, failure })
}
