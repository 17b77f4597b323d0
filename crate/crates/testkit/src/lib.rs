//! Oracles and helpers for the test suites. Nothing here ships: the
//! point is to check the library's answers by routes the library does
//! not take itself.

use std::process::Command;

use arithmos::reals::{real_add, real_from_rational, real_inv, real_mul, real_neg, supremum_finite};
use arithmos::reals::RealStream;
use arithmos::{CanonRat, RationalInterval};
use rand::Rng;
use serde_json::Value;

/// An exact rational sandwich around pi from Machin's identity
/// `pi = 16 arctan(1/5) - 4 arctan(1/239)`.
///
/// Both arctangents are alternating series with strictly shrinking
/// terms, so consecutive partial sums bracket them; the term counts
/// below leave the final interval narrower than `1e-42`. No square
/// roots and no polygons are involved, which makes this a fair judge
/// for the exhaustion bounds.
pub fn machin_pi_interval() -> RationalInterval {
    let a = arctan_recip_bracket(5, 34);
    let b = arctan_recip_bracket(239, 14);
    &a.scale(&CanonRat::ratio(16, 1)) - &b.scale(&CanonRat::ratio(4, 1))
}

fn arctan_recip_bracket(x: u64, terms: u32) -> RationalInterval {
    let inv = CanonRat::ratio(1, x);
    let inv_sq = &inv * &inv;
    let mut power = inv;
    let mut sum = CanonRat::zero();
    let mut previous = CanonRat::zero();
    for j in 0..terms {
        previous = sum.clone();
        let term = &power * &CanonRat::ratio(1, u64::from(2 * j + 1));
        sum = if j % 2 == 0 { &sum + &term } else { &sum - &term };
        power = &power * &inv_sq;
    }
    if previous <= sum {
        RationalInterval::new(previous, sum)
    } else {
        RationalInterval::new(sum, previous)
    }
}

/// Checks a JSON value against a structural subset of JSON Schema:
/// `type`, `properties`, `required`, `additionalProperties: false`,
/// `items`, `minItems`, `enum`, `const` and `anyOf`. The error carries
/// the path of the first mismatch.
pub fn validate_schema(schema: &Value, value: &Value) -> Result<(), String> {
    check(schema, value, "$")
}

fn check(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    let rules = match schema {
        Value::Bool(true) => return Ok(()),
        Value::Bool(false) => return Err(format!("{path}: no value is allowed here")),
        Value::Object(m) => m,
        _ => return Err(format!("{path}: malformed schema node")),
    };
    if let Some(expected) = rules.get("const") {
        if value != expected {
            return Err(format!("{path}: expected the constant {expected}, got {value}"));
        }
    }
    if let Some(options) = rules.get("enum").and_then(Value::as_array) {
        if !options.contains(value) {
            return Err(format!("{path}: {value} is not one of the allowed values"));
        }
    }
    if let Some(kind) = rules.get("type").and_then(Value::as_str) {
        let ok = match kind {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            other => return Err(format!("{path}: schema names unknown type {other:?}")),
        };
        if !ok {
            return Err(format!("{path}: expected a {kind}, got {value}"));
        }
    }
    if let Some(branches) = rules.get("anyOf").and_then(Value::as_array) {
        if !branches.iter().any(|b| check(b, value, path).is_ok()) {
            return Err(format!("{path}: no anyOf branch matched {value}"));
        }
    }
    if let Some(props) = rules.get("properties").and_then(Value::as_object) {
        if let Some(map) = value.as_object() {
            for (key, sub) in props {
                if let Some(inner) = map.get(key) {
                    check(sub, inner, &format!("{path}.{key}"))?;
                }
            }
            if rules.get("additionalProperties") == Some(&Value::Bool(false)) {
                for key in map.keys() {
                    if !props.contains_key(key) {
                        return Err(format!("{path}: unexpected field {key:?}"));
                    }
                }
            }
        }
    }
    if let Some(names) = rules.get("required").and_then(Value::as_array) {
        if let Some(map) = value.as_object() {
            for name in names.iter().filter_map(Value::as_str) {
                if !map.contains_key(name) {
                    return Err(format!("{path}: missing required field {name:?}"));
                }
            }
        }
    }
    if let Some(items) = rules.get("items") {
        if let Some(elems) = value.as_array() {
            for (i, elem) in elems.iter().enumerate() {
                check(items, elem, &format!("{path}[{i}]"))?;
            }
        }
    }
    if let Some(min) = rules.get("minItems").and_then(Value::as_u64) {
        if let Some(elems) = value.as_array() {
            if (elems.len() as u64) < min {
                return Err(format!("{path}: fewer than {min} items"));
            }
        }
    }
    Ok(())
}

/// One finished run of a child process.
pub struct CmdRun {
    /// Exit status, `-1` when killed by a signal.
    pub status: i32,
    /// Captured standard output.
    pub stdout: String,
    /// Captured standard error.
    pub stderr: String,
}

/// Runs a binary (tests pass their `CARGO_BIN_EXE_*` path) and captures
/// everything. Panics only when the process cannot be launched at all.
pub fn run_bin(bin: &str, args: &[&str]) -> CmdRun {
    let out = Command::new(bin)
        .args(args)
        .output()
        .unwrap_or_else(|e| panic!("failed to launch {bin}: {e}"));
    CmdRun {
        status: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

/// A random stream expression over rational leaves, paired with the
/// exact value it denotes. The width and containment properties are
/// phrased against exactly this pairing.
pub struct TreeSample {
    pub stream: RealStream,
    pub exact: CanonRat,
    /// Human-readable shape, for failure messages.
    pub shape: String,
}

/// Draws an expression tree of the given maximum depth. Leaves are
/// modest rationals; inner nodes pick among sum, product, negation,
/// reciprocal and binary supremum. A reciprocal of an exactly-zero
/// subtree falls back to negation so every sample stays total.
pub fn random_rational_tree<R: Rng>(rng: &mut R, depth: u32) -> TreeSample {
    if depth == 0 || rng.gen_bool(0.25) {
        let num = rng.gen_range(-40i64..=40);
        let den = rng.gen_range(1u64..=40);
        let exact = CanonRat::ratio(num, den);
        return TreeSample {
            stream: real_from_rational(exact.clone()),
            shape: format!("{exact}"),
            exact,
        };
    }
    match rng.gen_range(0u8..5) {
        0 => {
            let a = random_rational_tree(rng, depth - 1);
            let b = random_rational_tree(rng, depth - 1);
            TreeSample {
                stream: real_add(&a.stream, &b.stream),
                exact: &a.exact + &b.exact,
                shape: format!("add({}, {})", a.shape, b.shape),
            }
        }
        1 => {
            let a = random_rational_tree(rng, depth - 1);
            let b = random_rational_tree(rng, depth - 1);
            TreeSample {
                stream: real_mul(&a.stream, &b.stream),
                exact: &a.exact * &b.exact,
                shape: format!("mul({}, {})", a.shape, b.shape),
            }
        }
        2 => {
            let a = random_rational_tree(rng, depth - 1);
            TreeSample {
                stream: real_neg(&a.stream),
                exact: -&a.exact,
                shape: format!("neg({})", a.shape),
            }
        }
        3 => {
            let a = random_rational_tree(rng, depth - 1);
            match a.exact.inv() {
                Ok(exact) => TreeSample {
                    stream: real_inv(&a.stream),
                    exact,
                    shape: format!("inv({})", a.shape),
                },
                Err(_) => TreeSample {
                    stream: real_neg(&a.stream),
                    exact: -&a.exact,
                    shape: format!("neg({})", a.shape),
                },
            }
        }
        _ => {
            let a = random_rational_tree(rng, depth - 1);
            let b = random_rational_tree(rng, depth - 1);
            let exact = if a.exact >= b.exact { a.exact.clone() } else { b.exact.clone() };
            let stream = supremum_finite(&[a.stream, b.stream]).expect("two streams");
            TreeSample { stream, exact, shape: format!("sup({}, {})", a.shape, b.shape) }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn the_machin_interval_pins_pi_tightly() {
        let pi = machin_pi_interval();
        // 3.14159265358979323846... to 20 places, from the books; the
        // truncation sits below pi by about 2.6e-21.
        let below: CanonRat =
            "314159265358979323846/100000000000000000000".parse().unwrap();
        let above = &below + &CanonRat::ratio(1, 10u64.pow(19));
        assert!(pi.lo() > &below, "lo endpoint drifted: {}", pi.lo());
        assert!(pi.hi() < &above, "hi endpoint drifted: {}", pi.hi());
        let width_cap =
            &CanonRat::ratio(1, 10u64.pow(18)) * &CanonRat::ratio(1, 10u64.pow(18));
        assert!(pi.width() < width_cap, "width {} not below 1e-36", pi.width());
    }

    #[test]
    fn the_validator_accepts_and_rejects_structurally() {
        let schema = json!({
            "type": "object",
            "required": ["kind", "rows"],
            "additionalProperties": false,
            "properties": {
                "kind": {"enum": ["a", "b"]},
                "rows": {"type": "array", "minItems": 1, "items": {"type": "integer"}},
            },
        });
        assert_eq!(validate_schema(&schema, &json!({"kind": "a", "rows": [1, 2]})), Ok(()));
        assert!(validate_schema(&schema, &json!({"kind": "c", "rows": [1]})).is_err());
        assert!(validate_schema(&schema, &json!({"rows": [1]})).is_err());
        assert!(validate_schema(&schema, &json!({"kind": "a", "rows": []})).is_err());
        assert!(validate_schema(&schema, &json!({"kind": "a", "rows": [1], "extra": 0})).is_err());
        let err = validate_schema(&schema, &json!({"kind": "a", "rows": ["x"]})).unwrap_err();
        assert!(err.contains("$.rows[0]"), "path missing from {err}");
    }
}
