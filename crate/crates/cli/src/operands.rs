//! Operand parsing. Every numeric argument is parsed exactly; there is
//! no floating-point anywhere on the way in.

use arithmos::anthyphairesis::surd_cf;
use arithmos::reals::{pi_stream, real_from_cf, real_from_rational, zeno_stream, RealStream};
use arithmos::{CanonRat, Error, Natural, Result};

pub fn natural(s: &str) -> Result<Natural> {
    s.trim().parse()
}

pub fn rational(s: &str) -> Result<CanonRat> {
    s.trim().parse()
}

/// A rational that must be strictly positive to make sense.
pub fn positive_rational(what: &'static str, s: &str) -> Result<CanonRat> {
    let r = rational(s)?;
    if r.is_positive() {
        Ok(r)
    } else {
        Err(Error::NonPositive { what, value: r.to_string() })
    }
}

/// A real-stream operand: `p/q`, an integer, `sqrt:D`, `pi` or `zeno`.
pub fn stream(s: &str) -> Result<RealStream> {
    match s.trim() {
        "pi" => Ok(pi_stream()),
        "zeno" => Ok(zeno_stream()),
        trimmed => {
            if let Some(d) = trimmed.strip_prefix("sqrt:") {
                let surd = surd_cf(&natural(d)?)?;
                real_from_cf(&surd.expansion)
            } else {
                Ok(real_from_rational(rational(trimmed)?))
            }
        }
    }
}
