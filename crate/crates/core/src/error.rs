use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors.
///
/// Partial operations report these instead of wrapping, saturating, or
/// guessing. [`Error::code`] gives a stable machine-readable slug; the
/// `Display` form adds the human detail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[non_exhaustive]
pub enum Error {
    /// Natural subtraction with minuend smaller than subtrahend.
    #[error("subtraction underflow: {minuend} - {subtrahend} is not a natural")]
    SubtractionUnderflow {
        /// Left operand.
        minuend: String,
        /// Right operand.
        subtrahend: String,
    },

    /// Division or inversion with a zero divisor.
    #[error("division by zero")]
    DivisionByZero,

    /// A gcd of zero with zero.
    #[error("gcd(0, 0) is undefined")]
    BothZero,

    /// A string did not parse as the requested exact value.
    #[error("cannot parse {input:?}: {reason}")]
    Parse {
        /// Offending input.
        input: String,
        /// What was wrong with it.
        reason: String,
    },

    /// Square-root expansion of a perfect square (the expansion would be
    /// finite, not periodic).
    #[error("{n} is a perfect square ({root}^2); its root is rational")]
    PerfectSquare {
        /// The radicand.
        n: String,
        /// Its exact root.
        root: String,
    },

    /// Square-root expansion of 0 or 1.
    #[error("surd expansion needs a radicand >= 2, got {n}")]
    SurdTooSmall {
        /// The radicand.
        n: String,
    },

    /// A continued fraction was built from no quotients at all.
    #[error("a continued fraction needs at least one quotient")]
    EmptyExpansion,

    /// A continued-fraction quotient after the first was zero.
    #[error("quotient at position {position} is zero; only the leading quotient may be 0")]
    InvalidQuotient {
        /// Index of the offending quotient.
        position: usize,
    },

    /// Value reconstruction was asked for a periodic expansion.
    #[error("cannot reconstruct a rational from a periodic expansion")]
    PeriodicReconstruct,

    /// A convergent index past the end of a finite expansion.
    #[error("convergent {wanted} does not exist; the expansion has {have}")]
    ConvergentIndex {
        /// Requested index.
        wanted: usize,
        /// Number of convergents available.
        have: usize,
    },

    /// The literal-subtraction trace exceeded its step budget.
    #[error("literal subtraction exceeded {budget} steps; use the division form")]
    StepBudget {
        /// The configured cap.
        budget: u64,
    },

    /// A pebble figure larger than the render budget.
    #[error("pebble figures are capped at side {max}, got {n}")]
    RenderBudget {
        /// Requested size.
        n: String,
        /// Allowed maximum.
        max: u64,
    },

    /// A pebble figure with a side of the wrong parity.
    #[error("{figure} needs {expected} n, got {n}")]
    WrongParity {
        /// Which figure was requested.
        figure: &'static str,
        /// "an odd" or "an even".
        expected: &'static str,
        /// The offending value.
        n: String,
    },

    /// A quantity that must be strictly positive was not.
    #[error("{what} must be positive, got {value}")]
    NonPositive {
        /// What the quantity is.
        what: &'static str,
        /// The offending value.
        value: String,
    },

    /// More doublings than the supported cap.
    #[error("at most {max} doublings are supported, got {requested}")]
    DoublingsLimit {
        /// Requested count.
        requested: u32,
        /// Supported maximum.
        max: u32,
    },

    /// An interval computation failed its ordering checks even after one
    /// retry at doubled precision.
    #[error("precision budget exhausted while {what}")]
    PrecisionBudget {
        /// The computation that gave up.
        what: &'static str,
    },

    /// A stream never moved away from a value it had to separate from.
    #[error("could not separate within a {budget}-bit probe budget")]
    CannotSeparate {
        /// Probe budget in bits.
        budget: u32,
    },

    /// A sequence declared monotone was caught decreasing.
    #[error("sequence is not monotone: term {index} exceeds term {}", index + 1)]
    NotMonotone {
        /// First offending index.
        index: u64,
    },

    /// A supremum of no streams at all.
    #[error("supremum of an empty set is undefined")]
    EmptySet,
}

impl Error {
    /// Stable machine-readable slug for this error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::SubtractionUnderflow { .. } => "subtraction-underflow",
            Error::DivisionByZero => "division-by-zero",
            Error::BothZero => "both-zero",
            Error::Parse { .. } => "parse",
            Error::PerfectSquare { .. } => "perfect-square",
            Error::SurdTooSmall { .. } => "surd-too-small",
            Error::EmptyExpansion => "empty-expansion",
            Error::InvalidQuotient { .. } => "invalid-quotient",
            Error::PeriodicReconstruct => "periodic-reconstruct",
            Error::ConvergentIndex { .. } => "convergent-index",
            Error::StepBudget { .. } => "step-budget",
            Error::RenderBudget { .. } => "render-budget",
            Error::WrongParity { .. } => "wrong-parity",
            Error::NonPositive { .. } => "non-positive",
            Error::DoublingsLimit { .. } => "doublings-limit",
            Error::PrecisionBudget { .. } => "precision-budget",
            Error::CannotSeparate { .. } => "cannot-separate",
            Error::NotMonotone { .. } => "not-monotone",
            Error::EmptySet => "empty-set",
        }
    }
}
