//! `arithmos`: exact arithmetic from the command line.
//!
//! Every subcommand prints either plain text or, with `--json`, a
//! machine-readable document carrying the same numeric content. Exit
//! codes: 0 on success, 1 when the mathematics refuses (division by
//! zero, an undecided comparison turned into a demand, a failed check),
//! 2 for unusable invocations.

use clap::{Parser, Subcommand, ValueEnum};

use arithmos::parity::PebbleKind;

mod commands;
mod operands;
mod render;

use commands::CommandOutput;

#[derive(Parser)]
#[command(
    name = "arithmos",
    version,
    about = "Exact ratio arithmetic, anthyphairesis, and interval reals",
    after_help = "Operands are naturals (136), ratios (17/3), or streams (pi, zeno, sqrt:2)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit a JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Working precision in bits, where a command takes one
    #[arg(long, global = true)]
    bits: Option<u32>,

    /// Side-doubling count for polygon commands
    #[arg(long, global = true)]
    doublings: Option<u32>,

    /// Size cap, step count, sample count, or probe budget, by command
    #[arg(long, global = true)]
    max: Option<u64>,

    /// Decimal digits in rendered approximations
    #[arg(long, global = true)]
    digits: Option<u32>,

    /// Seed for sampled law checks
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Show the division trace alongside the result
    #[arg(long, global = true)]
    trace: bool,

    /// Show the subtraction-only trace alongside the result
    #[arg(long, global = true)]
    literal: bool,

    /// Start polygon doubling from the square instead of the hexagon
    #[arg(long, global = true)]
    square: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Greatest common measure of two naturals
    Gcd { a: String, b: String },
    /// Whether two naturals are prime to one another
    Coprime { a: String, b: String },
    /// Continued-fraction expansion of a positive ratio
    Cf { value: String },
    /// Ratio named by a bracketed expansion such as "[5; 1, 2]"
    CfReconstruct { expansion: String },
    /// Periodic continued fraction of sqrt(d)
    Surd { d: String },
    /// Leading convergents of a ratio or of sqrt:d
    Convergents { value: String },
    /// All Pythagorean triples with hypotenuse up to --max
    Triples,
    /// Even-even descent on a:c, or a survey over all pairs
    Descent {
        #[arg(requires = "c")]
        a: Option<String>,
        c: Option<String>,
    },
    /// Pebble-figure proof sketch for a square or odd-sum identity
    Pebble { kind: PebbleKind, n: u64 },
    /// Two-sided rational bounds on pi from doubled polygons
    Pi,
    /// Triangle-legged polygon area, half height times perimeter
    Area { height: String, perimeter: String },
    /// Circle-area ratio interval against the squared-diameter ratio
    RatioAreas { r1: String, r2: String },
    /// Verify the polygon gap more than halves at each doubling
    HalvingCheck,
    /// Table of halved steps and their partial sums
    Zeno,
    /// Ruler-and-compass product of two lengths, with coordinates
    RulerProduct { a: String, b: String },
    /// Spiral of square-root hypotenuses with certified brackets
    Theodorus,
    /// Interval-stream arithmetic on exact reals
    Real {
        #[command(subcommand)]
        verb: RealVerb,
    },
    /// Sampled algebraic-law checks for one structure
    Laws { suite: SuiteName },
}

#[derive(Subcommand)]
enum RealVerb {
    /// Sum of two streams
    Add { x: String, y: String },
    /// Product of two streams
    Mul { x: String, y: String },
    /// Order two streams, honestly undecided within the probe budget
    Compare { x: String, y: String },
    /// A ratio strictly between two separated streams
    Between { x: String, y: String },
    /// Least multiplier n with n * x exceeding y
    Archimedean { x: String, y: String },
    /// Pointwise supremum of finitely many streams
    Sup {
        #[arg(required = true, num_args = 1..)]
        xs: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Ccs,
    Group,
    Field,
    OrderedField,
}

impl SuiteName {
    fn as_str(self) -> &'static str {
        match self {
            SuiteName::Ccs => "ccs",
            SuiteName::Group => "group",
            SuiteName::Field => "field",
            SuiteName::OrderedField => "ordered-field",
        }
    }
}

fn dispatch(cli: &Cli) -> arithmos::Result<CommandOutput> {
    match &cli.command {
        Command::Gcd { a, b } => commands::gcd_cmd(a, b, cli.trace, cli.literal),
        Command::Coprime { a, b } => commands::coprime_cmd(a, b),
        Command::Cf { value } => commands::cf_cmd(value),
        Command::CfReconstruct { expansion } => commands::cf_reconstruct_cmd(expansion),
        Command::Surd { d } => commands::surd_cmd(d),
        Command::Convergents { value } => commands::convergents_cmd(value, cli.max),
        Command::Triples => commands::triples_cmd(cli.max),
        Command::Descent { a: Some(a), c: Some(c) } => commands::descent_check_cmd(a, c),
        Command::Descent { .. } => commands::descent_search_cmd(cli.max),
        Command::Pebble { kind, n } => commands::pebble_cmd(*kind, *n),
        Command::Pi => commands::pi_cmd(cli.doublings, cli.bits, cli.digits, cli.square),
        Command::Area { height, perimeter } => commands::area_cmd(height, perimeter),
        Command::RatioAreas { r1, r2 } => {
            commands::ratio_areas_cmd(r1, r2, cli.doublings, cli.bits)
        }
        Command::HalvingCheck => commands::halving_cmd(cli.doublings, cli.bits),
        Command::Zeno => commands::zeno_cmd(cli.max),
        Command::RulerProduct { a, b } => commands::ruler_product_cmd(a, b),
        Command::Theodorus => commands::theodorus_cmd(cli.max, cli.bits, cli.digits),
        Command::Real { verb } => match verb {
            RealVerb::Add { x, y } => commands::real_add_cmd(x, y, cli.bits, cli.digits),
            RealVerb::Mul { x, y } => commands::real_mul_cmd(x, y, cli.bits, cli.digits),
            RealVerb::Compare { x, y } => commands::real_compare_cmd(x, y, cli.max),
            RealVerb::Between { x, y } => commands::real_between_cmd(x, y, cli.max),
            RealVerb::Archimedean { x, y } => commands::real_archimedean_cmd(x, y, cli.max),
            RealVerb::Sup { xs } => commands::real_sup_cmd(xs, cli.bits, cli.digits),
        },
        Command::Laws { suite } => commands::laws_cmd(suite.as_str(), cli.seed, cli.max),
    }
}

fn main() {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{:#}", out.json);
            } else {
                print!("{}", out.text);
            }
            if let Some(reason) = out.failure {
                eprintln!("error: check-failed: {reason}");
                std::process::exit(1);
            }
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.code());
            std::process::exit(1);
        }
    }
}
