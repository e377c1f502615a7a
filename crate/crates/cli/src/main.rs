//! `esvq`: normal ordering, brackets, twisted coproduct/antipode and the
//! verification suites from the command line.
//!
//! Exit codes: 0 success, 1 a verification mismatch, 2 expression parse
//! error, 3 configuration error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use esvq_core::expr::{parse_expression, parse_half_integer, ParseError};
use esvq_core::hopf::{closed_form_antipode, closed_form_coproduct, Quantization};
use esvq_core::render::{render_tensor, render_upoly, Format};
use esvq_core::suites::{run_suite, Suite, SuiteConfig};
use esvq_core::{AlgebraError, Check, TwistContext, UPoly};

const EXIT_MISMATCH: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CONFIG: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "esvq", version, about = "Twist quantization of the extended Schrödinger–Virasoro algebra")]
struct Cli {
    /// Twist parameter p as a half-integer `a/2` with `a` odd.
    #[arg(long = "p", global = true, default_value = "1/2", allow_hyphen_values = true)]
    p: String,

    /// Truncation order N in t.
    #[arg(long, global = true, env = "ESVQ_ORDER", default_value_t = 3)]
    order: u32,

    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,

    /// Bound K on doubled generator indices used by the suites.
    #[arg(long = "index-range", global = true, default_value_t = 4)]
    index_range: i64,

    /// Seed for random samples.
    #[arg(long, global = true, default_value_t = esvq_core::sample::DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse an expression and print its PBW normal form.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// `[a, b] = ab - ba`.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Quantized coproduct.
    Coproduct {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Method::Twist)]
        method: Method,
    },
    /// Quantized antipode.
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Method::Twist)]
        method: Method,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Text,
    Json,
    Latex,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Json => Format::Json,
            OutFormat::Latex => Format::Latex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Twist,
    Closed,
}

#[derive(Debug)]
enum Failure {
    Parse(ParseError),
    Config(String),
    Mismatch,
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::Config(e.to_string())
    }
}

fn parse_p2(s: &str) -> Result<i64, Failure> {
    parse_half_integer(s)
        .ok_or_else(|| Failure::Config(format!("--p must be a half-integer a/2 with a odd, got '{s}'")))
}

fn single_generator(x: &UPoly, src: &str) -> Result<esvq_core::Generator, Failure> {
    x.as_generator()
        .ok_or_else(|| Failure::Config(format!("--method closed needs a single generator, got '{src}'")))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let p2 = parse_p2(&cli.p)?;
    let ctx = TwistContext::new(p2, cli.order)?;
    let format: Format = cli.format.into();
    let order = cli.order;
    let io = |e: std::io::Error| Failure::Config(format!("write failed: {e}"));

    match cli.command {
        Command::Normalize { expr } => {
            let x = parse_expression(&expr, order)?;
            writeln!(out, "{}", render_upoly(&x, format)).map_err(io)?;
        }
        Command::Bracket { a, b } => {
            let x = parse_expression(&a, order)?;
            let y = parse_expression(&b, order)?;
            let z = x.mul(&y)?.sub(&y.mul(&x)?)?;
            writeln!(out, "{}", render_upoly(&z, format)).map_err(io)?;
        }
        Command::Coproduct { expr, method } => {
            let x = parse_expression(&expr, order)?;
            let d = match method {
                Method::Twist => Quantization::new(ctx)?.coproduct(&x)?,
                Method::Closed => closed_form_coproduct(single_generator(&x, &expr)?, &ctx)?,
            };
            writeln!(out, "{}", render_tensor(&d, format)).map_err(io)?;
        }
        Command::Antipode { expr, method } => {
            let x = parse_expression(&expr, order)?;
            let s = match method {
                Method::Twist => Quantization::new(ctx)?.antipode(&x)?,
                Method::Closed => closed_form_antipode(single_generator(&x, &expr)?, &ctx)?,
            };
            writeln!(out, "{}", render_upoly(&s, format)).map_err(io)?;
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(Failure::Config)?;
            let cfg = SuiteConfig {
                p2,
                order,
                index_range: cli.index_range,
                seed: cli.seed,
                ..SuiteConfig::default()
            };
            let json = matches!(format, Format::Json);
            let mut write_err = None;
            let report = run_suite(suite, &cfg, &mut |c: &Check| {
                let line = if json { check_json(c) } else { c.to_string() };
                if let Err(e) = writeln!(out, "{line}").and_then(|_| out.flush()) {
                    write_err.get_or_insert(e);
                }
            })?;
            if let Some(e) = write_err {
                return Err(io(e));
            }
            let summary = report.summary_line();
            if json {
                let v = serde_json::json!({ "suite": suite.name(), "summary": summary });
                writeln!(out, "{v}").map_err(io)?;
            } else {
                writeln!(out, "{summary}").map_err(io)?;
            }
            if !report.passed() {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn check_json(c: &Check) -> String {
    serde_json::json!({
        "label": c.label,
        "passed": c.passed,
        "mismatch": c.mismatch.as_ref().map(|m| m.to_string()),
        "note": c.note,
    })
    .to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_CONFIG) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(EXIT_MISMATCH),
        Err(Failure::Parse(e)) => {
            eprintln!("esvq: {e}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("esvq: {msg}");
            ExitCode::from(EXIT_CONFIG)
        }
    }
}
