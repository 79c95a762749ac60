mod commands;
mod render;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use commands::{CliCoeff, Options};
use dickson_core::padic::{parse_qp_spec, DEFAULT_PRECISION};
use dickson_core::{FiniteField, PadicQuadExt, QuadField, QuaternionAlgebra};
use spec::AlgebraSpec;

#[derive(Parser)]
#[command(name = "dickson", version, about = "Dickson doubling algebras: division, nuclei, isomorphisms, automorphisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized sampling.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Accept σ = id.
    #[arg(long, global = true)]
    allow_identity: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct AlgebraArgs {
    /// JSON spec document {coeff, sigma, c, variant}.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// gf(p,n[;modulus]), quad(a), qp(p), qp(p;sqrt_p|sqrt_u|sqrt_up), quat(a,b).
    #[arg(long)]
    coeff: Option<String>,
    /// frobenius:k, conjugate, conjugation:x,y,z,w or id.
    #[arg(long)]
    sigma: Option<String>,
    /// Element literal for c.
    #[arg(long)]
    c: Option<String>,
    /// commutative, left, middle or right.
    #[arg(long)]
    variant: Option<String>,
}

impl AlgebraArgs {
    fn resolve(&self) -> Result<AlgebraSpec> {
        AlgebraSpec::resolve(
            self.spec.as_ref(),
            self.coeff.as_ref(),
            self.sigma.as_ref(),
            self.c.as_ref(),
            self.variant.as_ref(),
        )
    }
}

#[derive(Args, Clone)]
struct SecondAlgebraArgs {
    #[arg(long)]
    spec2: Option<PathBuf>,
    #[arg(long)]
    coeff2: Option<String>,
    #[arg(long)]
    sigma2: Option<String>,
    #[arg(long)]
    c2: Option<String>,
    #[arg(long)]
    variant2: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the algebra and sample the unit, distributive and commutative laws.
    Construct {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Number of random samples.
        #[arg(long, default_value_t = 500)]
        trials: usize,
    },
    /// Left, middle and right nuclei, nucleus, commuter and center.
    Nuclei {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Decide whether the algebra is a division algebra.
    Division {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Enumerate automorphisms and verify the group structure.
    Autgroup {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Automorphism witnesses of the coefficient algebra (repeatable).
        #[arg(long)]
        tau: Vec<String>,
    },
    /// Test two algebras for isomorphism. Missing second-algebra flags
    /// default to those of the first.
    Iso {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        second: SecondAlgebraArgs,
        #[arg(long)]
        tau: Vec<String>,
    },
    /// Division verdicts and isomorphism classes over GF(p^n).
    Census {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        /// Largest field order to accept.
        #[arg(long, default_value_t = dickson_core::analysis::census::CENSUS_MAX_ORDER)]
        max_order: u64,
    },
    /// The inner map built from λ = (0, 1) and its left inverse.
    Wene {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Zero divisor from (r, s, t), with c set to the matching critical value.
    WitnessZeroDivisor {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        s: Option<String>,
        #[arg(long)]
        t: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Construct { .. } => "construct",
            Command::Nuclei { .. } => "nuclei",
            Command::Division { .. } => "division",
            Command::Autgroup { .. } => "autgroup",
            Command::Iso { .. } => "iso",
            Command::Census { .. } => "census",
            Command::Wene { .. } => "wene",
            Command::WitnessZeroDivisor { .. } => "witness-zero-divisor",
        }
    }
}

#[derive(Serialize)]
struct ReportEnvelope {
    version: &'static str,
    command: &'static str,
    input: Value,
    result: Value,
    wall_time_ms: f64,
}

/// Runs `$body` with `$k` bound to the parsed coefficient algebra.
macro_rules! with_coeff {
    ($text:expr, |$k:ident| $body:expr) => {{
        let text: &str = $text.trim();
        if text.starts_with("gf(") {
            let $k = FiniteField::parse_spec(text)?;
            $body
        } else if text.starts_with("quad(") {
            let $k = QuadField::parse_spec(text)?;
            $body
        } else if text.starts_with("qp(") && text.contains(';') {
            let $k = PadicQuadExt::parse_spec(text, DEFAULT_PRECISION)?;
            $body
        } else if text.starts_with("qp(") {
            let $k = parse_qp_spec(text, DEFAULT_PRECISION)?;
            $body
        } else if text.starts_with("quat(") {
            let $k = QuaternionAlgebra::parse_spec(text)?;
            $body
        } else {
            bail!("unknown coefficient algebra {text:?}")
        }
    }};
}

fn single<A: CliCoeff>(k: A, spec: &AlgebraSpec, opts: &Options, cmd: &Command) -> Result<Value> {
    if let Command::WitnessZeroDivisor { r, s, t, .. } = cmd {
        return commands::witness(k, spec, [r.as_ref(), s.as_ref(), t.as_ref()], opts);
    }
    let d = commands::build(k, spec, opts)?;
    match cmd {
        Command::Construct { .. } => commands::construct(&d, opts),
        Command::Nuclei { .. } => commands::nuclei(&d),
        Command::Division { .. } => commands::division(&d),
        Command::Autgroup { tau, .. } => commands::autgroup(&d, tau),
        Command::Wene { .. } => commands::wene(&d),
        _ => unreachable!("handled by the caller"),
    }
}

fn pair<A: CliCoeff + 'static>(k: A, first: &AlgebraSpec, second: &AlgebraSpec, opts: &Options, tau: &[String]) -> Result<Value> {
    let d1 = commands::build(k.clone(), first, opts)?;
    let k2 = if second.coeff.trim() == first.coeff.trim() {
        k
    } else {
        with_coeff!(second.coeff, |k2| {
            let any: &dyn std::any::Any = &k2;
            match any.downcast_ref::<A>() {
                Some(k2) => k2.clone(),
                None => bail!("iso needs two coefficient algebras of the same kind"),
            }
        })
    };
    let d2 = commands::build(k2, second, opts)?;
    commands::iso(&d1, &d2, tau)
}

fn run(cli: &Cli) -> Result<(Value, Value)> {
    let opts = Options {
        seed: cli.seed,
        allow_identity: cli.allow_identity,
        trials: match &cli.command {
            Command::Construct { trials, .. } => *trials,
            _ => 0,
        },
    };
    match &cli.command {
        Command::Census { p, n, max_order } => {
            let input = serde_json::json!({ "p": p, "n": n, "max_order": max_order });
            Ok((input, commands::census(*p, *n, *max_order)?))
        }
        Command::Iso { algebra, second, tau } => {
            let first = algebra.resolve()?;
            let second = AlgebraSpec::resolve(
                second.spec2.as_ref(),
                second.coeff2.as_ref().or(Some(&first.coeff)),
                second.sigma2.as_ref().or(Some(&first.sigma)),
                second.c2.as_ref().or(first.c.as_ref()),
                second.variant2.as_ref().or(Some(&first.variant)),
            )?;
            let input = serde_json::json!({ "first": first, "second": second, "tau": tau });
            let result = with_coeff!(first.coeff, |k| pair(k, &first, &second, &opts, tau))?;
            Ok((input, result))
        }
        Command::Construct { algebra, .. }
        | Command::Nuclei { algebra }
        | Command::Division { algebra }
        | Command::Autgroup { algebra, .. }
        | Command::Wene { algebra }
        | Command::WitnessZeroDivisor { algebra, .. } => {
            let spec = algebra.resolve()?;
            let mut input = serde_json::to_value(&spec)?;
            if let Command::Autgroup { tau, .. } = &cli.command {
                input["tau"] = serde_json::to_value(tau)?;
            }
            let result = with_coeff!(spec.coeff, |k| single(k, &spec, &opts, &cli.command))?;
            Ok((input, result))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok((input, result)) => {
            let command = cli.command.name();
            match cli.format {
                Format::Json => {
                    let envelope = ReportEnvelope {
                        version: env!("CARGO_PKG_VERSION"),
                        command,
                        input,
                        result,
                        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
                    };
                    println!("{}", serde_json::to_string_pretty(&envelope).expect("serializable"));
                }
                Format::Text => print!("{}", render::render_text(command, &result)),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
