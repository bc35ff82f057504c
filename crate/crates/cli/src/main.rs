//! `grmlab`: weighted Gabriel-Roiter measures, rejective chains and
//! quasihereditary certification for bound quiver algebras over prime
//! fields.
//!
//! Exit codes: 0 = success / all checks pass; 1 = a verification check
//! failed (the report carries the witnesses); 2 = malformed input, I/O
//! problems or a search cap was exceeded.

mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grm_core::chains::{adr_chain, gr_chain, iyama_chain, verify_chain, ChainKind, RejectiveChain};
use grm_core::config::Caps;
use grm_core::error::Error;
use grm_core::expr::parse_module_expr;
use grm_core::gamma::certify_chain;
use grm_core::io::{algebra_from_file, chain_from_file};
use grm_core::measure::gr_measure;
use grm_core::module::LengthFunction;
use grm_core::quiver::BoundQuiverAlgebra;
use grm_core::rational::Rational;
use report::{ConfigEcho, Report};
use std::path::{Path, PathBuf};
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "grmlab",
    about = "Weighted Gabriel-Roiter measures, rejective chains and quasihereditary certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Gr,
    Iyama,
    Adr,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

#[derive(Args)]
struct Common {
    /// Path to the algebra description (JSON).
    #[arg(long)]
    algebra: PathBuf,
    /// Cap on submodule lattice size.
    #[arg(long, default_value_t = 20_000)]
    max_submodules: usize,
    /// Cap on endomorphism-algebra enumeration (number of field elements).
    #[arg(long, default_value_t = 1 << 20)]
    max_enum: u128,
    /// Cap on hom-space enumeration during isomorphism searches.
    #[arg(long, default_value_t = 1 << 16)]
    max_hom_enum: u128,
    /// Cap on iterated projective covers (default: ell + dim Gamma).
    #[arg(long)]
    pd_cap: Option<usize>,
    /// Seed for randomized search fallbacks (GRMLAB_SEED overrides the
    /// default; an explicit flag wins over the environment).
    #[arg(long)]
    seed: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the weighted measure of a module with a witness chain.
    Measure {
        #[command(flatten)]
        common: Common,
        /// Module expression: P:v, I:v, S:v, Lambda, DLambda, sums with '+',
        /// or @file.json for explicit matrices.
        #[arg(long)]
        module: String,
        /// Comma-separated positive weights, one per vertex ("1,2" or
        /// "1/2,3").
        #[arg(long)]
        weights: String,
    },
    /// Build a chain (Gabriel-Roiter, Iyama or ADR) and print its data.
    Chain {
        #[command(flatten)]
        common: Common,
        #[arg(long, required_if_eq("kind", "gr"))]
        module: Option<String>,
        /// Required for the gr kind; ignored by adr.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, value_enum, default_value_t = KindArg::Gr)]
        kind: KindArg,
    },
    /// Full pipeline: build the chain, the endomorphism algebra, and check
    /// the left strongly quasihereditary conditions.
    Certify {
        #[command(flatten)]
        common: Common,
        #[arg(long, required_if_eq("kind", "gr"))]
        module: Option<String>,
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, value_enum, default_value_t = KindArg::Gr)]
        kind: KindArg,
    },
    /// Verify a user-supplied chain of subcategories.
    VerifyChain {
        #[command(flatten)]
        common: Common,
        /// JSON file: {"levels": [[expr-or-inline-module, ...], ...]}.
        #[arg(long)]
        chain: PathBuf,
    },
    /// Decompose a module into indecomposables.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        module: String,
    },
    /// Global dimension of the certified endomorphism algebra.
    Gldim {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        module: String,
        #[arg(long)]
        weights: String,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    });
}

fn caps_of(common: &Common) -> Caps {
    let seed = common
        .seed
        .or_else(|| {
            std::env::var("GRMLAB_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or_else(|| Caps::default().seed);
    Caps {
        max_enum_field_power: common.max_enum,
        max_hom_enum: common.max_hom_enum,
        max_submodules: common.max_submodules,
        pd_cap: common.pd_cap,
        seed,
        ..Caps::default()
    }
}

fn parse_weights(alg: &Arc<BoundQuiverAlgebra>, text: &str) -> Result<LengthFunction, Error> {
    let weights = text
        .split(',')
        .map(|w| w.trim().parse::<Rational>())
        .collect::<Result<Vec<_>, _>>()?;
    if weights.len() != alg.quiver().vertex_count() {
        return Err(Error::InvalidInput(format!(
            "expected {} weights, got {}",
            alg.quiver().vertex_count(),
            weights.len()
        )));
    }
    LengthFunction::new(weights)
}

fn base_dir(p: &Path) -> PathBuf {
    p.parent()
        .filter(|d| !d.as_os_str().is_empty())
        .map(|d| d.to_path_buf())
        .unwrap_or_else(|| PathBuf::from("."))
}

struct Ctx {
    alg: Arc<BoundQuiverAlgebra>,
    caps: Caps,
    echo: ConfigEcho,
    output: Option<PathBuf>,
    format: String,
}

fn context(common: &Common, command: &str) -> Result<Ctx, Error> {
    let alg = algebra_from_file(&common.algebra)?;
    let caps = caps_of(common);
    let format = match common.format {
        FormatArg::Json => "json",
        FormatArg::Tsv => "tsv",
    };
    let echo = ConfigEcho {
        command: command.to_string(),
        algebra: common.algebra.display().to_string(),
        prime: alg.field().p(),
        module: None,
        weights: None,
        kind: None,
        chain_file: None,
        max_submodules: caps.max_submodules,
        max_enum: caps.max_enum_field_power,
        max_hom_enum: caps.max_hom_enum,
        pd_cap: caps.pd_cap,
        seed: caps.seed,
        format: format.to_string(),
    };
    Ok(Ctx {
        alg,
        caps,
        echo,
        output: common.output.clone(),
        format: format.to_string(),
    })
}

fn emit(ctx: &Ctx, payload: serde_json::Value) -> Result<(), Error> {
    let report = Report {
        config: ConfigEcho {
            command: ctx.echo.command.clone(),
            algebra: ctx.echo.algebra.clone(),
            prime: ctx.echo.prime,
            module: ctx.echo.module.clone(),
            weights: ctx.echo.weights.clone(),
            kind: ctx.echo.kind.clone(),
            chain_file: ctx.echo.chain_file.clone(),
            max_submodules: ctx.echo.max_submodules,
            max_enum: ctx.echo.max_enum,
            max_hom_enum: ctx.echo.max_hom_enum,
            pd_cap: ctx.echo.pd_cap,
            seed: ctx.echo.seed,
            format: ctx.echo.format.clone(),
        },
        payload,
    };
    let text = report::render(&report, &ctx.format);
    match &ctx.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build_chain(
    ctx: &mut Ctx,
    kind: KindArg,
    module: &Option<String>,
    weights: &Option<String>,
    algebra_path: &Path,
) -> Result<RejectiveChain, Error> {
    let dir = base_dir(algebra_path);
    match kind {
        KindArg::Gr => {
            let expr = module
                .as_ref()
                .ok_or_else(|| Error::InvalidInput("--module is required for gr".into()))?;
            let w = weights
                .as_ref()
                .ok_or_else(|| Error::InvalidInput("--weights is required for gr".into()))?;
            let m = parse_module_expr(&ctx.alg, expr, &dir)?;
            let lambda = parse_weights(&ctx.alg, w)?;
            ctx.echo.module = Some(expr.clone());
            ctx.echo.weights = Some(lambda.weights().iter().map(|r| r.to_string()).collect());
            ctx.echo.kind = Some("gr".into());
            gr_chain(&m, &lambda, &ctx.caps)
        }
        KindArg::Iyama => {
            let expr = module
                .as_ref()
                .ok_or_else(|| Error::InvalidInput("--module is required for iyama".into()))?;
            let m = parse_module_expr(&ctx.alg, expr, &dir)?;
            ctx.echo.module = Some(expr.clone());
            ctx.echo.kind = Some("iyama".into());
            iyama_chain(&m, &ctx.caps)
        }
        KindArg::Adr => {
            ctx.echo.kind = Some("adr".into());
            if let Some(expr) = module {
                ctx.echo.module = Some(expr.clone());
            }
            adr_chain(&ctx.alg, &ctx.caps)
        }
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Measure {
            common,
            module,
            weights,
        } => {
            let mut ctx = context(&common, "measure")?;
            let m = parse_module_expr(&ctx.alg, &module, &base_dir(&common.algebra))?;
            let lambda = parse_weights(&ctx.alg, &weights)?;
            ctx.echo.module = Some(module);
            ctx.echo.weights = Some(lambda.weights().iter().map(|r| r.to_string()).collect());
            let (mu, witness) = gr_measure(&m, &lambda, &ctx.caps)?;
            emit(&ctx, report::measure_payload(&ctx.alg, &mu, &witness))?;
            Ok(0)
        }
        Command::Chain {
            common,
            module,
            weights,
            kind,
        } => {
            let mut ctx = context(&common, "chain")?;
            let chain = build_chain(&mut ctx, kind, &module, &weights, &common.algebra)?;
            emit(&ctx, report::chain_payload(&chain))?;
            Ok(0)
        }
        Command::Certify {
            common,
            module,
            weights,
            kind,
        } => {
            let mut ctx = context(&common, "certify")?;
            let chain = match kind {
                KindArg::Iyama => {
                    // right-handed data: certify the dual chain over the
                    // opposite algebra
                    let chain = build_chain(&mut ctx, kind, &module, &weights, &common.algebra)?;
                    dualize_chain(&chain)?
                }
                _ => build_chain(&mut ctx, kind, &module, &weights, &common.algebra)?,
            };
            let cert = certify_chain(&chain, &ctx.caps)?;
            let pass = cert.pass;
            emit(&ctx, report::certificate_payload(&chain.algebra, &cert))?;
            Ok(if pass { 0 } else { 1 })
        }
        Command::VerifyChain { common, chain } => {
            let mut ctx = context(&common, "verify-chain")?;
            ctx.echo.chain_file = Some(chain.display().to_string());
            let file = chain_from_file(&chain)?;
            let levels = file.to_levels(&ctx.alg, &base_dir(&chain))?;
            let verdict = verify_chain(&levels, &ctx.caps)?;
            let ok = verdict.rejective;
            emit(&ctx, report::verdict_payload(&verdict))?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Decompose { common, module } => {
            let mut ctx = context(&common, "decompose")?;
            let m = parse_module_expr(&ctx.alg, &module, &base_dir(&common.algebra))?;
            ctx.echo.module = Some(module);
            let dec = grm_core::decomp::decompose(&m, &ctx.caps)?;
            emit(&ctx, report::decompose_payload(&ctx.alg, &dec))?;
            Ok(0)
        }
        Command::Gldim {
            common,
            module,
            weights,
        } => {
            let mut ctx = context(&common, "gldim")?;
            let m = parse_module_expr(&ctx.alg, &module, &base_dir(&common.algebra))?;
            let lambda = parse_weights(&ctx.alg, &weights)?;
            ctx.echo.module = Some(module);
            ctx.echo.weights = Some(lambda.weights().iter().map(|r| r.to_string()).collect());
            ctx.echo.kind = Some("gr".into());
            let chain = gr_chain(&m, &lambda, &ctx.caps)?;
            let cert = certify_chain(&chain, &ctx.caps)?;
            let pass = cert.pass;
            emit(
                &ctx,
                serde_json::json!({
                    "ell": cert.ell,
                    "gldim": cert.gldim,
                    "verdict": cert.verdict(),
                }),
            )?;
            Ok(if pass { 0 } else { 1 })
        }
    }
}

/// Replace a chain of submodules by its dual chain of quotients over the
/// opposite algebra, keeping levels and multiplicities.
fn dualize_chain(chain: &RejectiveChain) -> Result<RejectiveChain, Error> {
    let op = chain.algebra.opposite()?;
    let steps = chain
        .steps
        .iter()
        .map(|s| grm_core::chains::ChainStep {
            module: s.module.dual(op.clone()),
            measure: None,
        })
        .collect();
    let phi = chain
        .phi
        .iter()
        .map(|c| grm_core::chains::PhiClass {
            representative: c.representative.dual(op.clone()),
            level: c.level,
            multiplicity: c.multiplicity,
            measure: None,
        })
        .collect();
    Ok(RejectiveChain {
        algebra: op,
        kind: ChainKind::Iyama,
        lambda: None,
        steps,
        phi,
    })
}
