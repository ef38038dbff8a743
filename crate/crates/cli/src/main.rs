//! `mfkit`: command-line front end for the matrix factorisation toolkit.
//!
//! Exit codes: 0 success, 1 verification failure or refuted isomorphism,
//! 2 input error, 3 inconclusive isomorphism search.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use mfkit::catalog::{CatalogKind, CurvePoint, WeierstrassCurve};
use mfkit::hom::{
    duality_image, is_stably_isomorphic, picard_tensor, stable_hom_basis, IsoOutcome,
};
use mfkit::json::{
    CatalogEntryJson, HomJson, MfJson, MorphismJson, PresentationJson, ResolutionJson,
};
use mfkit::mf::{extract_mf, ExtractMode, MatrixFactorization};
use mfkit::resolution::Presentation;
use mfkit::{FieldSpec, PolyRing, Scalar};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "mfkit", version, about = "Graded matrix factorisations over elliptic cones")]
struct Cli {
    /// Ground field: QQ or a prime (F_101, Fp:101, 101).
    #[arg(long, global = true, default_value = "QQ")]
    field: String,
    /// Write JSON here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomised isomorphism search.
    #[arg(long, global = true, env = "MFKIT_SEED", default_value_t = 0)]
    seed: u64,
    /// Worker threads for batch verification.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check βα = αβ = f·I and the grading of a factorisation.
    Verify { input: PathBuf },
    /// Minimal graded free resolution of a module.
    Resolve {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value_t = 4)]
        length: usize,
    },
    /// Matrix factorisation attached to a module.
    Extract {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, value_enum, default_value = "point")]
        mode: Mode,
        /// Differential index for `--mode raw`.
        #[arg(long, default_value_t = 2)]
        s: usize,
    },
    /// Explicit factorisations of the classification.
    Catalog {
        #[command(flatten)]
        curve: CurveArgs,
        /// Family name, or `all`.
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Use the point at infinity.
        #[arg(long)]
        point_e: bool,
        /// Every affine point (all of them over F_p, integral ones over QQ).
        #[arg(long)]
        all_points: bool,
        /// Bound on |λ| for integral points over QQ.
        #[arg(long, default_value_t = 10)]
        bound: i64,
    },
    /// Mapping cone of a morphism.
    Cone {
        input: PathBuf,
        #[arg(long)]
        reduce: bool,
    },
    /// Stable Hom from M[shift] to N.
    Hom {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        shift: i64,
    },
    /// Decide stable isomorphism.
    Iso { first: PathBuf, second: PathBuf },
    /// Middle term of the almost split sequence ending in coker M.
    Ar { input: PathBuf },
    /// Transpose (αᵀ, βᵀ) with dual twists.
    Transpose { input: PathBuf },
    /// Grading twist M(n).
    Twist {
        input: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Suspension M[k].
    Shift {
        input: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Tensor with O(sign) through the twist functor of Φ(O).
    Picard {
        input: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        sign: i64,
    },
    /// Image of the duality functor.
    Duality { input: PathBuf },
    /// Remove unit entries.
    Reduce { input: PathBuf },
}

#[derive(clap::Args, Debug)]
struct CurveArgs {
    /// Coefficients a b of Y^2 Z = X^3 + aXZ^2 + bZ^3.
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true, default_values = ["0", "1"])]
    curve: Vec<String>,
}

#[derive(clap::Args, Debug)]
struct ModuleArgs {
    /// `K`, `point λ μ`, `point e`, or a presentation JSON file.
    #[arg(long, num_args = 1..=3, required = true, allow_negative_numbers = true)]
    module: Vec<String>,
    #[command(flatten)]
    curve: CurveArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    StructureSheaf,
    Point,
    Raw,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let field: FieldSpec = cli.field.parse()?;
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Verify { input } => {
            let m = read_mf(input)?;
            let r = m.verify();
            eprintln!("{r}");
            let cells = |v: &[(usize, usize)]| -> Vec<[usize; 2]> { v.iter().map(|&(i, j)| [i, j]).collect() };
            let degrees = |v: &[mfkit::matrix::DegreeViolation]| -> Vec<String> {
                v.iter().map(|d| d.to_string()).collect()
            };
            emit(
                &json!({
                    "valid": r.is_valid(),
                    "shape": r.shape,
                    "alpha_degrees": degrees(&r.alpha_degrees),
                    "beta_degrees": degrees(&r.beta_degrees),
                    "beta_alpha": cells(&r.beta_alpha),
                    "alpha_beta": cells(&r.alpha_beta),
                }),
                out,
            )?;
            Ok(if r.is_valid() { 0 } else { 1 })
        }
        Command::Resolve { module, length } => {
            let p = read_module(module, field)?;
            let res = p.minimal_resolution(*length)?;
            eprintln!("ranks {:?}", res.ranks());
            if let Some(t) = &res.periodic_tail {
                eprintln!("periodic from d^{}", t.start);
            }
            emit(&serde_json::to_value(ResolutionJson::from_resolution(&res))?, out)?;
            Ok(0)
        }
        Command::Extract { module, mode, s } => {
            let p = read_module(module, field)?;
            let mode = match mode {
                Mode::StructureSheaf => ExtractMode::StructureSheaf,
                Mode::Point => ExtractMode::Point,
                Mode::Raw => ExtractMode::Raw(*s),
            };
            let m = extract_mf(&p, mode)?;
            report_mf(&m);
            emit_mf(&m, out)?;
            Ok(0)
        }
        Command::Catalog {
            curve,
            kind,
            lambda,
            mu,
            point_e,
            all_points,
            bound,
        } => {
            let c = read_curve(curve, field)?;
            let points: Vec<CurvePoint> = if *all_points {
                match c.affine_points() {
                    Some(p) => p,
                    None => c.integral_points(*bound),
                }
            } else if *point_e {
                vec![CurvePoint::Infinity]
            } else {
                match (lambda, mu) {
                    (Some(l), Some(m)) => {
                        let p = CurvePoint::Affine(scalar(field, l)?, scalar(field, m)?);
                        c.check_point(&p)?;
                        vec![p]
                    }
                    (None, None) => vec![],
                    _ => bail!("--lambda and --mu go together"),
                }
            };
            let kinds = catalog_kinds(kind, &points)?;
            let entries = with_pool(cli.jobs, || {
                kinds
                    .par_iter()
                    .map(|k| -> anyhow::Result<CatalogEntryJson> {
                        let m = c.catalog_mf(k)?;
                        Ok(CatalogEntryJson::new(&c, k, &m))
                    })
                    .collect::<anyhow::Result<Vec<_>>>()
            })??;
            let bad = entries.iter().filter(|e| !e.verified).count();
            eprintln!(
                "{} factorisations over {}, {} verified",
                entries.len(),
                c.field(),
                entries.len() - bad
            );
            emit(&serde_json::to_value(&entries)?, out)?;
            Ok(if bad == 0 { 0 } else { 1 })
        }
        Command::Cone { input, reduce } => {
            let phi = MorphismJson::to_morphism(&serde_json::from_str(&read_text(input)?)?)?;
            let mut c = phi.cone()?;
            if *reduce {
                c = c.reduce();
            }
            report_mf(&c);
            emit_mf(&c, out)?;
            Ok(0)
        }
        Command::Hom {
            source,
            target,
            shift,
        } => {
            let h = stable_hom_basis(&read_mf(source)?, &read_mf(target)?, *shift)?;
            eprintln!(
                "strict {} homotopies {} stable {}",
                h.strict_dim, h.homotopy_dim, h.stable_dim
            );
            emit(&serde_json::to_value(HomJson::from_basis(&h))?, out)?;
            Ok(0)
        }
        Command::Iso { first, second } => {
            eprintln!("seed {}", cli.seed);
            let outcome = is_stably_isomorphic(&read_mf(first)?, &read_mf(second)?, cli.seed)?;
            let (value, code) = match &outcome {
                IsoOutcome::Isomorphic { forward, backward } => {
                    eprintln!("isomorphic");
                    (
                        json!({
                            "result": "isomorphic",
                            "seed": cli.seed,
                            "forward": MorphismJson::from_morphism(forward),
                            "backward": MorphismJson::from_morphism(backward),
                        }),
                        0,
                    )
                }
                IsoOutcome::NotIsomorphic(why) => {
                    eprintln!("not isomorphic: {why}");
                    (
                        json!({"result": "not-isomorphic", "seed": cli.seed, "reason": why}),
                        1,
                    )
                }
                IsoOutcome::Inconclusive { samples } => {
                    eprintln!("inconclusive after {samples} samples");
                    (
                        json!({"result": "inconclusive", "seed": cli.seed, "samples": samples}),
                        3,
                    )
                }
            };
            emit(&value, out)?;
            Ok(code)
        }
        Command::Ar { input } => {
            let m = read_mf(input)?;
            let c = WeierstrassCurve::from_potential(&m.ring, &m.f)?;
            let mid = c.ar_middle(&m)?;
            let hf: Vec<u64> = (0..8)
                .map(|i| mid.hilbert_function(i))
                .collect::<mfkit::Result<_>>()?;
            eprintln!("generators {:?}, HF(0..8) {hf:?}", mid.twists());
            emit(&serde_json::to_value(PresentationJson::from_presentation(&mid))?, out)?;
            Ok(0)
        }
        Command::Transpose { input } => unary(input, out, |m| Ok(m.transpose())),
        Command::Twist { input, n } => unary(input, out, |m| Ok(m.twist(*n))),
        Command::Shift { input, k } => unary(input, out, |m| Ok(m.shift(*k))),
        Command::Reduce { input } => unary(input, out, |m| Ok(m.reduce())),
        Command::Picard { input, sign } => unary(input, out, |m| {
            let o = structure_sheaf_of(m)?;
            Ok(picard_tensor(&o, m, *sign)?)
        }),
        Command::Duality { input } => unary(input, out, |m| {
            let o = structure_sheaf_of(m)?;
            Ok(duality_image(&o, m)?)
        }),
    }
}

fn unary(
    input: &Path,
    out: Option<&Path>,
    op: impl FnOnce(&MatrixFactorization) -> anyhow::Result<MatrixFactorization>,
) -> anyhow::Result<u8> {
    let m = read_mf(input)?;
    let r = op(&m)?;
    report_mf(&r);
    emit_mf(&r, out)?;
    Ok(0)
}

fn structure_sheaf_of(m: &MatrixFactorization) -> anyhow::Result<MatrixFactorization> {
    let c = WeierstrassCurve::from_potential(&m.ring, &m.f)
        .context("the functor needs a Weierstrass potential")?;
    Ok(c.catalog_mf(&CatalogKind::StructureSheaf)?)
}

fn catalog_kinds(kind: &str, points: &[CurvePoint]) -> anyhow::Result<Vec<CatalogKind>> {
    if kind == "all" {
        let affine: Vec<CurvePoint> =
            points.iter().filter(|p| **p != CurvePoint::Infinity).cloned().collect();
        return Ok(WeierstrassCurve::all_kinds(&affine));
    }
    let needs_point = matches!(kind, "point" | "lb-minus-p" | "lb-e-plus-p" | "lb-2e-plus-p");
    if !needs_point {
        return Ok(vec![CatalogKind::from_name(kind, None)?]);
    }
    if points.is_empty() {
        bail!("kind `{kind}` needs --lambda/--mu, --point-e or --all-points");
    }
    points
        .iter()
        .map(|p| Ok(CatalogKind::from_name(kind, Some(p.clone()))?))
        .collect()
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| anyhow!("thread pool: {e}"))?;
    Ok(pool.install(f))
}

fn scalar(field: FieldSpec, s: &str) -> anyhow::Result<Scalar> {
    let p = PolyRing::xyz(field).parse(s)?;
    match p.degree() {
        None => Ok(field.zero()),
        Some(0) => Ok(p.constant_term().unwrap_or_else(|| field.zero())),
        _ => bail!("`{s}` is not a field element"),
    }
}

fn read_curve(args: &CurveArgs, field: FieldSpec) -> anyhow::Result<WeierstrassCurve> {
    let [a, b] = args.curve.as_slice() else {
        bail!("--curve takes two values");
    };
    Ok(WeierstrassCurve::new(field, scalar(field, a)?, scalar(field, b)?)?)
}

fn read_module(args: &ModuleArgs, field: FieldSpec) -> anyhow::Result<Presentation> {
    let spec: Vec<&str> = args.module.iter().map(String::as_str).collect();
    match spec.as_slice() {
        ["K"] | ["k"] => Ok(read_curve(&args.curve, field)?.residue_field()),
        ["point", "e"] => Ok(read_curve(&args.curve, field)?.point_module(&CurvePoint::Infinity)?),
        ["point", l, m] => {
            let c = read_curve(&args.curve, field)?;
            let p = CurvePoint::Affine(scalar(field, l)?, scalar(field, m)?);
            Ok(c.point_module(&p)?)
        }
        [path] => {
            let j: PresentationJson = serde_json::from_str(&read_text(Path::new(path))?)
                .with_context(|| format!("reading presentation {path}"))?;
            Ok(j.to_presentation()?)
        }
        _ => bail!("--module expects `K`, `point λ μ`, `point e` or a file"),
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_mf(path: &Path) -> anyhow::Result<MatrixFactorization> {
    let j: MfJson = serde_json::from_str(&read_text(path)?)
        .with_context(|| format!("parsing {}", path.display()))?;
    Ok(j.to_mf()?)
}

fn report_mf(m: &MatrixFactorization) {
    eprintln!(
        "rank {}, P0 {:?}, P1 {:?}, {}",
        m.rank(),
        m.p0(),
        m.p1(),
        if m.is_valid() { "verified" } else { "NOT a factorisation" }
    );
}

fn emit_mf(m: &MatrixFactorization, out: Option<&Path>) -> anyhow::Result<()> {
    emit(&serde_json::to_value(MfJson::from_mf(m))?, out)
}

fn emit(v: &Value, out: Option<&Path>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(v)?;
    match out {
        Some(p) => std::fs::write(p, text + "\n").with_context(|| format!("writing {}", p.display())),
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            r => Ok(r?),
        },
    }
}
