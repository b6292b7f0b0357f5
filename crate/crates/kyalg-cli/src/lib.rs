//! `ky`: command-line access to the kyalg engine.
//!
//! Exit status: 0 all checks pass, 1 a verification failed (or an internal
//! error), 2 usage error, 3 inconclusive (root enclosure budget exhausted).

pub mod schema;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kyalg::cache::{Cache, CacheStatus};
use kyalg::exactmath::{
    det_bareiss_poly, det_cofactor, det_modular, det_poly, parse_poly, rat_from_str, smith_invariants, Poly,
    PolyMatrix, Rational,
};
use kyalg::gram::{factor_one_cup, gram_matrix, remember_det, GramError, ModuleLabel};
use kyalg::morphisms::{
    c_lambda_fixes, embedding_verify, solve_xi, submodule_verify, xi_chain, AlphaSpec, ModuleContext, MorphismError,
};
use kyalg::rollet::{arm_verify, decorate, DecorationKind, RolletGraph};
use kyalg::roots::ClaimStatus;
use kyalg::symmetric::Partition;
use rand::{Rng, SeedableRng};
use schema::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "ky", version, about = "Gram determinants, Chebyshev series and Rollet graphs for J_{l,n}")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Cache directory (default: $KY_CACHE_DIR, else .ky-cache).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Disable the persistent cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gram matrix and monic determinant of Δ^n_{(p,λ)}.
    Gram(GramArgs),
    /// One-cup Chebyshev series: C^{(λ)}, P^{(λ)}_n and the U-expansion.
    Series(SeriesArgs),
    /// Rollet graph, optionally decorated with determinants or marginal
    /// vertex functions.
    Rollet(RolletArgs),
    /// Verification suites.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Root layout claims for P^{(λ)}_n.
    Roots(RootsArgs),
    /// The bootstrap element ξ and submodule embeddings.
    Bootstrap(BootstrapArgs),
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Arm property 𝒱 = 𝒞 along the λ-arm.
    Arm(ArmArgs),
    /// Randomised cross-check of the determinant routines.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
pub struct GramArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub l: i64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: usize,
    #[arg(long, default_value = "")]
    pub lambda: String,
    /// Report the determinant (always included; accepted for clarity).
    #[arg(long)]
    pub det: bool,
    /// Include the matrix.
    #[arg(long)]
    pub matrix: bool,
    /// Include the Smith invariants (checked against the determinant).
    #[arg(long)]
    pub smith: bool,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub l: i64,
    #[arg(long, default_value = "")]
    pub lambda: String,
    /// Last rank listed (default l+8).
    #[arg(long)]
    pub max_n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Decorate {
    None,
    Det,
    Mvf,
}

#[derive(Args, Debug)]
pub struct RolletArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub l: i64,
    #[arg(long)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = Decorate::None)]
    pub decorate: Decorate,
    /// Section Roll^{(m)} for DOT output.
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ArmArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub l: i64,
    #[arg(long, default_value = "")]
    pub lambda: String,
    /// Arm vertices p (comma separated); default l+2..=max-p.
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<usize>,
    #[arg(long)]
    pub max_p: Option<usize>,
    /// Cup counts m (comma separated).
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub m: Vec<usize>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 50)]
    pub cases: usize,
}

#[derive(Args, Debug)]
pub struct RootsArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub l: i64,
    #[arg(long, default_value = "")]
    pub lambda: String,
    /// Single rank n (≥ l+4).
    #[arg(long)]
    pub n: Option<usize>,
    /// All ranks l+4..=max-n (default l+10).
    #[arg(long)]
    pub max_n: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BootstrapArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub l: i64,
    /// λ of the one-cup module Δ^n_{(n−2,λ)}.
    #[arg(long, default_value = "")]
    pub lambda: String,
    #[arg(long)]
    pub n: usize,
    /// Rational parameter value, e.g. 1 or -1/2.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "minpoly")]
    pub alpha: Option<String>,
    /// Irreducible polynomial in `a` whose root is the parameter.
    #[arg(long)]
    pub minpoly: Option<String>,
    /// λ of the source Δ^n_{(n,λ)} when it differs from the target's.
    #[arg(long)]
    pub source: Option<String>,
    /// Also run the ξ recursion up to this rank.
    #[arg(long)]
    pub max_n: Option<usize>,
}

/// Error classes mapped onto exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
    Inconclusive(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Inconclusive(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "usage error: {s}"),
            CliError::Failed(s) => write!(f, "verification failed: {s}"),
            CliError::Inconclusive(s) => write!(f, "inconclusive: {s}"),
        }
    }
}

impl From<GramError> for CliError {
    fn from(e: GramError) -> Self {
        match e {
            GramError::InvalidLabel(s) => CliError::Usage(s),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<MorphismError> for CliError {
    fn from(e: MorphismError) -> Self {
        match e {
            MorphismError::InvalidInput(_) | MorphismError::NotARoot(_) => CliError::Usage(e.to_string()),
            MorphismError::Gram(g) => g.into(),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<kyalg::exactmath::MathError> for CliError {
    fn from(e: kyalg::exactmath::MathError) -> Self {
        CliError::Failed(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Rendered output plus the verification verdict.
pub struct Outcome {
    pub text: String,
    pub verdict: Result<(), CliError>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, verdict: Ok(()) }
    }
}

fn parse_partition(s: &str) -> CliResult<Partition> {
    s.parse().map_err(CliError::Usage)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serialises");
    s.push('\n');
    s
}

fn to_csv(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn no_dot(cmd: &str) -> CliError {
    CliError::Usage(format!("--format dot is only available for `rollet`, not `{cmd}`"))
}

fn lambda_vec(p: &Partition) -> Vec<usize> {
    p.parts().to_vec()
}

/// Parse and run a full command line (first item is the program name).
pub fn run_args<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    match run(&cli) {
        Err(e) => (e.code(), String::new(), format!("{e}\n")),
        Ok(out) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::File::create(path).and_then(|mut f| f.write_all(out.text.as_bytes())) {
                    return (1, String::new(), format!("cannot write {}: {e}\n", path.display()));
                }
            }
            let stdout = if cli.out.is_some() { String::new() } else { out.text };
            match out.verdict {
                Ok(()) => (0, stdout, String::new()),
                Err(e) => (e.code(), stdout, format!("{e}\n")),
            }
        }
    }
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let cache = if cli.no_cache { Cache::disabled() } else { Cache::from_env(cli.cache_dir.clone()) };
    match &cli.command {
        Command::Gram(a) => gram(a, cli.format, &cache),
        Command::Series(a) => series(a, cli.format, &cache),
        Command::Rollet(a) => rollet(a, cli.format, &cache),
        Command::Verify(VerifyCommand::Arm(a)) => arm(a, cli.format),
        Command::Verify(VerifyCommand::Oracle(a)) => oracle(a, cli.format),
        Command::Roots(a) => roots(a, cli.format),
        Command::Bootstrap(a) => bootstrap(a, cli.format),
    }
}

/// Monic determinant through the persistent cache.
pub fn cached_gram_det(label: &ModuleLabel, cache: &Cache) -> CliResult<(GramPayload, CacheStatus)> {
    let key = format!("gram_{}", label.key());
    let (payload, status) = cache.get_or_put(&key, || -> CliResult<GramPayload> {
        let det = kyalg::gram::gram_det(label)?;
        let dim = kyalg::gram::module_dim(label)?;
        Ok(GramPayload { label: label.clone(), dim, det })
    })?;
    if payload.label != *label {
        return Err(CliError::Failed(format!("cache record for {label} holds {}", payload.label)));
    }
    remember_det(label, payload.det.clone());
    Ok((payload, status))
}

fn matrix_strings(m: &PolyMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|p| p.to_string()).collect()).collect()
}

fn gram(a: &GramArgs, format: Format, cache: &Cache) -> CliResult<Outcome> {
    let label = ModuleLabel::new(a.l, a.n, a.p, parse_partition(&a.lambda)?)?;
    let (payload, _) = cached_gram_det(&label, cache)?;
    let g = (a.matrix || a.smith).then(|| gram_matrix(&label)).transpose()?;
    let mut verdict = Ok(());
    let smith = match (&g, a.smith) {
        (Some(g), true) => {
            let inv = smith_invariants(&g.matrix)?;
            let prod = inv.iter().fold(Poly::one(), |acc, x| &acc * x);
            if prod.monic() != payload.det {
                verdict = Err(CliError::Failed("Smith invariants do not multiply to the determinant".into()));
            }
            Some(inv.iter().map(|p| p.to_string()).collect())
        }
        _ => None,
    };
    let out = GramOut {
        label: label.clone(),
        dim: payload.dim,
        det_text: payload.det.to_string(),
        det: payload.det,
        matrix: g.as_ref().filter(|_| a.matrix).map(|g| matrix_strings(&g.matrix)),
        smith,
    };
    let text = match format {
        Format::Json => to_json(&out),
        Format::Csv => match &out.matrix {
            Some(m) => {
                let header: Vec<String> = (0..m.len()).map(|j| format!("c{j}")).collect();
                to_csv(&header.iter().map(|s| s.as_str()).collect::<Vec<_>>(), m.clone())
            }
            None => to_csv(&["label", "dim", "det"], vec![vec![label.key(), out.dim.to_string(), out.det_text.clone()]]),
        },
        Format::Dot => return Err(no_dot("gram")),
    };
    Ok(Outcome { text, verdict })
}

fn series(a: &SeriesArgs, format: Format, cache: &Cache) -> CliResult<Outcome> {
    let lambda = parse_partition(&a.lambda)?;
    if lambda.size() as i64 != a.l + 2 {
        return Err(CliError::Usage(format!("λ=({lambda}) must be a partition of l+2 = {}", a.l + 2)));
    }
    let key = format!("series_l{}_{}", a.l, lambda.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join("-"));
    let (payload, _) = cache.get_or_put(&key, || -> CliResult<SeriesPayload> {
        let f = factor_one_cup(a.l, &lambda)?;
        Ok(SeriesPayload { c: f.c, anchor: f.p.anchor, p_anchor: f.p.p_n, p_next: f.p.p_n1, d: f.d })
    })?;
    let s = kyalg::cheby::ChebSeries::new(payload.anchor, payload.p_anchor.clone(), payload.p_next.clone());
    let max_n = a.max_n.unwrap_or((a.l + 8) as usize) as i64;
    let terms: BTreeMap<String, String> =
        (payload.anchor..=max_n.max(payload.anchor + 1)).map(|n| (n.to_string(), s.term(n).to_string())).collect();
    let ramping = s.ramping_check().ok();
    let u_shifts: BTreeMap<String, String> = match s.u_expansion() {
        Ok(e) => e.shifts().iter().map(|(k, v)| (k.to_string(), kyalg::exactmath::rat_to_string(v))).collect(),
        Err(_) => BTreeMap::new(),
    };
    let out = SeriesOut {
        l: a.l,
        lambda: lambda_vec(&lambda),
        d: payload.d,
        c: payload.c.to_string(),
        anchor: payload.anchor,
        terms,
        u_shifts,
        ramping,
    };
    let text = match format {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut rows = vec![vec!["C".to_string(), out.c.clone()]];
            rows.extend(out.terms.iter().map(|(n, p)| (n.parse::<i64>().unwrap(), p)).collect::<BTreeMap<_, _>>().iter().map(|(n, p)| vec![format!("P_{n}"), p.to_string()]));
            to_csv(&["name", "polynomial"], rows)
        }
        Format::Dot => return Err(no_dot("series")),
    };
    let verdict = if ramping { Ok(()) } else { Err(CliError::Failed("series does not ramp at its anchor".into())) };
    Ok(Outcome { text, verdict })
}

fn rollet(a: &RolletArgs, format: Format, cache: &Cache) -> CliResult<Outcome> {
    if a.l < -1 {
        return Err(CliError::Usage("l must be at least -1".into()));
    }
    let kind = match a.decorate {
        Decorate::None => None,
        Decorate::Det => Some(DecorationKind::Det),
        Decorate::Mvf => Some(DecorationKind::Mvf),
    };
    let Some(kind) = kind else {
        let g = RolletGraph::new(a.l, a.max_n)?;
        let text = match format {
            Format::Dot => g.to_dot(),
            Format::Json | Format::Csv => {
                let walks: Vec<Vec<u128>> = (0..=a.max_n).map(|n| g.walk_counts(n)).collect();
                let vertices: Vec<VertexOut> = g
                    .vertices
                    .iter()
                    .enumerate()
                    .map(|(i, v)| VertexOut {
                        p: v.p,
                        lambda: lambda_vec(&v.lambda),
                        fibre: (v.p..=a.max_n)
                            .step_by(2)
                            .map(|n| (n.to_string(), FibreOut { dim: walks[n][i].to_string(), det: String::new(), mvf: None }))
                            .collect(),
                    })
                    .collect();
                let out = RolletOut { l: a.l, vertices };
                if format == Format::Json {
                    to_json(&out)
                } else {
                    rollet_csv(&out)
                }
            }
        };
        return Ok(Outcome::ok(text));
    };
    let tag = if kind == DecorationKind::Det { "det" } else { "mvf" };
    let key = format!("rollet_l{}_n{}_{tag}", a.l, a.max_n);
    let (out, _) = cache.get_or_put(&key, || -> CliResult<RolletOut> {
        let d = decorate(a.l, a.max_n, kind)?;
        serde_json::from_value(d.to_json()).map_err(|e| CliError::Failed(format!("decoration schema: {e}")))
    })?;
    let text = match format {
        Format::Json => to_json(&out),
        Format::Csv => rollet_csv(&out),
        Format::Dot => decorate(a.l, a.max_n, kind)?.to_dot(a.m),
    };
    Ok(Outcome::ok(text))
}

fn rollet_csv(out: &RolletOut) -> String {
    let mut rows = Vec::new();
    for v in &out.vertices {
        let mut fs: Vec<(usize, &FibreOut)> = v.fibre.iter().map(|(n, f)| (n.parse().unwrap(), f)).collect();
        fs.sort_by_key(|x| x.0);
        for (n, f) in fs {
            let lam = v.lambda.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            rows.push(vec![v.p.to_string(), lam, n.to_string(), f.dim.clone(), f.det.clone(), f.mvf.clone().unwrap_or_default()]);
        }
    }
    to_csv(&["p", "lambda", "n", "dim", "det", "mvf"], rows)
}

fn arm(a: &ArmArgs, format: Format) -> CliResult<Outcome> {
    let lambda = parse_partition(&a.lambda)?;
    let p0 = (a.l + 2).max(0) as usize;
    let ps: Vec<usize> = if !a.p.is_empty() {
        a.p.clone()
    } else {
        (p0..=a.max_p.unwrap_or(p0 + 4)).collect()
    };
    let checks = arm_verify(a.l, &lambda, &ps, &a.m)?;
    let rows: Vec<ArmRow> = checks
        .iter()
        .map(|c| ArmRow { p: c.vertex.p, n: c.n, m: c.m, holds: c.holds, residual: c.residual.to_string() })
        .collect();
    let all_hold = rows.iter().all(|r| r.holds);
    let out = ArmOut { l: a.l, lambda: lambda_vec(&lambda), all_hold, checks: rows };
    let text = match format {
        Format::Json => to_json(&out),
        Format::Csv => to_csv(
            &["p", "n", "m", "holds", "residual"],
            out.checks
                .iter()
                .map(|r| vec![r.p.to_string(), r.n.to_string(), r.m.to_string(), r.holds.to_string(), r.residual.clone()])
                .collect(),
        ),
        Format::Dot => return Err(no_dot("verify arm")),
    };
    let verdict = if all_hold { Ok(()) } else { Err(CliError::Failed("arm property fails at some vertex".into())) };
    Ok(Outcome { text, verdict })
}

fn random_matrix(rng: &mut rand_chacha::ChaCha8Rng, size: usize) -> PolyMatrix {
    let rows: Vec<Vec<Poly>> = (0..size)
        .map(|_| {
            (0..size)
                .map(|_| {
                    let deg = rng.gen_range(0..3);
                    Poly::from_ints(&(0..=deg).map(|_| rng.gen_range(-3..=3)).collect::<Vec<i64>>())
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows).expect("square")
}

fn oracle(a: &OracleArgs, format: Format) -> CliResult<Outcome> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(a.seed);
    let mut mismatches = Vec::new();
    for case in 0..a.cases {
        let size = rng.gen_range(1..=6);
        let m = random_matrix(&mut rng, size);
        let reference = det_cofactor(&m)?;
        let others = [("interpolation", det_poly(&m)?), ("bareiss", det_bareiss_poly(&m)?), ("modular", det_modular(&m)?)];
        for (name, d) in others {
            if d != reference {
                mismatches.push(format!("case {case} ({size}x{size}): {name} gives {d}, cofactor gives {reference}"));
            }
        }
        if !reference.is_zero() {
            let prod = smith_invariants(&m)?.iter().fold(Poly::one(), |acc, x| &acc * x);
            if prod != reference.monic() {
                mismatches.push(format!("case {case}: Smith invariants multiply to {prod}"));
            }
        }
    }
    let out = OracleOut { seed: a.seed, cases: a.cases, mismatches };
    let text = match format {
        Format::Json => to_json(&out),
        Format::Csv => to_csv(&["mismatch"], out.mismatches.iter().map(|m| vec![m.clone()]).collect()),
        Format::Dot => return Err(no_dot("verify oracle")),
    };
    let verdict =
        if out.mismatches.is_empty() { Ok(()) } else { Err(CliError::Failed(format!("{} mismatches", out.mismatches.len()))) };
    Ok(Outcome { text, verdict })
}

fn roots(a: &RootsArgs, format: Format) -> CliResult<Outcome> {
    let lambda = parse_partition(&a.lambda)?;
    if lambda.size() as i64 != a.l + 2 {
        return Err(CliError::Usage(format!("λ=({lambda}) must be a partition of l+2 = {}", a.l + 2)));
    }
    let n0 = a.l + 4;
    let ns: Vec<i64> = match (a.n, a.max_n) {
        (Some(n), _) => vec![n as i64],
        (None, m) => (n0..=m.map_or(a.l + 10, |m| m as i64)).collect(),
    };
    if let Some(&bad) = ns.iter().find(|&&n| n < n0) {
        return Err(CliError::Usage(format!("n={bad} is below l+4 = {n0}")));
    }
    let f = factor_one_cup(a.l, &lambda)?;
    let mut entries = Vec::new();
    for n in ns {
        let report = kyalg::roots::verify_root_layout(a.l, &lambda, n - n0)?;
        entries.push(RootsEntry { n, polynomial: f.p.term(n).to_string(), report });
    }
    let out = RootsOut { l: a.l, lambda: lambda_vec(&lambda), entries };
    let text = match format {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut rows = Vec::new();
            for e in &out.entries {
                for c in &e.report.claims {
                    let st = serde_json::to_value(c.status).unwrap().as_str().unwrap().to_string();
                    rows.push(vec![e.n.to_string(), c.id.clone(), st, c.witness.to_string()]);
                }
            }
            to_csv(&["n", "claim", "status", "witness"], rows)
        }
        Format::Dot => return Err(no_dot("roots")),
    };
    let claims = out.entries.iter().flat_map(|e| &e.report.claims);
    let verdict = if claims.clone().any(|c| c.status == ClaimStatus::Fail) {
        Err(CliError::Failed("a root-layout claim fails".into()))
    } else if claims.clone().any(|c| c.status == ClaimStatus::Inconclusive) {
        Err(CliError::Inconclusive("enclosure refinement budget exhausted".into()))
    } else {
        Ok(())
    };
    Ok(Outcome { text, verdict })
}

fn parse_alpha(a: &BootstrapArgs) -> CliResult<Option<AlphaSpec>> {
    match (&a.alpha, &a.minpoly) {
        (Some(q), _) => {
            let q: Rational = rat_from_str(q).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(Some(AlphaSpec::Rational(q)))
        }
        (None, Some(m)) => {
            let m = parse_poly(m).map_err(|e| CliError::Usage(e.to_string()))?;
            if m.deg() < 1 {
                return Err(CliError::Usage("--minpoly must have positive degree".into()));
            }
            Ok(Some(AlphaSpec::Minpoly(m)))
        }
        (None, None) => Ok(None),
    }
}

fn bootstrap(a: &BootstrapArgs, format: Format) -> CliResult<Outcome> {
    let lambda = parse_partition(&a.lambda)?;
    let alpha = parse_alpha(a)?;
    let source = a.source.as_deref().map(parse_partition).transpose()?;
    let generic = (a.n as i64) >= a.l + 4 && lambda.size() as i64 == a.l + 2;
    let mut out = BootstrapOut { xi: None, chain: None, embedding: None };
    let mut verdict = Ok(());
    if generic && source.is_none() {
        let xi = solve_xi(a.l, &lambda, a.n)?;
        let p_n = factor_one_cup(a.l, &lambda)?.p.term(a.n as i64);
        let ctx = ModuleContext::new(&xi.label)?;
        let m = ctx.half.len();
        let coeffs = xi
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let (j, k) = ctx.half[i % m].top_arcs()[0];
                XiCoeff { cup: (j + 1, k + 1), specht: i / m + 1, coeff: c.to_string() }
            })
            .collect();
        let fixes = c_lambda_fixes(&xi)?;
        let divides = p_n.divides(&xi.d);
        if !(fixes && divides) {
            verdict = Err(CliError::Failed("ξ fails c_λ-invariance or P | D".into()));
        }
        out.xi = Some(XiOut {
            label: xi.label.clone(),
            d: xi.d.to_string(),
            p_n: p_n.to_string(),
            p_divides_d: divides,
            c_lambda_fixes: fixes,
            coeffs,
        });
        if let Some(max_n) = a.max_n {
            let rows = xi_chain(a.l, &lambda, max_n)?;
            if rows.iter().any(|r| !r.step_agrees || !r.p_divides_d || r.recursion == Some(false)) {
                verdict = Err(CliError::Failed("ξ chain inconsistency".into()));
            }
            out.chain = Some(rows);
        }
    }
    if let Some(alpha) = alpha {
        let report = match &source {
            None if generic => submodule_verify(a.l, &lambda, a.n, &alpha)?,
            None => {
                return Err(CliError::Usage(format!(
                    "n={} is below l+4; pass --source to name the Δ^n_(n,λ) being embedded",
                    a.n
                )))
            }
            Some(src) => embedding_verify(a.l, a.n, &lambda, src, &alpha)?,
        };
        if !report.embedding {
            verdict = Err(CliError::Failed("no embedding at this parameter".into()));
        }
        out.embedding = Some(report);
    } else if !generic || source.is_some() {
        return Err(CliError::Usage("embedding checks need --alpha or --minpoly".into()));
    }
    let text = match format {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut rows = Vec::new();
            if let Some(x) = &out.xi {
                rows.extend(x.coeffs.iter().map(|c| vec![format!("xi[{},{};{}]", c.cup.0, c.cup.1, c.specht), c.coeff.clone()]));
                rows.push(vec!["D".into(), x.d.clone()]);
            }
            if let Some(e) = &out.embedding {
                rows.push(vec!["embedding".into(), e.embedding.to_string()]);
                rows.push(vec!["rank_deficiency".into(), e.rank_deficiency.to_string()]);
            }
            to_csv(&["name", "value"], rows)
        }
        Format::Dot => return Err(no_dot("bootstrap")),
    };
    Ok(Outcome { text, verdict })
}
