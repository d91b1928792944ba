//! Command-line front end.
//!
//! Every command produces one JSON document (stdout or `--out`) and a short
//! human-readable summary on stderr. Exact numbers are serialized as strings.
//! Failures produce `{"ok": false, "error": <invariant>, "message": …}` and a
//! nonzero exit code.

use crate::algebra::{mode_extract, normal_order, parse_word, reorder_normal, Arg, Symbolic};
use crate::arith::{parse_q, q_to_string, Q};
use crate::correlator::{correlator, entropy, reference_values, CorrelatorOptions};
use crate::error::{Error, Result};
use crate::lattice::{check_commuting, check_eigen_relation, check_fusion, check_yang_baxter, r_s1, MatsubaraData};
use crate::linalg::Matrix;
use crate::matsubara::{direct_expectation, LocalOperator};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::PathBuf;

/// Exact correlators of the integrable spin-1 chain.
#[derive(Parser, Debug, Clone)]
#[command(name = "s1fc", version, about)]
pub struct Cli {
    /// Significant digits of decimal output.
    #[arg(long, global = true, default_value_t = 50)]
    pub digits: u32,
    /// Ray directions `a1,a2,a3` for the homogeneous limit.
    #[arg(long, global = true, default_value = "0,1,3")]
    pub directions: String,
    /// Write the JSON report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Command.
    #[command(subcommand)]
    pub command: Command,
}

/// Identities verified by `check`.
#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// Yang–Baxter equation of the spin-1 R-matrix at random rational points.
    YangBaxter,
    /// Fusion of spin-½ monodromies into the spin-1 monodromy.
    Fusion,
    /// Commutativity of transfer matrices.
    Commute,
    /// `𝐓(λ) = T(λ−½)T(λ+½) − Δ(λ)` on the Matsubara space.
    Eigenrelation,
}

/// Subcommands.
#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Verify an exact lattice identity.
    Check {
        /// Identity to verify.
        what: CheckKind,
        /// Number of spectral parameters (fusion) or random points (Yang–Baxter).
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Matsubara data file (JSON or TOML).
        #[arg(long)]
        matsubara: Option<PathBuf>,
        /// Spectral parameters, comma separated (random when omitted).
        #[arg(long)]
        lambdas: Option<String>,
    },
    /// Expectation value of a local operator from Matsubara data.
    Direct {
        /// Matsubara data file (JSON or TOML).
        #[arg(long)]
        matsubara: PathBuf,
        /// Operator: `ss:n`, `id:n`, inline JSON, or `@file`.
        #[arg(long)]
        op: String,
        /// Spectral parameters, comma separated (defaults to zeros).
        #[arg(long)]
        lambdas: Option<String>,
    },
    /// Homogeneous zero-temperature correlator from the decomposition tables.
    Correlator {
        /// Distance (2 or 3).
        #[arg(long)]
        n: usize,
    },
    /// Stored reference correlator.
    Reference {
        /// Distance (2 to 5).
        #[arg(long)]
        n: usize,
    },
    /// Von Neumann entropy of a density matrix.
    Entropy {
        /// JSON file with a row-major matrix of rationals.
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Normal-ordered expansion of a product of generators.
    NormalOrder {
        /// Word such as `j+(l1) j-(l2)`, `:b*(x) c*(y):` or `j+_1 j-_1`.
        #[arg(long)]
        word: String,
    },
}

/// Validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Command to execute.
    pub command: Command,
    /// Significant digits.
    pub digits: u32,
    /// Ray directions.
    pub directions: Vec<Q>,
    /// Output path.
    pub out: Option<PathBuf>,
    /// Seed for randomized checks.
    pub seed: u64,
}

impl RunConfig {
    /// Validates parsed arguments.
    pub fn from_cli(cli: Cli) -> Result<Self> {
        if cli.digits == 0 || cli.digits > 10_000 {
            return Err(Error::ConfigError(format!("--digits must be in 1..=10000, got {}", cli.digits)));
        }
        let directions = parse_list(&cli.directions)?;
        for i in 0..directions.len() {
            if directions[i + 1..].contains(&directions[i]) {
                return Err(Error::ConfigError("--directions must be pairwise distinct".into()));
            }
        }
        Ok(RunConfig { command: cli.command, digits: cli.digits, directions, out: cli.out, seed: cli.seed })
    }
}

fn parse_list(s: &str) -> Result<Vec<Q>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_q(t.trim()).map_err(|e| Error::ConfigError(format!("bad rational {t:?}: {e}"))))
        .collect()
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::ConfigError(format!("cannot read {}: {e}", path.display())))
}

fn load_matsubara(path: &PathBuf) -> Result<MatsubaraData> {
    let text = read(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("toml") => MatsubaraData::from_toml(&text),
        _ => MatsubaraData::from_json(&text),
    }
}

fn random_q(rng: &mut ChaCha8Rng) -> Q {
    Q::new(rng.gen_range(-40i64..=40).into(), rng.gen_range(1i64..=9).into())
}

fn show(v: &[Q]) -> Vec<String> {
    v.iter().map(q_to_string).collect()
}

fn run_check(cfg: &RunConfig, what: CheckKind, n: usize, md: &Option<PathBuf>, lambdas: &Option<String>) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let md = md.as_ref().map(load_matsubara).transpose()?;
    let need_md = || md.clone().ok_or_else(|| Error::ConfigError("--matsubara is required for this check".into()));
    let lams = match lambdas {
        Some(s) => parse_list(s)?,
        None => (0..n.max(1)).map(|_| random_q(&mut rng)).collect(),
    };
    let (ok, detail) = match what {
        CheckKind::YangBaxter => {
            let points = n.max(1);
            let r = |z: &Q| r_s1(z);
            let mut pts = Vec::new();
            let mut ok = true;
            for _ in 0..points {
                let (z, e) = (random_q(&mut rng), random_q(&mut rng));
                ok &= check_yang_baxter(&r, &r, &r, [3, 3, 3], &z, &e)?;
                pts.push(json!([q_to_string(&z), q_to_string(&e)]));
            }
            (ok, json!({ "points": pts }))
        }
        CheckKind::Fusion => {
            let md = need_md()?;
            (check_fusion(&lams, &md)?, json!({ "lambdas": show(&lams) }))
        }
        CheckKind::Commute => {
            let md = need_md()?;
            let (l, m) = match lams.as_slice() {
                [l, m, ..] => (l.clone(), m.clone()),
                _ => (random_q(&mut rng), random_q(&mut rng)),
            };
            let (a, b) = check_commuting(&md, &l, &m)?;
            (a && b, json!({ "lambda": q_to_string(&l), "mu": q_to_string(&m), "transfer": a, "fused": b }))
        }
        CheckKind::Eigenrelation => {
            let md = need_md()?;
            (check_eigen_relation(&md, &lams)?, json!({ "lambdas": show(&lams) }))
        }
    };
    let name = what.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    if !ok {
        return Err(Error::CalibrationFailure(format!("identity {name} violated: {detail}")));
    }
    Ok(json!({ "ok": true, "check": name, "detail": detail }))
}

fn run_normal_order(word: &str) -> Result<Value> {
    let parsed = parse_word(word)?;
    let is_modes = parsed.letters.iter().any(|(_, a)| matches!(a, Arg::Mode(_)));
    if !is_modes {
        let (w, ctx) = parsed.to_letters()?;
        let nf = if parsed.normal { reorder_normal(&ctx, &w)? } else { normal_order(&ctx, &w)? };
        let terms: Vec<Value> = nf
            .terms()
            .map(|(w, c)| json!({ "word": crate::algebra::word_to_string(w, ctx.names()), "coeff": c.to_string() }))
            .collect();
        return Ok(json!({ "ok": true, "word": word, "normal_form": nf.display_with(ctx.names()), "terms": terms }));
    }
    // modes: one spectral variable per letter, then extract the coefficients
    let modes = parsed.to_modes()?;
    let names: Vec<String> = (1..=modes.len()).map(|k| format!("z{k}")).collect();
    let ctx = Symbolic::new(names.clone());
    let w: Vec<_> = modes.iter().enumerate().map(|(i, m)| crate::algebra::Letter::new(m.kind, i)).collect();
    let nf = if parsed.normal { reorder_normal(&ctx, &w)? } else { normal_order(&ctx, &w)? };
    let map: BTreeMap<String, u32> = names.iter().cloned().zip(modes.iter().map(|m| m.mode)).collect();
    let out = mode_extract(&nf, &ctx, &map)?;
    let terms: Vec<Value> = out
        .iter()
        .map(|(mw, c)| {
            let s = if mw.is_empty() { "I".to_string() } else { mw.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ") };
            json!({ "word": s, "coeff": q_to_string(c) })
        })
        .collect();
    Ok(json!({ "ok": true, "word": word, "terms": terms }))
}

/// Executes a validated configuration and returns its JSON report.
pub fn run(cfg: &RunConfig) -> Result<Value> {
    match &cfg.command {
        Command::Check { what, n, matsubara, lambdas } => run_check(cfg, *what, *n, matsubara, lambdas),
        Command::Direct { matsubara, op, lambdas } => {
            let md = load_matsubara(matsubara)?;
            let op = match op.strip_prefix('@') {
                Some(p) => LocalOperator::parse(&read(&PathBuf::from(p))?)?,
                None => LocalOperator::parse(op)?,
            };
            let lams = match lambdas {
                Some(s) => parse_list(s)?,
                None => vec![Q::from_integer(0.into()); op.n()],
            };
            let v = direct_expectation(&op, &lams, &md, cfg.digits)?;
            Ok(json!({ "ok": true, "n": op.n(), "lambdas": show(&lams), "value": v }))
        }
        Command::Correlator { n } => {
            let opts = CorrelatorOptions { directions: cfg.directions.clone(), digits: cfg.digits, ..Default::default() };
            let r = correlator(*n, &opts)?;
            let mut v = serde_json::to_value(&r).map_err(|e| Error::ConfigError(e.to_string()))?;
            v["ok"] = json!(true);
            Ok(v)
        }
        Command::Reference { n } => {
            let r = reference_values(*n, cfg.digits)?;
            let mut v = serde_json::to_value(&r).map_err(|e| Error::ConfigError(e.to_string()))?;
            v["ok"] = json!(true);
            Ok(v)
        }
        Command::Entropy { matrix } => {
            let text = read(matrix)?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("matrix json: {e}")))?;
            let m = Matrix::from_json(v.get("matrix").unwrap_or(&v))?;
            let s = entropy(&m, cfg.digits)?;
            Ok(json!({ "ok": true, "entropy": s }))
        }
        Command::NormalOrder { word } => run_normal_order(word),
    }
}

/// Structured diagnostic for a failure.
pub fn error_report(e: &Error) -> Value {
    json!({ "ok": false, "error": e.kind(), "message": e.to_string() })
}

fn summary(v: &Value) -> String {
    for key in ["pipoly", "entropy", "normal_form", "check"] {
        if let Some(x) = v.get(key) {
            let s = x.as_str().map(String::from).unwrap_or_else(|| x.to_string());
            return format!("{key}: {s}");
        }
    }
    if let Some(x) = v.get("value") {
        return format!("value: {}", x.get("approx").map(|a| a.to_string()).unwrap_or_default());
    }
    "ok".into()
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let out = cli.out.clone();
    let (report, code) = match RunConfig::from_cli(cli).and_then(|c| run(&c)) {
        Ok(v) => {
            eprintln!("{}", summary(&v));
            (v, 0)
        }
        Err(e) => {
            eprintln!("error [{}]: {e}", e.kind());
            (error_report(&e), if matches!(e, Error::ConfigError(_) | Error::Parse(_)) { 2 } else { 1 })
        }
    };
    let text = serde_json::to_string_pretty(&report).expect("JSON values serialize") + "\n";
    match out {
        Some(p) => {
            if let Err(e) = std::fs::write(&p, text) {
                eprintln!("cannot write {}: {e}", p.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    code
}
