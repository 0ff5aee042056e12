//! The `ccring` command-line front end.
//!
//! Every subcommand builds one [`ConstaFamily`] from the common flags and
//! prints either a short text report or, with `--json`, a single JSON object.
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on invalid
//! input or any other error.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::consta::{
    parse_exponents, ChildCode, ConstaFamily, ConstaParams, VerificationReport, VerifyMode,
};
use crate::field::{FieldCtx, FqPoly};
use crate::ring::ChainRing;
use crate::{Error, Result, DEFAULT_ENUM_LIMIT};

#[derive(Debug, Parser)]
#[command(name = "ccring", version, about = "(1+wu)-constacyclic codes over F_{p^m}[u]/<u^e>")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Monic irreducible factors of x^n - 1 in canonical order.
    Factor(JobConfig),
    /// Derived integers l, n', q, n''.
    Params(JobConfig),
    /// Towers C_{p^k-1}, ..., C_0, the matrix A_{p^k} and sizes.
    Decompose(JobConfig),
    /// Exponent vectors of the p children at k - 1.
    Recurse(JobConfig),
    /// Minimum distance with per-constituent distances and the delta profile.
    Distance(JobConfig),
    /// Checks the monomial equivalence with the matrix-product code.
    Verify(VerifyArgs),
    /// Everything above for one code.
    Report(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Full,
    Sampled,
}

#[derive(Clone, Debug, Args)]
pub struct JobConfig {
    #[arg(long)]
    pub p: u32,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[arg(long)]
    pub e: usize,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub n: usize,
    /// Ring element "b0,b1,...,b_{e-1}".
    #[arg(long, default_value = "1")]
    pub omega: String,
    /// Monic irreducible of degree m, low degree first.
    #[arg(long)]
    pub modulus: Option<String>,
    /// Exponent vector "i_1,...,i_r".
    #[arg(long)]
    pub exps: Option<String>,
    /// Largest number of codewords an exhaustive search may visit.
    #[arg(long, env = "CCRING_THRESHOLD", default_value_t = DEFAULT_ENUM_LIMIT)]
    pub threshold: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub job: JobConfig,
    /// Every code of the family instead of --exps.
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_enum, default_value_t = Mode::Full)]
    pub mode: Mode,
    #[arg(long, default_value_t = 64)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl VerifyArgs {
    fn verify_mode(&self) -> VerifyMode {
        match self.mode {
            Mode::Full => VerifyMode::Full,
            Mode::Sampled => VerifyMode::Sampled { samples: self.samples, seed: self.seed },
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Distances {
    pub d_i: Vec<Option<usize>>,
    pub delta: Vec<usize>,
    pub d: usize,
}

#[derive(Debug, Serialize)]
pub struct CodeVerification {
    pub exps: Vec<usize>,
    pub passed: bool,
    pub checks: Vec<crate::consta::Check>,
}

#[derive(Debug, Default, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ConstaParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exps: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub towers: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tower_sizes: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_matrix: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub children: Option<Vec<ChildCode>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distances: Option<Distances>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codes: Option<Vec<CodeVerification>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
}

/// Output of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn parse_modulus(text: &str) -> Result<Vec<u32>> {
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad modulus coefficient {t:?}"))))
        .collect()
}

impl JobConfig {
    pub fn family(&self) -> Result<ConstaFamily> {
        let modulus = self.modulus.as_deref().map(parse_modulus).transpose()?;
        let field = FieldCtx::build(self.p, self.m, modulus.as_deref())?;
        let base = ChainRing::new(Arc::new(field), self.e)?;
        let omega = base.parse(&self.omega)?;
        ConstaFamily::new(base, self.k, self.n, omega)
    }

    fn exps(&self, fam: &ConstaFamily) -> Result<Vec<usize>> {
        let text = self
            .exps
            .as_deref()
            .ok_or_else(|| Error::InvalidExponents("--exps is required".into()))?;
        let exps = parse_exponents(text)?;
        fam.check_exponents(&exps)?;
        Ok(exps)
    }
}

fn poly_texts(polys: &[FqPoly]) -> Vec<String> {
    polys.iter().map(FqPoly::to_text).collect()
}

fn fill_params(fam: &ConstaFamily, rep: &mut Report) -> Result<()> {
    rep.params = Some(fam.params().clone());
    if fam.params().k == 0 {
        let eta = crate::consta::eta_for_k0(fam.base(), fam.params().n, fam.omega())?;
        rep.eta = Some(fam.base().format(&eta));
    }
    Ok(())
}

fn fill_decomposition(fam: &ConstaFamily, exps: &[usize], rep: &mut Report) -> Result<()> {
    let dec = fam.decompose(exps)?;
    let f = fam.base().field();
    rep.generator = Some(fam.generator(exps)?.to_text());
    rep.towers = Some(dec.towers.iter().map(|t| poly_texts(t.gens())).collect());
    rep.tower_sizes = Some(dec.towers.iter().map(|t| t.log_size(f)).collect());
    rep.a_matrix = Some(dec.a.rows().iter().map(|r| r.iter().map(|c| c.0).collect()).collect());
    rep.log_size = Some(fam.formula_log_size(exps));
    Ok(())
}

fn fill_distances(fam: &ConstaFamily, exps: &[usize], limit: u64, rep: &mut Report) -> Result<()> {
    let dist = fam.constacyclic_distance(exps, limit)?;
    rep.distances = Some(Distances { d_i: dist.d_i, delta: dist.delta, d: dist.d });
    Ok(())
}

fn fill_recursion(fam: &ConstaFamily, exps: &[usize], limit: u64, rep: &mut Report) -> Result<()> {
    if fam.params().k == 0 {
        return Err(Error::InvalidParams("recursion needs k >= 1".into()));
    }
    let rec = fam.recursive_distance(exps, limit)?;
    if let Some(d) = &rep.distances {
        if d.d != rec.d {
            return Err(Error::Inconsistent(format!("recursive distance {} differs from {}", rec.d, d.d)));
        }
    }
    rep.children = Some(rec.children);
    Ok(())
}

fn verify(fam: &ConstaFamily, args: &VerifyArgs, rep: &mut Report) -> Result<()> {
    let mode = args.verify_mode();
    if args.all {
        let codes: Vec<CodeVerification> = fam
            .all_exponents()
            .map(|exps| {
                let r = fam.verify_equivalence(&exps, mode);
                CodeVerification { exps, passed: r.passed, checks: r.checks }
            })
            .collect();
        let failed = codes.iter().filter(|c| !c.passed).count();
        rep.verification = Some(VerificationReport {
            checks: vec![crate::consta::Check {
                name: "every code of the family".into(),
                passed: failed == 0,
                detail: format!("{failed} of {} failed", codes.len()),
            }],
            passed: failed == 0,
        });
        rep.codes = Some(codes);
    } else {
        let exps = args.job.exps(fam)?;
        rep.verification = Some(fam.verify_equivalence(&exps, mode));
        rep.exps = Some(exps);
    }
    Ok(())
}

/// Builds the report for `command`.
pub fn build_report(command: &Command) -> Result<Report> {
    let mut rep = Report::default();
    match command {
        Command::Factor(job) => {
            let fam = job.family()?;
            rep.factors = Some(poly_texts(fam.factors()));
        }
        Command::Params(job) => fill_params(&job.family()?, &mut rep)?,
        Command::Decompose(job) => {
            let fam = job.family()?;
            let exps = job.exps(&fam)?;
            fill_decomposition(&fam, &exps, &mut rep)?;
            rep.exps = Some(exps);
        }
        Command::Recurse(job) => {
            let fam = job.family()?;
            let exps = job.exps(&fam)?;
            fill_recursion(&fam, &exps, job.threshold, &mut rep)?;
            rep.exps = Some(exps);
        }
        Command::Distance(job) => {
            let fam = job.family()?;
            let exps = job.exps(&fam)?;
            fill_distances(&fam, &exps, job.threshold, &mut rep)?;
            rep.exps = Some(exps);
        }
        Command::Verify(args) => verify(&args.job.family()?, args, &mut rep)?,
        Command::Report(args) => {
            let job = &args.job;
            let fam = job.family()?;
            let exps = job.exps(&fam)?;
            fill_params(&fam, &mut rep)?;
            rep.factors = Some(poly_texts(fam.factors()));
            fill_decomposition(&fam, &exps, &mut rep)?;
            if rep.log_size != Some(0) {
                fill_distances(&fam, &exps, job.threshold, &mut rep)?;
                if fam.params().k > 0 {
                    fill_recursion(&fam, &exps, job.threshold, &mut rep)?;
                }
            }
            rep.verification = Some(fam.verify_equivalence(&exps, args.verify_mode()));
            rep.exps = Some(exps);
        }
    }
    Ok(rep)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// Plain-text rendering of a report.
pub fn render_text(rep: &Report) -> String {
    let mut out = String::new();
    if let Some(p) = &rep.params {
        let _ = writeln!(out, "p={} m={} e={} k={} n={} N={}", p.p, p.m, p.e, p.k, p.n, p.big_n);
        let _ = writeln!(out, "l={} n'={} q={} n''={}", p.l, p.n_prime, p.q, p.n_pp);
    }
    if let Some(eta) = &rep.eta {
        let _ = writeln!(out, "eta={eta}");
    }
    if let Some(fs) = &rep.factors {
        for (i, f) in fs.iter().enumerate() {
            let _ = writeln!(out, "f_{}={f}", i + 1);
        }
    }
    if let Some(exps) = &rep.exps {
        let _ = writeln!(out, "exps={}", join(exps));
    }
    if let Some(g) = &rep.generator {
        let _ = writeln!(out, "generator={g}");
    }
    if let (Some(towers), Some(sizes)) = (&rep.towers, &rep.tower_sizes) {
        let top = towers.len();
        for (i, (t, s)) in towers.iter().zip(sizes).enumerate() {
            let _ = writeln!(out, "C_{}: [{}] log_size={s}", top - 1 - i, t.join(" | "));
        }
    }
    if let Some(a) = &rep.a_matrix {
        let _ = writeln!(out, "A:");
        for row in a {
            let _ = writeln!(out, "  {}", row.iter().map(u32::to_string).collect::<Vec<_>>().join(" "));
        }
    }
    if let Some(s) = rep.log_size {
        let _ = writeln!(out, "log_size={s}");
    }
    if let Some(d) = &rep.distances {
        let d_i: Vec<String> = d.d_i.iter().map(|x| x.map_or("-".into(), |v| v.to_string())).collect();
        let _ = writeln!(out, "d_i={}", d_i.join(","));
        let _ = writeln!(out, "delta={}", join(&d.delta));
        let _ = writeln!(out, "d={}", d.d);
    }
    if let Some(children) = &rep.children {
        for c in children {
            let d = c.d.map_or("-".into(), |v| v.to_string());
            let _ = writeln!(out, "child {}: exps={} log_size={} d={d}", c.j, join(&c.exps), c.log_size);
        }
    }
    if let Some(codes) = &rep.codes {
        for c in codes.iter().filter(|c| !c.passed) {
            let _ = writeln!(out, "FAIL exps={}", join(&c.exps));
        }
    }
    if let Some(v) = &rep.verification {
        for c in &v.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "{}", format!("{mark} {} {}", c.name, c.detail).trim_end());
        }
        let _ = writeln!(out, "verified={}", v.passed);
    }
    out
}

fn is_json(command: &Command) -> bool {
    match command {
        Command::Factor(j)
        | Command::Params(j)
        | Command::Decompose(j)
        | Command::Recurse(j)
        | Command::Distance(j) => j.json,
        Command::Verify(a) | Command::Report(a) => a.job.json,
    }
}

/// Runs one parsed invocation.
pub fn run(cli: &Cli) -> Outcome {
    match build_report(&cli.command) {
        Ok(rep) => {
            let code = match &rep.verification {
                Some(v) if !v.passed => 1,
                _ => 0,
            };
            let stdout = if is_json(&cli.command) {
                serde_json::to_string_pretty(&rep).expect("reports serialize") + "\n"
            } else {
                render_text(&rep)
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}
