use std::fs::File;
use std::io::{BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use betaexp::catalog::frg_conflict;
use betaexp::companion::{companion_poly, cofactor_analysis, pseudo_cofactor, true_cofactor};
use betaexp::expander::{greedy_expand, DEFAULT_MAX_STEPS};
use betaexp::family::{locate_pisot_root, FamilyId, FamilySeries, RootLocation};
use betaexp::realroot::isolate_root_above_1;
use betaexp::render::render_series;
use betaexp::verify::{parse_checks, parse_families, run_sweep, sweep_instances, Check};
use betaexp::{IntPolynomial, RealAlgebraic};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "betaexp", about = "Exact greedy beta expansions of 1 for regular Pisot numbers in (1,2)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand 1 in the base given by a polynomial or a family instance.
    Expand(ExpandArgs),
    /// Check catalog words, co-factors and classifications over a sweep.
    Verify(VerifyArgs),
    /// Draw the digits of a one-parameter family as a PPM image.
    Render(RenderArgs),
    /// List family syntaxes and the parameter branches of the tables.
    Families,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Integer polynomial, e.g. "x^3-x-1".
    #[arg(long)]
    poly: Option<String>,
    /// Family instance, e.g. "PhiA+(3,4)" or "Chi".
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct ExpandArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
    max_steps: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// "all" or a comma-separated list such as "PhiA+,ChiB".
    #[arg(long, default_value = "all")]
    families: String,
    /// Inclusive range "a..b" or a single value.
    #[arg(long, default_value = "1..6")]
    r: String,
    #[arg(long, default_value = "1..40")]
    n: String,
    /// "all" or a subset of expansion,cofactor,parry,boyd,frg,identities.
    #[arg(long, default_value = "all")]
    checks: String,
    /// Write one JSON object per instance to this file.
    #[arg(long)]
    jsonl: Option<PathBuf>,
    /// Record per-instance wall time (makes reports non-reproducible).
    #[arg(long)]
    timing: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
    max_steps: usize,
    /// Only print the summary line.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// Family with r fixed and n free, e.g. "PhiB-(20)".
    #[arg(long)]
    family: String,
    #[arg(long, default_value = "1..100")]
    n: String,
    #[arg(long, default_value_t = 300)]
    width: usize,
    #[arg(long)]
    out: PathBuf,
}

/// Exit status 2: bad input.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, InputError> {
    let bad = || InputError(format!("bad range {s:?}, expected a..b"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn base_from_input(input: &Input) -> Result<(RealAlgebraic, IntPolynomial, Option<FamilyId>), InputError> {
    if let Some(p) = &input.poly {
        let f: IntPolynomial = p.parse()?;
        let beta = isolate_root_above_1(&f)?.ok_or_else(|| InputError("no root above 1".into()))?;
        if !beta.in_open_unit_to_two() {
            return Err(InputError("the root above 1 is not in (1, 2)".into()));
        }
        return Ok((beta, f, None));
    }
    let id: FamilyId = input.family.as_deref().unwrap_or_default().parse()?;
    let f = betaexp::family::defining_poly(&id)?;
    match locate_pisot_root(&id)? {
        RootLocation::Pisot(beta) => Ok((beta, f, Some(id))),
        RootLocation::NotInUnitToTwo => Err(InputError(format!("{id}: root above 1 is not in (1, 2)"))),
        RootLocation::NoPisotRoot => Err(InputError(format!("{id}: no Pisot root in (1, 2)"))),
    }
}

fn cmd_expand(args: &ExpandArgs) -> Result<ExitCode, InputError> {
    let (beta, f, id) = base_from_input(&args.input)?;
    let word = greedy_expand(&beta, args.max_steps)?;
    let r = companion_poly(&word);
    let q = pseudo_cofactor(&r, &f)?;
    println!("word: {word}");
    println!("beta: {:.15}", beta.to_f64());
    println!("companion: {r}");
    println!("pseudo co-factor: {q}");
    let qa = cofactor_analysis(&q);
    println!("pseudo co-factor cyclotomic: {}", qa.cyclotomic_product);
    match true_cofactor(&r, &f) {
        Some(t) => {
            let ta = cofactor_analysis(&betaexp::RationalFunction::polynomial(t.clone()));
            println!("true co-factor: {t}");
            println!("true co-factor cyclotomic: {}", ta.cyclotomic_product);
            println!("true co-factor core reciprocal: {}", betaexp::cyclotomic::is_reciprocal(&ta.core));
        }
        None => println!("true co-factor: none (core does not divide the companion polynomial)"),
    }
    println!("parry: {}", word.parry_valid());
    println!("frg: {}", word.frg_check());
    if let Some(c) = id.as_ref().and_then(frg_conflict) {
        println!("note: {c}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, InputError> {
    let families = parse_families(&args.families)?;
    let checks = parse_checks(&args.checks)?;
    let ids = sweep_instances(&families, parse_range(&args.r)?, parse_range(&args.n)?);
    if ids.is_empty() {
        return Err(InputError("the selection contains no instances".into()));
    }
    let mut out = match &args.jsonl {
        Some(path) => Some(BufWriter::new(File::create(path)?)),
        None => None,
    };
    let reports = run_sweep(&ids, &checks, args.max_steps)?;
    let mut failed = 0;
    for rep in &reports {
        if let Some(w) = out.as_mut() {
            writeln!(w, "{}", rep.to_json_line(args.timing))?;
        }
        if !rep.passed() {
            failed += 1;
        }
        if !args.quiet && (!rep.passed() || !rep.notes.is_empty()) {
            println!("{rep}");
        }
    }
    if let Some(mut w) = out {
        w.flush()?;
    }
    let names: Vec<&str> = checks.iter().map(|c: &Check| c.name()).collect();
    println!("{} instances, {} failed [{}]", reports.len(), failed, names.join(","));
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_render(args: &RenderArgs) -> Result<ExitCode, InputError> {
    let series: FamilySeries = args.family.parse()?;
    if args.width == 0 {
        return Err(InputError("width must be at least 1".into()));
    }
    let img = render_series(&series, parse_range(&args.n)?, args.width)?;
    std::fs::write(&args.out, img.to_ppm())?;
    println!("{}x{} -> {}", img.width, img.height, args.out.display());
    Ok(ExitCode::SUCCESS)
}

const FAMILIES: &str = "\
Limit points
  PhiR(r)         x^{r+1} - 2x^r + x - 1
  PsiR(r)         x^{r+1} - x^r - ... - 1
  Chi             x^4 - x^3 - 2x^2 + 1
Two-parameter families, sign s in {+,-}
  PhiA s(r,n)     PhiR(r) x^n s (x^r - x^{r-1} + 1)
  PhiB s(r,n)     PhiR(r) x^n s (x^r - x + 1)
  PhiC s(r,n)     PhiR(r) x^n s (x^r + 1)(x - 1)
  PsiA s(r,n)     PsiR(r) x^n s (x^{r+1} - 1)
  PsiB s(r,n)     PsiR(r) x^n s (x^r + ... + 1)
  ChiA s(n)       Chi x^n s (x^3 + x^2 - x - 1)
  ChiB s(n)       Chi x^n s (x^4 - x^2 + 1)
Branches of the expansion tables
  PhiA-           r <= n <= 2r-2 | n = 2r-1 | n >= 2r   (no root in (1,2) for n < r)
  PhiA+           n = 2rk + j: 0 <= j <= r-2 | j = r-1 | r <= j <= 2r-1; n <= r-2 reindexed to (n+1, r-1)
  PhiB-           n = r | n = r+1 | n >= r+2 with a = ceil(r/(n-r)) - 1 even or odd
  PhiB+           n = 2rk + j: j = 0 | j = 1 | 2 <= j with r-1 = aj + b
  PhiC-           r+1 <= n <= 2r-1 | n = 2r | n >= 2r+1
  PhiC+           n = 2rk + j: j = 0 | 1 <= j <= r | r+1 <= j <= 2r-1; n < r reindexed to (n, r)
  PsiA-           n >= r+1: 1^{r+1} (0^{n-r-1} 1^r 0)^w
  PsiA+           same number as PhiB+(n, r+1)
  PsiB-           n >= r
  PsiB+           L = lcm(r+1, n+1) - 1 digits, a_i = 0 iff (r+1) | i or (n+1) | i
  ChiA-           n >= 4, n even | n odd
  ChiA+           n = 1, 2, 4 | n odd | n even >= 6
  ChiB-           n = 4, 5 | n even >= 6 | n odd >= 7
  ChiB+           n = 1, 2, 4 | n odd | n even >= 6
Text forms: PhiA+(3,4)  PhiR(2)  Chi  ChiB-(7); series for render: PhiB-(20)  ChiA+  PsiR";

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Expand(a) => cmd_expand(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Render(a) => cmd_render(a),
        Cmd::Families => {
            println!("{FAMILIES}");
            Ok(ExitCode::SUCCESS)
        }
    };
    result.unwrap_or_else(|InputError(msg)| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    })
}
