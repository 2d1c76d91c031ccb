//! Command-line frontend for `coprime-ap`.
//!
//! Exit codes: 0 success, 1 negative mathematical result (no witness, no
//! solution, violations found, nothing within the scan limit), 2 usage
//! error or rejected input, 3 internal consistency failure.

pub mod config;
pub mod reports;

use std::fmt::Write as _;
use std::io::BufRead;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coprime_ap::crt::{self, Congruence, CongruenceSystem, CrtOutcome};
use coprime_ap::decomposition::{
    delta_cyclotomic_bounded, delta_oracle, delta_quadratic_ring, is_known_cyclotomic_ufd, DeltaResult,
    DeltaValue,
};
use coprime_ap::pillai::{self, ArithmeticProgression};
use coprime_ap::rings::Allowlist;
use coprime_ap::{Error, Integer, Ring, RingElement};

use config::Config;
use reports::{
    CounterexampleReport, CrtReport, DeltaReport, DeltaSubject, FindReport, SquaresReport, TransferReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "coprime-ap", version, about = "Coprime terms in arithmetic progressions")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, env = "COPRIME_AP_FORMAT", default_value = "text")]
    pub format: Format,
    /// TOML file with allowlist overrides and default bounds.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ProgressionArgs {
    /// Ring: Z, gauss, eisenstein or "Q(sqrt m)".
    #[arg(long, default_value = "Z")]
    pub ring: String,
    /// First term, as INT or INT(+|-)INT*w.
    #[arg(short = 'a', allow_hyphen_values = true)]
    pub a: String,
    /// Common difference.
    #[arg(short = 'd', allow_hyphen_values = true)]
    pub d: String,
    /// Number of terms.
    #[arg(short = 'n')]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decomposition number of a quadratic ring, Z, or a cyclotomic ring.
    Delta {
        #[arg(long, conflicts_with = "cyclotomic")]
        ring: Option<String>,
        /// Index m of Z[zeta_m].
        #[arg(long)]
        cyclotomic: Option<u64>,
        /// Largest prime tried.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Search a progression for a term coprime to all others.
    FindCoprime(ProgressionArgs),
    /// Exhaustive sweep of progressions up to the coprime length bound.
    Verify {
        #[arg(long, default_value = "Z")]
        ring: String,
        /// Coordinate bound for a and d.
        #[arg(long)]
        bound: Option<i64>,
        /// Longest progression checked; defaults to min(16, 1 + delta).
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Progressions without a coprime term.
    Counterexample {
        #[arg(long, default_value = "gauss")]
        ring: String,
        #[arg(short = 'n')]
        n: usize,
        /// Search blocks of consecutive integers instead.
        #[arg(long)]
        consecutive: bool,
        /// Largest start scanned with --consecutive.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Solve z = u (mod v) systems.
    CrtSolve {
        #[arg(long, default_value = "Z")]
        ring: String,
        /// A congruence as RESIDUE,MODULUS. Repeatable.
        #[arg(short = 'c', long = "congruence", allow_hyphen_values = true)]
        congruences: Vec<String>,
        /// File of JSON lines {"residue": "...", "modulus": "..."}; "-" reads stdin.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Find z with term(i) | z - i for an integer progression.
    Transfer {
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: i64,
        #[arg(short = 'd', allow_hyphen_values = true)]
        d: i64,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Triples of squares in arithmetic progression.
    Squares {
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
    /// Is the product of the terms of an integer progression a perfect power?
    PowerCheck {
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: i64,
        #[arg(short = 'd', allow_hyphen_values = true)]
        d: i64,
        #[arg(short = 'n')]
        n: usize,
    },
}

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub exit: i32,
    pub json: serde_json::Value,
    pub text: String,
    /// Diagnostics for stderr.
    pub warnings: Vec<String>,
}

/// A failure before a report exists.
#[derive(Debug)]
pub struct Failure {
    pub exit: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let exit = match e {
            Error::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure { exit, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { exit: EXIT_USAGE, message: message.into() }
}

fn outcome<T: serde::Serialize>(exit: i32, report: &T, text: String) -> Result<Outcome, Failure> {
    let json = serde_json::to_value(report)
        .map_err(|e| Failure { exit: EXIT_INTERNAL, message: format!("cannot serialize report: {e}") })?;
    Ok(Outcome { exit, json, text, warnings: Vec::new() })
}

struct Context {
    config: Config,
    allowlist: Allowlist,
    jobs: usize,
}

impl Context {
    fn ring(&self, s: &str) -> Result<Ring, Failure> {
        Ok(Ring::parse_with(s, &self.allowlist)?)
    }
}

pub fn run(cli: Cli) -> Result<Outcome, Failure> {
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(usage)?,
        None => Config::default(),
    };
    let allowlist = config.allowlist();
    let ctx = Context { config, allowlist, jobs: cli.jobs.max(1) };
    match cli.command {
        Command::Delta { ring, cyclotomic, bound } => cmd_delta(&ctx, ring, cyclotomic, bound),
        Command::FindCoprime(args) => cmd_find_coprime(&ctx, &args),
        Command::Verify { ring, bound, nmax } => cmd_verify(&ctx, &ring, bound, nmax),
        Command::Counterexample { ring, n, consecutive, limit } => {
            cmd_counterexample(&ctx, &ring, n, consecutive, limit)
        }
        Command::CrtSolve { ring, congruences, input } => cmd_crt_solve(&ctx, &ring, &congruences, input),
        Command::Transfer { a, d, n } => cmd_transfer(a, d, n),
        Command::Squares { count } => cmd_squares(count),
        Command::PowerCheck { a, d, n } => cmd_power_check(a, d, n),
    }
}

/// Closed form finite and within `bound` must match the oracle exactly;
/// otherwise both must report nothing within `bound`.
fn consistent(closed: &DeltaResult, oracle: &DeltaResult, bound: u64) -> bool {
    match (closed.finite(), oracle.finite()) {
        (Some(c), Some(o)) => c == o,
        (Some(c), None) => c > bound,
        (None, Some(_)) => false,
        (None, None) => true,
    }
}

fn cmd_delta(ctx: &Context, ring: Option<String>, cyclotomic: Option<u64>, bound: Option<u64>) -> Result<Outcome, Failure> {
    let mut warnings = Vec::new();
    let (subject, results, agree, known_ufd) = match (ring, cyclotomic) {
        (_, Some(m)) => {
            let bound = bound.unwrap_or(ctx.config.defaults.cyclotomic_bound);
            let closed = delta_cyclotomic_bounded(m, bound)?;
            let ufd = is_known_cyclotomic_ufd(m);
            if !ufd {
                warnings.push(format!(
                    "Z[zeta_{m}] is not a known UFD; the coprime length bound is not established for it"
                ));
            }
            // Z[zeta_m] coincides with Z or a quadratic ring for these m
            let same_ring = match m {
                1 | 2 => Some(Ring::Integers),
                4 => Some(Ring::gaussian()),
                3 | 6 => Some(Ring::quadratic(-3)?),
                _ => None,
            };
            let mut results = vec![closed];
            let mut agree = true;
            if let Some(r) = same_ring {
                let oracle = delta_oracle(r, bound.max(2))?;
                agree = consistent(&closed, &oracle, bound.max(2));
                results.push(oracle);
            }
            (DeltaSubject::Cyclotomic(m), results, agree, Some(ufd))
        }
        (Some(tag), None) => {
            let r = ctx.ring(&tag)?;
            let bound = bound.unwrap_or(ctx.config.defaults.delta_bound);
            let oracle = delta_oracle(r, bound)?;
            match r {
                Ring::Integers => (DeltaSubject::Ring(r), vec![oracle], true, None),
                Ring::Quadratic(_) => {
                    let closed = delta_quadratic_ring(r)?;
                    let agree = consistent(&closed, &oracle, bound);
                    (DeltaSubject::Ring(r), vec![closed, oracle], agree, None)
                }
            }
        }
        (None, None) => return Err(usage("delta needs --ring or --cyclotomic")),
    };
    let report = DeltaReport { subject, results, agree, known_ufd };
    let mut text = String::new();
    let _ = writeln!(text, "delta of {}", report.subject);
    for r in &report.results {
        let _ = writeln!(text, "  {:?}: {}", r.method, r.value);
    }
    if !report.agree {
        let _ = writeln!(text, "methods disagree");
    }
    let value = match report.results[0].value {
        DeltaValue::Finite(p) => p.to_string(),
        DeltaValue::InfiniteOrBeyondBound(_) => "infinite".to_string(),
    };
    text.push_str(&value);
    let exit = if report.agree { EXIT_OK } else { EXIT_INTERNAL };
    let mut out = outcome(exit, &report, text)?;
    out.warnings = warnings;
    Ok(out)
}

fn progression(ctx: &Context, args: &ProgressionArgs) -> Result<ArithmeticProgression, Failure> {
    let ring = ctx.ring(&args.ring)?;
    let a = RingElement::parse(&args.a, ring)?;
    let d = RingElement::parse(&args.d, ring)?;
    Ok(ArithmeticProgression::new(a, d, args.n)?)
}

fn cmd_find_coprime(ctx: &Context, args: &ProgressionArgs) -> Result<Outcome, Failure> {
    let ap = progression(ctx, args)?;
    let report = pillai::find_coprime_term(&ap)?;
    let mut text = format!("AP({}, {}, {}) in {}\n", ap.first(), ap.difference(), ap.len(), ap.ring());
    match report.witness {
        Some(w) => {
            let _ = write!(text, "witness: term {w} = {}", ap.term(w)?);
        }
        None => {
            let _ = write!(text, "no term is coprime to all others");
        }
    }
    for (i, j) in &report.pairwise_offenders {
        let _ = write!(text, "\n  term {i} shares a factor with term {j}");
    }
    let exit = if report.witness.is_some() { EXIT_OK } else { EXIT_NEGATIVE };
    outcome(exit, &FindReport { progression: ap, report }, text)
}

fn cmd_verify(ctx: &Context, ring: &str, bound: Option<i64>, nmax: Option<usize>) -> Result<Outcome, Failure> {
    let ring = ctx.ring(ring)?;
    let bound = bound.unwrap_or(ctx.config.defaults.sweep_bound);
    let nmax = match nmax {
        Some(n) => n,
        None => coprime_ap::decomposition::coprime_length_bound(ring)?,
    };
    let report = pillai::verify_bound_sweep_with_jobs(ring, bound, nmax, ctx.jobs)?;
    let mut text = format!(
        "{}: coordinates within {}, lengths 2..={}: {} pairs, {} progressions\n{} violations",
        report.ring,
        report.coord_bound,
        report.n_max,
        report.pairs_tested,
        report.progressions_tested,
        report.violations.len()
    );
    if let Some(v) = report.violations.first() {
        let _ = write!(text, "\nfirst: a = {}, d = {}, n = {}", v.a, v.d, v.n);
    }
    let exit = if report.violations.is_empty() { EXIT_OK } else { EXIT_NEGATIVE };
    outcome(exit, &report, text)
}

fn cmd_counterexample(
    ctx: &Context,
    ring: &str,
    n: usize,
    consecutive: bool,
    limit: Option<u64>,
) -> Result<Outcome, Failure> {
    if consecutive {
        let limit = limit.unwrap_or(ctx.config.defaults.scan_limit);
        let start = pillai::search_counterexample_consecutive(n, &Integer::from(limit))?;
        let text = match &start {
            Some(x) => format!("{x}, ..., {} has no element coprime to the others", x + &Integer::from(n as u64 - 1)),
            None => format!("no block of {n} consecutive integers without a coprime element starts in 0..={limit}"),
        };
        let exit = if start.is_some() { EXIT_OK } else { EXIT_NEGATIVE };
        return outcome(exit, &CounterexampleReport::Consecutive { n, limit, start }, text);
    }
    if limit.is_some() {
        return Err(usage("--limit applies only with --consecutive"));
    }
    let ring = ctx.ring(ring)?;
    let c = pillai::construct_counterexample_ring(ring, n)?;
    let ap = &c.progression;
    let mut text = format!(
        "AP({}, 1, {n}) in {ring}\ndelta = {}, P = {}, Q = {}\nz = 0 mod {}, z = -1 mod {}\nself-check passed: no term is coprime to all others",
        ap.first(),
        c.delta,
        c.p,
        c.q,
        c.modulus,
        c.q
    );
    for (k, t) in ap.terms().iter().enumerate() {
        let _ = write!(text, "\n  term {}: {t}", k + 1);
    }
    outcome(EXIT_OK, &CounterexampleReport::Ring(Box::new(c)), text)
}

#[derive(serde::Deserialize)]
struct CongruenceLine {
    residue: String,
    modulus: String,
}

fn cmd_crt_solve(ctx: &Context, ring: &str, specs: &[String], input: Option<PathBuf>) -> Result<Outcome, Failure> {
    let ring = ctx.ring(ring)?;
    let mut pairs: Vec<(String, String)> = Vec::new();
    for spec in specs {
        let (u, v) = spec
            .split_once(',')
            .ok_or_else(|| usage(format!("congruence {spec:?} is not RESIDUE,MODULUS")))?;
        pairs.push((u.to_string(), v.to_string()));
    }
    if let Some(path) = input {
        let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
            Box::new(std::io::stdin().lock())
        } else {
            let file = std::fs::File::open(&path).map_err(|e| usage(format!("cannot open {}: {e}", path.display())))?;
            Box::new(std::io::BufReader::new(file))
        };
        for (k, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| usage(format!("read error: {e}")))?;
            if line.trim().is_empty() {
                continue;
            }
            let c: CongruenceLine =
                serde_json::from_str(&line).map_err(|e| usage(format!("line {}: {e}", k + 1)))?;
            pairs.push((c.residue, c.modulus));
        }
    }
    let congruences = pairs
        .iter()
        .map(|(u, v)| Congruence::new(RingElement::parse(u, ring)?, RingElement::parse(v, ring)?))
        .collect::<Result<Vec<_>, Error>>()?;
    let system = CongruenceSystem::new(congruences)?;
    let outcome_value = crt::solve(&system)?;
    let (exit, text) = match &outcome_value {
        CrtOutcome::Solved(sol) => (EXIT_OK, format!("z = {} (mod {})", sol.value, sol.modulus)),
        CrtOutcome::Incompatible(w) => (
            EXIT_NEGATIVE,
            format!("no solution: congruences {} and {} are incompatible", w.i, w.j),
        ),
    };
    let report = CrtReport { ring, congruences: system.congruences().to_vec(), outcome: outcome_value };
    outcome(exit, &report, text)
}

fn cmd_transfer(a: i64, d: i64, n: usize) -> Result<Outcome, Failure> {
    let ap = ArithmeticProgression::integers(a, d, n)?;
    let z = pillai::transfer_ap_to_consecutive(&ap)?;
    let coprime_index = pillai::coprime_term_via_consecutive(&ap)?;
    let mut text = format!("z = {z}: term(i) divides z - i for i = 1..={n}");
    if let Some(k) = coprime_index {
        let _ = write!(text, "\nz - {k} is coprime to the rest of z-1, ..., z-{n}, so term {k} = {} is coprime to the other terms", ap.term(k)?);
    }
    outcome(EXIT_OK, &TransferReport { progression: ap, z, coprime_index }, text)
}

fn cmd_squares(count: usize) -> Result<Outcome, Failure> {
    let triples = pillai::squares_ap_triples(count)?;
    let text = triples.iter().map(|(a, b, c)| format!("{a}, {b}, {c}")).collect::<Vec<_>>().join("\n");
    outcome(EXIT_OK, &SquaresReport { triples }, text)
}

fn cmd_power_check(a: i64, d: i64, n: usize) -> Result<Outcome, Failure> {
    let ap = ArithmeticProgression::integers(a, d, n)?;
    let report = pillai::product_power_check(&ap)?;
    let mut text = format!("product = {}\nperfect power: {}", report.product, report.product_is_perfect_power);
    if !report.hypotheses_hold {
        let mut why = Vec::new();
        if !report.coprime {
            why.push("gcd(a, d) != 1".to_string());
        }
        if !report.within_length_bound {
            why.push("more than 16 terms".to_string());
        }
        if !report.perfect_power_terms.is_empty() {
            why.push(format!("perfect-power terms at {:?}", report.perfect_power_terms));
        }
        if !report.unit_terms.is_empty() {
            why.push(format!("unit terms at {:?}", report.unit_terms));
        }
        let _ = write!(text, "\nhypotheses fail ({}); no claim", why.join(", "));
    }
    let exit = if report.product_is_perfect_power { EXIT_NEGATIVE } else { EXIT_OK };
    outcome(exit, &report, text)
}
