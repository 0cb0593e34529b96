use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use termfan::fan::{
    degree_bound_quadric, enumerate_leading_ideals_admissible, enumerate_leading_ideals_degree,
    minimal_leading_ideals, universal_gb, verify_universal, UniversalFailure,
};
use termfan::groebner::{
    buchberger, macaulay_check, reduce_gb, slice_leading_monomials, MacaulayFailure,
};
use termfan::ideal::{hilbert_function, hilbert_polynomial_and_index, MonomialIdeal};
use termfan::ordering::{
    classify, metric_distance, perturb_to_incompatible, random_admissible_ordering, OrderingSpec,
};
use termfan::parse::{parse_monomial_list, parse_ordering, parse_polynomial};
use termfan::poly::{Polynomial, Ring};
use termfan::session::Session;
use termfan::Error;

#[derive(Parser)]
#[command(
    name = "termfan",
    version,
    about = "Leading-ideal fans, term orderings and Gröbner bases over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RingArgs {
    /// Session file supplying the ring and named orderings
    #[arg(long)]
    session: Option<PathBuf>,
    /// Comma-separated variable names, used when no session is given
    #[arg(long, default_value = "x,y")]
    ring: String,
}

#[derive(Args)]
struct SessionArgs {
    /// Session file
    session: PathBuf,
    /// Name of an ordering in the session, or an ordering in text syntax
    #[arg(long)]
    ordering: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an ordering (founded, compatible, degree, admissible)
    Classify {
        ordering: String,
        #[command(flatten)]
        ring: RingArgs,
        /// Degree window searched for compatibility violations
        #[arg(long, default_value_t = 6)]
        window: u32,
    },
    /// Distance between two orderings in the filtration metric
    Dist {
        first: String,
        second: String,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value_t = 8)]
        cap: u32,
    },
    /// Gröbner basis by Buchberger completion
    Gb(SessionArgs),
    /// Reduced Gröbner basis
    ReducedGb(SessionArgs),
    /// Distinct leading ideals over admissible matrix orderings
    Fan {
        session: PathBuf,
        #[arg(long)]
        weight_bound: Option<u32>,
        /// Extra random orderings after the systematic sweep
        #[arg(long, default_value_t = 0)]
        random: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep only the inclusion-minimal ideals
        #[arg(long)]
        minimal: bool,
    },
    /// Distinct truncated leading ideals over all graded tables of a depth
    DegreeFan {
        session: PathBuf,
        #[arg(long)]
        depth: Option<u32>,
    },
    /// Union of the reduced bases found by the admissible sweep
    UniversalGb {
        session: PathBuf,
        #[arg(long)]
        weight_bound: Option<u32>,
    },
    /// Check a universal basis against random admissible orderings
    VerifyUniversal {
        session: PathBuf,
        /// File with one polynomial per line; computed from the fan if absent
        #[arg(long)]
        universal: Option<PathBuf>,
        /// Delete the element with this 0-based index before checking
        #[arg(long)]
        drop: Option<usize>,
        #[arg(long)]
        weight_bound: Option<u32>,
        #[arg(long, default_value_t = 100)]
        samples: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest weight entry in sampled orderings
        #[arg(long, default_value_t = 16)]
        max_weight: u32,
    },
    /// Hilbert function, polynomial and regularity index of a monomial ideal
    Hilbert {
        /// Generators, e.g. "<x^2, x*y>"
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value = "x,y")]
        ring: String,
        /// Print HF up to this degree (at least two past the index)
        #[arg(long)]
        upto: Option<u32>,
    },
    /// Verify the standard monomials form a basis of the quotient
    Macaulay {
        #[command(flatten)]
        session: SessionArgs,
        #[arg(long, default_value_t = 4)]
        cap: u32,
    },
    /// Leading monomials of the ideal elements of degree at most s
    SliceLm {
        #[command(flatten)]
        session: SessionArgs,
        #[arg(long)]
        degree: u32,
    },
    /// Degree ordering close to the given one that is not compatible
    Perturb {
        ordering: String,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        r: u32,
    },
    /// Gröbner degree bound for quadric solvable algebras
    Bound {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        t: u32,
    },
}

/// Exit 2 for malformed input, 1 when a computation fails or a check reports a
/// counterexample.
enum Failure {
    Input(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BuchbergerBudget { .. }
            | Error::EnumerationBudget { .. }
            | Error::RewriteBudget(_)
            | Error::LeadingTermOfZero => Failure::Math(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CliResult = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Session, Failure> {
    Session::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn ring_from(args: &RingArgs) -> Result<(Ring, Option<Session>), Failure> {
    match &args.session {
        Some(p) => {
            let s = load(p)?;
            Ok((s.ring().clone(), Some(s)))
        }
        None => Ok((Ring::new(args.ring.split(',').map(str::trim))?, None)),
    }
}

/// A session ordering name, or ordering text parsed against `ring`.
fn resolve_ordering(
    text: &str,
    ring: &Ring,
    session: Option<&Session>,
) -> Result<OrderingSpec, Failure> {
    if let Some(o) = session.and_then(|s| s.ordering(text.trim())) {
        return Ok(o.clone());
    }
    Ok(parse_ordering(text, ring)?)
}

fn session_ordering(args: &SessionArgs) -> Result<(Session, OrderingSpec), Failure> {
    let s = load(&args.session)?;
    let ord = match &args.ordering {
        Some(text) => resolve_ordering(text, s.ring(), Some(&s))?,
        None => s
            .orderings
            .first()
            .map(|(_, o)| o.clone())
            .unwrap_or_else(|| OrderingSpec::grlex(s.ring().nvars())),
    };
    Ok((s, ord))
}

fn numeric_param(s: &Session, flag: Option<u32>, key: &str, default: u32) -> Result<u32, Failure> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match s.param(key) {
        Some(v) => v
            .parse()
            .map_err(|_| Failure::Input(format!("param {key}={v} is not a natural number"))),
        None => Ok(default),
    }
}

fn run(command: Command) -> CliResult {
    let mut out = String::new();
    match command {
        Command::Classify {
            ordering,
            ring,
            window,
        } => {
            let (ring, session) = ring_from(&ring)?;
            let ord = resolve_ordering(&ordering, &ring, session.as_ref())?;
            let c = classify(&ord, window);
            let _ = writeln!(out, "ordering={}", ord.display(&ring));
            let _ = writeln!(out, "founded_at_one={}", yes_no(c.founded_at_one));
            let _ = writeln!(out, "degree={}", yes_no(c.degree));
            let _ = writeln!(out, "compatible={} window={}", c.compatible, c.window);
            if let Some(w) = &c.compatibility_witness {
                let _ = writeln!(
                    out,
                    "witness {} < {} but {}*{} > {}*{}",
                    w.lower.display(&ring),
                    w.upper.display(&ring),
                    w.lower.display(&ring),
                    w.shift.display(&ring),
                    w.upper.display(&ring),
                    w.shift.display(&ring)
                );
            }
            let _ = writeln!(out, "admissible={}", c.admissible);
            let _ = writeln!(out, "well={}", c.well);
        }
        Command::Dist {
            first,
            second,
            ring,
            cap,
        } => {
            let (ring, session) = ring_from(&ring)?;
            let a = resolve_ordering(&first, &ring, session.as_ref())?;
            let b = resolve_ordering(&second, &ring, session.as_ref())?;
            let _ = writeln!(out, "distance={}", metric_distance(&a, &b, cap));
        }
        Command::Gb(args) => {
            let (s, ord) = session_ordering(&args)?;
            let g = buchberger(&s.ideal()?, &ord)?;
            let _ = writeln!(out, "{}", g.display(s.ring()));
        }
        Command::ReducedGb(args) => {
            let (s, ord) = session_ordering(&args)?;
            let g = reduce_gb(&buchberger(&s.ideal()?, &ord)?)?;
            let _ = writeln!(out, "{}", g.display(s.ring()));
            let _ = writeln!(out, "leading_ideal={}", g.leading_ideal().display(s.ring()));
        }
        Command::Fan {
            session,
            weight_bound,
            random,
            seed,
            minimal,
        } => {
            let s = load(&session)?;
            let w = numeric_param(&s, weight_bound, "weight-bound", 4)?;
            let mut fan = enumerate_leading_ideals_admissible(&s.ideal()?, w, random, seed)?;
            if minimal {
                fan = minimal_leading_ideals(&fan);
            }
            let _ = write!(out, "{}", fan.display(s.ring()));
        }
        Command::DegreeFan { session, depth } => {
            let s = load(&session)?;
            let d = numeric_param(&s, depth, "depth", 3)?;
            let fan = enumerate_leading_ideals_degree(&s.ideal()?, d)?;
            for e in &fan.entries {
                let _ = writeln!(
                    out,
                    "ideal={} witness={}",
                    e.ideal.display(s.ring()),
                    e.witness.display(s.ring())
                );
            }
            if let termfan::fan::SearchConfig::Degree { orderings, .. } = fan.config {
                let _ = writeln!(out, "orderings={orderings} distinct={}", fan.entries.len());
            }
        }
        Command::UniversalGb {
            session,
            weight_bound,
        } => {
            let s = load(&session)?;
            let w = numeric_param(&s, weight_bound, "weight-bound", 4)?;
            let fan = enumerate_leading_ideals_admissible(&s.ideal()?, w, 0, 0)?;
            let u = universal_gb(&fan)?;
            let _ = writeln!(
                out,
                "# {} elements from {} leading ideals, exhausted={}",
                u.len(),
                fan.entries.len(),
                fan.exhausted
            );
            for p in &u {
                let _ = writeln!(out, "{}", p.display(s.ring()));
            }
        }
        Command::VerifyUniversal {
            session,
            universal,
            drop,
            weight_bound,
            samples,
            seed,
            max_weight,
        } => {
            let s = load(&session)?;
            let ideal = s.ideal()?;
            let mut u = match &universal {
                Some(path) => read_polynomials(path, &s)?,
                None => {
                    let w = numeric_param(&s, weight_bound, "weight-bound", 4)?;
                    universal_gb(&enumerate_leading_ideals_admissible(&ideal, w, 0, 0)?)?
                }
            };
            if let Some(k) = drop {
                if k >= u.len() {
                    return Err(Failure::Input(format!(
                        "--drop {k} but the basis has {} elements",
                        u.len()
                    )));
                }
                let gone = u.remove(k);
                let _ = writeln!(out, "dropped {}", gone.display(s.ring()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = s.ring().nvars();
            let orderings: Vec<OrderingSpec> = (0..samples)
                .map(|_| random_admissible_ordering(n, max_weight, &mut rng).into())
                .collect();
            let report = verify_universal(&u, &ideal, &orderings)?;
            let failed: std::collections::BTreeSet<usize> =
                report.failures.iter().map(|f| f.ordering_index).collect();
            let _ = writeln!(
                out,
                "checked={} failed_orderings={}",
                report.checked,
                failed.len()
            );
            for f in report.failures.iter().take(5) {
                let _ = write!(out, "failure ordering={} ", f.ordering.display(s.ring()));
                let _ = match &f.failure {
                    UniversalFailure::LeadingIdealMismatch { expected, found } => writeln!(
                        out,
                        "leading ideal {} but candidate gives {}",
                        expected.display(s.ring()),
                        found.display(s.ring())
                    ),
                    UniversalFailure::NotInIdeal { element, remainder } => writeln!(
                        out,
                        "element {element} is not in the ideal (remainder {})",
                        remainder.display(s.ring())
                    ),
                };
            }
            return Ok((out, report.passed()));
        }
        Command::Hilbert { ideal, ring, upto } => {
            let ring = Ring::new(ring.split(',').map(str::trim))?;
            let gens = parse_monomial_list(&ideal, &ring)?;
            let i = MonomialIdeal::from_generators(ring.nvars(), gens);
            let data = hilbert_polynomial_and_index(&i)?;
            let top = upto.unwrap_or(0).max(data.regularity_index + 2);
            let hf: Vec<String> = (0..=top)
                .map(|s| hilbert_function(&i, s).map(|v| v.to_string()))
                .collect::<Result<_, _>>()?;
            let s_ring = Ring::new(["s"])?;
            let hp = Polynomial::from_terms(
                1,
                data.hp_coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| (termfan::poly::Monomial::new(vec![k as u32]), c.clone())),
            );
            let _ = writeln!(out, "ideal={}", i.display(&ring));
            let _ = writeln!(out, "HF(0..={top})={}", hf.join(" "));
            let _ = writeln!(out, "HP(s)={}", hp.display(&s_ring));
            let _ = writeln!(out, "ind={}", data.regularity_index);
        }
        Command::Macaulay { session, cap } => {
            let (s, ord) = session_ordering(&session)?;
            let report = macaulay_check(&s.ideal()?, &ord, cap)?;
            let lead = reduce_gb(&buchberger(&s.ideal()?, &ord)?)?.leading_ideal();
            let _ = writeln!(out, "leading_ideal={}", lead.display(s.ring()));
            let standard: Vec<String> = report
                .standard_monomials
                .iter()
                .map(|m| m.display(s.ring()).to_string())
                .collect();
            let _ = writeln!(out, "standard<={cap}: {}", standard.join(", "));
            let mut counts_match = true;
            for (deg, count) in report.standard_counts.iter().enumerate() {
                let hf = hilbert_function(&lead, deg as u32)?;
                counts_match &= hf == *count as u128;
                let _ = writeln!(out, "s={deg} standard={count} hilbert={hf}");
            }
            for f in &report.failures {
                let _ = match f {
                    MacaulayFailure::RemainderNotStandard { monomial, remainder } => writeln!(
                        out,
                        "failure: normal form of {} is {}, not in the standard span",
                        monomial.display(s.ring()),
                        remainder.display(s.ring())
                    ),
                    MacaulayFailure::StandardNotFixed { monomial, remainder } => writeln!(
                        out,
                        "failure: standard monomial {} reduces to {}",
                        monomial.display(s.ring()),
                        remainder.display(s.ring())
                    ),
                    MacaulayFailure::DimensionMismatch { degree, standard, expected } => writeln!(
                        out,
                        "failure: degree {degree} has {standard} standard monomials, expected {expected}"
                    ),
                };
            }
            let passed = report.passed() && counts_match;
            let _ = writeln!(out, "{}", if passed { "passed" } else { "failed" });
            return Ok((out, passed));
        }
        Command::SliceLm { session, degree } => {
            let (s, ord) = session_ordering(&session)?;
            let ms = slice_leading_monomials(&s.ideal()?, &ord, degree)?;
            let shown: Vec<String> = ms.iter().map(|m| m.display(s.ring()).to_string()).collect();
            let _ = writeln!(out, "{}", shown.join(", "));
        }
        Command::Perturb { ordering, ring, r } => {
            let (ring, session) = ring_from(&ring)?;
            let ord = resolve_ordering(&ordering, &ring, session.as_ref())?;
            let p: OrderingSpec = perturb_to_incompatible(&ord, r)?.into();
            let c = classify(&p, r + 3);
            let _ = writeln!(out, "ordering={}", p.display(&ring));
            let _ = writeln!(out, "distance={}", metric_distance(&ord, &p, r + 3));
            let _ = writeln!(
                out,
                "degree={} compatible={}",
                yes_no(c.degree),
                c.compatible
            );
        }
        Command::Bound { d, t } => {
            if d == 0 || t == 0 || t > 20 {
                return Err(Failure::Input("bound needs d >= 1 and 1 <= t <= 20".into()));
            }
            let _ = writeln!(out, "{}", degree_bound_quadric(d, t));
        }
    }
    Ok((out, true))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// One polynomial per line; blank lines and `#` comments are skipped.
fn read_polynomials(path: &Path, s: &Session) -> Result<Vec<Polynomial>, Failure> {
    let nc = !s.algebra.is_commutative();
    let mut out = Vec::new();
    for (k, line) in read(path)?.lines().enumerate() {
        let text = line.split('#').next().unwrap_or("");
        if text.trim().is_empty() {
            continue;
        }
        let p = parse_polynomial(text, s.ring(), nc)
            .map_err(|e| Failure::Input(format!("{}: {}", path.display(), e.at_line(k + 1, 0))))?;
        out.push(p);
    }
    Ok(out)
}
