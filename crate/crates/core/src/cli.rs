//! The `lforge` command line.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::acceptance::{self, Level};
use crate::algebra::numtheory::primes_up_to;
use crate::algebra::{Integers, PolyOver, TruncSeries};
use crate::closure;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::f1mod::{self, F1Module};
use crate::lambda::{self, check_axioms, LambdaRing, ZeroedLambda};
use crate::monoid::{self, Monoid, MonoidRing};
use crate::parse::{parse_int_list, parse_series, parse_upoly};
use crate::symmetric::{universal_p, universal_p2, UniversalPoly};
use crate::witt::{self, WittVector};
use crate::zeta::{self, SArg, ZetaSpec};

#[derive(Debug, Parser)]
#[command(name = "lforge", version, about = "Exact λ-ring, Witt vector and zeta computations")]
struct Cli {
    /// Emit a JSON envelope instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Report elapsed time
    #[arg(long, global = true)]
    timing: bool,
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Universal polynomials P_n and P_{n,m}
    #[command(subcommand)]
    Universal(UniversalCmd),
    /// λ-operations on Z, Z[M] and polynomial rings over them
    #[command(subcommand)]
    Lambda(LambdaCmd),
    /// Pointed monoids and their points
    #[command(subcommand)]
    Monoid(MonoidCmd),
    /// Big Witt vectors over Z
    #[command(subcommand)]
    Witt(WittCmd),
    /// λ-stable ideals of Z[x] and the closure of F₁
    #[command(subcommand)]
    F1(F1Cmd),
    /// Finite abelian groups with λ-families
    #[command(subcommand)]
    F1mod(F1modCmd),
    /// Euler products and Dirichlet sums
    #[command(subcommand)]
    Zeta(ZetaCmd),
    /// Run the acceptance criteria
    Verify {
        #[arg(value_enum, default_value = "quick")]
        level: VerifyLevel,
    },
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum VerifyLevel {
    Quick,
    Full,
}

#[derive(Debug, Subcommand)]
enum UniversalCmd {
    /// P_n with λⁿ(xy) = P_n(λ¹x..λⁿx; λ¹y..λⁿy)
    Pn { n: usize },
    /// P_{n,m} with λⁿ(λᵐx) = P_{n,m}(λ¹x..λⁿᵐx)
    Pnm { n: usize, m: usize },
}

#[derive(Debug, clap::Args)]
struct RingElemArgs {
    /// Ring: Z, Z[C6], Z[C2xC3], Z[N], Z[Q/Z], optionally followed by [x]
    #[arg(long, default_value = "Z")]
    ring: String,
    /// Element, e.g. "g + 2*g^3 - 1"
    #[arg(long, allow_hyphen_values = true)]
    elem: String,
}

#[derive(Debug, Subcommand)]
enum LambdaCmd {
    /// λⁿ(x) and λ_t(x) up to tⁿ
    Eval {
        #[command(flatten)]
        target: RingElemArgs,
        #[arg(long)]
        n: usize,
    },
    /// Largest k ≤ bound with λᵏ(x) ≠ 0
    Degree {
        #[command(flatten)]
        target: RingElemArgs,
        /// Search bound (defaults to the series order)
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Adams operations ψ¹..ψᵏ
    Adams {
        #[command(flatten)]
        target: RingElemArgs,
        #[arg(long)]
        k: usize,
    },
    /// Check the λ-ring axioms on random pairs
    Axioms {
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Replace λᵏ by zero before checking
        #[arg(long)]
        corrupt: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum MonoidCmd {
    /// Maps of pointed monoids domain₊ → codomain₊
    Points {
        #[arg(long)]
        domain: String,
        #[arg(long)]
        codomain: String,
        /// Torsion level for a Q/Z codomain
        #[arg(long)]
        level: Option<u64>,
    },
    /// Points of the affine line over the closure fixed by Frobenius k
    Fixed {
        #[arg(long)]
        k: u64,
    },
}

#[derive(Debug, Subcommand)]
enum WittCmd {
    /// Ghost components
    Ghost {
        #[arg(long, allow_hyphen_values = true)]
        components: String,
    },
    /// Witt vector sum
    Add {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Witt vector product
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Frobenius f_n
    Frobenius {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        n: usize,
    },
    /// Verschiebung V_n
    Verschiebung {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        n: usize,
    },
    /// Series with constant term 1 to Witt components, or back
    Ah {
        #[arg(long, conflicts_with = "components", required_unless_present = "components")]
        series: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        components: Option<String>,
    },
    /// Symbolic sum and product polynomials
    SymPolys {
        #[arg(long)]
        n: usize,
    },
    /// W(M) for a finite abelian group with zero multiplication
    Nonunital {
        /// Orders of the cyclic factors, e.g. 2,3
        #[arg(long)]
        group: String,
        #[arg(long)]
        length: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum F1Cmd {
    /// Whether (f) is λ-stable
    IdealCheck { polynomial: String },
    /// Classify the λ-ideal generated by f
    Classify { polynomial: String },
    /// Certified chain F₁ ⊂ … ⊂ F₁[μ_N]
    Tower { n: u64 },
    /// |Hom(Z[x], Z[M])| for a finite monoid M
    Homcount { monoid: String },
}

#[derive(Debug, Subcommand)]
enum F1modCmd {
    /// Scalar families on C_p, grouped into classes
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        bound: Option<usize>,
        /// List every family
        #[arg(long)]
        expand: bool,
    },
    /// n(P) for C_p with λ_q = a_q at the primes q ≤ bound
    Homcount {
        #[arg(long)]
        p: u64,
        /// Values at the primes in increasing order; missing values are 0
        #[arg(long, default_value = "")]
        family: String,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Check λ_1 = id and λ_n λ_m = λ_{nm} for scalars λ_1..λ_N on C_n
    Validate {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        scalars: String,
    },
}

#[derive(Debug, Subcommand)]
enum ZetaCmd {
    /// Euler product over the norms of a spec
    Euler {
        /// primes, monoid-cat, f1-modules or custom:N1,N2,...
        #[arg(long, default_value = "primes")]
        spec: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        bound: u64,
    },
    /// Σ n^{-s} for n ≤ terms
    Dirichlet {
        #[arg(long)]
        s: String,
        #[arg(long)]
        terms: u64,
    },
    /// Σ over Frobenius fixed-point counts
    Fixed {
        #[arg(long)]
        s: String,
        #[arg(long)]
        terms: u64,
    },
    /// Euler product over n(P) of enumerated non-degenerate simple objects
    F1mod {
        #[arg(long)]
        s: String,
        #[arg(long)]
        primes: u64,
    },
    /// Agreement checks between the constructions
    VerifyIdentities,
}

struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn new<T: Serialize>(payload: &T, text: String) -> Result<Output> {
        Ok(Output { json: to_value(payload)?, text, ok: true })
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Consistency(e.to_string()))
}

/// Parse arguments, run the command and map the outcome to an exit code.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let (name, module) = command_name(&cli.command);
    let outcome = cli.config.validate().and_then(|_| dispatch(&cli.command, &cli.config));
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    match outcome {
        Ok(out) => {
            if cli.json {
                let mut env = json!({ "command": name, "config": cli.config, "result": out.json });
                if cli.timing {
                    env["timing"] = json!({ "elapsed_ms": elapsed });
                }
                emit(&serde_json::to_string_pretty(&env).expect("serializable"));
            } else {
                emit(out.text.trim_end());
                if cli.timing {
                    emit(&format!("elapsed: {elapsed:.1} ms"));
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let code = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
            let obj = json!({
                "module": module,
                "kind": e.kind(),
                "message": e.to_string(),
                "witness": e.witness(),
            });
            if cli.json {
                let env = json!({ "command": name, "config": cli.config, "error": obj });
                emit(&serde_json::to_string_pretty(&env).expect("serializable"));
            } else {
                eprintln!("error [{module}/{}]: {e}", e.kind());
                if let Some(w) = e.witness() {
                    eprintln!("witness: {w}");
                }
            }
            ExitCode::from(code)
        }
    }
}

fn emit(s: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn command_name(c: &Command) -> (String, &'static str) {
    let (group, sub, module) = match c {
        Command::Universal(u) => ("universal", match u {
            UniversalCmd::Pn { .. } => "pn",
            UniversalCmd::Pnm { .. } => "pnm",
        }, "symmetric_universal"),
        Command::Lambda(l) => ("lambda", match l {
            LambdaCmd::Eval { .. } => "eval",
            LambdaCmd::Degree { .. } => "degree",
            LambdaCmd::Adams { .. } => "adams",
            LambdaCmd::Axioms { .. } => "axioms",
        }, "lambda_core"),
        Command::Monoid(m) => ("monoid", match m {
            MonoidCmd::Points { .. } => "points",
            MonoidCmd::Fixed { .. } => "fixed",
        }, "monoid_core"),
        Command::Witt(w) => ("witt", match w {
            WittCmd::Ghost { .. } => "ghost",
            WittCmd::Add { .. } => "add",
            WittCmd::Mul { .. } => "mul",
            WittCmd::Frobenius { .. } => "frobenius",
            WittCmd::Verschiebung { .. } => "verschiebung",
            WittCmd::Ah { .. } => "ah",
            WittCmd::SymPolys { .. } => "sym-polys",
            WittCmd::Nonunital { .. } => "nonunital",
        }, "witt_core"),
        Command::F1(f) => ("f1", match f {
            F1Cmd::IdealCheck { .. } => "ideal-check",
            F1Cmd::Classify { .. } => "classify",
            F1Cmd::Tower { .. } => "tower",
            F1Cmd::Homcount { .. } => "homcount",
        }, "f1_closure"),
        Command::F1mod(f) => ("f1mod", match f {
            F1modCmd::Enumerate { .. } => "enumerate",
            F1modCmd::Homcount { .. } => "homcount",
            F1modCmd::Validate { .. } => "validate",
        }, "f1_modules"),
        Command::Zeta(z) => ("zeta", match z {
            ZetaCmd::Euler { .. } => "euler",
            ZetaCmd::Dirichlet { .. } => "dirichlet",
            ZetaCmd::Fixed { .. } => "fixed",
            ZetaCmd::F1mod { .. } => "f1mod",
            ZetaCmd::VerifyIdentities => "verify-identities",
        }, "zeta_engine"),
        Command::Verify { .. } => ("verify", "", "cli"),
    };
    let name = if sub.is_empty() { group.to_string() } else { format!("{group} {sub}") };
    (name, module)
}

fn dispatch(c: &Command, cfg: &Config) -> Result<Output> {
    match c {
        Command::Universal(u) => universal(u, cfg),
        Command::Lambda(l) => lambda_cmd(l, cfg),
        Command::Monoid(m) => monoid_cmd(m),
        Command::Witt(w) => witt_cmd(w, cfg),
        Command::F1(f) => f1_cmd(f, cfg),
        Command::F1mod(f) => f1mod_cmd(f, cfg),
        Command::Zeta(z) => zeta_cmd(z, cfg),
        Command::Verify { level } => verify(*level),
    }
}

fn universal(u: &UniversalCmd, cfg: &Config) -> Result<Output> {
    let p: std::sync::Arc<UniversalPoly> = match *u {
        UniversalCmd::Pn { n } => universal_p(n, cfg.limits())?,
        UniversalCmd::Pnm { n, m } => universal_p2(n, m, cfg.limits())?,
    };
    let s = p.format();
    let record = p.record();
    Output::new(&json!({ "polynomial": s, "variables": record.variables, "terms": record.terms }), s)
}

/// Ring-specific parsing and sampling for the `lambda` commands.
trait CliRing: LambdaRing + Clone + Sized {
    fn lookup(&self, name: &str) -> Result<Self::Elem>;
    fn sample<G: Rng>(&self, rng: &mut G) -> Self::Elem;

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        crate::parse::parse_in(s, self, &|name| self.lookup(name))
    }
}

impl CliRing for Integers {
    fn lookup(&self, name: &str) -> Result<BigInt> {
        Err(Error::Parse(format!("Z has no generator '{name}'")))
    }
    fn sample<G: Rng>(&self, rng: &mut G) -> BigInt {
        BigInt::from(rng.gen_range(-9i64..=9))
    }
}

impl CliRing for MonoidRing {
    fn lookup(&self, name: &str) -> Result<Self::Elem> {
        Ok(self.basis(self.monoid.resolve(name)?))
    }
    fn sample<G: Rng>(&self, rng: &mut G) -> Self::Elem {
        self.random_elem(rng, 3, 3)
    }
}

impl<R: CliRing> CliRing for PolyOver<R> {
    fn lookup(&self, name: &str) -> Result<Self::Elem> {
        if name == self.var {
            Ok(self.var_elem())
        } else {
            Ok(self.constant(self.base.lookup(name)?))
        }
    }
    fn sample<G: Rng>(&self, rng: &mut G) -> Self::Elem {
        let d = rng.gen_range(0..=2);
        self.strip((0..=d).map(|_| self.base.sample(rng)).collect())
    }
}

enum AnyRing {
    Int(Integers),
    Monoid(MonoidRing),
    PolyInt(PolyOver<Integers>),
    PolyMonoid(PolyOver<MonoidRing>),
}

macro_rules! with_ring {
    ($any:expr, $r:ident => $body:expr) => {
        match $any {
            AnyRing::Int($r) => $body,
            AnyRing::Monoid($r) => $body,
            AnyRing::PolyInt($r) => $body,
            AnyRing::PolyMonoid($r) => $body,
        }
    };
}

fn parse_ring(spec: &str) -> Result<AnyRing> {
    let s = spec.trim();
    let (base, var) = match s.strip_suffix(']').and_then(|t| t.rsplit_once('[')) {
        Some((head, v)) if v.len() == 1 && v != "N" && v.chars().all(|c| c.is_ascii_alphabetic()) => {
            (head, Some(v.to_string()))
        }
        _ => (s, None),
    };
    let base_ring = if base == "Z" {
        None
    } else if let Some(m) = base.strip_prefix("Z[").and_then(|t| t.strip_suffix(']')) {
        Some(MonoidRing::new(m.parse::<Monoid>()?))
    } else {
        return Err(Error::Parse(format!("unknown ring '{spec}' (Z, Z[M], optionally followed by [x])")));
    };
    if let (Some(v), Some(b)) = (&var, &base_ring) {
        if b.monoid.generator_names().contains(v) {
            return Err(Error::Parse(format!("variable '{v}' clashes with a generator of {}", b.monoid)));
        }
    }
    Ok(match (base_ring, var) {
        (None, None) => AnyRing::Int(Integers),
        (Some(m), None) => AnyRing::Monoid(m),
        (None, Some(v)) => AnyRing::PolyInt(PolyOver::new(Integers, v)),
        (Some(m), Some(v)) => AnyRing::PolyMonoid(PolyOver::new(m, v)),
    })
}

fn lambda_cmd(l: &LambdaCmd, cfg: &Config) -> Result<Output> {
    match l {
        LambdaCmd::Eval { target, n } => {
            with_ring!(&parse_ring(&target.ring)?, r => lambda_eval(r, target, *n))
        }
        LambdaCmd::Degree { target, bound } => {
            let bound = bound.unwrap_or(cfg.series_order);
            with_ring!(&parse_ring(&target.ring)?, r => lambda_degree(r, target, bound))
        }
        LambdaCmd::Adams { target, k } => {
            with_ring!(&parse_ring(&target.ring)?, r => lambda_adams(r, target, *k))
        }
        LambdaCmd::Axioms { ring, samples, n_max, seed, corrupt } => {
            with_ring!(&parse_ring(ring)?, r => lambda_axioms(r, ring, *samples, *n_max, *seed, *corrupt, cfg))
        }
    }
}

fn lambda_eval<R: CliRing>(r: &R, t: &RingElemArgs, n: usize) -> Result<Output> {
    let x = r.parse_elem(&t.elem)?;
    let s = lambda::lambda_t(r, &x, n)?;
    let value = r.format(&s.coeffs()[n]);
    let series = s.format(r);
    Output::new(
        &json!({ "ring": t.ring, "elem": r.format(&x), "n": n, "value": value, "series": series }),
        format!("λ^{n}({}) = {value}\nλ_t = {series}", r.format(&x)),
    )
}

fn lambda_degree<R: CliRing>(r: &R, t: &RingElemArgs, bound: usize) -> Result<Output> {
    let x = r.parse_elem(&t.elem)?;
    let d = lambda::degree(r, &x, bound)?;
    Output::new(
        &json!({ "ring": t.ring, "elem": r.format(&x), "bound": bound, "degree": d }),
        match d {
            lambda::Degree::ExceedsBound(b) => format!("degree({}) exceeds {b}: λ^{b} is nonzero", r.format(&x)),
            _ => format!("degree({}) = {d}", r.format(&x)),
        },
    )
}

fn lambda_adams<R: CliRing>(r: &R, t: &RingElemArgs, k: usize) -> Result<Output> {
    if k == 0 {
        return Err(Error::InvalidArgument("Adams operations start at k = 1".into()));
    }
    let x = r.parse_elem(&t.elem)?;
    let vals: Vec<String> = lambda::adams_values(r, &x, k)?.iter().map(|v| r.format(v)).collect();
    let text = vals.iter().enumerate().map(|(i, v)| format!("ψ^{}({}) = {v}", i + 1, r.format(&x))).collect::<Vec<_>>();
    Output::new(
        &json!({ "ring": t.ring, "elem": r.format(&x), "k": k, "value": vals[k - 1], "values": vals }),
        text.join("\n"),
    )
}

fn lambda_axioms<R: CliRing>(
    r: &R,
    ring: &str,
    samples: usize,
    n_max: usize,
    seed: u64,
    corrupt: Option<usize>,
    cfg: &Config,
) -> Result<Output> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<_> = (0..samples).map(|_| (r.sample(&mut rng), r.sample(&mut rng))).collect();
    let report = match corrupt {
        None => check_axioms(r, &pairs, n_max, cfg.limits())?,
        Some(k) => check_axioms(&ZeroedLambda { inner: r.clone(), zeroed: k }, &pairs, n_max, cfg.limits())?,
    };
    let mut text = vec![format!("{ring}: {} sample pairs, n ≤ {n_max}", report.samples)];
    for o in &report.outcomes {
        text.push(format!(
            "axiom {} {:<28} {} ({} checks, {} skipped){}",
            o.axiom,
            o.statement,
            if o.passed { "pass" } else { "FAIL" },
            o.checks,
            o.skipped,
            o.witness.as_ref().map(|w| format!(" witness: {w}")).unwrap_or_default()
        ));
    }
    let mut out = Output::new(&json!({ "ring": ring, "corrupted": corrupt, "report": report }), text.join("\n"))?;
    out.ok = report.all_passed();
    Ok(out)
}

fn monoid_cmd(m: &MonoidCmd) -> Result<Output> {
    match m {
        MonoidCmd::Points { domain, codomain, level } => {
            let (d, c): (Monoid, Monoid) = (domain.parse()?, codomain.parse()?);
            let pts = monoid::points(&d, &c, *level)?;
            let rec = monoid::points_record(&d, &c, &pts);
            let mut text = vec![format!("{} maps {}₊ → {}₊", rec.count, rec.domain, rec.codomain)];
            for map in &rec.maps {
                let parts: Vec<String> = rec.generators.iter().zip(map).map(|(g, i)| format!("{g} ↦ {i}")).collect();
                text.push(format!("  {}", parts.join(", ")));
            }
            Output::new(&rec, text.join("\n"))
        }
        MonoidCmd::Fixed { k } => {
            if *k == 0 {
                return Err(Error::InvalidArgument("k must be at least 1".into()));
            }
            let count = monoid::fixed_point_count(*k);
            let closure = closure::closure_fixed_count(*k);
            Output::new(
                &json!({ "k": k, "count": count, "closure_count": closure }),
                format!("|fixed points of Frobenius {k}| = {count} (closure model: {closure})"),
            )
        }
    }
}

fn int_vector(s: &str) -> Result<WittVector<BigInt>> {
    Ok(WittVector::new(parse_int_list(s)?))
}

fn fmt_ints(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn witt_cmd(w: &WittCmd, cfg: &Config) -> Result<Output> {
    let z = Integers;
    let vector_out = |label: &str, v: &WittVector<BigInt>| -> Result<Output> {
        let comps = fmt_ints(&v.comps);
        let ghost = fmt_ints(&witt::ghost(&z, v));
        Output::new(
            &json!({ "components": comps, "ghost": ghost }),
            format!("{label} = ({})\nghost = ({})", comps.join(", "), ghost.join(", ")),
        )
    };
    match w {
        WittCmd::Ghost { components } => {
            let a = int_vector(components)?;
            let g = fmt_ints(&witt::ghost(&z, &a));
            Output::new(&json!({ "components": fmt_ints(&a.comps), "ghost": g }), format!("ghost = ({})", g.join(", ")))
        }
        WittCmd::Add { a, b } => {
            let (a, b) = same_length(int_vector(a)?, int_vector(b)?)?;
            vector_out("a + b", &witt::witt_add(&z, &a, &b)?)
        }
        WittCmd::Mul { a, b } => {
            let (a, b) = same_length(int_vector(a)?, int_vector(b)?)?;
            vector_out("a · b", &witt::witt_mul(&z, &a, &b)?)
        }
        WittCmd::Frobenius { a, n } => vector_out(&format!("f_{n}(a)"), &witt::frobenius_witt(&z, &int_vector(a)?, *n)?),
        WittCmd::Verschiebung { a, n } => {
            vector_out(&format!("V_{n}(a)"), &witt::verschiebung(&z, &int_vector(a)?, *n)?)
        }
        WittCmd::Ah { series, components } => match (series, components) {
            (Some(s), _) => {
                let f = parse_series(s, cfg.witt_length)?;
                let a = witt::artin_hasse(&z, &f)?;
                let comps = fmt_ints(&a.comps);
                Output::new(
                    &json!({ "series": f.format(&z), "components": comps }),
                    format!("{} ↦ ({})", f.format(&z), comps.join(", ")),
                )
            }
            (None, Some(c)) => {
                let a = int_vector(c)?;
                let f: TruncSeries<BigInt> = witt::artin_hasse_inv(&z, &a);
                Output::new(
                    &json!({ "components": fmt_ints(&a.comps), "series": f.format(&z) }),
                    format!("({}) ↦ {}", fmt_ints(&a.comps).join(", "), f.format(&z)),
                )
            }
            (None, None) => Err(Error::InvalidArgument("give --series or --components".into())),
        },
        WittCmd::SymPolys { n } => {
            let rec = witt::witt_polynomials(*n)?.record();
            let mut text = Vec::new();
            for (i, (s, p)) in rec.sum.iter().zip(&rec.product).enumerate() {
                text.push(format!("S{} = {s}", i + 1));
                text.push(format!("M{} = {p}", i + 1));
            }
            Output::new(&rec, text.join("\n"))
        }
        WittCmd::Nonunital { group, length } => {
            let orders = parse_int_list(group)?
                .into_iter()
                .map(|o| u64::try_from(o).ok().filter(|&o| o >= 1))
                .collect::<Option<Vec<u64>>>()
                .ok_or_else(|| Error::InvalidArgument("group orders must be positive".into()))?;
            let m = f1mod::FiniteAbelian { orders };
            let w = witt::witt_nonunital(&m, length.unwrap_or(cfg.witt_length.min(witt::SYMBOLIC_WITT_MAX)))?;
            let text = format!(
                "W(M) at length {} ≅ product of cyclic groups of orders {:?}\naddition componentwise: {}, products zero: {} ({} pairs)",
                w.n, w.additive_orders, w.addition_componentwise, w.product_zero, w.pairs_checked
            );
            let mut out = Output::new(&w, text)?;
            out.ok = w.addition_componentwise && w.product_zero;
            Ok(out)
        }
    }
}

fn same_length(a: WittVector<BigInt>, b: WittVector<BigInt>) -> Result<(WittVector<BigInt>, WittVector<BigInt>)> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument(format!("lengths differ: {} and {}", a.len(), b.len())));
    }
    Ok((a, b))
}

fn f1_cmd(f: &F1Cmd, cfg: &Config) -> Result<Output> {
    match f {
        F1Cmd::IdealCheck { polynomial } => {
            let p = parse_upoly(polynomial)?;
            let v = closure::is_lambda_stable(&p, cfg.k_max_stability)?;
            let text = match &v {
                closure::StabilityVerdict::Stable { cyclotomic_indices, x_power } => {
                    let x = match x_power {
                        0 => String::new(),
                        1 => "x times ".into(),
                        k => format!("x^{k} times "),
                    };
                    format!("({p}) is λ-stable: {x}Φ_d for d in {cyclotomic_indices:?}")
                }
                closure::StabilityVerdict::NotStable { witness_k } => {
                    format!("({p}) is not λ-stable: f does not divide f(x^{witness_k})")
                }
                closure::StabilityVerdict::StableBounded { k_max } => {
                    format!("({p}): f | f(x^k) for all k ≤ {k_max}")
                }
            };
            let mut v = to_value(&v)?;
            v["polynomial"] = json!(p.to_string());
            Ok(Output { json: v, text, ok: true })
        }
        F1Cmd::Classify { polynomial } => {
            let p = parse_upoly(polynomial)?;
            let c = closure::classify_generator(&p, cfg.k_max_stability)?;
            let rec = closure::classification_record(&p, &c)?;
            let text = serde_json::to_string_pretty(&rec).expect("serializable");
            Output::new(&rec, text)
        }
        F1Cmd::Tower { n } => {
            let t = closure::build_tower(*n)?;
            let mut text = vec![format!("F₁ → F₁[μ_{n}]: {}", if t.verified { "verified" } else { "NOT verified" })];
            for s in &t.steps {
                text.push(format!(
                    "  F₁[μ_{}][x]/(x^{} - u^{}): unit exponent {}, order {}, basis {}",
                    s.n,
                    s.p,
                    s.i,
                    s.unit_exponent,
                    s.order,
                    if s.basis_ok { "ok" } else { "FAILED" }
                ));
            }
            let mut out = Output::new(&t, text.join("\n"))?;
            out.ok = t.verified;
            Ok(out)
        }
        F1Cmd::Homcount { monoid } => {
            let h = closure::hom_count_affine_line(&monoid.parse()?)?;
            let text = format!(
                "|Hom(Z[x], Z[{}])| = {} (degree ≤ 1 images: {}, points: {}, agree: {})",
                h.monoid,
                h.count,
                h.images.len(),
                h.points,
                h.agrees
            );
            Output::new(&h, text)
        }
    }
}

fn family_values(p: u64, bound: usize, family: &str) -> Result<Vec<u64>> {
    let primes = primes_up_to(bound as u64);
    let values = parse_int_list(family)?;
    if values.len() > primes.len() {
        return Err(Error::InvalidArgument(format!(
            "{} values given but only {} primes ≤ {bound}",
            values.len(),
            primes.len()
        )));
    }
    let p_int = BigInt::from(p);
    Ok(values
        .iter()
        .map(|v| {
            let r = ((v % &p_int) + &p_int) % &p_int;
            u64::try_from(r).expect("reduced")
        })
        .collect())
}

fn f1mod_cmd(f: &F1modCmd, cfg: &Config) -> Result<Output> {
    match f {
        F1modCmd::Enumerate { p, bound, expand } => {
            let bound = bound.unwrap_or(cfg.module_bound);
            let e = f1mod::enumerate_simple(*p, bound)?;
            let nd = e.non_degenerate_class().expect("checked by enumeration");
            let text = format!(
                "C{p}, λ up to {bound}: {} families in {} classes; {} non-degenerate, n(P) = {}",
                e.total,
                e.classes.len(),
                e.non_degenerate,
                nd.verdict.n_count
            );
            let mut v = to_value(&e)?;
            if *expand {
                v["families"] = to_value(&e.expand())?;
            }
            Ok(Output { json: v, text, ok: true })
        }
        F1modCmd::Homcount { p, family, bound } => {
            if !crate::algebra::numtheory::is_prime(*p) {
                return Err(Error::InvalidArgument(format!("{p} is not prime")));
            }
            let bound = bound.unwrap_or(cfg.module_bound);
            let values = family_values(*p, bound, family)?;
            let m = F1Module::from_prime_values(*p, bound, &values);
            let validation = f1mod::validate_module(&m);
            let verdict = f1mod::verdict(&m);
            let via_lambda = f1mod::hom_count_via_lambda(&m)?;
            let scalars: Vec<i64> = m.family.iter().map(|a| a[0][0]).collect();
            let text = format!(
                "C{p} with λ_1..λ_{bound} = {scalars:?}\nn(P) = {} (via square-zero λ: {via_lambda}); simple: {}, non-degenerate: {}",
                verdict.n_count, verdict.simple, verdict.non_degenerate
            );
            let mut out = Output::new(
                &json!({
                    "p": p,
                    "bound": bound,
                    "prime_values": values,
                    "scalars": scalars,
                    "validation": validation,
                    "verdict": verdict,
                    "hom_count": verdict.n_count,
                    "hom_count_via_lambda": via_lambda,
                }),
                text,
            )?;
            out.ok = via_lambda == verdict.n_count;
            Ok(out)
        }
        F1modCmd::Validate { n, scalars } => {
            if *n == 0 {
                return Err(Error::InvalidArgument("group order must be positive".into()));
            }
            let vals = parse_int_list(scalars)?
                .into_iter()
                .map(|v| i64::try_from(v).map_err(|_| Error::InvalidArgument("scalar out of range".into())))
                .collect::<Result<Vec<i64>>>()?;
            let m = F1Module::cyclic_scalars(*n, &vals);
            let v = f1mod::validate_module(&m);
            let text = match v.witness {
                None => format!("valid family on C{n}"),
                Some((1, 1)) => "invalid: λ_1 is not the identity".into(),
                Some((k, 0)) => format!("invalid: λ_{k} is not a homomorphism"),
                Some((a, b)) => format!("invalid: λ_{a} ∘ λ_{b} ≠ λ_{}", a * b),
            };
            let mut out = Output::new(&v, text)?;
            out.ok = v.valid;
            Ok(out)
        }
    }
}

fn eval_text(label: &str, r: &zeta::EvalResult) -> String {
    format!("{label}(s = {}) ≈ {}  (tail ≤ {}, bound {})", r.s, r.value, r.tail_bound, r.bound_used)
}

fn zeta_cmd(z: &ZetaCmd, cfg: &Config) -> Result<Output> {
    let bits = cfg.zeta_precision_bits;
    match z {
        ZetaCmd::Euler { spec, s, bound } => {
            let mut spec: ZetaSpec = spec.parse()?;
            if let ZetaSpec::F1Modules { module_bound } = &mut spec {
                *module_bound = cfg.module_bound;
            }
            let r = zeta::euler_product(&spec, s.parse::<SArg>()?, *bound, bits)?;
            let mut v = to_value(&r)?;
            v["spec"] = json!(spec.to_string());
            Ok(Output { json: v, text: eval_text(&format!("ζ_{spec}"), &r), ok: true })
        }
        ZetaCmd::Dirichlet { s, terms } => {
            let r = zeta::dirichlet_partial(s.parse()?, *terms, bits)?;
            Output::new(&r, eval_text("Σ n^-s", &r))
        }
        ZetaCmd::Fixed { s, terms } => {
            let r = zeta::fixed_point_zeta(s.parse()?, *terms, bits)?;
            Output::new(&r, eval_text("Σ |fix|^-s", &r))
        }
        ZetaCmd::F1mod { s, primes } => {
            let g = zeta::geometric_zeta_f1mod(s.parse()?, *primes, cfg.module_bound, bits)?;
            let text = format!("{}\nfactors n(P): {:?}", eval_text("ζ_g", &g.result), g.factors);
            Output::new(&g, text)
        }
        ZetaCmd::VerifyIdentities => {
            let checks = zeta::verify_identities(bits, 100_000, 1_000_000, 10_000)?;
            let text: Vec<String> = checks
                .iter()
                .map(|c| format!("{:<22} s = {:<4} {}  {}", c.name, c.s, if c.passed { "PASS" } else { "FAIL" }, c.detail))
                .collect();
            let ok = checks.iter().all(|c| c.passed);
            let mut out = Output::new(&json!({ "checks": checks, "passed": ok }), text.join("\n"))?;
            out.ok = ok;
            Ok(out)
        }
    }
}

fn verify(level: VerifyLevel) -> Result<Output> {
    let level = match level {
        VerifyLevel::Quick => Level::Quick,
        VerifyLevel::Full => Level::Full,
    };
    let reports = acceptance::run(level);
    let passed = reports.iter().all(|r| r.passed);
    let text: Vec<String> = reports.iter().map(|r| r.line()).collect();
    let mut out = Output::new(&json!({ "level": level, "criteria": reports, "passed": passed }), text.join("\n"))?;
    out.ok = passed;
    Ok(out)
}
