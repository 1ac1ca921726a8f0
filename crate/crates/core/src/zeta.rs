//! Zeta functions as Euler products over norms and as Dirichlet sums.
//!
//! Integer `s` is handled exactly where feasible; other `s` use binary
//! floating point with guard bits, and the arithmetic error is folded into
//! the reported tail bound.

use std::fmt;
use std::str::FromStr;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::numtheory::primes_up_to;
use crate::closure::closure_fixed_count;
use crate::error::{Error, Result};
use crate::f1mod::enumerate_simple;

/// Extra binary digits carried beyond the requested precision.
pub const GUARD_BITS: u32 = 64;
/// Euler products at integer `s` are exact rationals up to this bound.
pub const EXACT_EULER_MAX: u64 = 1_000_000;
/// Largest prime bound for the `f1-modules` spec.
pub const F1MODULES_BOUND_MAX: u64 = 1000;
pub const PRIME_BOUND_MAX: u64 = 10_000_000;

const CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZetaSpec {
    Primes,
    /// Primes together with one more object of norm 2.
    MonoidCat,
    /// Norms `n(P)` of non-degenerate simple objects, found by enumeration.
    F1Modules { module_bound: usize },
    Custom(Vec<u64>),
}

impl FromStr for ZetaSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "primes" => Ok(ZetaSpec::Primes),
            "monoid-cat" => Ok(ZetaSpec::MonoidCat),
            "f1-modules" => Ok(ZetaSpec::F1Modules { module_bound: 12 }),
            _ => {
                let Some(list) = s.strip_prefix("custom:") else {
                    return Err(Error::Parse(format!(
                        "unknown zeta spec '{s}' (primes, monoid-cat, f1-modules, custom:N1,N2,...)"
                    )));
                };
                let norms = crate::parse::parse_int_list(list)?
                    .into_iter()
                    .map(|n| u64::try_from(n).ok().filter(|&n| n >= 2))
                    .collect::<Option<Vec<u64>>>()
                    .ok_or_else(|| Error::InvalidArgument("norms must be integers ≥ 2".into()))?;
                Ok(ZetaSpec::Custom(norms))
            }
        }
    }
}

impl fmt::Display for ZetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZetaSpec::Primes => write!(f, "primes"),
            ZetaSpec::MonoidCat => write!(f, "monoid-cat"),
            ZetaSpec::F1Modules { .. } => write!(f, "f1-modules"),
            ZetaSpec::Custom(v) => {
                write!(f, "custom:{}", v.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(","))
            }
        }
    }
}

/// The norms of the spec that are at most `bound`, ascending.
pub fn norms(spec: &ZetaSpec, bound: u64) -> Result<Vec<u64>> {
    match spec {
        ZetaSpec::Primes => {
            check_prime_bound(bound)?;
            Ok(primes_up_to(bound))
        }
        ZetaSpec::MonoidCat => {
            check_prime_bound(bound)?;
            let mut v = primes_up_to(bound);
            if bound >= 2 {
                v.insert(0, 2);
            }
            Ok(v)
        }
        ZetaSpec::F1Modules { module_bound } => {
            if bound > F1MODULES_BOUND_MAX {
                return Err(Error::Resource {
                    what: "f1-modules prime bound",
                    value: bound as usize,
                    limit: F1MODULES_BOUND_MAX as usize,
                });
            }
            geometric_factors(bound, *module_bound)
        }
        ZetaSpec::Custom(v) => {
            let mut v: Vec<u64> = v.iter().copied().filter(|&n| n <= bound).collect();
            v.sort_unstable();
            Ok(v)
        }
    }
}

fn check_prime_bound(bound: u64) -> Result<()> {
    if bound > PRIME_BOUND_MAX {
        return Err(Error::Resource { what: "prime bound", value: bound as usize, limit: PRIME_BOUND_MAX as usize });
    }
    Ok(())
}

/// `n(P)` for every non-degenerate simple object on `C_p`, `p ≤ prime_bound`.
pub fn geometric_factors(prime_bound: u64, module_bound: usize) -> Result<Vec<u64>> {
    let primes = primes_up_to(prime_bound);
    let per_prime: Vec<Vec<u64>> = primes
        .par_iter()
        .map(|&p| {
            let e = enumerate_simple(p, module_bound)?;
            Ok(e.classes
                .iter()
                .filter(|c| c.verdict.non_degenerate)
                .flat_map(|c| std::iter::repeat_n(c.verdict.n_count, c.size as usize))
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut v: Vec<u64> = per_prime.into_iter().flatten().collect();
    v.sort_unstable();
    Ok(v)
}

/// The evaluation point: an integer or a real number, always `> 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SArg {
    Int(u32),
    Real(f64),
}

impl SArg {
    pub fn as_f64(self) -> f64 {
        match self {
            SArg::Int(n) => n as f64,
            SArg::Real(x) => x,
        }
    }
}

impl FromStr for SArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = if let Ok(n) = s.trim().parse::<u32>() {
            SArg::Int(n)
        } else {
            let x: f64 = s.trim().parse().map_err(|_| Error::Parse(format!("invalid s '{s}'")))?;
            if x.fract() == 0.0 && (0.0..=u32::MAX as f64).contains(&x) {
                SArg::Int(x as u32)
            } else {
                SArg::Real(x)
            }
        };
        if v.as_f64() <= 1.0 || !v.as_f64().is_finite() {
            return Err(Error::InvalidArgument(format!("s must be a real number > 1, got {s}")));
        }
        Ok(v)
    }
}

impl fmt::Display for SArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SArg::Int(n) => write!(f, "{n}"),
            SArg::Real(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvalResult {
    pub s: String,
    pub value: String,
    pub tail_bound: String,
    pub bound_used: u64,
}

impl EvalResult {
    pub fn value_f64(&self) -> f64 {
        self.value.parse().expect("decimal value")
    }

    pub fn tail_f64(&self) -> f64 {
        self.tail_bound.parse().expect("decimal tail")
    }
}

/// A positive value `num / den`.
#[derive(Debug, Clone)]
struct Quotient {
    num: BigInt,
    den: BigInt,
}

impl Quotient {
    fn exact_eq(&self, other: &Quotient) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

fn decimal_digits(bits: u32) -> usize {
    (bits as f64 * std::f64::consts::LOG10_2).ceil() as usize
}

fn render(q: &Quotient, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let (neg, num) = if q.num.sign() == BigSign::Minus { (true, -&q.num) } else { (false, q.num.clone()) };
    let scaled = (num * &scale).div_floor(&q.den);
    let (int, frac) = scaled.div_rem(&scale);
    let frac = frac.to_string();
    format!("{}{}.{}{}", if neg { "-" } else { "" }, int, "0".repeat(digits - frac.len()), frac)
}

fn render_bound(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else {
        // round the leading digits up
        let s = format!("{:.3e}", x * (1.0 + 1e-9));
        let (m, e) = s.split_once('e').expect("exponent");
        let m: f64 = m.parse().expect("mantissa");
        format!("{:.3}e{}", m + 0.001, e)
    }
}

fn product_tree(v: &[BigInt]) -> BigInt {
    match v.len() {
        0 => BigInt::one(),
        1 => v[0].clone(),
        n if n > CHUNK => {
            let (a, b) = v.split_at(n / 2);
            let (x, y) = rayon::join(|| product_tree(a), || product_tree(b));
            x * y
        }
        n => {
            let (a, b) = v.split_at(n / 2);
            product_tree(a) * product_tree(b)
        }
    }
}

fn bigfloat_quotient(x: &BigFloat) -> Quotient {
    let Some((words, _, sign, e, _)) = x.as_raw_parts() else {
        return Quotient { num: BigInt::zero(), den: BigInt::one() };
    };
    let bytes: Vec<u8> = words.iter().flat_map(|w| w.to_le_bytes()).collect();
    let mut num = BigInt::from(BigUint::from_bytes_le(&bytes));
    if sign == Sign::Neg {
        num = -num;
    }
    let shift = e as i64 - (std::mem::size_of_val(words) * 8) as i64;
    if shift >= 0 {
        Quotient { num: num << shift as usize, den: BigInt::one() }
    } else {
        Quotient { num, den: BigInt::one() << (-shift) as usize }
    }
}

struct Real {
    prec: usize,
    s: BigFloat,
}

impl Real {
    fn new(s: f64, bits: u32) -> Self {
        let prec = (bits + GUARD_BITS) as usize;
        Real { prec, s: BigFloat::from_f64(s, prec) }
    }

    /// `n^{-s}`.
    fn inv_pow(&self, n: u64, cc: &mut Consts) -> BigFloat {
        let rm = RoundingMode::ToEven;
        let ln = BigFloat::from_u64(n, self.prec).ln(self.prec, rm, cc);
        ln.mul(&self.s, self.prec, rm).neg().exp(self.prec, rm, cc)
    }
}

fn consts() -> Consts {
    Consts::new().expect("constant cache")
}

/// `∏ (1 - N^{-s})^{-1}` over the given norms.
fn euler_value(norms: &[u64], s: SArg, bits: u32) -> (Quotient, f64) {
    let count = norms.len() as f64;
    let w = bits + GUARD_BITS;
    match s {
        SArg::Int(k) if norms.last().is_none_or(|&n| n <= EXACT_EULER_MAX) => {
            let pows: Vec<BigInt> = norms.par_iter().map(|&n| num_traits::pow(BigInt::from(n), k as usize)).collect();
            let dens: Vec<BigInt> = pows.par_iter().map(|p| p - 1).collect();
            let (num, den) = rayon::join(|| product_tree(&pows), || product_tree(&dens));
            (Quotient { num, den }, 0.0)
        }
        SArg::Int(k) => {
            let one = BigInt::one() << w as usize;
            let factor = |n: u64| {
                let p = num_traits::pow(BigInt::from(n), k as usize);
                (&one * &p).div_floor(&(p - 1u32))
            };
            let chunks: Vec<BigInt> = norms
                .par_chunks(CHUNK)
                .map(|c| c.iter().fold(one.clone(), |acc, &n| (acc * factor(n)) >> w as usize))
                .collect();
            let num = chunks.into_iter().fold(one.clone(), |acc, c| (acc * c) >> w as usize);
            let err = 4.0 * (count + 1.0) * 2f64.powi(-(w as i32) + 2);
            (Quotient { num, den: one }, err)
        }
        SArg::Real(x) => {
            let real = Real::new(x, bits);
            let rm = RoundingMode::ToEven;
            let chunks: Vec<BigFloat> = norms
                .par_chunks(CHUNK)
                .map(|c| {
                    let mut cc = consts();
                    let one = BigFloat::from_u64(1, real.prec);
                    c.iter().fold(one.clone(), |acc, &n| {
                        let f = one.sub(&real.inv_pow(n, &mut cc), real.prec, rm);
                        acc.div(&f, real.prec, rm)
                    })
                })
                .collect();
            let v = chunks
                .into_iter()
                .fold(BigFloat::from_u64(1, real.prec), |acc, c| acc.mul(&c, real.prec, rm));
            let err = 8.0 * (count + 1.0) * 2f64.powi(-(w as i32) + 4);
            (bigfloat_quotient(&v), err)
        }
    }
}

/// `Σ c^{-s}` over the given counts.
fn inverse_power_sum(counts: &[u64], s: SArg, bits: u32) -> (Quotient, f64) {
    let w = bits + GUARD_BITS;
    let count = counts.len() as f64;
    match s {
        SArg::Int(k) => {
            let one = BigInt::one() << w as usize;
            let num: BigInt = counts
                .par_chunks(CHUNK)
                .map(|c| c.iter().map(|&n| &one / num_traits::pow(BigInt::from(n), k as usize)).sum::<BigInt>())
                .collect::<Vec<_>>()
                .into_iter()
                .sum();
            (Quotient { num, den: one }, count * 2f64.powi(-(w as i32)))
        }
        SArg::Real(x) => {
            let real = Real::new(x, bits);
            let rm = RoundingMode::ToEven;
            let chunks: Vec<BigFloat> = counts
                .par_chunks(CHUNK)
                .map(|c| {
                    let mut cc = consts();
                    c.iter()
                        .fold(BigFloat::from_u64(0, real.prec), |acc, &n| acc.add(&real.inv_pow(n, &mut cc), real.prec, rm))
                })
                .collect();
            let v = chunks
                .into_iter()
                .fold(BigFloat::from_u64(0, real.prec), |acc, c| acc.add(&c, real.prec, rm));
            (bigfloat_quotient(&v), 8.0 * (count + 1.0) * 2f64.powi(-(w as i32) + 4))
        }
    }
}

/// `Σ_{n > x} n^{-s} ≤ x^{1-s}/(s-1)`.
fn dirichlet_tail(s: f64, x: u64) -> f64 {
    if x == 0 {
        f64::INFINITY
    } else {
        (x as f64).powf(1.0 - s) / (s - 1.0)
    }
}

/// Bound on `ζ(s) - ∏_{p ≤ x}(1 - p^{-s})^{-1}`, scaled by `extra`.
fn euler_tail(s: f64, x: u64, extra: f64) -> f64 {
    let t = dirichlet_tail(s, x.max(1)) / (1.0 - 2f64.powf(-s));
    let zeta_bound = 1.0 + 1.0 / (s - 1.0);
    extra * zeta_bound * t.exp_m1()
}

fn finish(s: SArg, q: &Quotient, bits: u32, tail: f64, bound: u64) -> EvalResult {
    EvalResult {
        s: s.to_string(),
        value: render(q, decimal_digits(bits)),
        tail_bound: render_bound(tail),
        bound_used: bound,
    }
}

pub fn euler_product(spec: &ZetaSpec, s: SArg, bound: u64, bits: u32) -> Result<EvalResult> {
    let norms = norms(spec, bound)?;
    let (q, err) = euler_value(&norms, s, bits);
    let sf = s.as_f64();
    let tail = match spec {
        ZetaSpec::Primes | ZetaSpec::F1Modules { .. } => euler_tail(sf, bound, 1.0),
        ZetaSpec::MonoidCat => euler_tail(sf, bound, 1.0 / (1.0 - 2f64.powf(-sf))),
        ZetaSpec::Custom(all) => {
            let full: f64 = all.iter().map(|&n| 1.0 / (1.0 - (n as f64).powf(-sf))).product();
            let kept: f64 = all
                .iter()
                .filter(|&&n| n > bound)
                .map(|&n| 1.0 - (n as f64).powf(-sf))
                .product();
            if all.iter().all(|&n| n <= bound) {
                0.0
            } else {
                full * (1.0 - kept)
            }
        }
    };
    Ok(finish(s, &q, bits, tail + err, bound))
}

pub fn dirichlet_partial(s: SArg, x: u64, bits: u32) -> Result<EvalResult> {
    let counts: Vec<u64> = (1..=x).collect();
    let (q, err) = inverse_power_sum(&counts, s, bits);
    Ok(finish(s, &q, bits, dirichlet_tail(s.as_f64(), x) + err, x))
}

/// The counts `|X(F̄₁)^{Frob_n}|` for `n = 1..=x`.
pub fn fixed_point_terms(x: u64) -> Vec<u64> {
    (1..=x).into_par_iter().map(closure_fixed_count).collect()
}

pub fn fixed_point_zeta(s: SArg, x: u64, bits: u32) -> Result<EvalResult> {
    let (q, err) = inverse_power_sum(&fixed_point_terms(x), s, bits);
    Ok(finish(s, &q, bits, dirichlet_tail(s.as_f64(), x) + err, x))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeometricZeta {
    pub result: EvalResult,
    pub factors: Vec<u64>,
}

pub fn geometric_zeta_f1mod(s: SArg, prime_bound: u64, module_bound: usize, bits: u32) -> Result<GeometricZeta> {
    if prime_bound > F1MODULES_BOUND_MAX {
        return Err(Error::Resource {
            what: "f1-modules prime bound",
            value: prime_bound as usize,
            limit: F1MODULES_BOUND_MAX as usize,
        });
    }
    let factors = geometric_factors(prime_bound, module_bound)?;
    let (q, err) = euler_value(&factors, s, bits);
    let tail = euler_tail(s.as_f64(), prime_bound, 1.0);
    Ok(GeometricZeta { result: finish(s, &q, bits, tail + err, prime_bound), factors })
}

/// The product over `primes ∪ {2}` equals the product over primes times
/// `(1 - 2^{-s})^{-1}`, compared as exact rationals.
pub fn monoid_cat_identity(s: u32, bound: u64) -> Result<bool> {
    if bound > EXACT_EULER_MAX {
        return Err(Error::Resource { what: "exact Euler bound", value: bound as usize, limit: EXACT_EULER_MAX as usize });
    }
    let (cat, _) = euler_value(&norms(&ZetaSpec::MonoidCat, bound)?, SArg::Int(s), 0);
    let (primes, _) = euler_value(&norms(&ZetaSpec::Primes, bound)?, SArg::Int(s), 0);
    let two = BigInt::from(2u32).pow(s);
    let scaled = Quotient { num: primes.num * &two, den: primes.den * (two - 1u32) };
    Ok(cat.exact_eq(&scaled))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub s: String,
    pub passed: bool,
    pub detail: String,
}

/// The agreement checks: Euler product against Dirichlet sum, the extra
/// norm-2 factor, the geometric factor list, and the fixed-point terms.
pub fn verify_identities(bits: u32, euler_bound: u64, dirichlet_bound: u64, cat_bound: u64) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    for k in [2u32, 3, 4] {
        let s = SArg::Int(k);
        let e = euler_product(&ZetaSpec::Primes, s, euler_bound, bits)?;
        let d = dirichlet_partial(s, dirichlet_bound, bits)?;
        let diff = (e.value_f64() - (d.value_f64() + d.tail_f64())).abs();
        out.push(IdentityCheck {
            name: "euler-vs-dirichlet",
            s: k.to_string(),
            passed: diff < 1e-5,
            detail: format!("|{} - ({} + {})| = {diff:.3e}", e.value, d.value, d.tail_bound),
        });
    }
    for k in [2u32, 3] {
        let ok = monoid_cat_identity(k, cat_bound)?;
        out.push(IdentityCheck {
            name: "monoid-cat-factor",
            s: k.to_string(),
            passed: ok,
            detail: format!("exact rational comparison up to {cat_bound}"),
        });
    }
    let g = geometric_factors(100, 12)?;
    let p = norms(&ZetaSpec::Primes, 100)?;
    out.push(IdentityCheck {
        name: "geometric-factor-list",
        s: "any".into(),
        passed: g == p,
        detail: format!("{} factors from enumeration, {} primes", g.len(), p.len()),
    });
    let terms = fixed_point_terms(10_000);
    let first_bad = terms.iter().zip(1u64..).find(|(c, n)| **c != *n).map(|(_, n)| n);
    out.push(IdentityCheck {
        name: "fixed-point-terms",
        s: "any".into(),
        passed: first_bad.is_none(),
        detail: match first_bad {
            None => "counts equal n for n ≤ 10000".into(),
            Some(n) => format!("count differs at n = {n}"),
        },
    });
    Ok(out)
}
