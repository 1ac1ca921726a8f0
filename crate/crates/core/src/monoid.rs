//! Finitely generated commutative monoids, their monoid rings, points with
//! values in pointed monoids, and the power maps `m ↦ m^k`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::algebra::{PolyOver, Ring};
use crate::error::{Error, Result};

/// A presentation of a commutative monoid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Monoid {
    /// The natural numbers under addition.
    FreeAdd,
    /// The cyclic group of order `n`, written multiplicatively.
    Cyclic(u64),
    Product(Vec<Monoid>),
    /// All roots of unity, as `Q/Z`.
    RootsOfUnityAll,
}

/// Canonical coordinates of a monoid element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoidElem {
    Nat(u64),
    Residue(u64),
    /// `a/b` in lowest terms with `0 <= a < b`.
    Frac(u64, u64),
    Tuple(Vec<MonoidElem>),
}

/// An element of a monoid with an absorbing zero adjoined.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointedElem {
    Zero,
    Elem(MonoidElem),
}

const TORSION_NAMES: [&str; 6] = ["g", "h", "k", "l", "m", "n"];
const FREE_NAMES: [&str; 4] = ["x", "y", "z", "w"];

fn frac(a: u64, b: u64) -> MonoidElem {
    let a = a % b;
    let g = a.gcd(&b);
    MonoidElem::Frac(a / g, b / g)
}

impl Monoid {
    pub fn trivial() -> Monoid {
        Monoid::Cyclic(1)
    }

    /// The factors of a product, or the monoid itself.
    pub fn factors(&self) -> Vec<&Monoid> {
        match self {
            Monoid::Product(fs) => fs.iter().collect(),
            m => vec![m],
        }
    }

    pub fn identity(&self) -> MonoidElem {
        match self {
            Monoid::FreeAdd => MonoidElem::Nat(0),
            Monoid::Cyclic(_) => MonoidElem::Residue(0),
            Monoid::RootsOfUnityAll => MonoidElem::Frac(0, 1),
            Monoid::Product(fs) => MonoidElem::Tuple(fs.iter().map(|f| f.identity()).collect()),
        }
    }

    pub fn op(&self, a: &MonoidElem, b: &MonoidElem) -> MonoidElem {
        use MonoidElem::*;
        match (self, a, b) {
            (Monoid::FreeAdd, Nat(x), Nat(y)) => Nat(x + y),
            (Monoid::Cyclic(n), Residue(x), Residue(y)) => Residue((x + y) % n),
            (Monoid::RootsOfUnityAll, Frac(a, b), Frac(c, d)) => {
                let den = b.lcm(d);
                frac(a * (den / b) + c * (den / d), den)
            }
            (Monoid::Product(fs), Tuple(x), Tuple(y)) => Tuple(
                fs.iter()
                    .zip(x.iter().zip(y))
                    .map(|(f, (p, q))| f.op(p, q))
                    .collect(),
            ),
            _ => panic!("element shapes {a:?}, {b:?} do not match {self}"),
        }
    }

    /// `m^k`, which is `k·m` in additive notation.
    pub fn pow(&self, m: &MonoidElem, k: u64) -> MonoidElem {
        use MonoidElem::*;
        match (self, m) {
            (Monoid::FreeAdd, Nat(x)) => Nat(x * k),
            (Monoid::Cyclic(n), Residue(x)) => Residue(((*x as u128 * k as u128) % *n as u128) as u64),
            (Monoid::RootsOfUnityAll, Frac(a, b)) => {
                frac(((*a as u128 * k as u128) % *b as u128) as u64, *b)
            }
            (Monoid::Product(fs), Tuple(x)) => {
                Tuple(fs.iter().zip(x).map(|(f, p)| f.pow(p, k)).collect())
            }
            _ => panic!("element {m:?} does not belong to {self}"),
        }
    }

    pub fn contains(&self, m: &MonoidElem) -> bool {
        use MonoidElem::*;
        match (self, m) {
            (Monoid::FreeAdd, Nat(_)) => true,
            (Monoid::Cyclic(n), Residue(x)) => x < n,
            (Monoid::RootsOfUnityAll, Frac(a, b)) => *b > 0 && a < b && a.gcd(b) == 1,
            (Monoid::Product(fs), Tuple(x)) => {
                fs.len() == x.len() && fs.iter().zip(x).all(|(f, p)| f.contains(p))
            }
            _ => false,
        }
    }

    pub fn is_unit(&self, m: &MonoidElem) -> bool {
        match (self, m) {
            (Monoid::FreeAdd, MonoidElem::Nat(x)) => *x == 0,
            (Monoid::Product(fs), MonoidElem::Tuple(x)) => {
                fs.iter().zip(x).all(|(f, p)| f.is_unit(p))
            }
            _ => true,
        }
    }

    pub fn inverse(&self, m: &MonoidElem) -> Option<MonoidElem> {
        use MonoidElem::*;
        match (self, m) {
            (Monoid::FreeAdd, Nat(0)) => Some(Nat(0)),
            (Monoid::FreeAdd, _) => None,
            (Monoid::Cyclic(n), Residue(x)) => Some(Residue((n - x) % n)),
            (Monoid::RootsOfUnityAll, Frac(a, b)) => Some(frac(b - a, *b)),
            (Monoid::Product(fs), Tuple(x)) => {
                Some(Tuple(fs.iter().zip(x).map(|(f, p)| f.inverse(p)).collect::<Option<_>>()?))
            }
            _ => None,
        }
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            Monoid::FreeAdd | Monoid::RootsOfUnityAll => None,
            Monoid::Cyclic(n) => Some(*n),
            Monoid::Product(fs) => fs.iter().try_fold(1u64, |acc, f| Some(acc * f.order()?)),
        }
    }

    /// All elements of a finite monoid, in canonical order.
    pub fn elements(&self) -> Result<Vec<MonoidElem>> {
        self.elements_at_level(None)
    }

    /// Elements, with `Q/Z` replaced by its `level`-torsion `(1/level)Z/Z`.
    pub fn elements_at_level(&self, level: Option<u64>) -> Result<Vec<MonoidElem>> {
        match self {
            Monoid::FreeAdd => Err(Error::NotEnumerable("N+ is infinite".into())),
            Monoid::Cyclic(n) => Ok((0..*n).map(MonoidElem::Residue).collect()),
            Monoid::RootsOfUnityAll => match level {
                Some(l) if l >= 1 => {
                    let mut v: Vec<MonoidElem> = (0..l).map(|a| frac(a, l)).collect();
                    v.sort();
                    Ok(v)
                }
                _ => Err(Error::NotEnumerable(
                    "Q/Z needs an order bound to be enumerated".into(),
                )),
            },
            Monoid::Product(fs) => {
                let mut out = vec![Vec::new()];
                for f in fs {
                    let elems = f.elements_at_level(level)?;
                    out = out
                        .into_iter()
                        .flat_map(|prefix: Vec<MonoidElem>| {
                            elems.iter().map(move |e| {
                                let mut p = prefix.clone();
                                p.push(e.clone());
                                p
                            })
                        })
                        .collect();
                }
                Ok(out.into_iter().map(MonoidElem::Tuple).collect())
            }
        }
    }

    /// Generator names, one per factor.
    pub fn generator_names(&self) -> Vec<String> {
        let (mut t, mut f) = (0, 0);
        self.factors()
            .iter()
            .map(|m| match m {
                Monoid::FreeAdd => {
                    f += 1;
                    FREE_NAMES.get(f - 1).map(|s| s.to_string()).unwrap_or(format!("x{f}"))
                }
                _ => {
                    t += 1;
                    TORSION_NAMES.get(t - 1).map(|s| s.to_string()).unwrap_or(format!("g{t}"))
                }
            })
            .collect()
    }

    fn wrap(&self, coords: Vec<MonoidElem>) -> MonoidElem {
        match self {
            Monoid::Product(_) => MonoidElem::Tuple(coords),
            _ => coords.into_iter().next().expect("one coordinate"),
        }
    }

    fn coords<'a>(&self, m: &'a MonoidElem) -> Vec<&'a MonoidElem> {
        match (self, m) {
            (Monoid::Product(_), MonoidElem::Tuple(x)) => x.iter().collect(),
            _ => vec![m],
        }
    }

    /// The element with coordinate `c` in factor `i` and the identity elsewhere.
    pub fn embed(&self, i: usize, c: MonoidElem) -> MonoidElem {
        let mut coords: Vec<MonoidElem> = self.factors().iter().map(|f| f.identity()).collect();
        coords[i] = c;
        self.wrap(coords)
    }

    /// Resolve a generator name (or `u<d>`, a primitive `d`-th root of
    /// unity in the unique torsion factor).
    pub fn resolve(&self, name: &str) -> Result<MonoidElem> {
        let names = self.generator_names();
        let factors = self.factors();
        if let Some(i) = names.iter().position(|n| n == name) {
            return match factors[i] {
                Monoid::FreeAdd => Ok(self.embed(i, MonoidElem::Nat(1))),
                Monoid::Cyclic(n) => Ok(self.embed(i, MonoidElem::Residue(1 % n))),
                Monoid::RootsOfUnityAll => Err(Error::Parse(format!(
                    "Q/Z has no single generator; write u<d> for a primitive d-th root of unity instead of '{name}'"
                ))),
                Monoid::Product(_) => unreachable!("factors are flattened"),
            };
        }
        if let Some(d) = name.strip_prefix('u').and_then(|d| d.parse::<u64>().ok()) {
            let torsion: Vec<usize> = (0..factors.len())
                .filter(|&i| *factors[i] != Monoid::FreeAdd)
                .collect();
            let [i] = torsion[..] else {
                return Err(Error::Parse(format!(
                    "'{name}' needs exactly one cyclic or Q/Z factor"
                )));
            };
            if d == 0 {
                return Err(Error::Parse("u0 is not a root of unity".into()));
            }
            return match factors[i] {
                Monoid::Cyclic(n) if n % d == 0 => Ok(self.embed(i, MonoidElem::Residue(n / d % n))),
                Monoid::Cyclic(n) => Err(Error::Parse(format!("C{n} has no primitive {d}-th root of unity"))),
                _ => Ok(self.embed(i, frac(1, d))),
            };
        }
        Err(Error::Parse(format!(
            "unknown generator '{name}' for {self} (generators: {})",
            names.join(", ")
        )))
    }

    /// The element as a word in the generators, `1` for the identity.
    pub fn format_elem(&self, m: &MonoidElem) -> String {
        let names = self.generator_names();
        let parts: Vec<String> = self
            .coords(m)
            .into_iter()
            .enumerate()
            .filter_map(|(i, c)| {
                let (base, exp) = match c {
                    MonoidElem::Nat(0) | MonoidElem::Residue(0) | MonoidElem::Frac(0, _) => {
                        return None
                    }
                    MonoidElem::Nat(e) | MonoidElem::Residue(e) => (names[i].clone(), *e),
                    MonoidElem::Frac(a, b) => (format!("u{b}"), *a),
                    MonoidElem::Tuple(_) => unreachable!("factors are flattened"),
                };
                Some(if exp == 1 { base } else { format!("{base}^{exp}") })
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn format_pointed(&self, p: &PointedElem) -> String {
        match p {
            PointedElem::Zero => "0".into(),
            PointedElem::Elem(m) => self.format_elem(m),
        }
    }

    /// A random element; `Q/Z` coordinates are drawn from level 12.
    pub fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G) -> MonoidElem {
        match self {
            Monoid::FreeAdd => MonoidElem::Nat(rng.gen_range(0..4)),
            Monoid::Cyclic(n) => MonoidElem::Residue(rng.gen_range(0..*n)),
            Monoid::RootsOfUnityAll => frac(rng.gen_range(0..12), 12),
            Monoid::Product(fs) => MonoidElem::Tuple(fs.iter().map(|f| f.random_elem(rng)).collect()),
        }
    }
}

impl fmt::Display for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monoid::FreeAdd => write!(f, "N"),
            Monoid::Cyclic(n) => write!(f, "C{n}"),
            Monoid::RootsOfUnityAll => write!(f, "Q/Z"),
            Monoid::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|m| m.to_string()).collect();
                write!(f, "{}", parts.join("x"))
            }
        }
    }
}

impl FromStr for Monoid {
    type Err = Error;

    /// `N` (or `Nplus`), `C<n>`, `Q/Z`, `1` for the trivial monoid, and
    /// products joined by `x`, e.g. `C2xC3xN`.
    fn from_str(s: &str) -> Result<Monoid> {
        let factor = |p: &str| -> Result<Monoid> {
            match p.trim() {
                "N" | "Nplus" | "N+" => Ok(Monoid::FreeAdd),
                "Q/Z" | "QZ" => Ok(Monoid::RootsOfUnityAll),
                "1" | "trivial" => Ok(Monoid::trivial()),
                other => match other.strip_prefix('C').map(str::parse::<u64>) {
                    Some(Ok(n)) if n >= 1 => Ok(Monoid::Cyclic(n)),
                    _ => Err(Error::Parse(format!("unknown monoid '{other}'"))),
                },
            }
        };
        let parts: Vec<&str> = s.split('x').collect();
        if parts.len() == 1 {
            factor(parts[0])
        } else {
            Ok(Monoid::Product(parts.into_iter().map(factor).collect::<Result<_>>()?))
        }
    }
}

/// `M[X] = M × N⁺`; a product gains one more factor.
pub fn poly_monoid(m: &Monoid) -> Monoid {
    let mut fs: Vec<Monoid> = m.factors().into_iter().cloned().collect();
    fs.push(Monoid::FreeAdd);
    Monoid::Product(fs)
}

/// The base `M` of a polynomial monoid `M × N⁺`.
pub fn poly_monoid_base(pm: &Monoid) -> Result<Monoid> {
    match pm {
        Monoid::Product(fs) if fs.len() >= 2 && fs.last() == Some(&Monoid::FreeAdd) => {
            let rest = &fs[..fs.len() - 1];
            Ok(if rest.len() == 1 { rest[0].clone() } else { Monoid::Product(rest.to_vec()) })
        }
        other => Err(Error::InvalidArgument(format!("{other} is not of the form M x N"))),
    }
}

fn split_poly_elem(pm: &Monoid, e: &MonoidElem) -> Result<(MonoidElem, u64)> {
    let base = poly_monoid_base(pm)?;
    let MonoidElem::Tuple(c) = e else {
        return Err(Error::InvalidArgument("expected a tuple element".into()));
    };
    let MonoidElem::Nat(n) = c[c.len() - 1] else {
        return Err(Error::InvalidArgument("last coordinate must be in N".into()));
    };
    let a = base.wrap(c[..c.len() - 1].to_vec());
    Ok((a, n))
}

/// Evaluate `a·X^n ∈ M[X]` at `b ∈ M`, giving `a·b^n`.
pub fn poly_monoid_eval(pm: &Monoid, e: &MonoidElem, b: &MonoidElem) -> Result<MonoidElem> {
    let base = poly_monoid_base(pm)?;
    let (a, n) = split_poly_elem(pm, e)?;
    Ok(base.op(&a, &base.pow(b, n)))
}

/// `ψ^k(m) = m^k`.
pub fn frobenius(m: &Monoid, k: u64, x: &MonoidElem) -> MonoidElem {
    m.pow(x, k)
}

/// The number of points of `(Q/Z)₊` fixed by `ψ^k`: the fractions `a/b`
/// with `b | k-1`, plus the adjoined zero. At `k = 1` the count is defined
/// as 1.
pub fn fixed_point_count(k: u64) -> u64 {
    assert!(k >= 1);
    if k == 1 {
        return 1;
    }
    let qz = Monoid::RootsOfUnityAll;
    let fixed = qz
        .elements_at_level(Some(k - 1))
        .expect("bounded level")
        .into_iter()
        .filter(|x| frobenius(&qz, k, x) == *x)
        .count() as u64;
    fixed + 1
}

/// A pointed map `M₊ → B₊`, given by the images of the generators of `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub images: Vec<PointedElem>,
}

/// All maps of pointed monoids `M₊ → B₊` preserving zero and unit.
///
/// `level` bounds `Q/Z` in the codomain to its `level`-torsion.
pub fn points(m: &Monoid, b: &Monoid, level: Option<u64>) -> Result<Vec<Point>> {
    let targets = b.elements_at_level(level)?;
    let mut choices: Vec<Vec<PointedElem>> = Vec::new();
    for f in m.factors() {
        let c: Vec<PointedElem> = match f {
            Monoid::FreeAdd => std::iter::once(PointedElem::Zero)
                .chain(targets.iter().cloned().map(PointedElem::Elem))
                .collect(),
            // g^n = 1 forces the image to be a nonzero n-torsion element
            Monoid::Cyclic(n) => targets
                .iter()
                .filter(|t| b.pow(t, *n) == b.identity())
                .cloned()
                .map(PointedElem::Elem)
                .collect(),
            Monoid::RootsOfUnityAll => {
                return Err(Error::NotEnumerable("Q/Z is not finitely generated".into()))
            }
            Monoid::Product(_) => unreachable!("factors are flattened"),
        };
        choices.push(c);
    }
    let mut out = vec![Vec::new()];
    for c in &choices {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<PointedElem>| {
                c.iter().map(move |e| {
                    let mut p = prefix.clone();
                    p.push(e.clone());
                    p
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(|images| Point { images }).collect())
}

/// An integer combination of monoid elements; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, PartialOrd, Ord, Hash)]
pub struct MonoidRingElem(BTreeMap<MonoidElem, BigInt>);

impl MonoidRingElem {
    pub fn terms(&self) -> impl Iterator<Item = (&MonoidElem, &BigInt)> {
        self.0.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    pub fn coeff(&self, m: &MonoidElem) -> BigInt {
        self.0.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: MonoidElem, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.0.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn from_terms(items: impl IntoIterator<Item = (MonoidElem, BigInt)>) -> Self {
        let mut e = MonoidRingElem::default();
        for (m, c) in items {
            e.add_term(m, c);
        }
        e
    }

    /// Sum of the coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.0.values().sum()
    }
}

/// The monoid ring `Z[M]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidRing {
    pub monoid: Monoid,
}

impl MonoidRing {
    pub fn new(monoid: Monoid) -> Self {
        MonoidRing { monoid }
    }

    /// The basis element of a monoid element.
    pub fn basis(&self, m: MonoidElem) -> MonoidRingElem {
        MonoidRingElem::from_terms([(m, BigInt::one())])
    }

    pub fn parse(&self, s: &str) -> Result<MonoidRingElem> {
        crate::parse::parse_in(s, self, &|name| Ok(self.basis(self.monoid.resolve(name)?)))
    }

    /// A random element with at most `support` terms and coefficients in
    /// `[-coeff, coeff]`.
    pub fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G, support: usize, coeff: i64) -> MonoidRingElem {
        let n = rng.gen_range(0..=support);
        MonoidRingElem::from_terms((0..n).map(|_| {
            (self.monoid.random_elem(rng), BigInt::from(rng.gen_range(-coeff..=coeff)))
        }))
    }

    /// The ψ^k-image `Σ a_m m^k`.
    pub fn frobenius(&self, x: &MonoidRingElem, k: u64) -> MonoidRingElem {
        MonoidRingElem::from_terms(x.terms().map(|(m, c)| (self.monoid.pow(m, k), c.clone())))
    }
}

impl Ring for MonoidRing {
    type Elem = MonoidRingElem;

    fn zero(&self) -> MonoidRingElem {
        MonoidRingElem::default()
    }

    fn one(&self) -> MonoidRingElem {
        self.basis(self.monoid.identity())
    }

    fn add(&self, a: &MonoidRingElem, b: &MonoidRingElem) -> MonoidRingElem {
        let mut out = a.clone();
        for (m, c) in b.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn neg(&self, a: &MonoidRingElem) -> MonoidRingElem {
        MonoidRingElem(a.0.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }

    fn mul(&self, a: &MonoidRingElem, b: &MonoidRingElem) -> MonoidRingElem {
        let mut out = MonoidRingElem::default();
        for (m, c) in a.terms() {
            for (n, d) in b.terms() {
                out.add_term(self.monoid.op(m, n), c * d);
            }
        }
        out
    }

    fn is_zero(&self, a: &MonoidRingElem) -> bool {
        a.0.is_empty()
    }

    fn format(&self, a: &MonoidRingElem) -> String {
        if a.0.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in a.terms().enumerate() {
            let word = self.monoid.format_elem(m);
            let mag = c.abs();
            let body = if word == "1" {
                mag.to_string()
            } else if mag.is_one() {
                word
            } else {
                format!("{mag}*{word}")
            };
            match (i, c.is_negative()) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }

    fn scale(&self, a: &MonoidRingElem, n: &BigInt) -> MonoidRingElem {
        MonoidRingElem::from_terms(a.terms().map(|(m, c)| (m.clone(), c * n)))
    }

    fn unit_inverse(&self, a: &MonoidRingElem) -> Option<MonoidRingElem> {
        let mut it = a.terms();
        let (m, c) = it.next()?;
        if it.next().is_some() || !c.abs().is_one() {
            return None;
        }
        let inv = self.monoid.inverse(m)?;
        Some(MonoidRingElem::from_terms([(inv, c.clone())]))
    }

    fn div_int(&self, a: &MonoidRingElem, n: &BigInt) -> Option<MonoidRingElem> {
        if n.is_zero() {
            return None;
        }
        let mut out = MonoidRingElem::default();
        for (m, c) in a.terms() {
            let (q, r) = c.div_rem(n);
            if !r.is_zero() {
                return None;
            }
            out.add_term(m.clone(), q);
        }
        Some(out)
    }
}

/// The isomorphism `Z[M × N⁺] → Z[M][X]`, `Σ z_i (a_i, n_i) ↦ Σ z_i a_i X^{n_i}`.
pub fn monoid_ring_iso(
    ring: &MonoidRing,
    e: &MonoidRingElem,
) -> Result<(PolyOver<MonoidRing>, Vec<MonoidRingElem>)> {
    let base = MonoidRing::new(poly_monoid_base(&ring.monoid)?);
    let target = PolyOver::new(base.clone(), "X");
    let mut out = Vec::new();
    for (m, c) in e.terms() {
        let (a, n) = split_poly_elem(&ring.monoid, m)?;
        let mono = target.monomial(MonoidRingElem::from_terms([(a, c.clone())]), n as usize);
        out = target.add(&out, &mono);
    }
    Ok((target, out))
}

/// Inverse of [`monoid_ring_iso`].
pub fn monoid_ring_iso_inv(ring: &MonoidRing, p: &[MonoidRingElem]) -> Result<MonoidRingElem> {
    poly_monoid_base(&ring.monoid)?;
    let mut out = MonoidRingElem::default();
    for (n, coeff) in p.iter().enumerate() {
        for (a, c) in coeff.terms() {
            let mut coords: Vec<MonoidElem> = match a {
                MonoidElem::Tuple(x) if ring.monoid.factors().len() > 2 => x.clone(),
                other => vec![other.clone()],
            };
            coords.push(MonoidElem::Nat(n as u64));
            out.add_term(MonoidElem::Tuple(coords), c.clone());
        }
    }
    Ok(out)
}

/// JSON form of a list of points.
#[derive(Debug, Clone, Serialize)]
pub struct PointsRecord {
    pub domain: String,
    pub codomain: String,
    pub generators: Vec<String>,
    pub count: usize,
    pub maps: Vec<Vec<String>>,
}

pub fn points_record(m: &Monoid, b: &Monoid, pts: &[Point]) -> PointsRecord {
    PointsRecord {
        domain: m.to_string(),
        codomain: b.to_string(),
        generators: m.generator_names(),
        count: pts.len(),
        maps: pts
            .iter()
            .map(|p| p.images.iter().map(|e| b.format_pointed(e)).collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(n: u64) -> Monoid {
        Monoid::Cyclic(n)
    }

    #[test]
    fn parse_and_display() {
        for s in ["N", "C6", "Q/Z", "C2xC3", "C2xN"] {
            assert_eq!(s.parse::<Monoid>().unwrap().to_string(), s);
        }
        assert_eq!("1".parse::<Monoid>().unwrap(), Monoid::trivial());
        assert!("D4".parse::<Monoid>().is_err());
    }

    #[test]
    fn poly_monoid_shape() {
        assert_eq!(poly_monoid(&c(3)), Monoid::Product(vec![c(3), Monoid::FreeAdd]));
        assert_eq!(
            poly_monoid(&Monoid::FreeAdd),
            Monoid::Product(vec![Monoid::FreeAdd, Monoid::FreeAdd])
        );
        let pm = poly_monoid(&c(5));
        let e = MonoidElem::Tuple(vec![MonoidElem::Residue(2), MonoidElem::Nat(3)]);
        // (g^2) X^3 at g^4 gives g^{2+12} = g^4
        assert_eq!(
            poly_monoid_eval(&pm, &e, &MonoidElem::Residue(4)).unwrap(),
            MonoidElem::Residue(4)
        );
        assert_eq!(pm.format_elem(&e), "g^2*x^3");
    }

    #[test]
    fn frobenius_examples() {
        let qz = Monoid::RootsOfUnityAll;
        assert_eq!(frobenius(&qz, 3, &MonoidElem::Frac(1, 6)), MonoidElem::Frac(1, 2));
        assert_eq!(frobenius(&Monoid::FreeAdd, 2, &MonoidElem::Nat(3)), MonoidElem::Nat(6));
        assert_eq!(frobenius(&c(7), 1, &MonoidElem::Residue(3)), MonoidElem::Residue(3));
    }

    #[test]
    fn frobenius_composes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let monoids = [
            Monoid::FreeAdd,
            c(12),
            Monoid::RootsOfUnityAll,
            Monoid::Product(vec![c(4), Monoid::FreeAdd, Monoid::RootsOfUnityAll]),
        ];
        for m in &monoids {
            for _ in 0..10 {
                let x = m.random_elem(&mut rng);
                for k in 1..=12 {
                    for l in 1..=12 {
                        assert_eq!(frobenius(m, k, &frobenius(m, l, &x)), frobenius(m, k * l, &x));
                    }
                }
            }
        }
    }

    #[test]
    fn fixed_points() {
        assert_eq!(fixed_point_count(1), 1);
        for k in 2..=1000 {
            assert_eq!(fixed_point_count(k), k);
        }
    }

    #[test]
    fn point_counts() {
        assert_eq!(points(&Monoid::FreeAdd, &c(5), None).unwrap().len(), 6);
        assert_eq!(points(&Monoid::FreeAdd, &Monoid::trivial(), None).unwrap().len(), 2);
        // the generator of C2 must go to a unit of order dividing 2 and 3
        let pts = points(&c(2), &c(3), None).unwrap();
        assert_eq!(pts, vec![Point { images: vec![PointedElem::Elem(MonoidElem::Residue(0))] }]);
        for n in 1..=30 {
            assert_eq!(points(&Monoid::FreeAdd, &c(n), None).unwrap().len() as u64, n + 1);
        }
        assert_eq!(points(&c(4), &c(6), None).unwrap().len(), 2);
        assert_eq!(
            points(&Monoid::FreeAdd, &Monoid::RootsOfUnityAll, Some(6)).unwrap().len(),
            7
        );
        assert!(matches!(
            points(&Monoid::FreeAdd, &Monoid::RootsOfUnityAll, None),
            Err(Error::NotEnumerable(_))
        ));
        assert!(points(&Monoid::FreeAdd, &Monoid::FreeAdd, None).is_err());
    }

    #[test]
    fn element_parsing() {
        let r = MonoidRing::new(c(6));
        let g = r.parse("g").unwrap();
        assert_eq!(r.parse("u6").unwrap(), g);
        assert_eq!(r.parse("u3").unwrap(), r.parse("g^2").unwrap());
        assert_eq!(r.format(&r.parse("2g^2 - 3 + g").unwrap()), "-3 + g + 2*g^2");
        let r2 = MonoidRing::new("C2xC3".parse().unwrap());
        assert_eq!(r2.format(&r2.parse("g*h").unwrap()), "g*h");
        assert!(r2.parse("u2").is_err());
        let qz = MonoidRing::new(Monoid::RootsOfUnityAll);
        assert_eq!(qz.format(&qz.parse("u6^3").unwrap()), "u2");
        assert!(r.parse("q").is_err());
    }

    #[test]
    fn units() {
        let r = MonoidRing::new(c(5));
        let g2 = r.parse("-g^2").unwrap();
        let inv = r.unit_inverse(&g2).unwrap();
        assert_eq!(r.mul(&g2, &inv), r.one());
        assert!(r.unit_inverse(&r.parse("1+g").unwrap()).is_none());
        let t = MonoidRing::new(Monoid::trivial());
        assert_eq!(t.unit_inverse(&t.one()), Some(t.one()));
    }

    #[test]
    fn iso_examples() {
        let pm = poly_monoid(&c(2));
        let ring = MonoidRing::new(pm);
        let e = ring.parse("2*g*x + 3").unwrap();
        let (target, p) = monoid_ring_iso(&ring, &e).unwrap();
        assert_eq!(target.format(&p), "2*g*X + 3");
        assert_eq!(monoid_ring_iso_inv(&ring, &p).unwrap(), e);
        let (_, one) = monoid_ring_iso(&ring, &ring.one()).unwrap();
        assert_eq!(one, target.one());
        assert!(monoid_ring_iso(&MonoidRing::new(c(3)), &MonoidRing::new(c(3)).one()).is_err());
    }

    #[test]
    fn iso_is_a_ring_map() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for base in [c(2), Monoid::Product(vec![c(2), c(3)])] {
            let ring = MonoidRing::new(poly_monoid(&base));
            for _ in 0..200 {
                let a = ring.random_elem(&mut rng, 4, 3);
                let b = ring.random_elem(&mut rng, 4, 3);
                let (t, ia) = monoid_ring_iso(&ring, &a).unwrap();
                let (_, ib) = monoid_ring_iso(&ring, &b).unwrap();
                assert_eq!(monoid_ring_iso(&ring, &ring.mul(&a, &b)).unwrap().1, t.mul(&ia, &ib));
                assert_eq!(monoid_ring_iso(&ring, &ring.add(&a, &b)).unwrap().1, t.add(&ia, &ib));
                assert_eq!(monoid_ring_iso_inv(&ring, &ia).unwrap(), a);
            }
        }
    }
}
