//! Λ-stable principal ideals of `Z[x]`, extensions of `F₁` by roots of
//! unity, and point counts on the affine line.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::numtheory::{euler_phi, factorize};
use crate::algebra::{cyclotomic, Integers, Ring, UPoly};
use crate::error::{Error, Result};
use crate::lambda::{degree, lambda_values, small_elements};
use crate::monoid::{points, Monoid, MonoidRing};

/// `f = ± x^a · Π Φ_d^{e_d} · r` with `r` free of cyclotomic factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycFactorization {
    pub x_power: u32,
    pub cyclotomic: BTreeMap<u64, u32>,
    pub remainder: UPoly,
}

impl CycFactorization {
    pub fn reconstruct(&self) -> UPoly {
        let mut p = UPoly::monomial(BigInt::one(), self.x_power as usize);
        for (&d, &e) in &self.cyclotomic {
            p = &p * &cyclotomic(d).pow(e);
        }
        &p * &self.remainder
    }

    pub fn is_squarefree(&self) -> bool {
        self.x_power <= 1 && self.cyclotomic.values().all(|&e| e == 1) && self.remainder.is_squarefree()
    }

    /// Indices `d` with `Φ_d | f`.
    pub fn indices(&self) -> Vec<u64> {
        self.cyclotomic.keys().copied().collect()
    }
}

pub fn cyc_factor(f: &UPoly) -> Result<CycFactorization> {
    let Some(deg) = f.degree() else {
        return Err(Error::InvalidArgument("the zero polynomial has no factorization".into()));
    };
    let mut g = f.clone();
    let mut x_power = 0;
    while g.coeff(0).is_zero() {
        g = UPoly::new(g.coeffs()[1..].to_vec());
        x_power += 1;
    }
    let mut cyc = BTreeMap::new();
    // Φ_d has degree φ(d) ≥ sqrt(d/2), so d ≤ 2·deg² covers every candidate
    let d_max = 2 * (deg as u64).pow(2) + 2;
    for d in 1..=d_max {
        let gd = g.degree().unwrap_or(0) as u64;
        if gd == 0 {
            break;
        }
        if euler_phi(d) > gd {
            continue;
        }
        let phi = cyclotomic(d);
        while let Some(q) = g.exact_div(&phi) {
            g = q;
            *cyc.entry(d).or_insert(0) += 1;
        }
    }
    Ok(CycFactorization { x_power, cyclotomic: cyc, remainder: g })
}

/// Every divisor of a member is a member.
pub fn is_divisor_closed(s: &[u64]) -> bool {
    s.iter().all(|&d| {
        crate::algebra::numtheory::divisors(d)
            .into_iter()
            .all(|e| s.contains(&e))
    })
}

/// `f | f(x^k)`, by long division with machine integers where they suffice.
pub fn divides_power_substitution(f: &UPoly, k: usize) -> bool {
    let g = f.substitute_power(k);
    if let Some(r) = small_divides(f, &g) {
        return r;
    }
    f.divides(&g)
}

fn small_divides(f: &UPoly, g: &UPoly) -> Option<bool> {
    if !f.is_monic() {
        return None;
    }
    let fc: Vec<i128> = f.coeffs().iter().map(|c| c.to_i128()).collect::<Option<_>>()?;
    let mut r: Vec<i128> = g.coeffs().iter().map(|c| c.to_i128()).collect::<Option<_>>()?;
    let df = fc.len() - 1;
    if df == 0 {
        return Some(true);
    }
    let nz: Vec<(usize, i128)> = fc[..df].iter().copied().enumerate().filter(|&(_, c)| c != 0).collect();
    for top in (df..r.len()).rev() {
        let q = r[top];
        if q == 0 {
            continue;
        }
        r[top] = 0;
        for &(i, c) in &nz {
            let idx = top - df + i;
            r[idx] = r[idx].checked_sub(q.checked_mul(c)?)?;
        }
    }
    Some(r.iter().all(|&c| c == 0))
}

/// `f | f(x^k)` for every `2 ≤ k ≤ k_max`.
pub fn brute_force_stable(f: &UPoly, k_max: usize) -> bool {
    (2..=k_max).all(|k| divides_power_substitution(f, k))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum StabilityVerdict {
    /// Exact: `f` is squarefree, has only roots of unity and possibly 0 as
    /// roots, and its cyclotomic indices are divisor-closed.
    Stable { cyclotomic_indices: Vec<u64>, x_power: u32 },
    NotStable { witness_k: u64 },
    /// `f | f(x^k)` was verified for every `k ≤ k_max` only.
    StableBounded { k_max: u64 },
}

fn first_failure(f: &UPoly, limit: usize) -> Option<u64> {
    (2..=limit).find(|&k| !divides_power_substitution(f, k)).map(|k| k as u64)
}

pub fn is_lambda_stable(f: &UPoly, k_max: usize) -> Result<StabilityVerdict> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    let fac = cyc_factor(f)?;
    if !fac.is_squarefree() {
        return Ok(match first_failure(f, k_max) {
            Some(k) => StabilityVerdict::NotStable { witness_k: k },
            None => StabilityVerdict::StableBounded { k_max: k_max as u64 },
        });
    }
    let s = fac.indices();
    if fac.remainder.is_one() && is_divisor_closed(&s) {
        return Ok(StabilityVerdict::Stable { cyclotomic_indices: s, x_power: fac.x_power });
    }
    // a failing k exists below deg+2 (a root that is not a root of unity) or
    // below max(S) (a missing divisor)
    let deg = f.degree().unwrap_or(0);
    let limit = (deg + 2).max(s.iter().copied().max().unwrap_or(0) as usize).max(k_max);
    match first_failure(f, limit) {
        Some(k) => Ok(StabilityVerdict::NotStable { witness_k: k }),
        None => Err(Error::Consistency(format!(
            "{f} fails the divisor-closure criterion but no k ≤ {limit} violates f | f(x^k)"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Decomposable { f1: UPoly, f2: UPoly },
    NonDecomposable,
    SimpleExtension { p: u64 },
    /// `x² | f`: the quotient has nilpotents and is not an extension of `F₁`.
    NilpotentQuotient { x_power: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub polynomial: String,
    pub class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_power: Option<u32>,
    pub stable_proper_divisors: Vec<String>,
}

/// Items of a stable squarefree generator: `None` for the factor `x`,
/// `Some(d)` for `Φ_d`.
fn product(items: &[Option<u64>]) -> UPoly {
    items.iter().fold(UPoly::one(), |acc, it| match it {
        None => &acc * &UPoly::x(),
        Some(d) => &acc * &cyclotomic(*d),
    })
}

fn part_is_stable(items: &[Option<u64>]) -> bool {
    let s: Vec<u64> = items.iter().filter_map(|i| *i).collect();
    is_divisor_closed(&s)
}

fn subsets<T: Clone>(items: &[T]) -> impl Iterator<Item = (Vec<T>, Vec<T>)> + '_ {
    let n = items.len();
    (0u64..(1u64 << n)).map(move |mask| {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, it) in items.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.push(it.clone());
            } else {
                b.push(it.clone());
            }
        }
        (a, b)
    })
}

/// Stable divisors `g` of a stable squarefree `f` with `0 < deg g < deg f`.
pub fn stable_proper_divisors(f: &UPoly) -> Result<Vec<UPoly>> {
    let fac = cyc_factor(f)?;
    let items = stable_items(&fac);
    Ok(subsets(&items)
        .filter(|(a, b)| !a.is_empty() && !b.is_empty() && part_is_stable(a))
        .map(|(a, _)| product(&a))
        .collect())
}

fn stable_items(fac: &CycFactorization) -> Vec<Option<u64>> {
    let mut items: Vec<Option<u64>> = Vec::new();
    if fac.x_power == 1 {
        items.push(None);
    }
    items.extend(fac.cyclotomic.keys().map(|&d| Some(d)));
    items
}

pub fn classify_generator(f: &UPoly, k_max: usize) -> Result<Classification> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    let fac = cyc_factor(f)?;
    if fac.x_power >= 2 {
        return Ok(Classification::NilpotentQuotient { x_power: fac.x_power });
    }
    match is_lambda_stable(f, k_max)? {
        StabilityVerdict::Stable { .. } => {}
        other => return Err(Error::Unstable(format!("{f}: {other:?}"))),
    }
    let items = stable_items(&fac);
    if let Some((a, b)) = subsets(&items)
        .filter(|(a, b)| !a.is_empty() && !b.is_empty() && a.contains(&items[0]))
        .find(|(a, b)| part_is_stable(a) && part_is_stable(b))
    {
        return Ok(Classification::Decomposable { f1: product(&a), f2: product(&b) });
    }
    let deg = f.degree().unwrap_or(0);
    let x_minus_one = UPoly::x_pow_minus_one(1);
    let only_trivial_quotients = stable_proper_divisors(f)?.iter().all(|g| *g == x_minus_one);
    if fac.x_power == 0 && deg >= 2 && only_trivial_quotients {
        let p = deg as u64;
        if *f != UPoly::x_pow_minus_one(deg) || !crate::algebra::numtheory::is_prime(p) {
            return Err(Error::Consistency(format!("{f} passed the simplicity rule but is not x^p - 1")));
        }
        return Ok(Classification::SimpleExtension { p });
    }
    Ok(Classification::NonDecomposable)
}

pub fn classification_record(f: &UPoly, c: &Classification) -> Result<ClassificationRecord> {
    let divisors = match c {
        Classification::NilpotentQuotient { .. } => Vec::new(),
        _ => stable_proper_divisors(f)?.iter().map(|g| g.to_string()).collect(),
    };
    let mut r = ClassificationRecord {
        polynomial: f.to_string(),
        class: "",
        factors: None,
        p: None,
        x_power: None,
        stable_proper_divisors: divisors,
    };
    match c {
        Classification::Decomposable { f1, f2 } => {
            r.class = "Decomposable";
            r.factors = Some([f1.to_string(), f2.to_string()]);
        }
        Classification::NonDecomposable => r.class = "NonDecomposable",
        Classification::SimpleExtension { p } => {
            r.class = "SimpleExtension";
            r.p = Some(*p);
        }
        Classification::NilpotentQuotient { x_power } => {
            r.class = "NilpotentQuotient";
            r.x_power = Some(*x_power);
        }
    }
    Ok(r)
}

/// One step `Z[C_n][x]/(x^p - u^i) ≅ Z[C_{np}]`, `u` a generator of `C_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerStep {
    pub n: u64,
    pub p: u64,
    pub i: u64,
    /// The image of a generator of `C_{np}` is `x·u^c`.
    pub unit_exponent: u64,
    /// Multiplicative order of `x·u^c` in the quotient.
    pub order: u64,
    /// Its powers are exactly the `np` monomials `u^j x^l`.
    pub basis_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionTower {
    pub target: u64,
    pub steps: Vec<TowerStep>,
    pub verified: bool,
}

/// Elements of `Z[C_n][x]/(x^p - u^i)` on the basis `u^j x^l`.
struct Quotient {
    n: u64,
    p: u64,
    i: u64,
}

type QElem = BTreeMap<(u64, u64), BigInt>;

impl Quotient {
    fn mul(&self, a: &QElem, b: &QElem) -> QElem {
        let mut out = QElem::new();
        for (&(j1, l1), c1) in a {
            for (&(j2, l2), c2) in b {
                let (mut j, mut l) = (j1 + j2, l1 + l2);
                if l >= self.p {
                    l -= self.p;
                    j += self.i;
                }
                let e = out.entry((j % self.n, l)).or_insert_with(BigInt::zero);
                *e += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn monomial(j: u64, l: u64) -> QElem {
        QElem::from([((j, l), BigInt::one())])
    }
}

fn certify_step(n: u64, p: u64, i: u64) -> Result<TowerStep> {
    let c = (0..n)
        .find(|&c| (i + c * p).gcd(&n) == 1)
        .ok_or_else(|| Error::Consistency(format!("no unit exponent for step ({n}, {p}, {i})")))?;
    let q = Quotient { n, p, i };
    let one = Quotient::monomial(0, 0);
    let a = if p == 1 { Quotient::monomial(c % n, 0) } else { Quotient::monomial(c % n, 1) };
    let mut seen = std::collections::BTreeSet::new();
    let mut power = one.clone();
    let mut order = 0;
    let mut monomial_powers = true;
    for k in 1..=n * p {
        let single = power.len() == 1 && power.values().all(|v| v.is_one());
        monomial_powers &= single;
        if let Some((&key, _)) = power.iter().next() {
            seen.insert(key);
        }
        power = q.mul(&power, &a);
        if power == one && order == 0 {
            order = k;
        }
    }
    let basis_ok = monomial_powers && seen.len() as u64 == n * p && order == n * p;
    Ok(TowerStep { n, p, i, unit_exponent: c, order, basis_ok })
}

/// A chain of prime steps from `F₁` to `F₁[μ_N]`, each certified.
pub fn build_tower(target: u64) -> Result<ExtensionTower> {
    if target == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let mut primes = Vec::new();
    for (p, e) in factorize(target) {
        primes.extend(std::iter::repeat_n(p, e as usize));
    }
    let mut n = 1;
    let mut steps = Vec::new();
    for p in primes {
        let i = u64::from(n % p == 0);
        steps.push(certify_step(n, p, i)?);
        n *= p;
    }
    let verified = steps.iter().all(|s| s.basis_ok) && n == target;
    Ok(ExtensionTower { target, steps, verified })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomCount {
    pub monoid: String,
    pub count: u64,
    /// Images of `x` of degree at most one among the searched elements.
    pub images: Vec<String>,
    /// Number of points `N⁺ → M` counted independently.
    pub points: u64,
    pub agrees: bool,
}

/// `|Hom(Z[x], Z[M])| = |M₊|`, with the images of `x` found by a degree
/// search over elements with support at most 2 and coefficients in `{±1, ±2}`.
pub fn hom_count_affine_line(m: &Monoid) -> Result<HomCount> {
    let order = m
        .order()
        .ok_or_else(|| Error::NotEnumerable(format!("{m} is infinite")))?;
    let ring = MonoidRing::new(m.clone());
    let mut images = Vec::new();
    for x in small_elements(&ring, 2, 2)? {
        if degree(&ring, &x, 4)?.is_at_most(1) {
            images.push(ring.format(&x));
        }
    }
    let pts = points(&Monoid::FreeAdd, m, None)?.len() as u64;
    let count = order + 1;
    Ok(HomCount {
        monoid: m.to_string(),
        count,
        agrees: images.len() as u64 == count && pts == count,
        images,
        points: pts,
    })
}

/// The number of `ζ ∈ μ_∞ ∪ {0}` with `ζⁿ = ζ`, searched inside the
/// torsion level `2(n-1)`; defined as 1 at `n = 1`.
pub fn closure_fixed_count(n: u64) -> u64 {
    assert!(n >= 1);
    if n == 1 {
        return 1;
    }
    let level = 2 * (n - 1);
    // a/level is fixed by ζ ↦ ζⁿ iff (n-1)·a ≡ 0 mod level
    let roots = (0..level).filter(|&a| ((n - 1) as u128 * a as u128).is_multiple_of(level as u128)).count();
    roots as u64 + 1
}

/// The augmentation `Z[C_n] → Z` commutes with `λ¹..λ⁴` on the basis and
/// on 50 random elements.
pub fn augmentation_check(n: u64) -> Result<bool> {
    let ring = MonoidRing::new(Monoid::Cyclic(n));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ n);
    let mut sample: Vec<_> = ring.monoid.elements()?.into_iter().map(|m| ring.basis(m)).collect();
    sample.extend((0..50).map(|_| ring.random_elem(&mut rng, 3, 3)));
    for x in &sample {
        let lam = lambda_values(&ring, x, 4)?;
        let lam_z = lambda_values(&Integers, &x.augmentation(), 4)?;
        if lam.iter().zip(&lam_z).any(|(a, b)| a.augmentation() != *b) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> UPoly {
        s.parse().unwrap()
    }

    #[test]
    fn factorization_examples() {
        let f = cyc_factor(&p("x^5-1")).unwrap();
        assert_eq!(f.indices(), vec![1, 5]);
        assert!(f.remainder.is_one());
        let f = cyc_factor(&p("x^2-2")).unwrap();
        assert_eq!(f.remainder, p("x^2-2"));
        assert!(f.cyclotomic.is_empty());
        let f = cyc_factor(&p("x^3-x")).unwrap();
        assert_eq!((f.x_power, f.indices()), (1, vec![1, 2]));
        // Φ_7 has degree 6 < 7
        let f = cyc_factor(&cyclotomic(7)).unwrap();
        assert_eq!(f.indices(), vec![7]);
        for s in ["x^12-1", "x^2(x+1)^3(x^2+x+1)", "3x^4-x+7"] {
            let f = p(s);
            assert_eq!(cyc_factor(&f).unwrap().reconstruct(), f);
        }
    }

    #[test]
    fn stability_examples() {
        assert!(matches!(is_lambda_stable(&p("x^5-1"), 30).unwrap(), StabilityVerdict::Stable { .. }));
        assert_eq!(is_lambda_stable(&p("x-2"), 30).unwrap(), StabilityVerdict::NotStable { witness_k: 2 });
        assert_eq!(
            is_lambda_stable(&p("x^2+x+1"), 30).unwrap(),
            StabilityVerdict::NotStable { witness_k: 3 }
        );
        assert_eq!(
            is_lambda_stable(&p("x^2-1"), 30).unwrap(),
            StabilityVerdict::Stable { cyclotomic_indices: vec![1, 2], x_power: 0 }
        );
        assert_eq!(
            is_lambda_stable(&p("(x-1)^2"), 30).unwrap(),
            StabilityVerdict::StableBounded { k_max: 30 }
        );
        assert!(matches!(is_lambda_stable(&p("2x-1"), 30), Err(Error::NonMonic)));
    }

    #[test]
    fn stable_implies_divisibility() {
        for n in 1..=12usize {
            let f = UPoly::x_pow_minus_one(n);
            assert!(matches!(is_lambda_stable(&f, 30).unwrap(), StabilityVerdict::Stable { .. }));
            assert!(brute_force_stable(&f, 30));
        }
    }

    #[test]
    fn machine_and_big_division_agree() {
        for s in ["x^4-1", "x^2+x+1", "x^3-x", "x-2", "x^6+x^3+1"] {
            let f = p(s);
            for k in 2..8 {
                let g = f.substitute_power(k);
                assert_eq!(small_divides(&f, &g), Some(f.divides(&g)), "{s}, k = {k}");
            }
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_generator(&p("x^2-1"), 30).unwrap(), Classification::SimpleExtension { p: 2 });
        assert_eq!(classify_generator(&p("x^4-1"), 30).unwrap(), Classification::NonDecomposable);
        assert_eq!(classify_generator(&p("x^6-1"), 30).unwrap(), Classification::NonDecomposable);
        assert_eq!(classify_generator(&p("x^7-1"), 30).unwrap(), Classification::SimpleExtension { p: 7 });
        assert_eq!(
            classify_generator(&p("x^2-x"), 30).unwrap(),
            Classification::Decomposable { f1: p("x"), f2: p("x-1") }
        );
        assert_eq!(classify_generator(&p("x-1"), 30).unwrap(), Classification::NonDecomposable);
        assert_eq!(
            classify_generator(&p("x^3"), 30).unwrap(),
            Classification::NilpotentQuotient { x_power: 3 }
        );
        assert!(matches!(classify_generator(&p("x-2"), 30), Err(Error::Unstable(_))));
    }

    #[test]
    fn simple_iff_prime_cyclic() {
        // every stable generator of degree <= 12 from x and Φ_d, d <= 12
        let ds: Vec<u64> = (1..=30).filter(|&d| euler_phi(d) <= 12).collect();
        let mut items: Vec<Option<u64>> = vec![None];
        items.extend(ds.iter().map(|&d| Some(d)));
        for (a, _) in subsets(&items[..10]) {
            if a.is_empty() || !part_is_stable(&a) {
                continue;
            }
            let f = product(&a);
            if f.degree().unwrap() > 12 {
                continue;
            }
            let simple = matches!(classify_generator(&f, 30).unwrap(), Classification::SimpleExtension { .. });
            let deg = f.degree().unwrap();
            let want = f == UPoly::x_pow_minus_one(deg) && crate::algebra::numtheory::is_prime(deg as u64);
            assert_eq!(simple, want, "{f}");
        }
    }

    #[test]
    fn towers() {
        let t = build_tower(6).unwrap();
        let shape: Vec<(u64, u64, u64)> = t.steps.iter().map(|s| (s.n, s.p, s.i)).collect();
        assert_eq!(shape, vec![(1, 2, 0), (2, 3, 0)]);
        assert!(t.verified);
        assert!(build_tower(1).unwrap().steps.is_empty());
        let t = build_tower(4).unwrap();
        assert_eq!(t.steps[1].i % 2, 1);
        assert_eq!(t.steps[1].order, 4);
        for n in 1..=30 {
            assert!(build_tower(n).unwrap().verified, "N = {n}");
        }
    }

    #[test]
    fn hom_counts() {
        assert_eq!(hom_count_affine_line(&Monoid::Cyclic(5)).unwrap().count, 6);
        assert_eq!(hom_count_affine_line(&Monoid::trivial()).unwrap().count, 2);
        let h = hom_count_affine_line(&"C2xC3".parse().unwrap()).unwrap();
        assert_eq!(h.count, 7);
        assert!(h.agrees);
        assert!(hom_count_affine_line(&Monoid::FreeAdd).is_err());
    }

    #[test]
    fn fixed_counts_and_augmentation() {
        assert_eq!(closure_fixed_count(1), 1);
        for n in 2..=200 {
            assert_eq!(closure_fixed_count(n), n);
        }
        for n in [1, 2, 6] {
            assert!(augmentation_check(n).unwrap());
        }
    }
}
