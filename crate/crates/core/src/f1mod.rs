//! Finite abelian groups with a multiplicative family of endomorphisms
//! `λ_{M,n}`, the square-zero extensions `Z ▷ M` they induce, and the
//! classification of simple objects on cyclic groups of prime order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::numtheory::{factorize, primes_up_to};
use crate::algebra::{Integers, Ring, TruncSeries};
use crate::error::{Error, Result};
use crate::lambda::LambdaRing;
use crate::witt::{artin_hasse, artin_hasse_inv, witt_add_series, WittVector};

/// `C_{o_1} × … × C_{o_r}`, elements as residue vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FiniteAbelian {
    pub orders: Vec<u64>,
}

pub type GroupElem = Vec<u64>;

impl FiniteAbelian {
    pub fn cyclic(n: u64) -> Self {
        FiniteAbelian { orders: vec![n] }
    }

    pub fn size(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn zero(&self) -> GroupElem {
        vec![0; self.orders.len()]
    }

    pub fn add(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        a.iter().zip(b).zip(&self.orders).map(|((x, y), o)| (x + y) % o).collect()
    }

    pub fn neg(&self, a: &GroupElem) -> GroupElem {
        a.iter().zip(&self.orders).map(|(x, o)| (o - x) % o).collect()
    }

    pub fn scale(&self, a: &GroupElem, n: &BigInt) -> GroupElem {
        a.iter()
            .zip(&self.orders)
            .map(|(x, o)| {
                let r = (BigInt::from(*x) * n).mod_floor(&BigInt::from(*o));
                r.to_u64().expect("reduced residue")
            })
            .collect()
    }

    pub fn is_zero(&self, a: &GroupElem) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn elements(&self) -> Vec<GroupElem> {
        let mut out = vec![Vec::new()];
        for &o in &self.orders {
            out = out
                .into_iter()
                .flat_map(|p: Vec<u64>| {
                    (0..o).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        out
    }

    fn index(&self, a: &GroupElem) -> usize {
        a.iter().zip(&self.orders).fold(0, |acc, (x, o)| acc * *o as usize + *x as usize)
    }

    pub fn format(&self, a: &GroupElem) -> String {
        if a.len() == 1 {
            a[0].to_string()
        } else {
            format!("({})", a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
        }
    }
}

/// An endomorphism as an integer matrix acting on residue vectors.
pub type Endo = Vec<Vec<i64>>;

/// A finite abelian group with `λ_{M,1}, …, λ_{M,N}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F1Module {
    pub carrier: FiniteAbelian,
    /// `family[n-1]` is `λ_{M,n}`.
    pub family: Vec<Endo>,
}

impl F1Module {
    /// A cyclic carrier `C_n` with scalar operations; `values[k]` is the
    /// scalar of `λ_{k+1}`.
    pub fn cyclic_scalars(n: u64, values: &[i64]) -> Self {
        F1Module {
            carrier: FiniteAbelian::cyclic(n),
            family: values.iter().map(|&v| vec![vec![v]]).collect(),
        }
    }

    /// `C_p` with `λ_q = a_q` at the primes `q ≤ bound` (in increasing
    /// order, missing values 0), extended by `λ_n = Π λ_q^{e_q}`.
    pub fn from_prime_values(p: u64, bound: usize, prime_values: &[u64]) -> Self {
        let primes = primes_up_to(bound as u64);
        let value_at = |q: u64| -> u64 {
            let i = primes.iter().position(|&r| r == q).expect("prime in range");
            prime_values.get(i).copied().unwrap_or(0) % p
        };
        let values: Vec<i64> = (1..=bound as u64)
            .map(|n| {
                factorize(n).into_iter().fold(1 % p, |acc, (q, e)| {
                    (0..e).fold(acc, |a, _| a * value_at(q) % p)
                }) as i64
            })
            .collect();
        Self::cyclic_scalars(p, &values)
    }

    pub fn bound(&self) -> usize {
        self.family.len()
    }

    pub fn apply(&self, n: usize, m: &GroupElem) -> GroupElem {
        apply_endo(&self.carrier, &self.family[n - 1], m)
    }
}

fn apply_endo(g: &FiniteAbelian, a: &Endo, m: &GroupElem) -> GroupElem {
    g.orders
        .iter()
        .enumerate()
        .map(|(i, &o)| {
            let s: i128 = a[i].iter().zip(m).map(|(&c, &x)| c as i128 * x as i128).sum();
            s.rem_euclid(o as i128) as u64
        })
        .collect()
}

fn endo_well_defined(g: &FiniteAbelian, a: &Endo) -> bool {
    let r = g.orders.len();
    a.len() == r
        && a.iter().all(|row| row.len() == r)
        && (0..r).all(|i| (0..r).all(|j| (g.orders[j] as i128 * a[i][j] as i128).rem_euclid(g.orders[i] as i128) == 0))
}

fn endos_equal(g: &FiniteAbelian, a: &Endo, b: &Endo) -> bool {
    let r = g.orders.len();
    (0..r).all(|j| {
        let mut e = vec![0; r];
        e[j] = 1 % g.orders[j];
        apply_endo(g, a, &e) == apply_endo(g, b, &e)
    })
}

fn compose(g: &FiniteAbelian, a: &Endo, b: &Endo) -> Endo {
    let r = g.orders.len();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let s: i128 = (0..r).map(|k| a[i][k] as i128 * b[k][j] as i128).sum();
                    s.rem_euclid(g.orders[i] as i128) as i64
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleValidation {
    pub valid: bool,
    /// `(n, m)` with `λ_n ∘ λ_m ≠ λ_{nm}`, or `(n, 0)` when `λ_n` is not a
    /// well-defined homomorphism, or `(1, 1)` when `λ_1 ≠ id`.
    pub witness: Option<(usize, usize)>,
}

pub fn validate_module(p: &F1Module) -> ModuleValidation {
    let g = &p.carrier;
    let fail = |w| ModuleValidation { valid: false, witness: Some(w) };
    for (i, a) in p.family.iter().enumerate() {
        if !endo_well_defined(g, a) {
            return fail((i + 1, 0));
        }
    }
    if let Some(l1) = p.family.first() {
        let r = g.orders.len();
        let id: Endo = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
        if !endos_equal(g, l1, &id) {
            return fail((1, 1));
        }
    }
    let n_max = p.bound();
    for n in 2..=n_max {
        for m in 2..=n_max / n {
            let lhs = compose(g, &p.family[n - 1], &p.family[m - 1]);
            if !endos_equal(g, &lhs, &p.family[n * m - 1]) {
                return fail((n, m));
            }
        }
    }
    ModuleValidation { valid: true, witness: None }
}

/// `#{m : λ_n(m) = 0 for 1 < n ≤ N}`, the number of maps from the affine
/// line.
pub fn hom_count(p: &F1Module) -> u64 {
    p.carrier
        .elements()
        .into_iter()
        .filter(|m| (2..=p.bound()).all(|n| p.carrier.is_zero(&p.apply(n, m))))
        .count() as u64
}

/// The same count, reading `λⁿ((0, m))` in `Z ▷ M`.
pub fn hom_count_via_lambda(p: &F1Module) -> Result<u64> {
    let ring = SquareZeroRing::new(p.clone());
    let mut count = 0;
    for m in p.carrier.elements() {
        let s = ring.lambda_t(&SquareZeroElem { z: BigInt::zero(), m }, p.bound())?;
        if s.coeffs()[2..].iter().all(|c| ring.is_zero(c)) {
            count += 1;
        }
    }
    Ok(count)
}

/// No nonzero proper subgroup is stable under the family.
pub fn is_simple(p: &F1Module) -> bool {
    let g = &p.carrier;
    let size = g.size() as usize;
    if size <= 1 {
        return false;
    }
    if crate::algebra::numtheory::is_prime(size as u64) {
        return true;
    }
    g.elements().into_iter().filter(|m| !g.is_zero(m)).all(|m| {
        let mut member = vec![false; size];
        let mut elems = vec![g.zero()];
        member[g.index(&g.zero())] = true;
        let mut pending = vec![m];
        while let Some(x) = pending.pop() {
            if member[g.index(&x)] {
                continue;
            }
            // add x to the subgroup: close under addition
            let mut frontier = vec![x.clone()];
            while let Some(y) = frontier.pop() {
                if member[g.index(&y)] {
                    continue;
                }
                let snapshot = elems.clone();
                for e in snapshot {
                    let s = g.add(&e, &y);
                    if !member[g.index(&s)] {
                        frontier.push(s);
                    }
                }
                member[g.index(&y)] = true;
                elems.push(y.clone());
                frontier.push(g.add(&y, &y));
                for n in 1..=p.bound() {
                    pending.push(p.apply(n, &y));
                }
            }
        }
        elems.len() == size
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModuleVerdict {
    pub simple: bool,
    pub finite: bool,
    pub geometrically_finite: bool,
    pub non_degenerate: bool,
    pub n_count: u64,
}

pub fn verdict(p: &F1Module) -> ModuleVerdict {
    let n_count = hom_count(p);
    let simple = is_simple(p);
    ModuleVerdict {
        simple,
        finite: true,
        geometrically_finite: true,
        non_degenerate: simple && n_count > 1,
        n_count,
    }
}

/// An element `(z, m)` of `Z ▷ M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareZeroElem {
    pub z: BigInt,
    pub m: GroupElem,
}

/// `Z ▷ M` with `(z, m)(z', m') = (zz', zm' + z'm)` and the λ-structure
/// transported from `W(Z) ▷ W(M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareZeroRing {
    pub module: F1Module,
}

impl SquareZeroRing {
    pub fn new(module: F1Module) -> Self {
        SquareZeroRing { module }
    }

    pub fn elem(&self, z: i64, m: GroupElem) -> SquareZeroElem {
        SquareZeroElem { z: BigInt::from(z), m }
    }

    pub fn random_elem<G: rand::Rng + ?Sized>(&self, rng: &mut G, z_range: i64) -> SquareZeroElem {
        SquareZeroElem {
            z: BigInt::from(rng.gen_range(-z_range..=z_range)),
            m: self.module.carrier.orders.iter().map(|&o| rng.gen_range(0..o)).collect(),
        }
    }
}

impl Ring for SquareZeroRing {
    type Elem = SquareZeroElem;

    fn zero(&self) -> SquareZeroElem {
        SquareZeroElem { z: BigInt::zero(), m: self.module.carrier.zero() }
    }
    fn one(&self) -> SquareZeroElem {
        SquareZeroElem { z: BigInt::one(), m: self.module.carrier.zero() }
    }
    fn add(&self, a: &SquareZeroElem, b: &SquareZeroElem) -> SquareZeroElem {
        SquareZeroElem { z: &a.z + &b.z, m: self.module.carrier.add(&a.m, &b.m) }
    }
    fn neg(&self, a: &SquareZeroElem) -> SquareZeroElem {
        SquareZeroElem { z: -&a.z, m: self.module.carrier.neg(&a.m) }
    }
    fn mul(&self, a: &SquareZeroElem, b: &SquareZeroElem) -> SquareZeroElem {
        let g = &self.module.carrier;
        SquareZeroElem { z: &a.z * &b.z, m: g.add(&g.scale(&b.m, &a.z), &g.scale(&a.m, &b.z)) }
    }
    fn is_zero(&self, a: &SquareZeroElem) -> bool {
        a.z.is_zero() && self.module.carrier.is_zero(&a.m)
    }
    fn format(&self, a: &SquareZeroElem) -> String {
        format!("({}, {})", a.z, self.module.carrier.format(&a.m))
    }
    fn scale(&self, a: &SquareZeroElem, n: &BigInt) -> SquareZeroElem {
        SquareZeroElem { z: &a.z * n, m: self.module.carrier.scale(&a.m, n) }
    }
    fn unit_inverse(&self, a: &SquareZeroElem) -> Option<SquareZeroElem> {
        // (z, m)^{-1} = (z, -m) for z = ±1
        a.z.abs().is_one().then(|| SquareZeroElem { z: a.z.clone(), m: self.module.carrier.neg(&a.m) })
    }
}

impl LambdaRing for SquareZeroRing {
    /// `W(Z) ▷ W(M) → W(Z ▷ M)` applied to `(λ_Z(z), (λ_{M,k} m)_k)`,
    /// followed by the series picture. The order is capped at the bound of
    /// the module's family.
    fn lambda_t(&self, x: &SquareZeroElem, order: usize) -> Result<TruncSeries<SquareZeroElem>> {
        let n = order.min(self.module.bound());
        let g = &self.module.carrier;
        let wz = artin_hasse(&Integers, &Integers.lambda_t(&x.z, n)?)?;
        let z_slot = WittVector::new(
            wz.comps.into_iter().map(|z| SquareZeroElem { z, m: g.zero() }).collect(),
        );
        let m_slot = WittVector::new(
            (1..=n).map(|k| SquareZeroElem { z: BigInt::zero(), m: self.module.apply(k, &x.m) }).collect(),
        );
        let combined = witt_add_series(self, &z_slot, &m_slot)?;
        Ok(artin_hasse_inv(self, &combined))
    }

    fn lambda_bound(&self) -> Option<usize> {
        Some(self.module.bound())
    }
}

/// `λⁿ((z, m))` computed to truncation `order`.
pub fn square_zero_lambda(p: &F1Module, e: &SquareZeroElem, n: usize, order: usize) -> Result<SquareZeroElem> {
    if order > p.bound() || n > order {
        return Err(Error::Truncation { have: order.min(p.bound()), need: n.max(order) });
    }
    let ring = SquareZeroRing::new(p.clone());
    Ok(ring.lambda_t(e, order)?.into_coeffs().swap_remove(n))
}

/// A set of scalar families on `C_p` sharing fixed values at the first
/// primes and free values at the rest; every member has the same verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyClass {
    /// `(q, a_q)` for the fixed primes.
    pub fixed: Vec<(u64, u64)>,
    /// Primes whose values range over all of `Z/p`.
    pub free: Vec<u64>,
    pub size: u128,
    pub verdict: ModuleVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimpleEnumeration {
    pub p: u64,
    pub bound: usize,
    pub primes: Vec<u64>,
    pub total: u128,
    pub non_degenerate: u128,
    pub classes: Vec<FamilyClass>,
}

impl SimpleEnumeration {
    /// The non-degenerate family: all prime values zero.
    pub fn non_degenerate_class(&self) -> Option<&FamilyClass> {
        self.classes.iter().find(|c| c.verdict.non_degenerate)
    }

    /// Every family as its list of prime values.
    pub fn expand(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        for c in &self.classes {
            let fixed: Vec<u64> = c.fixed.iter().map(|&(_, a)| a).collect();
            let mut tails: Vec<Vec<u64>> = vec![Vec::new()];
            for _ in &c.free {
                tails = tails
                    .into_iter()
                    .flat_map(|t| {
                        (0..self.p).map(move |a| {
                            let mut t = t.clone();
                            t.push(a);
                            t
                        })
                    })
                    .collect();
            }
            for t in tails {
                let mut v = fixed.clone();
                v.extend(t);
                out.push(v);
            }
        }
        out
    }
}

/// All multiplicative scalar families on `C_p` up to `bound`, grouped into
/// classes: once a prime value is nonzero the common kernel is trivial and
/// every extension has `n(P) = 1`.
pub fn enumerate_simple(p: u64, bound: usize) -> Result<SimpleEnumeration> {
    if !crate::algebra::numtheory::is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let primes = primes_up_to(bound as u64);
    let mut classes = Vec::new();
    // `kernel` is the order of the common kernel of the fixed values
    fn dfs(
        p: u64,
        bound: usize,
        primes: &[u64],
        prefix: &mut Vec<u64>,
        kernel: u64,
        out: &mut Vec<FamilyClass>,
    ) {
        let i = prefix.len();
        if kernel == 1 || i == primes.len() {
            let module = F1Module::from_prime_values(p, bound, prefix);
            out.push(FamilyClass {
                fixed: primes.iter().copied().zip(prefix.iter().copied()).collect(),
                free: primes[i..].to_vec(),
                size: (p as u128).pow((primes.len() - i) as u32),
                verdict: verdict(&module),
            });
            return;
        }
        for a in 0..p {
            prefix.push(a);
            dfs(p, bound, primes, prefix, kernel.gcd(&a), out);
            prefix.pop();
        }
    }
    dfs(p, bound, &primes, &mut Vec::new(), p, &mut classes);
    let total = classes.iter().map(|c| c.size).sum();
    let non_degenerate: u128 = classes.iter().filter(|c| c.verdict.non_degenerate).map(|c| c.size).sum();
    let e = SimpleEnumeration { p, bound, primes, total, non_degenerate, classes };
    let nd = e.non_degenerate_class();
    if non_degenerate != 1 || nd.map(|c| c.verdict.n_count) != Some(p) {
        return Err(Error::Consistency(format!(
            "expected exactly one non-degenerate family with n(P) = {p} on C{p}, found {non_degenerate}"
        )));
    }
    Ok(e)
}
