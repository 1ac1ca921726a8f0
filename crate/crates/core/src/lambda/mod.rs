//! λ-rings: the binomial structure on `Z`, the monoidal structure on `Z[M]`,
//! polynomial rings over a λ-ring, and the operations built from `λ_t`.

mod axioms;

pub use axioms::{check_axioms, AxiomOutcome, AxiomReport, ZeroedLambda};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::numtheory::binomial;
use crate::algebra::{Integers, PolyOver, Ring, TruncSeries};
use crate::error::{Error, Result};
use crate::monoid::{MonoidRing, MonoidRingElem};

/// A ring with a family of operations `λⁿ`, presented through the series
/// `λ_t(x) = Σ λⁱ(x) tⁱ`.
pub trait LambdaRing: Ring {
    /// `λ_t(x)` modulo `t^{order+1}`. Rings whose λ-operations are only
    /// known up to a bound may return a series of lower order.
    fn lambda_t(&self, x: &Self::Elem, order: usize) -> Result<TruncSeries<Self::Elem>>;

    /// The largest `n` for which `λⁿ` is available, if there is one.
    fn lambda_bound(&self) -> Option<usize> {
        None
    }

    /// An exact degree known without search, when the element admits one.
    fn degree_certificate(&self, _x: &Self::Elem) -> Option<usize> {
        None
    }
}

impl LambdaRing for Integers {
    fn lambda_t(&self, m: &BigInt, order: usize) -> Result<TruncSeries<BigInt>> {
        let coeffs = (0..=order).map(|i| binomial(m, i)).collect();
        Ok(TruncSeries::new(self, coeffs, order))
    }

    fn degree_certificate(&self, m: &BigInt) -> Option<usize> {
        if m.is_negative() {
            None
        } else {
            m.try_into().ok()
        }
    }
}

impl LambdaRing for MonoidRing {
    fn lambda_t(&self, x: &MonoidRingElem, order: usize) -> Result<TruncSeries<MonoidRingElem>> {
        let mut acc = TruncSeries::one(self, order);
        for (m, a) in x.terms() {
            let factor = TruncSeries::binomial(self, &self.basis(m.clone()), 1, order);
            let k: u64 = a
                .abs()
                .try_into()
                .map_err(|_| Error::InvalidArgument("coefficient too large".into()))?;
            let mut p = factor.pow(k, self);
            if a.is_negative() {
                p = p.inv(self)?;
            }
            acc = acc.mul(&p, self);
        }
        Ok(acc)
    }

    fn degree_certificate(&self, x: &MonoidRingElem) -> Option<usize> {
        let mut total = 0usize;
        for (_, a) in x.terms() {
            if a.is_negative() {
                return None;
            }
            total = total.checked_add(a.try_into().ok()?)?;
        }
        Some(total)
    }
}

/// `R[x] = R ⊗ Z[N⁺]`: on `r·x^i` the operations are `λⁿ(r)·x^{in}`, and
/// `λ_t` is multiplicative over the sum of monomials.
impl<R: LambdaRing> LambdaRing for PolyOver<R> {
    fn lambda_t(&self, x: &Self::Elem, order: usize) -> Result<TruncSeries<Self::Elem>> {
        let mut acc = TruncSeries::one(self, order);
        for (i, r) in x.iter().enumerate() {
            if self.base.is_zero(r) {
                continue;
            }
            let inner = self.base.lambda_t(r, order)?;
            let coeffs = inner
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| self.monomial(c.clone(), i * k))
                .collect();
            acc = acc.mul(&TruncSeries::new(self, coeffs, inner.order()), self);
        }
        Ok(acc)
    }

    fn lambda_bound(&self) -> Option<usize> {
        self.base.lambda_bound()
    }

    fn degree_certificate(&self, x: &Self::Elem) -> Option<usize> {
        x.iter()
            .filter(|c| !self.base.is_zero(c))
            .try_fold(0usize, |acc, c| acc.checked_add(self.base.degree_certificate(c)?))
    }
}

/// `λ_t(x)` truncated at `order`.
pub fn lambda_t<R: LambdaRing>(ring: &R, x: &R::Elem, order: usize) -> Result<TruncSeries<R::Elem>> {
    ring.lambda_t(x, order)
}

/// `λ⁰(x), …, λⁿ(x)`.
pub fn lambda_values<R: LambdaRing>(ring: &R, x: &R::Elem, n: usize) -> Result<Vec<R::Elem>> {
    let s = ring.lambda_t(x, n)?;
    if s.order() < n {
        return Err(Error::Truncation { have: s.order(), need: n });
    }
    Ok(s.into_coeffs())
}

/// `λⁿ(x)`.
pub fn lambda_n<R: LambdaRing>(ring: &R, x: &R::Elem, n: usize) -> Result<R::Elem> {
    Ok(lambda_values(ring, x, n)?.swap_remove(n))
}

/// `ψ¹(x), …, ψᵏ(x)` from the Newton recursion
/// `ψᵏ = Σ_{i<k} (-1)^{i-1} λⁱ ψ^{k-i} + (-1)^{k-1} k λᵏ`.
pub fn adams_values<R: LambdaRing>(ring: &R, x: &R::Elem, k: usize) -> Result<Vec<R::Elem>> {
    let lam = lambda_values(ring, x, k)?;
    let mut psi: Vec<R::Elem> = Vec::with_capacity(k);
    for j in 1..=k {
        let mut acc = ring.scale(&lam[j], &BigInt::from(j));
        if j % 2 == 0 {
            acc = ring.neg(&acc);
        }
        for i in 1..j {
            let t = ring.mul(&lam[i], &psi[j - i - 1]);
            acc = if i % 2 == 1 { ring.add(&acc, &t) } else { ring.sub(&acc, &t) };
        }
        psi.push(acc);
    }
    Ok(psi)
}

/// `ψᵏ(x)`, `k ≥ 1`.
pub fn adams<R: LambdaRing>(ring: &R, x: &R::Elem, k: usize) -> Result<R::Elem> {
    if k == 0 {
        return Err(Error::InvalidArgument("Adams operations start at k = 1".into()));
    }
    Ok(adams_values(ring, x, k)?.pop().expect("k >= 1"))
}

/// The degree of an element: the largest `k` with `λᵏ(x) ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Degree {
    Finite(usize),
    /// `λ^bound(x) ≠ 0` and no certificate of a finite degree is known.
    ExceedsBound(usize),
}

impl Degree {
    pub fn is_at_most(&self, k: usize) -> bool {
        matches!(self, Degree::Finite(d) if *d <= k)
    }
}

impl std::fmt::Display for Degree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::ExceedsBound(b) => write!(f, "> {b}"),
        }
    }
}

pub fn degree<R: LambdaRing>(ring: &R, x: &R::Elem, bound: usize) -> Result<Degree> {
    if bound == 0 {
        return Err(Error::InvalidArgument("degree bound must be at least 1".into()));
    }
    if let Some(d) = ring.degree_certificate(x) {
        return Ok(Degree::Finite(d));
    }
    let lam = lambda_values(ring, x, bound)?;
    let top = (0..=bound).rev().find(|&k| !ring.is_zero(&lam[k])).unwrap_or(0);
    Ok(if top == bound { Degree::ExceedsBound(bound) } else { Degree::Finite(top) })
}

/// The elements of degree at most one found in a sample, with 0 and 1.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeOneSubmonoid<E> {
    pub elements: Vec<E>,
    /// Every pairwise product again has degree at most one.
    pub closed: bool,
}

pub fn degree_le_one_submonoid<R: LambdaRing>(
    ring: &R,
    sample: &[R::Elem],
    bound: usize,
) -> Result<DegreeOneSubmonoid<R::Elem>> {
    let mut elements = vec![ring.zero(), ring.one()];
    for x in sample {
        if !elements.contains(x) && degree(ring, x, bound)?.is_at_most(1) {
            elements.push(x.clone());
        }
    }
    let mut closed = true;
    'outer: for a in &elements {
        for b in &elements {
            if !degree(ring, &ring.mul(a, b), bound)?.is_at_most(1) {
                closed = false;
                break 'outer;
            }
        }
    }
    Ok(DegreeOneSubmonoid { elements, closed })
}

/// All elements of `Z[M]` (finite `M`) with support of size at most
/// `support` and nonzero coefficients in `[-coeff, coeff]`.
pub fn small_elements(ring: &MonoidRing, support: usize, coeff: i64) -> Result<Vec<MonoidRingElem>> {
    let elems = ring.monoid.elements()?;
    let coeffs: Vec<i64> = (-coeff..=coeff).filter(|&c| c != 0).collect();
    let mut out = vec![ring.zero()];
    fn rec(
        start: usize,
        left: usize,
        elems: &[crate::monoid::MonoidElem],
        coeffs: &[i64],
        cur: &mut Vec<(usize, i64)>,
        out: &mut Vec<MonoidRingElem>,
    ) {
        if left == 0 {
            return;
        }
        for i in start..elems.len() {
            for &c in coeffs {
                cur.push((i, c));
                out.push(MonoidRingElem::from_terms(
                    cur.iter().map(|&(j, c)| (elems[j].clone(), BigInt::from(c))),
                ));
                rec(i + 1, left - 1, elems, coeffs, cur, out);
                cur.pop();
            }
        }
    }
    rec(0, support, &elems, &coeffs, &mut Vec::new(), &mut out);
    debug_assert!(out.iter().skip(1).all(|e| !e.terms().any(|(_, c)| c.is_zero())));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::Monoid;
    use crate::symmetric::newton_adams;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn c(n: u64) -> MonoidRing {
        MonoidRing::new(Monoid::Cyclic(n))
    }

    #[test]
    fn binomial_structure() {
        assert_eq!(lambda_n(&Integers, &int(4), 2).unwrap(), int(6));
        assert_eq!(lambda_n(&Integers, &int(-1), 3).unwrap(), int(-1));
        for n in 2..6 {
            assert_eq!(lambda_n(&Integers, &int(1), n).unwrap(), int(0));
        }
        let s = lambda_t(&Integers, &int(-1), 5).unwrap();
        let inv = lambda_t(&Integers, &int(1), 5).unwrap().inv(&Integers).unwrap();
        assert_eq!(s, inv);
    }

    #[test]
    fn monoidal_structure() {
        let r = MonoidRing::new("C2xC3".parse().unwrap());
        let x = r.parse("g+h").unwrap();
        assert_eq!(lambda_n(&r, &x, 2).unwrap(), r.parse("g*h").unwrap());
        let r6 = c(6);
        let g = r6.parse("g").unwrap();
        assert_eq!(lambda_n(&r6, &r6.parse("g + g^2").unwrap(), 2).unwrap(), r6.parse("g^3").unwrap());
        let lt = lambda_t(&r6, &g, 6).unwrap();
        assert_eq!(lt, TruncSeries::binomial(&r6, &g, 1, 6));
        let neg = lambda_t(&r6, &r6.neg(&g), 6).unwrap();
        assert_eq!(neg, lt.inv(&r6).unwrap());
        assert!(lambda_t(&r6, &r6.zero(), 4).unwrap().is_one(&r6));
        for n in 2..6 {
            assert!(r6.is_zero(&lambda_n(&r6, &r6.one(), n).unwrap()));
        }
    }

    #[test]
    fn lambda_t_is_additive() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = c(6);
        for _ in 0..200 {
            let x = r.random_elem(&mut rng, 3, 3);
            let y = r.random_elem(&mut rng, 3, 3);
            let lhs = lambda_t(&r, &r.add(&x, &y), 8).unwrap();
            let rhs = lambda_t(&r, &x, 8).unwrap().mul(&lambda_t(&r, &y, 8).unwrap(), &r);
            assert_eq!(lhs, rhs);
        }
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                let lhs = lambda_t(&Integers, &int(a + b), 8).unwrap();
                let rhs = lambda_t(&Integers, &int(a), 8)
                    .unwrap()
                    .mul(&lambda_t(&Integers, &int(b), 8).unwrap(), &Integers);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn adams_examples() {
        for m in -10i64..=10 {
            for k in 1..=6 {
                assert_eq!(adams(&Integers, &int(m), k).unwrap(), int(m));
            }
        }
        let r = c(3);
        let x = r.parse("g - g^2").unwrap();
        assert_eq!(adams(&r, &x, 2).unwrap(), r.parse("g^2 - g").unwrap());
        let r5 = c(5);
        let g = r5.parse("g").unwrap();
        for k in 1..=6 {
            assert_eq!(adams(&r5, &g, k).unwrap(), r5.frobenius(&g, k as u64));
        }
    }

    #[test]
    fn adams_matches_newton_polynomial() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let r = c(4);
        for _ in 0..20 {
            let x = r.random_elem(&mut rng, 3, 2);
            for k in 1..=5 {
                let lam = lambda_values(&r, &x, k).unwrap();
                let via_poly = newton_adams(k).eval(&r, &lam[1..]);
                assert_eq!(adams(&r, &x, k).unwrap(), via_poly);
            }
        }
    }

    #[test]
    fn adams_is_a_ring_map_and_composes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = MonoidRing::new("C2xC3".parse().unwrap());
        for _ in 0..30 {
            let x = r.random_elem(&mut rng, 3, 2);
            let y = r.random_elem(&mut rng, 3, 2);
            for k in 1..=6 {
                let px = adams(&r, &x, k).unwrap();
                let py = adams(&r, &y, k).unwrap();
                assert_eq!(adams(&r, &r.mul(&x, &y), k).unwrap(), r.mul(&px, &py));
                assert_eq!(adams(&r, &r.add(&x, &y), k).unwrap(), r.add(&px, &py));
                assert_eq!(px, r.frobenius(&x, k as u64));
            }
            for k in 1..=5 {
                for l in 1..=5 {
                    let inner = adams(&r, &x, l).unwrap();
                    assert_eq!(adams(&r, &inner, k).unwrap(), adams(&r, &x, k * l).unwrap());
                }
            }
        }
    }

    #[test]
    fn degrees() {
        let r5 = c(5);
        assert_eq!(degree(&r5, &r5.parse("g").unwrap(), 8).unwrap(), Degree::Finite(1));
        let r = MonoidRing::new("C2xC3".parse().unwrap());
        assert_eq!(degree(&r, &r.parse("g+h").unwrap(), 8).unwrap(), Degree::Finite(2));
        for bound in 1..=8 {
            assert_eq!(
                degree(&r5, &r5.parse("-g").unwrap(), bound).unwrap(),
                Degree::ExceedsBound(bound)
            );
        }
        assert_eq!(degree(&Integers, &int(5), 3).unwrap(), Degree::Finite(5));
        assert_eq!(degree(&Integers, &int(-2), 6).unwrap(), Degree::ExceedsBound(6));
        // g - 1 has λ_t = (1+gt)/(1+t), no finite degree
        assert_eq!(degree(&r5, &r5.parse("g - 1").unwrap(), 6).unwrap(), Degree::ExceedsBound(6));
    }

    #[test]
    fn degree_one_elements_are_monoid_elements() {
        for n in 1..=4u64 {
            let r = c(n);
            for x in small_elements(&r, 2, 2).unwrap() {
                let single = x.num_terms() == 1 && x.terms().all(|(_, c)| *c == int(1));
                assert_eq!(degree(&r, &x, 6).unwrap() == Degree::Finite(1), single, "{}", r.format(&x));
            }
        }
    }

    #[test]
    fn degree_one_submonoid() {
        let r = c(4);
        let sample = small_elements(&r, 2, 2).unwrap();
        let sub = degree_le_one_submonoid(&r, &sample, 6).unwrap();
        let mut want = vec![r.zero()];
        want.extend(r.monoid.elements().unwrap().into_iter().map(|m| r.basis(m)));
        let mut got = sub.elements.clone();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        assert!(sub.closed);

        let ints: Vec<BigInt> = (-10..=10).map(int).collect();
        let sub = degree_le_one_submonoid(&Integers, &ints, 6).unwrap();
        assert_eq!(sub.elements, vec![int(0), int(1)]);
        assert!(sub.closed);
    }

    #[test]
    fn polynomial_ring_structure() {
        let r = PolyOver::new(Integers, "x");
        let x = r.var_elem();
        // λ_t(x) = 1 + x t, so x has degree one
        assert_eq!(degree(&r, &x, 5).unwrap(), Degree::Finite(1));
        let two_x = r.scale(&x, &int(2));
        assert_eq!(lambda_n(&r, &two_x, 2).unwrap(), r.monomial(int(1), 2));
        // additivity and Adams = substitution x -> x^k on Z[x]
        let f = vec![int(3), int(-1), int(2)];
        let g = vec![int(-2), int(0), int(1), int(1)];
        let lhs = lambda_t(&r, &r.add(&f, &g), 6).unwrap();
        let rhs = lambda_t(&r, &f, 6).unwrap().mul(&lambda_t(&r, &g, 6).unwrap(), &r);
        assert_eq!(lhs, rhs);
        for k in 1..=4 {
            let want: Vec<BigInt> = {
                let mut v = vec![int(0); 2 * k + 1];
                v[0] = int(3);
                v[k] = int(-1);
                v[2 * k] = int(2);
                v
            };
            assert_eq!(adams(&r, &f, k).unwrap(), want);
        }
    }

    #[test]
    fn small_element_listing() {
        // 1 zero element + 4*4 singletons + 6*16 pairs
        assert_eq!(small_elements(&c(4), 2, 2).unwrap().len(), 1 + 16 + 96);
    }
}
