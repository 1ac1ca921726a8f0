use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::ring::Ring;

/// Exponent vector, variable 0 first, trailing zeros stripped.
///
/// The derived `Ord` is lexicographic with variable 0 most significant,
/// which is the elimination order used by the symmetric-function reducer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `Σ weight(i)·e_i`.
    pub fn weight(&self, weight: impl Fn(usize) -> u32) -> u32 {
        self.0.iter().enumerate().map(|(i, &e)| weight(i) * e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial((0..n).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    pub fn swap(&self, i: usize, j: usize) -> Monomial {
        let n = self.0.len().max(i + 1).max(j + 1);
        let mut e: Vec<u32> = (0..n).map(|k| self.exp(k)).collect();
        e.swap(i, j);
        Monomial::new(e)
    }

    /// Dense exponent vector of length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n.max(self.0.len())).map(|i| self.exp(i)).collect()
    }
}

/// Sparse multivariate polynomial with integer coefficients; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

/// One term in the machine-readable form of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(i: usize) -> Self {
        Self::term(Monomial::var(i), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms(items: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in items {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Number of variables needed to hold every exponent vector.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Polynomial with variables `i` and `j` exchanged.
    pub fn swap_vars(&self, i: usize, j: usize) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.swap(i, j), c.clone())).collect(),
        }
    }

    /// Rename variables through `map`.
    pub fn map_vars(&self, map: impl Fn(usize) -> usize) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = Vec::new();
            for (i, &x) in m.0.iter().enumerate() {
                let j = map(i);
                if e.len() <= j {
                    e.resize(j + 1, 0);
                }
                e[j] += x;
            }
            (Monomial::new(e), c.clone())
        }))
    }

    /// Substitute `values[i]` for variable `i` and evaluate in `ring`.
    ///
    /// Variables without a value are an error in the caller; this panics.
    pub fn eval<R: Ring>(&self, ring: &R, values: &[R::Elem]) -> R::Elem {
        let mut cache: Vec<Vec<R::Elem>> = vec![Vec::new(); values.len()];
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = ring.from_int(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                if powers.is_empty() {
                    powers.push(ring.one());
                }
                while powers.len() <= e as usize {
                    let next = ring.mul(powers.last().unwrap(), &values[i]);
                    powers.push(next);
                }
                t = ring.mul(&t, &powers[e as usize]);
            }
            acc = ring.add(&acc, &t);
        }
        acc
    }

    /// True when every monomial has the given weight.
    pub fn is_isobaric(&self, weight: impl Fn(usize) -> u32 + Copy, target: u32) -> bool {
        self.terms.keys().all(|m| m.weight(weight) == target)
    }

    /// Render in descending lexicographic order, e.g. `x1*x3 - x4`.
    pub fn format_with(&self, name: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.0.is_empty() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(name(i)),
                    _ => factors.push(format!("{}^{}", name(i), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Machine-readable terms in descending lexicographic order, exponent
    /// vectors padded to `nvars`.
    pub fn records(&self, nvars: usize) -> Vec<TermRecord> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| TermRecord {
                exponents: m.padded(nvars),
                coefficient: c.to_string(),
            })
            .collect()
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { terms: acc }
    }
}

/// `Z[x_0, x_1, ...]` as a ring context, used for symbolic Witt vectors.
#[derive(Debug, Clone, Copy, Default)]
pub struct MPolyRing;

impl Ring for MPolyRing {
    type Elem = MPoly;

    fn zero(&self) -> MPoly {
        MPoly::zero()
    }
    fn one(&self) -> MPoly {
        MPoly::one()
    }
    fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a + b
    }
    fn neg(&self, a: &MPoly) -> MPoly {
        -a
    }
    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a * b
    }
    fn sub(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a - b
    }
    fn is_zero(&self, a: &MPoly) -> bool {
        a.is_zero()
    }
    fn format(&self, a: &MPoly) -> String {
        a.format_with(|i| format!("x{}", i + 1))
    }
    fn scale(&self, a: &MPoly, n: &BigInt) -> MPoly {
        a.scale(n)
    }
    fn from_int(&self, n: &BigInt) -> MPoly {
        MPoly::constant(n.clone())
    }
    fn div_int(&self, a: &MPoly, n: &BigInt) -> Option<MPoly> {
        if n.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &a.terms {
            let (q, r) = c.div_rem(n);
            if !r.is_zero() {
                return None;
            }
            terms.insert(m.clone(), q);
        }
        Some(MPoly { terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::Integers;
    use proptest::prelude::*;

    fn x(i: usize) -> MPoly {
        MPoly::var(i)
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = &(&x(0) + &x(1)) - &x(1);
        assert_eq!(p, x(0));
        assert_eq!(p.num_terms(), 1);
        assert!((&x(2) - &x(2)).is_zero());
    }

    #[test]
    fn lex_order_and_display() {
        // x1*x3 - x4 prints the lex-larger monomial first
        let p = &(&x(0) * &x(2)) - &x(3);
        assert_eq!(p.format_with(|i| format!("x{}", i + 1)), "x1*x3 - x4");
        let (lead, _) = p.leading_term().unwrap();
        assert_eq!(lead.exps(), &[1, 0, 1]);
        let q = &(&x(0).pow(2) * &x(1)).scale(&BigInt::from(-2)) + &MPoly::constant(BigInt::from(5));
        assert_eq!(q.format_with(|i| format!("x{}", i + 1)), "-2*x1^2*x2 + 5");
    }

    #[test]
    fn eval_over_integers() {
        // (x1 + 2 x2)^2 at (3, -1) = 1
        let p = (&x(0) + &x(1).scale(&BigInt::from(2))).pow(2);
        let v = p.eval(&Integers, &[BigInt::from(3), BigInt::from(-1)]);
        assert_eq!(v, BigInt::from(1));
    }

    #[test]
    fn records_are_padded() {
        let p = &x(0) - &x(2);
        let rec = p.records(4);
        assert_eq!(rec[0].exponents, vec![1, 0, 0, 0]);
        assert_eq!(rec[1].coefficient, "-1");
    }

    fn arb_mpoly() -> impl Strategy<Value = MPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, 0..4), -5i64..5), 0..6).prop_map(
            |ts| MPoly::from_terms(ts.into_iter().map(|(e, c)| (Monomial::new(e), BigInt::from(c)))),
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_mpoly(), b in arb_mpoly(), c in arb_mpoly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &MPoly::one(), a.clone());
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }
    }
}
