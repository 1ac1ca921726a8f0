use super::ring::Ring;
use crate::error::{Error, Result};

/// A power series `c_0 + c_1 t + ... + c_N t^N` known modulo `t^{N+1}`.
///
/// Coefficients live in a ring supplied to every operation. Combining
/// series of different orders truncates to the smaller order.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> TruncSeries<E> {
    /// Series with the given leading coefficients, zero-padded or truncated
    /// to `order`.
    pub fn new<R: Ring<Elem = E>>(ring: &R, mut coeffs: Vec<E>, order: usize) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(ring.zero());
        }
        TruncSeries { coeffs }
    }

    pub fn one<R: Ring<Elem = E>>(ring: &R, order: usize) -> Self {
        Self::new(ring, vec![ring.one()], order)
    }

    /// `1 + c·t^k`.
    pub fn binomial<R: Ring<Elem = E>>(ring: &R, c: &E, k: usize, order: usize) -> Self {
        let mut coeffs = vec![ring.one()];
        coeffs.resize(k + 1, ring.zero());
        if k == 0 {
            coeffs[0] = ring.add(&coeffs[0], c);
        } else {
            coeffs[k] = c.clone();
        }
        Self::new(ring, coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    /// Coefficient of `t^i`; `None` beyond the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        TruncSeries { coeffs }
    }

    pub fn add<R: Ring<Elem = E>>(&self, other: &Self, ring: &R) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        TruncSeries {
            coeffs: (0..n).map(|i| ring.add(&self.coeffs[i], &other.coeffs[i])).collect(),
        }
    }

    pub fn neg<R: Ring<Elem = E>>(&self, ring: &R) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| ring.neg(c)).collect(),
        }
    }

    pub fn sub<R: Ring<Elem = E>>(&self, other: &Self, ring: &R) -> Self {
        self.add(&other.neg(ring), ring)
    }

    pub fn mul<R: Ring<Elem = E>>(&self, other: &Self, ring: &R) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![ring.zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if ring.is_zero(b) {
                    continue;
                }
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inv<R: Ring<Elem = E>>(&self, ring: &R) -> Result<Self> {
        let c0_inv = ring.unit_inverse(&self.coeffs[0]).ok_or(Error::NonUnitConstant)?;
        let n = self.coeffs.len();
        let mut out: Vec<E> = Vec::with_capacity(n);
        out.push(c0_inv.clone());
        for k in 1..n {
            // b_k = -c0^{-1} Σ_{i=1..k} a_i b_{k-i}
            let mut acc = ring.zero();
            for i in 1..=k {
                if ring.is_zero(&self.coeffs[i]) {
                    continue;
                }
                acc = ring.add(&acc, &ring.mul(&self.coeffs[i], &out[k - i]));
            }
            out.push(ring.neg(&ring.mul(&c0_inv, &acc)));
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn pow<R: Ring<Elem = E>>(&self, mut k: u64, ring: &R) -> Self {
        let mut acc = Self::one(ring, self.order());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, ring);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base, ring);
            }
        }
        acc
    }

    /// `f(c·t^k)` truncated to the same order.
    pub fn substitute_monomial<R: Ring<Elem = E>>(&self, c: &E, k: usize, ring: &R) -> Self {
        assert!(k >= 1);
        let order = self.order();
        let mut out = vec![ring.zero(); order + 1];
        let mut cpow = ring.one();
        for (j, a) in self.coeffs.iter().enumerate() {
            if j * k > order {
                break;
            }
            out[j * k] = ring.mul(a, &cpow);
            cpow = ring.mul(&cpow, c);
        }
        TruncSeries { coeffs: out }
    }

    pub fn map<F, T>(&self, f: F) -> TruncSeries<T>
    where
        F: Fn(&E) -> T,
    {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn is_one<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        self.coeffs[0] == ring.one() && self.coeffs[1..].iter().all(|c| ring.is_zero(c))
    }

    pub fn format<R: Ring<Elem = E>>(&self, ring: &R) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if ring.is_zero(c) {
                continue;
            }
            let s = ring.format(c);
            let (neg, s) = match s.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, s),
            };
            let s = if s.contains(' ') { format!("({s})") } else { s };
            let term = match (i, s.as_str()) {
                (0, _) => s,
                (1, "1") => "t".into(),
                (1, _) => format!("{s}*t"),
                (_, "1") => format!("t^{i}"),
                _ => format!("{s}*t^{i}"),
            };
            match (out.is_empty(), neg) {
                (true, false) => out = term,
                (true, true) => out = format!("-{term}"),
                (false, false) => out = format!("{out} + {term}"),
                (false, true) => out = format!("{out} - {term}"),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        format!("{out} + O(t^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::Integers;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn s(c: &[i64], order: usize) -> TruncSeries<BigInt> {
        TruncSeries::new(&Integers, c.iter().map(|&x| BigInt::from(x)).collect(), order)
    }

    #[test]
    fn product_and_inverse() {
        let z = Integers;
        assert_eq!(s(&[1, 1], 5).mul(&s(&[1, -1], 5), &z), s(&[1, 0, -1], 5));
        let inv = s(&[1, 1], 6).inv(&z).unwrap();
        assert_eq!(inv, s(&[1, -1, 1, -1, 1, -1, 1], 6));
        assert!(matches!(s(&[2, 1], 3).inv(&z), Err(Error::NonUnitConstant)));
    }

    #[test]
    fn mixed_orders_truncate() {
        let z = Integers;
        let p = s(&[1, 1], 8).mul(&s(&[1, 2, 3], 3), &z);
        assert_eq!(p.order(), 3);
        assert_eq!(p, s(&[1, 3, 5, 3], 3));
    }

    #[test]
    fn substitution() {
        let z = Integers;
        // (1 + t)^2 at t -> 3 t^2
        let f = s(&[1, 2, 1], 6);
        let g = f.substitute_monomial(&BigInt::from(3), 2, &z);
        assert_eq!(g, s(&[1, 0, 6, 0, 9], 6));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn inverse_is_two_sided(tail in prop::collection::vec(-9i64..9, 0..10), neg in any::<bool>()) {
            let mut c = vec![if neg { -1 } else { 1 }];
            c.extend(tail);
            let a = s(&c, 9);
            let inv = a.inv(&Integers).unwrap();
            prop_assert!(a.mul(&inv, &Integers).is_one(&Integers));
        }

        #[test]
        fn ring_axioms(a in prop::collection::vec(-9i64..9, 1..6),
                       b in prop::collection::vec(-9i64..9, 1..6),
                       c in prop::collection::vec(-9i64..9, 1..6)) {
            let z = Integers;
            let (a, b, c) = (s(&a, 5), s(&b, 5), s(&c, 5));
            prop_assert_eq!(a.mul(&b, &z).mul(&c, &z), a.mul(&b.mul(&c, &z), &z));
            prop_assert_eq!(a.mul(&b.add(&c, &z), &z), a.mul(&b, &z).add(&a.mul(&c, &z), &z));
            prop_assert_eq!(a.mul(&TruncSeries::one(&z, 5), &z), a.clone());
        }
    }
}
