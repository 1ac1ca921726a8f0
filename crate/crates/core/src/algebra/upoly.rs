use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::Ring;
use crate::error::{Error, Result};

/// Dense univariate polynomial over the integers, coefficients indexed by
/// degree with trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<BigInt>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += BigInt::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `f(x^k)`: the Adams operation ψ^k on `Z[x]`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitute_power requires k >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut acc = Self::one();
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

    /// Quotient and remainder with `f = q·g + r`, `deg r < deg g`.
    ///
    /// Monic divisors always succeed. A non-monic divisor is accepted only
    /// when the division is exact over the integers.
    pub fn divrem(&self, g: &UPoly) -> Result<(UPoly, UPoly)> {
        let dg = g
            .degree()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?;
        let lead = g.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dg {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); n - dg];
        for i in (dg..n).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("({self}) / ({g})")));
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                rem[i - dg + j] -= &q * gc;
            }
            quot[i - dg] = q;
        }
        let rem = UPoly::new(rem);
        if !lead.is_one() && !rem.is_zero() {
            return Err(Error::InexactDivision(format!("({self}) / ({g})")));
        }
        Ok((UPoly::new(quot), rem))
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn exact_div(&self, g: &UPoly) -> Option<UPoly> {
        match self.divrem(g) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, f: &UPoly) -> bool {
        f.exact_div(self).is_some()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        UPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Pseudo-remainder of `self` by `g`.
    fn pseudo_rem(&self, g: &UPoly) -> UPoly {
        let dg = g.degree().expect("nonzero divisor");
        let lead = g.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > dg {
            let top = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - dg;
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                rem[shift + j] -= &top * gc;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        UPoly::new(rem)
    }

    /// Greatest common divisor over `Q`, normalised to a primitive integer
    /// polynomial with positive leading coefficient.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Squarefree over `Q` (no repeated complex roots).
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }
}

impl fmt::Display for UPoly {
    /// Renders in descending degree with ASCII exponents, e.g. `x^5 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = abs.is_one();
            match i {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{abs}*x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "{abs}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for UPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_upoly(s)
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

/// `Z[x]` as a ring context.
#[derive(Debug, Clone, Copy, Default)]
pub struct UPolyRing;

impl Ring for UPolyRing {
    type Elem = UPoly;

    fn zero(&self) -> UPoly {
        UPoly::zero()
    }
    fn one(&self) -> UPoly {
        UPoly::one()
    }
    fn add(&self, a: &UPoly, b: &UPoly) -> UPoly {
        a + b
    }
    fn neg(&self, a: &UPoly) -> UPoly {
        -a
    }
    fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        a * b
    }
    fn sub(&self, a: &UPoly, b: &UPoly) -> UPoly {
        a - b
    }
    fn is_zero(&self, a: &UPoly) -> bool {
        a.is_zero()
    }
    fn format(&self, a: &UPoly) -> String {
        a.to_string()
    }
    fn scale(&self, a: &UPoly, n: &BigInt) -> UPoly {
        a.scale(n)
    }
    fn from_int(&self, n: &BigInt) -> UPoly {
        UPoly::constant(n.clone())
    }
    fn unit_inverse(&self, a: &UPoly) -> Option<UPoly> {
        (a.degree() == Some(0) && a.coeffs[0].abs().is_one()).then(|| a.clone())
    }
    fn div_int(&self, a: &UPoly, n: &BigInt) -> Option<UPoly> {
        if n.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(a.coeffs.len());
        for c in &a.coeffs {
            let (q, r) = c.div_rem(n);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(UPoly::new(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_i64s(c)
    }

    #[test]
    fn divrem_examples() {
        // x^2 - 1 = (x + 1)(x - 1)
        let (q, r) = p(&[-1, 0, 1]).divrem(&p(&[-1, 1])).unwrap();
        assert_eq!((q, r), (p(&[1, 1]), UPoly::zero()));
        // x^2 - 2 = (x + 2)(x - 2) + 2
        let (q, r) = p(&[-2, 0, 1]).divrem(&p(&[-2, 1])).unwrap();
        assert_eq!((q, r), (p(&[2, 1]), p(&[2])));
        // x^6 - 1 = (x^4 + x^2 + 1)(x^2 - 1)
        let (q, r) = UPoly::x_pow_minus_one(6).divrem(&UPoly::x_pow_minus_one(2)).unwrap();
        assert_eq!(q, p(&[1, 0, 1, 0, 1]));
        assert!(r.is_zero());
        assert_eq!(&q * &UPoly::x_pow_minus_one(2), UPoly::x_pow_minus_one(6));
    }

    #[test]
    fn non_monic_division() {
        // (2x^2 + 2x) / (2x) = x + 1 exactly
        let (q, r) = p(&[0, 2, 2]).divrem(&p(&[0, 2])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert!(matches!(
            p(&[1, 0, 1]).divrem(&p(&[1, 2])),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(p(&[-2, 1]).substitute_power(2), p(&[-2, 0, 1]));
        let f = p(&[3, -1, 4]);
        assert_eq!(f.substitute_power(1), f);
        assert_eq!(UPoly::x_pow_minus_one(5).substitute_power(3), UPoly::x_pow_minus_one(15));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = &p(&[-1, 1]) * &p(&[1, 1]);
        let b = &p(&[-1, 1]) * &p(&[2, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert!(UPoly::x_pow_minus_one(12).is_squarefree());
        assert!(!(&p(&[-1, 1]) * &p(&[-1, 1])).is_squarefree());
        assert!(!p(&[0, 0, 1]).is_squarefree());
    }

    #[test]
    fn display() {
        assert_eq!(UPoly::x_pow_minus_one(5).to_string(), "x^5 - 1");
        assert_eq!(p(&[1, -1, 1]).to_string(), "x^2 - x + 1");
        assert_eq!(p(&[0, -3]).to_string(), "-3*x");
        assert_eq!(UPoly::zero().to_string(), "0");
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = UPoly> {
        prop::collection::vec(-20i64..20, 0..=max_deg + 1).prop_map(|v| UPoly::from_i64s(&v))
    }

    fn arb_monic(max_deg: usize) -> impl Strategy<Value = UPoly> {
        prop::collection::vec(-20i64..20, 0..=max_deg).prop_map(|mut v| {
            v.push(1);
            UPoly::from_i64s(&v)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn divrem_reconstructs(f in arb_poly(12), g in arb_monic(6)) {
            let (q, r) = f.divrem(&g).unwrap();
            prop_assert_eq!(&(&q * &g) + &r, f);
            prop_assert!(r.degree() < g.degree());
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(5), b in arb_poly(5), c in arb_poly(5)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &UPoly::one(), a.clone());
            prop_assert_eq!(&a * &b, &b * &a);
        }
    }
}
