use super::ring::Ring;

/// Polynomials in one variable over a base ring, dense and stripped of
/// trailing zero coefficients. Index `i` holds the coefficient of `x^i`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyOver<R: Ring> {
    pub base: R,
    pub var: String,
}

impl<R: Ring> PolyOver<R> {
    pub fn new(base: R, var: impl Into<String>) -> Self {
        PolyOver { base, var: var.into() }
    }

    pub fn strip(&self, mut c: Vec<R::Elem>) -> Vec<R::Elem> {
        while c.last().is_some_and(|x| self.base.is_zero(x)) {
            c.pop();
        }
        c
    }

    /// `c · x^k`.
    pub fn monomial(&self, c: R::Elem, k: usize) -> Vec<R::Elem> {
        let mut v = vec![self.base.zero(); k];
        v.push(c);
        self.strip(v)
    }

    pub fn var_elem(&self) -> Vec<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn constant(&self, c: R::Elem) -> Vec<R::Elem> {
        self.monomial(c, 0)
    }

    pub fn degree(&self, a: &[R::Elem]) -> Option<usize> {
        a.len().checked_sub(1)
    }
}

impl<R: Ring> Ring for PolyOver<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.len().max(b.len());
        let z = self.base.zero();
        let out = (0..n)
            .map(|i| self.base.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect();
        self.strip(out)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|c| self.base.neg(c)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.base.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.strip(out)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }

    fn format(&self, a: &Self::Elem) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in a.iter().enumerate().rev() {
            if self.base.is_zero(c) {
                continue;
            }
            let s = self.base.format(c);
            let power = match i {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{i}", self.var),
            };
            parts.push(if i == 0 {
                s
            } else if s == "1" {
                power
            } else if s == "-1" {
                format!("-{power}")
            } else if s.contains(' ') {
                format!("({s})*{power}")
            } else {
                format!("{s}*{power}")
            });
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }

    fn scale(&self, a: &Self::Elem, n: &num_bigint::BigInt) -> Self::Elem {
        self.strip(a.iter().map(|c| self.base.scale(c, n)).collect())
    }

    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.len() == 1 {
            self.base.unit_inverse(&a[0]).map(|c| vec![c])
        } else {
            None
        }
    }

    fn div_int(&self, a: &Self::Elem, n: &num_bigint::BigInt) -> Option<Self::Elem> {
        a.iter().map(|c| self.base.div_int(c, n)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Integers;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn arithmetic_and_format() {
        let r = PolyOver::new(Integers, "x");
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(r.mul(&a, &b), p(&[-1, 0, 1]));
        assert_eq!(r.add(&a, &r.neg(&a)), Vec::<BigInt>::new());
        assert_eq!(r.format(&p(&[-1, 0, 3])), "3*x^2 - 1");
        assert_eq!(r.format(&p(&[0, -1])), "-x");
        assert_eq!(r.div_int(&p(&[2, 4]), &BigInt::from(2)), Some(p(&[1, 2])));
        assert_eq!(r.div_int(&p(&[2, 3]), &BigInt::from(2)), None);
    }
}
