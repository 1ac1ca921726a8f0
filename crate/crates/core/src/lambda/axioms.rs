use num_bigint::BigInt;
use serde::Serialize;

use super::{lambda_values, LambdaRing};
use crate::algebra::{Ring, TruncSeries};
use crate::error::Result;
use crate::symmetric::{universal_p, universal_p2, UniversalLimits};

/// Result of checking one axiom over a sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomOutcome {
    pub axiom: u8,
    pub statement: &'static str,
    pub checks: usize,
    /// Instances not checked because they need λⁿ beyond the ring's bound.
    pub skipped: usize,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub samples: usize,
    pub n_max: usize,
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn outcome(&self, axiom: u8) -> &AxiomOutcome {
        &self.outcomes[axiom as usize - 1]
    }
}

const STATEMENTS: [&str; 6] = [
    "λ⁰(x) = 1",
    "λ¹(x) = x",
    "λⁿ(1) = 0 for n ≥ 2",
    "λⁿ(x+y) = Σ λⁱ(x)λʲ(y)",
    "λⁿ(xy) = P_n(λ(x); λ(y))",
    "λⁿ(λᵐ(x)) = P_{n,m}(λ(x))",
];

struct Tally {
    outcome: AxiomOutcome,
}

impl Tally {
    fn new(axiom: u8) -> Self {
        Tally {
            outcome: AxiomOutcome {
                axiom,
                statement: STATEMENTS[axiom as usize - 1],
                checks: 0,
                skipped: 0,
                passed: true,
                witness: None,
            },
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.outcome.checks += 1;
        if !ok && self.outcome.passed {
            self.outcome.passed = false;
            self.outcome.witness = Some(witness());
        }
    }
}

/// Check the six λ-ring axioms on sample pairs, for `n ≤ n_max` (and
/// `nm` within the universal-polynomial limit for the last axiom).
pub fn check_axioms<R: LambdaRing>(
    ring: &R,
    pairs: &[(R::Elem, R::Elem)],
    n_max: usize,
    limits: UniversalLimits,
) -> Result<AxiomReport> {
    let bound = ring.lambda_bound().unwrap_or(usize::MAX);
    let n_top = n_max.min(bound);
    let nm_top = limits.nm_max.min(n_max * n_max).min(bound);
    let mut t: Vec<Tally> = (1..=6).map(Tally::new).collect();
    let fmt = |x: &R::Elem| ring.format(x);

    let ones = lambda_values(ring, &ring.one(), n_top)?;
    for (n, v) in ones.iter().enumerate().skip(2) {
        t[2].record(ring.is_zero(v), || format!("n = {n}: λⁿ(1) = {}", fmt(v)));
    }
    t[2].outcome.skipped += n_max - n_top;

    let pn: Vec<_> = (1..=n_top).map(|n| universal_p(n, limits)).collect::<Result<_>>()?;

    for (x, y) in pairs {
        let lx = lambda_values(ring, x, nm_top.max(n_top))?;
        let ly = lambda_values(ring, y, n_top)?;

        t[0].record(lx[0] == ring.one(), || format!("x = {}: λ⁰(x) = {}", fmt(x), fmt(&lx[0])));
        if n_top >= 1 {
            t[1].record(lx[1] == *x, || format!("x = {}: λ¹(x) = {}", fmt(x), fmt(&lx[1])));
        }

        let sum = lambda_values(ring, &ring.add(x, y), n_top)?;
        for n in 0..=n_top {
            let conv = ring.sum(&(0..=n).map(|i| ring.mul(&lx[i], &ly[n - i])).collect::<Vec<_>>());
            t[3].record(sum[n] == conv, || {
                format!("x = {}, y = {}, n = {n}: {} ≠ {}", fmt(x), fmt(y), fmt(&sum[n]), fmt(&conv))
            });
        }
        t[3].outcome.skipped += n_max - n_top;

        let prod = lambda_values(ring, &ring.mul(x, y), n_top)?;
        for n in 1..=n_top {
            let mut vals: Vec<R::Elem> = lx[1..=n].to_vec();
            vals.extend_from_slice(&ly[1..=n]);
            let via_p = pn[n - 1].poly.eval(ring, &vals);
            t[4].record(prod[n] == via_p, || {
                format!("x = {}, y = {}, n = {n}: {} ≠ {}", fmt(x), fmt(y), fmt(&prod[n]), fmt(&via_p))
            });
        }
        t[4].outcome.skipped += n_max - n_top;

        for m in 1..=n_max {
            let inner: Option<Vec<R::Elem>> = if m <= n_top {
                Some(lambda_values(ring, &lx[m], n_top)?)
            } else {
                None
            };
            for n in 1..=n_max {
                if n * m > limits.nm_max {
                    continue;
                }
                let Some(inner) = inner.as_ref().filter(|_| n <= n_top && n * m <= nm_top) else {
                    t[5].outcome.skipped += 1;
                    continue;
                };
                let p = universal_p2(n, m, limits)?;
                let via_p = p.poly.eval(ring, &lx[1..=n * m]);
                t[5].record(inner[n] == via_p, || {
                    format!("x = {}, n = {n}, m = {m}: {} ≠ {}", fmt(x), fmt(&inner[n]), fmt(&via_p))
                });
            }
        }
    }

    Ok(AxiomReport {
        samples: pairs.len(),
        n_max,
        outcomes: t.into_iter().map(|t| t.outcome).collect(),
    })
}

/// A λ-family with one operation replaced by zero; used to confirm that the
/// axiom checks catch a broken family.
#[derive(Debug, Clone)]
pub struct ZeroedLambda<R> {
    pub inner: R,
    pub zeroed: usize,
}

impl<R: Ring> Ring for ZeroedLambda<R> {
    type Elem = R::Elem;

    fn zero(&self) -> R::Elem {
        self.inner.zero()
    }
    fn one(&self) -> R::Elem {
        self.inner.one()
    }
    fn add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.inner.add(a, b)
    }
    fn neg(&self, a: &R::Elem) -> R::Elem {
        self.inner.neg(a)
    }
    fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.inner.mul(a, b)
    }
    fn is_zero(&self, a: &R::Elem) -> bool {
        self.inner.is_zero(a)
    }
    fn format(&self, a: &R::Elem) -> String {
        self.inner.format(a)
    }
    fn scale(&self, a: &R::Elem, n: &BigInt) -> R::Elem {
        self.inner.scale(a, n)
    }
    fn unit_inverse(&self, a: &R::Elem) -> Option<R::Elem> {
        self.inner.unit_inverse(a)
    }
    fn div_int(&self, a: &R::Elem, n: &BigInt) -> Option<R::Elem> {
        self.inner.div_int(a, n)
    }
}

impl<R: LambdaRing> LambdaRing for ZeroedLambda<R> {
    fn lambda_t(&self, x: &R::Elem, order: usize) -> Result<TruncSeries<R::Elem>> {
        let s = self.inner.lambda_t(x, order)?;
        let mut c = s.into_coeffs();
        if let Some(v) = c.get_mut(self.zeroed) {
            *v = self.inner.zero();
        }
        let order = c.len() - 1;
        Ok(TruncSeries::new(self, c, order))
    }

    fn lambda_bound(&self) -> Option<usize> {
        self.inner.lambda_bound()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Integers;
    use crate::monoid::{Monoid, MonoidRing};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn int_pairs() -> Vec<(BigInt, BigInt)> {
        let mut v = Vec::new();
        for a in -5i64..=5 {
            for b in -5i64..=5 {
                v.push((BigInt::from(a), BigInt::from(b)));
            }
        }
        v
    }

    #[test]
    fn integers_pass() {
        let r = check_axioms(&Integers, &int_pairs(), 4, UniversalLimits::default()).unwrap();
        assert!(r.all_passed(), "{r:?}");
        assert!(r.outcome(6).checks > 0);
    }

    #[test]
    fn monoid_ring_passes() {
        let ring = MonoidRing::new(Monoid::Cyclic(6));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let pairs: Vec<_> = (0..10)
            .map(|_| (ring.random_elem(&mut rng, 3, 3), ring.random_elem(&mut rng, 3, 3)))
            .collect();
        let r = check_axioms(&ring, &pairs, 4, UniversalLimits::default()).unwrap();
        assert!(r.all_passed(), "{r:?}");
    }

    #[test]
    fn zeroed_family_fails_additivity() {
        let bad = ZeroedLambda { inner: Integers, zeroed: 2 };
        let pairs = vec![(BigInt::from(1), BigInt::from(1))];
        let r = check_axioms(&bad, &pairs, 4, UniversalLimits::default()).unwrap();
        let o = r.outcome(4);
        assert!(!o.passed);
        assert!(o.witness.as_deref().unwrap().starts_with("x = 1, y = 1, n = 2"));
    }
}
