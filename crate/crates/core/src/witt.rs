//! Big Witt vectors truncated to indices `1..=N`.
//!
//! Arithmetic goes through ghost coordinates `w_n = Σ_{d|n} d·a_d^{n/d}`:
//! the ghost vector of a sum or product is solved back to components, and
//! every division along the way must be exact. The series picture
//! `1 + tR[[t]]` is linked to components by the factorisation
//! `f(t) = Π (1 - (-1)ⁱ bᵢ tⁱ)`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::numtheory::divisors;
use crate::algebra::{MPoly, MPolyRing, Ring, TruncSeries};
use crate::error::{Error, Result};
use crate::f1mod::{F1Module, FiniteAbelian, GroupElem, SquareZeroElem, SquareZeroRing};
use crate::lambda::LambdaRing;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Components `a_1..a_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct WittVector<E> {
    pub comps: Vec<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> WittVector<E> {
    pub fn new(comps: Vec<E>) -> Self {
        WittVector { comps }
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn zero<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        WittVector { comps: vec![ring.zero(); n] }
    }

    pub fn one<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        Self::teichmuller(ring, &ring.one(), n)
    }

    /// `(r, 0, 0, …)`.
    pub fn teichmuller<R: Ring<Elem = E>>(ring: &R, r: &E, n: usize) -> Self {
        let mut comps = vec![ring.zero(); n];
        if n > 0 {
            comps[0] = r.clone();
        }
        WittVector { comps }
    }

    pub fn format<R: Ring<Elem = E>>(&self, ring: &R) -> Vec<String> {
        self.comps.iter().map(|c| ring.format(c)).collect()
    }
}

fn check_lengths<E>(a: &WittVector<E>, b: &WittVector<E>) -> Result<()> {
    if a.comps.len() != b.comps.len() {
        return Err(Error::InvalidArgument(format!(
            "Witt vectors of lengths {} and {} cannot be combined",
            a.comps.len(),
            b.comps.len()
        )));
    }
    Ok(())
}

/// Ghost coordinates `w_n = Σ_{d|n} d·a_d^{n/d}`.
pub fn ghost<R: Ring>(ring: &R, a: &WittVector<R::Elem>) -> Vec<R::Elem> {
    (1..=a.len())
        .map(|n| {
            let terms: Vec<R::Elem> = divisors(n as u64)
                .into_iter()
                .map(|d| {
                    let d = d as usize;
                    ring.scale(&ring.pow(&a.comps[d - 1], (n / d) as u64), &BigInt::from(d))
                })
                .collect();
            ring.sum(&terms)
        })
        .collect()
}

/// Components with the given ghost vector; fails with an integrality error
/// at the first component that is not in the ring.
pub fn from_ghost<R: Ring>(ring: &R, w: &[R::Elem]) -> Result<WittVector<R::Elem>> {
    let mut comps: Vec<R::Elem> = Vec::with_capacity(w.len());
    for n in 1..=w.len() {
        let mut rest = w[n - 1].clone();
        for d in divisors(n as u64) {
            let d = d as usize;
            if d == n {
                break;
            }
            let t = ring.scale(&ring.pow(&comps[d - 1], (n / d) as u64), &BigInt::from(d));
            rest = ring.sub(&rest, &t);
        }
        let c = ring
            .div_int(&rest, &BigInt::from(n))
            .ok_or(Error::Integrality { index: n })?;
        comps.push(c);
    }
    Ok(WittVector { comps })
}

pub fn witt_add<R: Ring>(
    ring: &R,
    a: &WittVector<R::Elem>,
    b: &WittVector<R::Elem>,
) -> Result<WittVector<R::Elem>> {
    check_lengths(a, b)?;
    let w: Vec<_> = ghost(ring, a).iter().zip(ghost(ring, b)).map(|(x, y)| ring.add(x, &y)).collect();
    from_ghost(ring, &w)
}

pub fn witt_mul<R: Ring>(
    ring: &R,
    a: &WittVector<R::Elem>,
    b: &WittVector<R::Elem>,
) -> Result<WittVector<R::Elem>> {
    check_lengths(a, b)?;
    let w: Vec<_> = ghost(ring, a).iter().zip(ghost(ring, b)).map(|(x, y)| ring.mul(x, &y)).collect();
    from_ghost(ring, &w)
}

pub fn witt_neg<R: Ring>(ring: &R, a: &WittVector<R::Elem>) -> Result<WittVector<R::Elem>> {
    let w: Vec<_> = ghost(ring, a).iter().map(|x| ring.neg(x)).collect();
    from_ghost(ring, &w)
}

/// Series to components: `b_i = (-1)^{i+1} c_i`, where `c_i` is the
/// coefficient of `tⁱ` once the factors below `i` are divided out.
pub fn artin_hasse<R: Ring>(ring: &R, f: &TruncSeries<R::Elem>) -> Result<WittVector<R::Elem>> {
    if f.coeffs()[0] != ring.one() {
        return Err(Error::InvalidArgument("series must have constant term 1".into()));
    }
    let order = f.order();
    let mut g: Vec<R::Elem> = f.coeffs().to_vec();
    let mut comps = Vec::with_capacity(order);
    for i in 1..=order {
        let c = g[i].clone();
        let b = if i % 2 == 1 { c.clone() } else { ring.neg(&c) };
        // divide g by (1 + c tⁱ): h_k = g_k - c·h_{k-i}
        if !ring.is_zero(&c) {
            for k in i..=order {
                let t = ring.mul(&c, &g[k - i]);
                g[k] = ring.sub(&g[k], &t);
            }
        }
        comps.push(b);
    }
    Ok(WittVector { comps })
}

/// Components to series: `Π (1 - (-1)ⁱ bᵢ tⁱ)`.
pub fn artin_hasse_inv<R: Ring>(ring: &R, a: &WittVector<R::Elem>) -> TruncSeries<R::Elem> {
    let order = a.len();
    let mut acc = TruncSeries::one(ring, order);
    for (idx, b) in a.comps.iter().enumerate() {
        let i = idx + 1;
        if ring.is_zero(b) {
            continue;
        }
        let c = if i % 2 == 1 { b.clone() } else { ring.neg(b) };
        acc = acc.mul(&TruncSeries::binomial(ring, &c, i, order), ring);
    }
    acc
}

/// Witt addition through the series picture, valid over any ring.
pub fn witt_add_series<R: Ring>(
    ring: &R,
    a: &WittVector<R::Elem>,
    b: &WittVector<R::Elem>,
) -> Result<WittVector<R::Elem>> {
    check_lengths(a, b)?;
    let f = artin_hasse_inv(ring, a).mul(&artin_hasse_inv(ring, b), ring);
    artin_hasse(ring, &f)
}

/// The Frobenius `f_n`, characterised by `ghost(f_n a)_k = ghost(a)_{nk}`;
/// the result has length `⌊N/n⌋`.
pub fn frobenius_witt<R: Ring>(ring: &R, a: &WittVector<R::Elem>, n: usize) -> Result<WittVector<R::Elem>> {
    if n == 0 || n > a.len() {
        return Err(Error::InvalidArgument(format!(
            "Frobenius index {n} needs 1 <= n <= {}",
            a.len()
        )));
    }
    let w = ghost(ring, a);
    let shifted: Vec<_> = (1..=a.len() / n).map(|k| w[n * k - 1].clone()).collect();
    from_ghost(ring, &shifted)
}

/// The Verschiebung: `(V_n a)_{nk} = a_k`, zero elsewhere, same length.
pub fn verschiebung<R: Ring>(ring: &R, a: &WittVector<R::Elem>, n: usize) -> Result<WittVector<R::Elem>> {
    if n == 0 {
        return Err(Error::InvalidArgument("Verschiebung index must be at least 1".into()));
    }
    let len = a.len();
    let mut comps = vec![ring.zero(); len];
    for k in 1..=len / n {
        comps[n * k - 1] = a.comps[k - 1].clone();
    }
    Ok(WittVector { comps })
}

/// `λ_R(r)`: the components of `λ_t(r)`.
pub fn lambda_r_map<R: LambdaRing>(ring: &R, r: &R::Elem, n: usize) -> Result<WittVector<R::Elem>> {
    let s = ring.lambda_t(r, n)?;
    if s.order() < n {
        return Err(Error::Truncation { have: s.order(), need: n });
    }
    artin_hasse(ring, &s)
}

/// Symbolic Witt polynomials for sum and product, in `a_1..a_n` (variables
/// `0..n`) and `b_1..b_n` (variables `n..2n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittPolynomials {
    pub n: usize,
    pub sum: Vec<MPoly>,
    pub product: Vec<MPoly>,
}

pub const SYMBOLIC_WITT_MAX: usize = 6;

pub fn witt_polynomials(n: usize) -> Result<WittPolynomials> {
    if n > SYMBOLIC_WITT_MAX {
        return Err(Error::Resource { what: "symbolic Witt length", value: n, limit: SYMBOLIC_WITT_MAX });
    }
    let a = WittVector::new((0..n).map(MPoly::var).collect());
    let b = WittVector::new((n..2 * n).map(MPoly::var).collect());
    Ok(WittPolynomials {
        n,
        sum: witt_add(&MPolyRing, &a, &b)?.comps,
        product: witt_mul(&MPolyRing, &a, &b)?.comps,
    })
}

impl WittPolynomials {
    pub fn var_name(&self, i: usize) -> String {
        if i < self.n {
            format!("a{}", i + 1)
        } else {
            format!("b{}", i - self.n + 1)
        }
    }

    pub fn record(&self) -> WittPolynomialsRecord {
        let fmt = |ps: &[MPoly]| ps.iter().map(|p| p.format_with(|i| self.var_name(i))).collect();
        WittPolynomialsRecord { n: self.n, sum: fmt(&self.sum), product: fmt(&self.product) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WittPolynomialsRecord {
    pub n: usize,
    pub sum: Vec<String>,
    pub product: Vec<String>,
}

/// `W(M)` at length `n` for a finite abelian group `M` with zero
/// multiplication, read off by evaluating the Witt polynomials inside
/// `Z ▷ M`.
#[derive(Debug, Clone, Serialize)]
pub struct NonUnitalWitt {
    pub orders: Vec<u64>,
    pub n: usize,
    /// Orders of the cyclic factors of the additive group.
    pub additive_orders: Vec<u64>,
    pub pairs_checked: usize,
    pub addition_componentwise: bool,
    pub product_zero: bool,
}

pub fn witt_nonunital(m: &FiniteAbelian, n: usize) -> Result<NonUnitalWitt> {
    let polys = witt_polynomials(n)?;
    let ring = SquareZeroRing::new(F1Module { carrier: m.clone(), family: Vec::new() });
    let embed = |v: &[GroupElem]| -> Vec<SquareZeroElem> {
        v.iter().map(|x| SquareZeroElem { z: BigInt::from(0), m: x.clone() }).collect()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let elems = m.elements();
    let pairs: Vec<(Vec<GroupElem>, Vec<GroupElem>)> = (0..64)
        .map(|_| {
            let mut pick = || (0..n).map(|_| elems[rng.gen_range(0..elems.len())].clone()).collect();
            (pick(), pick())
        })
        .collect();
    let mut addition_componentwise = true;
    let mut product_zero = true;
    for (a, b) in &pairs {
        let mut vals = embed(a);
        vals.extend(embed(b));
        for k in 0..n {
            let s = polys.sum[k].eval(&ring, &vals);
            let want = SquareZeroElem { z: BigInt::from(0), m: m.add(&a[k], &b[k]) };
            addition_componentwise &= s == want;
            product_zero &= ring.is_zero(&polys.product[k].eval(&ring, &vals));
        }
    }
    Ok(NonUnitalWitt {
        orders: m.orders.clone(),
        n,
        additive_orders: (0..n).flat_map(|_| m.orders.iter().copied()).collect(),
        pairs_checked: pairs.len(),
        addition_componentwise,
        product_zero,
    })
}
