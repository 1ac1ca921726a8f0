//! Symmetric functions and the universal λ-ring polynomials.
//!
//! `P_n` expresses `λⁿ(xy)` through `λ¹..λⁿ` of `x` and `y`; `P_{n,m}`
//! expresses `λⁿ(λᵐ(x))` through `λ¹..λⁿᵐ` of `x`. Both come from reducing
//! a product of linear factors to elementary symmetric functions.
//!
//! Two routes are provided. [`reduce_to_elementary`] works on an explicit
//! [`MPoly`] by lexicographic leading-term elimination. [`universal_p`] and
//! [`universal_p2`] run the same elimination on dominant monomials only
//! (one coefficient per tuple of partitions), which is what keeps `n = 6`
//! cheap: the coefficient of a dominant monomial in a product of `e_k` is
//! a count of 0-1 matrices with prescribed margins.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{MPoly, Monomial, TermRecord};
use crate::error::{Error, Result};

/// Feasibility limits for universal polynomial generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniversalLimits {
    pub n_max: usize,
    pub nm_max: usize,
}

impl Default for UniversalLimits {
    fn default() -> Self {
        UniversalLimits { n_max: 6, nm_max: 8 }
    }
}

/// `e_k` in variables `x_0..x_{vars-1}`; zero when `k > vars`.
pub fn elementary_symmetric(k: usize, vars: usize) -> MPoly {
    elementary_in(k, 0, vars)
}

fn elementary_in(k: usize, offset: usize, vars: usize) -> MPoly {
    if k > vars {
        return MPoly::zero();
    }
    let mut out = MPoly::zero();
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        let mut e = vec![0u32; offset + vars];
        for &i in &pick {
            e[offset + i] = 1;
        }
        out.add_term(Monomial::new(e), BigInt::one());
        // next k-combination of 0..vars
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pick[i] != i + vars - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

/// Rewrite a polynomial that is symmetric within each block of variables as
/// a polynomial in the elementary symmetric functions of the blocks.
///
/// `blocks` lists the block sizes; block `b` occupies the variables right
/// after block `b-1`. In the result, `e_k` of block `b` is the variable with
/// index `offset_b + k - 1`, so `e_k(ξ) ↦ x_k` keeps the variable count.
pub fn reduce_to_elementary(p: &MPoly, blocks: &[usize]) -> Result<MPoly> {
    let total: usize = blocks.iter().sum();
    if p.num_vars() > total {
        return Err(Error::InvalidArgument(format!(
            "polynomial uses {} variables but the blocks cover {total}",
            p.num_vars()
        )));
    }
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0, |acc, &b| {
            let o = *acc;
            *acc += b;
            Some(o)
        })
        .collect();
    for (b, &size) in blocks.iter().enumerate() {
        for i in 0..size.saturating_sub(1) {
            let (a, c) = (offsets[b] + i, offsets[b] + i + 1);
            if &p.swap_vars(a, c) != p {
                return Err(Error::NotSymmetric { first: a, second: c });
            }
        }
    }

    let mut e_cache: HashMap<(usize, usize), MPoly> = HashMap::new();
    let mut rem = p.clone();
    let mut out = MPoly::zero();
    while let Some((lead, c)) = rem.leading_term() {
        let (lead, c) = (lead.clone(), c.clone());
        let mut product = MPoly::one();
        let mut image = vec![0u32; total];
        for (b, &size) in blocks.iter().enumerate() {
            let alpha: Vec<u32> = (0..size).map(|i| lead.exp(offsets[b] + i)).collect();
            for k in 1..=size {
                let next = if k < size { alpha[k] } else { 0 };
                let d = alpha[k - 1].checked_sub(next).ok_or_else(|| {
                    Error::Consistency("leading monomial is not dominant".into())
                })?;
                if d == 0 {
                    continue;
                }
                image[offsets[b] + k - 1] = d;
                let e = e_cache
                    .entry((b, k))
                    .or_insert_with(|| elementary_in(k, offsets[b], size));
                product = &product * &e.pow(d);
            }
        }
        rem = &rem - &product.scale(&c);
        out.add_term(Monomial::new(image), c);
    }
    Ok(out)
}

/// A universal λ-ring polynomial together with its variable layout:
/// `x_1..x_{x_vars}` followed by `y_1..y_{y_vars}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalPoly {
    pub poly: MPoly,
    pub x_vars: usize,
    pub y_vars: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct UniversalPolyRecord {
    pub variables: Vec<String>,
    pub terms: Vec<TermRecord>,
}

impl UniversalPoly {
    pub fn var_name(&self, i: usize) -> String {
        if i < self.x_vars {
            format!("x{}", i + 1)
        } else {
            format!("y{}", i - self.x_vars + 1)
        }
    }

    /// Canonical text form, monomials in descending lexicographic order.
    pub fn format(&self) -> String {
        self.poly.format_with(|i| self.var_name(i))
    }

    pub fn record(&self) -> UniversalPolyRecord {
        let n = self.x_vars + self.y_vars;
        UniversalPolyRecord {
            variables: (0..n).map(|i| self.var_name(i)).collect(),
            terms: self.poly.records(n),
        }
    }

    /// Weight of a monomial in the x-block (`x_i` has weight `i`).
    pub fn x_weights(&self) -> impl Iterator<Item = u32> + '_ {
        let xv = self.x_vars;
        self.poly
            .terms()
            .map(move |(m, _)| (0..xv).map(|i| (i as u32 + 1) * m.exp(i)).sum())
    }

    pub fn y_weights(&self) -> impl Iterator<Item = u32> + '_ {
        let (xv, yv) = (self.x_vars, self.y_vars);
        self.poly
            .terms()
            .map(move |(m, _)| (0..yv).map(|i| (i as u32 + 1) * m.exp(xv + i)).sum())
    }
}

type Partition = Vec<u32>;

/// Partitions of `n` with at most `max_parts` parts, lexicographically
/// descending.
pub(crate) fn partitions(n: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, parts_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            rec(rem - part, part, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Number of 0-1 matrices with the given row and column sums.
fn count_01(rows: &[u32], cols: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), BigInt>) -> BigInt {
    let mut rows: Vec<u32> = rows.iter().copied().filter(|&r| r > 0).collect();
    rows.sort_unstable_by(|a, b| b.cmp(a));
    let cols: Vec<u32> = cols.iter().copied().filter(|&c| c > 0).collect();
    if rows.iter().sum::<u32>() != cols.iter().sum::<u32>() {
        return BigInt::zero();
    }
    count_rec(rows, cols, memo)
}

fn count_rec(
    rows: Vec<u32>,
    cols: Vec<u32>,
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), BigInt>,
) -> BigInt {
    let Some((&c, rest)) = cols.split_first() else {
        return if rows.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    if c as usize > rows.len() {
        return BigInt::zero();
    }
    let key = (rows.clone(), cols.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    // group rows by remaining sum; choose how many of each group get a 1
    let mut groups: Vec<(u32, usize)> = Vec::new();
    for &r in &rows {
        match groups.last_mut() {
            Some((v, n)) if *v == r => *n += 1,
            _ => groups.push((r, 1)),
        }
    }
    let mut total = BigInt::zero();
    let mut take = vec![0usize; groups.len()];
    fn distribute(
        g: usize,
        left: usize,
        groups: &[(u32, usize)],
        take: &mut Vec<usize>,
        rest: &[u32],
        total: &mut BigInt,
        memo: &mut HashMap<(Vec<u32>, Vec<u32>), BigInt>,
    ) {
        if g == groups.len() {
            if left != 0 {
                return;
            }
            let mut weight = BigInt::one();
            let mut next = Vec::new();
            for (i, &(v, n)) in groups.iter().enumerate() {
                weight *= binom(n, take[i]);
                next.extend(std::iter::repeat_n(v - 1, take[i]));
                next.extend(std::iter::repeat_n(v, n - take[i]));
            }
            next.retain(|&r| r > 0);
            next.sort_unstable_by(|a, b| b.cmp(a));
            *total += weight * count_rec(next, rest.to_vec(), memo);
            return;
        }
        let (_, n) = groups[g];
        for t in 0..=n.min(left) {
            take[g] = t;
            distribute(g + 1, left - t, groups, take, rest, total, memo);
        }
        take[g] = 0;
    }
    distribute(0, c as usize, &groups, &mut take, rest, &mut total, memo);
    memo.insert(key, total.clone());
    total
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Elementary exponents `d_k = α_k - α_{k+1}` of a dominant exponent vector.
fn e_exponents(alpha: &[u32]) -> Vec<u32> {
    (0..alpha.len())
        .map(|k| alpha[k] - alpha.get(k + 1).copied().unwrap_or(0))
        .collect()
}

/// Row sums of `Π e_k^{d_k}`: `d_k` rows of sum `k`.
fn e_rows(d: &[u32]) -> Vec<u32> {
    d.iter()
        .enumerate()
        .flat_map(|(k, &m)| std::iter::repeat_n(k as u32 + 1, m as usize))
        .collect()
}

/// Leading-term elimination restricted to dominant monomials.
///
/// `blocks[b] = (variables, weight)`; `coeffs` maps a tuple of partitions
/// (one per block) to the coefficient of that dominant monomial.
fn reduce_dominant(
    blocks: &[(usize, u32)],
    mut coeffs: BTreeMap<Vec<Partition>, BigInt>,
) -> MPoly {
    let per_block: Vec<Vec<Partition>> = blocks
        .iter()
        .map(|&(v, w)| partitions(w, v))
        .collect();
    // all tuples, lexicographically descending in the concatenated exponent vector
    let mut tuples: Vec<Vec<Partition>> = vec![Vec::new()];
    for parts in &per_block {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                parts.iter().map(move |p| {
                    let mut t = t.clone();
                    t.push(p.clone());
                    t
                })
            })
            .collect();
    }
    let pad = |t: &Vec<Partition>| -> Vec<u32> {
        t.iter()
            .zip(blocks)
            .flat_map(|(p, &(v, _))| (0..v).map(move |i| p.get(i).copied().unwrap_or(0)))
            .collect()
    };
    tuples.sort_by_key(|t| std::cmp::Reverse(pad(t)));

    let mut memo = HashMap::new();
    let mut out = MPoly::zero();
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0, |acc, &(v, _)| {
            let o = *acc;
            *acc += v;
            Some(o)
        })
        .collect();
    for (idx, lead) in tuples.iter().enumerate() {
        let c = coeffs.get(lead).cloned().unwrap_or_default();
        if c.is_zero() {
            continue;
        }
        let mut image = Vec::new();
        let mut rows = Vec::new();
        for (b, p) in lead.iter().enumerate() {
            let alpha: Vec<u32> = (0..blocks[b].0).map(|i| p.get(i).copied().unwrap_or(0)).collect();
            let d = e_exponents(&alpha);
            image.resize(offsets[b] + blocks[b].0, 0);
            image[offsets[b]..offsets[b] + blocks[b].0].copy_from_slice(&d);
            rows.push(e_rows(&d));
        }
        out.add_term(Monomial::new(image), c.clone());
        for lower in &tuples[idx..] {
            let mut count = BigInt::one();
            for (b, p) in lower.iter().enumerate() {
                count *= count_01(&rows[b], p, &mut memo);
                if count.is_zero() {
                    break;
                }
            }
            if !count.is_zero() {
                *coeffs.entry(lower.clone()).or_insert_with(BigInt::zero) -= &c * count;
            }
        }
    }
    debug_assert!(coeffs.values().all(|c| c.is_zero()));
    out
}

type UniversalCache = RwLock<HashMap<(usize, usize, bool), Arc<UniversalPoly>>>;

fn universal_cache() -> &'static UniversalCache {
    static CACHE: OnceLock<UniversalCache> =
        OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cached(
    key: (usize, usize, bool),
    build: impl FnOnce() -> UniversalPoly,
) -> Arc<UniversalPoly> {
    if let Some(p) = universal_cache().read().unwrap().get(&key) {
        return p.clone();
    }
    let p = Arc::new(build());
    universal_cache().write().unwrap().insert(key, p.clone());
    p
}

/// `P_n`: the coefficient of `tⁿ` in `Π_{i,j≤n} (1 + ξ_i η_j t)` written in
/// `x_k = e_k(ξ)` and `y_k = e_k(η)`.
pub fn universal_p(n: usize, limits: UniversalLimits) -> Result<Arc<UniversalPoly>> {
    if n == 0 {
        return Err(Error::InvalidArgument("P_n needs n >= 1".into()));
    }
    if n > limits.n_max {
        return Err(Error::Resource { what: "n", value: n, limit: limits.n_max });
    }
    Ok(cached((n, 0, false), || {
        let w = n as u32;
        let parts = partitions(w, n);
        let mut memo = HashMap::new();
        let mut coeffs = BTreeMap::new();
        for lam in &parts {
            for mu in &parts {
                let c = count_01(lam, mu, &mut memo);
                if !c.is_zero() {
                    coeffs.insert(vec![lam.clone(), mu.clone()], c);
                }
            }
        }
        UniversalPoly {
            poly: reduce_dominant(&[(n, w), (n, w)], coeffs),
            x_vars: n,
            y_vars: n,
        }
    }))
}

/// `P_{n,m}`: the coefficient of `tⁿ` in `Π_{|S|=m} (1 + ξ_S t)` over
/// `S ⊂ {1..nm}`, written in `x_k = e_k(ξ)`.
pub fn universal_p2(n: usize, m: usize, limits: UniversalLimits) -> Result<Arc<UniversalPoly>> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("P_{n,m} needs n, m >= 1".into()));
    }
    if n * m > limits.nm_max {
        return Err(Error::Resource { what: "n*m", value: n * m, limit: limits.nm_max });
    }
    Ok(cached((n, m, true), || {
        let v = n * m;
        let subsets = subsets_of_size(v, m);
        let mut coeffs: BTreeMap<Vec<Partition>, BigInt> = BTreeMap::new();
        let mut counts = vec![0u32; v];
        let mut choose = Vec::with_capacity(n);
        enumerate_combos(&subsets, n, 0, &mut choose, &mut counts, &mut |counts| {
            if counts.windows(2).all(|w| w[0] >= w[1]) {
                let lam: Partition = counts.iter().copied().filter(|&c| c > 0).collect();
                *coeffs.entry(vec![lam]).or_insert_with(BigInt::zero) += 1;
            }
        });
        UniversalPoly {
            poly: reduce_dominant(&[(v, v as u32)], coeffs),
            x_vars: v,
            y_vars: 0,
        }
    }))
}

fn subsets_of_size(v: usize, m: usize) -> Vec<Vec<usize>> {
    elementary_symmetric(m, v)
        .terms()
        .map(|(mono, _)| (0..v).filter(|&i| mono.exp(i) == 1).collect())
        .collect()
}

fn enumerate_combos(
    items: &[Vec<usize>],
    n: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    counts: &mut [u32],
    visit: &mut impl FnMut(&[u32]),
) {
    if chosen.len() == n {
        visit(counts);
        return;
    }
    let need = n - chosen.len();
    for i in start..items.len() {
        if items.len() - i < need {
            break;
        }
        for &j in &items[i] {
            counts[j] += 1;
        }
        chosen.push(i);
        enumerate_combos(items, n, i + 1, chosen, counts, visit);
        chosen.pop();
        for &j in &items[i] {
            counts[j] -= 1;
        }
    }
}

/// `P_n` by literal expansion of the product in `2n` variables followed by
/// [`reduce_to_elementary`]. Exponential in `n`; meant for cross-checks.
pub fn universal_p_by_expansion(n: usize) -> Result<UniversalPoly> {
    let mut prod = vec![MPoly::one()];
    // track the truncated polynomial in t as a vector of MPoly coefficients
    for i in 0..n {
        for j in 0..n {
            let lin = &MPoly::var(i) * &MPoly::var(n + j);
            let mut next = prod.clone();
            next.push(MPoly::zero());
            for k in 0..prod.len() {
                next[k + 1] = &next[k + 1] + &(&prod[k] * &lin);
            }
            next.truncate(n + 1);
            prod = next;
        }
    }
    let coeff = prod.get(n).cloned().unwrap_or_default();
    Ok(UniversalPoly {
        poly: reduce_to_elementary(&coeff, &[n, n])?,
        x_vars: n,
        y_vars: n,
    })
}

/// `P_{n,m}` by literal expansion; see [`universal_p_by_expansion`].
pub fn universal_p2_by_expansion(n: usize, m: usize) -> Result<UniversalPoly> {
    let v = n * m;
    let mut prod = vec![MPoly::one()];
    for s in subsets_of_size(v, m) {
        let mut mono = vec![0u32; v];
        for j in s {
            mono[j] = 1;
        }
        let lin = MPoly::term(Monomial::new(mono), BigInt::one());
        let mut next = prod.clone();
        next.push(MPoly::zero());
        for k in 0..prod.len() {
            next[k + 1] = &next[k + 1] + &(&prod[k] * &lin);
        }
        next.truncate(n + 1);
        prod = next;
    }
    let coeff = prod.get(n).cloned().unwrap_or_default();
    Ok(UniversalPoly {
        poly: reduce_to_elementary(&coeff, &[v])?,
        x_vars: v,
        y_vars: 0,
    })
}

/// `ψ^k` as a polynomial in `x_i = λ^i`, from the Newton recursion
/// `ψ^k = Σ_{i<k} (-1)^{i-1} λ^i ψ^{k-i} + (-1)^{k-1} k λ^k`.
pub fn newton_adams(k: usize) -> MPoly {
    assert!(k >= 1, "Adams operations are indexed from 1");
    let mut psi: Vec<MPoly> = Vec::with_capacity(k);
    for j in 1..=k {
        let mut p = MPoly::var(j - 1).scale(&BigInt::from(if j % 2 == 1 { j as i64 } else { -(j as i64) }));
        for i in 1..j {
            let term = &MPoly::var(i - 1) * &psi[j - i - 1];
            p = if i % 2 == 1 { &p + &term } else { &p - &term };
        }
        psi.push(p);
    }
    psi.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numtheory::binomial;
    use crate::algebra::Integers;

    fn x(i: usize) -> MPoly {
        MPoly::var(i)
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn elementary_examples() {
        let e23 = elementary_symmetric(2, 3);
        let expect = &(&(&x(0) * &x(1)) + &(&x(0) * &x(2))) + &(&x(1) * &x(2));
        assert_eq!(e23, expect);
        assert_eq!(elementary_symmetric(0, 5), MPoly::one());
        assert_eq!(elementary_symmetric(3, 3), &(&x(0) * &x(1)) * &x(2));
        assert!(elementary_symmetric(4, 3).is_zero());
    }

    #[test]
    fn reduction_examples() {
        // x1^2 + x2^2 = e1^2 - 2 e2
        let p = &x(0).pow(2) + &x(1).pow(2);
        let q = reduce_to_elementary(&p, &[2]).unwrap();
        assert_eq!(q, &x(0).pow(2) - &x(1).scale(&int(2)));
        // e_k is a fixed point
        let q = reduce_to_elementary(&elementary_symmetric(2, 4), &[4]).unwrap();
        assert_eq!(q, x(1));
        // (x1 x2 x3)^2 = e3^2
        let p = (&(&x(0) * &x(1)) * &x(2)).pow(2);
        assert_eq!(reduce_to_elementary(&p, &[3]).unwrap(), x(2).pow(2));
    }

    #[test]
    fn reduction_rejects_asymmetric_input() {
        let p = &x(0).pow(2) + &x(1);
        assert_eq!(
            reduce_to_elementary(&p, &[2]),
            Err(Error::NotSymmetric { first: 0, second: 1 })
        );
        // symmetric in each block separately is fine, across blocks is not needed
        let p = &x(0) + &x(1).scale(&int(3));
        assert!(reduce_to_elementary(&p, &[1, 1]).is_ok());
        assert!(reduce_to_elementary(&p, &[2]).is_err());
    }

    #[test]
    fn reduction_round_trips() {
        // substitute the e_k back in and recover the input
        let p = &(&x(0).pow(3) + &x(1).pow(3)) + &x(2).pow(3);
        let q = reduce_to_elementary(&p, &[3]).unwrap();
        let es: Vec<MPoly> = (1..=3).map(|k| elementary_symmetric(k, 3)).collect();
        assert_eq!(q.eval(&crate::algebra::MPolyRing, &es), p);
    }

    #[test]
    fn partition_listing() {
        assert_eq!(partitions(4, 4).len(), 5);
        assert_eq!(partitions(6, 6).len(), 11);
        assert_eq!(partitions(4, 2), vec![vec![4], vec![3, 1], vec![2, 2]]);
    }

    #[test]
    fn zero_one_matrix_counts() {
        let mut memo = HashMap::new();
        // 2x2 matrices with all margins 1: the two permutation matrices
        assert_eq!(count_01(&[1, 1], &[1, 1], &mut memo), int(2));
        // rows (2,1) columns (1,1,1): choose the single 1 of row two
        assert_eq!(count_01(&[2, 1], &[1, 1, 1], &mut memo), int(3));
        assert_eq!(count_01(&[3], &[1, 1], &mut memo), int(0));
    }

    #[test]
    fn universal_p_small_values() {
        let lim = UniversalLimits::default();
        assert_eq!(universal_p(1, lim).unwrap().format(), "x1*y1");
        assert_eq!(
            universal_p(2, lim).unwrap().format(),
            "x1^2*y2 + x2*y1^2 - 2*x2*y2"
        );
    }

    #[test]
    fn universal_p2_small_values() {
        let lim = UniversalLimits::default();
        assert_eq!(universal_p2(2, 2, lim).unwrap().format(), "x1*x3 - x4");
        for m in 1..=4 {
            assert_eq!(universal_p2(1, m, lim).unwrap().poly, x(m - 1));
        }
        for n in 1..=4 {
            assert_eq!(universal_p2(n, 1, lim).unwrap().poly, x(n - 1));
        }
    }

    #[test]
    fn fast_route_matches_literal_expansion() {
        let lim = UniversalLimits::default();
        for n in 1..=3 {
            assert_eq!(universal_p(n, lim).unwrap().poly, universal_p_by_expansion(n).unwrap().poly);
        }
        for (n, m) in [(1, 2), (2, 1), (2, 2), (3, 1), (1, 3)] {
            assert_eq!(
                universal_p2(n, m, lim).unwrap().poly,
                universal_p2_by_expansion(n, m).unwrap().poly,
                "P_{{{n},{m}}}"
            );
        }
    }

    #[test]
    fn isobaric_weights() {
        let lim = UniversalLimits::default();
        for n in 1..=6 {
            let p = universal_p(n, lim).unwrap();
            assert!(p.x_weights().all(|w| w == n as u32), "P_{n} x-weight");
            assert!(p.y_weights().all(|w| w == n as u32), "P_{n} y-weight");
        }
        for n in 1..=8 {
            for m in 1..=8 / n {
                let p = universal_p2(n, m, lim).unwrap();
                assert!(p.x_weights().all(|w| w == (n * m) as u32));
            }
        }
    }

    #[test]
    fn specialising_y_to_one_gives_x_n() {
        let lim = UniversalLimits::default();
        for n in 1..=6 {
            let p = universal_p(n, lim).unwrap();
            let mut vals: Vec<MPoly> = (0..n).map(x).collect();
            vals.push(MPoly::one());
            vals.extend((1..n).map(|_| MPoly::zero()));
            assert_eq!(p.poly.eval(&crate::algebra::MPolyRing, &vals), x(n - 1), "n = {n}");
        }
    }

    #[test]
    fn limits_are_enforced() {
        let lim = UniversalLimits { n_max: 3, nm_max: 4 };
        assert!(matches!(universal_p(4, lim), Err(Error::Resource { .. })));
        assert!(matches!(universal_p2(2, 3, lim), Err(Error::Resource { .. })));
    }

    #[test]
    fn newton_examples() {
        assert_eq!(newton_adams(1), x(0));
        assert_eq!(newton_adams(2), &x(0).pow(2) - &x(1).scale(&int(2)));
        let psi3 = &(&x(0).pow(3) - &(&x(0) * &x(1)).scale(&int(3))) + &x(2).scale(&int(3));
        assert_eq!(newton_adams(3), psi3);
    }

    #[test]
    fn newton_on_binomials_is_trivial() {
        for k in 1..=6 {
            let psi = newton_adams(k);
            for m in -10i64..=10 {
                let vals: Vec<BigInt> = (1..=k).map(|i| binomial(&int(m), i)).collect();
                assert_eq!(psi.eval(&Integers, &vals), int(m), "k = {k}, m = {m}");
            }
        }
    }
}
