use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::numtheory::divisors;
use super::upoly::UPoly;

fn cache() -> &'static RwLock<HashMap<u64, UPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, UPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The cyclotomic polynomial `Φ_d`, computed as `(x^d - 1) / Π_{d'|d, d'<d} Φ_{d'}`
/// by exact division and memoized process-wide.
pub fn cyclotomic(d: u64) -> UPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().read().unwrap().get(&d) {
        return p.clone();
    }
    let mut p = UPoly::x_pow_minus_one(d as usize);
    for e in divisors(d) {
        if e < d {
            p = p
                .exact_div(&cyclotomic(e))
                .expect("cyclotomic factors divide x^d - 1");
        }
    }
    cache().write().unwrap().insert(d, p.clone());
    p
}
