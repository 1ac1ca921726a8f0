//! C ABI over `lforge`.
//!
//! Every fallible function returns an [`LfStatus`]; on failure the message is
//! kept per thread and read back with [`lf_last_error_message`]. Handles are
//! opaque and released with their matching `_free` function. Strings handed
//! out by the library are released with [`lf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;

use lforge::algebra::{Integers, UPoly};
use lforge::closure::{is_lambda_stable, StabilityVerdict};
use lforge::error::Error;
use lforge::f1mod::{hom_count, validate_module, F1Module};
use lforge::parse::parse_upoly;
use lforge::symmetric::{universal_p, universal_p2, UniversalLimits};
use lforge::witt::{ghost, witt_add, witt_mul, WittVector};
use lforge::zeta::{euler_product, SArg, ZetaSpec};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Truncation = 5,
    Integrality = 6,
    Resource = 7,
    Domain = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LfStability {
    Stable = 0,
    NotStable = 1,
    StableBounded = 2,
}

/// A polynomial in Z[x].
pub struct LfUPoly {
    inner: UPoly,
}

/// A truncated big Witt vector over Z.
pub struct LfWittVector {
    inner: WittVector<BigInt>,
}

/// A finite abelian group with a multiplicative family of endomorphisms.
pub struct LfF1Module {
    inner: F1Module,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LfStatus {
    match e {
        Error::Parse(_) => LfStatus::Parse,
        Error::InvalidArgument(_) => LfStatus::InvalidArgument,
        Error::Truncation { .. } => LfStatus::Truncation,
        Error::Integrality { .. } => LfStatus::Integrality,
        Error::Resource { .. } => LfStatus::Resource,
        _ => LfStatus::Domain,
    }
}

struct Fail(LfStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            LfStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            LfStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(LfStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(LfStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn give_string(s: String, out: &mut *mut c_char) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(LfStatus::Domain, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn lf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn lf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `P_n` as JSON: `{"polynomial", "variables", "terms"}`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_universal_p_json(n: usize, out: *mut *mut c_char) -> LfStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let p = universal_p(n, UniversalLimits::default())?;
        give_string(universal_json(&p), out)
    })
}

/// `P_{n,m}` as JSON, same shape as [`lf_universal_p_json`].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_universal_pnm_json(n: usize, m: usize, out: *mut *mut c_char) -> LfStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let p = universal_p2(n, m, UniversalLimits::default())?;
        give_string(universal_json(&p), out)
    })
}

fn universal_json(p: &lforge::symmetric::UniversalPoly) -> String {
    let r = p.record();
    serde_json::json!({ "polynomial": p.format(), "variables": r.variables, "terms": r.terms }).to_string()
}

/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_upoly_parse(text: *const c_char, out: *mut *mut LfUPoly) -> LfStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let inner = parse_upoly(read_str(text, "text")?)?;
        *out = Box::into_raw(Box::new(LfUPoly { inner }));
        Ok(())
    })
}

/// # Safety
/// `p` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_upoly_to_string(p: *const LfUPoly, out: *mut *mut c_char) -> LfStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        give_string(handle(p, "poly")?.inner.to_string(), out)
    })
}

/// Λ-stability of the ideal `(f)`. `witness_k` receives the first failing
/// `k` for `NotStable` and `k_max` for `StableBounded`, otherwise 0.
///
/// # Safety
/// `p` must be a valid handle; `verdict` and `witness_k` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lf_upoly_lambda_stable(
    p: *const LfUPoly,
    k_max: usize,
    verdict: *mut LfStability,
    witness_k: *mut u64,
) -> LfStatus {
    guard(|| {
        let f = &handle(p, "poly")?.inner;
        let verdict = out_ref(verdict, "verdict")?;
        let witness_k = out_ref(witness_k, "witness_k")?;
        (*verdict, *witness_k) = match is_lambda_stable(f, k_max)? {
            StabilityVerdict::Stable { .. } => (LfStability::Stable, 0),
            StabilityVerdict::NotStable { witness_k } => (LfStability::NotStable, witness_k),
            StabilityVerdict::StableBounded { k_max } => (LfStability::StableBounded, k_max),
        };
        Ok(())
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lf_upoly_free(p: *mut LfUPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `comps` must point to `len` integers; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_witt_from_i64(comps: *const i64, len: usize, out: *mut *mut LfWittVector) -> LfStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let comps = slice(comps, len, "comps")?;
        let inner = WittVector::new(comps.iter().map(|&c| BigInt::from(c)).collect());
        *out = Box::into_raw(Box::new(LfWittVector { inner }));
        Ok(())
    })
}

type WittOp = fn(&Integers, &WittVector<BigInt>, &WittVector<BigInt>) -> lforge::error::Result<WittVector<BigInt>>;

unsafe fn witt_binary(
    a: *const LfWittVector,
    b: *const LfWittVector,
    out: *mut *mut LfWittVector,
    op: WittOp,
) -> LfStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let inner = op(&Integers, &handle(a, "a")?.inner, &handle(b, "b")?.inner)?;
        *out = Box::into_raw(Box::new(LfWittVector { inner }));
        Ok(())
    })
}

/// Witt sum; both vectors must have the same length.
///
/// # Safety
/// `a`, `b` must be valid handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_witt_add(
    a: *const LfWittVector,
    b: *const LfWittVector,
    out: *mut *mut LfWittVector,
) -> LfStatus {
    witt_binary(a, b, out, witt_add)
}

/// Witt product; both vectors must have the same length.
///
/// # Safety
/// `a`, `b` must be valid handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_witt_mul(
    a: *const LfWittVector,
    b: *const LfWittVector,
    out: *mut *mut LfWittVector,
) -> LfStatus {
    witt_binary(a, b, out, witt_mul)
}

/// # Safety
/// `w` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn lf_witt_len(w: *const LfWittVector) -> usize {
    w.as_ref().map_or(0, |w| w.inner.len())
}

/// Component `a_{index+1}` as a decimal string.
///
/// # Safety
/// `w` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_witt_component(w: *const LfWittVector, index: usize, out: *mut *mut c_char) -> LfStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let w = &handle(w, "witt")?.inner;
        let c = w.comps.get(index).ok_or_else(|| {
            Fail(LfStatus::InvalidArgument, format!("index {index} out of range for length {}", w.len()))
        })?;
        give_string(c.to_string(), out)
    })
}

/// Components and ghost coordinates as JSON: `{"components", "ghost"}`.
///
/// # Safety
/// `w` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_witt_to_json(w: *const LfWittVector, out: *mut *mut c_char) -> LfStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let w = &handle(w, "witt")?.inner;
        let strings = |v: &[BigInt]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        let json = serde_json::json!({
            "components": strings(&w.comps),
            "ghost": strings(&ghost(&Integers, w)),
        });
        give_string(json.to_string(), out)
    })
}

/// # Safety
/// `w` must be NULL or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lf_witt_free(w: *mut LfWittVector) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

fn checked_module(inner: F1Module) -> Result<*mut LfF1Module, Fail> {
    let v = validate_module(&inner);
    if let Some((n, m)) = v.witness.filter(|_| !v.valid) {
        return Err(Fail(LfStatus::InvalidArgument, format!("not a module: fails at n = {n}, m = {m}")));
    }
    Ok(Box::into_raw(Box::new(LfF1Module { inner })))
}

/// `C_n` with `λ_k` multiplication by `scalars[k-1]`, `k ≤ len`.
///
/// # Safety
/// `scalars` must point to `len` integers; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_f1module_cyclic(
    n: u64,
    scalars: *const i64,
    len: usize,
    out: *mut *mut LfF1Module,
) -> LfStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        if n == 0 {
            return Err(Fail(LfStatus::InvalidArgument, "group order must be positive".into()));
        }
        *out = checked_module(F1Module::cyclic_scalars(n, slice(scalars, len, "scalars")?))?;
        Ok(())
    })
}

/// `C_p` with `λ_q` given at the primes `q ≤ bound` and extended
/// multiplicatively.
///
/// # Safety
/// `values` must point to `len` integers; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_f1module_from_prime_values(
    p: u64,
    bound: usize,
    values: *const u64,
    len: usize,
    out: *mut *mut LfF1Module,
) -> LfStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        if !lforge::algebra::numtheory::is_prime(p) {
            return Err(Fail(LfStatus::InvalidArgument, format!("{p} is not prime")));
        }
        if bound == 0 {
            return Err(Fail(LfStatus::InvalidArgument, "bound must be positive".into()));
        }
        *out = checked_module(F1Module::from_prime_values(p, bound, slice(values, len, "values")?))?;
        Ok(())
    })
}

/// Number of morphisms from the module to the affine line.
///
/// # Safety
/// `m` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_f1module_hom_count(m: *const LfF1Module, out: *mut u64) -> LfStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = hom_count(&handle(m, "module")?.inner);
        Ok(())
    })
}

/// # Safety
/// `m` must be NULL or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lf_f1module_free(m: *mut LfF1Module) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Truncated Euler product. `spec` is `primes`, `monoid-cat`, `f1-modules`
/// or `custom:2,3,...`; `s` must exceed 1. `value` and `tail_bound` receive
/// decimal strings.
///
/// # Safety
/// `spec` must be a NUL-terminated string; the out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_zeta_euler(
    spec: *const c_char,
    s: f64,
    bound: u64,
    bits: u32,
    value: *mut *mut c_char,
    tail_bound: *mut *mut c_char,
) -> LfStatus {
    guard(|| {
        let value = out_ref(value, "value")?;
        let tail_bound = out_ref(tail_bound, "tail_bound")?;
        let spec: ZetaSpec = read_str(spec, "spec")?.parse()?;
        let s: SArg = s.to_string().parse()?;
        let r = euler_product(&spec, s, bound, bits)?;
        let v = CString::new(r.value).map_err(|_| Fail(LfStatus::Domain, "bad value".into()))?;
        give_string(r.tail_bound, tail_bound)?;
        *value = v.into_raw();
        Ok(())
    })
}
