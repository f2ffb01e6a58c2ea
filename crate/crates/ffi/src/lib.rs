//! C ABI over `rho-core`.
//!
//! Exact values cross the boundary as NUL-terminated `p/q` strings owned by
//! the library; release them with [`rho_string_free`]. Every call returns a
//! [`RhoStatus`]; on failure [`rho_last_error`] describes what went wrong.
//! A [`RhoContext`] holds the memo tables and may be shared across threads.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rho_core::error::order;
use rho_core::exact::{parse_rational, Rational};
use rho_core::harmonic::{c, harmonic};
use rho_core::numeric::{coffey_moment, quad_c};
use rho_core::pochhammer::{pochhammer_deriv, recip_deriv};
use rho_core::stirling::{gen_bernoulli, stirling_first, stirling_second};
use rho_core::{Error, Tables};

/// Opaque handle to a set of memo tables.
pub struct RhoContext {
    tables: Tables,
}

/// Result of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoStatus {
    Ok = 0,
    InvalidArgument = 1,
    Pole = 2,
    CapacityExceeded = 3,
    Convergence = 4,
    NullPointer = 5,
    Utf8 = 6,
    Panic = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

enum Failure {
    Core(Error),
    Null(&'static str),
    Utf8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::Core(e)
    }
}

fn status_of(f: &Failure) -> RhoStatus {
    match f {
        Failure::Core(Error::Pole(_)) => RhoStatus::Pole,
        Failure::Core(Error::CacheCapExceeded { .. }) => RhoStatus::CapacityExceeded,
        Failure::Core(Error::QuadratureBudget { .. }) => RhoStatus::Convergence,
        Failure::Core(_) => RhoStatus::InvalidArgument,
        Failure::Null(_) => RhoStatus::NullPointer,
        Failure::Utf8 => RhoStatus::Utf8,
    }
}

/// Runs `body`, turning errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> RhoStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            RhoStatus::Ok
        }
        Ok(Err(f)) => {
            set_error(&match &f {
                Failure::Core(e) => e.to_string(),
                Failure::Null(what) => format!("{what} is a null pointer"),
                Failure::Utf8 => "argument is not valid UTF-8".to_string(),
            });
            status_of(&f)
        }
        Err(_) => {
            set_error("internal panic");
            RhoStatus::Panic
        }
    }
}

unsafe fn context<'a>(ctx: *const RhoContext) -> Result<&'a Tables, Failure> {
    // SAFETY: the caller passes a pointer from `rho_context_new` or null.
    unsafe { ctx.as_ref() }.map(|c| &c.tables).ok_or(Failure::Null("context"))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::Null("string argument"));
    }
    // SAFETY: non-null and NUL-terminated by contract.
    unsafe { CStr::from_ptr(s) }.to_str().map_err(|_| Failure::Utf8)
}

unsafe fn put_string(out: *mut *mut c_char, v: &Rational) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    let s = CString::new(v.to_string()).expect("rationals print without NUL");
    // SAFETY: `out` is non-null and writable by contract.
    unsafe { *out = s.into_raw() };
    Ok(())
}

unsafe fn put_f64(out: *mut f64, v: f64) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    // SAFETY: `out` is non-null and writable by contract.
    unsafe { *out = v };
    Ok(())
}

fn non_negative(v: i64, min: i64) -> Result<usize, Failure> {
    if v < min {
        return Err(Error::DegreeTooSmall { min, got: v }.into());
    }
    Ok(v as usize)
}

/// New memo tables holding at most `cap` entries each; 0 means unbounded.
/// Returns null only if allocation panics.
#[no_mangle]
pub extern "C" fn rho_context_new(cap: u64) -> *mut RhoContext {
    catch_unwind(|| {
        let cap = if cap == 0 { None } else { Some(usize::try_from(cap).unwrap_or(usize::MAX)) };
        Box::into_raw(Box::new(RhoContext { tables: Tables::with_cap(cap) }))
    })
    .unwrap_or(ptr::null_mut())
}

/// Releases a context. Null is ignored.
///
/// # Safety
/// `ctx` must come from [`rho_context_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rho_context_free(ctx: *mut RhoContext) {
    if !ctx.is_null() {
        // SAFETY: ownership returns from `rho_context_new`.
        drop(unsafe { Box::from_raw(ctx) });
    }
}

/// Releases a string returned through an `out` parameter. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rho_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: the string was produced by `CString::into_raw`.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Message of the last failed call on this thread, or an empty string.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn rho_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// The Roman harmonic number c_n^(k).
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rho_c(ctx: *const RhoContext, n: i64, k: i64, out: *mut *mut c_char) -> RhoStatus {
    guard(|| unsafe { put_string(out, &c(context(ctx)?, n, order(k)?)?) })
}

/// The Stirling number of the first kind s(n, k) for any integer n.
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rho_stirling_first(
    ctx: *const RhoContext,
    n: i64,
    k: i64,
    out: *mut *mut c_char,
) -> RhoStatus {
    guard(|| unsafe { put_string(out, &stirling_first(context(ctx)?, n, order(k)?)?) })
}

/// The Stirling number of the second kind S(n, k).
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rho_stirling_second(
    ctx: *const RhoContext,
    n: i64,
    k: i64,
    out: *mut *mut c_char,
) -> RhoStatus {
    guard(|| unsafe {
        let v = stirling_second(context(ctx)?, non_negative(n, 0)?, order(k)?)?;
        put_string(out, &Rational::from_integer(v))
    })
}

/// The generalized Bernoulli number B_j^(m).
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rho_bernoulli(ctx: *const RhoContext, m: i64, j: i64, out: *mut *mut c_char) -> RhoStatus {
    guard(|| unsafe { put_string(out, &gen_bernoulli(context(ctx)?, non_negative(m, 1)?, order(j)?)?) })
}

/// The generalized harmonic number H_n^(k).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rho_harmonic(n: i64, k: i64, out: *mut *mut c_char) -> RhoStatus {
    guard(|| unsafe { put_string(out, &harmonic(non_negative(n, 0)?, order(k)?)) })
}

/// The k-th derivative of (x)_n at the rational `at` ("p/q" or an integer).
///
/// # Safety
/// `ctx` must be a live context, `at` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rho_pochhammer_deriv(
    ctx: *const RhoContext,
    n: i64,
    k: i64,
    at: *const c_char,
    out: *mut *mut c_char,
) -> RhoStatus {
    guard(|| unsafe {
        let x = parse_rational(text(at)?)?;
        put_string(out, &pochhammer_deriv(context(ctx)?, non_negative(n, 1)?, order(k)?, &x)?)
    })
}

/// The k-th derivative of 1/(x)_n at the rational `at`; poles report
/// `RHO_STATUS_POLE`.
///
/// # Safety
/// `at` must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rho_recip_deriv(n: i64, k: i64, at: *const c_char, out: *mut *mut c_char) -> RhoStatus {
    guard(|| unsafe {
        let x = parse_rational(text(at)?)?;
        put_string(out, &recip_deriv(non_negative(n, 1)?, order(k)?, &x)?)
    })
}

/// The p-th moment of 2(D-1) e^(-2t) (1-e^(-2t))^(D-2) by quadrature.
///
/// # Safety
/// `value` and `est_error` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rho_coffey_moment(
    d: i64,
    p: i64,
    tol: f64,
    value: *mut f64,
    est_error: *mut f64,
) -> RhoStatus {
    guard(|| unsafe {
        let r = coffey_moment(non_negative(d, 2)?, order(p)?, tol)?;
        put_f64(value, r.value)?;
        put_f64(est_error, r.est_error)
    })
}

/// c_n^(k) from its integral representation by quadrature.
///
/// # Safety
/// `value` and `est_error` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rho_quad_c(n: i64, k: i64, tol: f64, value: *mut f64, est_error: *mut f64) -> RhoStatus {
    guard(|| unsafe {
        let r = quad_c(non_negative(n, 1)?, order(k)?, tol)?;
        put_f64(value, r.value)?;
        put_f64(est_error, r.est_error)
    })
}
