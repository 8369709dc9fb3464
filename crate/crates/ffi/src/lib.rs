//! C ABI for the filippov crate. Algebras travel as opaque handles or as
//! the canonical JSON documents; every entry point returns a status code
//! and leaves a message for `fa_last_error_message` on failure.
//!
//! Ownership rules: handles returned through out-pointers belong to the
//! caller and are released with the matching `*_free`; strings returned
//! through out-pointers are released with `fa_string_free`.

// the module docs above state the pointer contract once for all entry points
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use filippov::io;
use filippov::{
    contract_fa, induce, iw_contract_lie, ww_contract_lie, Error, Grading, InducedLie,
    LieAlgebra, NLieAlgebra, Splitting,
};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FaStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    IdentityViolated = 5,
    NotSubalgebra = 6,
    GradingViolation = 7,
    Internal = 8,
}

/// Opaque n-Lie algebra handle.
pub struct FaAlgebra(NLieAlgebra);

/// Opaque Lie algebra handle.
pub struct FaLie(LieAlgebra);

/// Opaque inner-derivation algebra handle.
pub struct FaInduced(InducedLie);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let cleaned = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = Some(CString::new(cleaned).expect("no interior NUL"));
    });
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
}

fn status_of(err: &Error) -> FaStatus {
    match err {
        Error::Json(_) | Error::InvalidNumber(_) | Error::Io(_) => FaStatus::ParseError,
        Error::UnverifiedAlgebra => FaStatus::IdentityViolated,
        Error::NotASubalgebra(_) => FaStatus::NotSubalgebra,
        Error::GradingViolation { .. } => FaStatus::GradingViolation,
        Error::InternalSpanError => FaStatus::Internal,
        _ => FaStatus::InvalidInput,
    }
}

fn fail(err: &Error) -> FaStatus {
    set_last_error(&err.to_string());
    status_of(err)
}

/// Runs a closure, converting panics into `Internal` instead of unwinding
/// across the C boundary.
fn guarded(body: impl FnOnce() -> FaStatus) -> FaStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_last_error("internal panic");
            FaStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, FaStatus> {
    if ptr.is_null() {
        set_last_error("null string argument");
        return Err(FaStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_last_error("string is not valid UTF-8");
        FaStatus::InvalidUtf8
    })
}

unsafe fn read_slice<'a, T>(ptr: *const T, len: usize) -> Result<&'a [T], FaStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        set_last_error("null array argument");
        return Err(FaStatus::NullArgument);
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

unsafe fn deref<'a, T>(ptr: *const T) -> Result<&'a T, FaStatus> {
    if ptr.is_null() {
        set_last_error("null handle");
        return Err(FaStatus::NullArgument);
    }
    Ok(&*ptr)
}

fn write_handle<T>(out: *mut *mut T, value: T) -> FaStatus {
    if out.is_null() {
        set_last_error("null out-pointer");
        return FaStatus::NullArgument;
    }
    unsafe {
        *out = Box::into_raw(Box::new(value));
    }
    FaStatus::Ok
}

fn write_string(out: *mut *mut c_char, value: String) -> FaStatus {
    if out.is_null() {
        set_last_error("null out-pointer");
        return FaStatus::NullArgument;
    }
    match CString::new(value) {
        Ok(s) => {
            unsafe {
                *out = s.into_raw();
            }
            FaStatus::Ok
        }
        Err(_) => {
            set_last_error("output contained an interior NUL byte");
            FaStatus::Internal
        }
    }
}

/// Message for the most recent failure on this thread, or NULL after a
/// success. The pointer stays valid until the next call on the thread.
#[no_mangle]
pub extern "C" fn fa_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |s| s.as_ptr())
    })
}

/// Frees a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn fa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an algebra from its canonical JSON document.
#[no_mangle]
pub unsafe extern "C" fn fa_algebra_from_json(
    json: *const c_char,
    out: *mut *mut FaAlgebra,
) -> FaStatus {
    guarded(|| {
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match io::algebra_from_json(text) {
            Ok(alg) => write_handle(out, FaAlgebra(alg)),
            Err(e) => fail(&e),
        }
    })
}

/// Serializes an algebra to canonical JSON.
#[no_mangle]
pub unsafe extern "C" fn fa_algebra_to_json(
    alg: *const FaAlgebra,
    out: *mut *mut c_char,
) -> FaStatus {
    guarded(|| {
        let alg = match deref(alg) {
            Ok(a) => a,
            Err(s) => return s,
        };
        write_string(out, io::algebra_to_json(&alg.0))
    })
}

#[no_mangle]
pub unsafe extern "C" fn fa_algebra_free(alg: *mut FaAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Builds the simple Euclidean n-Lie algebra of dimension n+1; n >= 2.
#[no_mangle]
pub unsafe extern "C" fn fa_simple(n: usize, out: *mut *mut FaAlgebra) -> FaStatus {
    guarded(|| {
        if n < 2 {
            set_last_error("n must be at least 2");
            return FaStatus::InvalidInput;
        }
        write_handle(out, FaAlgebra(NLieAlgebra::simple(n)))
    })
}

#[no_mangle]
pub unsafe extern "C" fn fa_algebra_arity(alg: *const FaAlgebra) -> usize {
    deref(alg).map_or(0, |a| a.0.arity())
}

#[no_mangle]
pub unsafe extern "C" fn fa_algebra_dim(alg: *const FaAlgebra) -> usize {
    deref(alg).map_or(0, |a| a.0.dim())
}

/// Exhaustive Filippov-identity check; writes true into `holds` on success.
#[no_mangle]
pub unsafe extern "C" fn fa_verify_fi(alg: *const FaAlgebra, holds: *mut bool) -> FaStatus {
    guarded(|| {
        let alg = match deref(alg) {
            Ok(a) => a,
            Err(s) => return s,
        };
        if holds.is_null() {
            set_last_error("null out-pointer");
            return FaStatus::NullArgument;
        }
        *holds = alg.0.verify_fi().holds();
        FaStatus::Ok
    })
}

fn verified(alg: &NLieAlgebra) -> Result<NLieAlgebra, FaStatus> {
    alg.clone().verified().map_err(|report| {
        set_last_error(&format!("Filippov identity fails: {report}"));
        FaStatus::IdentityViolated
    })
}

/// Contraction with respect to the subalgebra spanned by the 1-based
/// coordinates in `i0`.
#[no_mangle]
pub unsafe extern "C" fn fa_contract(
    alg: *const FaAlgebra,
    i0: *const usize,
    i0_len: usize,
    out: *mut *mut FaAlgebra,
) -> FaStatus {
    guarded(|| {
        let alg = match deref(alg) {
            Ok(a) => a,
            Err(s) => return s,
        };
        let i0 = match read_slice(i0, i0_len) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let checked = match verified(&alg.0) {
            Ok(a) => a,
            Err(s) => return s,
        };
        let splitting = match Splitting::new(checked.dim(), i0.iter().copied()) {
            Ok(s) => s,
            Err(e) => return fail(&e),
        };
        match contract_fa(&checked, &splitting) {
            Ok(c) => write_handle(out, FaAlgebra(c)),
            Err(e) => fail(&e),
        }
    })
}

/// Lie algebra of inner derivations; the input is FI-checked first.
#[no_mangle]
pub unsafe extern "C" fn fa_induce(
    alg: *const FaAlgebra,
    out: *mut *mut FaInduced,
) -> FaStatus {
    guarded(|| {
        let alg = match deref(alg) {
            Ok(a) => a,
            Err(s) => return s,
        };
        let checked = match verified(&alg.0) {
            Ok(a) => a,
            Err(s) => return s,
        };
        match induce(&checked) {
            Ok(il) => write_handle(out, FaInduced(il)),
            Err(e) => fail(&e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn fa_induced_free(il: *mut FaInduced) {
    if !il.is_null() {
        drop(Box::from_raw(il));
    }
}

#[no_mangle]
pub unsafe extern "C" fn fa_induced_lie_dim(il: *const FaInduced) -> usize {
    deref(il).map_or(0, |i| i.0.lie.dim())
}

#[no_mangle]
pub unsafe extern "C" fn fa_induced_kernel_dim(il: *const FaInduced) -> usize {
    deref(il).map_or(0, |i| i.0.kernel.dim())
}

/// Serializes the full induced structure (lie, basis words, ad map, kernel).
#[no_mangle]
pub unsafe extern "C" fn fa_induced_to_json(
    il: *const FaInduced,
    out: *mut *mut c_char,
) -> FaStatus {
    guarded(|| {
        let il = match deref(il) {
            Ok(i) => i,
            Err(s) => return s,
        };
        write_string(out, io::induced_to_json(&il.0))
    })
}

/// Clones the Lie-algebra part of an induced structure.
#[no_mangle]
pub unsafe extern "C" fn fa_induced_lie(
    il: *const FaInduced,
    out: *mut *mut FaLie,
) -> FaStatus {
    guarded(|| {
        let il = match deref(il) {
            Ok(i) => i,
            Err(s) => return s,
        };
        write_handle(out, FaLie(il.0.lie.clone()))
    })
}

/// Parses a Lie algebra from either the plain arity-2 document or a full
/// induced-algebra document.
#[no_mangle]
pub unsafe extern "C" fn fa_lie_from_json(
    json: *const c_char,
    out: *mut *mut FaLie,
) -> FaStatus {
    guarded(|| {
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match io::lie_from_json_flexible(text) {
            Ok((lie, _)) => write_handle(out, FaLie(lie)),
            Err(e) => fail(&e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn fa_lie_to_json(lie: *const FaLie, out: *mut *mut c_char) -> FaStatus {
    guarded(|| {
        let lie = match deref(lie) {
            Ok(l) => l,
            Err(s) => return s,
        };
        write_string(out, io::lie_to_json(&lie.0))
    })
}

#[no_mangle]
pub unsafe extern "C" fn fa_lie_free(lie: *mut FaLie) {
    if !lie.is_null() {
        drop(Box::from_raw(lie));
    }
}

#[no_mangle]
pub unsafe extern "C" fn fa_lie_dim(lie: *const FaLie) -> usize {
    deref(lie).map_or(0, |l| l.0.dim())
}

/// Exhaustive Jacobi-identity check.
#[no_mangle]
pub unsafe extern "C" fn fa_verify_ji(lie: *const FaLie, holds: *mut bool) -> FaStatus {
    guarded(|| {
        let lie = match deref(lie) {
            Ok(l) => l,
            Err(s) => return s,
        };
        if holds.is_null() {
            set_last_error("null out-pointer");
            return FaStatus::NullArgument;
        }
        *holds = lie.0.verify_ji().holds();
        FaStatus::Ok
    })
}

fn verified_lie(lie: &LieAlgebra) -> Result<LieAlgebra, FaStatus> {
    lie.clone().verified().map_err(|report| {
        set_last_error(&format!("Jacobi identity fails: {report}"));
        FaStatus::IdentityViolated
    })
}

/// İnönü-Wigner contraction with respect to the subalgebra spanned by the
/// 1-based coordinates.
#[no_mangle]
pub unsafe extern "C" fn fa_iw_contract(
    lie: *const FaLie,
    subalgebra: *const usize,
    len: usize,
    out: *mut *mut FaLie,
) -> FaStatus {
    guarded(|| {
        let lie = match deref(lie) {
            Ok(l) => l,
            Err(s) => return s,
        };
        let indices = match read_slice(subalgebra, len) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let checked = match verified_lie(&lie.0) {
            Ok(l) => l,
            Err(s) => return s,
        };
        match iw_contract_lie(&checked, indices) {
            Ok(c) => write_handle(out, FaLie(c)),
            Err(e) => fail(&e),
        }
    })
}

/// Weimar-Woods contraction under the given weights, one per basis element.
#[no_mangle]
pub unsafe extern "C" fn fa_ww_contract(
    lie: *const FaLie,
    weights: *const u32,
    len: usize,
    out: *mut *mut FaLie,
) -> FaStatus {
    guarded(|| {
        let lie = match deref(lie) {
            Ok(l) => l,
            Err(s) => return s,
        };
        let weights = match read_slice(weights, len) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let checked = match verified_lie(&lie.0) {
            Ok(l) => l,
            Err(s) => return s,
        };
        let grading = Grading {
            weights: weights.to_vec(),
        };
        match ww_contract_lie(&checked, &grading) {
            Ok(c) => write_handle(out, FaLie(c)),
            Err(e) => fail(&e),
        }
    })
}

/// Isomorphism-invariant fingerprint (dim, series, center, Killing rank) as
/// a JSON document.
#[no_mangle]
pub unsafe extern "C" fn fa_lie_fingerprint_json(
    lie: *const FaLie,
    out: *mut *mut c_char,
) -> FaStatus {
    guarded(|| {
        let lie = match deref(lie) {
            Ok(l) => l,
            Err(s) => return s,
        };
        let fp = lie.0.fingerprint();
        match serde_json::to_string_pretty(&fp) {
            Ok(mut s) => {
                s.push('\n');
                write_string(out, s)
            }
            Err(_) => {
                set_last_error("fingerprint serialization failed");
                FaStatus::Internal
            }
        }
    })
}
