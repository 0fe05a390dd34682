//! C ABI over `hopfseq`.
//!
//! Objects are opaque handles owned by the caller and released with the
//! matching `hs_*_free`. Every fallible call returns an [`HsStatus`]; on
//! failure the message is available from [`hs_last_error`] on the same
//! thread. Strings returned through out-pointers are freed with
//! [`hs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use hopfseq::cli::targets;
use hopfseq::exact::{bicrossed_sequence, dualize_sequence};
use hopfseq::fusion::{a6_simplicity_check, family_simplicity_check, Verdict};
use hopfseq::group::{dump_group, PermGroup};
use hopfseq::hopf::{dump_hopf, load_hopf, verify_hopf_axioms, verify_hopf_axioms_sampled, HopfAlgebra};
use hopfseq::Error;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Verification = 4,
    CapExceeded = 5,
    Internal = 6,
}

/// Verdict of a simplicity certificate.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HsVerdict {
    Simple = 0,
    NotSimple = 1,
    Inconclusive = 2,
}

/// Opaque finite permutation group.
pub struct HsGroup(Arc<PermGroup>);

/// Opaque finite-dimensional Hopf algebra.
pub struct HsHopf(Arc<HopfAlgebra>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HsStatus {
    match e {
        Error::Parse { .. } | Error::InvalidArgument(_) | Error::InvalidPerm(_) => HsStatus::Parse,
        Error::CapExceeded { .. } => HsStatus::CapExceeded,
        Error::Verification(_)
        | Error::NotSubgroup(_)
        | Error::NotExactFactorization(_)
        | Error::DegreeMismatch { .. } => HsStatus::Verification,
        Error::Unsupported(_) | Error::Internal(_) => HsStatus::Internal,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), HsStatus>) -> HsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HsStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside hopfseq".into());
            HsStatus::Internal
        }
    }
}

fn fail(e: Error) -> HsStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, HsStatus> {
    if p.is_null() {
        set_error("null string argument".into());
        return Err(HsStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8".into());
        HsStatus::InvalidUtf8
    })
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, HsStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle".into());
        HsStatus::NullPointer
    })
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), HsStatus> {
    if out.is_null() {
        set_error("null output pointer".into());
        return Err(HsStatus::NullPointer);
    }
    out.write(v);
    Ok(())
}

fn to_cstring(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

/// Message of the last failed call on this thread, or NULL. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn hs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a group from a name ("A6", "S3", "Z2xS3") or a group file path.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_group_new(spec: *const c_char, out: *mut *mut HsGroup) -> HsStatus {
    guard(|| {
        let spec = read_str(spec)?;
        let g = targets::group(spec).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(HsGroup(g))))
    })
}

/// Order of the group, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_group_order(g: *const HsGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Writes the group in the text format to `*out`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_group_dump(g: *const HsGroup, out: *mut *mut c_char) -> HsStatus {
    guard(|| {
        let g = deref(g)?;
        write_out(out, to_cstring(dump_group(&g.0)))
    })
}

/// # Safety
/// `g` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hs_group_free(g: *mut HsGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Builds a Hopf algebra from a target ("kG:S3", "k^G:A4", "D:S3",
/// "split:E:Γ:G" or a file path).
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_hopf_new(spec: *const c_char, out: *mut *mut HsHopf) -> HsStatus {
    guard(|| {
        let spec = read_str(spec)?;
        let h = targets::hopf(spec).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(HsHopf(h))))
    })
}

/// Parses a Hopf algebra from its text dump.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_hopf_load(text: *const c_char, out: *mut *mut HsHopf) -> HsStatus {
    guard(|| {
        let text = read_str(text)?;
        let h = load_hopf(text).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(HsHopf(Arc::new(h)))))
    })
}

/// Dimension of the algebra, or 0 for NULL.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_hopf_dim(h: *const HsHopf) -> usize {
    h.as_ref().map_or(0, |h| h.0.dim())
}

/// Writes the text dump of `h` to `*out`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_hopf_dump(h: *const HsHopf, out: *mut *mut c_char) -> HsStatus {
    guard(|| {
        let h = deref(h)?;
        write_out(out, to_cstring(dump_hopf(&h.0)))
    })
}

/// Checks the Hopf axioms; `samples == 0` means exhaustively. Writes the
/// number of violations to `*violations`.
///
/// # Safety
/// `h` must be a live handle; `violations` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_hopf_verify(
    h: *const HsHopf,
    samples: usize,
    seed: u64,
    violations: *mut usize,
) -> HsStatus {
    guard(|| {
        let h = deref(h)?;
        let report = if samples == 0 {
            verify_hopf_axioms(&h.0)
        } else {
            verify_hopf_axioms_sampled(&h.0, samples, seed)
        };
        write_out(violations, report.violations.len())
    })
}

/// Verifies the canonical sequence k^Γ → H → kG of a bicrossed product
/// and its dual. `*exact` is set to 1 when both are exact, else 0.
///
/// # Safety
/// `h` must be a live handle; `exact` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hs_hopf_sequence_exact(h: *const HsHopf, exact: *mut i32) -> HsStatus {
    guard(|| {
        let h = deref(h)?;
        let seq = bicrossed_sequence(&h.0).map_err(fail)?;
        let dual = dualize_sequence(&seq).map_err(fail)?;
        write_out(exact, i32::from(seq.is_exact() && dual.is_exact()))
    })
}

/// # Safety
/// `h` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hs_hopf_free(h: *mut HsHopf) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Runs a simplicity certificate ("a6-simple", "ty:5", "cpq:3:5",
/// "vecA6", ...). The verdict goes to `*verdict`; if `trace` is not NULL
/// the key=value trace is written there.
///
/// # Safety
/// `target` must be a NUL-terminated string; `verdict` must be writable;
/// `trace` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn hs_certify(
    target: *const c_char,
    verdict: *mut HsVerdict,
    trace: *mut *mut c_char,
) -> HsStatus {
    guard(|| {
        let target = read_str(target)?;
        let cert = if target == "a6-simple" {
            a6_simplicity_check()
        } else {
            targets::category(target).and_then(|c| family_simplicity_check(&c))
        }
        .map_err(fail)?;
        let v = match cert.verdict {
            Verdict::Simple => HsVerdict::Simple,
            Verdict::NotSimple => HsVerdict::NotSimple,
            Verdict::Inconclusive => HsVerdict::Inconclusive,
        };
        write_out(verdict, v)?;
        if !trace.is_null() {
            trace.write(to_cstring(cert.dump()));
        }
        Ok(())
    })
}
