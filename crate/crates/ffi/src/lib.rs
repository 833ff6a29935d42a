//! C ABI over `singres`: opaque support-pair handles, status codes, and JSON
//! strings for structured results. The header is `include/singres.h`.
//!
//! Ownership: handles come from `sr_support_pair_new` and go back through
//! `sr_support_pair_free`; strings written to `out` parameters are owned by
//! the caller and released with `sr_string_free`. After a non-OK status,
//! `sr_last_error_message` describes the failure on the calling thread.

use singres::strata::{estimate_codim, CodimConfig};
use singres::support::{check_conditions, classify};
use singres::{StratumLabel, SupportPair, SupportSet};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    /// Well-formed input outside the supported range (e.g. determinant too large).
    Degenerate = 3,
    /// A panic was caught at the boundary.
    Internal = 4,
}

/// Opaque handle to a validated support pair.
pub struct SrSupportPair {
    inner: SupportPair,
}

/// The six support conditions plus the two verdict bits, as 0/1 bytes.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SrConditionFlags {
    pub cond1: u8,
    pub cond2: u8,
    pub cond3: u8,
    pub cond4: u8,
    pub cond5: u8,
    pub cond6: u8,
    /// No condition among 1..=5 holds.
    pub generic_a1: u8,
    /// Condition 6 fails.
    pub codim2: u8,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

struct Fail(SrStatus, String);

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SrStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error (panic caught at the C boundary)");
            SrStatus::Internal
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(SrStatus::NullPointer, format!("{what} is null"))
}

fn invalid(e: impl std::fmt::Display) -> Fail {
    Fail(SrStatus::InvalidInput, e.to_string())
}

unsafe fn slice<'a>(p: *const i64, n: usize, what: &str) -> Result<&'a [i64], Fail> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

unsafe fn pair<'a>(p: *const SrSupportPair) -> Result<&'a SupportPair, Fail> {
    p.as_ref().map(|h| &h.inner).ok_or_else(|| null("support pair handle"))
}

unsafe fn write_json<T: serde::Serialize>(out: *mut *mut c_char, v: &T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    let s = serde_json::to_string(v).map_err(|e| Fail(SrStatus::Internal, e.to_string()))?;
    *out = CString::new(s).map_err(|e| Fail(SrStatus::Internal, e.to_string()))?.into_raw();
    Ok(())
}

/// Creates a support pair from two exponent arrays (any order, distinct,
/// at least two each).
///
/// # Safety
/// `b1`/`b2` must point to `n1`/`n2` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_support_pair_new(
    b1: *const i64,
    n1: usize,
    b2: *const i64,
    n2: usize,
    out: *mut *mut SrSupportPair,
) -> SrStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let s1 = SupportSet::new(slice(b1, n1, "b1")?.iter().copied()).map_err(invalid)?;
        let s2 = SupportSet::new(slice(b2, n2, "b2")?.iter().copied()).map_err(invalid)?;
        let inner = SupportPair::new(s1, s2).map_err(invalid)?;
        *out = Box::into_raw(Box::new(SrSupportPair { inner }));
        Ok(())
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `p` must come from `sr_support_pair_new` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sr_support_pair_free(p: *mut SrSupportPair) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Fills `out` with the condition flags of `p`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sr_check_conditions(p: *const SrSupportPair, out: *mut SrConditionFlags) -> SrStatus {
    guard(|| {
        let pr = pair(p)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let r = check_conditions(pr);
        let v = classify(pr);
        *out = SrConditionFlags {
            cond1: r.cond1.into(),
            cond2: r.cond2.into(),
            cond3: r.cond3.into(),
            cond4: r.cond4.into(),
            cond5: r.cond5.into(),
            cond6: r.cond6.into(),
            generic_a1: v.part_i_generic_a1.into(),
            codim2: v.part_ii_codim2.into(),
        };
        Ok(())
    })
}

/// Full classification report (conditions, witnesses, guarantee table) as JSON.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sr_classify_json(p: *const SrSupportPair, out: *mut *mut c_char) -> SrStatus {
    guard(|| write_json(out, &singres::app::cmd_classify(pair(p)?)))
}

/// Exact resultant as JSON; `SR_STATUS_DEGENERATE` when the Sylvester size
/// exceeds `det_bound`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sr_resultant_json(p: *const SrSupportPair, det_bound: usize, out: *mut *mut c_char) -> SrStatus {
    guard(|| {
        let cfg = singres::app::RunConfig { det_bound, ..Default::default() };
        let r = singres::app::cmd_resultant(pair(p)?, &cfg).map_err(|e| Fail(SrStatus::Degenerate, e.to_string()))?;
        write_json(out, &r)
    })
}

/// `φ` of an exponent array (0 for a single element).
///
/// # Safety
/// `b` must point to `n` readable values and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_phi(b: *const i64, n: usize, out: *mut u64) -> SrStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let s = SupportSet::new(slice(b, n, "b")?.iter().copied()).map_err(invalid)?;
        *out = s.phi();
        Ok(())
    })
}

/// Minor-vanishing versus split-certificate scan over `n ≤ n_max`,
/// `B ⊆ [0, spread]` with `|B|` in `sizes`, as JSON.
///
/// # Safety
/// `sizes` must point to `n_sizes` readable values and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn sr_scan_minors_json(
    n_max: u32,
    spread: i64,
    sizes: *const usize,
    n_sizes: usize,
    out: *mut *mut c_char,
) -> SrStatus {
    guard(|| {
        if n_sizes > 0 && sizes.is_null() {
            return Err(null("sizes"));
        }
        let sz: &[usize] = if n_sizes == 0 { &[] } else { std::slice::from_raw_parts(sizes, n_sizes) };
        if !(0..=20).contains(&spread) || n_max > 64 || sz.iter().any(|&s| s < 2) {
            return Err(invalid("spread must lie in [0, 20], n_max at most 64, sizes at least 2"));
        }
        write_json(out, &singres::minors::split_equivalence_scan(n_max, spread, sz))
    })
}

/// Codimension estimate of the filtration subset named by `label`
/// (e.g. `"N(1,1,1)"`), as JSON.
///
/// # Safety
/// `p` must be a live handle, `label` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sr_estimate_codim_json(
    p: *const SrSupportPair,
    label: *const c_char,
    seed: u64,
    trials: usize,
    n_max: u32,
    out: *mut *mut c_char,
) -> SrStatus {
    guard(|| {
        let pr = pair(p)?;
        if label.is_null() {
            return Err(null("label"));
        }
        let text = CStr::from_ptr(label).to_str().map_err(invalid)?;
        let l = StratumLabel::parse(text).map_err(invalid)?;
        if trials == 0 {
            return Err(invalid("trials must be positive"));
        }
        write_json(out, &estimate_codim(pr, &l, &CodimConfig { trials, n_max, seed }))
    })
}

/// Frees a string returned through an `out` parameter; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failing call on this thread (empty after success).
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn sr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn sr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
