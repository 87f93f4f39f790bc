//! C ABI over `circarc`.
//!
//! Collections are opaque `CircArcCollection` handles created by the
//! constructor functions and released with `circarc_collection_free`. Every
//! fallible call returns a `CircArcStatus`; on failure a message is available
//! from `circarc_last_error` until the next call on the same thread. Strings
//! returned to the caller are released with `circarc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use circarc::asymptotic;
use circarc::extremal::{self, BoundReport, ExtremalParams};
use circarc::{build_summary, check_edge_formula, ArcCollection, Error};

/// Opaque handle to an arc collection.
pub struct CircArcCollection {
    inner: ArcCollection,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircArcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Malformed = 3,
    Infeasible = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircArcBoundKind {
    CMax = 0,
    EMax = 1,
    EMin = 2,
    DMax = 3,
    DOfAMax = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CircArcSummary {
    pub n: usize,
    pub e: usize,
    pub d: usize,
    pub c: usize,
    pub max_agreement: usize,
    pub min_agreement: usize,
    pub edge_formula_holds: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CircArcBound {
    pub value: i64,
    pub valid: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn fail(status: CircArcStatus, message: impl Into<String>) -> CircArcStatus {
    set_error(message.into());
    status
}

fn from_error(e: Error) -> CircArcStatus {
    let status = if e.is_infeasible() { CircArcStatus::Infeasible } else { CircArcStatus::Malformed };
    fail(status, e.to_string())
}

fn guard(body: impl FnOnce() -> CircArcStatus) -> CircArcStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(CircArcStatus::Panic, "internal panic"),
    }
}

unsafe fn emit(out: *mut *mut CircArcCollection, result: circarc::Result<ArcCollection>) -> CircArcStatus {
    match result {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(CircArcCollection { inner }));
            CircArcStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

fn params(max: usize, min: usize, n: usize) -> circarc::Result<ExtremalParams> {
    ExtremalParams::new(max, min, n)
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn circarc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses the JSON collection format.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn circarc_collection_from_json(
    json: *const c_char,
    out: *mut *mut CircArcCollection,
) -> CircArcStatus {
    guard(|| {
        if json.is_null() || out.is_null() {
            return fail(CircArcStatus::NullPointer, "null argument");
        }
        let Ok(text) = CStr::from_ptr(json).to_str() else {
            return fail(CircArcStatus::InvalidUtf8, "input is not UTF-8");
        };
        emit(out, circarc::io::from_json(text))
    })
}

/// Serializes a collection; free the result with `circarc_string_free`.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn circarc_collection_to_json(
    c: *const CircArcCollection,
    out: *mut *mut c_char,
) -> CircArcStatus {
    guard(|| {
        if c.is_null() || out.is_null() {
            return fail(CircArcStatus::NullPointer, "null argument");
        }
        let text = circarc::io::to_json(&(*c).inner);
        *out = CString::new(text).expect("JSON has no nul").into_raw();
        CircArcStatus::Ok
    })
}

/// # Safety
/// `s` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn circarc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `c` must come from this library or be NULL, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn circarc_collection_free(c: *mut CircArcCollection) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Builds the edge-maximizing collection for `(M, m, n)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn circarc_construct_a_max(
    max: usize,
    min: usize,
    n: usize,
    out: *mut *mut CircArcCollection,
) -> CircArcStatus {
    guard(|| {
        if out.is_null() {
            return fail(CircArcStatus::NullPointer, "null argument");
        }
        emit(out, params(max, min, n).and_then(extremal::construct_a_max))
    })
}

/// Builds a collection with `d_max(M, m, n)` double intersections.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn circarc_construct_d_max(
    max: usize,
    min: usize,
    n: usize,
    out: *mut *mut CircArcCollection,
) -> CircArcStatus {
    guard(|| {
        if out.is_null() {
            return fail(CircArcStatus::NullPointer, "null argument");
        }
        emit(out, params(max, min, n).and_then(extremal::construct_d_max))
    })
}

/// Seeded uniformly random collection of `n` arcs.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn circarc_random(n: usize, seed: u64, out: *mut *mut CircArcCollection) -> CircArcStatus {
    guard(|| {
        if out.is_null() {
            return fail(CircArcStatus::NullPointer, "null argument");
        }
        emit(out, circarc::oracle::random_collection(n, seed))
    })
}

/// Edge, double-intersection and agreement counts of a collection.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn circarc_collection_summary(
    c: *const CircArcCollection,
    out: *mut CircArcSummary,
) -> CircArcStatus {
    guard(|| {
        if c.is_null() || out.is_null() {
            return fail(CircArcStatus::NullPointer, "null argument");
        }
        let c = &(*c).inner;
        let summary = build_summary(c);
        let profile = c.agreement_profile();
        *out = CircArcSummary {
            n: c.n(),
            e: summary.e(),
            d: summary.d(),
            c: c.running_count_sum(),
            max_agreement: profile.max,
            min_agreement: profile.min,
            edge_formula_holds: check_edge_formula(c).holds,
        };
        CircArcStatus::Ok
    })
}

/// Evaluates one closed-form bound for `(M, m, n)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn circarc_bound(
    kind: CircArcBoundKind,
    max: usize,
    min: usize,
    n: usize,
    out: *mut CircArcBound,
) -> CircArcStatus {
    guard(|| {
        if out.is_null() {
            return fail(CircArcStatus::NullPointer, "null argument");
        }
        let result = params(max, min, n).and_then(|p| match kind {
            CircArcBoundKind::CMax => extremal::c_max(p).map(|v| CircArcBound { value: v, valid: true }),
            CircArcBoundKind::EMax => extremal::e_max(p).map(to_bound),
            CircArcBoundKind::EMin => extremal::e_min(p).map(to_bound),
            CircArcBoundKind::DMax => Ok(CircArcBound { value: extremal::d_max(p), valid: true }),
            CircArcBoundKind::DOfAMax => extremal::d_of_a_max(p).map(to_bound),
        });
        match result {
            Ok(bound) => {
                *out = bound;
                CircArcStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

fn to_bound(r: BoundReport) -> CircArcBound {
    CircArcBound { value: r.value, valid: r.valid }
}

/// Asymptotic edge proportion forcing agreement proportion `beta`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn circarc_alpha(beta: f64, gamma: f64, out: *mut f64) -> CircArcStatus {
    guard(|| {
        if out.is_null() {
            return fail(CircArcStatus::NullPointer, "null argument");
        }
        match asymptotic::alpha(beta, gamma) {
            Ok(v) => {
                *out = v;
                CircArcStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}
