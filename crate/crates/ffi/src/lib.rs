//! C ABI for the topomatch library: opaque drawing handles, status codes,
//! and JSON strings across the boundary. All returned strings must be
//! released with `tm_string_free`, handles with `tm_drawing_free`.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use topomatch::matching::{solve, RootPolicy};
use topomatch::model::{validate_simple, Drawing};
use topomatch::oracle::max_disjoint_bruteforce;
use topomatch::Error;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TmStatus {
    TmOk = 0,
    /// A degenerate geometric contact (overlap, endpoint pass-through).
    TmErrDegeneracy = 1,
    /// A structural guarantee of the algorithm failed on this input.
    TmErrGuarantee = 2,
    TmErrClaim = 3,
    TmErrEquivalence = 4,
    TmErrGeneration = 5,
    TmErrLimit = 6,
    TmErrInvalid = 7,
    TmErrNotSimple = 8,
    TmErrIo = 9,
    TmErrParse = 10,
    /// A required pointer argument was null.
    TmErrNull = 11,
}

fn status_of(e: &Error) -> TmStatus {
    match e {
        Error::Degeneracy(_) => TmStatus::TmErrDegeneracy,
        Error::GuaranteeViolation { .. } => TmStatus::TmErrGuarantee,
        Error::ClaimViolation { .. } => TmStatus::TmErrClaim,
        Error::EquivalenceViolation(_) => TmStatus::TmErrEquivalence,
        Error::GenerationFailure { .. } => TmStatus::TmErrGeneration,
        Error::LimitExceeded { .. } => TmStatus::TmErrLimit,
        Error::InvalidInput(_) => TmStatus::TmErrInvalid,
        Error::NotSimple(_) => TmStatus::TmErrNotSimple,
        Error::Io(_) => TmStatus::TmErrIo,
        Error::Parse(_) => TmStatus::TmErrParse,
    }
}

/// Opaque handle to a drawing.
pub struct TmDrawing {
    inner: Drawing,
}

fn to_c_string(s: String) -> *mut c_char {
    // JSON and report strings never contain interior NULs.
    CString::new(s).expect("no interior NUL").into_raw()
}

/// Parse a drawing from its JSON representation.
///
/// # Safety
/// `json` must be a valid NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_drawing_from_json(
    json: *const c_char,
    out: *mut *mut TmDrawing,
) -> TmStatus {
    if json.is_null() || out.is_null() {
        return TmStatus::TmErrNull;
    }
    let Ok(text) = CStr::from_ptr(json).to_str() else {
        return TmStatus::TmErrParse;
    };
    match Drawing::from_json_str(text) {
        Ok(d) => {
            *out = Box::into_raw(Box::new(TmDrawing { inner: d }));
            TmStatus::TmOk
        }
        Err(e) => {
            *out = ptr::null_mut();
            status_of(&e)
        }
    }
}

/// Release a drawing handle. Null is a no-op.
///
/// # Safety
/// `d` must come from `tm_drawing_from_json` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn tm_drawing_free(d: *mut TmDrawing) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of vertices, or 0 for null.
///
/// # Safety
/// `d` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn tm_drawing_n(d: *const TmDrawing) -> usize {
    d.as_ref().map_or(0, |d| d.inner.n())
}

/// Validate simplicity. Returns `TmOk` for a simple drawing,
/// `TmErrNotSimple` otherwise; `summary_out` (optional) receives a
/// human-readable report either way.
///
/// # Safety
/// `d` must be a live handle; `summary_out` valid or null.
#[no_mangle]
pub unsafe extern "C" fn tm_validate(
    d: *const TmDrawing,
    summary_out: *mut *mut c_char,
) -> TmStatus {
    let Some(d) = d.as_ref() else {
        return TmStatus::TmErrNull;
    };
    let report = validate_simple(&d.inner);
    if !summary_out.is_null() {
        *summary_out = to_c_string(report.summary());
    }
    if report.ok() {
        TmStatus::TmOk
    } else {
        TmStatus::TmErrNotSimple
    }
}

/// Run the matching pipeline. `root` is a vertex id, or negative for the
/// best over all roots. On success `json_out` receives the result as JSON.
///
/// # Safety
/// `d` must be a live handle, `json_out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_solve(
    d: *const TmDrawing,
    root: i64,
    json_out: *mut *mut c_char,
) -> TmStatus {
    let Some(d) = d.as_ref() else {
        return TmStatus::TmErrNull;
    };
    if json_out.is_null() {
        return TmStatus::TmErrNull;
    }
    let policy = if root < 0 {
        RootPolicy::BestOfAll
    } else {
        RootPolicy::Fixed(root as usize)
    };
    match solve(&d.inner, policy) {
        Ok(r) => {
            *json_out = to_c_string(r.to_json_string());
            TmStatus::TmOk
        }
        Err(e) => {
            *json_out = ptr::null_mut();
            status_of(&e)
        }
    }
}

/// Exact maximum disjoint matching size by branch and bound, with a node
/// budget.
///
/// # Safety
/// `d` must be a live handle, `optimum_out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tm_oracle(
    d: *const TmDrawing,
    node_limit: u64,
    optimum_out: *mut usize,
) -> TmStatus {
    let Some(d) = d.as_ref() else {
        return TmStatus::TmErrNull;
    };
    if optimum_out.is_null() {
        return TmStatus::TmErrNull;
    }
    match max_disjoint_bruteforce(&d.inner, node_limit) {
        Ok(r) => {
            *optimum_out = r.optimum;
            TmStatus::TmOk
        }
        Err(e) => status_of(&e),
    }
}

/// Release a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn tm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
