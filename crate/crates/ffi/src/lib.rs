//! C ABI for the toricenv core.
//!
//! Objects cross the boundary as opaque handles created by `te_*` constructors
//! and released by the matching `te_*_free`. Every fallible call returns a
//! [`TeStatus`]; on failure a message is available from
//! [`te_last_error_message`] on the same thread. Strings returned through
//! `char **` out-parameters are owned by the caller and must be released
//! with [`te_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use toricenv::bounds::BoundReport;
use toricenv::envelope::{algorithm1, AlgorithmReport, ConeStrategy};
use toricenv::groebner::{Ideal, IdealFile};
use toricenv::matgroup::{named_group, FiniteMatGroup, GroupFile, GroupName, DEFAULT_CLOSURE_CAP};
use toricenv::multipoly::MonomialOrder;
use toricenv::Error;

/// Result codes of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TeStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was out of range or not valid UTF-8.
    InvalidArgument = 2,
    /// A name, JSON document or polynomial failed to parse.
    ParseError = 3,
    /// Group enumeration exceeded its element cap.
    CapExceeded = 4,
    /// The computation failed (e.g. a group not in SL2).
    ComputationError = 5,
    /// An internal panic was caught at the boundary.
    Panic = 6,
}

/// Monomial order for Gröbner computations.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TeOrder {
    Grlex = 0,
    Grevlex = 1,
}

/// How the cone ideal is built.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TeStrategy {
    Interpolation = 0,
    Intersection = 1,
}

/// A finite matrix group.
pub struct TeGroup {
    label: String,
    group: FiniteMatGroup,
}

/// A polynomial ideal.
pub struct TeIdeal {
    ideal: Ideal,
}

/// The outcome of one Algorithm-1 run.
pub struct TeResult {
    report: AlgorithmReport,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> TeStatus {
    match e {
        Error::Parse(_) => TeStatus::ParseError,
        Error::CapExceeded(_) => TeStatus::CapExceeded,
        Error::Invalid(_) | Error::Dimension(_) | Error::ZeroConductor => TeStatus::InvalidArgument,
        _ => TeStatus::ComputationError,
    }
}

/// Runs `f`, mapping errors and panics to status codes.
fn guard(f: impl FnOnce() -> Result<(), (TeStatus, String)>) -> TeStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            TeStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TeStatus::Panic
        }
    }
}

fn fail(e: Error) -> (TeStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (TeStatus, String) {
    (TeStatus::NullPointer, format!("`{what}` is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (TeStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (TeStatus::InvalidArgument, format!("`{what}` is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (TeStatus, String)> {
    let c = CString::new(s).map_err(|_| (TeStatus::ComputationError, "interior NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

fn json_error(e: serde_json::Error) -> (TeStatus, String) {
    (TeStatus::ComputationError, e.to_string())
}

/// Catalog group by tag (e.g. `"binary-icosahedral"`, `"cyclic-5"`).
///
/// # Safety
/// `tag` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn te_group_named(tag: *const c_char, out: *mut *mut TeGroup) -> TeStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let name: GroupName = read_str(tag, "tag")?.parse().map_err(fail)?;
        write_out(out, TeGroup { label: name.tag(), group: named_group(name) });
        Ok(())
    })
}

/// Group generated by the matrices of a group-file JSON document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn te_group_from_json(json: *const c_char, out: *mut *mut TeGroup) -> TeStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(json, "json")?;
        let file: GroupFile = serde_json::from_str(text).map_err(|e| fail(e.into()))?;
        let group = file.to_group(DEFAULT_CLOSURE_CAP).map_err(fail)?;
        write_out(out, TeGroup { label: "json".into(), group });
        Ok(())
    })
}

/// Number of elements of `group`.
///
/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn te_group_order(group: *const TeGroup, out: *mut usize) -> TeStatus {
    guard(|| {
        let g = group.as_ref().ok_or_else(|| null("group"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = g.group.order();
        Ok(())
    })
}

/// # Safety
/// `group` must be null or a handle from a `te_group_*` constructor that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn te_group_free(group: *mut TeGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Minimal truncation degree for the scalar cone of `group` (a subgroup of
/// SL2).
///
/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn te_algorithm1(
    group: *const TeGroup,
    order: TeOrder,
    strategy: TeStrategy,
    out: *mut *mut TeResult,
) -> TeStatus {
    guard(|| {
        let g = group.as_ref().ok_or_else(|| null("group"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let order = match order {
            TeOrder::Grlex => MonomialOrder::GrLex,
            TeOrder::Grevlex => MonomialOrder::GrevLex,
        };
        let strategy = match strategy {
            TeStrategy::Interpolation => ConeStrategy::Interpolation,
            TeStrategy::Intersection => ConeStrategy::Intersection,
        };
        let r = algorithm1(&g.group, order, strategy).map_err(fail)?;
        write_out(out, TeResult { report: AlgorithmReport::new(&g.label, g.group.order(), &r) });
        Ok(())
    })
}

/// The degree `d` found by Algorithm 1.
///
/// # Safety
/// `result` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn te_result_d(result: *const TeResult, out: *mut u32) -> TeStatus {
    guard(|| {
        let r = result.as_ref().ok_or_else(|| null("result"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = r.report.d;
        Ok(())
    })
}

/// Number of lines of the cone, which is also its degree.
///
/// # Safety
/// `result` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn te_result_num_lines(result: *const TeResult, out: *mut usize) -> TeStatus {
    guard(|| {
        let r = result.as_ref().ok_or_else(|| null("result"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = r.report.num_lines;
        Ok(())
    })
}

/// The full report as JSON; release with `te_string_free`.
///
/// # Safety
/// `result` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn te_result_json(result: *const TeResult, out: *mut *mut c_char) -> TeStatus {
    guard(|| {
        let r = result.as_ref().ok_or_else(|| null("result"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, serde_json::to_string(&r.report).map_err(json_error)?)
    })
}

/// # Safety
/// `result` must be null or an unfreed handle from `te_algorithm1`.
#[no_mangle]
pub unsafe extern "C" fn te_result_free(result: *mut TeResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Ideal from an ideal-file JSON document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn te_ideal_from_json(json: *const c_char, out: *mut *mut TeIdeal) -> TeStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(json, "json")?;
        let file: IdealFile = serde_json::from_str(text).map_err(|e| fail(e.into()))?;
        write_out(out, TeIdeal { ideal: file.to_ideal().map_err(fail)? });
        Ok(())
    })
}

/// Dimension and degree of the variety of `ideal`.
///
/// # Safety
/// `ideal` must be a live handle; `dimension` and `degree` must be writable.
#[no_mangle]
pub unsafe extern "C" fn te_ideal_profile(
    ideal: *const TeIdeal,
    dimension: *mut usize,
    degree: *mut u64,
) -> TeStatus {
    guard(|| {
        let i = ideal.as_ref().ok_or_else(|| null("ideal"))?;
        if dimension.is_null() || degree.is_null() {
            return Err(null("dimension/degree"));
        }
        let p = i.ideal.profile().map_err(fail)?;
        *dimension = p.dimension;
        *degree = p.degree;
        Ok(())
    })
}

/// # Safety
/// `ideal` must be null or an unfreed handle from `te_ideal_from_json`.
#[no_mangle]
pub unsafe extern "C" fn te_ideal_free(ideal: *mut TeIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Every closed-form bound at `n` as JSON; release with `te_string_free`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn te_bounds_json(n: u64, out: *mut *mut c_char) -> TeStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let report = BoundReport::new(n).map_err(fail)?;
        write_string(out, serde_json::to_string(&report).map_err(json_error)?)
    })
}

/// Message of the last failed call on this thread (empty after a success).
/// The pointer stays valid until the next `te_*` call on this thread.
#[no_mangle]
pub extern "C" fn te_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn te_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
