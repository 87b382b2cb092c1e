//! C ABI for `eisenstein-descent`.
//!
//! Conventions:
//! - Every fallible function returns an [`EdStatus`]; results go through
//!   out-pointers, which are written only on success.
//! - Elements are opaque [`EdElement`] handles released with
//!   [`ed_element_free`]; strings returned to the caller are released with
//!   [`ed_string_free`].
//! - The message for the most recent failure on the calling thread is
//!   available from [`ed_last_error_message`].
//! - Panics never cross the boundary; they surface as `ED_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eisenstein_descent::descent::CubicKummerCover;
use eisenstein_descent::eisenstein::parse_element;
use eisenstein_descent::report::certificate_json;
use eisenstein_descent::search::search;
use eisenstein_descent::verify::minimal_modulus;
use eisenstein_descent::{
    classify, solve_g, DescentClassification, EisensteinRational, Error, HeightBound, Lemma,
    PointValue,
};

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// An element or coefficient list could not be parsed.
    Parse = 3,
    /// A numeric argument is outside the supported range.
    OutOfRange = 4,
    /// The requested object does not exist (e.g. no solution of `g = a`).
    NotFound = 5,
    /// Any other library error.
    Failed = 6,
    /// The library panicked; this is a bug.
    Panic = 7,
}

/// Outcome of classifying `t^3 = a`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdVerdict {
    Descends = 0,
    Disconnected = 1,
    NoDescent = 2,
    Undefined = 3,
}

/// Residue-ring statements that can be checked exhaustively.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdLemma {
    CubeClosure = 0,
    NoSolution = 1,
}

/// Opaque element of `Q(w)`.
pub struct EdElement(EisensteinRational);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> EdStatus {
    match e {
        Error::Syntax { .. } | Error::ConstantCover | Error::Unknown { .. } => EdStatus::Parse,
        Error::ExponentOutOfRange { .. } | Error::ZeroHeight => EdStatus::OutOfRange,
        _ => EdStatus::Failed,
    }
}

struct Failure(EdStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> EdStatus {
    // Handles are not observed again after a panic reports failure.
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EdStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".to_string());
            EdStatus::Panic
        }
    }
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure(EdStatus::NullPointer, format!("{name} is null")))
    } else {
        Ok(())
    }
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    non_null(p, name)?;
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(EdStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("library output has no nul bytes")
        .into_raw()
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn ed_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ed_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses text such as `"1/2-5/3*w"` into a new element.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ed_element_parse(
    text: *const c_char,
    out: *mut *mut EdElement,
) -> EdStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        non_null(out, "out")?;
        let value = parse_element(text)?;
        *out = Box::into_raw(Box::new(EdElement(value)));
        Ok(())
    })
}

/// Builds `(a + b w) / d` from machine integers.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ed_element_new(
    a: i64,
    b: i64,
    d: i64,
    out: *mut *mut EdElement,
) -> EdStatus {
    guard(|| {
        non_null(out, "out")?;
        let num = eisenstein_descent::EisensteinInt::new(a, b);
        let value = EisensteinRational::new(num, d.into())?;
        *out = Box::into_raw(Box::new(EdElement(value)));
        Ok(())
    })
}

/// Releases an element. Null is ignored.
///
/// # Safety
/// `e` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ed_element_free(e: *mut EdElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Canonical text of an element; free with [`ed_string_free`].
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ed_element_to_string(
    e: *const EdElement,
    out: *mut *mut c_char,
) -> EdStatus {
    guard(|| {
        non_null(e, "element")?;
        non_null(out, "out")?;
        *out = into_c_string((*e).0.to_string());
        Ok(())
    })
}

/// Writes whether the element is a cube in `Q(w)`.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ed_element_is_cube(e: *const EdElement, out: *mut bool) -> EdStatus {
    guard(|| {
        non_null(e, "element")?;
        non_null(out, "out")?;
        *out = (*e).0.is_cube();
        Ok(())
    })
}

/// Classifies `t^3 = a`; a null `e` stands for the point at infinity.
///
/// # Safety
/// `e` must be null or a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ed_classify(e: *const EdElement, out: *mut EdVerdict) -> EdStatus {
    guard(|| {
        non_null(out, "out")?;
        let point = if e.is_null() {
            PointValue::Infinity
        } else {
            PointValue::Finite((*e).0.clone())
        };
        *out = match classify(&point) {
            DescentClassification::Descends(_) => EdVerdict::Descends,
            DescentClassification::Disconnected => EdVerdict::Disconnected,
            DescentClassification::NoDescent => EdVerdict::NoDescent,
            DescentClassification::Undefined => EdVerdict::Undefined,
        };
        Ok(())
    })
}

/// Rational `(x, y)` with `g(x, y) = a`, as new elements with zero `w`
/// part. Returns `ED_STATUS_NOT_FOUND` when `a` is not a value of `g`.
///
/// # Safety
/// `e` must be a live handle; `out_x` and `out_y` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ed_solve(
    e: *const EdElement,
    out_x: *mut *mut EdElement,
    out_y: *mut *mut EdElement,
) -> EdStatus {
    guard(|| {
        non_null(e, "element")?;
        non_null(out_x, "out_x")?;
        non_null(out_y, "out_y")?;
        let w = solve_g(&(*e).0).ok_or_else(|| {
            Failure(
                EdStatus::NotFound,
                format!("{} is not a value of g", (*e).0),
            )
        })?;
        *out_x = Box::into_raw(Box::new(EdElement(EisensteinRational::from_rational(
            w.x(),
        ))));
        *out_y = Box::into_raw(Box::new(EdElement(EisensteinRational::from_rational(
            w.y(),
        ))));
        Ok(())
    })
}

/// Exhaustively checks `lemma` mod `3^k`. Writes the verdict to `holds`
/// and, if `report_json` is non-null, the JSON report (free with
/// [`ed_string_free`]).
///
/// # Safety
/// `holds` must be writable; `report_json` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ed_verify(
    lemma: EdLemma,
    k: u32,
    holds: *mut bool,
    report_json: *mut *mut c_char,
) -> EdStatus {
    guard(|| {
        non_null(holds, "holds")?;
        let lemma = match lemma {
            EdLemma::CubeClosure => Lemma::CubeClosure,
            EdLemma::NoSolution => Lemma::NoSolution,
        };
        let report = lemma.verify(k)?;
        *holds = report.holds;
        if !report_json.is_null() {
            *report_json = into_c_string(certificate_json(&report, report.elapsed));
        }
        Ok(())
    })
}

/// Smallest `k <= max_k` at which the no-solution check holds, or 0.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ed_minimal_modulus(max_k: u32, out: *mut u32) -> EdStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = minimal_modulus(max_k)?.unwrap_or(0);
        Ok(())
    })
}

/// Searches `t^3 = f(z)` over rationals of height `<= height`. `coeffs` is
/// a comma-separated list, constant term first. Writes the number of
/// descending points to `descends` and, if `report_json` is non-null, the
/// JSON report.
///
/// # Safety
/// `coeffs` must be a nul-terminated string; `descends` must be writable;
/// `report_json` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ed_search(
    coeffs: *const c_char,
    height: u64,
    descends: *mut u64,
    report_json: *mut *mut c_char,
) -> EdStatus {
    guard(|| {
        let text = read_str(coeffs, "coeffs")?;
        non_null(descends, "descends")?;
        let coeffs = text
            .split(',')
            .map(parse_element)
            .collect::<Result<Vec<_>, _>>()?;
        let cover = CubicKummerCover::new(coeffs)?;
        let report = search(&cover, HeightBound::new(height)?);
        *descends = report.counts.descends;
        if !report_json.is_null() {
            *report_json = into_c_string(certificate_json(&report, report.elapsed));
        }
        Ok(())
    })
}
