//! C ABI over the `quatlin` crate.
//!
//! Operators and expansions cross the boundary as opaque handles that the
//! caller releases with the matching `*_free` function. Rationals and
//! quaternions cross as NUL-terminated strings (`"p/q"`, `"w,x,y,z"`);
//! strings returned by this library must be released with
//! [`ql_string_free`]. Every fallible function returns a [`QlStatus`]; on
//! failure, [`ql_last_error`] describes the most recent error on the calling
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use quatlin::{autos, frames, AutoKind, Error, Expansion, Operator4, Quaternion, Rational};

/// Status codes. `PARSE`, `SINGULAR_FRAME` and `PRECONDITION` share their
/// values with the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QlStatus {
    Ok = 0,
    Internal = 1,
    Parse = 2,
    SingularFrame = 3,
    Precondition = 4,
    NullPointer = 5,
    OutOfRange = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QlAutoKind {
    Linear = 0,
    Antilinear = 1,
    Neither = 2,
}

/// Opaque 4×4 exact operator.
pub struct QlOperator {
    inner: Operator4,
}

/// Opaque expansion: four quaternion coefficients against a frame.
pub struct QlExpansion {
    inner: Expansion,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs stripped");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: QlStatus, msg: impl Into<String>) -> QlStatus {
    set_last_error(msg.into());
    status
}

fn from_error(err: &Error) -> QlStatus {
    let status = match err {
        Error::Parse(_) | Error::UnknownName(_) | Error::DivisionByZero => QlStatus::Parse,
        Error::SingularFrame(_) => QlStatus::SingularFrame,
        Error::NotAnAutomorphism(_) | Error::ZeroQuaternion => QlStatus::Precondition,
        Error::IndexOutOfRange { .. } => QlStatus::OutOfRange,
        Error::Internal(_) => QlStatus::Internal,
    };
    fail(status, err.to_string())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, QlStatus> {
    if p.is_null() {
        return Err(fail(QlStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(QlStatus::Parse, "string argument is not valid UTF-8"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> QlStatus {
    if out.is_null() {
        return fail(QlStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    QlStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> QlStatus {
    let c = CString::new(s).expect("formatted values contain no NUL");
    write_out(out, c.into_raw())
}

unsafe fn write_operator(out: *mut *mut QlOperator, op: Operator4) -> QlStatus {
    if out.is_null() {
        return fail(QlStatus::NullPointer, "null output pointer");
    }
    out.write(Box::into_raw(Box::new(QlOperator { inner: op })));
    QlStatus::Ok
}

unsafe fn operator_ref<'a>(p: *const QlOperator) -> Result<&'a Operator4, QlStatus> {
    p.as_ref()
        .map(|o| &o.inner)
        .ok_or_else(|| fail(QlStatus::NullPointer, "null operator handle"))
}

fn quat_string(q: &Quaternion) -> String {
    q.coords().map(ToString::to_string).join(",")
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

macro_rules! tri_core {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return from_error(&err),
        }
    };
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ql_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ql_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an operator written in the frame-spec operator syntax: a catalog
/// name (`"A1"`), a composition (`"A1A1"`), a unit multiplication (`"*i"`),
/// or an inline matrix `"[1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1]"`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ql_operator_parse(text: *const c_char, out: *mut *mut QlOperator) -> QlStatus {
    let text = tri!(read_str(text));
    let op = tri_core!(frames::parse_operator(text));
    write_operator(out, op)
}

/// Builds an operator from 16 row-major rational strings.
///
/// # Safety
/// `entries` must point to 16 valid NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn ql_operator_from_entries(
    entries: *const *const c_char,
    out: *mut *mut QlOperator,
) -> QlStatus {
    if entries.is_null() {
        return fail(QlStatus::NullPointer, "null entries array");
    }
    let mut values = Vec::with_capacity(16);
    for n in 0..16 {
        let s = tri!(read_str(*entries.add(n)));
        values.push(tri_core!(s.parse::<Rational>()));
    }
    write_operator(out, Operator4::from_flat(&values))
}

/// Matrix of `x ↦ a·x` for the quaternion `"w,x,y,z"`.
///
/// # Safety
/// `a` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ql_operator_left_mul(a: *const c_char, out: *mut *mut QlOperator) -> QlStatus {
    let a = tri_core!(tri!(read_str(a)).parse::<Quaternion>());
    write_operator(out, Operator4::left_mul(&a))
}

/// Matrix of `x ↦ x·a`.
///
/// # Safety
/// As for [`ql_operator_left_mul`].
#[no_mangle]
pub unsafe extern "C" fn ql_operator_right_mul(a: *const c_char, out: *mut *mut QlOperator) -> QlStatus {
    let a = tri_core!(tri!(read_str(a)).parse::<Quaternion>());
    write_operator(out, Operator4::right_mul(&a))
}

/// Matrix of `x ↦ q x q⁻¹`; `QL_STATUS_PRECONDITION` for `q = 0`.
///
/// # Safety
/// As for [`ql_operator_left_mul`].
#[no_mangle]
pub unsafe extern "C" fn ql_operator_conjugation_by(q: *const c_char, out: *mut *mut QlOperator) -> QlStatus {
    let q = tri_core!(tri!(read_str(q)).parse::<Quaternion>());
    let op = tri_core!(autos::conjugation_by(&q));
    write_operator(out, op)
}

/// `outer ∘ inner`.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ql_operator_compose(
    outer: *const QlOperator,
    inner: *const QlOperator,
    out: *mut *mut QlOperator,
) -> QlStatus {
    let (f, g) = (tri!(operator_ref(outer)), tri!(operator_ref(inner)));
    write_operator(out, f.compose(g))
}

/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ql_operator_add(
    a: *const QlOperator,
    b: *const QlOperator,
    out: *mut *mut QlOperator,
) -> QlStatus {
    let (f, g) = (tri!(operator_ref(a)), tri!(operator_ref(b)));
    write_operator(out, f + g)
}

/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ql_operator_equal(a: *const QlOperator, b: *const QlOperator, out: *mut bool) -> QlStatus {
    let (f, g) = (tri!(operator_ref(a)), tri!(operator_ref(b)));
    write_out(out, f == g)
}

/// Entry `(row, col)` as a rational string; free it with [`ql_string_free`].
///
/// # Safety
/// `op` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ql_operator_entry(
    op: *const QlOperator,
    row: usize,
    col: usize,
    out: *mut *mut c_char,
) -> QlStatus {
    let f = tri!(operator_ref(op));
    if row >= 4 || col >= 4 {
        return fail(QlStatus::OutOfRange, format!("entry ({row}, {col}) out of range"));
    }
    write_string(out, f.entry(row, col).to_string())
}

/// # Safety
/// `op` must be NULL or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn ql_operator_free(op: *mut QlOperator) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}

/// # Safety
/// `op` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ql_classify(op: *const QlOperator, out: *mut QlAutoKind) -> QlStatus {
    let f = tri!(operator_ref(op));
    let kind = match autos::classify(f) {
        AutoKind::LinearAutomorphism => QlAutoKind::Linear,
        AutoKind::AntilinearAutomorphism => QlAutoKind::Antilinear,
        AutoKind::Neither(why) => {
            set_last_error(why.to_string());
            QlAutoKind::Neither
        }
    };
    write_out(out, kind)
}

/// Writes whether the closed-form coordinate conditions hold; when they do
/// not, [`ql_last_error`] names the first violated condition.
///
/// # Safety
/// `op` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ql_check_coordinate_conditions(op: *const QlOperator, out: *mut bool) -> QlStatus {
    let f = tri!(operator_ref(op));
    let verdict = autos::check_coordinate_conditions(f);
    if let Err(v) = &verdict {
        set_last_error(v.to_string());
    }
    write_out(out, verdict.is_ok())
}

/// Conjugator `"w,x,y,z"` (unnormalized); `QL_STATUS_PRECONDITION` if the
/// operator is not a linear automorphism.
///
/// # Safety
/// `op` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ql_recover_conjugator(op: *const QlOperator, out: *mut *mut c_char) -> QlStatus {
    let f = tri!(operator_ref(op));
    let c = tri_core!(autos::recover_conjugator(f));
    write_string(out, quat_string(c.quaternion()))
}

/// Expands `op` against a builtin frame name or a 4-term frame spec.
///
/// # Safety
/// `op` must be live; `frame` a valid string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ql_expand(
    op: *const QlOperator,
    frame: *const c_char,
    out: *mut *mut QlExpansion,
) -> QlStatus {
    let f = tri!(operator_ref(op));
    let frame = tri_core!(frames::parse_frame(tri!(read_str(frame))));
    let e = tri_core!(frames::expand(f, &frame));
    if out.is_null() {
        return fail(QlStatus::NullPointer, "null output pointer");
    }
    out.write(Box::into_raw(Box::new(QlExpansion { inner: e })));
    QlStatus::Ok
}

/// Coefficient `term` (0..4) as `"w,x,y,z"`.
///
/// # Safety
/// `e` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ql_expansion_coefficient(
    e: *const QlExpansion,
    term: usize,
    out: *mut *mut c_char,
) -> QlStatus {
    let Some(e) = e.as_ref() else {
        return fail(QlStatus::NullPointer, "null expansion handle");
    };
    if term >= 4 {
        return fail(QlStatus::OutOfRange, format!("term {term} out of range 0..4"));
    }
    write_string(out, quat_string(&e.inner.coefficients[term]))
}

/// Rebuilds the operator from the expansion.
///
/// # Safety
/// `e` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ql_expansion_reconstruct(e: *const QlExpansion, out: *mut *mut QlOperator) -> QlStatus {
    let Some(e) = e.as_ref() else {
        return fail(QlStatus::NullPointer, "null expansion handle");
    };
    write_operator(out, e.inner.reconstruct())
}

/// # Safety
/// `e` must be NULL or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn ql_expansion_free(e: *mut QlExpansion) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Rank and nullity of the family described by `spec` (1 or more terms).
///
/// # Safety
/// `spec` must be a valid string; `rank` and `nullity` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ql_family_rank(spec: *const c_char, rank: *mut usize, nullity: *mut usize) -> QlStatus {
    let terms = tri_core!(frames::parse_terms(tri!(read_str(spec))));
    let report = tri_core!(frames::family_rank(&terms));
    if rank.is_null() || nullity.is_null() {
        return fail(QlStatus::NullPointer, "null output pointer");
    }
    rank.write(report.rank);
    nullity.write(report.nullity);
    QlStatus::Ok
}
