//! C interface.
//!
//! Every function returns a [`QkStatus`]; on failure the message is kept in
//! a per-thread slot read with [`qk_last_error`]. Handles are opaque and must
//! be released with their `_free` function. Strings returned through `out`
//! parameters are owned by the caller and released with [`qk_string_free`].
//! Exact rationals are written as `"p"` or `"p/q"`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qkhilbert::cli::{verify_suite, wolf_report, Scope, Selector};
use qkhilbert::exact::format_rational;
use qkhilbert::hilbert::{hilbert_poly, HilbertReport};
use qkhilbert::prolong::{prolongation_tower, twistor_symbol, ProlongationTower, Termination, TwistorSymbolSpec};
use qkhilbert::rootsys::{build_root_system, CartanLabel};
use qkhilbert::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InadmissibleAlgebra = 3,
    ComputationFailed = 4,
    OutOfRange = 5,
    Panic = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> QkStatus {
    match e {
        Error::InadmissibleAlgebra { .. } => QkStatus::InadmissibleAlgebra,
        Error::InvalidParameter(_) | Error::ParseRational(_) => QkStatus::InvalidArgument,
        _ => QkStatus::ComputationFailed,
    }
}

fn fail(status: QkStatus, msg: impl Into<String>) -> QkStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> Result<(), (QkStatus, String)>) -> QkStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QkStatus::Ok,
        Ok(Err((status, msg))) => fail(status, msg),
        Err(_) => fail(QkStatus::Panic, "internal panic"),
    }
}

fn lib_err(e: Error) -> (QkStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (QkStatus, String) {
    (QkStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (QkStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (QkStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (QkStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| (QkStatus::ComputationFailed, "string contains NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (QkStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = value;
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, (QkStatus, String)> {
    p.as_ref().ok_or_else(|| null("handle"))
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn qk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn qk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Hilbert polynomial of one Wolf space.
pub struct QkHilbert {
    report: HilbertReport,
}

/// Build the Hilbert report for a Cartan label such as `"E8"`.
///
/// # Safety
/// `algebra` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qk_hilbert_new(algebra: *const c_char, out: *mut *mut QkHilbert) -> QkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let label: CartanLabel = read_str(algebra, "algebra")?.parse().map_err(lib_err)?;
        let report = hilbert_poly(&build_root_system(label).map_err(lib_err)?).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(QkHilbert { report }));
        Ok(())
    })
}

/// # Safety
/// `h` must come from [`qk_hilbert_new`] and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qk_hilbert_free(h: *mut QkHilbert) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Quaternionic dimension `n`; the polynomial has degree `2n + 1`.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_hilbert_n(h: *const QkHilbert, out: *mut usize) -> QkStatus {
    guard(|| write(out, handle(h)?.report.n))
}

/// Coefficient of `r^i`.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_hilbert_coefficient(h: *const QkHilbert, i: usize, out: *mut *mut c_char) -> QkStatus {
    guard(|| {
        let rep = &handle(h)?.report;
        if rep.poly.degree().is_none_or(|d| i > d) {
            return Err((QkStatus::OutOfRange, format!("no coefficient of r^{i}")));
        }
        write_string(out, format_rational(&rep.poly.coefficient(i)))
    })
}

/// `P(r)`.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_hilbert_value(h: *const QkHilbert, r: i64, out: *mut *mut c_char) -> QkStatus {
    guard(|| write_string(out, format_rational(&handle(h)?.report.value(r))))
}

/// Quaternionic volume.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_hilbert_volume(h: *const QkHilbert, out: *mut *mut c_char) -> QkStatus {
    guard(|| write_string(out, format_rational(&handle(h)?.report.volume)))
}

/// Whether every check of the default suite passed.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_hilbert_passed(h: *const QkHilbert, out: *mut bool) -> QkStatus {
    guard(|| write(out, handle(h)?.report.passed()))
}

/// The same JSON document as `qkhilbert wolf --algebra <label> --r-max <r_max> --format json`.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_hilbert_report_json(h: *const QkHilbert, r_max: i64, out: *mut *mut c_char) -> QkStatus {
    guard(|| {
        let label = handle(h)?.report.label;
        if r_max < 0 {
            return Err((QkStatus::InvalidArgument, "r_max must be non-negative".into()));
        }
        let report = wolf_report(&Selector::Algebra(label), r_max, None)
            .map_err(|e| (QkStatus::ComputationFailed, e.to_string()))?;
        write_string(out, report.to_json())
    })
}

/// Prolongation tower of the twistor symbol.
pub struct QkTower {
    tower: ProlongationTower,
}

/// Compute levels `0..=cap` of the tower for `(n, r)`; `cap = 0` means `2r`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qk_tower_new(n: usize, r: usize, cap: usize, out: *mut *mut QkTower) -> QkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let sym = twistor_symbol(&TwistorSymbolSpec::new(n, r).map_err(lib_err)?);
        let cap = if cap == 0 { 2 * r } else { cap };
        let tower = prolongation_tower(&sym, cap).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(QkTower { tower }));
        Ok(())
    })
}

/// # Safety
/// `t` must come from [`qk_tower_new`] and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qk_tower_free(t: *mut QkTower) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of computed levels.
///
/// # Safety
/// `t` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_tower_level_count(t: *const QkTower, out: *mut usize) -> QkStatus {
    guard(|| write(out, handle(t)?.tower.computed_levels()))
}

/// Dimension of level `l`; zero past the end of a terminated tower.
///
/// # Safety
/// `t` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qk_tower_level_dim(t: *const QkTower, l: usize, out: *mut usize) -> QkStatus {
    guard(|| {
        let dim = handle(t)?
            .tower
            .level_dim(l)
            .ok_or_else(|| (QkStatus::OutOfRange, format!("level {l} was not computed")))?;
        write(out, dim)
    })
}

/// Writes whether the tower reached a zero level and, if so, the
/// termination degree and the total dimension. Both are left untouched otherwise.
///
/// # Safety
/// `t` must be a live handle; all out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn qk_tower_termination(
    t: *const QkTower,
    terminated: *mut bool,
    degree: *mut usize,
    total_dim: *mut usize,
) -> QkStatus {
    guard(|| {
        let tower = &handle(t)?.tower;
        if terminated.is_null() || degree.is_null() || total_dim.is_null() {
            return Err(null("out"));
        }
        match tower.termination() {
            Termination::Terminated { degree: d } => {
                *terminated = true;
                *degree = d;
                *total_dim = tower.total_dim().expect("terminated");
            }
            Termination::NotTerminated { .. } => *terminated = false,
        }
        Ok(())
    })
}

/// Run `qkhilbert verify` for `scope` (`"all"`, `"hilbert"` or `"prolong"`).
/// `passed` receives the verdict; `json_out`, if not null, the report.
///
/// # Safety
/// `scope` must be a NUL-terminated string; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qk_verify(
    scope: *const c_char,
    r_max: i64,
    passed: *mut bool,
    json_out: *mut *mut c_char,
) -> QkStatus {
    guard(|| {
        let scope = match read_str(scope, "scope")? {
            "all" => Scope::All,
            "hilbert" => Scope::Hilbert,
            "prolong" => Scope::Prolong,
            other => return Err((QkStatus::InvalidArgument, format!("unknown scope {other:?}"))),
        };
        if r_max < 0 {
            return Err((QkStatus::InvalidArgument, "r_max must be non-negative".into()));
        }
        if passed.is_null() {
            return Err(null("passed"));
        }
        let report = verify_suite(scope, r_max, None);
        *passed = report.passed();
        if !json_out.is_null() {
            write_string(json_out, report.to_json())?;
        }
        Ok(())
    })
}
