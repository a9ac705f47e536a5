//! C ABI for the sahar toolkit.
//!
//! Conventions:
//!
//! - Rationals are opaque [`SaharRational`] handles created by the
//!   `sahar_rational_*` constructors and released with
//!   [`sahar_rational_free`].
//! - Every fallible call returns a [`SaharStatus`]; out-parameters are
//!   written only on `Ok`. On failure a thread-local message is
//!   available from [`sahar_last_error`] until the next call on the
//!   same thread.
//! - Returned strings are NUL-terminated, UTF-8, owned by the caller,
//!   and released with [`sahar_string_free`].
//!
//! The generated header lands in `include/sahar.h`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use sahar::sexagesimal::{format_sex, is_regular, parse_flexible, FormatMode, SexRational};
use sahar::solids::SolidSpec;
use sahar::tablet;

/// Result of every fallible FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SaharStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DomainError = 4,
    JsonError = 5,
    InternalError = 6,
}

/// How `sahar_rational_format` renders a numeral.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SaharFormatMode {
    Absolute = 0,
    Floating = 1,
}

/// Replay outcome written by the `sahar_replay_*` calls.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SaharReplayStatus {
    AllOk = 0,
    AnnotatedErrorsOnly = 1,
    MismatchFound = 2,
}

/// An exact rational number (opaque).
pub struct SaharRational(SexRational);

thread_local! {
    static LAST_ERROR: RefCell<CString> =
        RefCell::new(CString::new("no error").expect("static"));
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("NULs removed");
    });
}

/// The message for the most recent failure on this thread. Borrowed;
/// valid until the next library call from the same thread.
#[no_mangle]
pub extern "C" fn sahar_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

fn guard<F: FnOnce() -> SaharStatus>(body: F) -> SaharStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            SaharStatus::InternalError
        }
    }
}

/// Reads a C string argument; records an error and returns the
/// matching status when the pointer or encoding is unusable.
unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, SaharStatus> {
    if ptr.is_null() {
        set_error(&format!("{what} is NULL"));
        return Err(SaharStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        SaharStatus::InvalidUtf8
    })
}

fn require_out<T>(ptr: *mut T, what: &str) -> Result<(), SaharStatus> {
    if ptr.is_null() {
        set_error(&format!("{what} is NULL"));
        Err(SaharStatus::NullPointer)
    } else {
        Ok(())
    }
}

unsafe fn borrow_rational<'a>(
    ptr: *const SaharRational,
    what: &str,
) -> Result<&'a SexRational, SaharStatus> {
    if ptr.is_null() {
        set_error(&format!("{what} is NULL"));
        return Err(SaharStatus::NullPointer);
    }
    Ok(&(*ptr).0)
}

fn give_rational(value: SexRational, out: *mut *mut SaharRational) -> SaharStatus {
    unsafe {
        *out = Box::into_raw(Box::new(SaharRational(value)));
    }
    SaharStatus::Ok
}

fn give_string(text: String, out: *mut *mut c_char) -> SaharStatus {
    match CString::new(text) {
        Ok(s) => {
            unsafe {
                *out = s.into_raw();
            }
            SaharStatus::Ok
        }
        Err(_) => {
            set_error("result contained an interior NUL");
            SaharStatus::InternalError
        }
    }
}

/// Parses a sexagesimal numeral ("1,12;15") or decimal fraction
/// ("289/4") into a new rational handle.
#[no_mangle]
pub unsafe extern "C" fn sahar_rational_parse(
    text: *const c_char,
    out: *mut *mut SaharRational,
) -> SaharStatus {
    guard(|| {
        let text = match read_str(text, "text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        if let Err(s) = require_out(out, "out") {
            return s;
        }
        match parse_flexible(text) {
            Ok(q) => give_rational(q, out),
            Err(e) => {
                set_error(&e.to_string());
                SaharStatus::ParseError
            }
        }
    })
}

/// Builds num/den. `den` must be nonzero.
#[no_mangle]
pub unsafe extern "C" fn sahar_rational_from_ratio(
    num: i64,
    den: i64,
    out: *mut *mut SaharRational,
) -> SaharStatus {
    guard(|| {
        if let Err(s) = require_out(out, "out") {
            return s;
        }
        match SexRational::new(num, den) {
            Ok(q) => give_rational(q, out),
            Err(e) => {
                set_error(&e.to_string());
                SaharStatus::DomainError
            }
        }
    })
}

/// Releases a rational handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn sahar_rational_free(handle: *mut SaharRational) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Renders a numeral with at most `max_places` fraction places; a
/// truncated expansion ends in U+2026.
#[no_mangle]
pub unsafe extern "C" fn sahar_rational_format(
    handle: *const SaharRational,
    mode: SaharFormatMode,
    max_places: usize,
    out: *mut *mut c_char,
) -> SaharStatus {
    guard(|| {
        let q = match borrow_rational(handle, "handle") {
            Ok(q) => q,
            Err(s) => return s,
        };
        if let Err(s) = require_out(out, "out") {
            return s;
        }
        let mode = match mode {
            SaharFormatMode::Absolute => FormatMode::Absolute,
            SaharFormatMode::Floating => FormatMode::Floating,
        };
        give_string(format_sex(q, mode, max_places), out)
    })
}

/// Renders the reduced decimal fraction, e.g. "289/4".
#[no_mangle]
pub unsafe extern "C" fn sahar_rational_decimal(
    handle: *const SaharRational,
    out: *mut *mut c_char,
) -> SaharStatus {
    guard(|| {
        let q = match borrow_rational(handle, "handle") {
            Ok(q) => q,
            Err(s) => return s,
        };
        if let Err(s) = require_out(out, "out") {
            return s;
        }
        give_string(q.to_string(), out)
    })
}

/// Nearest double, for plotting and quick checks.
#[no_mangle]
pub unsafe extern "C" fn sahar_rational_to_double(
    handle: *const SaharRational,
    out: *mut f64,
) -> SaharStatus {
    guard(|| {
        let q = match borrow_rational(handle, "handle") {
            Ok(q) => q,
            Err(s) => return s,
        };
        if let Err(s) = require_out(out, "out") {
            return s;
        }
        *out = q.to_f64();
        SaharStatus::Ok
    })
}

unsafe fn binary_op(
    a: *const SaharRational,
    b: *const SaharRational,
    out: *mut *mut SaharRational,
    op: impl FnOnce(&SexRational, &SexRational) -> Result<SexRational, String>,
) -> SaharStatus {
    guard(|| {
        let a = match borrow_rational(a, "a") {
            Ok(q) => q,
            Err(s) => return s,
        };
        let b = match borrow_rational(b, "b") {
            Ok(q) => q,
            Err(s) => return s,
        };
        if let Err(s) = require_out(out, "out") {
            return s;
        }
        match op(a, b) {
            Ok(value) => give_rational(value, out),
            Err(message) => {
                set_error(&message);
                SaharStatus::DomainError
            }
        }
    })
}

/// out = a + b
#[no_mangle]
pub unsafe extern "C" fn sahar_rational_add(
    a: *const SaharRational,
    b: *const SaharRational,
    out: *mut *mut SaharRational,
) -> SaharStatus {
    binary_op(a, b, out, |a, b| Ok(a + b))
}

/// out = a - b
#[no_mangle]
pub unsafe extern "C" fn sahar_rational_sub(
    a: *const SaharRational,
    b: *const SaharRational,
    out: *mut *mut SaharRational,
) -> SaharStatus {
    binary_op(a, b, out, |a, b| Ok(a - b))
}

/// out = a * b
#[no_mangle]
pub unsafe extern "C" fn sahar_rational_mul(
    a: *const SaharRational,
    b: *const SaharRational,
    out: *mut *mut SaharRational,
) -> SaharStatus {
    binary_op(a, b, out, |a, b| Ok(a * b))
}

/// out = a / b; fails on b = 0.
#[no_mangle]
pub unsafe extern "C" fn sahar_rational_div(
    a: *const SaharRational,
    b: *const SaharRational,
    out: *mut *mut SaharRational,
) -> SaharStatus {
    binary_op(a, b, out, |a, b| a.checked_div(b).map_err(|e| e.to_string()))
}

/// out = 1/q; fails on q = 0.
#[no_mangle]
pub unsafe extern "C" fn sahar_rational_reciprocal(
    handle: *const SaharRational,
    out: *mut *mut SaharRational,
) -> SaharStatus {
    guard(|| {
        let q = match borrow_rational(handle, "handle") {
            Ok(q) => q,
            Err(s) => return s,
        };
        if let Err(s) = require_out(out, "out") {
            return s;
        }
        match q.reciprocal() {
            Ok(r) => give_rational(r, out),
            Err(e) => {
                set_error(&e.to_string());
                SaharStatus::DomainError
            }
        }
    })
}

/// Writes 1 when n is regular (reciprocal terminates in base 60),
/// 0 otherwise. Fails on n = 0.
#[no_mangle]
pub unsafe extern "C" fn sahar_is_regular(n: u64, out: *mut i32) -> SaharStatus {
    guard(|| {
        if let Err(s) = require_out(out, "out") {
            return s;
        }
        match is_regular(n) {
            Ok(flag) => {
                unsafe {
                    *out = i32::from(flag);
                }
                SaharStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                SaharStatus::DomainError
            }
        }
    })
}

/// Evaluates a solid descriptor (the JSON shape used by `sahar volume
/// spec`) and returns a JSON object `{kind, volume, display}` with the
/// volume in cubic nindan.
#[no_mangle]
pub unsafe extern "C" fn sahar_volume_from_json(
    descriptor: *const c_char,
    digits: u32,
    out: *mut *mut c_char,
) -> SaharStatus {
    guard(|| {
        let text = match read_str(descriptor, "descriptor") {
            Ok(t) => t,
            Err(s) => return s,
        };
        if let Err(s) = require_out(out, "out") {
            return s;
        }
        let spec: SolidSpec = match serde_json::from_str(text) {
            Ok(s) => s,
            Err(e) => {
                set_error(&e.to_string());
                return SaharStatus::JsonError;
            }
        };
        let volume = match spec.volume(digits) {
            Ok(v) => v,
            Err(e) => {
                set_error(&e.to_string());
                return SaharStatus::DomainError;
            }
        };
        let body = serde_json::json!({
            "kind": spec.kind_name(),
            "volume": volume,
            "display": volume.to_string(),
        });
        give_string(body.to_string(), out)
    })
}

fn replay_status(status: tablet::TraceStatus) -> SaharReplayStatus {
    match status {
        tablet::TraceStatus::AllOk => SaharReplayStatus::AllOk,
        tablet::TraceStatus::AnnotatedErrorsOnly => SaharReplayStatus::AnnotatedErrorsOnly,
        tablet::TraceStatus::MismatchFound => SaharReplayStatus::MismatchFound,
    }
}

fn replay_script(
    script: &tablet::Script,
    out_trace: *mut *mut c_char,
    out_status: *mut SaharReplayStatus,
) -> SaharStatus {
    let trace = match tablet::run(script) {
        Ok(t) => t,
        Err(e) => {
            set_error(&e.to_string());
            return SaharStatus::DomainError;
        }
    };
    unsafe {
        *out_status = replay_status(trace.status());
    }
    give_string(trace.to_json().to_string(), out_trace)
}

/// Replays a bundled script by name ("SMT14-P1", "SMT14-P2",
/// "BM85194-R41"), returning the trace JSON and the replay verdict.
#[no_mangle]
pub unsafe extern "C" fn sahar_replay_bundled(
    name: *const c_char,
    out_trace: *mut *mut c_char,
    out_status: *mut SaharReplayStatus,
) -> SaharStatus {
    guard(|| {
        let name = match read_str(name, "name") {
            Ok(t) => t,
            Err(s) => return s,
        };
        if let Err(s) = require_out(out_trace, "out_trace") {
            return s;
        }
        if let Err(s) = require_out(out_status, "out_status") {
            return s;
        }
        match tablet::bundled(name) {
            Some(script) => replay_script(&script, out_trace, out_status),
            None => {
                set_error(&format!("no bundled script named {name:?}"));
                SaharStatus::DomainError
            }
        }
    })
}

/// Parses and replays script source text.
#[no_mangle]
pub unsafe extern "C" fn sahar_replay_source(
    source: *const c_char,
    out_trace: *mut *mut c_char,
    out_status: *mut SaharReplayStatus,
) -> SaharStatus {
    guard(|| {
        let source = match read_str(source, "source") {
            Ok(t) => t,
            Err(s) => return s,
        };
        if let Err(s) = require_out(out_trace, "out_trace") {
            return s;
        }
        if let Err(s) = require_out(out_status, "out_status") {
            return s;
        }
        match tablet::parse_script(source) {
            Ok(script) => replay_script(&script, out_trace, out_status),
            Err(e) => {
                set_error(&e.to_string());
                SaharStatus::ParseError
            }
        }
    })
}

/// JSON catalog of the bundled scripts:
/// `[{name, tablet, lines, summary}, ...]`.
#[no_mangle]
pub unsafe extern "C" fn sahar_bundled_scripts(out: *mut *mut c_char) -> SaharStatus {
    guard(|| {
        if let Err(s) = require_out(out, "out") {
            return s;
        }
        let items: Vec<serde_json::Value> = tablet::list_bundled()
            .iter()
            .map(|i| {
                serde_json::json!({
                    "name": i.name,
                    "tablet": i.tablet,
                    "lines": i.lines,
                    "summary": i.summary,
                })
            })
            .collect();
        give_string(serde_json::Value::Array(items).to_string(), out)
    })
}

/// Releases a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn sahar_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}
