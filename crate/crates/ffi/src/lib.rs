//! C interface to brimkit.
//!
//! Sessions are opaque handles created by [`brim_session_parse`] and
//! released with [`brim_session_free`]. Every call returns a [`BrimStatus`];
//! on failure [`brim_last_error`] describes what went wrong on the calling
//! thread. Strings handed out by the library must be released with
//! [`brim_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use brimkit::cli::{run_command, CommandArgs, Session};
use brimkit::multiplicity::{br_multiplicity, chi_b, Sampling};
use brimkit::Error;

pub const BRIM_ABI_VERSION: u32 = 1;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrimStatus {
    Ok = 0,
    IdentityFailure = 1,
    InputError = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    ComputationError = 5,
}

/// Opaque session handle.
pub struct BrimSession {
    inner: Session,
}

/// Optional flags for [`brim_run_command`]. Fields guarded by a `has_*`
/// flag are ignored when the flag is false.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct BrimArgs {
    pub has_nu: bool,
    pub nu: i64,
    pub has_j: bool,
    pub j: u32,
    pub has_range: bool,
    pub range_lo: i64,
    pub range_hi: i64,
    pub oracle: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(e: &Error) -> BrimStatus {
    set_error(format!("{}: {e}", e.code()));
    if e.is_input_error() {
        BrimStatus::InputError
    } else {
        BrimStatus::ComputationError
    }
}

fn guard(f: impl FnOnce() -> BrimStatus) -> BrimStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            BrimStatus::ComputationError
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, BrimStatus> {
    if p.is_null() {
        set_error("null pointer argument");
        return Err(BrimStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        BrimStatus::InvalidUtf8
    })
}

#[no_mangle]
pub extern "C" fn brim_abi_version() -> u32 {
    BRIM_ABI_VERSION
}

/// Parses a session file's contents into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brim_session_parse(
    text: *const c_char,
    out: *mut *mut BrimSession,
) -> BrimStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return BrimStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Session::parse(text) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(BrimSession { inner }));
                BrimStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// # Safety
/// `session` must come from [`brim_session_parse`] and not be freed yet.
/// Null is accepted and ignored.
#[no_mangle]
pub unsafe extern "C" fn brim_session_free(session: *mut BrimSession) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// Buchsbaum-Rim multiplicity and whether Φ is a parameter matrix.
///
/// # Safety
/// All pointers must be valid; `session` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn brim_br(
    session: *const BrimSession,
    out_br: *mut i64,
    out_is_parameter: *mut bool,
) -> BrimStatus {
    guard(|| {
        if session.is_null() || out_br.is_null() || out_is_parameter.is_null() {
            set_error("null pointer argument");
            return BrimStatus::NullPointer;
        }
        match br_multiplicity((*session).inner.datum(), Sampling::default()) {
            Ok(r) => match i64::try_from(r.br) {
                Ok(v) => {
                    *out_br = v;
                    *out_is_parameter = r.is_parameter;
                    BrimStatus::Ok
                }
                Err(_) => {
                    set_error("multiplicity does not fit in 64 bits");
                    BrimStatus::ComputationError
                }
            },
            Err(e) => fail(&e),
        }
    })
}

/// Euler characteristic of the complex at degree `nu`.
///
/// # Safety
/// All pointers must be valid; `session` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn brim_chi(
    session: *const BrimSession,
    nu: i64,
    out: *mut i64,
) -> BrimStatus {
    guard(|| {
        if session.is_null() || out.is_null() {
            set_error("null pointer argument");
            return BrimStatus::NullPointer;
        }
        match chi_b((*session).inner.datum(), nu) {
            Ok(c) => {
                *out = c;
                BrimStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Runs a CLI command and hands back its JSON report, also on failure.
/// The status mirrors the CLI exit code.
///
/// # Safety
/// `session` must be a live handle, `command` a NUL-terminated string,
/// `args` null or valid, and `out_json` a valid pointer. Free the returned
/// string with [`brim_string_free`].
#[no_mangle]
pub unsafe extern "C" fn brim_run_command(
    session: *const BrimSession,
    command: *const c_char,
    args: *const BrimArgs,
    out_json: *mut *mut c_char,
) -> BrimStatus {
    guard(|| {
        if session.is_null() || out_json.is_null() {
            set_error("null pointer argument");
            return BrimStatus::NullPointer;
        }
        *out_json = ptr::null_mut();
        let command = match read_str(command) {
            Ok(c) => c,
            Err(s) => return s,
        };
        let a = if args.is_null() { BrimArgs::default() } else { *args };
        let cargs = CommandArgs {
            nu: a.has_nu.then_some(a.nu),
            j: a.has_j.then_some(a.j as usize),
            range: a.has_range.then_some((a.range_lo, a.range_hi)),
            oracle: a.oracle,
        };
        let outcome = if brimkit::cli::COMMANDS.contains(&command) {
            run_command(&(*session).inner, command, &cargs)
        } else {
            brimkit::cli::error_outcome(command, &Error::UnknownCommand(command.to_string()))
        };
        if let Some(err) = outcome.report.get("error") {
            set_error(err["message"].as_str().unwrap_or("error").to_string());
        }
        match CString::new(outcome.to_json()) {
            Ok(s) => *out_json = s.into_raw(),
            Err(_) => {
                set_error("report contains a NUL byte");
                return BrimStatus::ComputationError;
            }
        }
        match outcome.exit_code {
            0 => BrimStatus::Ok,
            1 if outcome.report.get("error").is_some() => BrimStatus::ComputationError,
            1 => BrimStatus::IdentityFailure,
            _ => BrimStatus::InputError,
        }
    })
}

/// # Safety
/// `s` must come from this library and not be freed yet. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn brim_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn brim_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
