//! C interface: load a `.ck` script into a session handle, then run
//! `charkit` commands against it and read back the rendered report.
//!
//! Every function returns a [`CharkitStatus`]; on failure the message is
//! available from [`charkit_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use charkit::cli::{self, Session};

/// Status codes. The first five match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharkitStatus {
    Ok = 0,
    Failure = 1,
    Parse = 2,
    Hypothesis = 3,
    Resource = 4,
    NullPointer = 5,
    InvalidUtf8 = 6,
    Panic = 7,
}

/// Opaque handle to an evaluated script.
pub struct CharkitSession {
    session: Session,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("nul bytes replaced")));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(code: i32) -> CharkitStatus {
    match code {
        0 => CharkitStatus::Ok,
        2 => CharkitStatus::Parse,
        3 => CharkitStatus::Hypothesis,
        4 => CharkitStatus::Resource,
        _ => CharkitStatus::Failure,
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, CharkitStatus> {
    if p.is_null() {
        set_error("null pointer argument");
        return Err(CharkitStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        CharkitStatus::InvalidUtf8
    })
}

fn guarded(f: impl FnOnce() -> CharkitStatus) -> CharkitStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            CharkitStatus::Panic
        }
    }
}

/// Parses and evaluates `script`; on success stores a new handle in `*out`.
///
/// # Safety
/// `script` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charkit_session_new(script: *const c_char, out: *mut *mut CharkitSession) -> CharkitStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null output pointer");
            return CharkitStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let text = match read_str(script) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Session::from_text(text) {
            Ok(session) => {
                *out = Box::into_raw(Box::new(CharkitSession { session }));
                CharkitStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                status_of(e.exit_code())
            }
        }
    })
}

/// Releases a handle from [`charkit_session_new`]. Null is ignored.
///
/// # Safety
/// `session` must come from [`charkit_session_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn charkit_session_free(session: *mut CharkitSession) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// Runs a command line such as `"ehk --ideal M --emax 2 --format json"`
/// (whitespace separated, no script path) against the session. The report
/// is stored in `*out` even when the status is `RESOURCE` and a partial
/// table exists; free it with [`charkit_string_free`].
///
/// # Safety
/// `session` must be a live handle, `command` a NUL-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn charkit_session_run(
    session: *const CharkitSession,
    command: *const c_char,
    out: *mut *mut c_char,
) -> CharkitStatus {
    guarded(|| {
        if session.is_null() || out.is_null() {
            set_error("null pointer argument");
            return CharkitStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let line = match read_str(command) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let args = std::iter::once("charkit").chain(line.split_whitespace());
        let outcome = cli::run_args(args, Some(&(*session).session));
        if !outcome.stderr.is_empty() {
            set_error(outcome.stderr.trim_end().trim_start_matches("error: "));
        }
        if !outcome.stdout.is_empty() {
            *out = CString::new(outcome.stdout.replace('\0', " ")).expect("nul bytes replaced").into_raw();
        }
        status_of(outcome.code)
    })
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn charkit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Frees a string returned through an `out` parameter. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn charkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn charkit_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
