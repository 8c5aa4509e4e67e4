//! C ABI over the `ybx` library: opaque solution handles, status codes,
//! and JSON strings for the structured reports. The generated header
//! lives at `include/ybx.h`.
//!
//! Ownership rules: handles from `ybx_solution_parse_json` are released
//! with `ybx_solution_free`; strings returned through `char **` output
//! parameters are released with `ybx_string_free`. All functions are safe
//! to call from multiple threads; the last-error message is thread-local.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use ybx::document::SolutionDocument;
use ybx::error::Error;
use ybx::folding;
use ybx::garside::DivisorLattice;
use ybx::report;
use ybx::solution::SolutionTable;

/// Opaque handle to a validated solution table.
pub struct YbxSolution {
    table: SolutionTable,
}

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum YbxStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// The input could not be parsed as a solution document.
    ParseError = 2,
    /// The operation needs a symmetric non-degenerate solution.
    InvalidSolution = 3,
    /// The request exceeds a documented size limit.
    Unsupported = 4,
    /// A theorem-level cross-check failed; see the last error message.
    InternalError = 5,
}

/// Axiom verdicts for one solution.
#[repr(C)]
pub struct YbxAxioms {
    pub nondegenerate: bool,
    pub involutive: bool,
    pub braided: bool,
    pub symmetric: bool,
    pub qybe: bool,
    pub unitary: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> YbxStatus {
    match e {
        Error::Document(_)
        | Error::NotAPermutation { .. }
        | Error::NotPairBijection(..)
        | Error::RelationSet(_)
        | Error::Json(_) => YbxStatus::ParseError,
        Error::Precondition(_) | Error::NotInvariant(_) => YbxStatus::InvalidSolution,
        Error::Unsupported(_) => YbxStatus::Unsupported,
        _ => YbxStatus::InternalError,
    }
}

fn fail(e: Error) -> YbxStatus {
    set_error(&e.to_string());
    status_of(&e)
}

fn emit_string(out: *mut *mut c_char, text: String) -> YbxStatus {
    let cstring = match CString::new(text) {
        Ok(c) => c,
        Err(_) => {
            set_error("output contained an interior nul byte");
            return YbxStatus::InternalError;
        }
    };
    unsafe { *out = cstring.into_raw() };
    YbxStatus::Ok
}

/// Copy the message of the most recent error on this thread into `buf`
/// (truncated, always nul-terminated when `len > 0`) and return the full
/// message length in bytes, excluding the terminator.
///
/// # Safety
/// `buf` must point to `len` writable bytes, or be null (query mode).
#[no_mangle]
pub unsafe extern "C" fn ybx_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            std::ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Parse a solution document (JSON, any of the three kinds) and return a
/// handle to the validated table.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ybx_solution_parse_json(
    json: *const c_char,
    out: *mut *mut YbxSolution,
) -> YbxStatus {
    if json.is_null() || out.is_null() {
        set_error("null argument");
        return YbxStatus::NullArgument;
    }
    let text = match CStr::from_ptr(json).to_str() {
        Ok(t) => t,
        Err(_) => {
            set_error("input is not valid UTF-8");
            return YbxStatus::ParseError;
        }
    };
    let table = match SolutionDocument::from_json(text).and_then(|d| d.load()) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    *out = Box::into_raw(Box::new(YbxSolution { table }));
    YbxStatus::Ok
}

/// Release a handle obtained from `ybx_solution_parse_json`. Null is a
/// no-op.
///
/// # Safety
/// `handle` must come from `ybx_solution_parse_json` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ybx_solution_free(handle: *mut YbxSolution) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Release a string obtained from any `*_json` output parameter. Null is
/// a no-op.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ybx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of elements of the underlying set, or -1 for a null handle.
///
/// # Safety
/// `handle` must be valid or null.
#[no_mangle]
pub unsafe extern "C" fn ybx_solution_size(handle: *const YbxSolution) -> i32 {
    if handle.is_null() {
        return -1;
    }
    (*handle).table.n() as i32
}

/// Evaluate the solution axioms and R-matrix conditions.
///
/// # Safety
/// `handle` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ybx_solution_axioms(
    handle: *const YbxSolution,
    out: *mut YbxAxioms,
) -> YbxStatus {
    if handle.is_null() || out.is_null() {
        set_error("null argument");
        return YbxStatus::NullArgument;
    }
    let rep = report::CheckReport::of(&(*handle).table);
    *out = YbxAxioms {
        nondegenerate: rep.nondegenerate,
        involutive: rep.involutive,
        braided: rep.braided,
        symmetric: rep.symmetric,
        qybe: rep.qybe,
        unitary: rep.unitary,
    };
    YbxStatus::Ok
}

unsafe fn with_lattice(
    handle: *const YbxSolution,
    out: *mut *mut c_char,
    f: impl FnOnce(&SolutionTable, &DivisorLattice) -> Result<String, Error>,
) -> YbxStatus {
    if handle.is_null() || out.is_null() {
        set_error("null argument");
        return YbxStatus::NullArgument;
    }
    let table = &(*handle).table;
    if let Err(e) = table.require_valid() {
        return fail(e);
    }
    let lat = match DivisorLattice::build(table) {
        Ok(l) => l,
        Err(e) => return fail(e),
    };
    match f(table, &lat) {
        Ok(text) => emit_string(out, text),
        Err(e) => fail(e),
    }
}

/// Full analysis report (invariant subsets, parabolics, decomposability,
/// Δ-classes) as JSON.
///
/// # Safety
/// `handle` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ybx_solution_analysis_json(
    handle: *const YbxSolution,
    out: *mut *mut c_char,
) -> YbxStatus {
    with_lattice(handle, out, |table, lat| {
        let rep = report::AnalysisReport::of(table, lat)?;
        Ok(serde_json::to_string(&rep)?)
    })
}

/// Divisor-lattice dump as JSON.
///
/// # Safety
/// `handle` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ybx_solution_lattice_json(
    handle: *const YbxSolution,
    out: *mut *mut c_char,
) -> YbxStatus {
    with_lattice(handle, out, |_, lat| {
        Ok(serde_json::to_string(&report::lattice_dump(lat))?)
    })
}

/// Folding reports as JSON; set `strong_only` to keep only foldings whose
/// blocks generate standard parabolic subgroups.
///
/// # Safety
/// `handle` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ybx_solution_foldings_json(
    handle: *const YbxSolution,
    strong_only: bool,
    out: *mut *mut c_char,
) -> YbxStatus {
    with_lattice(handle, out, |table, lat| {
        let mut reports = folding::find_foldings(table, lat, None)?;
        if strong_only {
            reports.retain(|r| r.strong);
        }
        let entries: Vec<report::FoldingEntry> = reports
            .iter()
            .map(|r| report::FoldingEntry::of(lat, r))
            .collect();
        Ok(serde_json::to_string(&entries)?)
    })
}

/// The defining relations of the structure monoid as JSON
/// (`{"n": ..., "relations": [[[i,j],[k,l]], ...]}`, 1-based).
///
/// # Safety
/// `handle` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ybx_solution_presentation_json(
    handle: *const YbxSolution,
    out: *mut *mut c_char,
) -> YbxStatus {
    if handle.is_null() || out.is_null() {
        set_error("null argument");
        return YbxStatus::NullArgument;
    }
    let rs = match (*handle).table.presentation() {
        Ok(rs) => rs,
        Err(e) => return fail(e),
    };
    let rels: Vec<[[usize; 2]; 2]> = rs
        .relations()
        .iter()
        .map(|&((a, b), (c, d))| [[a + 1, b + 1], [c + 1, d + 1]])
        .collect();
    let text = match serde_json::to_string(&serde_json::json!({
        "n": rs.n(),
        "relations": rels,
    })) {
        Ok(t) => t,
        Err(e) => return fail(e.into()),
    };
    emit_string(out, text)
}

/// Canonical table-kind document for the solution, as JSON.
///
/// # Safety
/// `handle` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ybx_solution_document_json(
    handle: *const YbxSolution,
    out: *mut *mut c_char,
) -> YbxStatus {
    if handle.is_null() || out.is_null() {
        set_error("null argument");
        return YbxStatus::NullArgument;
    }
    emit_string(
        out,
        SolutionDocument::from_table(&(*handle).table).to_json(),
    )
}
