//! Exercise the C entry points from Rust, the way a foreign caller would.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use ybx_ffi::*;

const FIVE: &str = r#"{"kind":"permutations",
    "sigma":[[2,3,4,1,5],[4,1,2,3,5],[2,3,4,1,5],[4,1,2,3,5],[1,2,3,4,5]],
    "tau":[[2,3,4,1,5],[4,1,2,3,5],[2,3,4,1,5],[4,1,2,3,5],[1,2,3,4,5]]}"#;

fn parse(json: &str) -> *mut YbxSolution {
    let c = CString::new(json).unwrap();
    let mut handle: *mut YbxSolution = ptr::null_mut();
    let status = unsafe { ybx_solution_parse_json(c.as_ptr(), &mut handle) };
    assert!(status == YbxStatus::Ok);
    assert!(!handle.is_null());
    handle
}

fn take_string(produce: impl FnOnce(*mut *mut c_char) -> YbxStatus) -> String {
    let mut out: *mut c_char = ptr::null_mut();
    let status = produce(&mut out);
    assert!(status == YbxStatus::Ok);
    let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
    unsafe { ybx_string_free(out) };
    text
}

#[test]
fn parse_axioms_and_free() {
    let handle = parse(FIVE);
    assert_eq!(unsafe { ybx_solution_size(handle) }, 5);
    let mut axioms = YbxAxioms {
        nondegenerate: false,
        involutive: false,
        braided: false,
        symmetric: false,
        qybe: false,
        unitary: false,
    };
    let status = unsafe { ybx_solution_axioms(handle, &mut axioms) };
    assert!(status == YbxStatus::Ok);
    assert!(axioms.nondegenerate && axioms.symmetric && axioms.qybe && axioms.unitary);
    unsafe { ybx_solution_free(handle) };
}

#[test]
fn analysis_json_matches_library() {
    let handle = parse(FIVE);
    let text = take_string(|out| unsafe { ybx_solution_analysis_json(handle, out) });
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["decomposable"], serde_json::Value::Bool(true));
    assert_eq!(value["delta_pure"], serde_json::Value::Bool(false));
    assert_eq!(value["parabolics"].as_array().unwrap().len(), 3);
    unsafe { ybx_solution_free(handle) };
}

#[test]
fn lattice_presentation_foldings_document() {
    let handle = parse(FIVE);
    let lattice = take_string(|out| unsafe { ybx_solution_lattice_json(handle, out) });
    let entries: serde_json::Value = serde_json::from_str(&lattice).unwrap();
    assert_eq!(entries.as_array().unwrap().len(), 32);

    let pres = take_string(|out| unsafe { ybx_solution_presentation_json(handle, out) });
    let pres: serde_json::Value = serde_json::from_str(&pres).unwrap();
    assert_eq!(pres["relations"].as_array().unwrap().len(), 10);

    let foldings = take_string(|out| unsafe { ybx_solution_foldings_json(handle, true, out) });
    let foldings: serde_json::Value = serde_json::from_str(&foldings).unwrap();
    assert_eq!(foldings.as_array().unwrap().len(), 1);
    assert_eq!(foldings[0]["strong"], serde_json::Value::Bool(true));

    let doc = take_string(|out| unsafe { ybx_solution_document_json(handle, out) });
    let reparsed = parse(&doc);
    assert_eq!(unsafe { ybx_solution_size(reparsed) }, 5);
    unsafe { ybx_solution_free(reparsed) };
    unsafe { ybx_solution_free(handle) };
}

#[test]
fn error_paths_and_messages() {
    let mut handle: *mut YbxSolution = ptr::null_mut();
    let status = unsafe { ybx_solution_parse_json(ptr::null(), &mut handle) };
    assert!(status == YbxStatus::NullArgument);

    let bad = CString::new("{\"kind\":\"table\"").unwrap();
    let status = unsafe { ybx_solution_parse_json(bad.as_ptr(), &mut handle) };
    assert!(status == YbxStatus::ParseError);
    let needed = unsafe { ybx_last_error_message(ptr::null_mut(), 0) };
    assert!(needed > 0);
    let mut buf = vec![0 as c_char; needed + 1];
    let written = unsafe { ybx_last_error_message(buf.as_mut_ptr(), buf.len()) };
    assert_eq!(written, needed);

    // degenerate input parses but analysis refuses it
    let degenerate = r#"{"kind":"table","n":2,"S":[[[1,1],[1,2]],[[2,1],[2,2]]]}"#;
    let handle = parse(degenerate);
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { ybx_solution_analysis_json(handle, &mut out) };
    assert!(status == YbxStatus::InvalidSolution);
    assert!(out.is_null());
    unsafe { ybx_solution_free(handle) };

    // freeing null is a no-op
    unsafe { ybx_solution_free(ptr::null_mut()) };
    unsafe { ybx_string_free(ptr::null_mut()) };
}

#[test]
fn generated_header_covers_the_api() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/ybx.h"
    ))
    .expect("header generated by the build script");
    for symbol in [
        "ybx_solution_parse_json",
        "ybx_solution_free",
        "ybx_solution_axioms",
        "ybx_solution_analysis_json",
        "ybx_solution_lattice_json",
        "ybx_solution_foldings_json",
        "ybx_solution_presentation_json",
        "ybx_solution_document_json",
        "ybx_string_free",
        "ybx_last_error_message",
        "typedef struct YbxSolution YbxSolution",
    ] {
        assert!(header.contains(symbol), "missing {symbol}");
    }
}
