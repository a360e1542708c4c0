//! Exercise the C ABI the way a foreign caller would: JSON in, status
//! codes and strings out, explicit frees.

use std::ffi::{CStr, CString};
use std::ptr;

use topomatch_ffi::*;

fn square_json() -> CString {
    // Convex quadrilateral: simple, one crossing pair, optimum 2.
    let json = r#"{
        "n": 4,
        "vertices": [["0","0"],["4","0"],["4","4"],["0","4"]],
        "edges": [
            {"u":0,"v":1,"chain":[["0","0"],["4","0"]]},
            {"u":0,"v":2,"chain":[["0","0"],["4","4"]]},
            {"u":0,"v":3,"chain":[["0","0"],["0","4"]]},
            {"u":1,"v":2,"chain":[["4","0"],["4","4"]]},
            {"u":1,"v":3,"chain":[["4","0"],["0","4"]]},
            {"u":2,"v":3,"chain":[["4","4"],["0","4"]]}
        ],
        "complete": true
    }"#;
    CString::new(json).unwrap()
}

#[test]
fn round_trip_validate_solve_oracle() {
    unsafe {
        let mut handle: *mut TmDrawing = ptr::null_mut();
        let status = tm_drawing_from_json(square_json().as_ptr(), &mut handle);
        assert_eq!(status, TmStatus::TmOk);
        assert_eq!(tm_drawing_n(handle), 4);

        let mut summary: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(tm_validate(handle, &mut summary), TmStatus::TmOk);
        assert!(!summary.is_null());
        tm_string_free(summary);

        let mut json: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(tm_solve(handle, 0, &mut json), TmStatus::TmOk);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        tm_string_free(json);
        assert!(text.contains("\"size\""));

        let mut optimum = 0usize;
        assert_eq!(tm_oracle(handle, 1_000_000, &mut optimum), TmStatus::TmOk);
        assert_eq!(optimum, 2);

        tm_drawing_free(handle);
    }
}

#[test]
fn null_and_parse_errors() {
    unsafe {
        let mut handle: *mut TmDrawing = ptr::null_mut();
        assert_eq!(
            tm_drawing_from_json(ptr::null(), &mut handle),
            TmStatus::TmErrNull
        );
        let bad = CString::new("not json").unwrap();
        assert_eq!(
            tm_drawing_from_json(bad.as_ptr(), &mut handle),
            TmStatus::TmErrParse
        );
        assert!(handle.is_null());
        assert_eq!(tm_drawing_n(ptr::null()), 0);
        tm_drawing_free(ptr::null_mut());
        tm_string_free(ptr::null_mut());
    }
}

#[test]
fn header_is_generated() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/topomatch.h");
    let text = std::fs::read_to_string(header).unwrap();
    for symbol in [
        "tm_drawing_from_json",
        "tm_drawing_free",
        "tm_validate",
        "tm_solve",
        "tm_oracle",
        "tm_string_free",
        "TmStatus",
    ] {
        assert!(text.contains(symbol), "header missing {symbol}");
    }
}
