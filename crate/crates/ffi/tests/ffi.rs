use std::ffi::{CStr, CString};
use std::ptr;

use toricenv_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(te_last_error_message()) }.to_string_lossy().into_owned()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_string_lossy().into_owned();
    te_string_free(p);
    s
}

#[test]
fn named_group_order_and_algorithm1() {
    let tag = CString::new("binary-tetrahedral").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(te_group_named(tag.as_ptr(), &mut g), TeStatus::Ok);
        let mut order = 0usize;
        assert_eq!(te_group_order(g, &mut order), TeStatus::Ok);
        assert_eq!(order, 24);

        let mut r = ptr::null_mut();
        assert_eq!(te_algorithm1(g, TeOrder::Grlex, TeStrategy::Interpolation, &mut r), TeStatus::Ok);
        let mut d = 0u32;
        assert_eq!(te_result_d(r, &mut d), TeStatus::Ok);
        assert_eq!(d, 3);
        let mut lines = 0usize;
        assert_eq!(te_result_num_lines(r, &mut lines), TeStatus::Ok);
        assert_eq!(lines, 12);
        let mut js = ptr::null_mut();
        assert_eq!(te_result_json(r, &mut js), TeStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(js)).unwrap();
        assert_eq!(v["d"], 3);
        assert_eq!(v["group"], "binary-tetrahedral");
        te_result_free(r);
        te_group_free(g);
    }
    assert!(last_error().is_empty());
}

#[test]
fn group_from_json_matches_catalog_cyclic() {
    // diag(i, -i) over Q(i): coefficient vectors in the power basis of ζ4.
    let doc = r#"{"n":2,"conductor":4,"generators":[[[["0","1"],["0","0"]],[["0","0"],["0","-1"]]]]}"#;
    let json = CString::new(doc).unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(te_group_from_json(json.as_ptr(), &mut g), TeStatus::Ok, "{}", last_error());
        let mut order = 0usize;
        assert_eq!(te_group_order(g, &mut order), TeStatus::Ok);
        assert_eq!(order, 4);
        te_group_free(g);
    }
}

#[test]
fn bounds_json_contains_headline() {
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(te_bounds_json(3, &mut s), TeStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["headline"], 360);
        assert_eq!(v["n"], 3);
    }
}

#[test]
fn ideal_profile_of_zero_ideal() {
    let json = CString::new(r#"{"vars":["a","b","c","d"],"conductor":1,"generators":[]}"#).unwrap();
    let mut i = ptr::null_mut();
    unsafe {
        assert_eq!(te_ideal_from_json(json.as_ptr(), &mut i), TeStatus::Ok, "{}", last_error());
        let (mut dim, mut deg) = (0usize, 0u64);
        assert_eq!(te_ideal_profile(i, &mut dim, &mut deg), TeStatus::Ok);
        assert_eq!((dim, deg), (4, 1));
        te_ideal_free(i);
    }
}

#[test]
fn ideal_profile_of_points() {
    let json = CString::new(r#"{"vars":["x","y"],"conductor":1,"generators":["x^2 - 1","y^3 - y"]}"#).unwrap();
    let mut i = ptr::null_mut();
    unsafe {
        assert_eq!(te_ideal_from_json(json.as_ptr(), &mut i), TeStatus::Ok, "{}", last_error());
        let (mut dim, mut deg) = (9usize, 0u64);
        assert_eq!(te_ideal_profile(i, &mut dim, &mut deg), TeStatus::Ok);
        assert_eq!((dim, deg), (0, 6));
        te_ideal_free(i);
    }
}

#[test]
fn null_pointers_are_reported() {
    let mut order = 0usize;
    unsafe {
        assert_eq!(te_group_order(ptr::null(), &mut order), TeStatus::NullPointer);
        assert!(last_error().contains("group"));
        assert_eq!(te_group_named(ptr::null(), &mut ptr::null_mut()), TeStatus::NullPointer);
        assert_eq!(te_bounds_json(3, ptr::null_mut()), TeStatus::NullPointer);
        te_group_free(ptr::null_mut());
        te_result_free(ptr::null_mut());
        te_ideal_free(ptr::null_mut());
        te_string_free(ptr::null_mut());
    }
}

#[test]
fn bad_inputs_map_to_status_codes() {
    let mut g = ptr::null_mut();
    unsafe {
        let tag = CString::new("binary-dodecahedral").unwrap();
        assert_eq!(te_group_named(tag.as_ptr(), &mut g), TeStatus::ParseError);
        assert!(!last_error().is_empty());
        assert!(g.is_null());

        let bad = CString::new(r#"{"n":2,"conductor":4,"generators":[[[["0","x"]]]]}"#).unwrap();
        let status = te_group_from_json(bad.as_ptr(), &mut g);
        assert_ne!(status, TeStatus::Ok);
        assert!(!last_error().is_empty());

        // A group outside SL2 is rejected by Algorithm 1.
        let doc = r#"{"n":2,"conductor":1,"generators":[[[["-1"],["0"]],[["0"],["1"]]]]}"#;
        let json = CString::new(doc).unwrap();
        assert_eq!(te_group_from_json(json.as_ptr(), &mut g), TeStatus::Ok, "{}", last_error());
        let mut r = ptr::null_mut();
        let status = te_algorithm1(g, TeOrder::Grevlex, TeStrategy::Intersection, &mut r);
        assert_eq!(status, TeStatus::InvalidArgument);
        assert!(r.is_null());
        te_group_free(g);

        let mut s = ptr::null_mut();
        assert_eq!(te_bounds_json(0, &mut s), TeStatus::InvalidArgument);
    }
}

#[test]
fn error_message_clears_after_success() {
    let mut order = 0usize;
    unsafe {
        assert_eq!(te_group_order(ptr::null(), &mut order), TeStatus::NullPointer);
        assert!(!last_error().is_empty());
        let mut s = ptr::null_mut();
        assert_eq!(te_bounds_json(2, &mut s), TeStatus::Ok);
        te_string_free(s);
    }
    assert!(last_error().is_empty());
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/toricenv.h")).unwrap();
    for f in [
        "te_group_named",
        "te_group_from_json",
        "te_group_order",
        "te_group_free",
        "te_algorithm1",
        "te_result_d",
        "te_result_num_lines",
        "te_result_json",
        "te_result_free",
        "te_ideal_from_json",
        "te_ideal_profile",
        "te_ideal_free",
        "te_bounds_json",
        "te_last_error_message",
        "te_string_free",
        "TE_STATUS_NULL_POINTER",
        "typedef struct TeGroup TeGroup",
    ] {
        assert!(header.contains(f), "header lacks {f}");
    }
}
