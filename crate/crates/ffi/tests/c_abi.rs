use singres_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn new_pair(b1: &[i64], b2: &[i64]) -> *mut SrSupportPair {
    let mut p = ptr::null_mut();
    let st = unsafe { sr_support_pair_new(b1.as_ptr(), b1.len(), b2.as_ptr(), b2.len(), &mut p) };
    assert_eq!(st, SrStatus::Ok);
    p
}

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { sr_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sr_last_error_message()) }.to_str().unwrap().to_owned()
}

#[test]
fn condition_flags_match_the_worked_pair() {
    let p = new_pair(&[0, 1, 3], &[0, 3]);
    let mut f = SrConditionFlags::default();
    assert_eq!(unsafe { sr_check_conditions(p, &mut f) }, SrStatus::Ok);
    assert_eq!((f.cond1, f.cond2, f.cond3, f.cond4, f.cond5, f.cond6), (0, 1, 0, 1, 1, 0));
    assert_eq!((f.generic_a1, f.codim2), (0, 1));
    unsafe { sr_support_pair_free(p) };
}

#[test]
fn json_entry_points_round_trip() {
    let p = new_pair(&[0, 1], &[0, 1]);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sr_resultant_json(p, 16, &mut s) }, SrStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["polynomial"], "-1*f0*g1 + f1*g0");

    assert_eq!(unsafe { sr_classify_json(p, &mut s) }, SrStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["conditions"]["cond6"], true);

    let label = CString::new("N(1)").unwrap();
    assert_eq!(unsafe { sr_estimate_codim_json(p, label.as_ptr(), 0, 3, 6, &mut s) }, SrStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["estimate"], 1);
    unsafe { sr_support_pair_free(p) };

    let sizes = [3usize];
    assert_eq!(unsafe { sr_scan_minors_json(4, 4, sizes.as_ptr(), 1, &mut s) }, SrStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert!(v["sets_checked"].as_u64().unwrap() > 0);
}

#[test]
fn errors_are_reported_by_status_and_message() {
    let mut p = ptr::null_mut();
    let dup = [1i64, 1];
    let ok = [0i64, 2];
    assert_eq!(unsafe { sr_support_pair_new(dup.as_ptr(), 2, ok.as_ptr(), 2, &mut p) }, SrStatus::InvalidInput);
    assert!(last_error().contains("repeated"));
    assert_eq!(unsafe { sr_support_pair_new(ptr::null(), 2, ok.as_ptr(), 2, &mut p) }, SrStatus::NullPointer);
    let mut f = SrConditionFlags::default();
    assert_eq!(unsafe { sr_check_conditions(ptr::null(), &mut f) }, SrStatus::NullPointer);

    let big = new_pair(&[0, 20], &[0, 20]);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sr_resultant_json(big, 16, &mut s) }, SrStatus::Degenerate);
    assert!(last_error().contains("too large"));
    let bad = CString::new("X(1)").unwrap();
    assert_eq!(unsafe { sr_estimate_codim_json(big, bad.as_ptr(), 0, 3, 6, &mut s) }, SrStatus::InvalidInput);
    unsafe { sr_support_pair_free(big) };

    let mut phi = 0u64;
    let b = [3i64, 9, 15];
    assert_eq!(unsafe { sr_phi(b.as_ptr(), 3, &mut phi) }, SrStatus::Ok);
    assert_eq!(phi, 6);
    assert_eq!(last_error(), "");
    unsafe { sr_support_pair_free(ptr::null_mut()) };
    unsafe { sr_string_free(ptr::null_mut()) };
}

#[test]
fn version_matches_package() {
    let v = unsafe { CStr::from_ptr(sr_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

/// The generated header must be valid C and C++ when a compiler is present.
#[test]
fn header_compiles() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/singres.h");
    let text = std::fs::read_to_string(header).unwrap();
    for f in ["sr_support_pair_new", "sr_last_error_message", "SR_STATUS_DEGENERATE", "typedef struct SrSupportPair SrSupportPair"] {
        assert!(text.contains(f), "{f} missing from header");
    }
    for (cc, lang) in [("cc", "c"), ("c++", "c++")] {
        let Ok(out) = std::process::Command::new(cc).args(["-fsyntax-only", "-x", lang, header]).output() else {
            continue;
        };
        assert!(out.status.success(), "{cc}: {}", String::from_utf8_lossy(&out.stderr));
    }
}
