use std::ffi::{CStr, CString};
use std::ptr;

use brimkit_ffi::*;

const CATALOG: &str = "vars x y\nmatrix 2 3\n  x y 0\n  0 x y\n";

fn parse(text: &str) -> (BrimStatus, *mut BrimSession) {
    let c = CString::new(text).unwrap();
    let mut h = ptr::null_mut();
    let st = unsafe { brim_session_parse(c.as_ptr(), &mut h) };
    (st, h)
}

fn last_error() -> String {
    let p = brim_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn multiplicity_and_chi() {
    assert_eq!(brim_abi_version(), 1);
    let (st, h) = parse(CATALOG);
    assert_eq!(st, BrimStatus::Ok);
    let (mut br, mut param) = (0i64, false);
    assert_eq!(unsafe { brim_br(h, &mut br, &mut param) }, BrimStatus::Ok);
    assert_eq!((br, param), (3, true));
    let mut chi = 0i64;
    for nu in -2..=4 {
        assert_eq!(unsafe { brim_chi(h, nu, &mut chi) }, BrimStatus::Ok);
        assert_eq!(chi, 3);
    }
    unsafe { brim_session_free(h) };
}

#[test]
fn run_command_json() {
    let (_, h) = parse(CATALOG);
    let cmd = CString::new("complex").unwrap();
    let args = BrimArgs {
        has_nu: true,
        nu: 0,
        ..Default::default()
    };
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { brim_run_command(h, cmd.as_ptr(), &args, &mut out) },
        BrimStatus::Ok
    );
    let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_owned();
    unsafe { brim_string_free(out) };
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["ranks"], serde_json::json!([1, 3, 2]));

    let cmd = CString::new("verify").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { brim_run_command(h, cmd.as_ptr(), ptr::null(), &mut out) },
        BrimStatus::Ok
    );
    unsafe { brim_string_free(out) };

    let cmd = CString::new("nope").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { brim_run_command(h, cmd.as_ptr(), ptr::null(), &mut out) },
        BrimStatus::InputError
    );
    assert!(!out.is_null());
    unsafe { brim_string_free(out) };
    assert!(last_error().contains("nope"));
    unsafe { brim_session_free(h) };
}

#[test]
fn error_paths() {
    let (st, h) = parse("vars x y\nmatrix 2 1\n  x\n  y\n");
    assert_eq!(st, BrimStatus::InputError);
    assert!(h.is_null());
    assert!(last_error().contains("f >= g required"));

    let mut h = ptr::null_mut();
    assert_eq!(unsafe { brim_session_parse(ptr::null(), &mut h) }, BrimStatus::NullPointer);
    let bad = [0xffu8, 0xfe, 0];
    assert_eq!(
        unsafe { brim_session_parse(bad.as_ptr().cast(), &mut h) },
        BrimStatus::InvalidUtf8
    );

    let (_, h) = parse("vars x y\nmatrix 2 3\n  x 0 0\n  0 x 0\n");
    let (mut br, mut param) = (0i64, false);
    assert_eq!(unsafe { brim_br(h, &mut br, &mut param) }, BrimStatus::InputError);
    assert!(last_error().starts_with("certificate_missing"));
    assert_eq!(unsafe { brim_br(h, ptr::null_mut(), &mut param) }, BrimStatus::NullPointer);
    unsafe { brim_session_free(h) };
    unsafe { brim_session_free(ptr::null_mut()) };
    unsafe { brim_string_free(ptr::null_mut()) };
}

#[test]
fn header_lists_the_api() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/brimkit.h")).unwrap();
    for name in [
        "brim_abi_version",
        "brim_session_parse",
        "brim_session_free",
        "brim_br",
        "brim_chi",
        "brim_run_command",
        "brim_string_free",
        "brim_last_error",
        "typedef struct BrimSession BrimSession",
        "BRIM_STATUS_IDENTITY_FAILURE",
    ] {
        assert!(h.contains(name), "{name} missing from header");
    }
}
