use std::ffi::{CStr, CString};
use std::ptr;

use wielandt_ffi::*;

fn parse(spec: &str) -> *mut WlGroup {
    let c = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { wl_group_parse(c.as_ptr(), &mut g) }, WlStatus::Ok);
    g
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(wl_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn closure_round_trip() {
    let g = parse("6: (3 4)(5 6), (1 2)(5 6)");
    let mut order = 0u64;
    let mut degree = 0usize;
    unsafe {
        assert_eq!(wl_group_order(g, &mut order), WlStatus::Ok);
        assert_eq!(wl_group_degree(g, &mut degree), WlStatus::Ok);
    }
    assert_eq!((order, degree), (4, 6));

    let mut closed = true;
    assert_eq!(unsafe { wl_is_k_closed(g, 2, &mut closed) }, WlStatus::Ok);
    assert!(!closed);

    let mut c = ptr::null_mut();
    assert_eq!(unsafe { wl_k_closure(g, 2, &mut c) }, WlStatus::Ok);
    assert_eq!(unsafe { wl_group_order(c, &mut order) }, WlStatus::Ok);
    assert_eq!(order, 8);

    let mut text = ptr::null_mut();
    assert_eq!(unsafe { wl_group_to_string(c, &mut text) }, WlStatus::Ok);
    assert_eq!(
        unsafe { CStr::from_ptr(text) }.to_str().unwrap(),
        "6: (5 6), (3 4), (1 2)"
    );
    unsafe {
        wl_string_free(text);
        wl_group_free(c);
        wl_group_free(g);
    }
}

#[test]
fn structure_queries() {
    let g = parse("6: (1 2 3 4), (1 3), (5 6)");
    let mut b = 0usize;
    assert_eq!(unsafe { wl_base_number(g, &mut b) }, WlStatus::Ok);
    assert_eq!(b, 3);
    let mut closed = false;
    assert_eq!(unsafe { wl_classify(g, 4, &mut closed) }, WlStatus::Ok);
    assert!(closed);
    unsafe { wl_group_free(g) };

    let s3 = parse("3: (1 2 3), (1 2)");
    assert_eq!(
        unsafe { wl_classify(s3, 2, &mut closed) },
        WlStatus::NotNilpotent
    );
    assert!(last_error().contains("not nilpotent"));
    unsafe { wl_group_free(s3) };
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("bad").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { wl_group_parse(bad.as_ptr(), &mut g) },
        WlStatus::Parse
    );
    assert!(g.is_null());
    assert!(last_error().contains("parse"));

    let out_of_range = CString::new("3: (1 5)").unwrap();
    assert_eq!(
        unsafe { wl_group_parse(out_of_range.as_ptr(), &mut g) },
        WlStatus::PointOutOfRange
    );

    assert_eq!(
        unsafe { wl_group_parse(ptr::null(), &mut g) },
        WlStatus::NullPointer
    );
    let mut order = 0u64;
    assert_eq!(
        unsafe { wl_group_order(ptr::null(), &mut order) },
        WlStatus::NullPointer
    );

    let big = parse("13: (1 2 3 4 5 6 7 8 9 10 11 12 13), (1 2)");
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { wl_k_closure(big, 2, &mut c) },
        WlStatus::CapExceeded
    );
    assert!(c.is_null());
    unsafe {
        wl_group_free(big);
        wl_group_free(ptr::null_mut());
        wl_string_free(ptr::null_mut());
    }
}
