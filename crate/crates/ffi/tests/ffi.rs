use icr_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

fn last_error() -> String {
    let mut buf = vec![0 as c_char; 256];
    let size = unsafe { icr_last_error(buf.as_mut_ptr(), buf.len()) };
    assert!(size >= 1);
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap().to_string()
}

fn group(spec: &str) -> *mut IcrGroup {
    let spec = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { icr_group_parse(spec.as_ptr(), 0, &mut g) }, IcrStatus::Ok);
    g
}

#[test]
fn s3_counts_and_classes() {
    let g = group("S3");
    let (mut n, mut ends, mut autos, mut classes) = (0usize, 0u64, 0u64, 0u64);
    unsafe {
        assert_eq!(icr_group_order(g, &mut n), IcrStatus::Ok);
        assert_eq!(icr_group_endomorphism_counts(g, &mut ends, &mut autos), IcrStatus::Ok);
        assert_eq!(icr_classify(g, IcrFilter::All, &mut classes), IcrStatus::Ok);
        assert_eq!((n, ends, autos, classes), (6, 10, 6, 10));
        assert_eq!(icr_classify(g, IcrFilter::Associative, &mut classes), IcrStatus::Ok);
        assert_eq!(classes, 6);
        icr_group_free(g);
    }
    assert_eq!(last_error(), "");
}

#[test]
fn klein_ring_round_trip() {
    let g = group("V");
    let pair = CString::new("(0220),(0220)").unwrap();
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(icr_ring_from_pair(g, pair.as_ptr(), &mut r), IcrStatus::Ok);
        let mut table = [0u32; 16];
        assert_eq!(icr_ring_product_table(r, table.as_mut_ptr(), 16), IcrStatus::Ok);
        assert_eq!(table, [0, 2, 2, 0, 2, 0, 0, 2, 2, 0, 0, 2, 0, 2, 2, 0]);
        let mut x = 0;
        assert_eq!(icr_ring_mul(r, 1, 0, &mut x), IcrStatus::Ok);
        assert_eq!(x, 2);

        let mut props = std::mem::zeroed::<IcrProps>();
        assert_eq!(icr_ring_props(r, &mut props), IcrStatus::Ok);
        assert!(props.associative && props.commutative && !props.idempotent && props.proper);
        assert_eq!(props.essential_tag, IcrEssentialTag::Inessential);

        let mut r2 = ptr::null_mut();
        assert_eq!(icr_ring_from_product(g, table.as_ptr(), 16, &mut r2), IcrStatus::Ok);
        let mut buf = [0 as c_char; 32];
        let mut needed = 0;
        assert_eq!(icr_ring_pair(r2, buf.as_mut_ptr(), buf.len(), &mut needed), IcrStatus::Ok);
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "(0220),(0220)");
        assert_eq!(needed, 14);

        assert_eq!(icr_ring_pair(r2, buf.as_mut_ptr(), 4, &mut needed), IcrStatus::BufferTooSmall);
        assert_eq!(needed, 14);
        icr_ring_free(r);
        icr_ring_free(r2);
        icr_group_free(g);
    }
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("Z2+W").unwrap();
    let big = CString::new("Z300").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(icr_group_parse(bad.as_ptr(), 0, &mut g), IcrStatus::InvalidInput);
        assert!(last_error().contains("W"), "{}", last_error());
        assert!(g.is_null());
        assert_eq!(icr_group_parse(big.as_ptr(), 0, &mut g), IcrStatus::CapExceeded);
        assert!(last_error().contains("cap"));
        assert_eq!(icr_group_parse(ptr::null(), 0, &mut g), IcrStatus::NullPointer);
        assert_eq!(icr_group_order(ptr::null(), &mut 0), IcrStatus::NullPointer);

        let g = group("S3");
        let pair = CString::new("(000333),(000444)").unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(icr_ring_from_pair(g, pair.as_ptr(), &mut r), IcrStatus::InvalidInput);
        assert!(last_error().contains("image-commuting"), "{}", last_error());

        // A table breaking the interchange law.
        let mut table = [0u32; 36];
        table[7] = 1;
        assert_eq!(icr_ring_from_product(g, table.as_ptr(), 36, &mut r), IcrStatus::InvalidInput);
        assert_eq!(icr_ring_from_product(g, table.as_ptr(), 35, &mut r), IcrStatus::InvalidInput);
        assert!(r.is_null());
        icr_group_free(g);

        // Size query without a buffer.
        let size = icr_last_error(ptr::null_mut(), 0);
        assert_eq!(size, last_error().len() + 1);
        icr_group_free(ptr::null_mut());
        icr_ring_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_per_thread() {
    let bad = CString::new("nope").unwrap();
    let mut g = ptr::null_mut();
    unsafe { icr_group_parse(bad.as_ptr(), 0, &mut g) };
    let here = last_error();
    assert!(!here.is_empty());
    std::thread::spawn(|| assert_eq!(last_error(), "")).join().unwrap();
    assert_eq!(last_error(), here);
}

#[test]
fn formula_and_version() {
    assert_eq!(icr_count_formula(2), 10);
    assert_eq!(icr_count_formula(3), 20);
    let v = unsafe { CStr::from_ptr(icr_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/icr.h")).unwrap();
    let source = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 15, "{exports:?}");
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from icr.h");
    }
    for ty in ["typedef struct IcrGroup IcrGroup;", "typedef struct IcrRing IcrRing;", "ICR_STATUS_CAP_EXCEEDED = 3"] {
        assert!(header.contains(ty), "{ty}");
    }
}
