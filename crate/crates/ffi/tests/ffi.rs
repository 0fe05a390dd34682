use std::ffi::{CStr, CString};
use std::ptr;

use hopfseq_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    hs_string_free(p);
    s
}

#[test]
fn group_handle_round_trip() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(hs_group_new(cstr("A5").as_ptr(), &mut g), HsStatus::Ok);
        assert_eq!(hs_group_order(g), 60);
        let mut text = ptr::null_mut();
        assert_eq!(hs_group_dump(g, &mut text), HsStatus::Ok);
        assert!(!take(text).is_empty());
        hs_group_free(g);
    }
}

#[test]
fn unknown_group_sets_last_error() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(hs_group_new(cstr("nonsense").as_ptr(), &mut g), HsStatus::Parse);
        assert!(g.is_null());
        let msg = CStr::from_ptr(hs_last_error()).to_str().unwrap();
        assert!(msg.contains("nonsense"), "{msg}");
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(hs_group_new(ptr::null(), &mut g), HsStatus::NullPointer);
        assert_eq!(hs_group_new(cstr("S3").as_ptr(), ptr::null_mut()), HsStatus::NullPointer);
        let mut n = 0usize;
        assert_eq!(hs_hopf_verify(ptr::null(), 0, 0, &mut n), HsStatus::NullPointer);
        assert_eq!(hs_hopf_dim(ptr::null()), 0);
        hs_hopf_free(ptr::null_mut());
        hs_string_free(ptr::null_mut());
    }
}

#[test]
fn invalid_utf8_is_reported() {
    unsafe {
        let bytes = [0xffu8, 0xfe, 0];
        let mut g = ptr::null_mut();
        assert_eq!(hs_group_new(bytes.as_ptr().cast(), &mut g), HsStatus::InvalidUtf8);
    }
}

#[test]
fn double_of_s3_verifies_and_round_trips() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(hs_hopf_new(cstr("D:S3").as_ptr(), &mut h), HsStatus::Ok);
        assert_eq!(hs_hopf_dim(h), 36);
        let mut violations = usize::MAX;
        assert_eq!(hs_hopf_verify(h, 200, 7, &mut violations), HsStatus::Ok);
        assert_eq!(violations, 0);
        let mut exact = -1;
        assert_eq!(hs_hopf_sequence_exact(h, &mut exact), HsStatus::Ok);
        assert_eq!(exact, 1);

        let mut text = ptr::null_mut();
        assert_eq!(hs_hopf_dump(h, &mut text), HsStatus::Ok);
        let dumped = cstr(&take(text));
        let mut h2 = ptr::null_mut();
        assert_eq!(hs_hopf_load(dumped.as_ptr(), &mut h2), HsStatus::Ok);
        assert_eq!(hs_hopf_dim(h2), 36);
        hs_hopf_free(h2);
        hs_hopf_free(h);
    }
}

#[test]
fn group_algebra_has_no_bicrossed_sequence() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(hs_hopf_new(cstr("kG:S3").as_ptr(), &mut h), HsStatus::Ok);
        let mut exact = -1;
        assert_ne!(hs_hopf_sequence_exact(h, &mut exact), HsStatus::Ok);
        assert!(!hs_last_error().is_null());
        hs_hopf_free(h);
    }
}

#[test]
fn certify_families() {
    unsafe {
        let mut v = HsVerdict::Inconclusive;
        assert_eq!(hs_certify(cstr("ty:5").as_ptr(), &mut v, ptr::null_mut()), HsStatus::Ok);
        assert_eq!(v, HsVerdict::Simple);

        let mut trace = ptr::null_mut();
        assert_eq!(hs_certify(cstr("vecS3").as_ptr(), &mut v, &mut trace), HsStatus::Ok);
        assert_ne!(v, HsVerdict::Simple);
        assert!(take(trace).starts_with("certificate"));
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/hopfseq.h")).unwrap();
    for name in [
        "hs_last_error",
        "hs_string_free",
        "hs_group_new",
        "hs_group_order",
        "hs_group_dump",
        "hs_group_free",
        "hs_hopf_new",
        "hs_hopf_load",
        "hs_hopf_dim",
        "hs_hopf_dump",
        "hs_hopf_verify",
        "hs_hopf_sequence_exact",
        "hs_hopf_free",
        "hs_certify",
        "typedef struct HsHopf HsHopf",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let dir = tempfile_dir();
    let src = dir.join("smoke.c");
    std::fs::write(
        &src,
        "#include \"hopfseq.h\"\nint main(void) { HsGroup *g = 0; HsStatus s = hs_group_new(\"S3\", &g); (void)s; return 0; }\n",
    )
    .unwrap();
    let status = std::process::Command::new(cc)
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I"])
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| std::process::Command::new(c).arg("--version").output().is_ok())
        .ok_or(())
}

fn tempfile_dir() -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("hopfseq-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}
