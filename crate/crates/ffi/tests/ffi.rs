use std::ffi::{c_char, c_int, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use dgkoszul_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    dgk_string_free(s);
    out
}

unsafe fn load(name: &str) -> *mut DgkStructure {
    let mut h = ptr::null_mut();
    assert_eq!(dgk_fixture_load(cstr(name).as_ptr(), &mut h), DgkStatus::Ok);
    h
}

#[test]
fn parse_print_round_trip() {
    unsafe {
        let h = load("interval");
        let mut text = ptr::null_mut();
        assert_eq!(dgk_structure_print(h, &mut text), DgkStatus::Ok);
        let text = take(text);
        let mut again = ptr::null_mut();
        assert_eq!(dgk_structure_parse(cstr(&text).as_ptr(), &mut again), DgkStatus::Ok);
        let mut text2 = ptr::null_mut();
        assert_eq!(dgk_structure_print(again, &mut text2), DgkStatus::Ok);
        assert_eq!(take(text2), text);
        let mut kind = DgkKind::Formal;
        assert_eq!(dgk_structure_kind(again, &mut kind), DgkStatus::Ok);
        assert_eq!(kind, DgkKind::Dga);
        let mut dim = 0;
        assert_eq!(dgk_structure_dim(again, &mut dim), DgkStatus::Ok);
        assert_eq!(dim, 3);
        dgk_structure_free(again);
        dgk_structure_free(h);
    }
}

#[test]
fn errors_are_reported_per_thread() {
    unsafe {
        dgk_clear_last_error();
        assert!(dgk_last_error_message().is_null());
        let mut h = ptr::null_mut();
        let status = dgk_structure_parse(cstr("kind dga\nbasis x 0\nd x x 1/0\n").as_ptr(), &mut h);
        assert_eq!(status, DgkStatus::Parse);
        assert!(h.is_null());
        let message = take(dgk_last_error_message());
        assert!(message.contains("line 3") && message.contains("coefficient"), "{message}");
        // other threads have their own slot
        std::thread::spawn(|| assert!(dgk_last_error_message().is_null()))
            .join()
            .unwrap();
        assert_eq!(dgk_structure_parse(ptr::null(), &mut h), DgkStatus::NullArgument);
        assert_eq!(dgk_structure_dim(ptr::null(), &mut 0), DgkStatus::NullArgument);
    }
}

#[test]
fn maurer_cartan_and_constructions() {
    unsafe {
        let g = load("g2dim");
        let mut ok = false;
        assert_eq!(dgk_mc_check(g, cstr("x").as_ptr(), &mut ok), DgkStatus::Ok);
        assert!(ok);
        assert_eq!(dgk_mc_check(g, cstr("2*x").as_ptr(), &mut ok), DgkStatus::Ok);
        assert!(!ok);
        assert_eq!(dgk_mc_check(g, cstr("y").as_ptr(), &mut ok), DgkStatus::Validation);
        let mut p = ptr::null_mut();
        assert_eq!(dgk_bar(g, &mut p), DgkStatus::WrongKind);
        assert_eq!(dgk_ce(g, &mut p), DgkStatus::Ok);
        let mut passed = false;
        let mut report = ptr::null_mut();
        assert_eq!(dgk_check_axioms(p, &mut passed, &mut report), DgkStatus::Ok);
        assert!(passed, "{}", take(report));
        dgk_structure_free(p);
        dgk_structure_free(g);

        let a = load("k-cross-k");
        assert_eq!(dgk_cobar(a, &mut p), DgkStatus::NotNilpotent);
        assert_eq!(dgk_harrison(a, &mut p), DgkStatus::NotNilpotent);
        assert_eq!(dgk_bar(a, &mut p), DgkStatus::Ok);
        let mut dims = [9usize; 5];
        assert_eq!(dgk_betti(p, 5, 0, 4, dims.as_mut_ptr()), DgkStatus::Ok);
        assert_eq!(dims, [1, 0, 0, 0, 0]);
        dgk_structure_free(p);
        dgk_structure_free(a);
    }
}

#[test]
fn run_matches_cli_exit_codes() {
    unsafe {
        let run = |args: &[&str]| -> (String, c_int) {
            let owned: Vec<CString> = args.iter().map(|a| cstr(a)).collect();
            let ptrs: Vec<*const c_char> = owned.iter().map(|c| c.as_ptr()).collect();
            let mut out = ptr::null_mut();
            let mut code = -1;
            assert_eq!(dgk_run(ptrs.len() as c_int, ptrs.as_ptr(), &mut out, &mut code), DgkStatus::Ok);
            (take(out), code)
        };
        assert_eq!(run(&["check", "--input", "sl2"]).1, 0);
        assert_eq!(run(&["mc-check", "--input", "g2dim", "--element", "2*x"]).1, 1);
        assert_eq!(run(&["bogus"]).1, 2);
        let v = CStr::from_ptr(dgk_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}

fn target_dir() -> PathBuf {
    // CARGO_TARGET_TMPDIR is <target>/tmp
    Path::new(env!("CARGO_TARGET_TMPDIR")).parent().unwrap().to_path_buf()
}

#[test]
fn header_is_generated_and_usable_from_c() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(manifest.join("include/dgkoszul.h")).unwrap();
    for name in [
        "dgk_last_error_message",
        "dgk_string_free",
        "dgk_structure_free",
        "dgk_fixture_load",
        "dgk_run",
        "typedef struct DgkStructure DgkStructure",
        "DGK_STATUS_OK = 0",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
    let profile = if cfg!(debug_assertions) { "debug" } else { "release" };
    let lib = target_dir().join(profile).join("libdgkoszul_ffi.a");
    let cc = Command::new("cc").arg("--version").output();
    if !lib.exists() || cc.is_err() {
        eprintln!("skipping C link test: no C compiler or no {}", lib.display());
        return;
    }
    let exe = Path::new(env!("CARGO_TARGET_TMPDIR")).join("dgk_c_smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c_smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke test failed to compile");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "C smoke test exited with {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
