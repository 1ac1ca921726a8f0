use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use lforge_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    lf_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(lf_last_error_message()).to_str().unwrap().to_owned()
}

#[test]
fn universal_json_round_trips() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(lf_universal_p_json(2, &mut out), LfStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["polynomial"], "x1^2*y2 + x2*y1^2 - 2*x2*y2");
        assert_eq!(lf_universal_p_json(50, &mut out), LfStatus::Resource);
        assert!(last_error().contains("feasibility"));
    }
}

#[test]
fn stability_verdicts() {
    unsafe {
        let cases = [("x^6 - 1", LfStability::Stable, 0), ("x - 2", LfStability::NotStable, 2), ("x^2 + x + 1", LfStability::NotStable, 3)];
        for (text, want, want_k) in cases {
            let text = CString::new(text).unwrap();
            let mut f = ptr::null_mut();
            assert_eq!(lf_upoly_parse(text.as_ptr(), &mut f), LfStatus::Ok);
            let (mut verdict, mut k) = (LfStability::StableBounded, 99);
            assert_eq!(lf_upoly_lambda_stable(f, 30, &mut verdict, &mut k), LfStatus::Ok);
            assert_eq!((verdict, k), (want, want_k), "{text:?}");
            let mut s = ptr::null_mut();
            assert_eq!(lf_upoly_to_string(f, &mut s), LfStatus::Ok);
            assert!(!take(s).is_empty());
            lf_upoly_free(f);
        }
    }
}

#[test]
fn witt_arithmetic_matches_ghosts() {
    unsafe {
        let (a, b) = ([3i64, 5, 7, -1], [2i64, -4, 0, 6]);
        let (mut wa, mut wb, mut sum, mut prod) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(lf_witt_from_i64(a.as_ptr(), 4, &mut wa), LfStatus::Ok);
        assert_eq!(lf_witt_from_i64(b.as_ptr(), 4, &mut wb), LfStatus::Ok);
        assert_eq!(lf_witt_add(wa, wb, &mut sum), LfStatus::Ok);
        assert_eq!(lf_witt_mul(wa, wb, &mut prod), LfStatus::Ok);
        let ghosts = |w| {
            let mut s = ptr::null_mut();
            assert_eq!(lf_witt_to_json(w, &mut s), LfStatus::Ok);
            let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
            v["ghost"].as_array().unwrap().iter().map(|g| g.as_str().unwrap().parse::<i128>().unwrap()).collect::<Vec<_>>()
        };
        let (ga, gb) = (ghosts(wa), ghosts(wb));
        assert_eq!(ghosts(sum), ga.iter().zip(&gb).map(|(x, y)| x + y).collect::<Vec<_>>());
        assert_eq!(ghosts(prod), ga.iter().zip(&gb).map(|(x, y)| x * y).collect::<Vec<_>>());
        assert_eq!(lf_witt_len(sum), 4);

        let mut short = ptr::null_mut();
        assert_eq!(lf_witt_from_i64(a.as_ptr(), 2, &mut short), LfStatus::Ok);
        let mut bad = ptr::null_mut();
        assert_ne!(lf_witt_add(wa, short, &mut bad), LfStatus::Ok);
        assert!(bad.is_null());
        let mut s = ptr::null_mut();
        assert_eq!(lf_witt_component(sum, 9, &mut s), LfStatus::InvalidArgument);
        for w in [wa, wb, sum, prod, short] {
            lf_witt_free(w);
        }
    }
}

#[test]
fn module_hom_counts() {
    unsafe {
        let mut m = ptr::null_mut();
        let mut count = 0;
        assert_eq!(lf_f1module_from_prime_values(7, 12, [0u64].as_ptr(), 1, &mut m), LfStatus::Ok);
        assert_eq!(lf_f1module_hom_count(m, &mut count), LfStatus::Ok);
        assert_eq!(count, 7);
        lf_f1module_free(m);

        assert_eq!(lf_f1module_cyclic(5, [1i64, 2, 0, 3].as_ptr(), 4, &mut m), LfStatus::InvalidArgument);
        assert!(last_error().contains("n = 2"));
        assert_eq!(lf_f1module_cyclic(5, [1i64, 1, 1].as_ptr(), 3, &mut m), LfStatus::Ok);
        assert_eq!(lf_f1module_hom_count(m, &mut count), LfStatus::Ok);
        assert_eq!(count, 1);
        lf_f1module_free(m);
        assert_eq!(lf_f1module_from_prime_values(6, 12, ptr::null(), 0, &mut m), LfStatus::InvalidArgument);
    }
}

#[test]
fn zeta_and_null_handling() {
    unsafe {
        let spec = CString::new("primes").unwrap();
        let (mut v, mut t) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(lf_zeta_euler(spec.as_ptr(), 2.0, 100_000, 80, &mut v, &mut t), LfStatus::Ok);
        let value: f64 = take(v).parse().unwrap();
        let tail: f64 = take(t).parse().unwrap();
        assert!((value - 1.6449341).abs() < 1e-4 && tail > 0.0);
        assert_eq!(lf_zeta_euler(ptr::null(), 2.0, 10, 80, &mut v, &mut t), LfStatus::NullPointer);
        assert_eq!(lf_zeta_euler(spec.as_ptr(), 0.5, 10, 80, &mut v, &mut t), LfStatus::InvalidArgument);
        assert_eq!(lf_f1module_hom_count(ptr::null(), ptr::null_mut()), LfStatus::NullPointer);
        lf_string_free(ptr::null_mut());
        lf_upoly_free(ptr::null_mut());
    }
}

fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_header() {
    let lib = profile_dir().join("liblforge_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::temp_dir().join(format!("lforge_ffi_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(root.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
