use std::ffi::{CStr, CString};
use std::ptr;

use semiclass_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sc_last_error()) }.to_string_lossy().into_owned()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { sc_string_free(p) };
    s
}

#[test]
fn sl2_cybe_and_cobracket_through_handles() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(sc_algebra_preset(cstr("sl2").as_ptr(), &mut a), ScStatus::Ok);
        assert_eq!(sc_algebra_dim(a), 3);

        let mut t = ptr::null_mut();
        assert_eq!(sc_cybe_residual(a, &mut t), ScStatus::Ok);
        let mut zero = false;
        assert_eq!(sc_tensor_is_zero(t, &mut zero), ScStatus::Ok);
        assert!(zero);
        sc_tensor_free(t);

        let mut d = ptr::null_mut();
        assert_eq!(sc_cobracket(a, &mut d), ScStatus::Ok);
        assert_eq!((sc_tensor_rank(d), sc_tensor_dim(d)), (3, 3));
        // δ(e+) = ½(e+ ⊗ e3 − e3 ⊗ e+)
        let mut s = ptr::null_mut();
        assert_eq!(sc_tensor_entry(d, [0usize, 0, 2].as_ptr(), 3, &mut s), ScStatus::Ok);
        assert_eq!(take_string(s), "1/2");
        assert_eq!(sc_tensor_entry(d, [0usize, 2, 0].as_ptr(), 3, &mut s), ScStatus::Ok);
        assert_eq!(take_string(s), "-1/2");
        assert_eq!(sc_tensor_entry(d, [0usize, 3, 0].as_ptr(), 3, &mut s), ScStatus::OutOfRange);
        sc_tensor_free(d);
        sc_algebra_free(a);
    }
}

#[test]
fn j1_dichotomy_and_moduli() {
    unsafe {
        for (name, flat) in [("b2", true), ("sl2", false)] {
            let mut a = ptr::null_mut();
            assert_eq!(sc_algebra_preset(cstr(name).as_ptr(), &mut a), ScStatus::Ok);
            let mut j = ptr::null_mut();
            assert_eq!(sc_j1_obstruction(a, ptr::null(), &mut j), ScStatus::Ok);
            let mut zero = false;
            sc_tensor_is_zero(j, &mut zero);
            assert_eq!(zero, flat, "{name}");
            sc_tensor_free(j);
            sc_algebra_free(a);
        }
        let mut a = ptr::null_mut();
        sc_algebra_preset(cstr("sl3").as_ptr(), &mut a);
        let mut dim = 99;
        assert_eq!(sc_moduli_dimension(a, &mut dim), ScStatus::Ok);
        assert_eq!(dim, 1);
        sc_algebra_free(a);
    }
}

#[test]
fn explicit_xihat_and_round_trip() {
    unsafe {
        let mut a = ptr::null_mut();
        sc_algebra_preset(cstr("b2").as_ptr(), &mut a);
        let mut xi = ptr::null_mut();
        assert_eq!(sc_canonical_xi(a, &mut xi), ScStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(sc_tensor_to_json(xi, &mut s), ScStatus::Ok);
        let json = take_string(s);
        let mut back = ptr::null_mut();
        assert_eq!(sc_tensor_from_json(cstr(&json).as_ptr(), 3, 2, &mut back), ScStatus::Ok);
        assert_eq!(sc_tensor_to_json(back, &mut s), ScStatus::Ok);
        assert_eq!(take_string(s), json);

        let zero = cstr(r#"[[["0","0"],["0","0"]],[["0","0"],["0","0"]]]"#);
        let mut hat = ptr::null_mut();
        assert_eq!(sc_tensor_from_json(zero.as_ptr(), 3, 2, &mut hat), ScStatus::Ok);
        let mut j = ptr::null_mut();
        assert_eq!(sc_j1_obstruction(a, hat, &mut j), ScStatus::Ok);
        let mut z = false;
        sc_tensor_is_zero(j, &mut z);
        assert!(z);
        for t in [xi, back, hat, j] {
            sc_tensor_free(t);
        }
        sc_algebra_free(a);
    }
}

#[test]
fn charts() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(sc_chart_torus(&mut c), ScStatus::Ok);
        let mut central = false;
        assert_eq!(sc_chart_is_central(c, &mut central), ScStatus::Ok);
        assert!(central);
        sc_chart_free(c);

        let no_inverse = cstr(r#"{"n": 2, "omega": [["0","1"],["-1","0"]], "gamma": [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]}"#);
        assert_eq!(sc_chart_from_json(no_inverse.as_ptr(), &mut c), ScStatus::Ok);
        assert_eq!(sc_chart_is_central(c, &mut central), ScStatus::MissingOmegaLower);
        sc_chart_free(c);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(sc_algebra_preset(cstr("e8").as_ptr(), &mut a), ScStatus::UnknownPreset);
        assert!(last_error().contains("e8"));
        assert!(a.is_null());
        assert_eq!(sc_algebra_preset(ptr::null(), &mut a), ScStatus::NullPointer);
        assert_eq!(sc_algebra_preset(cstr("sl2").as_ptr(), ptr::null_mut()), ScStatus::NullPointer);

        let mut c = ptr::null_mut();
        assert_eq!(sc_chart_from_json(cstr("{\"n\": 2,\n \"omega\": [[").as_ptr(), &mut c), ScStatus::Parse);
        assert!(last_error().contains("position"));

        sc_algebra_preset(cstr("so5").as_ptr(), &mut a);
        let mut t = ptr::null_mut();
        assert_eq!(sc_cybe_residual(a, &mut t), ScStatus::NoRMatrix);
        let mut dim = 0;
        assert_eq!(sc_moduli_dimension(a, &mut dim), ScStatus::Ok);
        assert_eq!(dim, 0);
        assert_eq!(last_error(), "");
        sc_algebra_free(a);

        sc_algebra_free(ptr::null_mut());
        sc_tensor_free(ptr::null_mut());
        sc_string_free(ptr::null_mut());
        assert_eq!(sc_algebra_dim(ptr::null()), 0);
    }
}

#[test]
fn cli_through_c() {
    unsafe {
        let args = [cstr("moduli-dim"), cstr("sl4")];
        let argv: Vec<_> = args.iter().map(|a| a.as_ptr()).collect();
        let (mut out, mut code) = (ptr::null_mut(), -1);
        assert_eq!(sc_cli_run(argv.len(), argv.as_ptr(), &mut out, &mut code), ScStatus::Ok);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["results"][1]["value"], 1);

        let bad = [cstr("frobnicate")];
        let argv: Vec<_> = bad.iter().map(|a| a.as_ptr()).collect();
        assert_eq!(sc_cli_run(1, argv.as_ptr(), &mut out, &mut code), ScStatus::InvalidInput);
        assert_eq!(code, 1);
        assert!(last_error().contains("Usage"));
    }
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/semiclass.h")).unwrap();
    for sym in [
        "typedef struct ScAlgebra ScAlgebra;",
        "typedef struct ScTensor ScTensor;",
        "typedef struct ScChart ScChart;",
        "SC_STATUS_OK = 0",
        "ScStatus sc_algebra_preset(const char *name, ScAlgebra **out);",
        "ScStatus sc_j1_obstruction(const ScAlgebra *a, const ScTensor *xihat, ScTensor **out);",
        "const char *sc_last_error(void);",
        "void sc_string_free(char *s);",
    ] {
        assert!(h.contains(sym), "header lacks `{sym}`");
    }
}

#[test]
fn header_is_valid_c() {
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let src = std::env::temp_dir().join(format!("semiclass-h-{}.c", std::process::id()));
    std::fs::write(&src, "#include \"semiclass.h\"\nint main(void) { return sc_last_error() == 0; }\n").unwrap();
    let status = std::process::Command::new(std::env::var("CC").unwrap_or_else(|_| "cc".into()))
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I", include])
        .arg(&src)
        .status();
    match status {
        Ok(s) => assert!(s.success(), "header failed to compile"),
        Err(e) => panic!("no C compiler available: {e}"),
    }
}
