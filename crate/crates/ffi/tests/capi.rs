//! Exercises the C ABI exactly as a foreign caller would: through raw
//! pointers, status codes, and the JSON exchange format.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use filippov_ffi::*;

fn last_error() -> String {
    let p = fa_last_error_message();
    assert!(!p.is_null(), "expected an error message");
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { fa_string_free(p) };
    s
}

#[test]
fn simple_algebra_round_trips_through_json() {
    unsafe {
        let mut alg: *mut FaAlgebra = ptr::null_mut();
        assert_eq!(fa_simple(3, &mut alg), FaStatus::Ok);
        assert_eq!(fa_algebra_arity(alg), 3);
        assert_eq!(fa_algebra_dim(alg), 4);

        let mut holds = false;
        assert_eq!(fa_verify_fi(alg, &mut holds), FaStatus::Ok);
        assert!(holds);

        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(fa_algebra_to_json(alg, &mut json), FaStatus::Ok);
        let text = take_string(json);
        assert!(text.contains("\"arity\": 3"));

        let c = CString::new(text.clone()).unwrap();
        let mut back: *mut FaAlgebra = ptr::null_mut();
        assert_eq!(fa_algebra_from_json(c.as_ptr(), &mut back), FaStatus::Ok);
        let mut json2: *mut c_char = ptr::null_mut();
        assert_eq!(fa_algebra_to_json(back, &mut json2), FaStatus::Ok);
        assert_eq!(take_string(json2), text);

        fa_algebra_free(alg);
        fa_algebra_free(back);
    }
}

#[test]
fn contraction_and_induction_pipeline() {
    unsafe {
        let mut a4: *mut FaAlgebra = ptr::null_mut();
        assert_eq!(fa_simple(3, &mut a4), FaStatus::Ok);

        // not a subalgebra: three basis elements of the simple algebra
        let bad = [1usize, 2, 3];
        let mut out: *mut FaAlgebra = ptr::null_mut();
        assert_eq!(
            fa_contract(a4, bad.as_ptr(), bad.len(), &mut out),
            FaStatus::NotSubalgebra
        );
        assert!(last_error().contains("subalgebra"));

        let i0 = [1usize, 2];
        assert_eq!(fa_contract(a4, i0.as_ptr(), i0.len(), &mut out), FaStatus::Ok);

        let mut il: *mut FaInduced = ptr::null_mut();
        assert_eq!(fa_induce(out, &mut il), FaStatus::Ok);
        assert_eq!(fa_induced_lie_dim(il), 5);
        assert_eq!(fa_induced_kernel_dim(il), 1);

        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(fa_induced_to_json(il, &mut json), FaStatus::Ok);
        assert!(take_string(json).contains("basis_words"));

        let mut lie: *mut FaLie = ptr::null_mut();
        assert_eq!(fa_induced_lie(il, &mut lie), FaStatus::Ok);
        assert_eq!(fa_lie_dim(lie), 5);
        let mut holds = false;
        assert_eq!(fa_verify_ji(lie, &mut holds), FaStatus::Ok);
        assert!(holds);

        fa_lie_free(lie);
        fa_induced_free(il);
        fa_algebra_free(out);
        fa_algebra_free(a4);
    }
}

#[test]
fn lie_contractions_and_fingerprints() {
    unsafe {
        let mut a4: *mut FaAlgebra = ptr::null_mut();
        assert_eq!(fa_simple(3, &mut a4), FaStatus::Ok);
        let mut il: *mut FaInduced = ptr::null_mut();
        assert_eq!(fa_induce(a4, &mut il), FaStatus::Ok);
        assert_eq!(fa_induced_lie_dim(il), 6);
        let mut so4: *mut FaLie = ptr::null_mut();
        assert_eq!(fa_induced_lie(il, &mut so4), FaStatus::Ok);

        // IW along the so(3) words gives a rank-3 Killing form
        let so3_words = [3usize, 5, 6];
        let mut e3: *mut FaLie = ptr::null_mut();
        assert_eq!(
            fa_iw_contract(so4, so3_words.as_ptr(), so3_words.len(), &mut e3),
            FaStatus::Ok
        );
        let mut fp: *mut c_char = ptr::null_mut();
        assert_eq!(fa_lie_fingerprint_json(e3, &mut fp), FaStatus::Ok);
        let parsed: serde_json::Value = serde_json::from_str(&take_string(fp)).unwrap();
        assert_eq!(parsed["killing_rank"], 3);
        assert_eq!(parsed["dim"], 6);

        // W-W with the splitting weights centrally extends the contraction
        let weights = [0u32, 1, 1, 1, 1, 2];
        let mut ww: *mut FaLie = ptr::null_mut();
        assert_eq!(
            fa_ww_contract(so4, weights.as_ptr(), weights.len(), &mut ww),
            FaStatus::Ok
        );
        assert_eq!(fa_lie_dim(ww), 6);

        // a grading violating the W-W condition is refused
        let bad = [0u32, 0, 0, 0, 0, 3];
        let mut nope: *mut FaLie = ptr::null_mut();
        assert_eq!(
            fa_ww_contract(so4, bad.as_ptr(), bad.len(), &mut nope),
            FaStatus::GradingViolation
        );

        fa_lie_free(ww);
        fa_lie_free(e3);
        fa_lie_free(so4);
        fa_induced_free(il);
        fa_algebra_free(a4);
    }
}

#[test]
fn error_paths_report_cleanly() {
    unsafe {
        let mut out: *mut FaAlgebra = ptr::null_mut();
        assert_eq!(fa_algebra_from_json(ptr::null(), &mut out), FaStatus::NullArgument);

        let garbage = CString::new("{ not json").unwrap();
        assert_eq!(
            fa_algebra_from_json(garbage.as_ptr(), &mut out),
            FaStatus::ParseError
        );
        assert!(!fa_last_error_message().is_null());

        // an algebra violating the identity cannot be contracted
        let bad = CString::new(
            r#"{ "arity": 2, "dim": 3, "entries": [
                { "lower": [1,2], "upper": 3, "value": "1" },
                { "lower": [2,3], "upper": 1, "value": "1" },
                { "lower": [3,1], "upper": 2, "value": "1" },
                { "lower": [1,2], "upper": 1, "value": "1" }
            ] }"#,
        )
        .unwrap();
        let mut alg: *mut FaAlgebra = ptr::null_mut();
        assert_eq!(fa_algebra_from_json(bad.as_ptr(), &mut alg), FaStatus::Ok);
        let mut holds = true;
        assert_eq!(fa_verify_fi(alg, &mut holds), FaStatus::Ok);
        assert!(!holds);
        let i0 = [3usize];
        let mut c: *mut FaAlgebra = ptr::null_mut();
        assert_eq!(
            fa_contract(alg, i0.as_ptr(), i0.len(), &mut c),
            FaStatus::IdentityViolated
        );

        assert_eq!(fa_simple(1, &mut out), FaStatus::InvalidInput);
        assert_eq!(fa_algebra_dim(ptr::null()), 0);

        fa_algebra_free(alg);
        // freeing NULL is a no-op
        fa_algebra_free(ptr::null_mut());
        fa_string_free(ptr::null_mut());
    }
}
