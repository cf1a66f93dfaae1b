//! Exercises the C entry points exactly as a foreign caller would: through
//! raw pointers, checking status codes, and releasing every handle.

use std::ffi::{c_char, CStr};
use std::ptr;

use grassmori_ffi::{
    gm_classify, gm_complexity_free, gm_complexity_is_exact, gm_complexity_json,
    gm_complexity_orbit_dim, gm_complexity_run, gm_complexity_stabilizer_dim,
    gm_complexity_value, gm_sbld_locate, gm_spherical, gm_string_free, gm_version,
    GmChamberKind, GmComplexity, GmFamily, GmFanoStatus, GmStatus,
};

#[test]
fn version_is_a_static_utf8_string() {
    let ptr = gm_version();
    assert!(!ptr.is_null());
    let text = unsafe { CStr::from_ptr(ptr) }.to_str().expect("UTF-8");
    assert_eq!(text, env!("CARGO_PKG_VERSION"));
}

#[test]
fn classify_covers_the_verdicts() {
    let cases = [
        (GmFamily::Quadric, 3, 0, 0, 2, GmFanoStatus::Fano),
        (GmFamily::Quadric, 3, 0, 0, 5, GmFanoStatus::WeakFanoNotFano),
        (GmFamily::Quadric, 3, 0, 0, 7, GmFanoStatus::NotWeakFano),
        (GmFamily::Projective, 2, 0, 0, 8, GmFanoStatus::Fano),
        (GmFamily::Cubic, 3, 0, 0, 1, GmFanoStatus::WeakFanoNotFano),
        (GmFamily::Y22, 3, 0, 0, 4, GmFanoStatus::NotWeakFano),
        (GmFamily::G14Section, 0, 0, 2, 4, GmFanoStatus::WeakFanoNotFano),
        (GmFamily::Grassmannian, 4, 1, 0, 4, GmFanoStatus::WeakFanoNotFano),
        (GmFamily::Grassmannian, 4, 1, 0, 5, GmFanoStatus::NotWeakFano),
    ];
    for (family, n, r, codim, k, expected) in cases {
        let mut out = GmFanoStatus::OutOfScope;
        let status = unsafe { gm_classify(family, n, r, codim, k, &mut out) };
        assert_eq!(status, GmStatus::Ok, "{family:?} n={n} k={k}");
        assert_eq!(out, expected, "{family:?} n={n} k={k}");
    }
}

#[test]
fn classify_rejects_bad_arguments() {
    let status = unsafe { gm_classify(GmFamily::Quadric, 3, 0, 0, 2, ptr::null_mut()) };
    assert_eq!(status, GmStatus::InvalidArgument);

    // Dimension 0 is not a valid quadric.
    let mut out = GmFanoStatus::Fano;
    let status = unsafe { gm_classify(GmFamily::Quadric, 0, 0, 0, 1, &mut out) };
    assert_eq!(status, GmStatus::InvalidArgument);
    assert_eq!(out, GmFanoStatus::Fano, "out must stay untouched on error");
}

#[test]
fn complexity_handle_round_trip() {
    let mut handle: *mut GmComplexity = ptr::null_mut();
    let status = unsafe { gm_complexity_run(1, 7, 4, 0, 5, 100, &mut handle) };
    assert_eq!(status, GmStatus::Ok);
    assert!(!handle.is_null());

    unsafe {
        assert_eq!(gm_complexity_value(handle), 1);
        assert!(gm_complexity_is_exact(handle));
        let orbit = gm_complexity_orbit_dim(handle);
        let stab = gm_complexity_stabilizer_dim(handle);
        assert!(orbit > 0);

        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(gm_complexity_json(handle, &mut text), GmStatus::Ok);
        let json: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(text).to_str().unwrap()).unwrap();
        assert_eq!(json["complexity"], 1);
        assert_eq!(json["orbit_dim"], orbit);
        assert_eq!(
            json["algebra_dim"].as_u64().unwrap() - json["orbit_dim"].as_u64().unwrap(),
            stab as u64
        );
        gm_string_free(text);
        gm_complexity_free(handle);
    }
}

#[test]
fn complexity_error_paths_map_to_status_codes() {
    let mut handle: *mut GmComplexity = ptr::null_mut();

    // Too many points for the sampling catalog.
    let status = unsafe { gm_complexity_run(1, 4, 9, 0, 5, 100, &mut handle) };
    assert_eq!(status, GmStatus::Unsupported);
    assert!(handle.is_null(), "handle must stay untouched on error");

    // Zero samples and zero bound are argument errors.
    assert_eq!(
        unsafe { gm_complexity_run(1, 4, 1, 0, 0, 100, &mut handle) },
        GmStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { gm_complexity_run(1, 4, 1, 0, 5, 0, &mut handle) },
        GmStatus::InvalidArgument
    );

    // (r, n) must index a genuine variety of r-planes.
    assert_eq!(
        unsafe { gm_complexity_run(3, 4, 1, 0, 5, 100, &mut handle) },
        GmStatus::InvalidArgument
    );

    // Null out-pointer.
    assert_eq!(
        unsafe { gm_complexity_run(1, 4, 1, 0, 5, 100, ptr::null_mut()) },
        GmStatus::InvalidArgument
    );
}

#[test]
fn null_handles_read_as_defaults() {
    unsafe {
        assert_eq!(gm_complexity_value(ptr::null()), 0);
        assert!(!gm_complexity_is_exact(ptr::null()));
        assert_eq!(gm_complexity_orbit_dim(ptr::null()), 0);
        assert_eq!(gm_complexity_stabilizer_dim(ptr::null()), 0);
        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(gm_complexity_json(ptr::null(), &mut text), GmStatus::InvalidArgument);
        // Free functions tolerate null.
        gm_complexity_free(ptr::null_mut());
        gm_string_free(ptr::null_mut());
    }
}

#[test]
fn spherical_answers_and_inconclusive_cases() {
    let mut answer = false;
    assert_eq!(unsafe { gm_spherical(1, 4, 1, 0, &mut answer) }, GmStatus::Ok);
    assert!(answer);

    assert_eq!(unsafe { gm_spherical(2, 9, 3, 0, &mut answer) }, GmStatus::Ok);
    // (2,9) with three points has positive complexity.
    assert!(!answer);

    assert_eq!(
        unsafe { gm_spherical(1, 4, 1, 0, ptr::null_mut()) },
        GmStatus::InvalidArgument
    );
}

#[test]
fn chamber_lookup_covers_every_kind() {
    // (kind, index, base dim) for classes a·H + b·E on the one-point
    // blow-up for lines in P4, whose underlying variety has dimension 6.
    let cases: [(i64, i64, GmChamberKind, usize, i64); 4] = [
        (1, 1, GmChamberKind::ExceptionalChamber, 0, 5),
        (1, 0, GmChamberKind::NefChamber, 0, -1),
        (1, -2, GmChamberKind::StratumChamber, 1, 4),
        (1, -3, GmChamberKind::NotEffective, 0, -1),
    ];
    for (a, b, kind, index, dim) in cases {
        let mut out_kind = GmChamberKind::NefChamber;
        let mut out_index = usize::MAX;
        let mut out_dim = i64::MIN;
        let status = unsafe {
            gm_sbld_locate(1, 4, a, 1, b, 1, &mut out_kind, &mut out_index, &mut out_dim)
        };
        assert_eq!(status, GmStatus::Ok, "class {a}H + {b}E");
        assert_eq!(out_kind, kind, "class {a}H + {b}E");
        assert_eq!(out_index, index, "class {a}H + {b}E");
        assert_eq!(out_dim, dim, "class {a}H + {b}E");
    }

    // Fractional coefficients travel as numerator/denominator pairs:
    // (1/2)·H − (5/4)·E sits in the top chamber for planes in P5.
    let mut out_kind = GmChamberKind::NefChamber;
    let mut out_index = 0;
    let mut out_dim = 0;
    let status = unsafe {
        gm_sbld_locate(2, 5, 1, 2, -5, 4, &mut out_kind, &mut out_index, &mut out_dim)
    };
    assert_eq!(status, GmStatus::Ok);
    assert_eq!(out_kind, GmChamberKind::StratumChamber);
    assert_eq!(out_index, 2);

    // Zero denominators are refused.
    let status = unsafe {
        gm_sbld_locate(1, 4, 1, 0, 1, 1, &mut out_kind, &mut out_index, &mut out_dim)
    };
    assert_eq!(status, GmStatus::InvalidArgument);
}

#[test]
fn generated_header_declares_the_full_surface() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/grassmori.h"
    ))
    .expect("header should be generated at build time");
    for symbol in [
        "gm_version",
        "gm_classify",
        "gm_complexity_run",
        "gm_complexity_value",
        "gm_complexity_is_exact",
        "gm_complexity_orbit_dim",
        "gm_complexity_stabilizer_dim",
        "gm_complexity_json",
        "gm_complexity_free",
        "gm_spherical",
        "gm_sbld_locate",
        "gm_string_free",
        "typedef struct GmComplexity GmComplexity;",
        "GM_STATUS_OK",
        "GM_FAMILY_GRASSMANNIAN",
        "GM_CHAMBER_KIND_STRATUM_CHAMBER",
    ] {
        assert!(header.contains(symbol), "header is missing `{symbol}`");
    }
}
