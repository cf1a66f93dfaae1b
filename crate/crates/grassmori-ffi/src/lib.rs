//! C ABI for the grassmori toolkit.
//!
//! Conventions:
//!
//! * every fallible entry point returns a [`GmStatus`] and writes its result
//!   through out-pointers, which are only touched on [`GmStatus::Ok`];
//! * multi-field results live behind opaque handles (`GmComplexity`) with
//!   explicit destructors;
//! * strings handed to the caller are NUL-terminated, UTF-8, and must be
//!   released with [`gm_string_free`];
//! * no panic crosses the boundary — a bug inside the library surfaces as
//!   [`GmStatus::InternalError`] instead of undefined behaviour.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use grassmori::exactlin::ratio;
use grassmori::fano::{self, FanoStatus};
use grassmori::grassmann::GrassmannIndex;
use grassmori::lattice::{BlowupConfig, DivisorClass};
use grassmori::orbits::{self, ComplexityReport, OrbitError};
use grassmori::sbld::{self, BaseLocus, ChamberLabel};

/// Result code shared by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GmStatus {
    /// The call succeeded and the out-parameters are populated.
    Ok = 0,
    /// A pointer was null, a denominator zero, or an index out of range.
    InvalidArgument = 1,
    /// The configuration is well-formed but outside the supported catalog.
    Unsupported = 2,
    /// Sampling could not decide the question for this configuration.
    Inconclusive = 3,
    /// An internal invariant failed; the out-parameters are untouched.
    InternalError = 4,
}

/// Ambient family for the blow-up classification.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GmFamily {
    /// Projective space of dimension `n`.
    Projective = 0,
    /// Smooth quadric hypersurface of dimension `n`.
    Quadric = 1,
    /// Smooth cubic hypersurface of dimension `n`.
    Cubic = 2,
    /// Intersection of two quadrics of dimension `n`.
    Y22 = 3,
    /// Codimension-`codim` linear section of the 6-dimensional variety of
    /// lines in P4 (pass the codimension through the `codim` argument).
    G14Section = 4,
    /// Variety of projective `r`-planes in `Pn` (pass `r` and `n`).
    Grassmannian = 5,
}

/// Positivity class of the blown-up variety.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GmFanoStatus {
    /// The anticanonical class is ample.
    Fano = 0,
    /// The anticanonical class is nef and big but not ample.
    WeakFanoNotFano = 1,
    /// The anticanonical class is not nef (or not big).
    NotWeakFano = 2,
    /// The configuration is outside the classified range.
    OutOfScope = 3,
}

/// Which chamber of the divisor cone a class falls into.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GmChamberKind {
    /// The class is not effective; no base locus is defined.
    NotEffective = 0,
    /// Between the exceptional ray and the hyperplane ray: the stable base
    /// locus is the exceptional divisor.
    ExceptionalChamber = 1,
    /// The nef chamber: the stable base locus is empty.
    NefChamber = 2,
    /// Past the nef chamber: the stable base locus is the contact stratum
    /// whose order is reported through `out_index`.
    StratumChamber = 3,
}

/// Opaque handle to an orbit-complexity report.
pub struct GmComplexity {
    report: ComplexityReport,
}

fn guarded<F: FnOnce() -> GmStatus>(f: F) -> GmStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(GmStatus::InternalError)
}

fn orbit_error_status(err: &OrbitError) -> GmStatus {
    match err {
        OrbitError::UnsupportedConfiguration { .. } => GmStatus::Unsupported,
        OrbitError::Inconclusive { .. } => GmStatus::Inconclusive,
        _ => GmStatus::InvalidArgument,
    }
}

/// Version of the underlying library, as a static NUL-terminated string.
/// The pointer stays valid for the lifetime of the process; do not free it.
#[no_mangle]
pub extern "C" fn gm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Classifies the blow-up of a catalogued variety at `k` general points.
///
/// `n` is the dimension (ignored for `GM_FAMILY_G14_SECTION`, which takes
/// `codim` instead); `r` is only read for `GM_FAMILY_GRASSMANNIAN`.
///
/// # Safety
/// `out` must be null or a valid pointer to a `GmFanoStatus`.
#[no_mangle]
pub unsafe extern "C" fn gm_classify(
    family: GmFamily,
    n: usize,
    r: usize,
    codim: usize,
    k: usize,
    out: *mut GmFanoStatus,
) -> GmStatus {
    guarded(|| {
        if out.is_null() {
            return GmStatus::InvalidArgument;
        }
        let cfg = match family {
            GmFamily::Projective => BlowupConfig::projective(n, k),
            GmFamily::Quadric => BlowupConfig::quadric(n, k),
            GmFamily::Cubic => BlowupConfig::cubic(n, k),
            GmFamily::Y22 => BlowupConfig::y22(n, k),
            GmFamily::G14Section => BlowupConfig::g14_section(codim, k),
            GmFamily::Grassmannian => BlowupConfig::grassmannian(r, n, k),
        };
        let Ok(cfg) = cfg else {
            return GmStatus::InvalidArgument;
        };
        let verdict = fano::classify(&cfg);
        let status = match verdict.status {
            FanoStatus::Fano => GmFanoStatus::Fano,
            FanoStatus::WeakFanoNotFano => GmFanoStatus::WeakFanoNotFano,
            FanoStatus::NotWeakFano => GmFanoStatus::NotWeakFano,
            FanoStatus::OutOfScope => GmFanoStatus::OutOfScope,
        };
        unsafe { out.write(status) };
        GmStatus::Ok
    })
}

/// Runs the orbit-complexity engine for `k` general points on the variety
/// of `r`-planes in `Pn` and stores a handle to the report in `*out`.
///
/// `samples` is the number of random trials per value (must be ≥ 1) and
/// `bound` the magnitude limit on sampled coordinates (must be ≥ 1).
/// On `GM_STATUS_OK` the handle must be released with
/// [`gm_complexity_free`].
///
/// # Safety
/// `out` must be null or a valid pointer to a `*mut GmComplexity`.
#[no_mangle]
pub unsafe extern "C" fn gm_complexity_run(
    r: usize,
    n: usize,
    k: usize,
    seed: u64,
    samples: u64,
    bound: i64,
    out: *mut *mut GmComplexity,
) -> GmStatus {
    guarded(|| {
        if out.is_null() || samples == 0 || bound < 1 {
            return GmStatus::InvalidArgument;
        }
        let Ok(g) = GrassmannIndex::new(r, n) else {
            return GmStatus::InvalidArgument;
        };
        match orbits::complexity_opts(g, k, seed, samples as usize, bound) {
            Ok(report) => {
                let handle = Box::new(GmComplexity { report });
                unsafe { out.write(Box::into_raw(handle)) };
                GmStatus::Ok
            }
            Err(err) => orbit_error_status(&err),
        }
    })
}

/// Complexity value recorded in the report.  Returns 0 on a null handle.
///
/// # Safety
/// `handle` must be null or a pointer from [`gm_complexity_run`].
#[no_mangle]
pub unsafe extern "C" fn gm_complexity_value(handle: *const GmComplexity) -> usize {
    if handle.is_null() {
        return 0;
    }
    unsafe { &*handle }.report.complexity
}

/// True when the reported value is exact rather than a lower bound.
/// Returns false on a null handle.
///
/// # Safety
/// `handle` must be null or a pointer from [`gm_complexity_run`].
#[no_mangle]
pub unsafe extern "C" fn gm_complexity_is_exact(handle: *const GmComplexity) -> bool {
    if handle.is_null() {
        return false;
    }
    unsafe { &*handle }.report.exact
}

/// Best sampled orbit dimension.  Returns 0 on a null handle.
///
/// # Safety
/// `handle` must be null or a pointer from [`gm_complexity_run`].
#[no_mangle]
pub unsafe extern "C" fn gm_complexity_orbit_dim(handle: *const GmComplexity) -> usize {
    if handle.is_null() {
        return 0;
    }
    unsafe { &*handle }.report.orbit_dim
}

/// Dimension of the stabilizer subalgebra of the sampled configuration.
/// Returns 0 on a null handle.
///
/// # Safety
/// `handle` must be null or a pointer from [`gm_complexity_run`].
#[no_mangle]
pub unsafe extern "C" fn gm_complexity_stabilizer_dim(handle: *const GmComplexity) -> usize {
    if handle.is_null() {
        return 0;
    }
    unsafe { &*handle }.report.stabilizer_dim
}

/// Serializes the report as the same JSON document the CLI prints.  The
/// string must be released with [`gm_string_free`].
///
/// # Safety
/// `handle` must be null or a pointer from [`gm_complexity_run`]; `out`
/// must be null or a valid pointer to a `*mut c_char`.
#[no_mangle]
pub unsafe extern "C" fn gm_complexity_json(
    handle: *const GmComplexity,
    out: *mut *mut c_char,
) -> GmStatus {
    guarded(|| {
        if handle.is_null() || out.is_null() {
            return GmStatus::InvalidArgument;
        }
        let text = unsafe { &*handle }.report.to_json().to_string();
        let Ok(cstring) = CString::new(text) else {
            return GmStatus::InternalError;
        };
        unsafe { out.write(cstring.into_raw()) };
        GmStatus::Ok
    })
}

/// Releases a report handle.  Null is a no-op.
///
/// # Safety
/// `handle` must be null or a pointer from [`gm_complexity_run`] that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn gm_complexity_free(handle: *mut GmComplexity) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Decides whether the `k`-point configuration is spherical (complexity
/// zero).  Writes the answer to `*out` and returns `GM_STATUS_OK`, or
/// returns `GM_STATUS_INCONCLUSIVE` when sampling only produced an
/// undecisive lower bound.
///
/// # Safety
/// `out` must be null or a valid pointer to a `bool`.
#[no_mangle]
pub unsafe extern "C" fn gm_spherical(
    r: usize,
    n: usize,
    k: usize,
    seed: u64,
    out: *mut bool,
) -> GmStatus {
    guarded(|| {
        if out.is_null() {
            return GmStatus::InvalidArgument;
        }
        let Ok(g) = GrassmannIndex::new(r, n) else {
            return GmStatus::InvalidArgument;
        };
        match orbits::is_spherical(g, k, seed) {
            Ok(answer) => {
                unsafe { out.write(answer) };
                GmStatus::Ok
            }
            Err(err) => orbit_error_status(&err),
        }
    })
}

/// Locates the divisor class `(h_num/h_den)·H + (e_num/e_den)·E` in the
/// chamber decomposition of the one-point blow-up of the variety of
/// `r`-planes in `Pn`, and reports its stable base locus.
///
/// On `GM_STATUS_OK`:
/// * `*out_kind` holds the chamber kind;
/// * `*out_index` holds the stratum order for `GM_CHAMBER_KIND_STRATUM_CHAMBER`
///   and 0 otherwise;
/// * `*out_base_dim` holds the dimension of the stable base locus, or −1
///   when it is empty or undefined.
///
/// # Safety
/// The three out-parameters must each be null or valid pointers.
#[no_mangle]
pub unsafe extern "C" fn gm_sbld_locate(
    r: usize,
    n: usize,
    h_num: i64,
    h_den: i64,
    e_num: i64,
    e_den: i64,
    out_kind: *mut GmChamberKind,
    out_index: *mut usize,
    out_base_dim: *mut i64,
) -> GmStatus {
    guarded(|| {
        if out_kind.is_null() || out_index.is_null() || out_base_dim.is_null() {
            return GmStatus::InvalidArgument;
        }
        if h_den == 0 || e_den == 0 {
            return GmStatus::InvalidArgument;
        }
        let Ok(g) = GrassmannIndex::new(r, n) else {
            return GmStatus::InvalidArgument;
        };
        let class = DivisorClass::new(ratio(h_num, h_den), vec![-ratio(e_num, e_den)]);
        let Ok(chamber) = sbld::locate(g, &class) else {
            return GmStatus::InvalidArgument;
        };
        let (kind, index) = match chamber.label {
            ChamberLabel::NotEffective => (GmChamberKind::NotEffective, 0),
            ChamberLabel::CMinus1 => (GmChamberKind::ExceptionalChamber, 0),
            ChamberLabel::C0Nef => (GmChamberKind::NefChamber, 0),
            ChamberLabel::Ci(i) => (GmChamberKind::StratumChamber, i),
        };
        let base_dim = match chamber.base_locus {
            None | Some(BaseLocus::Empty) => -1,
            Some(BaseLocus::ExceptionalDivisor { dim }) => dim as i64,
            Some(BaseLocus::SchubertLocus { dim, .. }) => dim as i64,
        };
        unsafe {
            out_kind.write(kind);
            out_index.write(index);
            out_base_dim.write(base_dim);
        }
        GmStatus::Ok
    })
}

/// Releases a string returned by this library.  Null is a no-op.
///
/// # Safety
/// `s` must be null or a string pointer produced by this library that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn gm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
