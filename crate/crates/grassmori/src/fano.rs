//! Fano and weak-Fano classification for blow-ups of prime Fano varieties at
//! general points.
//!
//! The engine is a pair of explicit Mori-cone generator sets — lines through
//! the blown-up points for any variety covered by lines when `k ≤ codim + 1`,
//! plus conics through point triples on quadrics up to `k ≤ (3n+2)/2` (even
//! `n`) or `(3n+3)/2` (odd `n`) — combined with the anticanonical volume
//! bound `k < d·ιⁿ/(n−1)ⁿ`, which rules out weak Fano unconditionally once
//! violated. Projective spaces and the two-dimensional quadric are resolved
//! by a verdict table (classical del Pezzo theory; no algorithm exists for
//! those rows, only the known answers).

use crate::exactlin::{rat, Rat};
use crate::lattice::{BlowupConfig, CurveClass, Family};
use num::{Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

/// Outcome of the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FanoStatus {
    Fano,
    WeakFanoNotFano,
    NotWeakFano,
    /// No covered statement decides this configuration.
    OutOfScope,
}

impl FanoStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            FanoStatus::Fano => "fano",
            FanoStatus::WeakFanoNotFano => "weak_fano_not_fano",
            FanoStatus::NotWeakFano => "not_weak_fano",
            FanoStatus::OutOfScope => "out_of_scope",
        }
    }
}

impl std::fmt::Display for FanoStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            FanoStatus::Fano => "Fano",
            FanoStatus::WeakFanoNotFano => "weak Fano but not Fano",
            FanoStatus::NotWeakFano => "not weak Fano",
            FanoStatus::OutOfScope => "out of scope",
        };
        write!(f, "{text}")
    }
}

/// Why a blow-up fails to be Fano (pairing ≤ 0) or weak Fano (pairing < 0 or
/// volume ≤ 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An effective curve class with non-positive anticanonical degree.
    Curve { class: CurveClass, pairing: Rat },
    /// The anticanonical top self-intersection, when not positive.
    Volume { value: Rat },
}

impl Witness {
    pub fn to_json(&self) -> Value {
        match self {
            Witness::Curve { class, pairing } => json!({
                "kind": "curve",
                "class": class.to_json(),
                "pairing": pairing.to_string(),
            }),
            Witness::Volume { value } => json!({
                "kind": "volume",
                "value": value.to_string(),
            }),
        }
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::Curve { class, pairing } => {
                write!(f, "curve {class} has anticanonical degree {pairing}")
            }
            Witness::Volume { value } => {
                write!(f, "anticanonical volume is {value}")
            }
        }
    }
}

/// Classification outcome with an optional explanation.
///
/// Invariants: `Fano` carries no witness; `NotWeakFano` always carries one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoVerdict {
    pub status: FanoStatus,
    pub witness: Option<Witness>,
}

impl FanoVerdict {
    fn new(status: FanoStatus, witness: Option<Witness>) -> Self {
        debug_assert!(status != FanoStatus::Fano || witness.is_none());
        debug_assert!(status != FanoStatus::NotWeakFano || witness.is_some());
        FanoVerdict { status, witness }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({"status": self.status.as_str()});
        if let Some(w) = &self.witness {
            v["witness"] = w.to_json();
        }
        v
    }
}

/// The requested configuration satisfies none of the hypotheses under which
/// the Mori cone generators are known.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("Mori cone generators unknown: {reason}")]
pub struct OutOfScopeError {
    pub reason: String,
}

fn out_of_scope(reason: impl Into<String>) -> OutOfScopeError {
    OutOfScopeError {
        reason: reason.into(),
    }
}

/// Generating set of the Mori cone of the blow-up, when known.
///
/// - `k = 0`: the empty list — the Mori cone is spanned by the line class
///   `h` alone and nothing needs recording.
/// - Any variety covered by lines with `k ≤ codim + 1`: the exceptional
///   lines `eᵢ` and the lines `lᵢ = h − eᵢ` through each blown-up point.
/// - Quadrics (index `ι = n`, which includes the Grassmannian of lines in
///   projective 3-space) with `3 ≤ k ≤ (3n+2)/2` for even `n` or `(3n+3)/2`
///   for odd `n`: additionally the conics `2h − eᵢ − eⱼ − e_l` through each
///   triple of points.
///
/// Errors when no hypothesis applies; the caller must not treat any set as
/// generating in that case.
pub fn mori_generators(cfg: &BlowupConfig) -> Result<Vec<CurveClass>, OutOfScopeError> {
    let k = cfg.k;
    if k == 0 {
        return Ok(Vec::new());
    }
    if !cfg.covered_by_lines {
        return Err(out_of_scope(
            "the variety is not covered by lines".to_string(),
        ));
    }
    let mut gens: Vec<CurveClass> = (0..k).map(|i| CurveClass::exceptional_line(i, k)).collect();
    gens.extend((0..k).map(|i| CurveClass::line_through(&[i], k)));
    if k <= cfg.codim + 1 {
        return Ok(gens);
    }
    // Integer division of (3n+3)/2 yields (3n+2)/2 for even n.
    if cfg.iota == cfg.n && k <= (3 * cfg.n + 3) / 2 {
        for i in 0..k {
            for j in i + 1..k {
                for l in j + 1..k {
                    gens.push(CurveClass::conic_through(&[i, j, l], k));
                }
            }
        }
        return Ok(gens);
    }
    Err(out_of_scope(format!(
        "k = {k} exceeds every covered generation bound for this configuration"
    )))
}

/// Strict upper bound `d·ιⁿ/(n−1)ⁿ` on the number of points compatible with
/// a weak Fano blow-up: once `k` reaches it, the anticanonical volume
/// `d·ιⁿ − k(n−1)ⁿ` is non-positive and the blow-up cannot be weak Fano.
///
/// Configurations always have `n ≥ 2`, so the denominator never vanishes.
pub fn weak_fano_bound(cfg: &BlowupConfig) -> Rat {
    let iota = num::pow(rat(cfg.iota as i64), cfg.n);
    let nm1 = num::pow(rat(cfg.n as i64 - 1), cfg.n);
    cfg.d.clone() * iota / nm1
}

/// First generator realizing the minimal anticanonical degree.
fn min_pairing(cfg: &BlowupConfig, gens: &[CurveClass]) -> (Rat, CurveClass) {
    let k_inv = cfg.anticanonical();
    let mut best: Option<(Rat, CurveClass)> = None;
    for g in gens {
        let p = k_inv.pair(g);
        if best.as_ref().map_or(true, |(b, _)| p < *b) {
            best = Some((p, g.clone()));
        }
    }
    best.expect("generator list is nonempty")
}

fn volume_verdict(cfg: &BlowupConfig, status: FanoStatus) -> FanoVerdict {
    FanoVerdict::new(
        status,
        Some(Witness::Volume {
            value: cfg.anticanonical_volume(),
        }),
    )
}

/// Verdict table for projective space, where the classification is classical
/// and not derivable from the generator lemmas alone.
fn classify_projective(cfg: &BlowupConfig) -> FanoVerdict {
    let (n, k) = (cfg.n, cfg.k);
    match n {
        2 => {
            if k <= 8 {
                FanoVerdict::new(FanoStatus::Fano, None)
            } else {
                volume_verdict(cfg, FanoStatus::NotWeakFano)
            }
        }
        3 => {
            if k == 1 {
                FanoVerdict::new(FanoStatus::Fano, None)
            } else if k <= 7 {
                FanoVerdict::new(
                    FanoStatus::WeakFanoNotFano,
                    Some(Witness::Curve {
                        class: CurveClass::line_through(&[0, 1], k),
                        pairing: Rat::zero(),
                    }),
                )
            } else {
                volume_verdict(cfg, FanoStatus::NotWeakFano)
            }
        }
        _ => {
            if k == 1 {
                FanoVerdict::new(FanoStatus::Fano, None)
            } else {
                // A line through two points has anticanonical degree 3 − n.
                FanoVerdict::new(
                    FanoStatus::NotWeakFano,
                    Some(Witness::Curve {
                        class: CurveClass::line_through(&[0, 1], k),
                        pairing: rat(3 - n as i64),
                    }),
                )
            }
        }
    }
}

/// Verdict table for the two-dimensional quadric: its blow-up at `k` points
/// is the blow-up of the plane at `k + 1` points, so del Pezzo theory gives
/// Fano exactly for `k ≤ 7`.
fn classify_quadric_surface(cfg: &BlowupConfig) -> FanoVerdict {
    if cfg.k <= 7 {
        FanoVerdict::new(FanoStatus::Fano, None)
    } else {
        volume_verdict(cfg, FanoStatus::NotWeakFano)
    }
}

/// Decides whether the blow-up is Fano, weak Fano but not Fano, or not weak
/// Fano.
///
/// Only the built-in families are classified; `Family::Other` returns
/// [`FanoStatus::OutOfScope`]. For `k = 0` the unblown variety is Fano by
/// assumption. Projective spaces and the quadric surface are table-driven;
/// every other case is computed: index `ι < n − 1` already fails on a line
/// through one point, otherwise the minimum anticanonical degree over the
/// Mori generators decides Fano (all positive) versus the boundary case
/// (some zero), where positivity of the anticanonical volume separates weak
/// Fano from the rest. Beyond the generator bounds, reaching
/// [`weak_fano_bound`] still rules out weak Fano unconditionally.
pub fn classify(cfg: &BlowupConfig) -> FanoVerdict {
    if cfg.family == Family::Other || !cfg.covered_by_lines {
        return FanoVerdict::new(FanoStatus::OutOfScope, None);
    }
    if cfg.k == 0 {
        return FanoVerdict::new(FanoStatus::Fano, None);
    }
    if cfg.iota == cfg.n + 1 {
        return classify_projective(cfg);
    }
    if cfg.n == 2 && cfg.iota == cfg.n {
        return classify_quadric_surface(cfg);
    }
    if cfg.iota + 1 < cfg.n {
        let class = CurveClass::line_through(&[0], cfg.k);
        let pairing = cfg.anticanonical().pair(&class);
        debug_assert!(pairing.is_negative());
        return FanoVerdict::new(FanoStatus::NotWeakFano, Some(Witness::Curve { class, pairing }));
    }
    match mori_generators(cfg) {
        Ok(gens) => {
            let (min, class) = min_pairing(cfg, &gens);
            if min.is_positive() {
                FanoVerdict::new(FanoStatus::Fano, None)
            } else if min.is_zero() {
                let volume = cfg.anticanonical_volume();
                if volume.is_positive() {
                    FanoVerdict::new(
                        FanoStatus::WeakFanoNotFano,
                        Some(Witness::Curve {
                            class,
                            pairing: min,
                        }),
                    )
                } else {
                    FanoVerdict::new(
                        FanoStatus::NotWeakFano,
                        Some(Witness::Volume { value: volume }),
                    )
                }
            } else {
                FanoVerdict::new(
                    FanoStatus::NotWeakFano,
                    Some(Witness::Curve {
                        class,
                        pairing: min,
                    }),
                )
            }
        }
        Err(_) => {
            if rat(cfg.k as i64) >= weak_fano_bound(cfg) {
                volume_verdict(cfg, FanoStatus::NotWeakFano)
            } else {
                FanoVerdict::new(FanoStatus::OutOfScope, None)
            }
        }
    }
}
