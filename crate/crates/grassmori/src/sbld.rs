//! Stable-base-locus decomposition of the effective cone for one-point
//! blow-ups of Grassmannians.
//!
//! For `X = Bl_p 𝔾(r, n)` the divisor lattice has rank two, spanned by the
//! hyperplane pull-back `H` and the exceptional divisor `E`.  The effective
//! cone `⟨E, H − (r+1)E⟩` splits into finitely many chambers with constant
//! stable base locus:
//!
//! * `C₋₁ = [E, H)` — every divisor here has `E` in its base locus;
//! * `C₀ = [H, H − E]` — the nef chamber, empty base locus;
//! * `Cᵢ = (H − iE, H − (i+1)E]` for `1 ≤ i ≤ r` — the base locus is the
//!   stratum of subspaces meeting the blown-up point's span in dimension
//!   at least `r + 1 − i`.
//!
//! The decomposition is half-open exactly as written: each wall `H − iE`
//! with `i ≥ 1` belongs to the chamber on its *left* (smaller base locus),
//! while `E` itself lies in `C₋₁` and `H` in the nef chamber.  [`locate`]
//! evaluates these inequalities with exact rational arithmetic, and
//! [`cone_suite`] assembles the ambient cone data (effective, movable, nef,
//! Mori, moving-curve cones), computing the dual pairs rather than reading
//! them from a table.

use serde_json::{json, Value};
use thiserror::Error;

use crate::cones::{intersection_form, RationalCone};
use crate::exactlin::Rat;
use crate::grassmann::GrassmannIndex;
use crate::lattice::DivisorClass;
use crate::orbits;

use num::{One, Signed};

/// Errors from chamber location and base-locus queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SbldError {
    /// The divisor lives on a blow-up at `got` points; this decomposition
    /// is only available for one-point blow-ups.
    #[error("expected a divisor on a one-point blow-up, got {got} exceptional coefficients")]
    WrongPointCount { got: usize },
    /// Asked for the base locus of a class outside the effective cone.
    #[error("the class is not effective, so it has no stable base locus")]
    NotEffective,
}

/// Which chamber of the two-dimensional divisor space a class falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChamberLabel {
    /// Outside the effective cone `⟨E, H − (r+1)E⟩`.
    NotEffective,
    /// `[E, H)`: effective but with the exceptional divisor in the base locus.
    CMinus1,
    /// `[H, H − E]`: the nef chamber.
    C0Nef,
    /// `(H − iE, H − (i+1)E]` for `1 ≤ i ≤ r`.
    Ci(usize),
}

/// The stable base locus attached to a chamber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseLocus {
    /// Semiample side: no base locus at all.
    Empty,
    /// The exceptional divisor of the blow-up.
    ExceptionalDivisor { dim: usize },
    /// The locus of subspaces meeting the centre's span in dimension
    /// `≥ r + 1 − m`; its dimension is `m(n + 1 − m)`.
    SchubertLocus { m: usize, dim: usize },
}

/// A located chamber together with its base-locus descriptor.
///
/// `base_locus` is `None` exactly when the class is not effective.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub label: ChamberLabel,
    pub base_locus: Option<BaseLocus>,
}

impl Chamber {
    /// JSON form, e.g. `{"base_locus":{"dim":4,"kind":"schubert","m":1},"chamber":"C_1","i":1}`.
    pub fn to_json(&self) -> Value {
        match (self.label, self.base_locus) {
            (ChamberLabel::NotEffective, _) => json!({ "chamber": "not_effective" }),
            (ChamberLabel::CMinus1, Some(BaseLocus::ExceptionalDivisor { dim })) => json!({
                "chamber": "C_-1",
                "base_locus": { "kind": "exceptional", "dim": dim },
            }),
            (ChamberLabel::C0Nef, _) => json!({
                "chamber": "C_0",
                "base_locus": { "kind": "empty" },
            }),
            (ChamberLabel::Ci(i), Some(BaseLocus::SchubertLocus { m, dim })) => json!({
                "chamber": format!("C_{i}"),
                "i": i,
                "base_locus": { "kind": "schubert", "m": m, "dim": dim },
            }),
            // `locate` never builds the remaining combinations.
            _ => unreachable!("chamber label and base locus disagree"),
        }
    }
}

impl std::fmt::Display for Chamber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.label, self.base_locus) {
            (ChamberLabel::NotEffective, _) => write!(f, "not effective"),
            (ChamberLabel::CMinus1, Some(BaseLocus::ExceptionalDivisor { dim })) => {
                write!(f, "C_-1 (base locus: exceptional divisor, dim {dim})")
            }
            (ChamberLabel::C0Nef, _) => write!(f, "C_0 (nef, empty base locus)"),
            (ChamberLabel::Ci(i), Some(BaseLocus::SchubertLocus { m, dim })) => {
                write!(f, "C_{i} (base locus: contact stratum m={m}, dim {dim})")
            }
            _ => unreachable!("chamber label and base locus disagree"),
        }
    }
}

/// Locate `d = aH − bE` in the chamber decomposition of `Bl_p 𝔾(r, n)`.
///
/// The class must carry exactly one exceptional coefficient.  All
/// comparisons are exact, so wall membership follows the half-open
/// conventions documented on [`ChamberLabel`].  The zero class sits in the
/// (closed) nef chamber.
pub fn locate(g: GrassmannIndex, d: &DivisorClass) -> Result<Chamber, SbldError> {
    if d.e.len() != 1 {
        return Err(SbldError::WrongPointCount { got: d.e.len() });
    }
    let a = &d.h;
    let b = &d.e[0];
    let r = g.r();

    // Effective cone: a ≥ 0 and b ≤ (r+1)a.
    let cap = Rat::from_integer((r as i64 + 1).into()) * a;
    if a.is_negative() || b > &cap {
        return Ok(Chamber {
            label: ChamberLabel::NotEffective,
            base_locus: None,
        });
    }

    if b.is_negative() {
        // [E, H): positive multiples of E mixed with too little H.
        return Ok(Chamber {
            label: ChamberLabel::CMinus1,
            base_locus: Some(BaseLocus::ExceptionalDivisor { dim: g.dim() - 1 }),
        });
    }

    if b <= a {
        // [H, H − E]: nef, base-point free.
        return Ok(Chamber {
            label: ChamberLabel::C0Nef,
            base_locus: Some(BaseLocus::Empty),
        });
    }

    // Now 0 ≤ a < b ≤ (r+1)a, so a > 0 and some 1 ≤ i ≤ r has
    // i·a < b ≤ (i+1)·a.
    for i in 1..=r {
        let upper = Rat::from_integer((i as i64 + 1).into()) * a;
        if b <= &upper {
            let dim = i * (g.n() + 1 - i);
            return Ok(Chamber {
                label: ChamberLabel::Ci(i),
                base_locus: Some(BaseLocus::SchubertLocus { m: i, dim }),
            });
        }
    }
    unreachable!("b ≤ (r+1)a guarantees a chamber index in 1..=r");
}

/// Dimension of the stable base locus of the chamber, or `None` when the
/// base locus is empty.  Errors on the non-effective chamber, where no
/// stable base locus is defined.
pub fn base_locus_dim(ch: &Chamber) -> Result<Option<usize>, SbldError> {
    match ch.base_locus {
        None => Err(SbldError::NotEffective),
        Some(BaseLocus::Empty) => Ok(None),
        Some(BaseLocus::ExceptionalDivisor { dim }) => Ok(Some(dim)),
        Some(BaseLocus::SchubertLocus { dim, .. }) => Ok(Some(dim)),
    }
}

/// The five cones attached to `Bl_p 𝔾(r, n)`, all in the `(H, E)` /
/// `(h, e)` coordinates with pairing `diag(1, −1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeSuite {
    /// Effective divisors `⟨E, H − (r+1)E⟩`.
    pub effective: RationalCone,
    /// Movable divisors: `⟨H, H − rE⟩` when `n = 2r + 1`, else `⟨H, H − (r+1)E⟩`.
    pub movable: RationalCone,
    /// Nef divisors, computed as the dual of the Mori cone.
    pub nef: RationalCone,
    /// The Mori cone of curves `⟨e, h − e⟩`.
    pub mori: RationalCone,
    /// Moving curves, computed as the dual of the effective cone.
    pub moving_curves: RationalCone,
}

impl ConeSuite {
    /// JSON object keyed by cone name; each value is the cone's own JSON.
    pub fn to_json(&self) -> Value {
        json!({
            "effective": self.effective.to_json(),
            "movable": self.movable.to_json(),
            "nef": self.nef.to_json(),
            "mori": self.mori.to_json(),
            "moving_curves": self.moving_curves.to_json(),
        })
    }
}

/// Assemble the cone suite for `Bl_p 𝔾(r, n)`.
///
/// The nef and moving-curve cones are *derived* by dualising against the
/// rank-two intersection form; only the effective, movable, and Mori cones
/// are written down directly.
pub fn cone_suite(g: GrassmannIndex) -> ConeSuite {
    let effective = orbits::effective_cone_catalog(g, 1)
        .expect("one-point effective cones exist for every Grassmannian");
    let r = g.r() as i64;
    let mov_slope = if g.n() == 2 * g.r() + 1 { r } else { r + 1 };
    let movable = RationalCone::from_i64_rays(2, &[&[1, 0], &[1, -mov_slope]]);
    let mori = RationalCone::from_i64_rays(2, &[&[0, 1], &[1, -1]]);
    let form = intersection_form(1);
    let nef = mori.dual(&form);
    let moving_curves = effective.dual(&form);
    ConeSuite {
        effective,
        movable,
        nef,
        mori,
        moving_curves,
    }
}

/// Convenience: the two effective-cone walls `E` and `H − (r+1)E` as classes.
pub fn effective_walls(g: GrassmannIndex) -> (DivisorClass, DivisorClass) {
    let e = DivisorClass::exceptional(0, 1);
    let wall = DivisorClass::new(Rat::one(), vec![Rat::from_integer((g.r() as i64 + 1).into())]);
    (e, wall)
}
