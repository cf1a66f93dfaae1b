//! Group-orbit engine for blow-ups of Grassmannians at general points.
//!
//! The acting group for `k` blown-up points is modelled at the Lie-algebra
//! level: the trace-zero matrices stabilizing a system of flags built from
//! the standard point configuration (one coordinate block per point, plus a
//! flag on the leftover coordinates, plus optionally one non-coordinate
//! vector for a single extra general point). Orbit dimensions at random
//! rational points come from the exact rank of the infinitesimal action,
//! complexity is the codimension of the largest sampled orbit, and the
//! known effective cones of the spherical cases are served from a catalog.

use crate::cones::RationalCone;
use crate::exactlin::{nullspace, rank, Rat, RatMatrix};
use crate::fano::{self, FanoStatus};
use crate::grassmann::{GrassmannIndex, SubspacePoint};
use crate::lattice::BlowupConfig;
use num::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Default number of random points sampled per complexity computation.
pub const DEFAULT_SAMPLES: usize = 5;

/// Random point coordinates are sampled uniformly from `[-BOUND, BOUND]`.
pub const COORDINATE_BOUND: i64 = 100;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrbitError {
    #[error("invalid flag: {reason}")]
    InvalidFlag { reason: String },
    #[error(
        "unsupported point configuration: k={k} exceeds {max} coordinate blocks \
         plus one extra general point on G({r},{n})"
    )]
    UnsupportedConfiguration {
        r: usize,
        n: usize,
        k: usize,
        max: usize,
    },
    #[error("sampling gave the lower bound {bound}, which does not decide sphericity")]
    Inconclusive { bound: usize },
    #[error("no effective-cone catalog entry for G({r},{n}) blown up at {k} points")]
    NotInCatalog { r: usize, n: usize, k: usize },
}

/// A partial flag of nested subspaces of the ambient vector space, each
/// stored as a full-row-rank matrix whose rows span the subspace.
#[derive(Clone, Debug)]
pub struct FlagSpec {
    pieces: Vec<RatMatrix>,
}

impl FlagSpec {
    pub fn new(pieces: Vec<RatMatrix>) -> Result<Self, OrbitError> {
        if pieces.is_empty() {
            return Err(OrbitError::InvalidFlag {
                reason: "a flag needs at least one piece".into(),
            });
        }
        let ambient = pieces[0].cols();
        for piece in &pieces {
            if piece.cols() != ambient {
                return Err(OrbitError::InvalidFlag {
                    reason: "all pieces must share the ambient dimension".into(),
                });
            }
            if piece.rows() == 0 || rank(piece) != piece.rows() {
                return Err(OrbitError::InvalidFlag {
                    reason: "each piece must have independent rows".into(),
                });
            }
        }
        for window in pieces.windows(2) {
            let (prev, next) = (&window[0], &window[1]);
            if prev.rows() >= next.rows() {
                return Err(OrbitError::InvalidFlag {
                    reason: "piece dimensions must strictly increase".into(),
                });
            }
            if rank(&prev.vstack(next)) != next.rows() {
                return Err(OrbitError::InvalidFlag {
                    reason: "each piece must contain the previous one".into(),
                });
            }
        }
        Ok(FlagSpec { pieces })
    }

    /// The complete flag of coordinate subspaces
    /// `⟨e_{c_0}⟩ ⊂ ⟨e_{c_0}, e_{c_1}⟩ ⊂ …` over the given coordinates.
    pub fn complete_coordinate(ambient: usize, coords: &[usize]) -> Self {
        assert!(!coords.is_empty(), "need at least one coordinate");
        let pieces = (1..=coords.len())
            .map(|len| coordinate_rows(ambient, &coords[..len]))
            .collect();
        FlagSpec::new(pieces).expect("coordinate prefixes form a valid flag")
    }

    pub fn pieces(&self) -> &[RatMatrix] {
        &self.pieces
    }

    pub fn ambient(&self) -> usize {
        self.pieces[0].cols()
    }
}

fn coordinate_rows(ambient: usize, coords: &[usize]) -> RatMatrix {
    let rows: Vec<Vec<Rat>> = coords
        .iter()
        .map(|&c| {
            let mut e = vec![Rat::zero(); ambient];
            e[c] = Rat::one();
            e
        })
        .collect();
    RatMatrix::from_rows(rows)
}

/// Basis of a Lie subalgebra of the trace-zero matrices.
#[derive(Clone, Debug)]
pub struct SubalgebraBasis {
    ambient: usize,
    elements: Vec<RatMatrix>,
}

impl SubalgebraBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[RatMatrix] {
        &self.elements
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
}

/// If every row of `piece` is a multiple of a coordinate vector, the sorted
/// list of those coordinates; otherwise `None`.
fn coordinate_support(piece: &RatMatrix) -> Option<Vec<usize>> {
    let mut coords = Vec::with_capacity(piece.rows());
    for i in 0..piece.rows() {
        let mut nonzero = None;
        for j in 0..piece.cols() {
            if !piece.at(i, j).is_zero() {
                if nonzero.is_some() {
                    return None;
                }
                nonzero = Some(j);
            }
        }
        coords.push(nonzero.expect("rows are nonzero"));
    }
    coords.sort_unstable();
    coords.dedup();
    if coords.len() == piece.rows() {
        Some(coords)
    } else {
        None
    }
}

/// Basis of the trace-zero matrices `M` with `M·V ⊆ V` for every piece `V`
/// of every flag, acting on column vectors of the `(n+1)`-dimensional
/// ambient space.
///
/// Pieces spanned by coordinate vectors are folded into a zero pattern on
/// the matrix entries; only non-coordinate pieces (such as the span of an
/// all-ones vector) contribute dense linear equations. The equations are
/// solved exactly, so the output is a genuine basis.
pub fn stabilizer_subalgebra(n: usize, flags: &[FlagSpec]) -> SubalgebraBasis {
    let ambient = n + 1;
    for flag in flags {
        assert_eq!(flag.ambient(), ambient, "flag has wrong ambient dimension");
    }
    let mut allowed = vec![vec![true; ambient]; ambient];
    let mut generic_pieces: Vec<&RatMatrix> = Vec::new();
    for piece in flags.iter().flat_map(|f| f.pieces()) {
        match coordinate_support(piece) {
            Some(coords) => {
                // M e_b must stay inside the span: entries leaving it vanish.
                for &b in &coords {
                    for (a, row) in allowed.iter_mut().enumerate() {
                        if !coords.contains(&a) {
                            row[b] = false;
                        }
                    }
                }
            }
            None => generic_pieces.push(piece),
        }
    }
    let mut free: Vec<(usize, usize)> = Vec::new();
    let mut index = vec![vec![usize::MAX; ambient]; ambient];
    for a in 0..ambient {
        for b in 0..ambient {
            if allowed[a][b] {
                index[a][b] = free.len();
                free.push((a, b));
            }
        }
    }
    let mut equations: Vec<Vec<Rat>> = Vec::new();
    let mut trace_row = vec![Rat::zero(); free.len()];
    for a in 0..ambient {
        // Diagonal entries never leave a coordinate span, so they are free.
        trace_row[index[a][a]] = Rat::one();
    }
    equations.push(trace_row);
    for piece in generic_pieces {
        let complements = nullspace(piece);
        for i in 0..piece.rows() {
            for w in &complements {
                let mut eq = vec![Rat::zero(); free.len()];
                for (slot, &(a, b)) in free.iter().enumerate() {
                    let coeff = &w[a] * piece.at(i, b);
                    if !coeff.is_zero() {
                        eq[slot] += coeff;
                    }
                }
                if eq.iter().any(|c| !c.is_zero()) {
                    equations.push(eq);
                }
            }
        }
    }
    let solution_basis = nullspace(&RatMatrix::from_rows(equations));
    let elements = solution_basis
        .into_iter()
        .map(|v| {
            let mut rows = vec![vec![Rat::zero(); ambient]; ambient];
            for (slot, &(a, b)) in free.iter().enumerate() {
                rows[a][b] = v[slot].clone();
            }
            RatMatrix::from_rows(rows)
        })
        .collect();
    SubalgebraBasis { ambient, elements }
}

/// Basis of all trace-zero matrices (no flag constraints).
pub fn full_special_linear(n: usize) -> SubalgebraBasis {
    stabilizer_subalgebra(n, &[])
}

/// Dimension of the orbit of `q` under the group of `alg`: the rank of the
/// map sending a basis matrix `M` to the induced tangent vector
/// `u ↦ M·u mod U` at `[U] = q`.
pub fn orbit_dimension(g: GrassmannIndex, alg: &SubalgebraBasis, q: &SubspacePoint) -> usize {
    assert_eq!(alg.ambient(), g.n() + 1, "algebra has wrong ambient");
    assert_eq!(q.r(), g.r(), "point lives on the wrong Grassmannian");
    assert_eq!(q.n(), g.n(), "point lives on the wrong Grassmannian");
    if alg.elements.is_empty() {
        return 0;
    }
    let basis = q.basis();
    let complements = nullspace(basis);
    let rows: Vec<Vec<Rat>> = alg
        .elements
        .iter()
        .map(|m| {
            let mut row = Vec::with_capacity(basis.rows() * complements.len());
            for i in 0..basis.rows() {
                let mut image = vec![Rat::zero(); alg.ambient];
                for a in 0..alg.ambient {
                    let mut acc = Rat::zero();
                    for b in 0..alg.ambient {
                        let coeff = m.at(a, b);
                        if !coeff.is_zero() {
                            acc += coeff * basis.at(i, b);
                        }
                    }
                    image[a] = acc;
                }
                for w in &complements {
                    row.push(
                        w.iter()
                            .zip(&image)
                            .fold(Rat::zero(), |s, (x, y)| s + x * y),
                    );
                }
            }
            row
        })
        .collect();
    rank(&RatMatrix::from_rows(rows))
}

/// Outcome of a complexity computation: codimension of the largest sampled
/// orbit, together with everything needed to audit it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityReport {
    pub r: usize,
    pub n: usize,
    pub k: usize,
    /// `dim G(r,n) − orbit_dim`; the true complexity when `exact`, otherwise
    /// a lower bound for it.
    pub complexity: usize,
    /// True when the point configuration is covered by coordinate blocks, so
    /// the constructed algebra is the full Borel model; false when one extra
    /// general point forced a larger containing algebra.
    pub exact: bool,
    pub orbit_dim: usize,
    pub algebra_dim: usize,
    pub stabilizer_dim: usize,
    /// Orbit dimension of every sampled point, sorted ascending.
    pub samples: Vec<usize>,
    pub seed: u64,
}

impl ComplexityReport {
    /// True when every sample attained the maximal orbit dimension.
    pub fn is_stable(&self) -> bool {
        self.samples.iter().all(|&s| s == self.orbit_dim)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "r": self.r,
            "n": self.n,
            "k": self.k,
            "complexity": self.complexity,
            "exact": self.exact,
            "orbit_dim": self.orbit_dim,
            "algebra_dim": self.algebra_dim,
            "samples": self.samples,
            "seed": self.seed,
        })
    }
}

/// Number of disjoint `(r+1)`-coordinate blocks available in the ambient
/// space, i.e. how many of the blown-up points can be placed on coordinate
/// subspaces.
pub fn coordinate_block_capacity(g: GrassmannIndex) -> usize {
    (g.n() + 1) / (g.r() + 1)
}

/// The flag system modelling `k` general points: one complete coordinate
/// flag per block, one complete flag on the leftover coordinates, and — for
/// exactly one point beyond the block capacity — a flag ending in the span
/// of the leftover coordinates and the all-ones vector.
///
/// Returns the flags and whether they model the configuration exactly
/// (`false` means the algebra only contains the true one, so downstream
/// complexities are lower bounds).
pub fn configuration_flags(
    g: GrassmannIndex,
    k: usize,
) -> Result<(Vec<FlagSpec>, bool), OrbitError> {
    let (r, n) = (g.r(), g.n());
    let ambient = n + 1;
    let capacity = coordinate_block_capacity(g);
    if k > capacity + 1 {
        return Err(OrbitError::UnsupportedConfiguration {
            r,
            n,
            k,
            max: capacity,
        });
    }
    let blocks = k.min(capacity);
    let mut flags: Vec<FlagSpec> = (0..blocks)
        .map(|i| {
            let coords: Vec<usize> = (i * (r + 1)..(i + 1) * (r + 1)).collect();
            FlagSpec::complete_coordinate(ambient, &coords)
        })
        .collect();
    let leftover: Vec<usize> = (blocks * (r + 1)..ambient).collect();
    if k <= capacity {
        if !leftover.is_empty() {
            flags.push(FlagSpec::complete_coordinate(ambient, &leftover));
        }
        Ok((flags, true))
    } else {
        let mut pieces: Vec<RatMatrix> = (1..=leftover.len())
            .map(|len| coordinate_rows(ambient, &leftover[..len]))
            .collect();
        let ones_row = RatMatrix::from_rows(vec![vec![Rat::one(); ambient]]);
        let last = if leftover.is_empty() {
            ones_row
        } else {
            coordinate_rows(ambient, &leftover).vstack(&ones_row)
        };
        pieces.push(last);
        flags.push(FlagSpec::new(pieces)?);
        Ok((flags, false))
    }
}

fn sample_seed(seed: u64, sample: usize) -> u64 {
    seed.wrapping_add((sample as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_point(g: GrassmannIndex, seed: u64, bound: i64) -> SubspacePoint {
    assert!(bound >= 1, "coordinate bound must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rows: Vec<Vec<Rat>> = (0..g.r() + 1)
            .map(|_| {
                (0..g.n() + 1)
                    .map(|_| Rat::from_integer(rng.random_range(-bound..=bound).into()))
                    .collect()
            })
            .collect();
        let m = RatMatrix::from_rows(rows);
        if rank(&m) == g.r() + 1 {
            return SubspacePoint::new(m).expect("full rank by construction");
        }
    }
}

/// Complexity of the blow-up of `G(r,n)` at `k` general points, sampled at
/// `samples` independent random rational points.
///
/// Each sample draws its own generator from a seed derived from `seed` and
/// the sample index, so results do not depend on evaluation order; the
/// sample list is reported sorted ascending.
pub fn complexity_with(
    g: GrassmannIndex,
    k: usize,
    seed: u64,
    samples: usize,
) -> Result<ComplexityReport, OrbitError> {
    complexity_opts(g, k, seed, samples, COORDINATE_BOUND)
}

/// [`complexity_with`] with an explicit bound on the sampled coordinates.
pub fn complexity_opts(
    g: GrassmannIndex,
    k: usize,
    seed: u64,
    samples: usize,
    bound: i64,
) -> Result<ComplexityReport, OrbitError> {
    assert!(samples >= 1, "need at least one sample");
    let (flags, exact) = configuration_flags(g, k)?;
    let alg = stabilizer_subalgebra(g.n(), &flags);
    let mut dims: Vec<usize> = (0..samples)
        .map(|s| orbit_dimension(g, &alg, &random_point(g, sample_seed(seed, s), bound)))
        .collect();
    dims.sort_unstable();
    let orbit_dim = *dims.last().expect("at least one sample");
    Ok(ComplexityReport {
        r: g.r(),
        n: g.n(),
        k,
        complexity: g.dim() - orbit_dim,
        exact,
        orbit_dim,
        algebra_dim: alg.dim(),
        stabilizer_dim: alg.dim() - orbit_dim,
        samples: dims,
        seed,
    })
}

/// [`complexity_with`] at the default sample count.
pub fn complexity(g: GrassmannIndex, k: usize, seed: u64) -> Result<ComplexityReport, OrbitError> {
    complexity_with(g, k, seed, DEFAULT_SAMPLES)
}

/// Whether the blow-up of `G(r,n)` at `k` general points is spherical.
///
/// Exact configurations decide by complexity zero; lower-bound
/// configurations can only certify the negative, and report themselves
/// inconclusive when the bound is zero.
pub fn is_spherical(g: GrassmannIndex, k: usize, seed: u64) -> Result<bool, OrbitError> {
    let report = complexity(g, k, seed)?;
    if report.exact {
        Ok(report.complexity == 0)
    } else if report.complexity >= 1 {
        Ok(false)
    } else {
        Err(OrbitError::Inconclusive {
            bound: report.complexity,
        })
    }
}

/// The known effective cones of the spherical blow-ups, as cones in the
/// `{H, E_1, …, E_k}` basis of the divisor class lattice.
pub fn effective_cone_catalog(g: GrassmannIndex, k: usize) -> Result<RationalCone, OrbitError> {
    let (r, n) = (g.r(), g.n());
    let e = |i: usize| -> Vec<i64> {
        let mut v = vec![0i64; k + 1];
        v[i] = 1;
        v
    };
    let rays: Vec<Vec<i64>> = match k {
        1 => vec![e(1), vec![1, -(r as i64 + 1)]],
        2 if n == 2 * r + 1 => vec![
            e(1),
            e(2),
            vec![1, -(r as i64 + 1), 0],
            vec![1, 0, -(r as i64 + 1)],
        ],
        2 if n == 2 * r + 2 => vec![
            e(1),
            e(2),
            vec![1, -(r as i64 + 1), -1],
            vec![1, -1, -(r as i64 + 1)],
        ],
        2 if r == 1 && n >= 5 => vec![e(1), e(2), vec![1, -2, -2]],
        3 if (r, n) == (1, 5) => vec![
            e(1),
            e(2),
            e(3),
            vec![1, -2, -2, 0],
            vec![1, -2, 0, -2],
            vec![1, 0, -2, -2],
        ],
        _ => return Err(OrbitError::NotInCatalog { r, n, k }),
    };
    let refs: Vec<&[i64]> = rays.iter().map(|v| v.as_slice()).collect();
    Ok(RationalCone::from_i64_rays(k + 1, &refs))
}

/// Whether the blow-up is certified to be a Mori dream space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdsVerdict {
    MoriDream,
    Unknown,
}

impl MdsVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            MdsVerdict::MoriDream => "mori_dream",
            MdsVerdict::Unknown => "unknown",
        }
    }
}

impl std::fmt::Display for MdsVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Certifies Mori-dream-ness when the computed complexity is exact and at
/// most one, or when the variety is a weak Fano blow-up of `G(1,4)`.
/// Everything else — including configurations the sampler cannot place —
/// reports `Unknown`; the engine never claims a negative.
pub fn mds_verdict(g: GrassmannIndex, k: usize, seed: u64) -> MdsVerdict {
    if (g.r(), g.n()) == (1, 4) && (1..=4).contains(&k) {
        if let Ok(cfg) = BlowupConfig::grassmannian(1, 4, k) {
            let verdict = fano::classify(&cfg);
            if matches!(
                verdict.status,
                FanoStatus::Fano | FanoStatus::WeakFanoNotFano
            ) {
                return MdsVerdict::MoriDream;
            }
        }
    }
    match complexity(g, k, seed) {
        Ok(report) if report.exact && report.complexity <= 1 => MdsVerdict::MoriDream,
        _ => MdsVerdict::Unknown,
    }
}
