//! Plücker embedding of the Grassmannian of projective `r`-planes in
//! projective `n`-space, affine charts around a point, osculating spaces,
//! the contact loci they cut out, and the torus-invariant linear divisors
//! used to sweep out chamber representatives, with exact multiplicities.
//!
//! Everything is exact: points are full-rank rational basis matrices,
//! Plücker vectors are maximal minors in lexicographic index order, and
//! chart expansions are sparse polynomials over the rationals, so dimensions
//! and multiplicities come out of rank computations and degree bookkeeping
//! rather than numerics.

use crate::exactlin::{det, rank, Rat, RatMatrix};
use itertools::Itertools;
use num::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use thiserror::Error;

/// Errors for malformed Grassmannian data.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrassmannError {
    #[error("need 0 <= r and n >= 2r+1, got r={r}, n={n}")]
    InvalidIndex { r: usize, n: usize },
    #[error("basis must be a full-rank {rows}x{cols} matrix")]
    RankDeficientBasis { rows: usize, cols: usize },
    #[error("contact order m must satisfy m <= r+1 = {max}, got {m}")]
    ContactOrderOutOfRange { m: usize, max: usize },
    #[error("center must span a projective (n-r-1)-plane: expected {expected} rows, got {got}")]
    WrongCenterDimension { expected: usize, got: usize },
    #[error("the divisor form vanishes identically")]
    ZeroForm,
}

/// The Grassmannian of projective `r`-planes in projective `n`-space.
///
/// The convention `n ≥ 2r+1` costs nothing (duality swaps `r` with
/// `n−r−1`) and is assumed throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrassmannIndex {
    r: usize,
    n: usize,
}

impl GrassmannIndex {
    pub fn new(r: usize, n: usize) -> Result<Self, GrassmannError> {
        if n < 2 * r + 1 {
            return Err(GrassmannError::InvalidIndex { r, n });
        }
        Ok(GrassmannIndex { r, n })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the Grassmannian, `(r+1)(n−r)`.
    pub fn dim(&self) -> usize {
        (self.r + 1) * (self.n - self.r)
    }

    /// Dimension `N` of the Plücker ambient projective space; always derived
    /// from `r` and `n`, never stored.
    pub fn ambient_dim(&self) -> usize {
        use num::ToPrimitive;
        crate::lattice::binomial(self.n + 1, self.r + 1)
            .to_usize()
            .expect("Plücker coordinate count fits in usize")
            - 1
    }

    /// Number of Plücker coordinates, `N + 1`.
    pub fn plucker_len(&self) -> usize {
        self.ambient_dim() + 1
    }
}

/// A point of the Grassmannian: the row space of a full-rank
/// `(r+1) × (n+1)` matrix.
///
/// Two points are equal iff their row spaces agree, equivalently iff their
/// Plücker vectors are proportional.
#[derive(Clone, Debug)]
pub struct SubspacePoint {
    basis: RatMatrix,
}

impl SubspacePoint {
    pub fn new(basis: RatMatrix) -> Result<Self, GrassmannError> {
        if basis.rows() == 0 || basis.rows() > basis.cols() || rank(&basis) != basis.rows() {
            return Err(GrassmannError::RankDeficientBasis {
                rows: basis.rows(),
                cols: basis.cols(),
            });
        }
        Ok(SubspacePoint { basis })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, GrassmannError> {
        SubspacePoint::new(RatMatrix::from_i64_rows(rows))
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    /// Projective `r` with `r+1` basis rows.
    pub fn r(&self) -> usize {
        self.basis.rows() - 1
    }

    /// Ambient projective `n` with `n+1` coordinates.
    pub fn n(&self) -> usize {
        self.basis.cols() - 1
    }

    /// Plücker vector: all `(r+1) × (r+1)` minors, column index sets in
    /// lexicographic order. Nonzero because the basis has full rank, and
    /// well-defined up to scale under change of basis.
    pub fn plucker(&self) -> Vec<Rat> {
        maximal_minors(&self.basis)
    }
}

impl PartialEq for SubspacePoint {
    fn eq(&self, other: &Self) -> bool {
        self.basis.rows() == other.basis.rows()
            && self.basis.cols() == other.basis.cols()
            && rank(&self.basis.vstack(&other.basis)) == self.basis.rows()
    }
}

impl Eq for SubspacePoint {}

/// A linear subspace of projective `n`-space used as the center of an
/// incidence divisor; the matrix has full row rank.
#[derive(Clone, Debug)]
pub struct LinearCenter {
    subspace: RatMatrix,
}

impl LinearCenter {
    pub fn new(subspace: RatMatrix) -> Result<Self, GrassmannError> {
        if subspace.rows() == 0
            || subspace.rows() > subspace.cols()
            || rank(&subspace) != subspace.rows()
        {
            return Err(GrassmannError::RankDeficientBasis {
                rows: subspace.rows(),
                cols: subspace.cols(),
            });
        }
        Ok(LinearCenter { subspace })
    }

    pub fn subspace(&self) -> &RatMatrix {
        &self.subspace
    }
}

/// All maximal minors of a wide matrix, column index sets in lexicographic
/// order.
pub fn maximal_minors(m: &RatMatrix) -> Vec<Rat> {
    let k = m.rows();
    (0..m.cols())
        .combinations(k)
        .map(|cols| {
            let sub = RatMatrix::from_rows(
                (0..k)
                    .map(|i| cols.iter().map(|&c| m.at(i, c).clone()).collect())
                    .collect(),
            );
            det(&sub)
        })
        .collect()
}

/// True iff the planes of `q` and `v` intersect in (affine) dimension at
/// least `r+1−m`, i.e. `q` lies in the contact locus of order `m` at `v`.
///
/// Panics unless `q` and `v` have the same shape and `m ≤ r+1`.
pub fn schubert_membership(q: &SubspacePoint, v: &SubspacePoint, m: usize) -> bool {
    assert_eq!(q.basis.rows(), v.basis.rows(), "points must share r");
    assert_eq!(q.basis.cols(), v.basis.cols(), "points must share n");
    let r1 = q.basis.rows();
    assert!(m <= r1, "contact order m must be at most r+1");
    let meet = 2 * r1 - rank(&q.basis.vstack(&v.basis));
    meet >= r1 - m
}

/// Dimension `m(n+1−m)` of the order-`m` contact locus.
pub fn schubert_dimension(g: GrassmannIndex, m: usize) -> Result<usize, GrassmannError> {
    if m > g.r + 1 {
        return Err(GrassmannError::ContactOrderOutOfRange { m, max: g.r + 1 });
    }
    Ok(m * (g.n + 1 - m))
}

/// True iff the order-`m` contact locus is a divisor of the Grassmannian,
/// which happens exactly for `m = r` on `G(r, 2r+1)`.
pub fn schubert_is_divisor(g: GrassmannIndex, m: usize) -> Result<bool, GrassmannError> {
    Ok(schubert_dimension(g, m)? + 1 == g.dim())
}

/// Verification mode for [`schubert_dimension`]: the same number, measured
/// as the rank of the tangent map of the incidence parametrization at a
/// random rational point.
///
/// The locus is swept by planes spanned by `r+1−m` vectors inside a fixed
/// `(r+1)`-plane (chosen via an `[I | A]` coefficient chart) together with
/// `m` free vectors. The Plücker image of that parametrization is evaluated
/// at random parameters; each parameter perturbs a single row, so the
/// partial derivative is the minor vector with that row replaced by the
/// perturbation direction. The point itself is appended as the scaling
/// direction, and the projective dimension is the column rank minus one.
pub fn schubert_dimension_sampled(
    g: GrassmannIndex,
    m: usize,
    seed: u64,
) -> Result<usize, GrassmannError> {
    if m > g.r + 1 {
        return Err(GrassmannError::ContactOrderOutOfRange { m, max: g.r + 1 });
    }
    let (r1, cols) = (g.r + 1, g.n + 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = random_full_rank(&mut rng, r1, cols);
    // W rows: the first r+1−m rows of V shifted by A times the last m rows.
    let a: Vec<Vec<Rat>> = (0..r1 - m)
        .map(|_| (0..m).map(|_| small_random(&mut rng)).collect())
        .collect();
    let mut stacked: Vec<Vec<Rat>> = Vec::with_capacity(r1);
    for (i, coeffs) in a.iter().enumerate() {
        let mut row: Vec<Rat> = v.row(i).to_vec();
        for (j, c) in coeffs.iter().enumerate() {
            for (x, y) in row.iter_mut().zip(v.row(r1 - m + j)) {
                *x += c * y;
            }
        }
        stacked.push(row);
    }
    for _ in 0..m {
        stacked.push((0..cols).map(|_| small_random(&mut rng)).collect());
    }
    let point = RatMatrix::from_rows(stacked);
    debug_assert_eq!(rank(&point), r1, "parameters landed on a degenerate plane");
    let mut columns: Vec<Vec<Rat>> = Vec::new();
    for i in 0..r1 - m {
        for j in 0..m {
            columns.push(maximal_minors(&row_replaced(&point, i, v.row(r1 - m + j))));
        }
    }
    for u in 0..m {
        for c in 0..cols {
            let mut e = vec![Rat::zero(); cols];
            e[c] = Rat::one();
            columns.push(maximal_minors(&row_replaced(&point, r1 - m + u, &e)));
        }
    }
    columns.push(maximal_minors(&point));
    Ok(rank(&RatMatrix::from_rows(columns)) - 1)
}

fn row_replaced(m: &RatMatrix, idx: usize, row: &[Rat]) -> RatMatrix {
    let rows: Vec<Vec<Rat>> = (0..m.rows())
        .map(|i| {
            if i == idx {
                row.to_vec()
            } else {
                m.row(i).to_vec()
            }
        })
        .collect();
    RatMatrix::from_rows(rows)
}

fn small_random(rng: &mut ChaCha8Rng) -> Rat {
    Rat::from_integer(rng.random_range(-10i64..=10).into())
}

fn random_full_rank(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RatMatrix {
    loop {
        let m = RatMatrix::from_rows(
            (0..rows)
                .map(|_| (0..cols).map(|_| small_random(rng)).collect())
                .collect(),
        );
        if rank(&m) == rows {
            return m;
        }
    }
}

/// Exponent vector ordered by total degree first, then lexicographically
/// (graded lexicographic order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn product(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse multivariate polynomial over the rationals, keyed by [`Monomial`]
/// in graded lexicographic order; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = SparsePoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(nvars), c);
        }
        p
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut p = SparsePoly::zero(nvars);
        p.terms.insert(Monomial::variable(nvars, i), Rat::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn insert(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, other.nvars, "variable counts must agree");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, other.nvars, "variable counts must agree");
        let mut out = SparsePoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert(ma.product(mb), ca * cb);
            }
        }
        out
    }

    /// Smallest total degree of a surviving term; `None` for the zero
    /// polynomial. This is the vanishing order at the origin.
    pub fn min_total_degree(&self) -> Option<usize> {
        // Graded order puts the minimal-degree term first.
        self.terms
            .keys()
            .next()
            .map(|m| m.total_degree() as usize)
    }

    pub fn evaluate(&self, xs: &[Rat]) -> Rat {
        assert_eq!(xs.len(), self.nvars, "evaluation point has wrong arity");
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in xs.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

fn poly_det(rows: &[Vec<SparsePoly>]) -> SparsePoly {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let nvars = rows[0][0].nvars();
    let mut acc = SparsePoly::zero(nvars);
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<SparsePoly>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = rows[0][j].mul(&poly_det(&minor));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Completes the rows of `p` to a basis of the ambient space by appending
/// coordinate vectors, deterministically.
fn extend_basis(p: &SubspacePoint) -> RatMatrix {
    let cols = p.basis.cols();
    let mut rows: Vec<Vec<Rat>> = (0..p.basis.rows()).map(|i| p.basis.row(i).to_vec()).collect();
    let mut current = rank(&p.basis);
    for i in 0..cols {
        if current == cols {
            break;
        }
        let mut e = vec![Rat::zero(); cols];
        e[i] = Rat::one();
        rows.push(e);
        let candidate = RatMatrix::from_rows(rows.clone());
        if rank(&candidate) > current {
            current += 1;
        } else {
            rows.pop();
        }
    }
    RatMatrix::from_rows(rows)
}

/// Plücker coordinates of the affine chart centered at `p`, as polynomials
/// in the `(r+1)(n−r)` chart variables.
///
/// The chart acts with a basis change sending `p` to the row space of the
/// first `r+1` coordinate vectors and parametrizes nearby planes as
/// `[I | A]` times that basis, so `p` sits at the origin and Plücker
/// coordinates become polynomials in the entries of `A` — osculating spans
/// and multiplicities reduce to monomial-degree bookkeeping.
pub fn chart_polynomials(p: &SubspacePoint) -> Vec<SparsePoly> {
    let r1 = p.basis.rows();
    let cols = p.basis.cols();
    let width = cols - r1;
    let nvars = r1 * width;
    let g = extend_basis(p);
    // Row i of the moving plane: G_top[i] + Σ_c A[i,c] · G_bottom[c].
    let symbolic: Vec<Vec<SparsePoly>> = (0..r1)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let mut entry = SparsePoly::constant(nvars, g.at(i, j).clone());
                    for c in 0..width {
                        let coeff = g.at(r1 + c, j);
                        if !coeff.is_zero() {
                            entry = entry.add(
                                &SparsePoly::variable(nvars, i * width + c)
                                    .scale(coeff),
                            );
                        }
                    }
                    entry
                })
                .collect()
        })
        .collect();
    (0..cols)
        .combinations(r1)
        .map(|colset| {
            let sub: Vec<Vec<SparsePoly>> = (0..r1)
                .map(|i| colset.iter().map(|&c| symbolic[i][c].clone()).collect())
                .collect();
            poly_det(&sub)
        })
        .collect()
}

/// Projective dimension of the span of all partial derivatives of order at
/// most `m` of the chart parametrization at `p` (the order-`m` osculating
/// space).
///
/// Partial derivatives at the origin are scaled monomial coefficients, so
/// the span is the row space of the per-monomial coefficient vectors of the
/// chart polynomials, over all monomials of total degree at most `m`.
pub fn osculating_dimension(g: GrassmannIndex, p: &SubspacePoint, m: usize) -> usize {
    assert_eq!(p.r(), g.r, "point must live on this Grassmannian");
    assert_eq!(p.n(), g.n, "point must live on this Grassmannian");
    let charts = chart_polynomials(p);
    let mut monomials: Vec<Monomial> = charts
        .iter()
        .flat_map(|poly| poly.terms().map(|(mon, _)| mon.clone()))
        .filter(|mon| mon.total_degree() as usize <= m)
        .collect();
    monomials.sort();
    monomials.dedup();
    let rows: Vec<Vec<Rat>> = monomials
        .iter()
        .map(|mon| charts.iter().map(|poly| poly.coefficient(mon)).collect())
        .collect();
    rank(&RatMatrix::from_rows(rows)) - 1
}

/// A linear form in Plücker coordinates, stored as its coefficient vector
/// in lexicographic index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerForm {
    pub coeffs: Vec<Rat>,
}

impl PluckerForm {
    pub fn evaluate(&self, plucker: &[Rat]) -> Rat {
        assert_eq!(plucker.len(), self.coeffs.len(), "length mismatch");
        self.coeffs
            .iter()
            .zip(plucker)
            .fold(Rat::zero(), |acc, (c, p)| acc + c * p)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// The linear Plücker form cutting out the divisor of `r`-planes meeting the
/// center, which must be a projective `(n−r−1)`-plane.
///
/// A plane `Σ` meets the center iff the stacked `(n+1) × (n+1)` basis matrix
/// is singular; generalized Laplace expansion along the `Σ`-rows turns that
/// determinant into a linear form in the Plücker coordinates of `Σ`, with
/// coefficient `±minor` of the center's complementary columns.
pub fn schubert_divisor(
    g: GrassmannIndex,
    center: &LinearCenter,
) -> Result<PluckerForm, GrassmannError> {
    let rows = center.subspace.rows();
    if rows != g.n - g.r {
        return Err(GrassmannError::WrongCenterDimension {
            expected: g.n - g.r,
            got: rows,
        });
    }
    if center.subspace.cols() != g.n + 1 {
        return Err(GrassmannError::RankDeficientBasis {
            rows,
            cols: center.subspace.cols(),
        });
    }
    let r1 = g.r + 1;
    let all: Vec<usize> = (0..=g.n).collect();
    let coeffs: Vec<Rat> = (0..=g.n)
        .combinations(r1)
        .map(|iset| {
            let complement: Vec<usize> =
                all.iter().copied().filter(|c| !iset.contains(c)).collect();
            let sub = RatMatrix::from_rows(
                (0..rows)
                    .map(|i| {
                        complement
                            .iter()
                            .map(|&c| center.subspace.at(i, c).clone())
                            .collect()
                    })
                    .collect(),
            );
            let sign_exp: usize = iset.iter().sum::<usize>() + g.r * r1 / 2;
            let minor = det(&sub);
            if sign_exp % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
        .collect();
    let form = PluckerForm { coeffs };
    if form.is_zero() {
        return Err(GrassmannError::ZeroForm);
    }
    Ok(form)
}

/// Order of vanishing of the divisor form at `p`: the minimal total degree
/// of the form's expansion in the chart centered at `p`.
pub fn multiplicity_at(
    g: GrassmannIndex,
    form: &PluckerForm,
    p: &SubspacePoint,
) -> Result<usize, GrassmannError> {
    if form.is_zero() {
        return Err(GrassmannError::ZeroForm);
    }
    assert_eq!(form.coeffs.len(), g.plucker_len(), "form has wrong length");
    let charts = chart_polynomials(p);
    let mut expansion = SparsePoly::zero(charts[0].nvars());
    for (c, poly) in form.coeffs.iter().zip(&charts) {
        if !c.is_zero() {
            expansion = expansion.add(&poly.scale(c));
        }
    }
    match expansion.min_total_degree() {
        // A nonzero linear form cannot vanish on the dense chart, since the
        // Plücker image spans the ambient space; zero means a bad form.
        None => Err(GrassmannError::ZeroForm),
        Some(d) => Ok(d),
    }
}

/// The coordinate point spanned by the first `r+1` coordinate vectors; the
/// chart at this point is the identity chart.
pub fn standard_point(g: GrassmannIndex) -> SubspacePoint {
    let mut rows = vec![vec![Rat::zero(); g.n + 1]; g.r + 1];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = Rat::one();
    }
    SubspacePoint::new(RatMatrix::from_rows(rows)).expect("coordinate point is full rank")
}

/// The general point `⟨e_0 + e_n, e_1 + e_{n−1}, …, e_r + e_{n−r}⟩` avoiding
/// all the standard incidence divisors.
pub fn general_point(g: GrassmannIndex) -> SubspacePoint {
    let mut rows = vec![vec![Rat::zero(); g.n + 1]; g.r + 1];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = Rat::one();
        row[g.n - i] += Rat::one();
    }
    SubspacePoint::new(RatMatrix::from_rows(rows)).expect("point is full rank")
}

/// The `j`-th standard center `⟨e_0, …, e_{j−1}, e_{r+1}, …, e_{n−j}⟩`, a
/// projective `(n−r−1)`-plane whose incidence divisor has multiplicity `j`
/// at [`standard_point`]; valid for `j = 0, …, r+1`.
pub fn standard_center(g: GrassmannIndex, j: usize) -> Result<LinearCenter, GrassmannError> {
    if j > g.r + 1 {
        return Err(GrassmannError::ContactOrderOutOfRange { m: j, max: g.r + 1 });
    }
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(g.n - g.r);
    for i in (0..j).chain(g.r + 1..=g.n - j) {
        let mut e = vec![Rat::zero(); g.n + 1];
        e[i] = Rat::one();
        rows.push(e);
    }
    LinearCenter::new(RatMatrix::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    #[test]
    fn plucker_of_a_projective_point_is_its_coordinates() {
        let p = SubspacePoint::from_i64_rows(&[&[3, -1, 2, 5]]).unwrap();
        assert_eq!(p.plucker(), vec![rat(3), rat(-1), rat(2), rat(5)]);
    }

    #[test]
    fn plucker_of_coordinate_line_in_three_space() {
        let p = SubspacePoint::from_i64_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]).unwrap();
        assert_eq!(
            p.plucker(),
            vec![rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)]
        );
    }

    #[test]
    fn plucker_quadric_relation_holds() {
        let p = SubspacePoint::from_i64_rows(&[&[2, 3, -1, 4], &[1, 0, 5, -2]]).unwrap();
        let q = p.plucker();
        let rel = &q[0] * &q[5] - &q[1] * &q[4] + &q[2] * &q[3];
        assert!(rel.is_zero());
    }

    #[test]
    fn rank_deficient_point_is_rejected() {
        assert!(SubspacePoint::from_i64_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8]]).is_err());
    }

    #[test]
    fn membership_basics() {
        let g = GrassmannIndex::new(1, 3).unwrap();
        let p = standard_point(g);
        let q = general_point(g);
        for m in 0..=2 {
            assert!(schubert_membership(&p, &p, m));
        }
        assert!(schubert_membership(&q, &p, 2));
        assert!(!schubert_membership(&q, &p, 0));
        assert!(schubert_membership(&p, &q, 0) == (p == q));
    }

    #[test]
    fn contact_locus_dimensions() {
        let g15 = GrassmannIndex::new(1, 5).unwrap();
        assert_eq!(schubert_dimension(g15, 0).unwrap(), 0);
        // On G(r, 2r+1) the order-r locus is a divisor.
        for r in 1..4 {
            let g = GrassmannIndex::new(r, 2 * r + 1).unwrap();
            assert_eq!(schubert_dimension(g, r).unwrap(), r * (r + 2));
            assert_eq!(schubert_dimension(g, r).unwrap() + 1, g.dim());
            assert!(schubert_is_divisor(g, r).unwrap());
        }
        let g14 = GrassmannIndex::new(1, 4).unwrap();
        assert_eq!(schubert_dimension(g14, 1).unwrap(), 4);
        assert!(schubert_dimension(g14, 3).is_err());
    }

    #[test]
    fn sampled_dimension_matches_closed_form() {
        for (r, n) in [(1usize, 3usize), (1, 4), (2, 5)] {
            let g = GrassmannIndex::new(r, n).unwrap();
            for m in 0..=r + 1 {
                assert_eq!(
                    schubert_dimension_sampled(g, m, 7).unwrap(),
                    schubert_dimension(g, m).unwrap(),
                    "mismatch at r={r}, n={n}, m={m}"
                );
            }
        }
    }

    #[test]
    fn osculating_dimensions_on_small_grassmannians() {
        for (r, n) in [(1usize, 3usize), (1, 4), (2, 5)] {
            let g = GrassmannIndex::new(r, n).unwrap();
            for p in [standard_point(g), general_point(g)] {
                assert_eq!(osculating_dimension(g, &p, 0), 0);
                assert_eq!(osculating_dimension(g, &p, 1), g.dim());
            }
        }
        // The full osculating filtration ends at the ambient space.
        let g14 = GrassmannIndex::new(1, 4).unwrap();
        let p = standard_point(g14);
        assert_eq!(osculating_dimension(g14, &p, 2), 9);
        let g13 = GrassmannIndex::new(1, 3).unwrap();
        assert_eq!(osculating_dimension(g13, &standard_point(g13), 2), 5);
    }

    #[test]
    fn divisor_form_matches_stacked_determinant() {
        let g = GrassmannIndex::new(1, 3).unwrap();
        let center = LinearCenter::new(RatMatrix::from_i64_rows(&[
            &[1, 2, 3, 4],
            &[0, 1, -1, 2],
        ]))
        .unwrap();
        let form = schubert_divisor(g, &center).unwrap();
        for rows in [
            [[1i64, 0, 2, -1], [3, 1, 0, 5]],
            [[2, 1, 1, 1], [0, 3, -2, 4]],
            [[1, 1, 0, 0], [0, 0, 1, 1]],
        ] {
            let p = SubspacePoint::from_i64_rows(&[&rows[0], &rows[1]]).unwrap();
            let stacked = p.basis().vstack(center.subspace());
            assert_eq!(form.evaluate(&p.plucker()), det(&stacked));
        }
    }

    #[test]
    fn standard_centers_give_multiplicity_j() {
        for (r, n) in [(0usize, 4usize), (1, 3), (1, 4), (1, 5), (2, 5)] {
            let g = GrassmannIndex::new(r, n).unwrap();
            let p = standard_point(g);
            for j in 0..=r + 1 {
                let center = standard_center(g, j).unwrap();
                let form = schubert_divisor(g, &center).unwrap();
                assert_eq!(
                    multiplicity_at(g, &form, &p).unwrap(),
                    j,
                    "multiplicity mismatch at r={r}, n={n}, j={j}"
                );
            }
        }
    }

    #[test]
    fn general_point_avoids_all_standard_divisors() {
        for (r, n) in [(1usize, 3usize), (1, 4), (2, 5)] {
            let g = GrassmannIndex::new(r, n).unwrap();
            let p0 = general_point(g);
            let coords = p0.plucker();
            for j in 0..=r + 1 {
                let form = schubert_divisor(g, &standard_center(g, j).unwrap()).unwrap();
                assert!(
                    !form.evaluate(&coords).is_zero(),
                    "general point lies on divisor j={j} for r={r}, n={n}"
                );
                assert_eq!(multiplicity_at(g, &form, &p0).unwrap(), 0);
            }
        }
    }

    #[test]
    fn degenerate_centers_are_rejected() {
        assert!(LinearCenter::new(RatMatrix::from_i64_rows(&[
            &[1, 2, 3, 4],
            &[2, 4, 6, 8],
        ]))
        .is_err());
        // Wrong dimension: a point is not a valid center on G(1,3).
        let g = GrassmannIndex::new(1, 3).unwrap();
        let point_center = LinearCenter::new(RatMatrix::from_i64_rows(&[&[1, 0, 0, 0]])).unwrap();
        assert!(matches!(
            schubert_divisor(g, &point_center),
            Err(GrassmannError::WrongCenterDimension { .. })
        ));
    }

    #[test]
    fn contact_loci_are_monotone_in_m() {
        let g = GrassmannIndex::new(2, 5).unwrap();
        let p = standard_point(g);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let q = SubspacePoint::new(random_full_rank(&mut rng, 3, 6)).unwrap();
            let mut previous = false;
            for m in 0..=3 {
                let now = schubert_membership(&q, &p, m);
                assert!(now || !previous, "membership must be monotone in m");
                previous = now;
            }
            assert!(schubert_membership(&q, &p, 3));
        }
    }

    #[test]
    fn sparse_polynomials_multiply_exactly() {
        // (x + y)(x − y) = x² − y².
        let x = SparsePoly::variable(2, 0);
        let y = SparsePoly::variable(2, 1);
        let prod = x.add(&y).mul(&x.sub(&y));
        assert_eq!(prod, x.mul(&x).sub(&y.mul(&y)));
        assert_eq!(prod.min_total_degree(), Some(2));
        assert_eq!(prod.evaluate(&[rat(3), rat(2)]), rat(5));
    }
}
