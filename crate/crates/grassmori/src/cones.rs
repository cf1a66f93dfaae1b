//! Exact rational polyhedral cones in the class lattices of [`crate::lattice`]:
//! construction from generators, duality under a user-supplied bilinear form,
//! membership and extremal rays.
//!
//! Generator-to-inequality conversion runs the double description method over
//! exact integers, tracking the lineality space explicitly; every cone eagerly
//! carries both representations, so membership and equality are inequality
//! checks and never re-run elimination. Ambient dimensions here are tiny
//! (`k + 1` for a blow-up at `k` points), which keeps worst-case growth of
//! double description irrelevant.
//!
//! Duality between divisor and curve space must use the intersection pairing,
//! not the standard dot product, so [`RationalCone::dual`] takes the Gram
//! matrix of the pairing explicitly; see [`intersection_form`].

use crate::exactlin::{rank, Int, Rat, RatMatrix};
use num::{Integer, One, Signed, Zero};
use serde_json::{json, Value};

/// Gram matrix of the standard dot product.
pub fn standard_form(dim: usize) -> RatMatrix {
    RatMatrix::identity(dim)
}

/// Gram matrix of the intersection pairing between divisor and curve vectors
/// on a blow-up at `points` points: `diag(1, −1, …, −1)` of size `points + 1`.
pub fn intersection_form(points: usize) -> RatMatrix {
    let n = points + 1;
    let mut rows = vec![vec![Rat::zero(); n]; n];
    rows[0][0] = Rat::one();
    for i in 1..n {
        rows[i][i] = -Rat::one();
    }
    RatMatrix::from_rows(rows)
}

fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn dot_rat_int(a: &[Rat], b: &[Int]) -> Rat {
    a.iter()
        .zip(b)
        .fold(Rat::zero(), |acc, (x, y)| acc + x * Rat::from_integer(y.clone()))
}

/// Scales a rational vector to a primitive integer vector, preserving its
/// direction. Returns `None` for the zero vector.
fn primitivize_rat(v: &[Rat]) -> Option<Vec<Int>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let lcm = v.iter().fold(Int::one(), |acc, x| {
        if x.is_zero() {
            acc
        } else {
            acc.lcm(x.denom())
        }
    });
    let mut w: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitivize_int(&mut w);
    Some(w)
}

/// Divides an integer vector by the GCD of its entries (sign preserved).
/// Returns false for the zero vector.
fn primitivize_int(v: &mut [Int]) -> bool {
    let mut g = Int::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return false;
    }
    if !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    true
}

/// Flips the sign so the first nonzero entry is positive. Used only for
/// lineality directions, whose natural representative is ambiguous; rays keep
/// the sign they were given.
fn sign_normalize(v: &mut [Int]) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

/// Reduced row echelon basis of the row space, as primitive integer rows with
/// positive leading entries. Canonical: depends only on the span.
fn canonical_rowspace_basis(rows: &[Vec<Int>], cols: usize) -> Vec<Vec<Int>> {
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut pr = 0;
    for pc in 0..cols {
        let Some(hit) = (pr..m.len()).find(|&i| !m[i][pc].is_zero()) else {
            continue;
        };
        m.swap(pr, hit);
        let inv = m[pr][pc].clone();
        for x in m[pr].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..m.len() {
            if i != pr && !m[i][pc].is_zero() {
                let f = m[i][pc].clone();
                for c in 0..cols {
                    let t = &m[pr][c] * &f;
                    m[i][c] -= t;
                }
            }
        }
        pivots.push((pr, pc));
        pr += 1;
        if pr == m.len() {
            break;
        }
    }
    pivots
        .into_iter()
        .map(|(r, _)| {
            let mut v = primitivize_rat(&m[r]).expect("pivot row is nonzero");
            sign_normalize(&mut v);
            v
        })
        .collect()
}

/// Reduces `ray` modulo the span of `lines` (given in reduced echelon form),
/// zeroing the pivot coordinates; returns the primitive representative.
fn reduce_mod_lines(ray: &[Int], lines: &[Vec<Int>]) -> Option<Vec<Int>> {
    let mut v: Vec<Rat> = ray.iter().map(|x| Rat::from_integer(x.clone())).collect();
    for line in lines {
        let p = line.iter().position(|x| !x.is_zero()).expect("nonzero line");
        if v[p].is_zero() {
            continue;
        }
        let f = &v[p] / Rat::from_integer(line[p].clone());
        for (x, l) in v.iter_mut().zip(line) {
            *x -= &f * Rat::from_integer(l.clone());
        }
    }
    primitivize_rat(&v)
}

/// Rays plus lineality lines of `{x : ⟨a, x⟩ ≥ 0 for all a in normals}`,
/// computed by double description with explicit lineality tracking.
fn vrep_from_inequalities(dim: usize, normals: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let mut lines: Vec<Vec<Int>> = (0..dim)
        .map(|i| {
            let mut v = vec![Int::zero(); dim];
            v[i] = Int::one();
            v
        })
        .collect();
    let mut rays: Vec<Vec<Int>> = Vec::new();
    let mut processed: Vec<Vec<Int>> = Vec::new();
    for g in normals {
        if g.iter().all(|x| x.is_zero()) {
            continue;
        }
        if let Some(idx) = lines.iter().position(|l| !dot_int(g, l).is_zero()) {
            // A lineality direction sticks out of the half-space: it becomes a
            // ray, and everything else is projected onto the hyperplane of g.
            let mut l0 = lines.remove(idx);
            if dot_int(g, &l0).is_negative() {
                for x in l0.iter_mut() {
                    *x = -x.clone();
                }
            }
            let s0 = dot_int(g, &l0);
            let project = |v: &[Int]| -> Option<Vec<Int>> {
                let s = dot_int(g, v);
                let mut w: Vec<Int> = v
                    .iter()
                    .zip(&l0)
                    .map(|(x, y)| &s0 * x - &s * y)
                    .collect();
                primitivize_int(&mut w).then_some(w)
            };
            lines = lines.iter().map(|l| project(l).expect("independent lines")).collect();
            rays = rays.iter().filter_map(|r| project(r)).collect();
            rays.push(l0);
        } else {
            let (mut keep, neg): (Vec<_>, Vec<_>) = rays
                .into_iter()
                .partition(|r| !dot_int(g, r).is_negative());
            if !neg.is_empty() {
                let mut combos = Vec::new();
                for rp in keep.iter().filter(|r| dot_int(g, r).is_positive()) {
                    let sp = dot_int(g, rp);
                    for rn in &neg {
                        let sn = dot_int(g, rn);
                        let mut w: Vec<Int> = rn
                            .iter()
                            .zip(rp)
                            .map(|(x, y)| &sp * x - &sn * y)
                            .collect();
                        if primitivize_int(&mut w) {
                            combos.push(w);
                        }
                    }
                }
                keep.extend(combos);
            }
            rays = keep;
        }
        processed.push(g.clone());
        rays = prune_rays(dim, rays, &lines, &processed);
    }
    for l in lines.iter_mut() {
        sign_normalize(l);
    }
    lines.sort();
    rays.sort();
    (rays, lines)
}

/// Keeps exactly the rays spanning extremal rays of
/// `{x : ⟨a, x⟩ ≥ 0 for a in processed}`, whose lineality space is spanned by
/// `lines`: a ray is extremal iff its active constraints have rank
/// `dim − #lines − 1`.
fn prune_rays(
    dim: usize,
    rays: Vec<Vec<Int>>,
    lines: &[Vec<Int>],
    processed: &[Vec<Int>],
) -> Vec<Vec<Int>> {
    let echelon_lines = canonical_rowspace_basis(lines, dim);
    let mut reduced: Vec<Vec<Int>> = rays
        .iter()
        .filter_map(|r| reduce_mod_lines(r, &echelon_lines))
        .collect();
    reduced.sort();
    reduced.dedup();
    let target = dim - lines.len() - 1;
    reduced
        .into_iter()
        .filter(|r| {
            let active: Vec<Vec<Rat>> = processed
                .iter()
                .filter(|a| dot_int(a, r).is_zero())
                .map(|a| a.iter().map(|x| Rat::from_integer(x.clone())).collect())
                .collect();
            if active.is_empty() {
                return target == 0;
            }
            rank(&RatMatrix::from_rows(active)) == target
        })
        .collect()
}

/// A rational polyhedral cone, immutable after construction.
///
/// Both representations are carried: `generators` (primitive integer vectors
/// in canonical lexicographic order) and the facet data `normals`/`equations`
/// computed eagerly by double description, so values are freely shareable and
/// membership tests are pure inequality checks.
///
/// Equality compares canonicalized extremal-ray sets (plus lineality bases),
/// not raw generator lists, so redundantly generated cones compare equal.
#[derive(Clone, Debug)]
pub struct RationalCone {
    ambient_dim: usize,
    generators: Vec<Vec<Int>>,
    /// Facet inequalities `⟨a, x⟩ ≥ 0` valid on the cone.
    normals: Vec<Vec<Int>>,
    /// Functionals vanishing identically on the cone.
    equations: Vec<Vec<Int>>,
}

impl RationalCone {
    /// Cone spanned by rational generators; zero vectors are dropped and the
    /// rest are scaled primitive, deduplicated and sorted.
    pub fn from_rat_rays(ambient_dim: usize, rays: &[Vec<Rat>]) -> Self {
        let mut gens: Vec<Vec<Int>> = rays
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ambient_dim, "ray length must match ambient dim");
                r
            })
            .filter_map(|r| primitivize_rat(r))
            .collect();
        gens.sort();
        gens.dedup();
        // Facets of the cone are the extremal rays of its standard dual; the
        // dual's lineality lines are the equations cutting out the span.
        let (normals, equations) = vrep_from_inequalities(ambient_dim, &gens);
        RationalCone {
            ambient_dim,
            generators: gens,
            normals,
            equations,
        }
    }

    /// Cone spanned by integer-literal rays (test and fixture helper).
    pub fn from_i64_rays(ambient_dim: usize, rays: &[&[i64]]) -> Self {
        let rat_rays: Vec<Vec<Rat>> = rays
            .iter()
            .map(|r| r.iter().map(|&x| Rat::from_integer(Int::from(x))).collect())
            .collect();
        RationalCone::from_rat_rays(ambient_dim, &rat_rays)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Canonicalized generators (primitive, sorted, deduplicated).
    pub fn generators(&self) -> &[Vec<Int>] {
        &self.generators
    }

    /// Facet inequalities `⟨a, x⟩ ≥ 0`.
    pub fn normals(&self) -> &[Vec<Int>] {
        &self.normals
    }

    /// Functionals vanishing on the whole cone (empty iff full-dimensional).
    pub fn equations(&self) -> &[Vec<Int>] {
        &self.equations
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        self.ambient_dim - self.equations.len()
    }

    /// True iff the cone contains no line.
    pub fn is_pointed(&self) -> bool {
        self.lineality_basis().is_empty()
    }

    /// Canonical basis of the largest linear subspace contained in the cone.
    pub fn lineality_basis(&self) -> Vec<Vec<Int>> {
        let constraints: Vec<Vec<Rat>> = self
            .normals
            .iter()
            .chain(&self.equations)
            .map(|a| a.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        if constraints.is_empty() {
            return canonical_rowspace_basis(
                &(0..self.ambient_dim)
                    .map(|i| {
                        let mut v = vec![Int::zero(); self.ambient_dim];
                        v[i] = Int::one();
                        v
                    })
                    .collect::<Vec<_>>(),
                self.ambient_dim,
            );
        }
        let kernel = crate::exactlin::nullspace(&RatMatrix::from_rows(constraints));
        let rows: Vec<Vec<Int>> = kernel
            .iter()
            .map(|v| primitivize_rat(v).expect("kernel basis vector is nonzero"))
            .collect();
        canonical_rowspace_basis(&rows, self.ambient_dim)
    }

    /// True iff `v` satisfies every facet inequality and equation.
    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length must match ambient dim");
        self.equations.iter().all(|a| dot_rat_int(v, a).is_zero())
            && self.normals.iter().all(|a| !dot_rat_int(v, a).is_negative())
    }

    /// True iff every generator of `other` lies in this cone.
    pub fn contains_cone(&self, other: &RationalCone) -> bool {
        other.generators.iter().all(|g| {
            let v: Vec<Rat> = g.iter().map(|x| Rat::from_integer(x.clone())).collect();
            self.contains(&v)
        })
    }

    /// The cone `{y : B(g, y) ≥ 0 for all generators g}` where `B` is the
    /// bilinear form with Gram matrix `form` (see [`intersection_form`]).
    ///
    /// Panics if `form` is not `ambient_dim × ambient_dim`.
    pub fn dual(&self, form: &RatMatrix) -> RationalCone {
        assert_eq!(
            (form.rows(), form.cols()),
            (self.ambient_dim, self.ambient_dim),
            "form must match the ambient dimension"
        );
        let normals: Vec<Vec<Int>> = self
            .generators
            .iter()
            .filter_map(|g| {
                // B(g, ·) = ⟨Mᵀ g, ·⟩ as a standard functional.
                let gv: Vec<Rat> = g.iter().map(|x| Rat::from_integer(x.clone())).collect();
                let mg = form.transpose().mul_vec(&gv);
                primitivize_rat(&mg)
            })
            .collect();
        let (rays, lines) = vrep_from_inequalities(self.ambient_dim, &normals);
        let mut gens: Vec<Vec<Rat>> = Vec::new();
        for r in rays {
            gens.push(r.iter().map(|x| Rat::from_integer(x.clone())).collect());
        }
        for l in lines {
            let v: Vec<Rat> = l.iter().map(|x| Rat::from_integer(x.clone())).collect();
            gens.push(v.iter().map(|x| -x.clone()).collect());
            gens.push(v);
        }
        RationalCone::from_rat_rays(self.ambient_dim, &gens)
    }

    /// Minimal generating set modulo lineality: the primitive extremal rays,
    /// reduced against the lineality space and canonically ordered.
    ///
    /// A generator is extremal iff the facets active at it, together with the
    /// equations, have rank `dim − lineality − 1`; interior and redundant
    /// generators fail the test.
    pub fn extremal_rays(&self) -> Vec<Vec<Int>> {
        let lines = self.lineality_basis();
        let mut candidates: Vec<Vec<Int>> = self
            .generators
            .iter()
            .filter_map(|g| reduce_mod_lines(g, &lines))
            .collect();
        candidates.sort();
        candidates.dedup();
        // A cone equal to its own lineality space (e.g. the full space) has
        // no extremal rays at all.
        let Some(target) = (self.ambient_dim - lines.len()).checked_sub(1) else {
            return Vec::new();
        };
        candidates
            .into_iter()
            .filter(|r| {
                let active: Vec<Vec<Rat>> = self
                    .normals
                    .iter()
                    .filter(|a| dot_int(a, r).is_zero())
                    .chain(self.equations.iter())
                    .map(|a| a.iter().map(|x| Rat::from_integer(x.clone())).collect())
                    .collect();
                if active.is_empty() {
                    return target == 0;
                }
                rank(&RatMatrix::from_rows(active)) == target
            })
            .collect()
    }

    /// Serialization used by the command-line tool:
    /// `{"ambient": n, "rays": [[...], ...]}` with integer entries, rays in
    /// canonical (extremal, sorted) form.
    pub fn to_json(&self) -> Value {
        let rays: Vec<Value> = self
            .extremal_rays()
            .iter()
            .map(|r| {
                Value::Array(
                    r.iter()
                        .map(|x| {
                            let small: i64 = x.try_into().expect("ray entry fits in i64");
                            json!(small)
                        })
                        .collect(),
                )
            })
            .collect();
        json!({"ambient": self.ambient_dim, "rays": rays})
    }
}

impl PartialEq for RationalCone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.lineality_basis() == other.lineality_basis()
            && self.extremal_rays() == other.extremal_rays()
    }
}

impl Eq for RationalCone {}
