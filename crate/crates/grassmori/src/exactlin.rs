//! Exact rational linear algebra: rank, nullspace, solve and determinant for
//! matrices over arbitrary-precision rationals.
//!
//! Elimination is fraction-free: rows are cleared of denominators up front and
//! row updates use cross-multiplication only, with a GCD reduction of each
//! updated row to keep coefficient growth in check. Pivoting is deterministic
//! (first nonzero entry in a column-major scan), so every operation returns
//! identical results across runs and platforms.

use num::{BigInt, BigRational, Integer, One, Zero};

/// Arbitrary-precision rational scalar; always in lowest terms, denominator > 0.
pub type Rat = BigRational;
/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Rational from an integer literal.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational `p/q` from integer literals. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Integer from a literal.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
///
/// This is the serialization used for every scalar in JSON output.
pub fn rat_to_string(x: &Rat) -> String {
    x.to_string()
}

/// Parses `p/q` or `p`.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    s.parse().ok()
}

/// Immutable dense matrix over [`Rat`], row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    /// Builds a matrix from row-major entries. Panics unless
    /// `entries.len() == rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count must equal rows * cols"
        );
        RatMatrix { rows, cols, entries }
    }

    /// Zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rat::one();
        }
        m
    }

    /// Builds a matrix from rows of integer literals (test and fixture helper).
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().map(|&x| rat(x)));
        }
        RatMatrix::new(r, c, entries)
    }

    /// Builds a matrix from rational rows.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row);
        }
        RatMatrix::new(r, c, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    /// Row `r` as a slice.
    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.at(r, c).clone());
            }
        }
        RatMatrix::new(self.cols, self.rows, entries)
    }

    /// Matrix product. Panics on inner-dimension mismatch.
    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * other.at(k, j);
                    out.entries[i * other.cols + j] += t;
                }
            }
        }
        out
    }

    /// Matrix-vector product. Panics unless `v.len() == cols`.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length must equal cols");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Vertical concatenation. Panics on column-count mismatch.
    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols, "column counts must agree");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        RatMatrix::new(self.rows + other.rows, self.cols, entries)
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "trace requires a square matrix");
        (0..self.rows).fold(Rat::zero(), |acc, i| acc + self.at(i, i))
    }

    /// Clears denominators row by row, returning an integer matrix with the
    /// same row space and kernel.
    fn to_int_rows(&self) -> Vec<Vec<Int>> {
        (0..self.rows)
            .map(|i| {
                let lcm = self.row(i).iter().fold(Int::one(), |acc, x| {
                    if x.is_zero() {
                        acc
                    } else {
                        acc.lcm(x.denom())
                    }
                });
                self.row(i)
                    .iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect()
    }
}

/// Divides a row by the GCD of its entries (the periodic reduction step).
fn reduce_row(row: &mut [Int]) {
    let mut g = Int::zero();
    for x in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

/// Fraction-free row echelon form in place; returns the pivot columns.
///
/// Deterministic pivot rule: columns are scanned left to right and the first
/// row with a nonzero entry below the current one becomes the pivot row.
fn int_echelon(m: &mut [Vec<Int>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut pr = 0;
    for pc in 0..cols {
        if pr == rows {
            break;
        }
        let Some(hit) = (pr..rows).find(|&i| !m[i][pc].is_zero()) else {
            continue;
        };
        m.swap(pr, hit);
        for i in pr + 1..rows {
            if m[i][pc].is_zero() {
                continue;
            }
            // Cross-multiplication keeps everything integral; no division here.
            let (a, b) = (m[pr][pc].clone(), m[i][pc].clone());
            for j in 0..cols {
                let t = &a * &m[i][j] - &b * &m[pr][j];
                m[i][j] = t;
            }
            reduce_row(&mut m[i]);
        }
        pivots.push(pc);
        pr += 1;
    }
    pivots
}

/// Exact rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    let mut im = m.to_int_rows();
    int_echelon(&mut im).len()
}

/// Basis of the right kernel `{v : m·v = 0}`; size equals `cols − rank`.
pub fn nullspace(m: &RatMatrix) -> Vec<Vec<Rat>> {
    let mut im = m.to_int_rows();
    let pivots = int_echelon(&mut im);
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rat::zero(); cols];
        v[f] = Rat::one();
        // Back-substitute pivot coordinates from the bottom row up.
        for (row, &pc) in pivots.iter().enumerate().rev() {
            let mut s = Rat::zero();
            for c in pc + 1..cols {
                if !im[row][c].is_zero() && !v[c].is_zero() {
                    s += Rat::from_integer(im[row][c].clone()) * &v[c];
                }
            }
            v[pc] = -s / Rat::from_integer(im[row][pc].clone());
        }
        basis.push(v);
    }
    basis
}

/// One exact solution of `m·x = b` if the system is consistent.
///
/// Free variables are set to zero. Panics unless `b.len() == m.rows()`.
pub fn solve(m: &RatMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(b.len(), m.rows(), "right-hand side length must equal rows");
    let mut aug = RatMatrix::zero(m.rows(), m.cols() + 1);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            aug.entries[i * (m.cols() + 1) + j] = m.at(i, j).clone();
        }
        aug.entries[i * (m.cols() + 1) + m.cols()] = b[i].clone();
    }
    let mut im = aug.to_int_rows();
    let pivots = int_echelon(&mut im);
    // A pivot in the augmented column means an inconsistent row 0 = c ≠ 0.
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![Rat::zero(); m.cols()];
    for (row, &pc) in pivots.iter().enumerate().rev() {
        let mut s = Rat::from_integer(im[row][m.cols()].clone());
        for c in pc + 1..m.cols() {
            if !im[row][c].is_zero() && !x[c].is_zero() {
                s -= Rat::from_integer(im[row][c].clone()) * &x[c];
            }
        }
        x[pc] = s / Rat::from_integer(im[row][pc].clone());
    }
    Some(x)
}

/// Exact determinant via Bareiss elimination. Panics unless square.
pub fn det(m: &RatMatrix) -> Rat {
    assert_eq!(m.rows(), m.cols(), "determinant requires a square matrix");
    let n = m.rows();
    if n == 0 {
        return Rat::one();
    }
    // Scale each row to integers, remembering the total scale factor.
    let mut scale = Rat::one();
    let mut a: Vec<Vec<Int>> = Vec::with_capacity(n);
    for i in 0..n {
        let lcm = m.row(i).iter().fold(Int::one(), |acc, x| {
            if x.is_zero() {
                acc
            } else {
                acc.lcm(x.denom())
            }
        });
        scale *= Rat::from_integer(lcm.clone());
        a.push(
            m.row(i)
                .iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect(),
        );
    }
    let mut sign = Int::one();
    let mut prev = Int::one();
    for p in 0..n - 1 {
        if a[p][p].is_zero() {
            let Some(hit) = (p + 1..n).find(|&i| !a[i][p].is_zero()) else {
                return Rat::zero();
            };
            a.swap(p, hit);
            sign = -sign;
        }
        for i in p + 1..n {
            for j in p + 1..n {
                // Bareiss update: exact division by the previous pivot.
                let t = (&a[p][p] * &a[i][j] - &a[i][p] * &a[p][j]) / &prev;
                a[i][j] = t;
            }
            a[i][p] = Int::zero();
        }
        prev = a[p][p].clone();
    }
    Rat::from_integer(sign * a[n - 1][n - 1].clone()) / scale
}
