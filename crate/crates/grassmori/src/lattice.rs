//! Divisor and curve classes on the blow-up of a variety at general points,
//! together with the intersection pairing and the numerical invariants used
//! throughout the crate.
//!
//! A divisor class is stored as `D = h·H − Σᵢ eᵢ·Eᵢ`, where `H` is the
//! hyperplane (ample generator) pulled back from the ambient variety and `Eᵢ`
//! is the exceptional divisor over the i-th point. Curve classes are stored
//! dually as `C = h·l − Σᵢ mᵢ·lᵢ` with `l` a general line and `lᵢ` a line
//! inside `Eᵢ`. With these conventions the pairing is
//! `D · C = h(D)·h(C) − Σᵢ eᵢ(D)·mᵢ(C)`.
//!
//! Vector coordinates (used by the cone machinery) are the coefficients in
//! the basis `(H, E₁, …, E_k)`, i.e. `[h, −e₁, …, −e_k]`; the pairing then
//! becomes the diagonal form `(1, −1, …, −1)`. In particular `Eᵢ` itself is
//! the unit vector with a `+1` in slot `i`, and a divisor written `aH − bE`
//! is the vector `[a, −b]`.

use crate::exactlin::{rat, Int, Rat};
use num::{One, Zero};
use std::fmt;
use thiserror::Error;

/// Divisor class `h·H − Σᵢ eᵢ·Eᵢ` on a blow-up at `e.len()` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    pub h: Rat,
    pub e: Vec<Rat>,
}

/// Curve class `h·l − Σᵢ mᵢ·lᵢ`; the multiplicities are stored in `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveClass {
    pub h: Rat,
    pub e: Vec<Rat>,
}

impl DivisorClass {
    pub fn new(h: Rat, e: Vec<Rat>) -> Self {
        DivisorClass { h, e }
    }

    /// Convenience constructor from integer literals.
    pub fn from_i64(h: i64, e: &[i64]) -> Self {
        DivisorClass::new(rat(h), e.iter().map(|&x| rat(x)).collect())
    }

    /// The hyperplane class `H` on a blow-up at `k` points.
    pub fn hyperplane(k: usize) -> Self {
        DivisorClass::new(Rat::one(), vec![Rat::zero(); k])
    }

    /// The exceptional divisor `Eᵢ` (zero-based index `i`).
    pub fn exceptional(i: usize, k: usize) -> Self {
        let mut e = vec![Rat::zero(); k];
        e[i] = -Rat::one();
        DivisorClass::new(Rat::zero(), e)
    }

    /// Number of blown-up points this class lives on.
    pub fn points(&self) -> usize {
        self.e.len()
    }

    /// Coefficients in the basis `(H, E₁, …, E_k)`: `[h, −e₁, …, −e_k]`.
    pub fn to_vector(&self) -> Vec<Rat> {
        let mut v = Vec::with_capacity(1 + self.e.len());
        v.push(self.h.clone());
        v.extend(self.e.iter().map(|x| -x.clone()));
        v
    }

    /// Inverse of [`DivisorClass::to_vector`].
    pub fn from_vector(v: &[Rat]) -> Self {
        assert!(!v.is_empty(), "a class vector has at least the H coordinate");
        DivisorClass::new(v[0].clone(), v[1..].iter().map(|x| -x.clone()).collect())
    }

    /// Intersection number `D · C`. Panics if the point counts differ.
    pub fn pair(&self, c: &CurveClass) -> Rat {
        assert_eq!(
            self.e.len(),
            c.e.len(),
            "divisor and curve must live on the same blow-up"
        );
        let mut acc = &self.h * &c.h;
        for (a, b) in self.e.iter().zip(&c.e) {
            acc -= a * b;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.h.is_zero() && self.e.iter().all(|x| x.is_zero())
    }

    /// JSON form `{"h": "p/q", "e": ["p/q", ...]}` with rational strings.
    pub fn to_json(&self) -> serde_json::Value {
        class_json(&self.h, &self.e)
    }
}

impl CurveClass {
    pub fn new(h: Rat, e: Vec<Rat>) -> Self {
        CurveClass { h, e }
    }

    pub fn from_i64(h: i64, e: &[i64]) -> Self {
        CurveClass::new(rat(h), e.iter().map(|&x| rat(x)).collect())
    }

    /// A general line `l` missing all blown-up points.
    pub fn line(k: usize) -> Self {
        CurveClass::new(Rat::one(), vec![Rat::zero(); k])
    }

    /// A line `lᵢ` contained in the exceptional divisor `Eᵢ`.
    pub fn exceptional_line(i: usize, k: usize) -> Self {
        let mut e = vec![Rat::zero(); k];
        e[i] = -Rat::one();
        CurveClass::new(Rat::zero(), e)
    }

    /// The strict transform of a line through the listed points.
    pub fn line_through(points: &[usize], k: usize) -> Self {
        let mut e = vec![Rat::zero(); k];
        for &p in points {
            e[p] = Rat::one();
        }
        CurveClass::new(Rat::one(), e)
    }

    /// The strict transform of a conic through the listed points.
    pub fn conic_through(points: &[usize], k: usize) -> Self {
        let mut e = vec![Rat::zero(); k];
        for &p in points {
            e[p] = Rat::one();
        }
        CurveClass::new(rat(2), e)
    }

    pub fn points(&self) -> usize {
        self.e.len()
    }

    /// Coefficients in the basis `(l, l₁, …, l_k)`: `[h, −m₁, …, −m_k]`.
    pub fn to_vector(&self) -> Vec<Rat> {
        let mut v = Vec::with_capacity(1 + self.e.len());
        v.push(self.h.clone());
        v.extend(self.e.iter().map(|x| -x.clone()));
        v
    }

    /// Inverse of [`CurveClass::to_vector`].
    pub fn from_vector(v: &[Rat]) -> Self {
        assert!(!v.is_empty(), "a class vector has at least the l coordinate");
        CurveClass::new(v[0].clone(), v[1..].iter().map(|x| -x.clone()).collect())
    }

    /// JSON form `{"h": "p/q", "e": ["p/q", ...]}` with rational strings.
    pub fn to_json(&self) -> serde_json::Value {
        class_json(&self.h, &self.e)
    }
}

fn class_json(h: &Rat, e: &[Rat]) -> serde_json::Value {
    serde_json::json!({
        "h": h.to_string(),
        "e": e.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
    })
}

fn fmt_class(f: &mut fmt::Formatter<'_>, h: &Rat, e: &[Rat], big: bool) -> fmt::Result {
    let (head, tail) = if big { ("H", "E") } else { ("h", "e") };
    let mut terms: Vec<(Rat, String)> = vec![(h.clone(), head.to_string())];
    for (i, c) in e.iter().enumerate() {
        terms.push((-c.clone(), format!("{tail}{}", i + 1)));
    }
    let mut wrote = false;
    for (c, label) in terms {
        if c.is_zero() {
            continue;
        }
        if wrote {
            write!(f, " {} ", if c < Rat::zero() { "-" } else { "+" })?;
        } else if c < Rat::zero() {
            write!(f, "-")?;
        }
        let a = if c < Rat::zero() { -c } else { c };
        if !a.is_one() {
            write!(f, "{a}")?;
        }
        write!(f, "{label}")?;
        wrote = true;
    }
    if !wrote {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_class(f, &self.h, &self.e, true)
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_class(f, &self.h, &self.e, false)
    }
}

/// The family a blow-up configuration belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    ProjectiveSpace,
    Quadric,
    Cubic,
    /// Smooth intersection of two quadrics.
    Y22,
    /// Linear section of the Plücker-embedded G(1,4) of codimension `c`.
    G14Section(usize),
    /// Grassmannian of projective `r`-planes in projective `n`-space.
    Grassmannian(usize, usize),
    Other,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::ProjectiveSpace => write!(f, "projective space"),
            Family::Quadric => write!(f, "quadric"),
            Family::Cubic => write!(f, "cubic"),
            Family::Y22 => write!(f, "intersection of two quadrics"),
            Family::G14Section(c) => write!(f, "codimension-{c} linear section of G(1,4)"),
            Family::Grassmannian(r, n) => write!(f, "G({r},{n})"),
            Family::Other => write!(f, "custom"),
        }
    }
}

/// Invalid blow-up parameters.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("dimension must be at least {min}, got {n}")]
    DimensionTooSmall { n: usize, min: usize },
    #[error("degree must be at least 1, got {degree}")]
    DegreeTooSmall { degree: String },
    #[error("index must lie between 1 and {max}, got {iota}")]
    IndexOutOfRange { iota: usize, max: usize },
    #[error("index {iota} in dimension {n} forces degree {expected}, got {degree}")]
    IndexDegreeMismatch {
        iota: usize,
        n: usize,
        expected: u32,
        degree: String,
    },
    #[error("linear sections of G(1,4) exist only for codimension 0..=3, got {0}")]
    SectionTooDeep(usize),
    #[error("Grassmannian parameters must satisfy 1 <= r and 2r+1 <= n, got r={r}, n={n}")]
    InvalidGrassmannian { r: usize, n: usize },
}

/// A variety of dimension `n` and degree `d`, embedded with codimension
/// `codim`, blown up at `k` general points.
///
/// `iota` is the Fano index: the anticanonical class of the unblown variety
/// is `iota·H`. The classification of maximal-index varieties pins down the
/// extremes: `iota = n+1` happens only in degree 1 (projective space) and
/// `iota = n` only in degree 2 (quadrics); [`BlowupConfig::custom`] enforces
/// those consistency checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupConfig {
    pub n: usize,
    pub k: usize,
    pub d: Rat,
    pub iota: usize,
    pub codim: usize,
    pub covered_by_lines: bool,
    pub family: Family,
}

impl BlowupConfig {
    fn validate(self) -> Result<Self, ConfigError> {
        if self.n < 2 {
            return Err(ConfigError::DimensionTooSmall { n: self.n, min: 2 });
        }
        if self.d < Rat::one() {
            return Err(ConfigError::DegreeTooSmall {
                degree: self.d.to_string(),
            });
        }
        if self.iota < 1 || self.iota > self.n + 1 {
            return Err(ConfigError::IndexOutOfRange {
                iota: self.iota,
                max: self.n + 1,
            });
        }
        for (index, expected) in [(self.n + 1, 1u32), (self.n, 2u32)] {
            if self.iota == index && self.d != rat(expected as i64) {
                return Err(ConfigError::IndexDegreeMismatch {
                    iota: self.iota,
                    n: self.n,
                    expected,
                    degree: self.d.to_string(),
                });
            }
        }
        Ok(self)
    }

    /// Projective space of dimension `n` blown up at `k` points.
    pub fn projective(n: usize, k: usize) -> Result<Self, ConfigError> {
        BlowupConfig {
            n,
            k,
            d: Rat::one(),
            iota: n + 1,
            codim: 0,
            covered_by_lines: true,
            family: Family::ProjectiveSpace,
        }
        .validate()
    }

    /// Smooth quadric of dimension `n` blown up at `k` points.
    pub fn quadric(n: usize, k: usize) -> Result<Self, ConfigError> {
        BlowupConfig {
            n,
            k,
            d: rat(2),
            iota: n,
            codim: 1,
            covered_by_lines: true,
            family: Family::Quadric,
        }
        .validate()
    }

    /// Smooth cubic hypersurface of dimension `n >= 3` blown up at `k` points.
    ///
    /// Dimension 3 is the threshold for being covered by lines.
    pub fn cubic(n: usize, k: usize) -> Result<Self, ConfigError> {
        if n < 3 {
            return Err(ConfigError::DimensionTooSmall { n, min: 3 });
        }
        BlowupConfig {
            n,
            k,
            d: rat(3),
            iota: n - 1,
            codim: 1,
            covered_by_lines: true,
            family: Family::Cubic,
        }
        .validate()
    }

    /// Smooth intersection of two quadrics of dimension `n >= 3`.
    pub fn y22(n: usize, k: usize) -> Result<Self, ConfigError> {
        if n < 3 {
            return Err(ConfigError::DimensionTooSmall { n, min: 3 });
        }
        BlowupConfig {
            n,
            k,
            d: rat(4),
            iota: n - 1,
            codim: 2,
            covered_by_lines: true,
            family: Family::Y22,
        }
        .validate()
    }

    /// General codimension-`c` linear section of the Plücker-embedded G(1,4),
    /// for `c <= 3`; the section has dimension `6 − c` and degree 5.
    pub fn g14_section(c: usize, k: usize) -> Result<Self, ConfigError> {
        if c > 3 {
            return Err(ConfigError::SectionTooDeep(c));
        }
        let n = 6 - c;
        BlowupConfig {
            n,
            k,
            d: rat(5),
            iota: n - 1,
            codim: 3,
            covered_by_lines: true,
            family: Family::G14Section(c),
        }
        .validate()
    }

    /// The Grassmannian of projective `r`-planes in projective `n`-space,
    /// blown up at `k` points. Requires the canonical side of the duality,
    /// `1 <= r` and `2r+1 <= n`.
    pub fn grassmannian(r: usize, n: usize, k: usize) -> Result<Self, ConfigError> {
        if r < 1 || n < 2 * r + 1 {
            return Err(ConfigError::InvalidGrassmannian { r, n });
        }
        let dim = (r + 1) * (n - r);
        let ambient = binomial(n + 1, r + 1) - Int::one();
        let ambient: usize = format!("{ambient}").parse().expect("ambient fits usize");
        BlowupConfig {
            n: dim,
            k,
            d: Rat::from_integer(grassmannian_degree(r, n)),
            iota: n + 1,
            codim: ambient - dim,
            covered_by_lines: true,
            family: Family::Grassmannian(r, n),
        }
        .validate()
    }

    /// A custom configuration; all consistency checks apply.
    pub fn custom(
        n: usize,
        k: usize,
        d: Rat,
        iota: usize,
        codim: usize,
        covered_by_lines: bool,
    ) -> Result<Self, ConfigError> {
        BlowupConfig {
            n,
            k,
            d,
            iota,
            codim,
            covered_by_lines,
            family: Family::Other,
        }
        .validate()
    }

    /// The same configuration with a different number of points.
    pub fn with_points(&self, k: usize) -> Self {
        let mut c = self.clone();
        c.k = k;
        c
    }

    /// Anticanonical class of the blow-up: `iota·H − (n−1)·ΣEᵢ`.
    pub fn anticanonical(&self) -> DivisorClass {
        DivisorClass::new(
            rat(self.iota as i64),
            vec![rat(self.n as i64 - 1); self.k],
        )
    }

    /// Top self-intersection `Dⁿ = hⁿ·d − Σᵢ eᵢⁿ` of a divisor class.
    pub fn top_self_intersection(&self, div: &DivisorClass) -> Rat {
        assert_eq!(
            div.e.len(),
            self.k,
            "class must live on this blow-up"
        );
        let mut acc = num::pow(div.h.clone(), self.n) * &self.d;
        for b in &div.e {
            acc -= num::pow(b.clone(), self.n);
        }
        acc
    }

    /// Anticanonical volume `(−K)ⁿ = d·ιⁿ − k·(n−1)ⁿ`.
    pub fn anticanonical_volume(&self) -> Rat {
        self.top_self_intersection(&self.anticanonical())
    }
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut acc = Int::one();
    for i in 0..k.min(n - k) {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Degree of the Plücker-embedded Grassmannian of projective `r`-planes in
/// projective `n`-space: `dim! · Π_{i=0..r} i! / (n−r+i)!`.
pub fn grassmannian_degree(r: usize, n: usize) -> Int {
    assert!(r < n, "need r < n");
    let dim = (r + 1) * (n - r);
    let mut num = factorial(dim);
    let mut den = Int::one();
    for i in 0..=r {
        num *= factorial(i);
        den *= factorial(n - r + i);
    }
    num / den
}

fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * Int::from(i))
}
