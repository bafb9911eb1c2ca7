//! Numerical data of a polarized surface: the Néron–Severi lattice with its
//! intersection form, the polarization `H`, the canonical class `K` and
//! `χ(O_X)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::path::Path;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Result, TiltError};
use crate::rational::{int, literal_vec, Rational};

/// A divisor class in a fixed basis of `N¹(X)_ℚ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivisorClass {
    #[serde(with = "literal_vec")]
    coords: Vec<Rational>,
}

impl DivisorClass {
    pub fn new(coords: Vec<Rational>) -> Self {
        DivisorClass { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        DivisorClass { coords: coords.iter().map(|&c| int(c)).collect() }
    }

    pub fn zero(rank: usize) -> Self {
        DivisorClass { coords: vec![Rational::zero(); rank] }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        DivisorClass { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(self.len(), other.len(), "divisor classes of different Picard rank");
        DivisorClass { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect() }
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(crate::rational::format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Numerical data of a smooth projective polarized surface.
///
/// Construction only checks shapes; use [`SurfaceData::validate`] for the
/// lattice invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceData {
    gram: Vec<Vec<i64>>,
    h: DivisorClass,
    k: DivisorClass,
    chi_o: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceViolation {
    GramNotSymmetric { i: usize, j: usize },
    DegreeNotPositive { h_squared: Rational },
    OddParity { basis_index: usize, value: i64 },
}

impl fmt::Display for SurfaceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceViolation::GramNotSymmetric { i, j } => {
                write!(f, "gram not symmetric: entry ({i},{j}) differs from ({j},{i})")
            }
            SurfaceViolation::DegreeNotPositive { h_squared } => write!(f, "H²>0 fails: H² = {h_squared}"),
            SurfaceViolation::OddParity { basis_index, value } => {
                write!(f, "D² + D·K = {value} is odd for basis divisor {basis_index}")
            }
        }
    }
}

impl SurfaceData {
    pub fn new(gram: Vec<Vec<i64>>, h: &[i64], k: &[i64], chi_o: i64) -> Result<Self> {
        let rank = gram.len();
        if rank == 0 {
            return Err(TiltError::Invalid("Picard rank must be positive".into()));
        }
        for row in &gram {
            if row.len() != rank {
                return Err(TiltError::DimensionMismatch { expected: rank, found: row.len() });
            }
        }
        for v in [h, k] {
            if v.len() != rank {
                return Err(TiltError::DimensionMismatch { expected: rank, found: v.len() });
            }
        }
        Ok(SurfaceData { gram, h: DivisorClass::from_ints(h), k: DivisorClass::from_ints(k), chi_o })
    }

    /// Rank 1, gram `[1]`, `H = (1)`, `K = (-3)`, `χ(O) = 1`: the numerics of ℙ².
    pub fn s1() -> Self {
        SurfaceData::new(vec![vec![1]], &[1], &[-3], 1).expect("fixture")
    }

    /// Rank 2, hyperbolic gram, `H = (1,1)`, `K = (-2,-2)`, `χ(O) = 1`: the numerics of ℙ¹×ℙ¹.
    pub fn s2() -> Self {
        SurfaceData::new(vec![vec![0, 1], vec![1, 0]], &[1, 1], &[-2, -2], 1).expect("fixture")
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn h(&self) -> &DivisorClass {
        &self.h
    }

    pub fn k(&self) -> &DivisorClass {
        &self.k
    }

    pub fn chi_o(&self) -> i64 {
        self.chi_o
    }

    pub fn check(&self, d: &DivisorClass) -> Result<()> {
        if d.len() != self.rank() {
            return Err(TiltError::DimensionMismatch { expected: self.rank(), found: d.len() });
        }
        Ok(())
    }

    /// `d1ᵀ · gram · d2`.
    pub fn intersect(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<Rational> {
        self.check(d1)?;
        self.check(d2)?;
        let mut total = Rational::zero();
        for (i, a) in d1.coords().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in d2.coords().iter().enumerate() {
                let g = self.gram[i][j];
                if g != 0 {
                    total += a * b * int(g);
                }
            }
        }
        Ok(total)
    }

    /// `H · d`.
    pub fn h_dot(&self, d: &DivisorClass) -> Result<Rational> {
        self.intersect(&self.h, d)
    }

    /// `deg X = H²`.
    pub fn degree(&self) -> Rational {
        self.intersect(&self.h, &self.h).expect("H has the surface rank")
    }

    pub fn zero_divisor(&self) -> DivisorClass {
        DivisorClass::zero(self.rank())
    }

    fn basis(&self, i: usize) -> DivisorClass {
        let mut coords = vec![Rational::zero(); self.rank()];
        coords[i] = int(1);
        DivisorClass::new(coords)
    }

    /// All invariant failures, in a fixed order. Empty means valid.
    pub fn validate(&self) -> Vec<SurfaceViolation> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.gram[i][j] != self.gram[j][i] {
                    out.push(SurfaceViolation::GramNotSymmetric { i, j });
                }
            }
        }
        let h2 = self.degree();
        if !h2.is_positive() {
            out.push(SurfaceViolation::DegreeNotPositive { h_squared: h2 });
        }
        for i in 0..n {
            let e = self.basis(i);
            let value = self.intersect(&e, &e).unwrap() + self.intersect(&e, &self.k).unwrap();
            let value = value.to_integer();
            if &value % 2 != 0.into() {
                out.push(SurfaceViolation::OddParity {
                    basis_index: i,
                    value: i64::try_from(value).unwrap_or(i64::MAX),
                });
            }
        }
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SurfaceFile = serde_json::from_str(text)?;
        file.try_into()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SurfaceFile::from(self)).expect("plain data")
    }
}

/// On-disk surface description.
#[derive(Debug, Serialize, Deserialize)]
pub struct SurfaceFile {
    pub rank: usize,
    pub gram: Vec<Vec<i64>>,
    #[serde(rename = "H")]
    pub h: Vec<i64>,
    #[serde(rename = "K")]
    pub k: Vec<i64>,
    #[serde(rename = "chiO")]
    pub chi_o: i64,
}

impl TryFrom<SurfaceFile> for SurfaceData {
    type Error = TiltError;

    fn try_from(f: SurfaceFile) -> Result<Self> {
        if f.gram.len() != f.rank {
            return Err(TiltError::DimensionMismatch { expected: f.rank, found: f.gram.len() });
        }
        SurfaceData::new(f.gram, &f.h, &f.k, f.chi_o)
    }
}

impl From<&SurfaceData> for SurfaceFile {
    fn from(s: &SurfaceData) -> Self {
        let ints = |d: &DivisorClass| d.coords().iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect();
        SurfaceFile { rank: s.rank(), gram: s.gram.clone(), h: ints(&s.h), k: ints(&s.k), chi_o: s.chi_o }
    }
}
