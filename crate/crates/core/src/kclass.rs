//! Numerical K-theory classes as Chern characters truncated at degree 2.
//!
//! Classes are identified by their Chern triples, so numerical equivalence
//! is built in. Products use multiplicativity of `ch`, and the Euler pairing
//! is Hirzebruch–Riemann–Roch against the Todd class `1 - K/2 + χ(O_X)[p]`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rational::{binomial2, format_rational, half, int, literal, Rational};
use crate::surface::{DivisorClass, SurfaceData};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KClass {
    #[serde(with = "literal")]
    pub ch0: Rational,
    pub ch1: DivisorClass,
    #[serde(with = "literal")]
    pub ch2: Rational,
}

/// `td_X = 1 + t1 + t2·[p]` with `t1 = -K/2` and `t2 = χ(O_X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToddClass {
    pub t1: DivisorClass,
    pub t2: Rational,
}

impl ToddClass {
    pub fn of(s: &SurfaceData) -> Self {
        ToddClass { t1: s.k().scale(&-half()), t2: int(s.chi_o()) }
    }
}

impl KClass {
    pub fn new(ch0: Rational, ch1: DivisorClass, ch2: Rational) -> Self {
        KClass { ch0, ch1, ch2 }
    }

    /// Integer rank and ch1, rational ch2.
    pub fn from_ints(ch0: i64, ch1: &[i64], ch2: Rational) -> Self {
        KClass { ch0: int(ch0), ch1: DivisorClass::from_ints(ch1), ch2 }
    }

    pub fn zero(s: &SurfaceData) -> Self {
        KClass { ch0: Rational::zero(), ch1: s.zero_divisor(), ch2: Rational::zero() }
    }

    /// `[O_X] = (1, 0, 0)`.
    pub fn one(s: &SurfaceData) -> Self {
        KClass { ch0: Rational::one(), ch1: s.zero_divisor(), ch2: Rational::zero() }
    }

    /// `[O_p] = (0, 0, 1)`.
    pub fn point(s: &SurfaceData) -> Self {
        KClass { ch0: Rational::zero(), ch1: s.zero_divisor(), ch2: Rational::one() }
    }

    /// `h = [O_H]`, with `ch(O_H) = H - H²/2`.
    pub fn hyperplane(s: &SurfaceData) -> Self {
        KClass { ch0: Rational::zero(), ch1: s.h().clone(), ch2: -s.degree() * half() }
    }

    /// `[O_X(nH)] = (1, nH, n²H²/2)`.
    pub fn line_bundle(n: i64, s: &SurfaceData) -> Self {
        let n = int(n);
        KClass { ch0: Rational::one(), ch1: s.h().scale(&n), ch2: &n * &n * s.degree() * half() }
    }

    /// `[O_C] = a·h - C(a,2)·h²` for a curve `C ∈ |aH|`.
    pub fn curve(a: u32, s: &SurfaceData) -> Self {
        let h = Self::hyperplane(s);
        let h2 = h.mul(&h, s).expect("fixture classes share the surface");
        &h.scale(&int(i64::from(a))) - &h2.scale(&binomial2(a))
    }

    pub fn rank(&self) -> &Rational {
        &self.ch0
    }

    pub fn scale(&self, k: &Rational) -> Self {
        KClass { ch0: &self.ch0 * k, ch1: self.ch1.scale(k), ch2: &self.ch2 * k }
    }

    pub fn is_zero(&self) -> bool {
        self.ch0.is_zero() && self.ch1.is_zero() && self.ch2.is_zero()
    }

    pub fn check(&self, s: &SurfaceData) -> Result<()> {
        s.check(&self.ch1)
    }

    /// Chern character of an honest integral K-class: `ch0 ∈ ℤ`, `ch1` in the
    /// lattice and `c2 = ch1²/2 - ch2 ∈ ℤ`.
    pub fn is_integral(&self, s: &SurfaceData) -> Result<bool> {
        if !self.ch0.is_integer() || !self.ch1.is_integral() {
            return Ok(false);
        }
        let c1_sq = s.intersect(&self.ch1, &self.ch1)?;
        Ok((c1_sq * half() - &self.ch2).is_integer())
    }

    /// Product in `K_num(X)`, via multiplicativity of `ch`.
    pub fn mul(&self, other: &KClass, s: &SurfaceData) -> Result<KClass> {
        self.check(s)?;
        other.check(s)?;
        let ch0 = &self.ch0 * &other.ch0;
        let ch1 = &self.ch1.scale(&other.ch0) + &other.ch1.scale(&self.ch0);
        let ch2 = &self.ch0 * &other.ch2 + &other.ch0 * &self.ch2 + s.intersect(&self.ch1, &other.ch1)?;
        Ok(KClass { ch0, ch1, ch2 })
    }

    pub fn pow(&self, n: u32, s: &SurfaceData) -> Result<KClass> {
        let mut acc = KClass::one(s);
        for _ in 0..n {
            acc = acc.mul(self, s)?;
        }
        Ok(acc)
    }

    /// `ch^B = e^{-B}·ch`.
    pub fn twist(&self, b: &DivisorClass, s: &SurfaceData) -> Result<KClass> {
        self.check(s)?;
        s.check(b)?;
        let ch1 = &self.ch1 - &b.scale(&self.ch0);
        let ch2 = &self.ch2 - s.intersect(b, &self.ch1)? + s.intersect(b, b)? * half() * &self.ch0;
        Ok(KClass { ch0: self.ch0.clone(), ch1, ch2 })
    }

    /// `a ↦ a(n) = a · [O_X(nH)]`.
    pub fn tensor_line(&self, n: i64, s: &SurfaceData) -> Result<KClass> {
        self.mul(&KClass::line_bundle(n, s), s)
    }

    /// `∫ ch(self)·td_X`.
    pub fn chi(&self, s: &SurfaceData) -> Result<Rational> {
        self.check(s)?;
        let td = ToddClass::of(s);
        Ok(&self.ch2 + s.intersect(&self.ch1, &td.t1)? + &self.ch0 * &td.t2)
    }

    /// `χ(a·b) = ∫ ch(a)·ch(b)·td_X`.
    pub fn euler_pairing(&self, other: &KClass, s: &SurfaceData) -> Result<Rational> {
        self.mul(other, s)?.chi(s)
    }
}

impl Add for &KClass {
    type Output = KClass;
    fn add(self, rhs: &KClass) -> KClass {
        KClass { ch0: &self.ch0 + &rhs.ch0, ch1: &self.ch1 + &rhs.ch1, ch2: &self.ch2 + &rhs.ch2 }
    }
}

impl Sub for &KClass {
    type Output = KClass;
    fn sub(self, rhs: &KClass) -> KClass {
        KClass { ch0: &self.ch0 - &rhs.ch0, ch1: &self.ch1 - &rhs.ch1, ch2: &self.ch2 - &rhs.ch2 }
    }
}

impl Neg for &KClass {
    type Output = KClass;
    fn neg(self) -> KClass {
        KClass { ch0: -&self.ch0, ch1: -&self.ch1, ch2: -&self.ch2 }
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", format_rational(&self.ch0), self.ch1, format_rational(&self.ch2))
    }
}
