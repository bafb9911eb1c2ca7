//! Restriction numerics for a smooth curve `C ∈ |aH|`.
//!
//! `K(C)` is tracked through `(rank, degree)`. Rank-zero surface classes
//! restrict to `(0, ch1·aH)`, so `χ_C(x|_C) = χ(x·[O_C])` for every class.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Result, TiltError};
use crate::kclass::KClass;
use crate::rational::{format_rational, half, int, literal, serialize_bigint, to_integer, Rational};
use crate::surface::SurfaceData;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CurveKClass {
    #[serde(with = "literal")]
    pub rank: Rational,
    #[serde(with = "literal")]
    pub degree: Rational,
}

impl CurveKClass {
    pub fn new(rank: Rational, degree: Rational) -> Self {
        CurveKClass { rank, degree }
    }

    pub fn from_ints(rank: i64, degree: i64) -> Self {
        CurveKClass { rank: int(rank), degree: int(degree) }
    }

    pub fn one() -> Self {
        CurveKClass::from_ints(1, 0)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        CurveKClass { rank: &self.rank * k, degree: &self.degree * k }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CurveKClass { rank: &self.rank - &other.rank, degree: &self.degree - &other.degree }
    }

    /// `"r,d"` in the rational literal format.
    pub fn to_pair(&self) -> [String; 2] {
        [format_rational(&self.rank), format_rational(&self.degree)]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveContext {
    pub a: u32,
    #[serde(serialize_with = "serialize_bigint")]
    pub genus: BigInt,
    /// Degree of `h|_C`, i.e. `a·H²`.
    #[serde(serialize_with = "serialize_bigint")]
    pub hdeg: BigInt,
}

impl CurveContext {
    pub fn new(a: u32, s: &SurfaceData) -> Result<Self> {
        let genus = curve_genus(a, s)?;
        let hdeg = (int(i64::from(a)) * s.degree()).to_integer();
        Ok(CurveContext { a, genus, hdeg })
    }
}

fn require_a(a: u32) -> Result<()> {
    if a == 0 {
        Err(TiltError::ZeroMultiple { name: "a" })
    } else {
        Ok(())
    }
}

/// Adjunction: `2g - 2 = aH·(aH + K)`.
pub fn curve_genus(a: u32, s: &SurfaceData) -> Result<BigInt> {
    require_a(a)?;
    let ah = s.h().scale(&int(i64::from(a)));
    let two_g_minus_two = s.intersect(&ah, &(&ah + s.k()))?;
    let g = &two_g_minus_two * half() + int(1);
    let g = to_integer(&g).ok_or(TiltError::OddCanonicalDegree(two_g_minus_two))?;
    if g.is_negative() {
        return Err(TiltError::NegativeGenus { a, genus: g });
    }
    Ok(g)
}

pub fn restrict_class(x: &KClass, a: u32, s: &SurfaceData) -> Result<CurveKClass> {
    require_a(a)?;
    let ah = s.h().scale(&int(i64::from(a)));
    Ok(CurveKClass { rank: x.ch0.clone(), degree: s.intersect(&x.ch1, &ah)? })
}

/// Least `a` with `(a+1)/2 > deg·max{(r²-1)/4, 1}`.
pub fn flenner_bound(r: u32, degree: &Rational) -> u64 {
    let r = int(i64::from(r));
    let m = std::cmp::max((&r * &r - int(1)) / int(4), int(1));
    // a > 2·deg·m - 1
    let threshold = int(2) * degree * m - int(1);
    let a = threshold.floor().to_integer() + 1;
    let a = u64::try_from(a).unwrap_or(1);
    a.max(1)
}

/// Flenner's minimal curve multiple for rank `r` on this surface.
pub fn flenner_min_degree(r: u32, s: &SurfaceData) -> Result<u64> {
    if r == 0 {
        return Err(TiltError::ZeroMultiple { name: "r" });
    }
    Ok(flenner_bound(r, &s.degree()))
}

/// Riemann–Roch on a curve of genus `g`:
/// `χ(E⊗F) = rk E·deg F + (deg E + rk E·(1-g))·rk F`.
pub fn curve_chi(e: &CurveKClass, f: &CurveKClass, g: &BigInt) -> Rational {
    let one_minus_g = Rational::from_integer(BigInt::from(1) - g);
    &e.rank * &f.degree + (&e.degree + &e.rank * one_minus_g) * &f.rank
}

/// Product in `K(C)`: `(r1, d1)·(r2, d2) = (r1 r2, r1 d2 + r2 d1)`.
pub fn curve_mul(e: &CurveKClass, f: &CurveKClass) -> CurveKClass {
    CurveKClass { rank: &e.rank * &f.rank, degree: &e.rank * &f.degree + &f.rank * &e.degree }
}

/// The `d` with `curve_chi((r, d), F, g) = 0`.
pub fn seshadri_degree(f: &CurveKClass, r: u64, g: &BigInt) -> Result<BigInt> {
    if !f.rank.is_positive() {
        return Err(TiltError::NonPositiveCurveRank(f.rank.clone()));
    }
    if r == 0 {
        return Err(TiltError::ZeroMultiple { name: "r" });
    }
    let rq = Rational::from_integer(BigInt::from(r));
    let one_minus_g = Rational::from_integer(BigInt::from(1) - g);
    let d = -(&rq * &f.degree) / &f.rank - &rq * one_minus_g;
    to_integer(&d).ok_or(TiltError::NonIntegralDegree { rank: r, solution: d })
}

/// The least `r ≥ r0` admitting an integral [`seshadri_degree`], with that degree.
pub fn least_seshadri_rank(f: &CurveKClass, r0: u64, g: &BigInt) -> Result<(u64, BigInt)> {
    let mut r = r0.max(1);
    loop {
        match seshadri_degree(f, r, g) {
            Ok(d) => return Ok((r, d)),
            Err(TiltError::NonIntegralDegree { .. }) => r += 1,
            Err(e) => return Err(e),
        }
    }
}

/// Restriction data for `G` of class `-m·w|_C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementReport {
    pub a: u32,
    pub m: u32,
    #[serde(serialize_with = "serialize_bigint")]
    pub genus: BigInt,
    pub v_restricted: CurveKClass,
    pub h_restricted: CurveKClass,
    pub g_class: CurveKClass,
    #[serde(with = "literal")]
    pub chi_v_g: Rational,
}

/// `-m·w|_C = m·(χ(v|_C·h|_C)·1 - χ(v|_C)·h|_C)`, computed on the curve.
pub fn complement_class(v: &KClass, a: u32, m: u32, s: &SurfaceData) -> Result<CurveKClass> {
    Ok(complement_report(v, a, m, s)?.g_class)
}

pub fn complement_report(v: &KClass, a: u32, m: u32, s: &SurfaceData) -> Result<ComplementReport> {
    if !v.ch0.is_positive() {
        return Err(TiltError::NonPositiveRank(v.ch0.clone()));
    }
    if m == 0 {
        return Err(TiltError::ZeroMultiple { name: "m" });
    }
    let genus = curve_genus(a, s)?;
    let v_c = restrict_class(v, a, s)?;
    let h_c = restrict_class(&KClass::hyperplane(s), a, s)?;
    let chi_vh = curve_chi(&v_c, &h_c, &genus);
    let chi_v = curve_chi(&v_c, &CurveKClass::one(), &genus);
    let minus_w = CurveKClass::one().scale(&chi_vh).sub(&h_c.scale(&chi_v));
    let g_class = minus_w.scale(&int(i64::from(m)));
    let chi_v_g = curve_chi(&v_c, &g_class, &genus);
    Ok(ComplementReport { a, m, genus, v_restricted: v_c, h_restricted: h_c, g_class, chi_v_g })
}

/// `χ_C(x|_C)` against `χ(x·[O_C])` on the surface.
pub fn restriction_consistent(x: &KClass, a: u32, s: &SurfaceData) -> Result<bool> {
    let g = curve_genus(a, s)?;
    let on_curve = curve_chi(&restrict_class(x, a, s)?, &CurveKClass::one(), &g);
    let on_surface = x.euler_pairing(&KClass::curve(a, s), s)?;
    Ok(on_curve == on_surface)
}
