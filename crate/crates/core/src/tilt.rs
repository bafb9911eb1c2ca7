//! Slopes and central charges of the tilt stability conditions `σ_{α,β}`.
//!
//! For a twist `B` and `(α, β)` with `α > 0`,
//!
//! ```text
//! Z_{α,β}(E) = (α² - β²)/2 · H²·ch0 + β·H·ch1^B - ch2^B + iα(H·ch1^B - β·H²·ch0)
//! ```
//!
//! where `ch^B = e^{-B}·ch`. `α` is restricted to rationals so every value
//! here is exact.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Result, TiltError};
use crate::kclass::KClass;
use crate::rational::{format_rational, half, literal, Rational};
use crate::surface::{DivisorClass, SurfaceData};

/// A slope value; `Infinite` sorts above every finite value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Slope {
    Finite(Rational),
    Infinite,
}

impl Slope {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Slope::Finite(q) => Some(q),
            Slope::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Slope::Infinite)
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Slope::Finite(a), Slope::Finite(b)) => a.cmp(b),
            (Slope::Finite(_), Slope::Infinite) => Ordering::Less,
            (Slope::Infinite, Slope::Finite(_)) => Ordering::Greater,
            (Slope::Infinite, Slope::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(q) => f.write_str(&format_rational(q)),
            Slope::Infinite => f.write_str("+inf"),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityParams {
    #[serde(with = "literal")]
    alpha: Rational,
    #[serde(with = "literal")]
    beta: Rational,
    #[serde(rename = "B")]
    b: DivisorClass,
}

impl StabilityParams {
    pub fn new(alpha: Rational, beta: Rational, b: DivisorClass) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(TiltError::NonPositiveAlpha(alpha));
        }
        Ok(StabilityParams { alpha, beta, b })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn b(&self) -> &DivisorClass {
        &self.b
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: StabilityParams = serde_json::from_str(text)?;
        StabilityParams::new(raw.alpha, raw.beta, raw.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralCharge {
    #[serde(with = "literal")]
    pub re: Rational,
    #[serde(with = "literal")]
    pub im: Rational,
}

impl std::ops::Neg for CentralCharge {
    type Output = CentralCharge;
    fn neg(self) -> CentralCharge {
        CentralCharge { re: -self.re, im: -self.im }
    }
}

/// `μ_B = H·ch1^B / (H²·ch0)`, infinite on rank-zero classes.
pub fn mu_b(a: &KClass, b: &DivisorClass, s: &SurfaceData) -> Result<Slope> {
    if a.ch0.is_zero() {
        a.check(s)?;
        return Ok(Slope::Infinite);
    }
    let t = a.twist(b, s)?;
    Ok(Slope::Finite(s.h_dot(&t.ch1)? / (s.degree() * &t.ch0)))
}

/// `Z_{α,β}` of the class, evaluated exactly on `ch^B`.
pub fn central_charge(a: &KClass, p: &StabilityParams, s: &SurfaceData) -> Result<CentralCharge> {
    let t = a.twist(&p.b, s)?;
    let d = s.degree();
    let hc = s.h_dot(&t.ch1)?;
    let (alpha, beta) = (&p.alpha, &p.beta);
    let re = (alpha * alpha - beta * beta) * half() * &d * &t.ch0 + beta * &hc - &t.ch2;
    let im = alpha * (&hc - beta * &d * &t.ch0);
    Ok(CentralCharge { re, im })
}

/// `ν = -Re Z / Im Z`, `+∞` when `Im Z = 0`.
pub fn tilt_slope(a: &KClass, p: &StabilityParams, s: &SurfaceData) -> Result<Slope> {
    let z = central_charge(a, p, s)?;
    if z.im.is_zero() {
        Ok(Slope::Infinite)
    } else {
        Ok(Slope::Finite(-z.re / z.im))
    }
}

/// `β₀ = H·ch1^B(v) / (H²·ch0(v))`, the vertical wall of a positive-rank class.
pub fn vertical_beta(v: &KClass, b: &DivisorClass, s: &SurfaceData) -> Result<Rational> {
    if !v.ch0.is_positive() {
        return Err(TiltError::NonPositiveRank(v.ch0.clone()));
    }
    let t = v.twist(b, s)?;
    Ok(s.h_dot(&t.ch1)? / (s.degree() * &t.ch0))
}

/// `(H·ch1)² - 2H²·ch0·ch2`, the form used for the support property.
pub fn discriminant(a: &KClass, s: &SurfaceData) -> Result<Rational> {
    let hc = s.h_dot(&a.ch1)?;
    Ok(&hc * &hc - Rational::from_integer(2.into()) * s.degree() * &a.ch0 * &a.ch2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LocusSign {
    Positive,
    Zero,
    Negative,
}

/// Sign of `Im Z_{α,β}`. `Zero` is the locus where a heart object of this
/// class splits as a shifted μ-semistable sheaf of slope `β` and a
/// 0-dimensional sheaf.
pub fn vertical_locus_kind(a: &KClass, p: &StabilityParams, s: &SurfaceData) -> Result<LocusSign> {
    let im = central_charge(a, p, s)?.im;
    Ok(if im.is_positive() {
        LocusSign::Positive
    } else if im.is_negative() {
        LocusSign::Negative
    } else {
        LocusSign::Zero
    })
}
