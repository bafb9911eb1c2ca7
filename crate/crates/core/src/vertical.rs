//! The determinantal class on the vertical wall.
//!
//! For `v` of positive rank and `h = [O_H]`,
//! `u = -χ(v·h²)·h + χ(v·h)·h²`. On the vertical wall the stability
//! condition is `(Coh^{β₀}[-1], Z)` with `Z = -Z_{α,β₀}`, `Z(v)` is a negative
//! real number, and the class `w_Z` characterised by
//! `χ(w_Z, a) = Im(-Z(a)/Z(v))` equals `-α/(rk(v)·Z(v)·H²) · u`.
//!
//! `w_Z` is never materialised; [`VerticalWall`] keeps `u` and evaluates the
//! multiplier at a given `α`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Result, TiltError};
use crate::kclass::KClass;
use crate::rational::{binomial2, format_rational, int, literal, Rational};
use crate::surface::{DivisorClass, SurfaceData};
use crate::tilt::{central_charge, vertical_beta, StabilityParams};

fn require_positive_rank(v: &KClass) -> Result<()> {
    if v.ch0.is_positive() {
        Ok(())
    } else {
        Err(TiltError::NonPositiveRank(v.ch0.clone()))
    }
}

/// `u = -χ(v·h²)·h + χ(v·h)·h²`, by full Riemann–Roch.
pub fn u_class(v: &KClass, s: &SurfaceData) -> Result<KClass> {
    require_positive_rank(v)?;
    let h = KClass::hyperplane(s);
    let h2 = h.mul(&h, s)?;
    let chi_vh2 = v.euler_pairing(&h2, s)?;
    let chi_vh = v.euler_pairing(&h, s)?;
    Ok(&h.scale(&-chi_vh2) + &h2.scale(&chi_vh))
}

/// Closed form `χ(a·u) = H²·H·(ch0^B(a)·ch1^B(v) - ch0^B(v)·ch1^B(a))`.
///
/// The expression does not depend on `B`; callers compare it against
/// [`KClass::euler_pairing`] with [`u_class`].
pub fn chi_with_u(a: &KClass, v: &KClass, b: &DivisorClass, s: &SurfaceData) -> Result<Rational> {
    require_positive_rank(v)?;
    let ta = a.twist(b, s)?;
    let tv = v.twist(b, s)?;
    let bracket = &ta.ch1.scale(&-&tv.ch0) + &tv.ch1.scale(&ta.ch0);
    Ok(s.degree() * s.h_dot(&bracket)?)
}

/// Numerical data of the stability conditions on the vertical wall of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerticalWall {
    pub v: KClass,
    #[serde(rename = "B")]
    pub b: DivisorClass,
    #[serde(with = "literal")]
    pub beta0: Rational,
    pub u: KClass,
}

impl VerticalWall {
    pub fn new(v: &KClass, b: &DivisorClass, s: &SurfaceData) -> Result<Self> {
        let beta0 = vertical_beta(v, b, s)?;
        let u = u_class(v, s)?;
        Ok(VerticalWall { v: v.clone(), b: b.clone(), beta0, u })
    }

    pub fn params(&self, alpha: &Rational) -> Result<StabilityParams> {
        StabilityParams::new(alpha.clone(), self.beta0.clone(), self.b.clone())
    }

    /// `Z(v) = -Z_{α,β₀}(v)`, a real number. Errors unless it is negative,
    /// which holds for every `α` exactly when the twisted discriminant of `v`
    /// is nonnegative.
    pub fn zv_at(&self, alpha: &Rational, s: &SurfaceData) -> Result<Rational> {
        let z = central_charge(&self.v, &self.params(alpha)?, s)?;
        debug_assert!(z.im.is_zero());
        let zv = -z.re;
        if !zv.is_negative() {
            return Err(TiltError::ChargeNotNegative(zv));
        }
        Ok(zv)
    }

    /// `-α / (rk(v)·Z(v)·H²)`, positive.
    pub fn multiplier_at(&self, alpha: &Rational, s: &SurfaceData) -> Result<Rational> {
        let zv = self.zv_at(alpha, s)?;
        Ok(-alpha / (&self.v.ch0 * zv * s.degree()))
    }

    /// `Im(-Z(a)/Z(v))` from the central charges.
    pub fn charge_side(&self, a: &KClass, alpha: &Rational, s: &SurfaceData) -> Result<Rational> {
        let zv = self.zv_at(alpha, s)?;
        let za = -central_charge(a, &self.params(alpha)?, s)?;
        // Z(v) is real, so Im(-Z(a)/Z(v)) = -Im Z(a) / Z(v)
        Ok(-za.im / zv)
    }
}

pub fn wz_multiplier(v: &KClass, alpha: &Rational, b: &DivisorClass, s: &SurfaceData) -> Result<Rational> {
    if !alpha.is_positive() {
        return Err(TiltError::NonPositiveAlpha(alpha.clone()));
    }
    VerticalWall::new(v, b, s)?.multiplier_at(alpha, s)
}

/// Both sides of `Im(-Z(a)/Z(v)) = multiplier·χ(a·u)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProportionalitySides {
    #[serde(with = "literal")]
    pub charge_side: Rational,
    #[serde(with = "literal")]
    pub multiplier: Rational,
    #[serde(with = "literal")]
    pub chi_a_u: Rational,
}

impl ProportionalitySides {
    pub fn pairing_side(&self) -> Rational {
        &self.multiplier * &self.chi_a_u
    }

    pub fn holds(&self) -> bool {
        self.charge_side == self.pairing_side()
    }
}

pub fn proportionality_sides(
    a: &KClass,
    v: &KClass,
    alpha: &Rational,
    b: &DivisorClass,
    s: &SurfaceData,
) -> Result<ProportionalitySides> {
    let wall = VerticalWall::new(v, b, s)?;
    Ok(ProportionalitySides {
        charge_side: wall.charge_side(a, alpha, s)?,
        multiplier: wall.multiplier_at(alpha, s)?,
        chi_a_u: a.euler_pairing(&wall.u, s)?,
    })
}

/// The charge route and the Riemann–Roch route agree exactly.
pub fn proportionality_check(
    a: &KClass,
    v: &KClass,
    alpha: &Rational,
    b: &DivisorClass,
    s: &SurfaceData,
) -> Result<bool> {
    Ok(proportionality_sides(a, v, alpha, b, s)?.holds())
}

/// `w = -χ(v·h·[O_C])·1 + χ(v·[O_C])·h` for `C ∈ |aH|`.
pub fn w_class(v: &KClass, a: u32, s: &SurfaceData) -> Result<KClass> {
    require_positive_rank(v)?;
    if a == 0 {
        return Err(TiltError::ZeroMultiple { name: "a" });
    }
    let h = KClass::hyperplane(s);
    let oc = KClass::curve(a, s);
    let chi_vhc = v.mul(&h, s)?.euler_pairing(&oc, s)?;
    let chi_vc = v.euler_pairing(&oc, s)?;
    Ok(&KClass::one(s).scale(&-chi_vhc) + &h.scale(&chi_vc))
}

/// `w - w(-a)` next to `a²·u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvePowerSides {
    pub a: u32,
    pub difference: KClass,
    pub a2u: KClass,
}

impl CurvePowerSides {
    pub fn holds(&self) -> bool {
        self.difference == self.a2u
    }
}

pub fn curve_power_sides(v: &KClass, a: u32, s: &SurfaceData) -> Result<CurvePowerSides> {
    let w = w_class(v, a, s)?;
    let difference = &w - &w.tensor_line(-i64::from(a), s)?;
    let a_sq = int(i64::from(a) * i64::from(a));
    Ok(CurvePowerSides { a, difference, a2u: u_class(v, s)?.scale(&a_sq) })
}

/// `w - w(-a) = a²·u` as Chern triples.
pub fn curve_power_identity(v: &KClass, a: u32, s: &SurfaceData) -> Result<bool> {
    Ok(curve_power_sides(v, a, s)?.holds())
}

/// Stabilizer weights `χ(factor·u)` of a candidate polystable decomposition.
/// All zero means the determinantal line bundle descends.
///
/// Each weight is computed by Riemann–Roch and checked against the closed
/// form in the twist `B`.
pub fn descent_weights(factors: &[KClass], v: &KClass, b: &DivisorClass, s: &SurfaceData) -> Result<Vec<Rational>> {
    let u = u_class(v, s)?;
    factors
        .iter()
        .map(|f| {
            let hrr = f.euler_pairing(&u, s)?;
            let closed = chi_with_u(f, v, b, s)?;
            if hrr != closed {
                return Err(TiltError::PairingMismatch {
                    closed: format_rational(&closed),
                    hrr: format_rational(&hrr),
                });
            }
            Ok(hrr)
        })
        .collect()
}

/// `[O_C]` expanded as `a·h - C(a,2)·h²` with `h·[O_C] = a·h²`.
pub fn curve_class_check(a: u32, s: &SurfaceData) -> Result<bool> {
    let h = KClass::hyperplane(s);
    let h2 = h.mul(&h, s)?;
    let oc = KClass::curve(a, s);
    let by_power = &KClass::one(s) - &(&KClass::one(s) - &h).pow(a, s)?;
    let expanded = &h.scale(&int(i64::from(a))) - &h2.scale(&binomial2(a));
    Ok(oc == by_power && oc == expanded && h.mul(&oc, s)? == h2.scale(&int(i64::from(a))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{half, rat};
    use proptest::prelude::*;

    fn s1(r: i64, c: i64, d: Rational) -> KClass {
        KClass::from_ints(r, &[c], d)
    }

    /// χ(v·h) and χ(v·h²) from the degree shortcuts, independent of HRR code.
    fn u_oracle(v: &KClass, s: &SurfaceData) -> KClass {
        let hk = s.intersect(s.h(), &(s.h() + s.k())).unwrap();
        let chi_vh = s.h_dot(&v.ch1).unwrap() - &v.ch0 * half() * hk;
        let chi_vh2 = &v.ch0 * s.degree();
        let h = KClass::hyperplane(s);
        let h2 = KClass::point(s).scale(&s.degree());
        &h.scale(&-chi_vh2) + &h2.scale(&chi_vh)
    }

    #[test]
    fn u_examples() {
        let s = SurfaceData::s1();
        let v = s1(2, 0, int(-1));
        let u = u_class(&v, &s).unwrap();
        assert_eq!(u, s1(0, -2, int(3)));
        assert_eq!(u, u_oracle(&v, &s));
        let one = KClass::one(&s);
        assert_eq!(u_class(&one, &s).unwrap(), s1(0, -1, rat(3, 2)));
        assert_eq!(v.euler_pairing(&u, &s).unwrap(), int(0));
        assert_eq!(one.euler_pairing(&u_class(&one, &s).unwrap(), &s).unwrap(), int(0));
        assert!(u_class(&KClass::point(&s), &s).is_err());
    }

    #[test]
    fn chi_with_u_examples() {
        let s = SurfaceData::s1();
        let zero = s.zero_divisor();
        let v = s1(2, 0, int(-1));
        let u = u_class(&v, &s).unwrap();
        for (a, expected) in [(KClass::one(&s), int(0)), (s1(0, 1, int(0)), int(-2)), (v.clone(), int(0))] {
            assert_eq!(chi_with_u(&a, &v, &zero, &s).unwrap(), expected);
            assert_eq!(a.euler_pairing(&u, &s).unwrap(), expected);
        }
    }

    #[test]
    fn multiplier_examples() {
        let s = SurfaceData::s1();
        let zero = s.zero_divisor();
        let v = s1(2, 0, int(-1));
        // Z_{1,0}(v) = 1/2·1·2 - (-1) = 2, so Z(v) = -2 and the multiplier is 1/(2·2·1)
        assert_eq!(wz_multiplier(&v, &int(1), &zero, &s).unwrap(), rat(1, 4));
        // α = 2: Z_{2,0}(v) = 4 + 1 = 5, multiplier 2/(2·5)
        assert_eq!(wz_multiplier(&v, &int(2), &zero, &s).unwrap(), rat(1, 5));
        assert!(wz_multiplier(&v, &int(0), &zero, &s).is_err());
        assert!(wz_multiplier(&KClass::point(&s), &int(1), &zero, &s).is_err());
    }

    #[test]
    fn charge_must_be_negative() {
        // discriminant 1 - 2·1·1 < 0: Re Z_{α,β₀} = α²/2 - 1/2 vanishes at α = 1
        let s = SurfaceData::s1();
        let v = s1(1, 1, int(1));
        assert!(matches!(wz_multiplier(&v, &int(1), &s.zero_divisor(), &s), Err(TiltError::ChargeNotNegative(_))));
    }

    #[test]
    fn proportionality_examples() {
        let s = SurfaceData::s1();
        let zero = s.zero_divisor();
        let v = s1(2, 0, int(-1));
        assert!(proportionality_check(&v, &v, &int(1), &zero, &s).unwrap());
        let sides = proportionality_sides(&s1(0, 1, int(0)), &v, &int(1), &zero, &s).unwrap();
        assert!(sides.holds());
        // Im Z(a) = -α·H·ch1 = -1, so Im(-Z(a)/Z(v)) = 1/(-2) ... both sides -1/2
        assert_eq!(sides.charge_side, rat(-1, 2));
        assert_eq!(sides.pairing_side(), rat(-1, 2));
    }

    #[test]
    fn w_examples() {
        let s = SurfaceData::s1();
        let v = s1(2, 0, int(-1));
        // [O_C] = (0, 2H, -2); v·h·[O_C] = 2·2·h² so χ = 4; χ(v·[O_C]) = -4 + 2·2·3/2 = 2
        assert_eq!(KClass::curve(2, &s), s1(0, 2, int(-2)));
        let w = w_class(&v, 2, &s).unwrap();
        assert_eq!(w, &KClass::one(&s).scale(&int(-4)) + &KClass::hyperplane(&s).scale(&int(2)));
        assert_eq!(w.ch0, int(-4));
        for a in 1..7 {
            assert!(curve_class_check(a, &s).unwrap());
        }
        assert!(w_class(&v, 0, &s).is_err());
    }

    #[test]
    fn curve_power_examples() {
        let s = SurfaceData::s1();
        assert!(curve_power_identity(&s1(2, 0, int(-1)), 2, &s).unwrap());
        let s2 = SurfaceData::s2();
        let v = KClass::from_ints(3, &[1, 1], int(0));
        assert!(curve_power_identity(&v, 3, &s2).unwrap());
        for v in [s1(1, 0, int(0)), s1(4, -3, rat(1, 2))] {
            assert!(curve_power_identity(&v, 1, &s).unwrap());
        }
    }

    #[test]
    fn descent_examples() {
        let s = SurfaceData::s1();
        let zero = s.zero_divisor();
        let v = s1(2, 0, int(-1));
        let shifted_point = s1(0, 0, int(-1));
        assert_eq!(descent_weights(&[shifted_point], &v, &zero, &s).unwrap(), vec![int(0)]);
        for k in -3..3 {
            let f = [s1(1, 0, int(k)), s1(1, 0, int(-1 - k))];
            assert_eq!(descent_weights(&f, &v, &zero, &s).unwrap(), vec![int(0), int(0)]);
        }
        let off = descent_weights(&[s1(1, 1, rat(1, 2))], &v, &zero, &s).unwrap();
        assert_ne!(off[0], int(0));
    }

    fn class_s2() -> impl Strategy<Value = KClass> {
        (-4i64..5, -5i64..6, -5i64..6, -6i64..7).prop_map(|(r, x, y, k)| KClass::from_ints(r, &[x, y], int(x * y + k)))
    }

    fn positive_s2() -> impl Strategy<Value = KClass> {
        (1i64..5, -5i64..6, -5i64..6, -6i64..7).prop_map(|(r, x, y, k)| KClass::from_ints(r, &[x, y], int(x * y + k)))
    }

    proptest! {
        #[test]
        fn two_routes_agree(a in class_s2(), v in positive_s2(), bx in -6i64..6, by in -6i64..6, bd in 1i64..4) {
            let s = SurfaceData::s2();
            let b = DivisorClass::new(vec![rat(bx, bd), rat(by, bd)]);
            let u = u_class(&v, &s).unwrap();
            prop_assert_eq!(u.clone(), u_oracle(&v, &s));
            prop_assert!(u.ch0.is_zero());
            prop_assert_eq!(a.euler_pairing(&u, &s).unwrap(), chi_with_u(&a, &v, &b, &s).unwrap());
            prop_assert_eq!(chi_with_u(&a, &v, &b, &s).unwrap(), chi_with_u(&a, &v, &s.zero_divisor(), &s).unwrap());
        }

        #[test]
        fn curve_power_random(v in positive_s2(), a in 1u32..7) {
            prop_assert!(curve_power_identity(&v, a, &SurfaceData::s2()).unwrap());
        }
    }
}
