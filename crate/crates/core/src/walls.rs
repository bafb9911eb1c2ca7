//! Numerical walls for a class `v` in the `(α, β)` half-plane.
//!
//! The wall of `v` against `w` is the locus where
//! `Re Z(v)·Im Z(w) - Re Z(w)·Im Z(v) = 0`. With `r`, `c = H·ch1^B`,
//! `d = ch2^B` for each class and `D = H²`, this quantity equals `α·f` where
//!
//! ```text
//! f(α, β) = (D·X/2)·(α² + β²) + D·Y·β + W
//! X = r_v c_w - r_w c_v,   Y = d_v r_w - d_w r_v,   W = d_w c_v - d_v c_w
//! ```
//!
//! so a wall is a semicircle centred on the β-axis when `X ≠ 0`, a vertical
//! line when `X = 0 ≠ Y`, and degenerate otherwise.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Result, TiltError};
use crate::kclass::KClass;
use crate::rational::{format_rational, half, int, literal, Rational};
use crate::surface::{DivisorClass, SurfaceData};
use crate::tilt::{central_charge, discriminant, StabilityParams};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Locus {
    Vertical { beta: Rational },
    Semicircle { center: Rational, radius_sq: Rational },
    Everywhere,
    Empty,
}

impl Locus {
    pub fn kind(&self) -> WallKind {
        match self {
            Locus::Vertical { .. } => WallKind::Vertical,
            Locus::Semicircle { .. } => WallKind::Semicircle,
            Locus::Everywhere => WallKind::Everywhere,
            Locus::Empty => WallKind::Empty,
        }
    }
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locus::Vertical { beta } => write!(f, "beta = {}", format_rational(beta)),
            Locus::Semicircle { center, radius_sq } => {
                write!(f, "center {}, radius² {}", format_rational(center), format_rational(radius_sq))
            }
            Locus::Everywhere => f.write_str("everywhere"),
            Locus::Empty => f.write_str("empty"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WallKind {
    Vertical,
    Semicircle,
    Everywhere,
    Empty,
}

impl fmt::Display for WallKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WallKind::Vertical => "vertical",
            WallKind::Semicircle => "semicircle",
            WallKind::Everywhere => "everywhere",
            WallKind::Empty => "empty",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub locus: Locus,
    /// The class `w` whose slope agrees with `v` along the locus.
    pub witness: KClass,
}

impl Wall {
    pub fn kind(&self) -> WallKind {
        self.locus.kind()
    }
}

#[derive(Serialize)]
struct WallRecord<'a> {
    kind: WallKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    center: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    radius_sq: Option<String>,
    witness: &'a KClass,
}

impl Serialize for Wall {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (beta, center, radius_sq) = match &self.locus {
            Locus::Vertical { beta } => (Some(format_rational(beta)), None, None),
            Locus::Semicircle { center, radius_sq } => {
                (None, Some(format_rational(center)), Some(format_rational(radius_sq)))
            }
            _ => (None, None, None),
        };
        WallRecord { kind: self.kind(), beta, center, radius_sq, witness: &self.witness }.serialize(s)
    }
}

/// Coefficients of `f(α, β) = quad·(α² + β²) + lin·β + constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallEquation {
    pub quad: Rational,
    pub lin: Rational,
    pub constant: Rational,
}

impl WallEquation {
    pub fn eval_sq(&self, alpha_sq: &Rational, beta: &Rational) -> Rational {
        &self.quad * (alpha_sq + beta * beta) + &self.lin * beta + &self.constant
    }
}

struct Twisted {
    r: Rational,
    c: Rational,
    d: Rational,
}

fn twisted(a: &KClass, b: &DivisorClass, s: &SurfaceData) -> Result<Twisted> {
    let t = a.twist(b, s)?;
    Ok(Twisted { c: s.h_dot(&t.ch1)?, r: t.ch0, d: t.ch2 })
}

pub fn wall_equation(v: &KClass, w: &KClass, b: &DivisorClass, s: &SurfaceData) -> Result<WallEquation> {
    let tv = twisted(v, b, s)?;
    let tw = twisted(w, b, s)?;
    let dd = s.degree();
    let x = &tv.r * &tw.c - &tw.r * &tv.c;
    let y = &tv.d * &tw.r - &tw.d * &tv.r;
    let wc = &tw.d * &tv.c - &tv.d * &tw.c;
    Ok(WallEquation { quad: &dd * x * half(), lin: dd * y, constant: wc })
}

/// `(Re Z, Im Z / α)` evaluated from `α²`, so points with irrational `α`
/// but rational `α²` can be checked exactly.
fn charge_from_alpha_sq(
    a: &KClass,
    alpha_sq: &Rational,
    beta: &Rational,
    b: &DivisorClass,
    s: &SurfaceData,
) -> Result<(Rational, Rational)> {
    let t = twisted(a, b, s)?;
    let dd = s.degree();
    let re = (alpha_sq - beta * beta) * half() * &dd * &t.r + beta * &t.c - &t.d;
    let im = &t.c - beta * dd * &t.r;
    Ok((re, im))
}

/// `(Re Z(v)·Im Z(w) - Re Z(w)·Im Z(v)) / α`, computed from the central charges.
pub fn slope_cross_sq(
    v: &KClass,
    w: &KClass,
    alpha_sq: &Rational,
    beta: &Rational,
    b: &DivisorClass,
    s: &SurfaceData,
) -> Result<Rational> {
    let (rv, iv) = charge_from_alpha_sq(v, alpha_sq, beta, b, s)?;
    let (rw, iw) = charge_from_alpha_sq(w, alpha_sq, beta, b, s)?;
    Ok(rv * iw - rw * iv)
}

/// `Re Z(v)·Im Z(w) - Re Z(w)·Im Z(v)` at a rational point.
pub fn slope_cross(v: &KClass, w: &KClass, p: &StabilityParams, s: &SurfaceData) -> Result<Rational> {
    let zv = central_charge(v, p, s)?;
    let zw = central_charge(w, p, s)?;
    Ok(zv.re * zw.im - zw.re * zv.im)
}

fn locus_of(eq: &WallEquation) -> Locus {
    if !eq.quad.is_zero() {
        // α² + (β - center)² = radius_sq
        let center = -&eq.lin / (int(2) * &eq.quad);
        let radius_sq = &center * &center - &eq.constant / &eq.quad;
        if radius_sq.is_positive() {
            Locus::Semicircle { center, radius_sq }
        } else {
            Locus::Empty
        }
    } else if !eq.lin.is_zero() {
        Locus::Vertical { beta: -&eq.constant / &eq.lin }
    } else if eq.constant.is_zero() {
        Locus::Everywhere
    } else {
        Locus::Empty
    }
}

/// The locus in `α > 0` where `v` and `w` have equal tilt slope.
pub fn numerical_wall(v: &KClass, w: &KClass, b: &DivisorClass, s: &SurfaceData) -> Result<Wall> {
    let eq = wall_equation(v, w, b, s)?;
    Ok(Wall { locus: locus_of(&eq), witness: w.clone() })
}

fn locus_contains_sq(locus: &Locus, alpha_sq: &Rational, beta: &Rational) -> bool {
    match locus {
        Locus::Vertical { beta: b0 } => beta == b0,
        Locus::Semicircle { center, radius_sq } => {
            let dx = beta - center;
            &(&dx * &dx + alpha_sq) == radius_sq
        }
        Locus::Everywhere => true,
        Locus::Empty => false,
    }
}

/// Membership of `(α, β)` in the wall, checked against the locus and again
/// from the central charges of `v` and `w`. Disagreement is an error.
pub fn wall_contains(
    wall: &Wall,
    alpha: &Rational,
    beta: &Rational,
    v: &KClass,
    w: &KClass,
    b: &DivisorClass,
    s: &SurfaceData,
) -> Result<bool> {
    let p = StabilityParams::new(alpha.clone(), beta.clone(), b.clone())?;
    let by_locus = locus_contains_sq(&wall.locus, &(alpha * alpha), beta);
    let by_charge = slope_cross(v, w, &p, s)?.is_zero();
    if by_locus != by_charge {
        return Err(TiltError::InconsistentWall(format!(
            "alpha = {}, beta = {}",
            format_rational(alpha),
            format_rational(beta)
        )));
    }
    Ok(by_locus)
}

/// [`wall_contains`] at a point given by `α²`, for circles without rational points.
pub fn wall_contains_sq(
    wall: &Wall,
    alpha_sq: &Rational,
    beta: &Rational,
    v: &KClass,
    w: &KClass,
    b: &DivisorClass,
    s: &SurfaceData,
) -> Result<bool> {
    if !alpha_sq.is_positive() {
        return Err(TiltError::NonPositiveAlpha(alpha_sq.clone()));
    }
    let by_locus = locus_contains_sq(&wall.locus, alpha_sq, beta);
    let by_charge = slope_cross_sq(v, w, alpha_sq, beta, b, s)?.is_zero();
    if by_locus != by_charge {
        return Err(TiltError::InconsistentWall(format!(
            "alpha² = {}, beta = {}",
            format_rational(alpha_sq),
            format_rational(beta)
        )));
    }
    Ok(by_locus)
}

/// Three points `(α², β)` with `α > 0` on the locus.
pub fn sample_points(locus: &Locus) -> Vec<(Rational, Rational)> {
    match locus {
        Locus::Vertical { beta } => {
            [int(1), int(1) / int(4), int(9)].into_iter().map(|a2| (a2, beta.clone())).collect()
        }
        Locus::Semicircle { center, radius_sq } => {
            let t = if radius_sq >= &Rational::one() { half() } else { radius_sq * half() };
            [Rational::zero(), -t.clone(), t].into_iter().map(|dx| (radius_sq - &dx * &dx, center + dx)).collect()
        }
        Locus::Everywhere => vec![(int(1), int(0)), (int(4), int(1)), (int(1) / int(4), int(-2))],
        Locus::Empty => Vec::new(),
    }
}

/// `β ∈ [beta_min, beta_max]`, `0 < α ≤ alpha_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Region {
    #[serde(with = "literal")]
    pub beta_min: Rational,
    #[serde(with = "literal")]
    pub beta_max: Rational,
    #[serde(with = "literal")]
    pub alpha_max: Rational,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "beta in [{}, {}], alpha in (0, {}]",
            format_rational(&self.beta_min),
            format_rational(&self.beta_max),
            format_rational(&self.alpha_max)
        )
    }
}

impl Region {
    pub fn new(beta_min: Rational, beta_max: Rational, alpha_max: Rational) -> Self {
        Region { beta_min, beta_max, alpha_max }
    }

    fn has_interior(&self) -> bool {
        self.beta_min < self.beta_max && self.alpha_max.is_positive()
    }

    pub fn meets(&self, locus: &Locus) -> bool {
        if !self.has_interior() {
            return false;
        }
        match locus {
            Locus::Vertical { beta } => &self.beta_min <= beta && beta <= &self.beta_max,
            Locus::Semicircle { center, radius_sq } => {
                let (lo, hi) = (&self.beta_min, &self.beta_max);
                let dist_sq = |b: &Rational| {
                    let d = b - center;
                    &d * &d
                };
                let center_inside = lo <= center && center <= hi;
                let (near, far) = if center < lo {
                    (dist_sq(lo), dist_sq(hi))
                } else if center > hi {
                    (dist_sq(hi), dist_sq(lo))
                } else {
                    (Rational::zero(), std::cmp::max(dist_sq(lo), dist_sq(hi)))
                };
                if !center_inside && &near >= radius_sq {
                    return false;
                }
                // lowest point of the arc above [lo, hi]
                if &far >= radius_sq {
                    true
                } else {
                    radius_sq - far <= &self.alpha_max * &self.alpha_max
                }
            }
            Locus::Everywhere => true,
            Locus::Empty => false,
        }
    }
}

/// Witness search limits: `|ch0| ≤ max_rank`, every ch1 coordinate and
/// `|H·ch1^B|` at most `max_c`, and `|ch2^B| ≤ max_c²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub max_rank: u32,
    pub max_c: u32,
}

fn lattice_points(rank: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-bound..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

fn ceil(q: &Rational) -> BigInt {
    q.ceil().to_integer()
}

fn floor(q: &Rational) -> BigInt {
    q.floor().to_integer()
}

/// Walls of `v` induced by integral witnesses within `bounds` that meet
/// `region`, deduplicated by locus (smallest witness kept) and sorted by
/// kind, then center or β, then radius².
pub fn enumerate_candidate_walls(
    v: &KClass,
    b: &DivisorClass,
    s: &SurfaceData,
    region: &Region,
    bounds: SearchBounds,
) -> Result<Vec<Wall>> {
    v.check(s)?;
    s.check(b)?;
    if region.beta_min > region.beta_max || region.alpha_max.is_negative() {
        return Err(TiltError::EmptyRegion(region.to_string()));
    }
    if bounds.max_rank == 0 || bounds.max_c == 0 {
        return Err(TiltError::InvalidBounds);
    }
    if !region.has_interior() {
        return Ok(Vec::new());
    }

    let max_c = int(i64::from(bounds.max_c));
    let ch2_cap = &max_c * &max_c;
    let b_sq = s.intersect(b, b)?;
    let divisors = lattice_points(s.rank(), i64::from(bounds.max_c));
    let mut found: BTreeMap<Locus, KClass> = BTreeMap::new();

    for r in -i64::from(bounds.max_rank)..=i64::from(bounds.max_rank) {
        let r_q = int(r);
        for coords in &divisors {
            let ch1 = DivisorClass::from_ints(coords);
            let ch1_b = &ch1 - &b.scale(&r_q);
            if s.h_dot(&ch1_b)?.abs() > max_c {
                continue;
            }
            let half_c1_sq = s.intersect(&ch1, &ch1)? * half();
            // ch2^B = ch2 - B·ch1 + B²·r/2 within [-cap, cap]
            let shift = s.intersect(b, &ch1)? - &b_sq * half() * &r_q;
            let lo = &shift - &ch2_cap - &half_c1_sq;
            let hi = &shift + &ch2_cap - &half_c1_sq;
            let mut k = ceil(&lo);
            let k_hi = floor(&hi);
            while k <= k_hi {
                let ch2 = &half_c1_sq + Rational::from_integer(k.clone());
                k += 1;
                let w = KClass::new(r_q.clone(), ch1.clone(), ch2);
                if w.is_zero() || discriminant(&w, s)?.is_negative() || discriminant(&(v - &w), s)?.is_negative() {
                    continue;
                }
                let wall = numerical_wall(v, &w, b, s)?;
                if !matches!(wall.kind(), WallKind::Vertical | WallKind::Semicircle) || !region.meets(&wall.locus) {
                    continue;
                }
                match found.get(&wall.locus) {
                    Some(existing) if existing <= &w => {}
                    _ => {
                        found.insert(wall.locus, w);
                    }
                }
            }
        }
    }
    Ok(found.into_iter().map(|(locus, witness)| Wall { locus, witness }).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Crossing {
    /// Two semicircles meet at a point with `α > 0`.
    Semicircles { first: usize, second: usize },
    /// A semicircle straddles a vertical wall.
    Vertical {
        wall: usize,
        #[serde(with = "literal")]
        beta: Rational,
    },
}

fn semicircles_cross(c1: &Rational, r1: &Rational, c2: &Rational, r2: &Rational) -> bool {
    if c1 == c2 {
        // concentric: equal circles are the same wall
        return false;
    }
    // (β - c1)² - (β - c2)² = r1 - r2 fixes β of the common point
    let beta = (c1 + c2) * half() + (r1 - r2) / (int(2) * (c2 - c1));
    let dx = &beta - c1;
    (r1 - &dx * &dx).is_positive()
}

/// Pairs of walls that meet in `α > 0`. Every semicircle is also checked
/// against the vertical wall of `v` and any vertical wall in the list.
pub fn check_nested(walls: &[Wall], v: &KClass, b: &DivisorClass, s: &SurfaceData) -> Result<Vec<Crossing>> {
    let mut verticals: Vec<Rational> = walls
        .iter()
        .filter_map(|w| match &w.locus {
            Locus::Vertical { beta } => Some(beta.clone()),
            _ => None,
        })
        .collect();
    if v.ch0.is_positive() {
        verticals.push(crate::tilt::vertical_beta(v, b, s)?);
    }
    verticals.sort();
    verticals.dedup();

    let mut out = Vec::new();
    for (i, wi) in walls.iter().enumerate() {
        let Locus::Semicircle { center: ci, radius_sq: ri } = &wi.locus else { continue };
        for beta in &verticals {
            let dx = beta - ci;
            if &dx * &dx < *ri {
                out.push(Crossing::Vertical { wall: i, beta: beta.clone() });
            }
        }
        for (j, wj) in walls.iter().enumerate().skip(i + 1) {
            if let Locus::Semicircle { center: cj, radius_sq: rj } = &wj.locus {
                if semicircles_cross(ci, ri, cj, rj) {
                    out.push(Crossing::Semicircles { first: i, second: j });
                }
            }
        }
    }
    Ok(out)
}

/// Rows `kind,beta,center,radius_sq,ch0,ch1,ch2`; ch1 coordinates joined by `;`.
pub fn walls_to_csv(walls: &[Wall]) -> String {
    let mut out = String::from("kind,beta,center,radius_sq,ch0,ch1,ch2\n");
    for w in walls {
        let (beta, center, radius_sq) = match &w.locus {
            Locus::Vertical { beta } => (format_rational(beta), String::new(), String::new()),
            Locus::Semicircle { center, radius_sq } => {
                (String::new(), format_rational(center), format_rational(radius_sq))
            }
            _ => Default::default(),
        };
        let ch1: Vec<String> = w.witness.ch1.coords().iter().map(format_rational).collect();
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            w.kind(),
            beta,
            center,
            radius_sq,
            format_rational(&w.witness.ch0),
            ch1.join(";"),
            format_rational(&w.witness.ch2)
        ));
    }
    out
}
