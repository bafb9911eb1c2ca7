//! Symbolic moduli points on the vertical wall.
//!
//! Bundles are opaque isomorphism tokens carrying a class; two bundle factors
//! are isomorphic exactly when their tokens agree. Mock sheaves are stored
//! already graded, as a locally free double dual plus torsion lengths.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Result, TiltError};
use crate::kclass::KClass;
use crate::rational::{format_rational, int, literal, Rational};
use crate::surface::{DivisorClass, SurfaceData};
use crate::tilt::{discriminant, mu_b, vertical_beta, Slope};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BundleFactor {
    pub iso_id: String,
    pub cls: KClass,
}

impl BundleFactor {
    pub fn new(iso_id: impl Into<String>, cls: KClass) -> Self {
        BundleFactor { iso_id: iso_id.into(), cls }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StableFactor {
    Bundle(BundleFactor),
    /// `O_p[-1]`.
    Skyscraper {
        point_id: String,
    },
}

/// What S-equivalence compares.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorKey {
    Bundle(String),
    Point(String),
}

impl StableFactor {
    pub fn bundle(iso_id: impl Into<String>, cls: KClass) -> Self {
        StableFactor::Bundle(BundleFactor::new(iso_id, cls))
    }

    pub fn skyscraper(point_id: impl Into<String>) -> Self {
        StableFactor::Skyscraper { point_id: point_id.into() }
    }

    pub fn key(&self) -> FactorKey {
        match self {
            StableFactor::Bundle(b) => FactorKey::Bundle(b.iso_id.clone()),
            StableFactor::Skyscraper { point_id } => FactorKey::Point(point_id.clone()),
        }
    }

    /// Bundles contribute their class, `O_p[-1]` contributes `(0, 0, -1)`.
    pub fn class(&self, s: &SurfaceData) -> KClass {
        match self {
            StableFactor::Bundle(b) => b.cls.clone(),
            StableFactor::Skyscraper { .. } => -&KClass::point(s),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolystableObject {
    pub factors: Vec<StableFactor>,
}

impl PolystableObject {
    pub fn new(factors: Vec<StableFactor>) -> Self {
        PolystableObject { factors }
    }

    pub fn keys(&self) -> BTreeMap<FactorKey, usize> {
        let mut out = BTreeMap::new();
        for f in &self.factors {
            *out.entry(f.key()).or_insert(0) += 1;
        }
        out
    }

    pub fn skyscraper_count(&self) -> usize {
        self.factors.iter().filter(|f| matches!(f, StableFactor::Skyscraper { .. })).count()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MockSheaf {
    double_dual: Vec<BundleFactor>,
    torsion: BTreeMap<String, u32>,
}

#[derive(Deserialize)]
struct MockSheafFile {
    double_dual: Vec<BundleFactor>,
    #[serde(default)]
    torsion: BTreeMap<String, u32>,
}

impl<'de> Deserialize<'de> for MockSheaf {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let f = MockSheafFile::deserialize(d)?;
        MockSheaf::new(f.double_dual, f.torsion).map_err(serde::de::Error::custom)
    }
}

impl MockSheaf {
    pub fn new(double_dual: Vec<BundleFactor>, torsion: BTreeMap<String, u32>) -> Result<Self> {
        if let Some((p, _)) = torsion.iter().find(|(_, &l)| l == 0) {
            return Err(TiltError::Invalid(format!("torsion length at {p} must be positive")));
        }
        Ok(MockSheaf { double_dual, torsion })
    }

    pub fn locally_free(double_dual: Vec<BundleFactor>) -> Self {
        MockSheaf { double_dual, torsion: BTreeMap::new() }
    }

    pub fn double_dual(&self) -> &[BundleFactor] {
        &self.double_dual
    }

    pub fn torsion(&self) -> &BTreeMap<String, u32> {
        &self.torsion
    }

    pub fn torsion_length(&self) -> u64 {
        self.torsion.values().map(|&l| u64::from(l)).sum()
    }

    /// A mock sheaf whose graded object is `x`: bundles become the double
    /// dual, each `O_p[-1]` adds one to the length at `p`.
    pub fn from_polystable(x: &PolystableObject) -> Self {
        let mut double_dual = Vec::new();
        let mut torsion = BTreeMap::new();
        for f in &x.factors {
            match f {
                StableFactor::Bundle(b) => double_dual.push(b.clone()),
                StableFactor::Skyscraper { point_id } => *torsion.entry(point_id.clone()).or_insert(0) += 1,
            }
        }
        MockSheaf { double_dual, torsion }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

/// `F ↦ F^∨∨ ⊕ ⊕_p O_p^{⊕l_p}[-1]`.
pub fn sigma_graded(mock: &MockSheaf) -> PolystableObject {
    let mut factors: Vec<StableFactor> = mock.double_dual.iter().cloned().map(StableFactor::Bundle).collect();
    for (p, &l) in &mock.torsion {
        factors.extend((0..l).map(|_| StableFactor::skyscraper(p.clone())));
    }
    PolystableObject { factors }
}

pub fn s_equivalent(x: &PolystableObject, y: &PolystableObject) -> bool {
    x.keys() == y.keys()
}

fn iso_multiset(factors: &[BundleFactor]) -> BTreeMap<&str, usize> {
    let mut out = BTreeMap::new();
    for f in factors {
        *out.entry(f.iso_id.as_str()).or_insert(0) += 1;
    }
    out
}

pub fn uhlenbeck_equivalent(m1: &MockSheaf, m2: &MockSheaf) -> bool {
    iso_multiset(&m1.double_dual) == iso_multiset(&m2.double_dual) && m1.torsion == m2.torsion
}

pub fn total_class(x: &PolystableObject, s: &SurfaceData) -> KClass {
    x.factors.iter().fold(KClass::zero(s), |acc, f| &acc + &f.class(s))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PolystableViolation {
    TotalClass {
        expected: KClass,
        found: KClass,
    },
    NonPositiveRank {
        iso_id: String,
        #[serde(with = "literal")]
        rank: Rational,
    },
    SlopeMismatch {
        iso_id: String,
        expected: Slope,
        found: Slope,
    },
    NegativeDiscriminant {
        iso_id: String,
        #[serde(with = "literal")]
        value: Rational,
    },
}

impl fmt::Display for PolystableViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolystableViolation::TotalClass { expected, found } => {
                write!(f, "total class {found} differs from {expected}")
            }
            PolystableViolation::NonPositiveRank { iso_id, rank } => {
                write!(f, "bundle {iso_id} has rank {}", format_rational(rank))
            }
            PolystableViolation::SlopeMismatch { iso_id, expected, found } => {
                write!(f, "bundle {iso_id} has slope {found}, wall needs {expected}")
            }
            PolystableViolation::NegativeDiscriminant { iso_id, value } => {
                write!(f, "bundle {iso_id} has discriminant {}", format_rational(value))
            }
        }
    }
}

/// Checks that `x` is a decomposition of `v` into wall-slope bundles and shifted skyscrapers.
pub fn validate_polystable(
    x: &PolystableObject,
    v: &KClass,
    b: &DivisorClass,
    s: &SurfaceData,
) -> Result<Vec<PolystableViolation>> {
    let beta0 = Slope::Finite(vertical_beta(v, b, s)?);
    let mut out = Vec::new();
    let total = total_class(x, s);
    if &total != v {
        out.push(PolystableViolation::TotalClass { expected: v.clone(), found: total });
    }
    for f in &x.factors {
        let StableFactor::Bundle(bf) = f else { continue };
        let id = bf.iso_id.clone();
        if !bf.cls.ch0.is_positive() {
            out.push(PolystableViolation::NonPositiveRank { iso_id: id, rank: bf.cls.ch0.clone() });
            continue;
        }
        let mu = mu_b(&bf.cls, b, s)?;
        if mu != beta0 {
            out.push(PolystableViolation::SlopeMismatch { iso_id: id.clone(), expected: beta0.clone(), found: mu });
        }
        let disc = discriminant(&bf.cls, s)?;
        if disc < int(0) {
            out.push(PolystableViolation::NegativeDiscriminant { iso_id: id, value: disc });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn s1() -> SurfaceData {
        SurfaceData::s1()
    }

    fn bundle(id: &str, r: i64, c: i64, ch2: Rational) -> BundleFactor {
        BundleFactor::new(id, KClass::from_ints(r, &[c], ch2))
    }

    fn mock(dd: Vec<BundleFactor>, t: &[(&str, u32)]) -> MockSheaf {
        MockSheaf::new(dd, t.iter().map(|(p, l)| (p.to_string(), *l)).collect()).unwrap()
    }

    #[test]
    fn sigma_graded_examples() {
        let dd = vec![bundle("E", 2, 0, int(0))];
        let m = mock(dd.clone(), &[]);
        let g = sigma_graded(&m);
        assert_eq!(g.factors, vec![StableFactor::Bundle(dd[0].clone())]);

        let g = sigma_graded(&mock(dd.clone(), &[("p", 2)]));
        assert_eq!(g.skyscraper_count(), 2);
        assert_eq!(g.keys()[&FactorKey::Point("p".into())], 2);

        let g = sigma_graded(&mock(dd, &[("p", 1), ("q", 3)]));
        assert_eq!(g.skyscraper_count(), 4);
        assert_eq!(g.keys()[&FactorKey::Point("p".into())], 1);
        assert_eq!(g.keys()[&FactorKey::Point("q".into())], 3);
    }

    #[test]
    fn zero_length_rejected() {
        assert!(MockSheaf::new(vec![], [("p".to_string(), 0)].into_iter().collect()).is_err());
        assert!(MockSheaf::from_json(r#"{"double_dual":[],"torsion":{"p":0}}"#).is_err());
    }

    #[test]
    fn s_equivalence_examples() {
        let a = StableFactor::bundle("A", KClass::from_ints(1, &[0], int(0)));
        let b = StableFactor::bundle("B", KClass::from_ints(1, &[0], int(0)));
        let p = StableFactor::skyscraper("p");
        let x = PolystableObject::new(vec![a.clone(), p.clone()]);
        assert!(s_equivalent(&x, &x));
        assert!(s_equivalent(&x, &PolystableObject::new(vec![p.clone(), a.clone()])));
        assert!(!s_equivalent(&x, &PolystableObject::new(vec![b.clone(), p.clone()])));
        assert!(!s_equivalent(&x, &PolystableObject::new(vec![a.clone(), a, p])));
    }

    #[test]
    fn uhlenbeck_examples() {
        let dd = vec![bundle("E", 2, 0, int(0))];
        let m = mock(dd.clone(), &[("p", 2)]);
        assert!(uhlenbeck_equivalent(&m, &m.clone()));
        assert!(!uhlenbeck_equivalent(&m, &mock(dd.clone(), &[("p", 1), ("q", 1)])));
        assert!(!uhlenbeck_equivalent(&m, &mock(vec![bundle("F", 2, 0, int(0))], &[("p", 2)])));
        let two = vec![bundle("A", 1, 0, int(0)), bundle("B", 1, 0, int(0))];
        let swapped = vec![two[1].clone(), two[0].clone()];
        assert!(uhlenbeck_equivalent(&mock(two, &[]), &mock(swapped, &[])));
    }

    #[test]
    fn total_class_examples() {
        let s = s1();
        let one = PolystableObject::new(vec![StableFactor::Bundle(bundle("E", 2, 0, int(-1)))]);
        assert_eq!(total_class(&one, &s), KClass::from_ints(2, &[0], int(-1)));
        let two =
            PolystableObject::new(vec![StableFactor::Bundle(bundle("E", 2, 0, int(0))), StableFactor::skyscraper("p")]);
        assert_eq!(total_class(&two, &s), KClass::from_ints(2, &[0], int(-1)));
        let pts = PolystableObject::new((0..3).map(|i| StableFactor::skyscraper(format!("p{i}"))).collect());
        assert_eq!(total_class(&pts, &s), KClass::from_ints(0, &[0], int(-3)));
    }

    #[test]
    fn graded_class_drops_by_length() {
        let s = s1();
        let dd = vec![bundle("A", 1, 0, int(0)), bundle("B", 1, 0, rat(-1, 1))];
        let m = mock(dd.clone(), &[("p", 2), ("q", 1)]);
        let bundles = PolystableObject::new(dd.into_iter().map(StableFactor::Bundle).collect());
        let expected = &total_class(&bundles, &s) - &KClass::from_ints(0, &[0], int(3));
        assert_eq!(total_class(&sigma_graded(&m), &s), expected);
    }

    #[test]
    fn validate_examples() {
        let s = s1();
        let b = s.zero_divisor();
        let v = KClass::from_ints(2, &[0], int(-1));
        let ok =
            PolystableObject::new(vec![StableFactor::Bundle(bundle("E", 2, 0, int(0))), StableFactor::skyscraper("p")]);
        assert!(validate_polystable(&ok, &v, &b, &s).unwrap().is_empty());

        let tilted = PolystableObject::new(vec![
            StableFactor::Bundle(bundle("L", 1, 1, rat(1, 2))),
            StableFactor::Bundle(bundle("M", 1, -1, rat(-3, 2))),
        ]);
        let errs = validate_polystable(&tilted, &v, &b, &s).unwrap();
        assert_eq!(errs.iter().filter(|e| matches!(e, PolystableViolation::SlopeMismatch { .. })).count(), 2);
        assert!(!errs.iter().any(|e| matches!(e, PolystableViolation::TotalClass { .. })));

        let short = PolystableObject::new(vec![StableFactor::Bundle(bundle("E", 2, 0, int(0)))]);
        let errs = validate_polystable(&short, &v, &b, &s).unwrap();
        assert!(matches!(errs.as_slice(), [PolystableViolation::TotalClass { .. }]));

        // ch2 = 1 gives discriminant -4
        let bad = PolystableObject::new(vec![
            StableFactor::Bundle(bundle("E", 2, 0, int(1))),
            StableFactor::skyscraper("p"),
            StableFactor::skyscraper("q"),
        ]);
        let errs = validate_polystable(&bad, &v, &b, &s).unwrap();
        assert!(matches!(errs.as_slice(), [PolystableViolation::NegativeDiscriminant { .. }]));
    }

    #[test]
    fn from_polystable_is_a_preimage() {
        let x = PolystableObject::new(vec![
            StableFactor::skyscraper("q"),
            StableFactor::Bundle(bundle("E", 2, 0, int(0))),
            StableFactor::skyscraper("p"),
            StableFactor::skyscraper("q"),
        ]);
        let m = MockSheaf::from_polystable(&x);
        assert_eq!(m.torsion_length(), 3);
        assert!(s_equivalent(&sigma_graded(&m), &x));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"double_dual":[{"iso_id":"E","cls":{"ch0":"2","ch1":["0"],"ch2":"0"}}],"torsion":{"p1":2}}"#;
        let m = MockSheaf::from_json(text).unwrap();
        assert_eq!(m.torsion_length(), 2);
        let back = serde_json::to_string(&m).unwrap();
        assert_eq!(MockSheaf::from_json(&back).unwrap(), m);
        let g = sigma_graded(&m);
        let json = serde_json::to_string(&g).unwrap();
        assert!(json.contains(r#""kind":"skyscraper""#));
        assert_eq!(PolystableObject::from_json(&json).unwrap(), g);
    }
}
