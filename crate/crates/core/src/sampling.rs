//! Seeded generators for randomized sweeps.

use std::collections::BTreeMap;

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kclass::KClass;
use crate::moduli::{BundleFactor, MockSheaf, PolystableObject, StableFactor};
use crate::rational::{half, int, Rational};
use crate::surface::{DivisorClass, SurfaceData};
use crate::tilt::discriminant;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_divisor(rng: &mut SeededRng, s: &SurfaceData, bound: i64) -> DivisorClass {
    let coords: Vec<i64> = (0..s.rank()).map(|_| rng.gen_range(-bound..=bound)).collect();
    DivisorClass::from_ints(&coords)
}

fn with_c2(ch0: i64, ch1: DivisorClass, c2: i64, s: &SurfaceData) -> KClass {
    let c1_sq = s.intersect(&ch1, &ch1).expect("generated divisor has surface rank");
    KClass::new(int(ch0), ch1, c1_sq * half() - int(c2))
}

/// An integral class with entries in `[-bound, bound]` (`c2` included).
pub fn integral_class(rng: &mut SeededRng, s: &SurfaceData, bound: i64) -> KClass {
    let ch0 = rng.gen_range(-bound..=bound);
    let ch1 = random_divisor(rng, s, bound);
    let c2 = rng.gen_range(-bound..=bound);
    with_c2(ch0, ch1, c2, s)
}

/// An integral class of rank in `1..=max_rank` satisfying the Bogomolov inequality.
pub fn positive_class(rng: &mut SeededRng, s: &SurfaceData, max_rank: i64, bound: i64) -> KClass {
    let ch0 = rng.gen_range(1..=max_rank.max(1));
    let ch1 = random_divisor(rng, s, bound);
    let c2 = rng.gen_range(-bound..=bound);
    bogomolov_lift(with_c2(ch0, ch1, c2, s), s)
}

/// Raises `c2` until the discriminant is non-negative.
fn bogomolov_lift(mut x: KClass, s: &SurfaceData) -> KClass {
    while discriminant(&x, s).expect("generated class has surface rank").is_negative() {
        x.ch2 -= int(1);
    }
    x
}

/// An integral divisor with `H·D = 0`, built as `H²·E - (H·E)·H`.
pub fn h_orthogonal(rng: &mut SeededRng, s: &SurfaceData, bound: i64) -> DivisorClass {
    let e = random_divisor(rng, s, bound);
    let he = s.h_dot(&e).expect("generated divisor has surface rank");
    &e.scale(&s.degree()) - &s.h().scale(&he)
}

/// A polystable object on the vertical wall of its own total class, returned
/// with that class. Bundle factors share the slope of `ch1 = r·L`.
pub fn vertical_decomposition(rng: &mut SeededRng, s: &SurfaceData, max_factors: usize) -> (KClass, PolystableObject) {
    let l = random_divisor(rng, s, 2);
    let n_bundles = rng.gen_range(1..=max_factors.max(1));
    let mut factors = Vec::new();
    for i in 0..n_bundles {
        let r = rng.gen_range(1..=3i64);
        let ch1 = &l.scale(&int(r)) + &h_orthogonal(rng, s, 1);
        let c2 = rng.gen_range(0..=3);
        let cls = bogomolov_lift(with_c2(r, ch1, c2, s), s);
        factors.push(StableFactor::bundle(format!("E{i}"), cls));
    }
    for _ in 0..rng.gen_range(0..=3) {
        factors.push(StableFactor::skyscraper(format!("p{}", rng.gen_range(0..4))));
    }
    factors.shuffle(rng);
    let x = PolystableObject::new(factors);
    (crate::moduli::total_class(&x, s), x)
}

/// A positive-rank class whose `H`-slope differs from that of `v`.
pub fn off_wall_factor(rng: &mut SeededRng, v: &KClass, s: &SurfaceData) -> KClass {
    let hv = s.h_dot(&v.ch1).expect("class has surface rank");
    loop {
        let a = positive_class(rng, s, 4, 4);
        let ha = s.h_dot(&a.ch1).expect("generated divisor has surface rank");
        if &a.ch0 * &hv != &v.ch0 * ha {
            return a;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PairKind {
    Identical,
    Permuted,
    /// Same Chern data in the double dual, different bundle tokens.
    TwinBundles,
    /// Same total torsion length, different supports.
    MovedTorsion,
    Independent,
}

/// Bundle tokens drawn from a pool where several tokens share one class.
pub struct MockFamily {
    pool: Vec<BundleFactor>,
    twins: Vec<(usize, usize)>,
    points: Vec<String>,
}

impl MockFamily {
    pub fn new(s: &SurfaceData) -> Self {
        let classes = [
            KClass::from_ints(1, &vec![0; s.rank()], int(0)),
            with_c2(2, s.zero_divisor(), 1, s),
            with_c2(2, s.zero_divisor(), 2, s),
        ];
        let mut pool = Vec::new();
        let mut twins = Vec::new();
        for (c, cls) in classes.iter().enumerate() {
            let start = pool.len();
            for t in 0..3 {
                pool.push(BundleFactor::new(format!("V{c}_{t}"), cls.clone()));
            }
            twins.extend([(start, start + 1), (start + 1, start + 2), (start, start + 2)]);
        }
        let points = (0..4).map(|i| format!("p{i}")).collect();
        MockFamily { pool, twins, points }
    }

    fn torsion(&self, rng: &mut SeededRng, total: u32) -> BTreeMap<String, u32> {
        let mut out = BTreeMap::new();
        for _ in 0..total {
            *out.entry(self.points.choose(rng).expect("non-empty").clone()).or_insert(0) += 1;
        }
        out
    }

    pub fn sheaf(&self, rng: &mut SeededRng) -> MockSheaf {
        let n = rng.gen_range(1..=3);
        let dd = (0..n).map(|_| self.pool.choose(rng).expect("non-empty").clone()).collect();
        let len = rng.gen_range(0..=3);
        MockSheaf::new(dd, self.torsion(rng, len)).expect("lengths are positive")
    }

    pub fn pair(&self, rng: &mut SeededRng) -> (MockSheaf, MockSheaf, PairKind) {
        let kinds = [
            PairKind::Identical,
            PairKind::Permuted,
            PairKind::TwinBundles,
            PairKind::MovedTorsion,
            PairKind::Independent,
        ];
        let kind = *kinds.choose(rng).expect("non-empty");
        let m1 = self.sheaf(rng);
        let m2 = match kind {
            PairKind::Identical => m1.clone(),
            PairKind::Permuted => {
                let mut dd = m1.double_dual().to_vec();
                dd.reverse();
                dd.shuffle(rng);
                MockSheaf::new(dd, m1.torsion().clone()).expect("lengths are positive")
            }
            PairKind::TwinBundles => {
                let mut dd = m1.double_dual().to_vec();
                let i = rng.gen_range(0..dd.len());
                let j = self.pool.iter().position(|b| b == &dd[i]).expect("drawn from pool");
                let twin = self.twins.iter().find_map(|&(x, y)| (x == j).then_some(y).or((y == j).then_some(x)));
                dd[i] = self.pool[twin.expect("every token has a twin")].clone();
                MockSheaf::new(dd, m1.torsion().clone()).expect("lengths are positive")
            }
            PairKind::MovedTorsion => {
                let len = m1.torsion_length().max(1) as u32;
                MockSheaf::new(m1.double_dual().to_vec(), self.torsion(rng, len)).expect("lengths are positive")
            }
            PairKind::Independent => self.sheaf(rng),
        };
        (m1, m2, kind)
    }
}

/// `p/q` with `|p| ≤ num` and `1 ≤ q ≤ den`.
pub fn small_rational(rng: &mut SeededRng, num: i64, den: i64) -> Rational {
    Rational::new(rng.gen_range(-num..=num).into(), rng.gen_range(1..=den).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moduli::{s_equivalent, sigma_graded, uhlenbeck_equivalent, validate_polystable};
    use crate::tilt::mu_b;

    #[test]
    fn deterministic() {
        let s = SurfaceData::s2();
        let a: Vec<_> = {
            let mut r = rng(7);
            (0..10).map(|_| integral_class(&mut r, &s, 5)).collect()
        };
        let b: Vec<_> = {
            let mut r = rng(7);
            (0..10).map(|_| integral_class(&mut r, &s, 5)).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn classes_are_integral() {
        for s in [SurfaceData::s1(), SurfaceData::s2()] {
            let mut r = rng(1);
            for _ in 0..100 {
                assert!(integral_class(&mut r, &s, 5).is_integral(&s).unwrap());
                let p = positive_class(&mut r, &s, 4, 4);
                assert!(p.is_integral(&s).unwrap() && p.ch0.is_positive());
                assert!(!discriminant(&p, &s).unwrap().is_negative());
                assert_eq!(s.h_dot(&h_orthogonal(&mut r, &s, 3)).unwrap(), int(0));
            }
        }
    }

    #[test]
    fn decompositions_validate() {
        for s in [SurfaceData::s1(), SurfaceData::s2()] {
            let mut r = rng(3);
            for _ in 0..30 {
                let (v, x) = vertical_decomposition(&mut r, &s, 3);
                let b = s.zero_divisor();
                assert!(validate_polystable(&x, &v, &b, &s).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn off_wall_slopes_differ() {
        let s = SurfaceData::s1();
        let v = KClass::from_ints(2, &[1], int(0));
        let b = s.zero_divisor();
        let mut r = rng(5);
        for _ in 0..30 {
            let a = off_wall_factor(&mut r, &v, &s);
            assert_ne!(mu_b(&a, &b, &s).unwrap(), mu_b(&v, &b, &s).unwrap());
        }
    }

    #[test]
    fn pair_kinds_behave() {
        let s = SurfaceData::s1();
        let fam = MockFamily::new(&s);
        let mut r = rng(11);
        for _ in 0..300 {
            let (m1, m2, kind) = fam.pair(&mut r);
            let u = uhlenbeck_equivalent(&m1, &m2);
            match kind {
                PairKind::Identical | PairKind::Permuted => assert!(u),
                PairKind::TwinBundles => assert!(!u),
                _ => {}
            }
            assert_eq!(u, s_equivalent(&sigma_graded(&m1), &sigma_graded(&m2)));
        }
    }
}
