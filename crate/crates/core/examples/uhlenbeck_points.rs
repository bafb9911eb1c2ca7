use std::collections::BTreeMap;

use tiltlab::moduli::{s_equivalent, sigma_graded, uhlenbeck_equivalent, BundleFactor, MockSheaf};
use tiltlab::rational::int;
use tiltlab::{KClass, SurfaceData};

fn sheaf(id: &str, torsion: &[(&str, u32)]) -> MockSheaf {
    let e = BundleFactor::new(id, KClass::from_ints(2, &[0], int(0)));
    let t: BTreeMap<String, u32> = torsion.iter().map(|(p, l)| (p.to_string(), *l)).collect();
    MockSheaf::new(vec![e], t).expect("positive lengths")
}

fn main() {
    let s = SurfaceData::s1();
    let f = sheaf("E", &[("p", 2)]);
    let g = sigma_graded(&f);
    println!("{} factors, total {}", g.factors.len(), tiltlab::moduli::total_class(&g, &s));

    let others = [
        ("same", sheaf("E", &[("p", 2)])),
        ("split support", sheaf("E", &[("p", 1), ("q", 1)])),
        ("twin bundle", sheaf("E'", &[("p", 2)])),
    ];
    for (name, other) in others {
        println!(
            "{name}: uhlenbeck {} / s-equivalent {}",
            uhlenbeck_equivalent(&f, &other),
            s_equivalent(&g, &sigma_graded(&other))
        );
    }
}
