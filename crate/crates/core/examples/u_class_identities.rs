use tiltlab::rational::{format_rational, int};
use tiltlab::sampling::{integral_class, rng, vertical_decomposition};
use tiltlab::vertical::{curve_power_identity, descent_weights, proportionality_sides, u_class};
use tiltlab::{KClass, SurfaceData};

fn main() -> tiltlab::Result<()> {
    let s = SurfaceData::s1();
    let b = s.zero_divisor();
    let v = KClass::from_ints(2, &[0], int(-1));
    println!("u = {}", u_class(&v, &s)?);

    let mut r = rng(7);
    for _ in 0..3 {
        let a = integral_class(&mut r, &s, 4);
        let sides = proportionality_sides(&a, &v, &int(1), &b, &s)?;
        println!("a = {a}: {} = {}·{}", sides.charge_side, sides.multiplier, sides.chi_a_u);
    }
    for a in 1..=4 {
        println!("w - w(-{a}) = {a}²u: {}", curve_power_identity(&v, a, &s)?);
    }

    let (w, x) = vertical_decomposition(&mut r, &s, 3);
    let factors: Vec<KClass> = x.factors.iter().map(|f| f.class(&s)).collect();
    let weights: Vec<String> = descent_weights(&factors, &w, &b, &s)?.iter().map(format_rational).collect();
    println!("weights for a decomposition of {w}: {}", weights.join(", "));
    Ok(())
}
