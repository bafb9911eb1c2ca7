use tiltlab::rational::{int, rat};
use tiltlab::tilt::{central_charge, mu_b, tilt_slope, vertical_beta, StabilityParams};
use tiltlab::{KClass, SurfaceData};

fn main() -> tiltlab::Result<()> {
    let s = SurfaceData::s1();
    let v = KClass::from_ints(2, &[1], int(0));
    let b = s.zero_divisor();
    println!("mu_B = {}", mu_b(&v, &b, &s)?);
    println!("beta0 = {}", vertical_beta(&v, &b, &s)?);

    for (alpha, beta) in [(int(1), int(0)), (rat(1, 2), rat(1, 2)), (int(2), int(-1))] {
        let p = StabilityParams::new(alpha, beta, b.clone())?;
        let z = central_charge(&v, &p, &s)?;
        println!("alpha={} beta={}: Z = {} + {}i, nu = {}", p.alpha(), p.beta(), z.re, z.im, tilt_slope(&v, &p, &s)?);
    }
    Ok(())
}
