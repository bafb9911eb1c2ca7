use tiltlab::{KClass, SurfaceData};

fn main() -> tiltlab::Result<()> {
    let s = SurfaceData::s1();
    for n in -3..=3 {
        let l = KClass::line_bundle(n, &s);
        println!("χ(O({n})) = {}", l.chi(&s)?);
    }

    let h = KClass::hyperplane(&s);
    let ideal = KClass::from_ints(1, &[0], tiltlab::rational::int(-1));
    println!("h = {h}");
    println!("χ(I_p, h) = {}", ideal.euler_pairing(&h, &s)?);
    println!("χ(O_p, O_p) = {}", KClass::point(&s).euler_pairing(&KClass::point(&s), &s)?);
    println!("[O_C] for a cubic: {}", KClass::curve(3, &s));
    Ok(())
}
