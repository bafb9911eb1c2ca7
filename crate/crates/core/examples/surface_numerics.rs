use tiltlab::{DivisorClass, SurfaceData};

fn main() -> tiltlab::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/s2.json");
    let s = SurfaceData::load(path)?;
    println!("rank {} H² = {}", s.rank(), s.degree());
    println!("H·K = {}", s.intersect(s.h(), s.k())?);

    let f = DivisorClass::from_ints(&[1, 0]);
    println!("F² = {}, H·F = {}", s.intersect(&f, &f)?, s.h_dot(&f)?);

    let degenerate = SurfaceData::new(vec![vec![1]], &[0], &[-3], 1)?;
    for v in degenerate.validate() {
        println!("violation: {v}");
    }
    Ok(())
}
