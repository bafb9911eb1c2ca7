use tiltlab::curve::{complement_report, curve_genus, flenner_min_degree, least_seshadri_rank, CurveKClass};
use tiltlab::rational::int;
use tiltlab::{KClass, SurfaceData};

fn main() -> tiltlab::Result<()> {
    let s = SurfaceData::s1();
    let v = KClass::from_ints(2, &[0], int(-1));
    let a = flenner_min_degree(2, &s)?.max(4) as u32;
    println!("curve in |{a}H| has genus {}", curve_genus(a, &s)?);

    for m in 1..=3 {
        let rep = complement_report(&v, a, m, &s)?;
        println!("m={m}: G = {:?}, χ(v|C·G) = {}", rep.g_class.to_pair(), rep.chi_v_g);
    }

    let f = CurveKClass::from_ints(2, 1);
    let (r, d) = least_seshadri_rank(&f, 1, &2.into())?;
    println!("least rank orthogonal to (2,1) on genus 2: ({r}, {d})");
    Ok(())
}
