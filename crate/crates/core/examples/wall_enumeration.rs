use tiltlab::rational::int;
use tiltlab::walls::{check_nested, enumerate_candidate_walls, numerical_wall, Locus, Region, SearchBounds};
use tiltlab::{KClass, SurfaceData};

fn main() -> tiltlab::Result<()> {
    let s = SurfaceData::s1();
    let b = s.zero_divisor();
    // ideal sheaf of a point
    let v = KClass::from_ints(1, &[0], int(-1));

    let o_minus_1 = KClass::line_bundle(-1, &s);
    println!("wall of O(-1): {}", numerical_wall(&v, &o_minus_1, &b, &s)?.locus);

    let region = Region::new(int(-3), int(1), int(3));
    let walls = enumerate_candidate_walls(&v, &b, &s, &region, SearchBounds { max_rank: 2, max_c: 4 })?;
    let semis = walls.iter().filter(|w| matches!(w.locus, Locus::Semicircle { .. })).count();
    println!("{} walls, {} semicircles", walls.len(), semis);
    for w in walls.iter().take(5) {
        println!("  {} from {}", w.locus, w.witness);
    }
    println!("crossings: {}", check_nested(&walls, &v, &b, &s)?.len());
    Ok(())
}
