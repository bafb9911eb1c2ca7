use tiltlab::plot::write_plot;
use tiltlab::rational::int;
use tiltlab::walls::{enumerate_candidate_walls, Region, SearchBounds};
use tiltlab::{KClass, SurfaceData};

fn main() -> tiltlab::Result<()> {
    let s = SurfaceData::s1();
    let v = KClass::from_ints(1, &[0], int(-1));
    let region = Region::new(int(-3), int(1), int(3));
    let walls = enumerate_candidate_walls(&v, &s.zero_divisor(), &s, &region, SearchBounds { max_rank: 2, max_c: 4 })?;

    let out = std::env::temp_dir().join("tiltlab_walls.svg");
    write_plot(&walls, &region, &out)?;
    println!("wrote {} walls to {}", walls.len(), out.display());
    Ok(())
}
