//! Points, lines and incidence in PG(3,q).
//!
//! cargo run --example projective_incidence -- 3

use conic_kakeya::projective::{enumerate_points, line_count, point_count, Point, ProjLine, ProjectiveSpace};
use conic_kakeya::GaloisField;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u32 = std::env::args().nth(1).map_or(Ok(3), |s| s.parse())?;
    let f = GaloisField::of_order(q)?;
    let space = ProjectiveSpace::new(f.clone());
    let points = enumerate_points::<4>(&f);
    println!("PG(3,{q}): {} points (expected {}), {} lines (expected {})",
        points.len(), point_count(q, 3), space.lines().len(), line_count(q));
    let a = Point::from_codes(&f, [1, 0, 0, 0])?;
    let b = Point::from_codes(&f, [0, 1, 0, 1])?;
    let l = ProjLine::through(&f, &a, &b)?;
    println!("line through {:?} and {:?}: rows {:?}", a.codes(), b.codes(), l.to_codes());
    println!("  infinite point {:?}", l.infinite_point(&f).map(|p| p.codes()));
    let through_a = space.lines_through(&a).count();
    println!("{through_a} lines through {:?}", a.codes());
    let skew = space.lines().iter().filter(|m| l.is_skew_to(&f, m)).count();
    println!("{skew} lines skew to it");
    Ok(())
}
