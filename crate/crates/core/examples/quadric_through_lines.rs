//! The hyperbolic quadric through the standard conic and two skew lines.
//!
//! cargo run --example quadric_through_lines -- 5

use conic_kakeya::projective::ProjectiveSpace;
use conic_kakeya::quadrics::{standard_frame_lines, unique_quadric_through, Conic, QuadraticForm};
use conic_kakeya::GaloisField;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u32 = std::env::args().nth(1).map_or(Ok(5), |s| s.parse())?;
    let f = GaloisField::of_order(q)?;
    let space = ProjectiveSpace::new(f.clone());
    let conic = Conic::standard(&f);
    let (m, m2) = standard_frame_lines(&f);
    let h = unique_quadric_through(&space, &conic, &m, &m2)?;
    println!("quadric coefficients (x0x0, x0x1, ..., x3x3): {:?}", h.form().codes());
    let one = f.element(1);
    let minus = f.neg(one);
    let expected = QuadraticForm::from_terms(&f, 4, &[(0, 1, one), (2, 2, one), (1, 3, minus), (2, 3, minus)]);
    println!("equals X0X1 + X2^2 - X1X3 - X2X3 up to scalar: {}", h.form().same_up_to_scalar(&f, &expected));
    println!("{} points, reguli of sizes {} and {}", h.points().len(), h.regulus(0).len(), h.regulus(1).len());
    println!("frame lines lie in reguli {:?} and {:?}", h.regulus_of(&m), h.regulus_of(&m2));
    Ok(())
}
