//! The secant construction: admissible secants through P_q and the sizes
//! they give.
//!
//! cargo run --example secant_variant -- 4 2

use conic_kakeya::kakeya::{construct_secant_variant, enumerate_secant_choices, kakeya_points, secant_variant_size};
use conic_kakeya::projective::ProjectiveSpace;
use conic_kakeya::quadrics::{standard_quadric, Conic};
use conic_kakeya::GaloisField;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let q: u32 = args.next().map_or(Ok(4), |s| s.parse())?;
    let k: usize = args.next().map_or(Ok(q as usize / 2), |s| s.parse())?;
    let f = GaloisField::of_order(q)?;
    let space = ProjectiveSpace::new(f.clone());
    let conic = Conic::standard(&f);
    let h = standard_quadric(&space);
    let choices = enumerate_secant_choices(&space, &conic, k, &h)?;
    println!("q = {q}, k = {k}: {} admissible secants, predicted size {}", choices.len(), secant_variant_size(q, k as u32));
    for c in &choices {
        let l = construct_secant_variant(&space, &conic, k, &h, &c.line)?;
        let g = l.gamma();
        println!(
            "  {:<11} second point {:?}: size {}, graph C = {}, {} edges",
            c.detail.name(),
            c.second_point.codes(),
            kakeya_points(&l).size(),
            g.c_value(),
            g.edge_count()
        );
    }
    Ok(())
}
