//! Sizes of the regulus-split construction for every k.
//!
//! cargo run --example regulus_split -- 7

use conic_kakeya::kakeya::{construct_regulus_split, kakeya_points, minimum_size, regulus_split_size, size_via_cliques};
use conic_kakeya::projective::ProjectiveSpace;
use conic_kakeya::quadrics::{standard_quadric, Conic};
use conic_kakeya::GaloisField;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u32 = std::env::args().nth(1).map_or(Ok(7), |s| s.parse())?;
    let f = GaloisField::of_order(q)?;
    let space = ProjectiveSpace::new(f.clone());
    let conic = Conic::standard(&f);
    let h = standard_quadric(&space);
    println!("q = {q}, minimum size {}", minimum_size(q));
    for k in 0..=q as usize + 1 {
        let l = construct_regulus_split(&f, &conic, k, &h)?;
        let g = l.gamma();
        println!(
            "  k = {k}: size {} (formula {}, via cliques {}), graph has {} edges",
            kakeya_points(&l).size(),
            regulus_split_size(q, k as u32),
            size_via_cliques(&l),
            g.edge_count()
        );
    }
    Ok(())
}
