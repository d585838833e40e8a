//! The intersection graph of a random line set and the clique form of the
//! size formula.
//!
//! cargo run --example intersection_graph -- 5 42

use conic_kakeya::kakeya::{kakeya_points, KakeyaLineSet};
use conic_kakeya::quadrics::Conic;
use conic_kakeya::GaloisField;
use rand::SeedableRng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let q: u32 = args.next().map_or(Ok(5), |s| s.parse())?;
    let seed: u64 = args.next().map_or(Ok(42), |s| s.parse())?;
    let f = GaloisField::of_order(q)?;
    let conic = Conic::standard(&f);
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let l = KakeyaLineSet::random(&f, &conic, &mut rng);
    let g = l.gamma();
    println!("edges: {:?}", g.edges());
    println!("maximal clique sizes: {:?}", g.maximal_cliques().iter().map(|c| c.count_ones()).collect::<Vec<_>>());
    println!("edge-disjoint maximal cliques: {}", g.edge_disjoint());
    let qq = q as usize;
    println!(
        "q(q+1) - C = {} - {} = {}; direct count {}",
        qq * (qq + 1),
        g.c_value(),
        qq * (qq + 1) - g.c_value(),
        kakeya_points(&l).size()
    );
    Ok(())
}
