//! Recognizes random line sets, or a JSON line-set file given as argument.
//!
//! cargo run --release --example recognize_line_set -- [file.json]

use conic_kakeya::kakeya::{kakeya_points, recognize, KakeyaLineSet, LineSetJson};
use conic_kakeya::projective::ProjectiveSpace;
use conic_kakeya::quadrics::Conic;
use conic_kakeya::GaloisField;
use rand::SeedableRng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sets: Vec<KakeyaLineSet> = match std::env::args().nth(1) {
        Some(path) => {
            let j: LineSetJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            vec![KakeyaLineSet::from_json(&j)?]
        }
        None => {
            let f = GaloisField::of_order(3)?;
            let conic = Conic::standard(&f);
            let mut rng = rand::rngs::StdRng::seed_from_u64(7);
            (0..8).map(|_| KakeyaLineSet::random(&f, &conic, &mut rng)).collect()
        }
    };
    let space = ProjectiveSpace::new(sets[0].field().clone());
    for l in &sets {
        let label = recognize(&space, l);
        println!("size {:>2}: {}", kakeya_points(l).size(), label.to_json());
        if let Some(back) = label.regenerate(l.field(), l.conic()) {
            assert_eq!(&back, l);
        }
    }
    Ok(())
}
