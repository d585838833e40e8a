//! Exhaustive checks of the triangle-free extremal results and the clique
//! lemma, plus the sharpness graphs.
//!
//! cargo run --release --example extremal_oracles

use conic_kakeya::cliques::{hanson_toft_oracle, main_lemma_oracle, mantel_oracle, sporadic_graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=7 {
        let m = mantel_oracle(n)?;
        let h = hanson_toft_oracle(n)?;
        let l = main_lemma_oracle(n)?;
        println!(
            "n = {n}: max triangle-free edges {} (bound {}), stability violations {}, clique lemma: {} qualifying, {} violations",
            m.max_triangle_free_edges, m.bound, h.violations, l.qualifying_graphs, l.violations
        );
        if let Some(c) = l.max_c_non_bipartite {
            println!("        largest C over non-bipartite edge-disjoint graphs: {c} (threshold {})", l.threshold);
        }
    }
    for n in [5, 7, 9] {
        let g = sporadic_graph(n, (n - 3) / 2)?;
        println!("sporadic graph n = {n}: {} edges, C = {}, bipartite {}", g.edge_count(), g.c_value(), g.is_bipartite());
    }
    Ok(())
}
