//! Isomorphism classes of small graphs and their clique values.
//!
//! cargo run --release --example graph_census -- 5

use std::collections::BTreeMap;

use conic_kakeya::cliques::{enumerate_graphs, GraphFilter};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(5), |s| s.parse())?;
    let all = enumerate_graphs(n, GraphFilter::All)?;
    let disjoint = enumerate_graphs(n, GraphFilter::EdgeDisjointCliques)?;
    println!("{n} vertices: {} graphs, {} with edge-disjoint maximal cliques", all.len(), disjoint.len());
    let mut by_c: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for g in &disjoint {
        by_c.entry(g.c_value()).or_default().push(format!("{:?}", g.edges()));
    }
    for (c, gs) in &by_c {
        println!("C = {c}: {} graphs", gs.len());
        if *c + 2 >= n * n / 4 {
            for g in gs {
                println!("    {g}");
            }
        }
    }
    Ok(())
}
