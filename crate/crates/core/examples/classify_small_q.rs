//! Enumerates every Kakeya line set for a small q and prints the census.
//!
//! cargo run --release --example classify_small_q -- 3

use conic_kakeya::classify::{enumerate_all, verify_remark_census, verify_theorem, SearchConfig};
use conic_kakeya::kakeya::minimum_size;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u32 = std::env::args().nth(1).map_or(Ok(3), |s| s.parse())?;
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = enumerate_all(&SearchConfig::new(q).with_workers(workers))?;
    println!(
        "q = {q}: {} line sets in {} ms, minimum size {:?} (predicted {})",
        report.sets_enumerated,
        report.wall_time_ms,
        report.min_size,
        minimum_size(q)
    );
    for (size, count) in &report.size_histogram {
        println!("  size {size:>3}: {count}");
    }
    println!("graph types up to the label limit {}:", report.label_limit);
    for e in report.census.iter().filter(|e| e.size <= report.label_limit) {
        let name = e.name.clone().unwrap_or_else(|| format!("0x{}", e.graph));
        println!("  size {:>3} {:>6} count {:>7}", e.size, name, e.count);
        for l in &e.labels {
            println!("      {:?} k={:?} {:?}: {}", l.variant, l.k, l.detail, l.count);
        }
    }
    let cert = verify_theorem(&report);
    println!("theorem ({}): {} below bound, verified = {}", cert.theorem, cert.below_threshold, cert.verified);
    if q <= 4 {
        let remark = verify_remark_census(&report)?;
        println!("census check verified = {}", remark.verified);
        for m in &remark.mismatches {
            println!("  mismatch: {m}");
        }
    }
    Ok(())
}
