//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use conic_kakeya::classify::{self, ClassificationReport, SearchConfig};
use conic_kakeya::cliques::{self, enumerate_graphs, GraphFilter};
use conic_kakeya::kakeya::{self, KakeyaLineSet, SecantDetail};
use conic_kakeya::projective::{ProjLine, ProjPoint, ProjectiveSpace};
use conic_kakeya::quadrics::{self, standard_quadric, Conic, QuadraticForm};
use conic_kakeya::GaloisField;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed <= limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

struct Setup {
    f: GaloisField,
    space: ProjectiveSpace,
    conic: Conic,
}

fn setup(q: u32) -> Setup {
    let f = GaloisField::of_order(q).unwrap();
    let space = ProjectiveSpace::new(f.clone());
    let conic = Conic::standard(&f);
    Setup { f, space, conic }
}

/// Affine lines through each conic point, found by scanning the line table.
fn candidate_lines(s: &Setup) -> Vec<Vec<ProjLine>> {
    s.conic
        .points()
        .iter()
        .map(|p| s.space.lines_through(p).filter(|l| !l.at_infinity()).copied().collect())
        .collect()
}

/// Direct count of covered affine points: test every affine point against
/// every line.
fn direct_size(s: &Setup, l: &KakeyaLineSet) -> usize {
    let q = s.f.q();
    let mut n = 0;
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let p = ProjPoint::from_codes(&s.f, [x, y, z, 1]).unwrap();
                if l.lines().iter().any(|line| line.contains(&s.f, &p)) {
                    n += 1;
                }
            }
        }
    }
    n
}

/// Every line set, by odometer over the candidate lists.
fn all_line_sets(s: &Setup) -> Vec<KakeyaLineSet> {
    let cands = candidate_lines(s);
    let mut out = Vec::new();
    let mut idx = vec![0usize; cands.len()];
    loop {
        let lines = idx.iter().enumerate().map(|(i, &j)| cands[i][j]).collect();
        out.push(KakeyaLineSet::new(&s.f, &s.conic, lines).unwrap());
        let mut d = 0;
        loop {
            if d == idx.len() {
                return out;
            }
            idx[d] += 1;
            if idx[d] < cands[d].len() {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

struct Reports {
    by_q: BTreeMap<u32, (ClassificationReport, Duration)>,
}

fn criterion_1(r: &Reports) -> Outcome {
    let limits = [(2, 1), (3, 5), (4, 300)];
    let mut parts = Vec::new();
    for (q, secs) in limits {
        let (rep, t) = &r.by_q[&q];
        let want = kakeya::minimum_size(q);
        ensure(rep.min_size == Some(want), || format!("q={q}: minimum {:?}, expected {want}", rep.min_size))?;
        within(*t, Duration::from_secs(secs), &format!("q={q} enumeration"))?;
        parts.push(format!("q={q}: {want} in {} ms", t.as_millis()));
    }
    // independent oracle: brute-force union of point sets for q = 2, 3
    for q in [2, 3] {
        let s = setup(q);
        let min = all_line_sets(&s).iter().map(|l| direct_size(&s, l)).min().unwrap();
        ensure(min as u64 == kakeya::minimum_size(q), || format!("q={q}: brute-force minimum {min}"))?;
    }
    Ok(parts.join(", "))
}

fn criterion_2(r: &Reports) -> Outcome {
    let mut parts = Vec::new();
    for (q, ks) in [(3u32, vec![2usize]), (4, vec![2])] {
        let cert = classify::verify_theorem(&r.by_q[&q].0);
        ensure(cert.verified && cert.counterexample_count == 0, || format!("q={q}: {} counterexamples", cert.counterexample_count))?;
        ensure(cert.below_threshold > 0, || format!("q={q}: nothing below the bound"))?;
        let total: u64 = cert.per_k.values().sum();
        ensure(total == cert.below_threshold, || format!("q={q}: {total} of {} sets labeled", cert.below_threshold))?;
        let bound = kakeya::theorem_bound(q);
        for (key, count) in &cert.per_k {
            let k: usize = key.rsplit(' ').next().unwrap().parse().unwrap();
            ensure(ks.contains(&k), || format!("q={q}: {count} sets with {key}"))?;
        }
        // the smaller side is (q+1)/2 for odd q; sides q/2 and q/2+1 for even q
        let q1 = q as usize + 1;
        ensure(ks.iter().all(|&k| k == q1 / 2), || "unexpected k".into())?;
        parts.push(format!("q={q}: {} sets below {bound}, k = {ks:?}", cert.below_threshold));
    }
    Ok(parts.join("; "))
}

fn criterion_3() -> Outcome {
    let mut parts = Vec::new();
    for (q, k, want) in [(3u32, 1usize, 9u64), (4, 2, 15)] {
        let s = setup(q);
        ensure(kakeya::theorem_bound(q) == want, || format!("q={q}: bound {}", kakeya::theorem_bound(q)))?;
        let h = standard_quadric(&s.space);
        let choices = kakeya::enumerate_secant_choices(&s.space, &s.conic, k, &h).map_err(|e| e.to_string())?;
        ensure(!choices.is_empty(), || format!("q={q}: no secant choices"))?;
        for c in &choices {
            let l = kakeya::construct_secant_variant(&s.space, &s.conic, k, &h, &c.line).map_err(|e| e.to_string())?;
            let size = direct_size(&s, &l) as u64;
            ensure(size == want, || format!("q={q}: secant {:?} gives {size}", c.line.to_codes()))?;
        }
        parts.push(format!("q={q} k={k}: {} secants, all size {want}", choices.len()));
    }
    Ok(parts.join("; "))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let counts: Vec<usize> = (3..=5).map(|n| enumerate_graphs(n, GraphFilter::All).unwrap().len()).collect();
    ensure(counts == [4, 11, 34], || format!("class counts {counts:?}"))?;
    let all5 = enumerate_graphs(5, GraphFilter::All).unwrap();
    let bad = all5.iter().filter(|g| !g.edge_disjoint()).count();
    ensure(bad == 9, || format!("{bad} graphs fail edge-disjointness"))?;
    let mut dist: BTreeMap<usize, usize> = BTreeMap::new();
    for g in enumerate_graphs(5, GraphFilter::EdgeDisjointCliques).unwrap() {
        *dist.entry(g.c_value()).or_default() += 1;
    }
    let want: BTreeMap<usize, usize> = [(0, 1), (1, 1), (2, 3), (3, 6), (4, 10), (5, 3), (6, 1)].into();
    ensure(dist == want, || format!("C distribution {dist:?}"))?;
    // independent count: minimize every labeled graph over all relabelings
    let perms = cliques::permutations(5);
    let mut seen = BTreeSet::new();
    for code in 0u64..1024 {
        let g = cliques::CliqueGraph::from_code(5, code).unwrap();
        let min = perms.iter().map(|p| g.permuted(p).unwrap().code()).min().unwrap();
        seen.insert(min);
    }
    ensure(seen.len() == 34, || format!("relabeling oracle finds {} classes", seen.len()))?;
    within(start.elapsed(), Duration::from_secs(1), "graph census")?;
    Ok(format!("4/11/34 classes, 9 excluded, C distribution {dist:?}"))
}

fn criterion_5(r: &Reports) -> Outcome {
    let cert = classify::verify_pentagon_excluded(&r.by_q[&4].0).map_err(|e| e.to_string())?;
    ensure(cert.verified && cert.pentagon_count == 0, || format!("{} pentagon sets", cert.pentagon_count))?;
    ensure(cert.sets_examined == 1 << 20, || format!("{} sets examined", cert.sets_examined))?;
    // the pentagon itself is an admissible abstract graph with C = 5
    let c5 = cliques::cycle_graph(5);
    ensure(c5.edge_disjoint() && c5.c_value() == 5, || "C5 sanity".into())?;
    Ok(format!("0 of {} sets ({} of size 15)", cert.sets_examined, cert.size_15_examined))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        let s = setup(q);
        let h = standard_quadric(&s.space);
        for k in 0..=q as usize + 1 {
            let l = kakeya::construct_regulus_split(&s.f, &s.conic, k, &h).map_err(|e| e.to_string())?;
            let size = direct_size(&s, &l) as u64;
            let want = kakeya::regulus_split_size(q, k as u32);
            ensure(size == want, || format!("q={q} k={k}: regulus split size {size}, formula {want}"))?;
            checked += 1;
        }
        for k in 0..=q as usize {
            let choices = kakeya::enumerate_secant_choices(&s.space, &s.conic, k, &h).map_err(|e| e.to_string())?;
            ensure(!choices.is_empty(), || format!("q={q} k={k}: no secant"))?;
            let want = kakeya::secant_variant_size(q, k as u32);
            for c in &choices {
                let l = kakeya::construct_secant_variant(&s.space, &s.conic, k, &h, &c.line).map_err(|e| e.to_string())?;
                let size = kakeya::kakeya_points(&l).size() as u64;
                ensure(size == want, || format!("q={q} k={k}: secant size {size}, formula {want}"))?;
                checked += 1;
            }
            // direct count on one representative per detail class
            let mut reps: BTreeMap<SecantDetail, &kakeya::SecantChoice> = BTreeMap::new();
            for c in &choices {
                reps.entry(c.detail).or_insert(c);
            }
            for c in reps.values() {
                let l = kakeya::construct_secant_variant(&s.space, &s.conic, k, &h, &c.line).unwrap();
                ensure(direct_size(&s, &l) as u64 == want, || format!("q={q} k={k}: direct count differs"))?;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(30), "formula checks")?;
    Ok(format!("{checked} constructions over q in {{2,3,4,5,7,8,9}}"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let s = setup(2);
    let all = all_line_sets(&s);
    ensure(all.len() == 64, || format!("{} sets at q=2", all.len()))?;
    for l in &all {
        let d = direct_size(&s, l);
        ensure(kakeya::size_via_cliques(l) == d && kakeya::kakeya_points(l).size() == d, || "q=2 mismatch".into())?;
        ensure(l.gamma().edge_disjoint(), || "q=2 graph without edge-disjoint cliques".into())?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b616b65);
    for q in [3u32, 4, 5] {
        let s = setup(q);
        for _ in 0..10_000 {
            let l = KakeyaLineSet::random(&s.f, &s.conic, &mut rng);
            let direct = kakeya::kakeya_points(&l).size();
            let g = l.gamma();
            ensure(kakeya::size_via_cliques(&l) == direct, || format!("q={q}: identity fails for {:?}", l.to_json()))?;
            ensure(g.edge_disjoint(), || format!("q={q}: cliques share an edge"))?;
        }
    }
    within(start.elapsed(), Duration::from_secs(60), "identity checks")?;
    Ok("64 sets at q=2, 10000 random sets at each of q=3,4,5".into())
}

fn check_quadric(s: &Setup, m: &ProjLine, m2: &ProjLine) -> Result<(), String> {
    let q = s.f.q() as usize;
    let dim = quadrics::quadric_nullspace_dim(&s.f, &s.conic, m, m2);
    ensure(dim == 1, || format!("nullspace dimension {dim}"))?;
    let h = quadrics::unique_quadric_through(&s.space, &s.conic, m, m2).map_err(|e| e.to_string())?;
    ensure(h.points().len() == (q + 1) * (q + 1), || "point count".into())?;
    ensure(h.regulus(0).len() == q + 1 && h.regulus(1).len() == q + 1, || "line count".into())?;
    ensure(h.points_at_infinity() == s.conic.points(), || "section at infinity".into())?;
    ensure(h.contains_line(&s.f, m) && h.contains_line(&s.f, m2), || "lines not on quadric".into())?;
    Ok(())
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for q in [2u32, 3, 4] {
        let s = setup(q);
        let cands = candidate_lines(&s);
        let mut pairs = 0;
        for i in 0..cands.len() {
            for j in i + 1..cands.len() {
                for a in &cands[i] {
                    for b in &cands[j] {
                        if a.is_skew_to(&s.f, b) {
                            check_quadric(&s, a, b).map_err(|e| format!("q={q}: {e}"))?;
                            pairs += 1;
                        }
                    }
                }
            }
        }
        parts.push(format!("q={q}: {pairs} pairs"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x71756164);
    for q in [5u32, 7, 8] {
        let s = setup(q);
        let cands = candidate_lines(&s);
        let mut pairs = 0;
        while pairs < 1000 {
            let i = rng.gen_range(0..cands.len());
            let j = rng.gen_range(0..cands.len());
            if i == j {
                continue;
            }
            let a = &cands[i][rng.gen_range(0..cands[i].len())];
            let b = &cands[j][rng.gen_range(0..cands[j].len())];
            if a.is_skew_to(&s.f, b) {
                check_quadric(&s, a, b).map_err(|e| format!("q={q}: {e}"))?;
                pairs += 1;
            }
        }
        parts.push(format!("q={q}: {pairs} sampled"));
    }
    // frame example
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        let s = setup(q);
        let h = standard_quadric(&s.space);
        let one = s.f.element(1);
        let minus = s.f.neg(one);
        let want = QuadraticForm::from_terms(&s.f, 4, &[(0, 1, one), (2, 2, one), (1, 3, minus), (2, 3, minus)]);
        ensure(h.form().same_up_to_scalar(&s.f, &want), || format!("q={q}: frame quadric {:?}", h.form().codes()))?;
    }
    within(start.elapsed(), Duration::from_secs(120), "quadric checks")?;
    parts.push("frame quadric reproduced".into());
    Ok(parts.join(", "))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for n in 2..=7 {
        let m = cliques::mantel_oracle(n).map_err(|e| e.to_string())?;
        ensure(m.violations == 0 && m.max_triangle_free_edges == n * n / 4, || format!("Mantel n={n}: {m:?}"))?;
        let h = cliques::hanson_toft_oracle(n).map_err(|e| e.to_string())?;
        ensure(h.violations == 0, || format!("Hanson-Toft n={n}: {} violations", h.violations))?;
        let l = cliques::main_lemma_oracle(n).map_err(|e| e.to_string())?;
        ensure(l.violations == 0, || format!("main lemma n={n}: {} violations", l.violations))?;
        total += m.graphs_checked;
    }
    for (n, edges, c) in [(5usize, 6usize, 5usize), (7, 11, 10)] {
        for w in 0..=(n - 3) / 2 {
            let g = cliques::sporadic_graph(n, w).map_err(|e| e.to_string())?;
            ensure(g.edge_count() == edges && g.c_value() == c, || format!("sporadic n={n}: {} edges, C={}", g.edge_count(), g.c_value()))?;
            ensure(g.edge_disjoint() && !g.is_bipartite(), || format!("sporadic n={n}: structure"))?;
        }
    }
    within(start.elapsed(), Duration::from_secs(120), "oracles")?;
    Ok(format!("{total} labeled graphs, sporadic n=5,7 match"))
}

fn run(name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let r = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let ms = start.elapsed().as_millis();
    match r {
        Ok(detail) => {
            println!("PASS {name}: {detail} [{ms} ms]");
            true
        }
        Err(e) => {
            println!("FAIL {name}: {e} [{ms} ms]");
            false
        }
    }
}

fn main() {
    let mut by_q = BTreeMap::new();
    for q in [2u32, 3, 4] {
        let start = Instant::now();
        let rep = classify::enumerate_all(&SearchConfig::new(q)).expect("enumeration");
        by_q.insert(q, (rep, start.elapsed()));
    }
    let reports = Reports { by_q };
    let results = [
        run("1 minimum sizes", || criterion_1(&reports)),
        run("2 theorem verification", || criterion_2(&reports)),
        run("3 sharpness witnesses", criterion_3),
        run("4 graph censuses", criterion_4),
        run("5 pentagon exclusion", || criterion_5(&reports)),
        run("6 size formulas", criterion_6),
        run("7 coverage/clique identity", criterion_7),
        run("8 unique quadric", criterion_8),
        run("9 extremal-graph oracles", criterion_9),
    ];
    let passed = results.iter().filter(|&&r| r).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
