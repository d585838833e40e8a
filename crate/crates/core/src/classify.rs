//! Exhaustive enumeration of Kakeya line sets for small `q`, graph-type
//! censuses, and the certificates for the classification results.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use serde::Serialize;

use crate::cliques::{self, Canonicalizer, CliqueGraph};
use crate::error::{Error, Result};
use crate::gf::GaloisField;
use crate::kakeya::{self, KakeyaLineSet, LineSetJson, Recognizer, SecantDetail, Variant};
use crate::projective::{AffinePoint, ProjLine, ProjectiveSpace};
use crate::quadrics::Conic;

/// Largest `q` whose affine points fit the 128-bit coverage sets.
pub const MAX_SEARCH_Q: u32 = 5;
/// Largest `q` enumerated without a size threshold.
pub const MAX_FULL_Q: u32 = 4;
/// Stored example line sets per list in a report.
const MAX_STORED: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub q: u32,
    /// Only sets with `|K(L)| < threshold` are enumerated.
    pub threshold: Option<u64>,
    /// Prune partial assignments that cannot get below the threshold.
    pub prune: bool,
    /// Fix the first line to one translation-orbit representative and scale
    /// counts by `q^2`.
    pub symmetry_reduction: bool,
    pub workers: usize,
    /// Sets of at most this size are recognized. Defaults to the theorem
    /// bound (every size for `q = 2`).
    pub label_limit: Option<u64>,
}

impl SearchConfig {
    pub fn new(q: u32) -> Self {
        SearchConfig {
            q,
            threshold: None,
            prune: true,
            symmetry_reduction: false,
            workers: 1,
            label_limit: None,
        }
    }

    pub fn with_threshold(mut self, t: u64) -> Self {
        self.threshold = Some(t);
        self
    }

    pub fn with_workers(mut self, w: usize) -> Self {
        self.workers = w;
        self
    }

    fn effective_label_limit(&self) -> u64 {
        self.label_limit.unwrap_or(if self.q == 2 {
            6
        } else {
            kakeya::theorem_bound(self.q)
        })
    }
}

/// Names of the small graphs in the census figures, keyed by vertex count
/// and canonical code.
pub fn graph_catalog() -> Vec<(&'static str, CliqueGraph)> {
    let g = |n, e: &[(usize, usize)]| CliqueGraph::from_edges(n, e).expect("valid catalog graph");
    vec![
        ("f1", g(3, &[])),
        ("f2", g(3, &[(0, 1)])),
        ("f3", g(3, &[(0, 1), (1, 2)])),
        ("f4", g(3, &[(0, 1), (1, 2), (0, 2)])),
        ("m1", cliques::cycle_graph(4)),
        ("m2", cliques::complete_graph(4)),
        ("m3", g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])),
        ("m4", cliques::path_graph(4)),
        ("m5", cliques::complete_bipartite(1, 3)),
        ("m6", g(4, &[(0, 1), (1, 2), (0, 2)])),
        ("m7", g(4, &[(0, 1), (1, 2)])),
        ("m8", g(4, &[(0, 1), (2, 3)])),
        ("m9", g(4, &[(0, 1)])),
        ("m10", cliques::empty_graph(4)),
        ("d1", cliques::complete_bipartite(2, 3)),
        ("d2", g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])),
        ("d3", g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)])),
        ("d4", cliques::cycle_graph(5)),
    ]
}

fn catalog_lookup() -> HashMap<(usize, u64), &'static str> {
    graph_catalog()
        .into_iter()
        .map(|(name, g)| ((g.n(), g.canonical_form().expect("small")), name))
        .collect()
}

/// Search tables: for conic point `i`, its `q^2` affine lines and their
/// coverage bitsets over the `q^3` affine points.
struct Tables {
    field: GaloisField,
    space: ProjectiveSpace,
    conic: Conic,
    lines: Vec<Vec<ProjLine>>,
    cover: Vec<Vec<u128>>,
}

impl Tables {
    fn new(q: u32) -> Result<Self> {
        let field = GaloisField::of_order(q)?;
        let space = ProjectiveSpace::new(field.clone());
        let conic = Conic::standard(&field);
        let mut lines = Vec::new();
        let mut cover = Vec::new();
        for p in conic.points() {
            let mut ls: Vec<ProjLine> = space.lines_through(p).filter(|l| !l.at_infinity()).copied().collect();
            ls.sort();
            let cs = ls
                .iter()
                .map(|l| {
                    l.affine_points(&field)
                        .iter()
                        .fold(0u128, |acc, a: &AffinePoint| acc | 1u128 << a.index(q))
                })
                .collect();
            lines.push(ls);
            cover.push(cs);
        }
        Ok(Tables {
            field,
            space,
            conic,
            lines,
            cover,
        })
    }

    fn line_set(&self, choice: &[usize]) -> KakeyaLineSet {
        let lines = choice.iter().enumerate().map(|(i, &c)| self.lines[i][c]).collect();
        KakeyaLineSet::new(&self.field, &self.conic, lines).expect("search lines are valid")
    }
}

type LabelKey = (Variant, Option<usize>, Option<SecantDetail>);

#[derive(Clone, Copy)]
struct TypeInfo {
    canon: u64,
    c_value: usize,
    edge_disjoint: bool,
}

#[derive(Default)]
struct TypeAcc {
    count: u64,
    concurrent: u64,
    labels: BTreeMap<LabelKey, u64>,
    example: Option<Vec<usize>>,
}

/// Per-subtree results; merged in subtree order.
#[derive(Default)]
struct Partial {
    sizes: BTreeMap<u64, u64>,
    types: BTreeMap<(u64, u64), TypeAcc>,
    sets: u64,
    nodes: u64,
    identity_violations: u64,
    non_edge_disjoint: u64,
    unexplained: Vec<Vec<usize>>,
    unexplained_count: u64,
    non_split_below_bound: Vec<Vec<usize>>,
    non_split_count: u64,
}

impl Partial {
    fn merge(&mut self, o: Partial) {
        for (k, v) in o.sizes {
            *self.sizes.entry(k).or_default() += v;
        }
        for (k, v) in o.types {
            let t = self.types.entry(k).or_default();
            t.count += v.count;
            t.concurrent += v.concurrent;
            for (lk, c) in v.labels {
                *t.labels.entry(lk).or_default() += c;
            }
            if t.example.is_none() {
                t.example = v.example;
            }
        }
        self.sets += o.sets;
        self.nodes += o.nodes;
        self.identity_violations += o.identity_violations;
        self.non_edge_disjoint += o.non_edge_disjoint;
        self.unexplained_count += o.unexplained_count;
        self.non_split_count += o.non_split_count;
        for s in o.unexplained {
            if self.unexplained.len() < MAX_STORED {
                self.unexplained.push(s);
            }
        }
        for s in o.non_split_below_bound {
            if self.non_split_below_bound.len() < MAX_STORED {
                self.non_split_below_bound.push(s);
            }
        }
    }
}

struct Worker<'a> {
    t: &'a Tables,
    q: usize,
    threshold: Option<u64>,
    prune: bool,
    label_limit: u64,
    bound: u64,
    canon: Canonicalizer,
    types: HashMap<u64, TypeInfo>,
    recognizer: Recognizer<'a>,
    /// `min_new[d]`: least number of points still added when `d` lines are
    /// chosen.
    min_new: Vec<u64>,
}

impl<'a> Worker<'a> {
    fn new(t: &'a Tables, cfg: &SearchConfig) -> Result<Self> {
        let q = cfg.q as usize;
        let n = q + 1;
        // the j-th line (1-based) adds at least q - (j - 1) new points
        let min_new = (0..=n)
            .map(|d| (d + 1..=n).map(|j| q.saturating_sub(j - 1) as u64).sum())
            .collect();
        Ok(Worker {
            t,
            q,
            threshold: cfg.threshold,
            prune: cfg.prune,
            label_limit: cfg.effective_label_limit(),
            bound: kakeya::theorem_bound(cfg.q),
            canon: Canonicalizer::new(n)?,
            types: HashMap::new(),
            recognizer: Recognizer::new(&t.space),
            min_new,
        })
    }

    fn subtree(&mut self, first: usize) -> Partial {
        let mut out = Partial::default();
        let mut choice = vec![first];
        self.dfs(&mut choice, self.t.cover[0][first], &mut out);
        out
    }

    fn dfs(&mut self, choice: &mut Vec<usize>, covered: u128, out: &mut Partial) {
        out.nodes += 1;
        let d = choice.len();
        if let (Some(t), true) = (self.threshold, self.prune) {
            if covered.count_ones() as u64 + self.min_new[d] >= t {
                return;
            }
        }
        if d == self.q + 1 {
            self.leaf(choice, covered, out);
            return;
        }
        for c in 0..self.t.cover[d].len() {
            choice.push(c);
            self.dfs(choice, covered | self.t.cover[d][c], out);
            choice.pop();
        }
    }

    fn type_info(&mut self, code: u64, adj: &[u32]) -> TypeInfo {
        let canon = &self.canon;
        *self.types.entry(code).or_insert_with(|| {
            let g = CliqueGraph::from_adjacency(adj.to_vec()).expect("small graph");
            TypeInfo {
                canon: canon.canonical(adj),
                c_value: g.c_value(),
                edge_disjoint: g.edge_disjoint(),
            }
        })
    }

    fn leaf(&mut self, choice: &[usize], covered: u128, out: &mut Partial) {
        let size = covered.count_ones() as u64;
        if self.threshold.is_some_and(|t| size >= t) {
            return;
        }
        let n = self.q + 1;
        let covers: Vec<u128> = choice.iter().enumerate().map(|(i, &c)| self.t.cover[i][c]).collect();
        let mut adj = vec![0u32; n];
        let mut code = 0u64;
        for a in 0..n {
            for b in a + 1..n {
                code <<= 1;
                if covers[a] & covers[b] != 0 {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                    code |= 1;
                }
            }
        }
        let info = self.type_info(code, &adj);
        out.sets += 1;
        *out.sizes.entry(size).or_default() += 1;
        if (self.q * (self.q + 1)) as u64 != size + info.c_value as u64 {
            out.identity_violations += 1;
        }
        if !info.edge_disjoint {
            out.non_edge_disjoint += 1;
        }
        let acc = out.types.entry((size, info.canon)).or_default();
        acc.count += 1;
        if covers.iter().fold(u128::MAX, |x, c| x & c) != 0 {
            acc.concurrent += 1;
        }
        if acc.example.is_none() {
            acc.example = Some(choice.to_vec());
        }
        if size > self.label_limit {
            return;
        }
        let l = self.t.line_set(choice);
        let label = self.recognizer.recognize(&l);
        let key = (label.variant, label.k, label.secant.as_ref().map(|s| s.detail));
        *out.types.get_mut(&(size, info.canon)).expect("inserted").labels.entry(key).or_default() += 1;
        if size < self.bound {
            if label.variant != Variant::RegulusSplit {
                out.non_split_count += 1;
                if out.non_split_below_bound.len() < MAX_STORED {
                    out.non_split_below_bound.push(choice.to_vec());
                }
            }
            if label.variant == Variant::Other {
                out.unexplained_count += 1;
                if out.unexplained.len() < MAX_STORED {
                    out.unexplained.push(choice.to_vec());
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelCount {
    pub variant: Variant,
    pub k: Option<usize>,
    pub detail: Option<SecantDetail>,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub size: u64,
    /// Canonical form of the graph of the line set, in hex.
    pub graph: String,
    pub name: Option<String>,
    pub edges: usize,
    pub c_value: usize,
    pub edge_disjoint: bool,
    pub count: u64,
    /// Sets of this type whose lines all pass through one affine point.
    pub concurrent: u64,
    /// Recognition results; empty when the size exceeds the label limit.
    pub labels: Vec<LabelCount>,
    /// First set of this type in search order.
    pub example: LineSetJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub q: u32,
    pub threshold: Option<u64>,
    pub label_limit: u64,
    pub symmetry_reduction: bool,
    pub sets_enumerated: u64,
    pub min_size: Option<u64>,
    pub size_histogram: BTreeMap<u64, u64>,
    pub census: Vec<CensusEntry>,
    /// Sets below the theorem bound recognized as neither construction.
    pub unexplained_count: u64,
    pub unexplained: Vec<LineSetJson>,
    /// Sets below the theorem bound that are not regulus splits.
    pub non_split_below_bound_count: u64,
    pub non_split_below_bound: Vec<LineSetJson>,
    /// Sets where `|K(L)| != q(q+1) - C(Gamma(L))`.
    pub identity_violations: u64,
    /// Sets whose graph has maximal cliques sharing an edge.
    pub non_edge_disjoint: u64,
    pub prune_nodes: u64,
    pub wall_time_ms: u64,
}

impl ClassificationReport {
    /// The report as JSON with the timing field zeroed, for comparing runs.
    pub fn without_timing(&self) -> Self {
        ClassificationReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }

    pub fn entries_of_size(&self, size: u64) -> impl Iterator<Item = &CensusEntry> {
        self.census.iter().filter(move |e| e.size == size)
    }

    /// Count of sets with the given size and variant (and `k`, if given).
    pub fn label_count(&self, size: u64, variant: Variant, k: Option<usize>) -> u64 {
        self.entries_of_size(size)
            .flat_map(|e| &e.labels)
            .filter(|l| l.variant == variant && (k.is_none() || l.k == k))
            .map(|l| l.count)
            .sum()
    }
}

/// `enumerate_all(config)`: depth-first search over one line per conic
/// point, in conic-point order.
pub fn enumerate_all(cfg: &SearchConfig) -> Result<ClassificationReport> {
    let start = Instant::now();
    let q = cfg.q;
    if q > MAX_SEARCH_Q {
        return Err(Error::BudgetExceeded(format!("exhaustive search supports q <= {MAX_SEARCH_Q}")));
    }
    if q > MAX_FULL_Q && (cfg.threshold.is_none() || !cfg.prune) {
        return Err(Error::BudgetExceeded(format!(
            "q = {q} needs a size threshold with pruning enabled"
        )));
    }
    let max_size = (q * (q + 1)) as u64;
    if let Some(t) = cfg.threshold {
        if t > max_size + 1 {
            return Err(Error::Precondition(format!("threshold {t} exceeds q(q+1) + 1 = {}", max_size + 1)));
        }
    }
    if cfg.workers == 0 {
        return Err(Error::Precondition("worker count must be positive".into()));
    }
    let tables = Tables::new(q)?;
    let subtrees: Vec<usize> = if cfg.symmetry_reduction {
        vec![0]
    } else {
        (0..tables.cover[0].len()).collect()
    };
    let next = AtomicUsize::new(0);
    let mut results: Vec<(usize, Partial)> = Vec::new();
    let workers = cfg.workers.min(subtrees.len());
    let run = |results: &mut Vec<(usize, Partial)>| -> Result<()> {
        let mut w = Worker::new(&tables, cfg)?;
        loop {
            let i = next.fetch_add(1, Ordering::Relaxed);
            let Some(&first) = subtrees.get(i) else {
                return Ok(());
            };
            results.push((i, w.subtree(first)));
        }
    };
    if workers <= 1 {
        run(&mut results)?;
    } else {
        let per_worker: Vec<Result<Vec<(usize, Partial)>>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    s.spawn(|| {
                        let mut r = Vec::new();
                        run(&mut r).map(|_| r)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        for r in per_worker {
            results.extend(r?);
        }
    }
    results.sort_by_key(|(i, _)| *i);
    let mut total = Partial::default();
    for (_, p) in results {
        total.merge(p);
    }
    let scale = if cfg.symmetry_reduction { (q * q) as u64 } else { 1 };
    Ok(build_report(cfg, &tables, total, scale, start))
}

fn build_report(cfg: &SearchConfig, t: &Tables, total: Partial, scale: u64, start: Instant) -> ClassificationReport {
    let names = catalog_lookup();
    let n = cfg.q as usize + 1;
    let to_json = |c: &Vec<usize>| t.line_set(c).to_json();
    let census = total
        .types
        .iter()
        .map(|(&(size, canon), acc)| {
            let g = CliqueGraph::from_code(n, canon).expect("small graph");
            CensusEntry {
                size,
                graph: format!("{canon:x}"),
                name: names.get(&(n, canon)).map(|s| s.to_string()),
                edges: g.edge_count(),
                c_value: g.c_value(),
                edge_disjoint: g.edge_disjoint(),
                count: acc.count * scale,
                concurrent: acc.concurrent * scale,
                labels: acc
                    .labels
                    .iter()
                    .map(|(&(variant, k, detail), &count)| LabelCount {
                        variant,
                        k,
                        detail,
                        count: count * scale,
                    })
                    .collect(),
                example: to_json(acc.example.as_ref().expect("every type has an example")),
            }
        })
        .collect();
    ClassificationReport {
        q: cfg.q,
        threshold: cfg.threshold,
        label_limit: cfg.effective_label_limit(),
        symmetry_reduction: cfg.symmetry_reduction,
        sets_enumerated: total.sets * scale,
        min_size: total.sizes.keys().next().copied(),
        size_histogram: total.sizes.iter().map(|(&k, &v)| (k, v * scale)).collect(),
        census,
        unexplained_count: total.unexplained_count * scale,
        unexplained: total.unexplained.iter().map(to_json).collect(),
        non_split_below_bound_count: total.non_split_count * scale,
        non_split_below_bound: total.non_split_below_bound.iter().map(to_json).collect(),
        identity_violations: total.identity_violations * scale,
        non_edge_disjoint: total.non_edge_disjoint * scale,
        prune_nodes: total.nodes,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs the enumeration used by the verifiers: exhaustive for `q <= 4`,
/// pruned below the theorem bound (sharp sets included) for `q = 5`.
pub fn verification_run(q: u32, workers: usize) -> Result<ClassificationReport> {
    let mut cfg = SearchConfig::new(q).with_workers(workers);
    if q > MAX_FULL_Q {
        cfg.threshold = Some(kakeya::theorem_bound(q) + 1);
    }
    enumerate_all(&cfg)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCertificate {
    pub q: u32,
    /// `theorem`, or `vacuous` when no set lies below the bound (q = 2).
    pub status: String,
    pub theorem: String,
    pub threshold_value: u64,
    pub sets_enumerated: u64,
    pub min_size: Option<u64>,
    pub below_threshold: u64,
    /// Regulus-split sets below the bound, by size and `k` (smaller side).
    pub per_k: BTreeMap<String, u64>,
    /// Sets of exactly the bound size, by label.
    pub sharpness: Vec<LabelCount>,
    pub census: Vec<CensusEntry>,
    pub counterexamples: Vec<LineSetJson>,
    pub counterexample_count: u64,
    pub prune_nodes: u64,
    pub wall_time_ms: u64,
    pub verified: bool,
}

/// Checks that every set strictly below the theorem bound is a regulus split.
pub fn verify_theorem(report: &ClassificationReport) -> TheoremCertificate {
    let q = report.q;
    let bound = kakeya::theorem_bound(q);
    let below: u64 = report.size_histogram.range(..bound).map(|(_, c)| c).sum();
    let mut per_k = BTreeMap::new();
    for e in report.census.iter().filter(|e| e.size < bound) {
        for l in e.labels.iter().filter(|l| l.variant == Variant::RegulusSplit) {
            let key = format!("size {} k {}", e.size, l.k.expect("splits have k"));
            *per_k.entry(key).or_default() += l.count;
        }
    }
    let mut sharp: BTreeMap<LabelKey, u64> = BTreeMap::new();
    for e in report.entries_of_size(bound) {
        for l in &e.labels {
            *sharp.entry((l.variant, l.k, l.detail)).or_default() += l.count;
        }
    }
    let census = report.census.iter().filter(|e| e.size <= bound).cloned().collect();
    let counterexample_count = report.non_split_below_bound_count;
    TheoremCertificate {
        q,
        status: if below == 0 { "vacuous".into() } else { "theorem".into() },
        theorem: kakeya::theorem_expression(q).into(),
        threshold_value: bound,
        sets_enumerated: report.sets_enumerated,
        min_size: report.min_size,
        below_threshold: below,
        per_k,
        sharpness: sharp
            .into_iter()
            .map(|((variant, k, detail), count)| LabelCount {
                variant,
                k,
                detail,
                count,
            })
            .collect(),
        census,
        counterexamples: report.non_split_below_bound.clone(),
        counterexample_count,
        prune_nodes: report.prune_nodes,
        wall_time_ms: report.wall_time_ms,
        verified: counterexample_count == 0 && report.identity_violations == 0,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemarkCertificate {
    pub q: u32,
    pub scope: String,
    /// Graph types realized at each size, by catalog name (or hex form).
    pub types_by_size: BTreeMap<u64, Vec<String>>,
    pub mismatches: Vec<String>,
    pub counterexamples: Vec<LineSetJson>,
    pub verified: bool,
}

fn type_name(e: &CensusEntry) -> String {
    e.name.clone().unwrap_or_else(|| format!("0x{}", e.graph))
}

/// Expected labels per graph type: variant, `k`, allowed secant details.
type Expectation = (&'static str, Variant, Option<usize>, &'static [SecantDetail]);

const ANY: &[SecantDetail] = &[];

fn remark_expectations(q: u32) -> (Vec<(u64, Vec<&'static str>)>, Vec<Expectation>) {
    use SecantDetail::*;
    use Variant::*;
    match q {
        2 => (
            vec![(4, vec!["f3", "f4"]), (5, vec!["f2"]), (6, vec!["f1"])],
            vec![
                ("f1", RegulusSplit, Some(0), ANY),
                ("f2", SecantVariant, Some(0), ANY),
                ("f3", RegulusSplit, Some(1), ANY),
                ("f4", SecantVariant, Some(1), &[OnBoth]),
            ],
        ),
        3 => (
            vec![(8, vec!["m1"]), (9, vec!["m2", "m3", "m4", "m5"])],
            vec![
                ("m1", RegulusSplit, Some(2), ANY),
                ("m2", Other, None, ANY),
                ("m3", SecantVariant, Some(1), &[OnBoth]),
                ("m4", SecantVariant, Some(1), &[OnRPrime]),
                ("m5", RegulusSplit, Some(1), ANY),
            ],
        ),
        4 => (
            vec![(14, vec!["d1"]), (15, vec!["d2", "d3"])],
            vec![
                ("d1", RegulusSplit, Some(2), ANY),
                ("d2", SecantVariant, Some(2), &[OnR, OnRPrime]),
                ("d3", SecantVariant, Some(2), &[OnBoth]),
            ],
        ),
        _ => (Vec::new(), Vec::new()),
    }
}

/// Checks the small-`q` censuses: which graph types occur at each size and
/// which construction each type is recognized as.
pub fn verify_remark_census(report: &ClassificationReport) -> Result<RemarkCertificate> {
    let q = report.q;
    if !(2..=4).contains(&q) || report.threshold.is_some() {
        return Err(Error::Precondition("remark censuses need a full enumeration with q in 2..=4".into()));
    }
    let (sizes, expectations) = remark_expectations(q);
    let mut mismatches = Vec::new();
    let mut counterexamples = Vec::new();
    let mut types_by_size: BTreeMap<u64, Vec<String>> = BTreeMap::new();
    for e in &report.census {
        types_by_size.entry(e.size).or_default().push(type_name(e));
    }
    for (size, want) in &sizes {
        let mut got: Vec<String> = types_by_size.get(size).cloned().unwrap_or_default();
        got.sort();
        let mut want: Vec<String> = want.iter().map(|s| s.to_string()).collect();
        want.sort();
        if got != want {
            mismatches.push(format!("size {size}: expected types {want:?}, found {got:?}"));
        }
    }
    for e in &report.census {
        let Some((_, variant, k, details)) = expectations.iter().find(|x| Some(x.0) == e.name.as_deref()) else {
            continue;
        };
        let labelled: u64 = e.labels.iter().map(|l| l.count).sum();
        if labelled != e.count {
            mismatches.push(format!("{}: {} of {} sets were recognized", type_name(e), labelled, e.count));
        }
        for l in &e.labels {
            let ok = l.variant == *variant && l.k == *k && (details.is_empty() || l.detail.is_some_and(|d| details.contains(&d)));
            if !ok {
                mismatches.push(format!(
                    "{} (size {}): {} sets labeled {:?} k={:?} detail={:?}",
                    type_name(e),
                    e.size,
                    l.count,
                    l.variant,
                    l.k,
                    l.detail
                ));
                counterexamples.push(e.example.clone());
            }
        }
        if *variant == Variant::Other && e.concurrent != e.count {
            mismatches.push(format!("{}: {} sets are not cones", type_name(e), e.count - e.concurrent));
        }
    }
    if q == 2 {
        let all: u64 = report
            .census
            .iter()
            .flat_map(|e| &e.labels)
            .filter(|l| l.variant != Variant::Other)
            .map(|l| l.count)
            .sum();
        if all != report.sets_enumerated {
            mismatches.push(format!("{} of {} sets recognized", all, report.sets_enumerated));
        }
    }
    Ok(RemarkCertificate {
        q,
        scope: "remark".into(),
        types_by_size,
        verified: mismatches.is_empty(),
        mismatches,
        counterexamples,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PentagonCertificate {
    pub q: u32,
    pub vacuous: bool,
    pub sets_examined: u64,
    pub size_15_examined: u64,
    pub pentagon_count: u64,
    pub counterexamples: Vec<LineSetJson>,
    pub verified: bool,
}

/// No line set has a 5-cycle as its graph. Vacuous for `q < 4`.
pub fn verify_pentagon_excluded(report: &ClassificationReport) -> Result<PentagonCertificate> {
    let q = report.q;
    let pentagon = cliques::cycle_graph(5).canonical_form()?;
    let hits: Vec<&CensusEntry> = if q == 4 {
        report
            .census
            .iter()
            .filter(|e| u64::from_str_radix(&e.graph, 16).ok() == Some(pentagon))
            .collect()
    } else {
        Vec::new()
    };
    let pentagon_count = hits.iter().map(|e| e.count).sum();
    Ok(PentagonCertificate {
        q,
        vacuous: q < 4,
        sets_examined: report.sets_enumerated,
        size_15_examined: report.size_histogram.get(&15).copied().unwrap_or(0),
        pentagon_count,
        counterexamples: hits.iter().map(|e| e.example.clone()).collect(),
        verified: pentagon_count == 0,
    })
}
