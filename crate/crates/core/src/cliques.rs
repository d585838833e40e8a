//! Small simple graphs: maximal cliques, the clique functional
//! `C(G) = sum_i k_i (i - 1)`, bipartite structure, canonical forms, and
//! exhaustive oracles for the triangle-free extremal results.
//!
//! Vertices are `0..n` with `n <= 16`; adjacency rows are bitmasks.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kakeya::KakeyaLineSet;

/// Largest vertex count for clique enumeration.
pub const MAX_VERTICES: usize = 16;
/// Largest vertex count for canonical forms (`n!` permutations).
pub const MAX_CANONICAL_VERTICES: usize = 8;
/// Largest vertex count for exhaustive oracles and census enumeration.
pub const MAX_ORACLE_VERTICES: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueGraph {
    n: usize,
    adj: Vec<u32>,
    cliques: Vec<u32>,
    histogram: Vec<usize>,
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Bron–Kerbosch with pivoting on bitsets.
fn bron_kerbosch(adj: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("p is nonempty");
    for v in bits(p & !adj[pivot]) {
        let vb = 1u32 << v;
        bron_kerbosch(adj, r | vb, p & adj[v], x & adj[v], out);
        p &= !vb;
        x |= vb;
    }
}

/// Number of vertex pairs.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl CliqueGraph {
    /// Builds the graph from symmetric adjacency bitmasks.
    pub fn from_adjacency(adj: Vec<u32>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::BudgetExceeded(format!("{n} vertices exceeds {MAX_VERTICES}")));
        }
        for (i, &row) in adj.iter().enumerate() {
            if row >> n != 0 || row & (1 << i) != 0 {
                return Err(Error::Malformed(format!("vertex {i}: loop or out-of-range neighbour")));
            }
            for j in bits(row) {
                if adj[j] & (1 << i) == 0 {
                    return Err(Error::Malformed("adjacency is not symmetric".into()));
                }
            }
        }
        let mut cliques = Vec::new();
        if n > 0 {
            bron_kerbosch(&adj, 0, (1u32 << n) - 1, 0, &mut cliques);
        }
        cliques.sort_unstable();
        let mut histogram = vec![0; n + 1];
        for c in &cliques {
            histogram[c.count_ones() as usize] += 1;
        }
        Ok(CliqueGraph { n, adj, cliques, histogram })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::BudgetExceeded(format!("{n} vertices exceeds {MAX_VERTICES}")));
        }
        let mut adj = vec![0u32; n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::Malformed(format!("bad edge ({a}, {b})")));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Self::from_adjacency(adj)
    }

    /// Decodes a labeled code (see [`CliqueGraph::code`]).
    pub fn from_code(n: usize, code: u64) -> Result<Self> {
        Self::from_adjacency(adjacency_from_code(n, code))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &[u32] {
        &self.adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] & (1 << b) != 0
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| bits(self.adj[i] >> (i + 1) << (i + 1)).map(move |j| (i, j)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Maximal cliques as vertex bitmasks, sorted.
    pub fn maximal_cliques(&self) -> &[u32] {
        &self.cliques
    }

    /// `histogram()[i]` is the number of maximal cliques with `i` vertices.
    pub fn histogram(&self) -> &[usize] {
        &self.histogram
    }

    /// `C(G) = sum_i k_i (i - 1)`.
    pub fn c_value(&self) -> usize {
        self.histogram.iter().enumerate().map(|(i, &k)| k * i.saturating_sub(1)).sum()
    }

    /// True if no edge lies in two maximal cliques.
    pub fn edge_disjoint(&self) -> bool {
        self.cliques
            .iter()
            .enumerate()
            .all(|(i, a)| self.cliques[i + 1..].iter().all(|b| (a & b).count_ones() <= 1))
    }

    pub fn is_triangle_free(&self) -> bool {
        (0..self.n).all(|i| bits(self.adj[i]).all(|j| self.adj[i] & self.adj[j] == 0))
    }

    pub fn is_bipartite(&self) -> bool {
        two_colouring(&self.adj).is_some()
    }

    /// Labeled code: bit for pair `(i, j)` in lexicographic pair order, the
    /// first pair being the most significant bit.
    pub fn code(&self) -> u64 {
        code_of(&self.adj)
    }

    /// Minimum labeled code over all vertex relabelings.
    pub fn canonical_form(&self) -> Result<u64> {
        canonical_code(&self.adj)
    }

    pub fn canonical_hex(&self) -> Result<String> {
        Ok(format!("{:x}", self.canonical_form()?))
    }

    /// The graph with vertex `v` renamed `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut adj = vec![0u32; self.n];
        for (a, b) in self.edges() {
            adj[perm[a]] |= 1 << perm[b];
            adj[perm[b]] |= 1 << perm[a];
        }
        Self::from_adjacency(adj)
    }

    /// The most balanced bipartition, or `None` if the graph has an odd cycle.
    pub fn bipartite_structure(&self) -> Option<BipartiteStructure> {
        let comps = two_colouring(&self.adj)?;
        let n = self.n;
        // Each component contributes (side0, side1); choose orientations
        // maximizing |V1| * |V2|, first found in flip-mask order.
        let mut best: Option<(usize, u32)> = None;
        let free = comps.len().saturating_sub(1);
        for mask in 0u32..(1 << free) {
            let mut v1 = 0u32;
            for (k, (a, b)) in comps.iter().enumerate() {
                let flip = k > 0 && mask & (1 << (k - 1)) != 0;
                v1 |= if flip { *b } else { *a };
            }
            let s = v1.count_ones() as usize;
            let prod = s * (n - s);
            if best.is_none_or(|(bp, _)| prod > bp) {
                best = Some((prod, v1));
            }
        }
        let (_, mut v1) = best.unwrap_or((0, 0));
        let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
        let mut v2 = all & !v1;
        if v1.count_ones() < v2.count_ones() {
            std::mem::swap(&mut v1, &mut v2);
        }
        let part1: Vec<usize> = bits(v1).collect();
        let part2: Vec<usize> = bits(v2).collect();
        let mut removed = Vec::new();
        for &a in &part1 {
            for &b in &part2 {
                if !self.has_edge(a, b) {
                    removed.push((a.min(b), a.max(b)));
                }
            }
        }
        removed.sort_unstable();
        let delta = part1.len() - n.div_ceil(2);
        let epsilon = (n * n / 4) as i64 - self.c_value() as i64;
        Some(BipartiteStructure {
            parts: (part1, part2),
            delta,
            removed_edges: removed,
            epsilon,
        })
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

/// Connected components as `(colour class 0, colour class 1)` masks.
fn two_colouring(adj: &[u32]) -> Option<Vec<(u32, u32)>> {
    let n = adj.len();
    let mut colour = vec![u8::MAX; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        let (mut c0, mut c1) = (0u32, 0u32);
        colour[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            if colour[v] == 0 {
                c0 |= 1 << v;
            } else {
                c1 |= 1 << v;
            }
            for w in bits(adj[v]) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    stack.push(w);
                } else if colour[w] == colour[v] {
                    return None;
                }
            }
        }
        comps.push((c0, c1));
    }
    Some(comps)
}

/// A graph seen as a complete bipartite graph minus some cross edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteStructure {
    /// `(V1, V2)` with `|V1| >= |V2|`.
    pub parts: (Vec<usize>, Vec<usize>),
    /// `|V1| - ceil(n/2)`.
    pub delta: usize,
    /// Cross pairs missing from the graph.
    pub removed_edges: Vec<(usize, usize)>,
    /// `floor(n^2/4) - C(G)`.
    pub epsilon: i64,
}

impl BipartiteStructure {
    /// Removed-edge count predicted from `epsilon` and `delta`:
    /// `eps - d^2` for even `n`, `eps - d^2 - d` for odd `n`.
    pub fn predicted_removed(&self, n: usize) -> i64 {
        let d = self.delta as i64;
        if n.is_multiple_of(2) {
            self.epsilon - d * d
        } else {
            self.epsilon - d * d - d
        }
    }

    /// `delta <= sqrt(eps)` (even `n`) or `delta <= sqrt(eps + 1/4) - 1/2`
    /// (odd `n`), in exact integer form.
    pub fn delta_within_bound(&self, n: usize) -> bool {
        let d = self.delta as i64;
        if n.is_multiple_of(2) {
            d * d <= self.epsilon
        } else {
            d * d + d <= self.epsilon
        }
    }
}

/// Graph JSON: `{ "n": int, "edges": [[i, j], ...] }`, `i < j`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<CliqueGraph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        CliqueGraph::from_edges(self.n, &edges)
    }
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn code_of(adj: &[u32]) -> u64 {
    let n = adj.len();
    let pairs = pair_list(n);
    let e = pairs.len();
    pairs
        .iter()
        .enumerate()
        .filter(|(_, &(i, j))| adj[i] & (1 << j) != 0)
        .fold(0u64, |acc, (k, _)| acc | 1 << (e - 1 - k))
}

pub fn adjacency_from_code(n: usize, code: u64) -> Vec<u32> {
    let pairs = pair_list(n);
    let e = pairs.len();
    let mut adj = vec![0u32; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if code >> (e - 1 - k) & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    adj
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Canonicalizer with precomputed permutations for one vertex count.
pub struct Canonicalizer {
    n: usize,
    perms: Vec<Vec<usize>>,
    pairs: Vec<(usize, usize)>,
}

impl Canonicalizer {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_CANONICAL_VERTICES {
            return Err(Error::BudgetExceeded(format!(
                "canonical forms need n <= {MAX_CANONICAL_VERTICES}, got {n}"
            )));
        }
        Ok(Canonicalizer {
            n,
            perms: permutations(n),
            pairs: pair_list(n),
        })
    }

    pub fn canonical(&self, adj: &[u32]) -> u64 {
        debug_assert_eq!(adj.len(), self.n);
        let e = self.pairs.len();
        let edges: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .copied()
            .filter(|&(i, j)| adj[i] & (1 << j) != 0)
            .collect();
        let pos = |i: usize, j: usize| -> usize {
            let (i, j) = (i.min(j), i.max(j));
            // index of (i, j) in lexicographic pair order
            i * (2 * self.n - i - 1) / 2 + (j - i - 1)
        };
        self.perms
            .iter()
            .map(|p| {
                edges
                    .iter()
                    .fold(0u64, |acc, &(i, j)| acc | 1 << (e - 1 - pos(p[i], p[j])))
            })
            .min()
            .unwrap_or(0)
    }
}

fn canonical_code(adj: &[u32]) -> Result<u64> {
    Ok(Canonicalizer::new(adj.len())?.canonical(adj))
}

/// `isomorphic(G1, G2)` via canonical forms.
pub fn isomorphic(a: &CliqueGraph, b: &CliqueGraph) -> Result<bool> {
    Ok(a.n == b.n && a.canonical_form()? == b.canonical_form()?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFilter {
    All,
    EdgeDisjointCliques,
}

/// `enumerate_graphs`: one representative per isomorphism class on `n`
/// vertices, each in canonical labeling, sorted by canonical code.
pub fn enumerate_graphs(n: usize, filter: GraphFilter) -> Result<Vec<CliqueGraph>> {
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::BudgetExceeded(format!(
            "graph enumeration needs n <= {MAX_ORACLE_VERTICES}, got {n}"
        )));
    }
    // Grow classes one vertex at a time: every graph on k+1 vertices is a
    // graph on k vertices plus a vertex with some neighbourhood.
    let mut classes: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..n {
        let canon = Canonicalizer::new(k + 1)?;
        let mut next = BTreeSet::new();
        for &code in &classes {
            let base = adjacency_from_code(k, code);
            for nb in 0u32..(1 << k) {
                let mut adj = base.clone();
                adj.push(nb);
                for j in bits(nb) {
                    adj[j] |= 1 << k;
                }
                next.insert(canon.canonical(&adj));
            }
        }
        classes = next;
    }
    if n == 0 {
        return Ok(vec![CliqueGraph::from_adjacency(Vec::new())?]);
    }
    let mut out = Vec::with_capacity(classes.len());
    for code in classes {
        let g = CliqueGraph::from_code(n, code)?;
        if filter == GraphFilter::All || g.edge_disjoint() {
            out.push(g);
        }
    }
    Ok(out)
}

/// Census CSV: `canonical_form_hex,edge_count,C_value,edge_disjoint,bipartite`.
pub fn census_csv(graphs: &[CliqueGraph]) -> Result<String> {
    let mut s = String::from("canonical_form_hex,edge_count,C_value,edge_disjoint,bipartite\n");
    for g in graphs {
        writeln!(
            s,
            "{},{},{},{},{}",
            g.canonical_hex()?,
            g.edge_count(),
            g.c_value(),
            g.edge_disjoint(),
            g.is_bipartite()
        )
        .expect("writing to a String");
    }
    Ok(s)
}

/// `build_gamma(L)`: vertices are the lines, adjacent iff they meet.
pub fn build_gamma(l: &KakeyaLineSet) -> CliqueGraph {
    let f = l.field();
    let lines = l.lines();
    let n = lines.len();
    let mut adj = vec![0u32; n];
    for i in 0..n {
        for j in i + 1..n {
            if lines[i].meet(f, &lines[j]).expect("distinct lines").is_some() {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    CliqueGraph::from_adjacency(adj).expect("q + 1 <= 16 vertices")
}

// Standard graphs.

pub fn empty_graph(n: usize) -> CliqueGraph {
    CliqueGraph::from_edges(n, &[]).expect("valid")
}

pub fn complete_graph(n: usize) -> CliqueGraph {
    CliqueGraph::from_edges(n, &pair_list(n)).expect("valid")
}

pub fn complete_bipartite(a: usize, b: usize) -> CliqueGraph {
    let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
    CliqueGraph::from_edges(a + b, &edges).expect("valid")
}

pub fn cycle_graph(n: usize) -> CliqueGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    CliqueGraph::from_edges(n, &edges).expect("valid")
}

pub fn path_graph(n: usize) -> CliqueGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    CliqueGraph::from_edges(n, &edges).expect("valid")
}

/// The sharpness graph for the clique lemma on an odd number `n >= 5` of
/// vertices. `W1` is `0..h`, `W2` is `h..2h` (its first `w2_prime` vertices
/// form `W2'`), and `x, y, z` are `2h, 2h+1, 2h+2`, where `h = (n-3)/2`.
pub fn sporadic_graph(n: usize, w2_prime: usize) -> Result<CliqueGraph> {
    if n.is_multiple_of(2) || n < 5 {
        return Err(Error::Precondition(format!("sporadic graph needs odd n >= 5, got {n}")));
    }
    let h = (n - 3) / 2;
    if w2_prime > h {
        return Err(Error::Precondition(format!("W2' has at most {h} vertices")));
    }
    let (x, y, z) = (2 * h, 2 * h + 1, 2 * h + 2);
    let mut edges = Vec::new();
    for w1 in 0..h {
        for w2 in h..2 * h {
            edges.push((w1, w2));
        }
        edges.push((w1, x));
    }
    for w2 in h..2 * h {
        edges.push((if w2 < h + w2_prime { y } else { z }, w2));
    }
    edges.extend([(x, y), (x, z), (y, z)]);
    CliqueGraph::from_edges(n, &edges)
}

// Exhaustive oracles over all labeled graphs.

fn check_oracle_size(n: usize) -> Result<()> {
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive oracles need n <= {MAX_ORACLE_VERTICES}, got {n}"
        )));
    }
    Ok(())
}

fn labeled_graphs(n: usize) -> impl Iterator<Item = Vec<u32>> {
    let e = pair_count(n);
    (0u64..(1u64 << e)).map(move |code| adjacency_from_code(n, code))
}

fn triangle_free(adj: &[u32]) -> bool {
    (0..adj.len()).all(|i| bits(adj[i]).all(|j| adj[i] & adj[j] == 0))
}

fn edge_count(adj: &[u32]) -> usize {
    adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
}

fn is_balanced_complete_bipartite(adj: &[u32]) -> bool {
    let n = adj.len();
    let Some(comps) = two_colouring(adj) else {
        return false;
    };
    if n >= 2 && comps.len() != 1 {
        return false;
    }
    let (a, b) = comps.first().copied().unwrap_or((0, 0));
    let (sa, sb) = (a.count_ones() as usize, b.count_ones() as usize);
    sa.max(sb) == n.div_ceil(2) && edge_count(adj) == sa * sb
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MantelReport {
    pub n: usize,
    pub graphs_checked: u64,
    pub triangle_free_graphs: u64,
    /// `floor(n^2/4)`.
    pub bound: usize,
    pub max_triangle_free_edges: usize,
    pub extremal_graphs: u64,
    /// Extremal graphs that are not `K_{ceil(n/2), floor(n/2)}`.
    pub extremal_not_balanced_bipartite: u64,
    pub violations: u64,
}

/// Mantel: triangle-free graphs on `n` vertices have at most `floor(n^2/4)`
/// edges, with equality only for the balanced complete bipartite graph.
pub fn mantel_oracle(n: usize) -> Result<MantelReport> {
    check_oracle_size(n)?;
    let bound = n * n / 4;
    let mut r = MantelReport {
        n,
        graphs_checked: 0,
        triangle_free_graphs: 0,
        bound,
        max_triangle_free_edges: 0,
        extremal_graphs: 0,
        extremal_not_balanced_bipartite: 0,
        violations: 0,
    };
    for adj in labeled_graphs(n) {
        r.graphs_checked += 1;
        if !triangle_free(&adj) {
            continue;
        }
        r.triangle_free_graphs += 1;
        let e = edge_count(&adj);
        r.max_triangle_free_edges = r.max_triangle_free_edges.max(e);
        if e > bound {
            r.violations += 1;
        }
        if e == bound {
            r.extremal_graphs += 1;
            if !is_balanced_complete_bipartite(&adj) {
                r.extremal_not_balanced_bipartite += 1;
                r.violations += 1;
            }
        }
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HansonToftLevel {
    /// Edge deficit `l`: graphs with `floor(n^2/4) - l` edges.
    pub l: usize,
    pub edges: usize,
    /// True when `l < floor(n/2) - 1`, i.e. the theorem applies.
    pub in_hypothesis: bool,
    pub triangle_free_graphs: u64,
    pub non_bipartite: u64,
    /// One non-bipartite witness (labeled edge list), if any.
    pub witness: Option<Vec<(usize, usize)>>,
    /// Bipartite graphs whose most balanced bipartition breaks the
    /// `delta` bound or removed-edge count of the restated corollary.
    pub corollary_violations: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HansonToftReport {
    pub n: usize,
    pub levels: Vec<HansonToftLevel>,
    pub violations: u64,
}

/// Hanson–Toft: triangle-free graphs with `floor(n^2/4) - l` edges,
/// `l < floor(n/2) - 1`, are bipartite. Levels up to `l = floor(n/2) - 1`
/// are reported; the last one lies outside the hypothesis and only records
/// whether a non-bipartite witness exists.
pub fn hanson_toft_oracle(n: usize) -> Result<HansonToftReport> {
    check_oracle_size(n)?;
    let bound = n * n / 4;
    let top = (n / 2).saturating_sub(1);
    let mut levels: Vec<HansonToftLevel> = (0..=top.min(bound))
        .map(|l| HansonToftLevel {
            l,
            edges: bound - l,
            in_hypothesis: l + 1 < n / 2,
            triangle_free_graphs: 0,
            non_bipartite: 0,
            witness: None,
            corollary_violations: 0,
        })
        .collect();
    for adj in labeled_graphs(n) {
        let e = edge_count(&adj);
        if e > bound || bound - e > top || !triangle_free(&adj) {
            continue;
        }
        let lvl = &mut levels[bound - e];
        lvl.triangle_free_graphs += 1;
        let g = CliqueGraph::from_adjacency(adj).expect("n <= 7");
        match g.bipartite_structure() {
            None => {
                lvl.non_bipartite += 1;
                if lvl.witness.is_none() {
                    lvl.witness = Some(g.edges());
                }
            }
            Some(s) => {
                if lvl.in_hypothesis
                    && (!s.delta_within_bound(n) || s.predicted_removed(n) != s.removed_edges.len() as i64)
                {
                    lvl.corollary_violations += 1;
                }
            }
        }
    }
    let violations = levels
        .iter()
        .filter(|l| l.in_hypothesis)
        .map(|l| l.non_bipartite + l.corollary_violations)
        .sum();
    Ok(HansonToftReport { n, levels, violations })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MainLemmaReport {
    pub n: usize,
    /// Graphs qualify when `C(G)` strictly exceeds this value:
    /// `floor(n^2/4) - floor(n/2) + 1`.
    pub threshold: usize,
    pub edge_disjoint_graphs: u64,
    pub qualifying_graphs: u64,
    pub qualifying_non_bipartite: u64,
    pub structure_violations: u64,
    /// Largest `C(G)` over non-bipartite graphs with edge-disjoint maximal
    /// cliques (sharpness information).
    pub max_c_non_bipartite: Option<usize>,
    /// Qualifying graphs counted by `delta`.
    pub delta_histogram: Vec<u64>,
    pub violations: u64,
}

/// The clique lemma: a graph with edge-disjoint maximal cliques and
/// `C(G) > floor(n^2/4) - floor(n/2) + 1` is a complete bipartite graph
/// `K_{ceil(n/2)+d, floor(n/2)-d}` minus the predicted number of edges.
pub fn main_lemma_oracle(n: usize) -> Result<MainLemmaReport> {
    check_oracle_size(n)?;
    let threshold = (n * n / 4 + 1).saturating_sub(n / 2);
    let mut r = MainLemmaReport {
        n,
        threshold,
        edge_disjoint_graphs: 0,
        qualifying_graphs: 0,
        qualifying_non_bipartite: 0,
        structure_violations: 0,
        max_c_non_bipartite: None,
        delta_histogram: vec![0; n / 2 + 1],
        violations: 0,
    };
    for adj in labeled_graphs(n) {
        let g = CliqueGraph::from_adjacency(adj).expect("n <= 7");
        if !g.edge_disjoint() {
            continue;
        }
        r.edge_disjoint_graphs += 1;
        let c = g.c_value();
        let structure = g.bipartite_structure();
        if structure.is_none() {
            r.max_c_non_bipartite = Some(r.max_c_non_bipartite.map_or(c, |m| m.max(c)));
        }
        if c <= threshold {
            continue;
        }
        r.qualifying_graphs += 1;
        match structure {
            None => r.qualifying_non_bipartite += 1,
            Some(s) => {
                r.delta_histogram[s.delta] += 1;
                if !s.delta_within_bound(n) || s.predicted_removed(n) != s.removed_edges.len() as i64 {
                    r.structure_violations += 1;
                }
            }
        }
    }
    r.violations = r.qualifying_non_bipartite + r.structure_violations;
    Ok(r)
}
