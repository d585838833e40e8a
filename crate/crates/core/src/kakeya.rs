//! Kakeya line sets in the linear representation of a conic: coverage, the
//! size formulas, the regulus-split and secant constructions, and recognition
//! of a line set as one of the two constructions.

use std::collections::{BTreeSet, HashMap};

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cliques::{build_gamma, CliqueGraph};
use crate::error::{Error, Result};
use crate::gf::GaloisField;
use crate::projective::{AffinePoint, Point, ProjLine, ProjPoint, ProjectiveSpace};
use crate::quadrics::{hyperbolic_quadrics_containing, unique_quadric_through, Conic, HyperbolicQuadric, QuadraticForm};

/// One line through each conic point, none in the plane at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KakeyaLineSet {
    field: GaloisField,
    conic: Conic,
    lines: Vec<ProjLine>,
}

impl KakeyaLineSet {
    /// Checks that `lines[i]` is an affine line whose point at infinity is
    /// the conic point `P_i`.
    pub fn new(field: &GaloisField, conic: &Conic, lines: Vec<ProjLine>) -> Result<Self> {
        if lines.len() != conic.len() {
            return Err(Error::Precondition(format!(
                "{} lines for {} conic points",
                lines.len(),
                conic.len()
            )));
        }
        for (i, l) in lines.iter().enumerate() {
            match l.infinite_point(field) {
                None => return Err(Error::Precondition(format!("line {i} lies in the plane at infinity"))),
                Some(p) if p != conic.points()[i] => {
                    return Err(Error::Precondition(format!("line {i} does not pass through conic point {i}")))
                }
                Some(_) => {}
            }
        }
        Ok(KakeyaLineSet {
            field: field.clone(),
            conic: conic.clone(),
            lines,
        })
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn conic(&self) -> &Conic {
        &self.conic
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    /// A uniformly random line set: each line is the join of `P_i` with a
    /// random affine point.
    pub fn random<R: Rng + ?Sized>(field: &GaloisField, conic: &Conic, rng: &mut R) -> Self {
        let q = field.q();
        let lines = conic
            .points()
            .iter()
            .map(|p| {
                let a = AffinePoint(std::array::from_fn(|_| field.element(rng.gen_range(0..q))));
                ProjLine::through(field, p, &a.to_projective()).expect("affine point is not at infinity")
            })
            .collect();
        KakeyaLineSet::new(field, conic, lines).expect("constructed lines are valid")
    }

    pub fn gamma(&self) -> CliqueGraph {
        build_gamma(self)
    }

    pub fn to_json(&self) -> LineSetJson {
        LineSetJson {
            p: self.field.p(),
            deg: self.field.deg(),
            modulus: self.field.modulus().to_vec(),
            conic: self.conic.form().codes(),
            lines: self.lines.iter().map(ProjLine::to_codes).collect(),
        }
    }

    pub fn from_json(j: &LineSetJson) -> Result<Self> {
        let field = GaloisField::with_modulus(j.p, &j.modulus)?;
        if field.deg() != j.deg {
            return Err(Error::Malformed(format!("deg {} does not match the modulus", j.deg)));
        }
        if j.conic.len() != 6 {
            return Err(Error::Malformed("conic needs 6 coefficients".into()));
        }
        let conic = Conic::new(&field, QuadraticForm::from_codes(&field, 3, &j.conic)?)?;
        let lines = j
            .lines
            .iter()
            .map(|&c| ProjLine::from_codes(&field, c))
            .collect::<Result<Vec<_>>>()?;
        KakeyaLineSet::new(&field, &conic, lines)
    }
}

/// Line-set file format. Points are 4 codes, lines are their two RREF rows,
/// the modulus is listed constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineSetJson {
    pub p: u32,
    pub deg: u32,
    pub modulus: Vec<u32>,
    pub conic: Vec<u32>,
    pub lines: Vec<[[u32; 4]; 2]>,
}

/// The affine points covered by a line set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KakeyaSet {
    points: BTreeSet<AffinePoint>,
}

impl KakeyaSet {
    pub fn points(&self) -> &BTreeSet<AffinePoint> {
        &self.points
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }
}

pub fn kakeya_points(l: &KakeyaLineSet) -> KakeyaSet {
    let f = l.field();
    KakeyaSet {
        points: l.lines().iter().flat_map(|line| line.affine_points(f)).collect(),
    }
}

/// `q(q+1) - C(Gamma(L))`.
pub fn size_via_cliques(l: &KakeyaLineSet) -> usize {
    let q = l.q() as usize;
    q * (q + 1) - build_gamma(l).c_value()
}

/// Smallest Kakeya set size, `floor((3q^2 + 2q) / 4)`.
pub fn minimum_size(q: u32) -> u64 {
    let q = q as u64;
    (3 * q * q + 2 * q) / 4
}

/// Size of the regulus-split construction: `kq + (q+1-k)(q-k)`.
pub fn regulus_split_size(q: u32, k: u32) -> u64 {
    let (q, k) = (q as i64, k as i64);
    // at k = q + 1 the second factor is negative and the product is zero
    (k * q + (q + 1 - k) * (q - k)) as u64
}

/// Size of the secant construction: `kq + (q-k)^2 + (q-1)`.
pub fn secant_variant_size(q: u32, k: u32) -> u64 {
    let (q, k) = (q as u64, k as u64);
    k * q + (q - k) * (q - k) + q - 1
}

/// Strict size bound of the classification theorems: sets smaller than this
/// are regulus splits. `3(q^2-1)/4 + q` for odd `q`, `3q^2/4 + q - 1` for even.
pub fn theorem_bound(q: u32) -> u64 {
    let q = q as u64;
    if q % 2 == 1 {
        3 * (q * q - 1) / 4 + q
    } else {
        3 * q * q / 4 + q - 1
    }
}

/// The bound as printed in certificates.
pub fn theorem_expression(q: u32) -> &'static str {
    if q % 2 == 1 {
        "|K(L)| < 3/4 (q^2 - 1) + q"
    } else {
        "|K(L)| < 3/4 q^2 + q - 1"
    }
}

fn check_quadric_through_conic(conic: &Conic, quadric: &HyperbolicQuadric) -> Result<()> {
    if quadric.points_at_infinity() != conic.points() {
        return Err(Error::Precondition("quadric does not meet the plane at infinity in the conic".into()));
    }
    Ok(())
}

fn regulus_line(f: &GaloisField, quadric: &HyperbolicQuadric, which: usize, p: &Point) -> ProjLine {
    quadric
        .line_through(f, which, p)
        .expect("every quadric point lies on one line of each regulus")
}

/// Regulus `R` line through `P_i` for `i < k`, `R'` line otherwise.
pub fn construct_regulus_split(
    f: &GaloisField,
    conic: &Conic,
    k: usize,
    quadric: &HyperbolicQuadric,
) -> Result<KakeyaLineSet> {
    check_quadric_through_conic(conic, quadric)?;
    if k > conic.len() {
        return Err(Error::Precondition(format!("k = {k} exceeds q + 1")));
    }
    let lines = conic
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| regulus_line(f, quadric, usize::from(i >= k), p))
        .collect();
    KakeyaLineSet::new(f, conic, lines)
}

/// Where the second quadric point of a secant lies among the chosen lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SecantDetail {
    OnR,
    OnRPrime,
    OnBoth,
}

impl SecantDetail {
    fn from_flags(on_r: bool, on_r_prime: bool) -> Option<Self> {
        match (on_r, on_r_prime) {
            (true, true) => Some(SecantDetail::OnBoth),
            (true, false) => Some(SecantDetail::OnR),
            (false, true) => Some(SecantDetail::OnRPrime),
            (false, false) => None,
        }
    }

    fn swapped(self) -> Self {
        match self {
            SecantDetail::OnR => SecantDetail::OnRPrime,
            SecantDetail::OnRPrime => SecantDetail::OnR,
            SecantDetail::OnBoth => SecantDetail::OnBoth,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SecantDetail::OnR => "on-R-line",
            SecantDetail::OnRPrime => "on-R'-line",
            SecantDetail::OnBoth => "on-both",
        }
    }
}

/// A secant through `P_q` usable in the secant construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecantChoice {
    pub line: ProjLine,
    /// The affine point where the line meets the quadric again.
    pub second_point: Point,
    pub detail: SecantDetail,
    /// `a < k` with the second point on `l_a`.
    pub r_index: Option<usize>,
    /// `k <= b <= q-1` with the second point on `l'_b`.
    pub r_prime_index: Option<usize>,
}

/// Indices of the conic points on the `R` and `R'` lines through `x`.
fn regulus_indices(f: &GaloisField, conic: &Conic, quadric: &HyperbolicQuadric, x: &Point) -> [usize; 2] {
    [0, 1].map(|w| {
        let l = regulus_line(f, quadric, w, x);
        let inf = l.infinite_point(f).expect("quadric lines are not at infinity");
        conic.index_of(&inf).expect("quadric meets infinity in the conic")
    })
}

/// The second point of `m` on the quadric, if `m` is a secant through a
/// point of the quadric and not contained in it.
fn second_quadric_point(f: &GaloisField, quadric: &HyperbolicQuadric, m: &ProjLine, first: &Point) -> Option<Point> {
    let on: Vec<Point> = m.points(f).into_iter().filter(|p| quadric.contains_point(p)).collect();
    if on.len() != 2 {
        return None;
    }
    on.into_iter().find(|p| p != first)
}

/// Secants through `P_q` whose second quadric point lies on a line `l_a`
/// (`a < k`) or `l'_b` (`k <= b <= q-1`), sorted by detail and then line.
///
/// The second point is never a conic point: two conic points span a line of
/// the plane at infinity, and such lines are not considered.
pub fn enumerate_secant_choices(
    space: &ProjectiveSpace,
    conic: &Conic,
    k: usize,
    quadric: &HyperbolicQuadric,
) -> Result<Vec<SecantChoice>> {
    let f = space.field();
    check_quadric_through_conic(conic, quadric)?;
    let q = conic.len() - 1;
    if k > q {
        return Err(Error::Precondition(format!("k = {k} exceeds q")));
    }
    let pq = conic.points()[q];
    let mut out = Vec::new();
    for m in space.lines_through(&pq) {
        if m.at_infinity() {
            continue;
        }
        let Some(x) = second_quadric_point(f, quadric, m, &pq) else {
            continue;
        };
        let [a, b] = regulus_indices(f, conic, quadric, &x);
        let r_index = (a < k).then_some(a);
        let r_prime_index = (k <= b && b < q).then_some(b);
        if let Some(detail) = SecantDetail::from_flags(r_index.is_some(), r_prime_index.is_some()) {
            out.push(SecantChoice {
                line: *m,
                second_point: x,
                detail,
                r_index,
                r_prime_index,
            });
        }
    }
    out.sort_by_key(|a| (a.detail, a.line));
    Ok(out)
}

/// `l_0..l_{k-1}` from `R`, `l'_k..l'_{q-1}` from `R'`, and the secant `m`
/// through `P_q`.
pub fn construct_secant_variant(
    space: &ProjectiveSpace,
    conic: &Conic,
    k: usize,
    quadric: &HyperbolicQuadric,
    m: &ProjLine,
) -> Result<KakeyaLineSet> {
    let f = space.field();
    check_quadric_through_conic(conic, quadric)?;
    let q = conic.len() - 1;
    if k > q {
        return Err(Error::Precondition(format!("k = {k} exceeds q")));
    }
    if m.at_infinity() {
        return Err(Error::Precondition("secant lies in the plane at infinity".into()));
    }
    let pq = conic.points()[q];
    if !m.contains(f, &pq) {
        return Err(Error::Precondition("secant does not pass through P_q".into()));
    }
    let x = second_quadric_point(f, quadric, m, &pq)
        .ok_or_else(|| Error::Precondition("line is not a secant of the quadric".into()))?;
    let [a, b] = regulus_indices(f, conic, quadric, &x);
    if !(a < k || (k <= b && b < q)) {
        return Err(Error::Precondition("secant does not meet a chosen regulus line".into()));
    }
    let mut lines: Vec<ProjLine> = conic.points()[..q]
        .iter()
        .enumerate()
        .map(|(i, p)| regulus_line(f, quadric, usize::from(i >= k), p))
        .collect();
    lines.push(*m);
    KakeyaLineSet::new(f, conic, lines)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    RegulusSplit,
    SecantVariant,
    Other,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::RegulusSplit => "RegulusSplit",
            Variant::SecantVariant => "SecantVariant",
            Variant::Other => "Other",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecantWitness {
    /// Conic-point index of the secant line.
    pub index: usize,
    pub line: ProjLine,
    pub second_point: Point,
    pub detail: SecantDetail,
}

/// Result of [`recognize`].
///
/// Reguli are labeled so that `R` is the smaller side: `k` is the number of
/// lines taken from `R` among the lines on the quadric, and `k` is at most
/// the number taken from `R'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionLabel {
    pub variant: Variant,
    pub k: Option<usize>,
    pub quadric: Option<HyperbolicQuadric>,
    /// Conic-point indices whose line is in `R`.
    pub r_side: Vec<usize>,
    pub secant: Option<SecantWitness>,
    /// The pair of lines that determined the quadric.
    pub pair: Option<(usize, usize)>,
}

impl ConstructionLabel {
    fn other() -> Self {
        ConstructionLabel {
            variant: Variant::Other,
            k: None,
            quadric: None,
            r_side: Vec::new(),
            secant: None,
            pair: None,
        }
    }

    /// Rebuilds the line set described by the label.
    pub fn regenerate(&self, f: &GaloisField, conic: &Conic) -> Option<KakeyaLineSet> {
        let quadric = self.quadric.as_ref()?;
        let lines = conic
            .points()
            .iter()
            .enumerate()
            .map(|(i, p)| match &self.secant {
                Some(s) if s.index == i => s.line,
                _ => regulus_line(f, quadric, usize::from(!self.r_side.contains(&i)), p),
            })
            .collect();
        KakeyaLineSet::new(f, conic, lines).ok()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "variant": self.variant.name(),
            "k": self.k,
            "r_side": self.r_side,
            "pair": self.pair.map(|(a, b)| [a, b]),
            "quadric": self.quadric.as_ref().map(|h| h.form().codes()),
        });
        if let Some(s) = &self.secant {
            v["secant"] = json!({
                "index": s.index,
                "line": s.line.to_codes(),
                "second_point": s.second_point.codes(),
                "detail": s.detail.name(),
            });
        }
        v
    }
}

/// Labels a line set against one quadric, if it fits either construction.
fn label_on_quadric(l: &KakeyaLineSet, quadric: &HyperbolicQuadric, pair: (usize, usize)) -> Option<ConstructionLabel> {
    let f = l.field();
    let conic = l.conic();
    let lines = l.lines();
    let n = lines.len();
    let off: Vec<usize> = (0..n).filter(|&i| quadric.regulus_of(&lines[i]).is_none()).collect();
    let in_r = |q: &HyperbolicQuadric, skip: Option<usize>| -> Vec<usize> {
        (0..n)
            .filter(|&i| Some(i) != skip && q.regulus_of(&lines[i]) == Some(0))
            .collect()
    };
    match off.as_slice() {
        [] => {
            let mut quadric = quadric.clone();
            let mut r_side = in_r(&quadric, None);
            if 2 * r_side.len() > n {
                quadric = quadric.swapped();
                r_side = in_r(&quadric, None);
            }
            Some(ConstructionLabel {
                variant: Variant::RegulusSplit,
                k: Some(r_side.len()),
                quadric: Some(quadric),
                r_side,
                secant: None,
                pair: Some(pair),
            })
        }
        &[s] => {
            let m = lines[s];
            let x = second_quadric_point(f, quadric, &m, &conic.points()[s])?;
            let [a, b] = regulus_indices(f, conic, quadric, &x);
            let on_r = a != s && quadric.regulus_of(&lines[a]) == Some(0);
            let on_r_prime = b != s && quadric.regulus_of(&lines[b]) == Some(1);
            let mut detail = SecantDetail::from_flags(on_r, on_r_prime)?;
            let mut quadric = quadric.clone();
            let mut r_side = in_r(&quadric, Some(s));
            if 2 * r_side.len() > n - 1 {
                quadric = quadric.swapped();
                r_side = in_r(&quadric, Some(s));
                detail = detail.swapped();
            }
            Some(ConstructionLabel {
                variant: Variant::SecantVariant,
                k: Some(r_side.len()),
                quadric: Some(quadric),
                r_side,
                secant: Some(SecantWitness {
                    index: s,
                    line: m,
                    second_point: x,
                    detail,
                }),
                pair: Some(pair),
            })
        }
        _ => None,
    }
}

/// Recognizer with a cache of quadrics keyed by line pairs, for labeling
/// many line sets over one field and conic.
pub struct Recognizer<'a> {
    space: &'a ProjectiveSpace,
    cache: HashMap<(ProjLine, ProjLine), Option<HyperbolicQuadric>>,
}

impl<'a> Recognizer<'a> {
    pub fn new(space: &'a ProjectiveSpace) -> Self {
        Recognizer {
            space,
            cache: HashMap::new(),
        }
    }

    fn quadric_for(&mut self, conic: &Conic, a: &ProjLine, b: &ProjLine) -> Option<HyperbolicQuadric> {
        let space = self.space;
        self.cache
            .entry((*a, *b))
            .or_insert_with(|| unique_quadric_through(space, conic, a, b).ok())
            .clone()
    }

    /// Tries disjoint pairs `(i, j)`, `i < j`, in index order, first looking
    /// for a quadric containing every line and then for one containing all
    /// lines but a secant. Sets without a disjoint pair (concurrent lines)
    /// are tried against every hyperbolic quadric through a pair of lines.
    pub fn recognize(&mut self, l: &KakeyaLineSet) -> ConstructionLabel {
        let f = l.field().clone();
        let lines = l.lines();
        let n = lines.len();
        let mut candidates = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if lines[i].is_skew_to(&f, &lines[j]) {
                    if let Some(h) = self.quadric_for(l.conic(), &lines[i], &lines[j]) {
                        candidates.push(((i, j), h));
                    }
                }
            }
        }
        let any_disjoint = (0..n).any(|i| (i + 1..n).any(|j| lines[i].is_skew_to(&f, &lines[j])));
        if !any_disjoint {
            for i in 0..n {
                for j in i + 1..n {
                    for h in hyperbolic_quadrics_containing(self.space, l.conic(), &[lines[i], lines[j]]) {
                        candidates.push(((i, j), h));
                    }
                }
            }
        }
        for want in [Variant::RegulusSplit, Variant::SecantVariant] {
            for (pair, h) in &candidates {
                if let Some(label) = label_on_quadric(l, h, *pair) {
                    if label.variant == want {
                        return label;
                    }
                }
            }
        }
        ConstructionLabel::other()
    }
}

/// `recognize(L)`; see [`Recognizer::recognize`].
pub fn recognize(space: &ProjectiveSpace, l: &KakeyaLineSet) -> ConstructionLabel {
    Recognizer::new(space).recognize(l)
}

/// Convenience: the points of an affine triple as a projective point.
pub fn affine(f: &GaloisField, x: u32, y: u32, z: u32) -> Result<Point> {
    ProjPoint::from_codes(f, [x, y, z, 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrics::standard_quadric;

    fn setup(q: u32) -> (ProjectiveSpace, Conic, HyperbolicQuadric) {
        let f = GaloisField::of_order(q).unwrap();
        let space = ProjectiveSpace::new(f.clone());
        let conic = Conic::standard(&f);
        let h = standard_quadric(&space);
        (space, conic, h)
    }

    #[test]
    fn formulas() {
        assert_eq!([2, 3, 4].map(minimum_size), [4, 8, 14]);
        assert_eq!(regulus_split_size(3, 2), 8);
        assert_eq!(regulus_split_size(4, 2), 14);
        assert_eq!(regulus_split_size(5, 3), 21);
        assert_eq!(secant_variant_size(3, 1), 9);
        assert_eq!(secant_variant_size(4, 2), 15);
        assert_eq!([2, 3, 4, 5].map(theorem_bound), [4, 9, 15, 23]);
    }

    #[test]
    fn regulus_split_sizes_and_graph() {
        let (space, conic, h) = setup(3);
        let f = space.field();
        for k in 0..=4 {
            let l = construct_regulus_split(f, &conic, k, &h).unwrap();
            let size = kakeya_points(&l).size();
            assert_eq!(size as u64, regulus_split_size(3, k as u32));
            assert_eq!(size_via_cliques(&l), size);
            assert_eq!(l.gamma().edge_count(), k * (4 - k));
        }
    }

    #[test]
    fn secant_choices_match_formula() {
        let (space, conic, h) = setup(3);
        let f = space.field();
        for k in 0..=3 {
            let choices = enumerate_secant_choices(&space, &conic, k, &h).unwrap();
            for c in &choices {
                assert!(!conic.points().contains(&c.second_point));
                let l = construct_secant_variant(&space, &conic, k, &h, &c.line).unwrap();
                assert_eq!(kakeya_points(&l).size() as u64, secant_variant_size(3, k as u32));
            }
            if k == 0 {
                assert!(choices.iter().all(|c| c.detail == SecantDetail::OnRPrime));
            }
        }
        let _ = f;
    }

    #[test]
    fn recognition_round_trip() {
        let (space, conic, h) = setup(3);
        let f = space.field();
        let l = construct_regulus_split(f, &conic, 2, &h).unwrap();
        let label = recognize(&space, &l);
        assert_eq!(label.variant, Variant::RegulusSplit);
        assert_eq!(label.k, Some(2));
        assert_eq!(label.regenerate(f, &conic).unwrap(), l);

        let c = &enumerate_secant_choices(&space, &conic, 1, &h).unwrap()[0];
        let l = construct_secant_variant(&space, &conic, 1, &h, &c.line).unwrap();
        let label = recognize(&space, &l);
        assert_eq!(label.variant, Variant::SecantVariant);
        assert_eq!(label.k, Some(1));
        assert_eq!(label.regenerate(f, &conic).unwrap(), l);
    }

    #[test]
    fn cone_at_q2_is_secant_variant() {
        let (space, conic, _) = setup(2);
        let f = space.field();
        let v = affine(f, 0, 0, 0).unwrap();
        let lines = conic.points().iter().map(|p| ProjLine::through(f, p, &v).unwrap()).collect();
        let l = KakeyaLineSet::new(f, &conic, lines).unwrap();
        assert_eq!(kakeya_points(&l).size(), 4);
        let label = recognize(&space, &l);
        assert_eq!(label.variant, Variant::SecantVariant);
        assert_eq!(label.k, Some(1));
        assert_eq!(label.secant.as_ref().unwrap().detail, SecantDetail::OnBoth);
        assert_eq!(label.regenerate(f, &conic).unwrap(), l);
    }

    #[test]
    fn cone_at_q3_is_other() {
        let (space, conic, _) = setup(3);
        let f = space.field();
        let v = affine(f, 1, 2, 0).unwrap();
        let lines = conic.points().iter().map(|p| ProjLine::through(f, p, &v).unwrap()).collect();
        let l = KakeyaLineSet::new(f, &conic, lines).unwrap();
        assert_eq!(size_via_cliques(&l), 9);
        assert_eq!(recognize(&space, &l).variant, Variant::Other);
    }

    #[test]
    fn json_round_trip() {
        let (space, conic, h) = setup(4);
        let l = construct_regulus_split(space.field(), &conic, 2, &h).unwrap();
        let j = serde_json::to_string(&l.to_json()).unwrap();
        let back: LineSetJson = serde_json::from_str(&j).unwrap();
        assert_eq!(KakeyaLineSet::from_json(&back).unwrap(), l);
    }

    #[test]
    fn invalid_line_sets() {
        let (space, conic, h) = setup(3);
        let f = space.field();
        let mut lines = construct_regulus_split(f, &conic, 1, &h).unwrap().lines().to_vec();
        lines.swap(0, 1);
        assert!(KakeyaLineSet::new(f, &conic, lines.clone()).is_err());
        lines.pop();
        assert!(KakeyaLineSet::new(f, &conic, lines).is_err());
    }
}
