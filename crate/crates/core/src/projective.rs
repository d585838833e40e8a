//! Points, lines and planes of PG(3,q) (and points of PG(2,q)).
//!
//! Every object is stored in canonical form: points and planes have their
//! leftmost nonzero coordinate equal to 1, lines are the reduced row echelon
//! form of a 2x4 basis. Equality and hashing are therefore exact.
//!
//! The plane at infinity is fixed as `X3 = 0`; the remaining points form
//! AG(3,q) and are written `(x, y, z, 1)`.

use std::collections::HashMap;


use crate::error::{Error, Result};
use crate::gf::{FieldElement, GaloisField};
use crate::linalg;

/// A point of PG(N-1, q) with normalized homogeneous coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjPoint<const N: usize>([FieldElement; N]);

/// A point of PG(3,q).
pub type Point = ProjPoint<4>;
/// A point of PG(2,q).
pub type PlanePoint = ProjPoint<3>;

fn normalize<const N: usize>(f: &GaloisField, mut v: [FieldElement; N]) -> Option<[FieldElement; N]> {
    let lead = v.iter().copied().find(|x| !x.is_zero())?;
    let inv = f.inv(lead).expect("nonzero");
    for x in v.iter_mut() {
        *x = f.mul(*x, inv);
    }
    Some(v)
}

impl<const N: usize> ProjPoint<N> {
    /// Normalizes `coords`; the zero vector is rejected.
    pub fn new(f: &GaloisField, coords: [FieldElement; N]) -> Result<Self> {
        normalize(f, coords)
            .map(ProjPoint)
            .ok_or(Error::Degenerate("the zero vector is not a projective point"))
    }

    /// Like [`ProjPoint::new`] but from raw integer codes.
    pub fn from_codes(f: &GaloisField, codes: [u32; N]) -> Result<Self> {
        let mut c = [FieldElement::ZERO; N];
        for (dst, &src) in c.iter_mut().zip(&codes) {
            *dst = f.try_element(src)?;
        }
        Self::new(f, c)
    }

    pub fn coords(&self) -> &[FieldElement; N] {
        &self.0
    }

    pub fn codes(&self) -> [u32; N] {
        self.0.map(FieldElement::code)
    }

    /// Position of this point in [`enumerate_points`] order.
    pub fn index(&self, q: u32) -> usize {
        let q = q as usize;
        let lead = self.0.iter().position(|x| !x.is_zero()).expect("normalized");
        let before: usize = (lead + 1..N).map(|j| q.pow((N - 1 - j) as u32)).sum();
        let tail = self.0[lead + 1..]
            .iter()
            .fold(0usize, |acc, x| acc * q + x.code() as usize);
        before + tail
    }
}

/// All points of PG(N-1, q), ascending in lexicographic coordinate order.
pub fn enumerate_points<const N: usize>(f: &GaloisField) -> Vec<ProjPoint<N>> {
    let q = f.q() as usize;
    let mut out = Vec::new();
    for lead in (0..N).rev() {
        let free = N - 1 - lead;
        for n in 0..q.pow(free as u32) {
            let mut v = [FieldElement::ZERO; N];
            v[lead] = FieldElement::ONE;
            let mut rest = n;
            for j in (lead + 1..N).rev() {
                v[j] = f.element((rest % q) as u32);
                rest /= q;
            }
            out.push(ProjPoint(v));
        }
    }
    out
}

/// Number of points of PG(dim, q).
pub fn point_count(q: u32, dim: u32) -> usize {
    ((q as usize).pow(dim + 1) - 1) / (q as usize - 1)
}

/// A line of PG(3,q), stored as the RREF of a basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjLine {
    rows: [[FieldElement; 4]; 2],
}

fn lincomb(f: &GaloisField, a: FieldElement, u: &[FieldElement; 4], b: FieldElement, v: &[FieldElement; 4]) -> [FieldElement; 4] {
    std::array::from_fn(|i| f.add(f.mul(a, u[i]), f.mul(b, v[i])))
}

impl ProjLine {
    /// The line spanned by two vectors; fails if they are dependent.
    pub fn from_rows(f: &GaloisField, a: [FieldElement; 4], b: [FieldElement; 4]) -> Result<Self> {
        let mut m = vec![a.to_vec(), b.to_vec()];
        if linalg::rref(f, &mut m).len() != 2 {
            return Err(Error::Degenerate("a line needs two independent points"));
        }
        Ok(ProjLine {
            rows: [
                m[0].clone().try_into().expect("4 columns"),
                m[1].clone().try_into().expect("4 columns"),
            ],
        })
    }

    /// `line_through(P, Q)`.
    pub fn through(f: &GaloisField, a: &Point, b: &Point) -> Result<Self> {
        if a == b {
            return Err(Error::Degenerate("line through two equal points"));
        }
        Self::from_rows(f, a.0, b.0)
    }

    pub fn rows(&self) -> &[[FieldElement; 4]; 2] {
        &self.rows
    }

    /// The two RREF rows as normalized points.
    pub fn basis_points(&self) -> [Point; 2] {
        [ProjPoint(self.rows[0]), ProjPoint(self.rows[1])]
    }

    fn pivots(&self) -> (usize, usize) {
        let p0 = self.rows[0].iter().position(|x| !x.is_zero()).expect("rank 2");
        let p1 = self.rows[1].iter().position(|x| !x.is_zero()).expect("rank 2");
        (p0, p1)
    }

    /// `points_on(l)`: the q+1 points, sorted.
    pub fn points(&self, f: &GaloisField) -> Vec<Point> {
        let [r0, r1] = &self.rows;
        let mut pts: Vec<Point> = std::iter::once(ProjPoint(*r1))
            .chain(f.elements().map(|t| ProjPoint::new(f, lincomb(f, FieldElement::ONE, r0, t, r1)).expect("independent rows")))
            .collect();
        pts.sort();
        pts
    }

    /// Three distinct points on the line. A quadratic form vanishing on them
    /// vanishes on the whole line.
    pub fn three_points(&self, f: &GaloisField) -> [Point; 3] {
        let [r0, r1] = &self.rows;
        let s = lincomb(f, FieldElement::ONE, r0, FieldElement::ONE, r1);
        [ProjPoint(*r0), ProjPoint(*r1), ProjPoint::new(f, s).expect("independent rows")]
    }

    pub fn contains(&self, f: &GaloisField, p: &Point) -> bool {
        let (c0, c1) = self.pivots();
        let cand = lincomb(f, p.0[c0], &self.rows[0], p.0[c1], &self.rows[1]);
        cand == p.0
    }

    /// `meet(l1, l2)`: the common point of two distinct lines, `None` if skew.
    pub fn meet(&self, f: &GaloisField, other: &ProjLine) -> Result<Option<Point>> {
        if self == other {
            return Err(Error::Degenerate("meet of a line with itself"));
        }
        // Solve a r0 + b r1 - c s0 - d s1 = 0; columns are the four vectors.
        let vecs = [self.rows[0], self.rows[1], other.rows[0], other.rows[1]];
        let m: Vec<Vec<FieldElement>> = (0..4).map(|i| vecs.iter().map(|v| v[i]).collect()).collect();
        let ns = linalg::nullspace(f, &m, 4);
        match ns.len() {
            0 => Ok(None),
            1 => {
                let v = &ns[0];
                let pt = lincomb(f, v[0], &self.rows[0], v[1], &self.rows[1]);
                Ok(Some(ProjPoint::new(f, pt).expect("distinct lines meet in a point")))
            }
            _ => Err(Error::Internal("distinct lines share more than one point".into())),
        }
    }

    pub fn is_skew_to(&self, f: &GaloisField, other: &ProjLine) -> bool {
        self != other && matches!(self.meet(f, other), Ok(None))
    }

    /// True if the line lies in the plane at infinity `X3 = 0`.
    pub fn at_infinity(&self) -> bool {
        self.rows.iter().all(|r| r[3].is_zero())
    }

    /// The unique point at infinity of a line not contained in `X3 = 0`.
    pub fn infinite_point(&self, f: &GaloisField) -> Option<Point> {
        if self.at_infinity() {
            return None;
        }
        // Row 1 is the one with a nonzero last coordinate when row 0 has none;
        // otherwise combine to kill X3.
        let [r0, r1] = &self.rows;
        let v = if r0[3].is_zero() {
            *r0
        } else if r1[3].is_zero() {
            *r1
        } else {
            lincomb(f, r1[3], r0, f.neg(r0[3]), r1)
        };
        Some(ProjPoint::new(f, v).expect("independent rows"))
    }

    /// The q affine points of a line not in the plane at infinity.
    pub fn affine_points(&self, f: &GaloisField) -> Vec<AffinePoint> {
        self.points(f)
            .iter()
            .filter_map(|p| match split_affine(f, p) {
                PointKind::Affine(a) => Some(a),
                PointKind::Infinite => None,
            })
            .collect()
    }

    pub fn to_codes(&self) -> [[u32; 4]; 2] {
        [self.rows[0].map(FieldElement::code), self.rows[1].map(FieldElement::code)]
    }

    pub fn from_codes(f: &GaloisField, codes: [[u32; 4]; 2]) -> Result<Self> {
        let a = ProjPoint::from_codes(f, codes[0])?;
        let b = ProjPoint::from_codes(f, codes[1])?;
        Self::through(f, &a, &b)
    }
}

/// A plane of PG(3,q) in dual coordinates: points `x` with `<coords, x> = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjPlane([FieldElement; 4]);

impl ProjPlane {
    pub fn new(f: &GaloisField, coords: [FieldElement; 4]) -> Result<Self> {
        normalize(f, coords)
            .map(ProjPlane)
            .ok_or(Error::Degenerate("the zero vector is not a plane"))
    }

    /// The plane `X3 = 0`.
    pub fn at_infinity() -> Self {
        ProjPlane([FieldElement::ZERO, FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE])
    }

    pub fn coords(&self) -> &[FieldElement; 4] {
        &self.0
    }

    /// `plane_through(P, Q, R)`; fails on a collinear triple.
    pub fn through(f: &GaloisField, a: &Point, b: &Point, c: &Point) -> Result<Self> {
        let m = vec![a.0.to_vec(), b.0.to_vec(), c.0.to_vec()];
        let ns = linalg::nullspace(f, &m, 4);
        if ns.len() != 1 {
            return Err(Error::Degenerate("plane through a collinear triple"));
        }
        Self::new(f, ns[0].clone().try_into().expect("4 columns"))
    }

    /// `plane_meet_plane`.
    pub fn meet(&self, f: &GaloisField, other: &ProjPlane) -> Result<ProjLine> {
        if self == other {
            return Err(Error::Degenerate("meet of a plane with itself"));
        }
        let ns = linalg::nullspace(f, &[self.0.to_vec(), other.0.to_vec()], 4);
        ProjLine::from_rows(f, ns[0].clone().try_into().expect("4"), ns[1].clone().try_into().expect("4"))
    }

    /// `point_on_plane`.
    pub fn contains_point(&self, f: &GaloisField, p: &Point) -> bool {
        f.dot(&self.0, &p.0).is_zero()
    }

    /// `line_in_plane`.
    pub fn contains_line(&self, f: &GaloisField, l: &ProjLine) -> bool {
        l.rows.iter().all(|r| f.dot(&self.0, r).is_zero())
    }
}

/// A point of AG(3,q), i.e. the projective point `(x, y, z, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffinePoint(pub [FieldElement; 3]);

impl AffinePoint {
    /// Index in `0..q^3`, lexicographic in `(x, y, z)`.
    pub fn index(&self, q: u32) -> usize {
        self.0.iter().fold(0usize, |acc, c| acc * q as usize + c.code() as usize)
    }

    pub fn to_projective(&self) -> Point {
        ProjPoint([self.0[0], self.0[1], self.0[2], FieldElement::ONE])
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointKind {
    Infinite,
    Affine(AffinePoint),
}

/// `split_affine`: classify a point relative to the plane `X3 = 0`.
pub fn split_affine(f: &GaloisField, p: &Point) -> PointKind {
    let w = p.0[3];
    if w.is_zero() {
        return PointKind::Infinite;
    }
    let inv = f.inv(w).expect("nonzero");
    PointKind::Affine(AffinePoint([f.mul(p.0[0], inv), f.mul(p.0[1], inv), f.mul(p.0[2], inv)]))
}

/// All lines of PG(3,q) in sorted canonical order.
pub fn enumerate_lines(f: &GaloisField) -> Vec<ProjLine> {
    let q = f.q() as usize;
    let mut out = Vec::new();
    for c0 in 0..4 {
        for c1 in c0 + 1..4 {
            let free0: Vec<usize> = (c0 + 1..4).filter(|&c| c != c1).collect();
            let free1: Vec<usize> = (c1 + 1..4).collect();
            let total = q.pow((free0.len() + free1.len()) as u32);
            for n in 0..total {
                let mut rest = n;
                let mut rows = [[FieldElement::ZERO; 4]; 2];
                rows[0][c0] = FieldElement::ONE;
                rows[1][c1] = FieldElement::ONE;
                for &c in free0.iter() {
                    rows[0][c] = f.element((rest % q) as u32);
                    rest /= q;
                }
                for &c in free1.iter() {
                    rows[1][c] = f.element((rest % q) as u32);
                    rest /= q;
                }
                out.push(ProjLine { rows });
            }
        }
    }
    out.sort();
    out
}

/// Number of lines of PG(3,q).
pub fn line_count(q: u32) -> usize {
    let q = q as usize;
    (q * q + 1) * (q * q + q + 1)
}

/// PG(3,q) together with an indexed table of all its lines.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    field: GaloisField,
    lines: Vec<ProjLine>,
    index: HashMap<ProjLine, usize>,
}

impl ProjectiveSpace {
    pub fn new(field: GaloisField) -> Self {
        let lines = enumerate_lines(&field);
        let index = lines.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        ProjectiveSpace { field, lines, index }
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn line_index(&self, l: &ProjLine) -> usize {
        self.index[l]
    }

    pub fn lines_through<'a>(&'a self, p: &'a Point) -> impl Iterator<Item = &'a ProjLine> + 'a {
        self.lines.iter().filter(move |l| l.contains(&self.field, p))
    }
}

/// An invertible 4x4 matrix acting on PG(3,q) by `x -> M x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collineation {
    m: Vec<Vec<FieldElement>>,
}

impl Collineation {
    pub fn new(f: &GaloisField, m: [[FieldElement; 4]; 4]) -> Result<Self> {
        let m: Vec<Vec<FieldElement>> = m.iter().map(|r| r.to_vec()).collect();
        if linalg::rank(f, &m) != 4 {
            return Err(Error::Degenerate("singular collineation matrix"));
        }
        Ok(Collineation { m })
    }

    pub fn identity() -> Self {
        let m = (0..4)
            .map(|i| (0..4).map(|j| if i == j { FieldElement::ONE } else { FieldElement::ZERO }).collect())
            .collect();
        Collineation { m }
    }

    /// `apply_collineation(M, P)`.
    pub fn apply(&self, f: &GaloisField, p: &Point) -> Point {
        let v = linalg::mat_vec(f, &self.m, &p.0);
        ProjPoint::new(f, v.try_into().expect("4")).expect("invertible matrices map nonzero vectors to nonzero vectors")
    }

    pub fn apply_line(&self, f: &GaloisField, l: &ProjLine) -> ProjLine {
        let [a, b] = l.basis_points();
        ProjLine::through(f, &self.apply(f, &a), &self.apply(f, &b)).expect("invertible")
    }
}
