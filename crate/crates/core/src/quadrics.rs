//! Quadratic forms, conics and hyperbolic quadrics.
//!
//! Forms are stored by their upper-triangular coefficients `a_ij` (`i <= j`),
//! so `Q(x) = sum a_ij x_i x_j`. This represents every quadratic form in every
//! characteristic, including `X0 X1 + X2^2` over GF(2^h).

use crate::error::{Error, Result};
use crate::gf::{FieldElement, GaloisField};
use crate::linalg;
use crate::projective::{enumerate_points, Point, ProjLine, ProjPoint, ProjectiveSpace};

/// Index pairs `(i, j)`, `i <= j`, in lexicographic order.
pub fn monomials(dim: usize) -> Vec<(usize, usize)> {
    (0..dim).flat_map(|i| (i..dim).map(move |j| (i, j))).collect()
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticForm {
    dim: usize,
    coeffs: Vec<FieldElement>,
}

impl QuadraticForm {
    pub fn new(dim: usize, coeffs: Vec<FieldElement>) -> Result<Self> {
        if !(dim == 3 || dim == 4) || coeffs.len() != dim * (dim + 1) / 2 {
            return Err(Error::Malformed(format!(
                "a form in {dim} variables needs {} coefficients, got {}",
                dim * (dim + 1) / 2,
                coeffs.len()
            )));
        }
        Ok(QuadraticForm { dim, coeffs })
    }

    pub fn from_codes(f: &GaloisField, dim: usize, codes: &[u32]) -> Result<Self> {
        let coeffs = codes.iter().map(|&c| f.try_element(c)).collect::<Result<Vec<_>>>()?;
        Self::new(dim, coeffs)
    }

    /// Builds a form from `(i, j, coefficient)` terms.
    pub fn from_terms(f: &GaloisField, dim: usize, terms: &[(usize, usize, FieldElement)]) -> Self {
        let mons = monomials(dim);
        let mut coeffs = vec![FieldElement::ZERO; mons.len()];
        for &(i, j, c) in terms {
            let key = (i.min(j), i.max(j));
            let k = mons.iter().position(|&m| m == key).expect("index in range");
            coeffs[k] = f.add(coeffs[k], c);
        }
        QuadraticForm { dim, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn codes(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.code()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, f: &GaloisField, x: &[FieldElement]) -> FieldElement {
        debug_assert_eq!(x.len(), self.dim);
        let mut acc = FieldElement::ZERO;
        let mut k = 0;
        for i in 0..self.dim {
            for j in i..self.dim {
                let c = self.coeffs[k];
                k += 1;
                if !c.is_zero() {
                    acc = f.add(acc, f.mul(c, f.mul(x[i], x[j])));
                }
            }
        }
        acc
    }

    /// Scaled so that the first nonzero coefficient is 1.
    pub fn normalized(&self, f: &GaloisField) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(&lead) => {
                let inv = f.inv(lead).expect("nonzero");
                QuadraticForm {
                    dim: self.dim,
                    coeffs: self.coeffs.iter().map(|&c| f.mul(c, inv)).collect(),
                }
            }
        }
    }

    /// Equality up to a nonzero scalar.
    pub fn same_up_to_scalar(&self, f: &GaloisField, other: &QuadraticForm) -> bool {
        self.normalized(f) == other.normalized(f)
    }

    /// Vanishes on the whole line (checked on three points).
    pub fn contains_line(&self, f: &GaloisField, l: &ProjLine) -> bool {
        l.three_points(f).iter().all(|p| self.eval(f, p.coords()).is_zero())
    }

    /// Restriction to the plane `X3 = 0`, as a form in three variables.
    pub fn plane_section(&self) -> QuadraticForm {
        assert_eq!(self.dim, 4);
        let coeffs = monomials(4)
            .iter()
            .zip(&self.coeffs)
            .filter(|((i, j), _)| *i < 3 && *j < 3)
            .map(|(_, &c)| c)
            .collect();
        QuadraticForm { dim: 3, coeffs }
    }
}

/// `points_of(form)`: zeros of the form in PG(N-1,q), in enumeration order.
pub fn points_of<const N: usize>(f: &GaloisField, form: &QuadraticForm) -> Vec<ProjPoint<N>> {
    assert_eq!(form.dim(), N, "form dimension must match the space");
    enumerate_points::<N>(f)
        .into_iter()
        .filter(|p| form.eval(f, p.coords()).is_zero())
        .collect()
}

/// `lines_on(form)`: every line of PG(3,q) inside the zero set.
pub fn lines_on(space: &ProjectiveSpace, form: &QuadraticForm) -> Vec<ProjLine> {
    let f = space.field();
    space.lines().iter().filter(|l| form.contains_line(f, l)).copied().collect()
}

/// `partition_reguli`: splits the `2(q+1)` lines of a hyperbolic quadric into
/// its two reguli. The part containing `lines[0]` comes first.
pub fn partition_reguli(f: &GaloisField, lines: &[ProjLine]) -> Result<(Vec<ProjLine>, Vec<ProjLine>)> {
    let n = lines.len();
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::Structure(format!("{n} lines cannot form two reguli")));
    }
    let meets = |a: &ProjLine, b: &ProjLine| -> Result<bool> { Ok(a.meet(f, b)?.is_some()) };
    let mut first = Vec::new();
    let mut second = Vec::new();
    for l in lines {
        if meets(&lines[0], l).unwrap_or(false) {
            second.push(*l);
        } else {
            first.push(*l);
        }
    }
    if first.len() != n / 2 || second.len() != n / 2 {
        return Err(Error::Structure("meet graph is not a balanced complete bipartite graph".into()));
    }
    for (i, a) in first.iter().enumerate() {
        for b in &first[i + 1..] {
            if meets(a, b)? {
                return Err(Error::Structure("two lines of one regulus meet".into()));
            }
        }
        for b in &second {
            if !meets(a, b)? {
                return Err(Error::Structure("lines of opposite reguli are skew".into()));
            }
        }
    }
    for (i, a) in second.iter().enumerate() {
        for b in &second[i + 1..] {
            if meets(a, b)? {
                return Err(Error::Structure("two lines of one regulus meet".into()));
            }
        }
    }
    Ok((first, second))
}

/// A non-singular conic in the plane at infinity `X3 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conic {
    form: QuadraticForm,
    /// The q+1 points `P_0..P_q`, embedded in PG(3,q) with `X3 = 0`, sorted.
    points: Vec<Point>,
}

impl Conic {
    pub fn new(f: &GaloisField, form: QuadraticForm) -> Result<Self> {
        if form.dim() != 3 {
            return Err(Error::Malformed("a conic is a form in 3 variables".into()));
        }
        let plane_pts = points_of::<3>(f, &form);
        if plane_pts.len() != f.q() as usize + 1 {
            return Err(Error::Precondition(format!(
                "conic has {} points, expected {}",
                plane_pts.len(),
                f.q() + 1
            )));
        }
        let points: Vec<Point> = plane_pts
            .iter()
            .map(|p| {
                let c = p.coords();
                ProjPoint::new(f, [c[0], c[1], c[2], FieldElement::ZERO]).expect("nonzero")
            })
            .collect();
        // q+1 points with no three collinear; this rules out a repeated line.
        for (i, a) in points.iter().enumerate() {
            for (j, b) in points.iter().enumerate().skip(i + 1) {
                let l = ProjLine::through(f, a, b)?;
                if points.iter().skip(j + 1).any(|c| l.contains(f, c)) {
                    return Err(Error::Precondition("conic contains three collinear points".into()));
                }
            }
        }
        Ok(Conic { form, points })
    }

    /// `standard_conic`: `X0 X1 + X2^2 = 0`.
    pub fn standard(f: &GaloisField) -> Self {
        let one = FieldElement::ONE;
        let form = QuadraticForm::from_terms(f, 3, &[(0, 1, one), (2, 2, one)]);
        Conic::new(f, form).expect("the standard conic is non-singular")
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    /// The conic form lifted to four variables (no `X3` terms).
    pub fn lifted_form(&self, f: &GaloisField) -> QuadraticForm {
        let terms: Vec<_> = monomials(3)
            .into_iter()
            .zip(self.form.coeffs())
            .map(|((i, j), &c)| (i, j, c))
            .collect();
        QuadraticForm::from_terms(f, 4, &terms)
    }
}

/// A hyperbolic quadric of PG(3,q) with its two reguli.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicQuadric {
    form: QuadraticForm,
    points: Vec<Point>,
    reguli: [Vec<ProjLine>; 2],
}

impl HyperbolicQuadric {
    /// Checks the form has `(q+1)^2` points and `2(q+1)` lines and splits
    /// the lines into reguli.
    pub fn from_form(space: &ProjectiveSpace, form: QuadraticForm) -> Result<Self> {
        let f = space.field();
        if form.dim() != 4 {
            return Err(Error::Malformed("a quadric of PG(3,q) is a form in 4 variables".into()));
        }
        let form = form.normalized(f);
        let q = f.q() as usize;
        let points = points_of::<4>(f, &form);
        if points.len() != (q + 1) * (q + 1) {
            return Err(Error::Structure(format!(
                "quadric has {} points, a hyperbolic quadric has {}",
                points.len(),
                (q + 1) * (q + 1)
            )));
        }
        let lines = lines_on(space, &form);
        if lines.len() != 2 * (q + 1) {
            return Err(Error::Structure(format!(
                "quadric contains {} lines, a hyperbolic quadric contains {}",
                lines.len(),
                2 * (q + 1)
            )));
        }
        let (r, r_opp) = partition_reguli(f, &lines)?;
        Ok(HyperbolicQuadric {
            form,
            points,
            reguli: [r, r_opp],
        })
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Regulus `R` (index 0) or `R'` (index 1).
    pub fn regulus(&self, which: usize) -> &[ProjLine] {
        &self.reguli[which]
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn contains_line(&self, f: &GaloisField, l: &ProjLine) -> bool {
        self.form.contains_line(f, l)
    }

    /// Which regulus the line belongs to, if it lies on the quadric.
    pub fn regulus_of(&self, l: &ProjLine) -> Option<usize> {
        (0..2).find(|&w| self.reguli[w].contains(l))
    }

    /// The unique line of regulus `which` through a point of the quadric.
    pub fn line_through(&self, f: &GaloisField, which: usize, p: &Point) -> Option<ProjLine> {
        self.reguli[which].iter().find(|l| l.contains(f, p)).copied()
    }

    /// Same quadric with `R` and `R'` interchanged.
    pub fn swapped(&self) -> Self {
        HyperbolicQuadric {
            form: self.form.clone(),
            points: self.points.clone(),
            reguli: [self.reguli[1].clone(), self.reguli[0].clone()],
        }
    }

    /// Relabels the reguli so that `l` lies in `R`.
    pub fn with_line_in_r(&self, l: &ProjLine) -> Option<Self> {
        match self.regulus_of(l)? {
            0 => Some(self.clone()),
            _ => Some(self.swapped()),
        }
    }

    /// Points of the quadric in the plane `X3 = 0`.
    pub fn points_at_infinity(&self) -> Vec<Point> {
        self.points.iter().filter(|p| p.coords()[3].is_zero()).copied().collect()
    }
}

fn check_line_meets_conic(f: &GaloisField, conic: &Conic, l: &ProjLine) -> Result<usize> {
    if l.at_infinity() {
        return Err(Error::Precondition("line lies in the plane at infinity".into()));
    }
    let inf = l.infinite_point(f).expect("not at infinity");
    conic
        .index_of(&inf)
        .ok_or_else(|| Error::Precondition("line does not meet the conic".into()))
}

/// Linear conditions on the 10 coefficients of a quadric in PG(3,q) whose
/// section with `X3 = 0` is a multiple of the conic's form and which contains
/// the given lines.
fn conditions(f: &GaloisField, conic: &Conic, lines: &[ProjLine]) -> Vec<Vec<FieldElement>> {
    let mons = monomials(4);
    let row_for = |p: &Point| -> Vec<FieldElement> {
        let x = p.coords();
        mons.iter().map(|&(i, j)| f.mul(x[i], x[j])).collect()
    };
    let mut rows: Vec<Vec<FieldElement>> = conic.points().iter().map(row_for).collect();
    // Proportionality of the plane section to the conic form. Over GF(2) and
    // GF(3) the conic's points alone do not determine its form.
    let plane: Vec<usize> = mons
        .iter()
        .enumerate()
        .filter(|(_, (i, j))| *i < 3 && *j < 3)
        .map(|(k, _)| k)
        .collect();
    let cf = conic.form().coeffs();
    let r = cf.iter().position(|c| !c.is_zero()).expect("conic form is nonzero");
    for (k, &col) in plane.iter().enumerate() {
        if k == r {
            continue;
        }
        let mut row = vec![FieldElement::ZERO; mons.len()];
        row[col] = cf[r];
        row[plane[r]] = f.neg(cf[k]);
        rows.push(row);
    }
    for l in lines {
        rows.extend(l.three_points(f).iter().map(row_for));
    }
    rows
}

/// `unique_quadric_through(C, m, m')` for two skew lines meeting the conic.
pub fn unique_quadric_through(
    space: &ProjectiveSpace,
    conic: &Conic,
    m: &ProjLine,
    m2: &ProjLine,
) -> Result<HyperbolicQuadric> {
    let f = space.field();
    check_line_meets_conic(f, conic, m)?;
    check_line_meets_conic(f, conic, m2)?;
    if m == m2 || m.meet(f, m2)?.is_some() {
        return Err(Error::Precondition("the two lines must be disjoint".into()));
    }
    let ns = linalg::nullspace(f, &conditions(f, conic, &[*m, *m2]), 10);
    if ns.len() != 1 {
        return Err(Error::Internal(format!("coefficient nullspace has dimension {}", ns.len())));
    }
    let form = QuadraticForm::new(4, ns.into_iter().next().unwrap())?;
    HyperbolicQuadric::from_form(space, form).map_err(|e| Error::Internal(format!("solution is not hyperbolic: {e}")))
}

/// Dimension of the space of quadratic forms meeting `X3 = 0` in a multiple
/// of the conic form and containing `m` and `m'`.
pub fn quadric_nullspace_dim(f: &GaloisField, conic: &Conic, m: &ProjLine, m2: &ProjLine) -> usize {
    linalg::nullspace(f, &conditions(f, conic, &[*m, *m2]), 10).len()
}

/// Every hyperbolic quadric meeting `X3 = 0` in the conic and containing all
/// of `lines`. Used when the lines pairwise meet, where the solution is not
/// unique.
pub fn hyperbolic_quadrics_containing(
    space: &ProjectiveSpace,
    conic: &Conic,
    lines: &[ProjLine],
) -> Vec<HyperbolicQuadric> {
    let f = space.field();
    let basis = linalg::nullspace(f, &conditions(f, conic, lines), 10);
    let d = basis.len();
    if d == 0 {
        return Vec::new();
    }
    let q = f.q() as usize;
    let mut out = Vec::new();
    // Projective combinations: leading coefficient 1.
    for lead in 0..d {
        let free = d - 1 - lead;
        for n in 0..q.pow(free as u32) {
            let mut coef = vec![FieldElement::ZERO; d];
            coef[lead] = FieldElement::ONE;
            let mut rest = n;
            for c in coef.iter_mut().skip(lead + 1) {
                *c = f.element((rest % q) as u32);
                rest /= q;
            }
            let v: Vec<FieldElement> = (0..10)
                .map(|k| f.sum(coef.iter().zip(&basis).map(|(&c, b)| f.mul(c, b[k]))))
                .collect();
            let form = QuadraticForm::new(4, v).expect("10 coefficients");
            if form.plane_section().is_zero() {
                continue;
            }
            if let Ok(h) = HyperbolicQuadric::from_form(space, form) {
                out.push(h);
            }
        }
    }
    out
}

/// The quadric `X0 X1 + X2^2 - X1 X3 - X2 X3` through the standard conic,
/// containing `<(1,0,0,0),(0,0,0,1)>` and `<(0,1,0,0),(1,1,1,1)>`.
pub fn standard_quadric(space: &ProjectiveSpace) -> HyperbolicQuadric {
    let f = space.field();
    let (m, m2) = standard_frame_lines(f);
    unique_quadric_through(space, &Conic::standard(f), &m, &m2).expect("frame lines are valid")
}

/// The two skew lines of the standard frame.
pub fn standard_frame_lines(f: &GaloisField) -> (ProjLine, ProjLine) {
    let p = |c| ProjPoint::from_codes(f, c).expect("valid codes");
    (
        ProjLine::through(f, &p([1, 0, 0, 0]), &p([0, 0, 0, 1])).expect("distinct"),
        ProjLine::through(f, &p([0, 1, 0, 0]), &p([1, 1, 1, 1])).expect("distinct"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::PlanePoint;

    fn gf(q: u32) -> GaloisField {
        GaloisField::of_order(q).unwrap()
    }

    fn standard_hyperbolic(f: &GaloisField) -> QuadraticForm {
        let one = FieldElement::ONE;
        QuadraticForm::from_terms(f, 4, &[(0, 1, one), (2, 3, one)])
    }

    #[test]
    fn standard_conic_over_gf2() {
        let f = gf(2);
        let c = Conic::standard(&f);
        // brute force over the 7 points of PG(2,2)
        let expected: Vec<PlanePoint> = enumerate_points::<3>(&f)
            .into_iter()
            .filter(|p| {
                let x = p.codes();
                (x[0] * x[1] + x[2] * x[2]) % 2 == 0
            })
            .collect();
        let mut want: Vec<[u32; 3]> = vec![[1, 0, 0], [0, 1, 0], [1, 1, 1]];
        want.sort();
        let mut got: Vec<[u32; 3]> = expected.iter().map(|p| p.codes()).collect();
        got.sort();
        assert_eq!(got, want);
        assert_eq!(c.len(), 3);
        assert_eq!(Conic::standard(&gf(3)).len(), 4);
        assert_eq!(Conic::standard(&gf(4)).len(), 5);
    }

    #[test]
    fn degenerate_conics_are_rejected() {
        let f = gf(3);
        // X0^2 has the line X0 = 0 as zero set: q+1 collinear points
        let double_line = QuadraticForm::from_terms(&f, 3, &[(0, 0, FieldElement::ONE)]);
        assert!(Conic::new(&f, double_line).is_err());
    }

    #[test]
    fn hyperbolic_counts() {
        for q in [2, 3, 4, 5, 7, 8] {
            let s = ProjectiveSpace::new(gf(q));
            let h = HyperbolicQuadric::from_form(&s, standard_hyperbolic(s.field())).unwrap();
            let q = q as usize;
            assert_eq!(h.points().len(), (q + 1) * (q + 1));
            assert_eq!(h.regulus(0).len() + h.regulus(1).len(), 2 * (q + 1));
        }
    }

    #[test]
    fn hyperbolic_point_count_gf2_by_enumeration() {
        let f = gf(2);
        let pts: Vec<_> = enumerate_points::<4>(&f)
            .into_iter()
            .filter(|p| {
                let x = p.codes();
                (x[0] * x[1] + x[2] * x[3]) % 2 == 0
            })
            .collect();
        assert_eq!(pts.len(), 9);
        assert_eq!(points_of::<4>(&f, &standard_hyperbolic(&f)), pts);
    }

    #[test]
    fn elliptic_form_has_no_lines() {
        // X0 X1 + X2^2 + X2 X3 + X3^2 over GF(2): X2^2+X2X3+X3^2 is irreducible
        let f = gf(2);
        let s = ProjectiveSpace::new(f.clone());
        let one = FieldElement::ONE;
        let e = QuadraticForm::from_terms(&f, 4, &[(0, 1, one), (2, 2, one), (2, 3, one), (3, 3, one)]);
        assert_eq!(points_of::<4>(&f, &e).len(), 5);
        assert!(lines_on(&s, &e).is_empty());
        assert!(HyperbolicQuadric::from_form(&s, e).is_err());
    }

    #[test]
    fn zero_form_vanishes_everywhere() {
        let f = gf(2);
        let z = QuadraticForm::new(4, vec![FieldElement::ZERO; 10]).unwrap();
        assert_eq!(points_of::<4>(&f, &z).len(), 15);
    }

    #[test]
    fn reguli_partition() {
        let f = gf(3);
        let s = ProjectiveSpace::new(f.clone());
        let form = standard_hyperbolic(&f);
        let lines = lines_on(&s, &form);
        let (r, r2) = partition_reguli(&f, &lines).unwrap();
        assert_eq!((r.len(), r2.len()), (4, 4));
        let mut meets: Vec<Point> = r
            .iter()
            .flat_map(|a| r2.iter().map(|b| a.meet(&f, b).unwrap().unwrap()))
            .collect();
        meets.sort();
        meets.dedup();
        assert_eq!(meets, points_of::<4>(&f, &form));
        // relabeling by moving another line first keeps the partition
        let mut rotated = lines.clone();
        let pos = rotated.iter().position(|l| *l == r2[0]).unwrap();
        rotated.swap(0, pos);
        let (a, b) = partition_reguli(&f, &rotated).unwrap();
        let sorted = |mut v: Vec<ProjLine>| {
            v.sort();
            v
        };
        assert_eq!(sorted(a), sorted(r2));
        assert_eq!(sorted(b), sorted(r));
    }

    #[test]
    fn partition_rejects_non_bipartite_input() {
        let f = gf(2);
        let s = ProjectiveSpace::new(f.clone());
        let lines: Vec<ProjLine> = s.lines()[..6].to_vec();
        assert!(matches!(partition_reguli(&f, &lines), Err(Error::Structure(_))));
    }

    #[test]
    fn frame_quadric() {
        for q in [2, 3, 4, 5, 7, 9] {
            let s = ProjectiveSpace::new(gf(q));
            let f = s.field();
            let h = standard_quadric(&s);
            let one = FieldElement::ONE;
            let m1 = f.neg(one);
            let expected = QuadraticForm::from_terms(f, 4, &[(0, 1, one), (2, 2, one), (1, 3, m1), (2, 3, m1)]);
            assert!(h.form().same_up_to_scalar(f, &expected), "q = {q}");
            let (m, m2) = standard_frame_lines(f);
            // disjoint lines on a hyperbolic quadric share a regulus
            assert_eq!(h.regulus_of(&m), h.regulus_of(&m2));
            assert!(h.regulus_of(&m).is_some());
        }
    }

    #[test]
    fn quadric_meets_infinity_in_conic() {
        let s = ProjectiveSpace::new(gf(4));
        let h = standard_quadric(&s);
        assert_eq!(h.points_at_infinity(), Conic::standard(s.field()).points());
    }

    #[test]
    fn preconditions() {
        let s = ProjectiveSpace::new(gf(3));
        let f = s.field();
        let c = Conic::standard(f);
        let (m, m2) = standard_frame_lines(f);
        let p = |x| ProjPoint::from_codes(f, x).unwrap();
        // meets m in (0,0,0,1)
        let meeting = ProjLine::through(f, &p([0, 1, 0, 0]), &p([0, 0, 0, 1])).unwrap();
        assert!(matches!(unique_quadric_through(&s, &c, &m, &meeting), Err(Error::Precondition(_))));
        let inf = ProjLine::through(f, &p([1, 0, 0, 0]), &p([0, 1, 0, 0])).unwrap();
        assert!(matches!(unique_quadric_through(&s, &c, &inf, &m2), Err(Error::Precondition(_))));
        // direction (0,0,1,0) is not on X0X1 + X2^2
        let off = ProjLine::through(f, &p([0, 0, 1, 0]), &p([1, 1, 0, 1])).unwrap();
        assert!(matches!(unique_quadric_through(&s, &c, &off, &m2), Err(Error::Precondition(_))));
    }
}
