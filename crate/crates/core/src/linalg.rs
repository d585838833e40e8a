//! Gaussian elimination over a [`GaloisField`].

use crate::gf::{FieldElement, GaloisField};

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns. Zero rows are dropped.
pub fn rref(f: &GaloisField, rows: &mut Vec<Vec<FieldElement>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c];
            let pivot_row = rows[r].clone();
            for (x, &y) in rows[i].iter_mut().zip(&pivot_row) {
                *x = f.sub(*x, f.mul(factor, y));
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: &GaloisField, rows: &[Vec<FieldElement>]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// Basis of `{x : A x = 0}` for the `rows x ncols` matrix `A`.
///
/// Each basis vector has a 1 in one free column and zeros in the other free
/// columns, so the basis is canonical for a given row space.
pub fn nullspace(f: &GaloisField, rows: &[Vec<FieldElement>], ncols: usize) -> Vec<Vec<FieldElement>> {
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![FieldElement::ZERO; ncols];
            v[fc] = FieldElement::ONE;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

/// Square matrix times column vector.
pub fn mat_vec(f: &GaloisField, m: &[Vec<FieldElement>], v: &[FieldElement]) -> Vec<FieldElement> {
    m.iter().map(|row| f.dot(row, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(f: &GaloisField, v: &[u32]) -> Vec<FieldElement> {
        v.iter().map(|&c| f.element(c)).collect()
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let f = GaloisField::new(5, 1).unwrap();
        let a = vec![el(&f, &[1, 2, 3, 4]), el(&f, &[2, 4, 1, 3])];
        let ns = nullspace(&f, &a, 4);
        assert_eq!(ns.len(), 4 - rank(&f, &a));
        for v in &ns {
            for row in &a {
                assert!(f.dot(row, v).is_zero());
            }
        }
    }

    #[test]
    fn rank_over_gf4() {
        let f = GaloisField::new(2, 2).unwrap();
        // second row is x * first row
        let a = vec![el(&f, &[1, 2, 3]), el(&f, &[2, 3, 1])];
        assert_eq!(rank(&f, &a), 1);
        assert_eq!(nullspace(&f, &a, 3).len(), 2);
    }

    #[test]
    fn full_rank_has_trivial_nullspace() {
        let f = GaloisField::new(3, 1).unwrap();
        let a = vec![el(&f, &[1, 0]), el(&f, &[1, 1])];
        assert!(nullspace(&f, &a, 2).is_empty());
    }
}
