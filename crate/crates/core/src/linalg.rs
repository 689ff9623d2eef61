//! Exact row reduction over a field. Pivots are the first nonzero entry in
//! row order; there are no tolerances.

use crate::ring::Ring;

/// Reduce `rows` in place to reduced row-echelon form; returns pivot columns.
pub fn rref<R: Ring>(ring: &R, rows: &mut Vec<Vec<R::Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let Some(p) = (top..rows.len()).find(|&i| !ring.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(top, p);
        let inv = ring
            .inverse(&rows[top][col])
            .expect("nonzero pivot of a field is invertible");
        for x in rows[top].iter_mut() {
            *x = ring.mul(&inv, x);
        }
        let pivot_row = rows[top].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == top || ring.is_zero(&row[col]) {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !ring.is_zero(y) {
                    *x = ring.sub(x, &ring.mul(&f, y));
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    pivots
}

pub fn rank<R: Ring>(ring: &R, rows: &[Vec<R::Elem>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(ring, &mut m, ncols).len()
}

/// Basis of `{x : A x = 0}` for the matrix with the given rows.
pub fn nullspace<R: Ring>(ring: &R, rows: &[Vec<R::Elem>], ncols: usize) -> Vec<Vec<R::Elem>> {
    let mut m = rows.to_vec();
    let pivots = rref(ring, &mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![ring.zero(); ncols];
            v[f] = ring.one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = ring.neg(&row[f]);
            }
            v
        })
        .collect()
}

/// Row-reduced basis of the span of `vectors`.
pub fn span_basis<R: Ring>(ring: &R, vectors: &[Vec<R::Elem>], ncols: usize) -> Vec<Vec<R::Elem>> {
    let mut m = vectors.to_vec();
    rref(ring, &mut m, ncols);
    m
}

pub fn is_independent<R: Ring>(ring: &R, vectors: &[Vec<R::Elem>], ncols: usize) -> bool {
    rank(ring, vectors, ncols) == vectors.len()
}

pub fn in_span<R: Ring>(ring: &R, basis: &[Vec<R::Elem>], v: &[R::Elem], ncols: usize) -> bool {
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    rank(ring, &with, ncols) == rank(ring, basis, ncols)
}

/// Coordinates `c` with `Σ c_i basis_i = v`, if `v` lies in the span.
pub fn solve_in_basis<R: Ring>(ring: &R, basis: &[Vec<R::Elem>], v: &[R::Elem], ncols: usize) -> Option<Vec<R::Elem>> {
    // Columns are basis vectors; augment with v.
    let k = basis.len();
    let mut rows: Vec<Vec<R::Elem>> = (0..ncols)
        .map(|i| {
            let mut r: Vec<R::Elem> = basis.iter().map(|b| b[i].clone()).collect();
            r.push(v[i].clone());
            r
        })
        .collect();
    let pivots = rref(ring, &mut rows, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut c = vec![ring.zero(); k];
    for (row, &pc) in rows.iter().zip(&pivots) {
        c[pc] = row[k].clone();
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;
    use crate::scalars::{int, PrimeField};

    fn v(xs: &[i64]) -> Vec<num_rational::BigRational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn nullspace_of_rank_one() {
        let rows = vec![v(&[1, 2, 3]), v(&[2, 4, 6])];
        let ns = nullspace(&Rationals, &rows, 3);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            let dot: num_rational::BigRational = rows[0].iter().zip(x).map(|(a, b)| a * b).sum();
            assert_eq!(dot, int(0));
        }
        assert_eq!(rank(&Rationals, &rows, 3), 1);
    }

    #[test]
    fn span_membership_and_solve() {
        let basis = vec![v(&[1, 0, 1]), v(&[0, 1, 1])];
        assert!(in_span(&Rationals, &basis, &v(&[2, 3, 5]), 3));
        assert!(!in_span(&Rationals, &basis, &v(&[0, 0, 1]), 3));
        assert_eq!(solve_in_basis(&Rationals, &basis, &v(&[2, 3, 5]), 3), Some(v(&[2, 3])));
        assert_eq!(solve_in_basis(&Rationals, &basis, &v(&[0, 0, 1]), 3), None);
        assert!(is_independent(&Rationals, &basis, 3));
        assert!(!is_independent(&Rationals, &[v(&[1, 1]), v(&[2, 2])], 2));
    }

    #[test]
    fn works_over_prime_fields() {
        let f = PrimeField::new(3).unwrap();
        let a = vec![f.element(1), f.element(1)];
        let b = vec![f.element(2), f.element(2)];
        assert_eq!(rank(&f, &[a.clone(), b], 2), 1);
        assert_eq!(nullspace(&f, &[a], 2), vec![vec![f.element(2), f.element(1)]]);
    }
}
