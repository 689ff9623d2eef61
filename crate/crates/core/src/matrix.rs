//! Square matrices over a pluggable ring.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{check_dim, AlgebraError, Result};
use crate::ring::{Ring, StarRing};

/// Largest dimension accepted by [`Matrix::det`].
pub const DET_MAX_DIM: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    ring: R,
    n: usize,
    entries: Vec<R::Elem>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_fn(ring: R, n: usize, mut f: impl FnMut(usize, usize) -> R::Elem) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for l in 0..n {
                entries.push(f(j, l));
            }
        }
        Self { ring, n, entries }
    }

    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(AlgebraError::InvalidArgument("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            check_dim(n, row.len())?;
            entries.extend(row);
        }
        Ok(Self { ring, n, entries })
    }

    pub fn zero(ring: R, n: usize) -> Self {
        let z = ring.zero();
        Self::from_fn(ring, n, |_, _| z.clone())
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let (z, o) = (ring.zero(), ring.one());
        Self::from_fn(ring, n, |j, l| if j == l { o.clone() } else { z.clone() })
    }

    pub fn scalar(ring: R, n: usize, c: R::Elem) -> Self {
        let z = ring.zero();
        Self::from_fn(ring, n, |j, l| if j == l { c.clone() } else { z.clone() })
    }

    /// The matrix unit `E_{jl}` (0-based).
    pub fn unit(ring: R, n: usize, j: usize, l: usize) -> Self {
        let (z, o) = (ring.zero(), ring.one());
        Self::from_fn(ring, n, |a, b| if (a, b) == (j, l) { o.clone() } else { z.clone() })
    }

    pub fn diagonal(ring: R, diag: Vec<R::Elem>) -> Self {
        let n = diag.len();
        let z = ring.zero();
        Self::from_fn(ring, n, |j, l| if j == l { diag[j].clone() } else { z.clone() })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, j: usize, l: usize) -> &R::Elem {
        &self.entries[j * self.n + l]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R::Elem]> {
        self.entries.chunks(self.n)
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.entries
    }

    pub fn map<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> Matrix<S> {
        Matrix {
            ring,
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        check_dim(self.n, other.n)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip(other, |a, b| self.ring.add(a, b)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip(other, |a, b| self.ring.sub(a, b)))
    }

    pub fn neg(&self) -> Self {
        self.map(self.ring.clone(), |a| self.ring.neg(a))
    }

    fn zip(&self, other: &Self, f: impl Fn(&R::Elem, &R::Elem) -> R::Elem) -> Self {
        Self {
            ring: self.ring.clone(),
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// `c·A`.
    pub fn scale_left(&self, c: &R::Elem) -> Self {
        self.map(self.ring.clone(), |a| self.ring.mul(c, a))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.n;
        let r = &self.ring;
        Self::from_fn(r.clone(), n, |j, m| {
            let mut acc = r.zero();
            for l in 0..n {
                let a = self.get(j, l);
                if r.is_zero(a) {
                    continue;
                }
                acc = r.add(&acc, &r.mul(a, other.get(l, m)));
            }
            acc
        })
    }

    pub fn pow(&self, e: u64) -> Self {
        MatrixRing::new(self.ring.clone(), self.n).pow(self, e)
    }

    /// `y_j = Σ_l t_{jl} x_l`.
    pub fn apply(&self, x: &[R::Elem]) -> Result<Vec<R::Elem>> {
        check_dim(self.n, x.len())?;
        let r = &self.ring;
        Ok(self
            .rows()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .fold(r.zero(), |acc, (a, b)| r.add(&acc, &r.mul(a, b)))
            })
            .collect())
    }

    pub fn trace(&self) -> R::Elem {
        (0..self.n).fold(self.ring.zero(), |acc, j| self.ring.add(&acc, self.get(j, j)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ring.clone(), self.n, |j, l| self.get(l, j).clone())
    }

    /// Entry `(j, l)` of the result is `star(entry (l, j))`.
    pub fn conj_transpose(&self, star: impl Fn(&R::Elem) -> R::Elem) -> Self {
        Self::from_fn(self.ring.clone(), self.n, |j, l| star(self.get(l, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|a| self.ring.is_zero(a))
    }

    /// Determinant over a commutative ring: cofactor expansion up to 4×4,
    /// fraction-free Bareiss elimination from 5×5 to 12×12 when the ring can
    /// divide exactly, otherwise a division-free minor expansion.
    pub fn det(&self) -> Result<R::Elem> {
        if !self.ring.is_commutative() {
            return Err(AlgebraError::Unsupported(
                "determinant over a noncommutative ring".into(),
            ));
        }
        if self.n > DET_MAX_DIM {
            return Err(AlgebraError::TooLarge {
                size: self.n,
                limit: DET_MAX_DIM,
            });
        }
        if self.n <= 4 {
            let cols: Vec<usize> = (0..self.n).collect();
            return Ok(self.cofactor_det(0, &cols));
        }
        if self.ring.is_integral_domain() {
            if let Some(d) = self.bareiss_det() {
                return Ok(d);
            }
        }
        Ok(self.minor_expansion_det())
    }

    fn cofactor_det(&self, row: usize, cols: &[usize]) -> R::Elem {
        let r = &self.ring;
        if cols.is_empty() {
            return r.one();
        }
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        let mut acc = r.zero();
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if r.is_zero(a) {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = r.mul(a, &self.cofactor_det(row + 1, &rest));
            acc = if k % 2 == 0 {
                r.add(&acc, &term)
            } else {
                r.sub(&acc, &term)
            };
        }
        acc
    }

    fn bareiss_det(&self) -> Option<R::Elem> {
        let r = &self.ring;
        let n = self.n;
        let mut m: Vec<Vec<R::Elem>> = self.rows().map(|row| row.to_vec()).collect();
        let mut negate = false;
        let mut prev = r.one();
        for k in 0..n - 1 {
            if r.is_zero(&m[k][k]) {
                match (k + 1..n).find(|&i| !r.is_zero(&m[i][k])) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return Some(r.zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = r.sub(&r.mul(&m[i][j], &m[k][k]), &r.mul(&m[i][k], &m[k][j]));
                    m[i][j] = r.exact_div(&num, &prev)?;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Some(if negate { r.neg(&d) } else { d })
    }

    /// Laplace expansion along rows with memoised minors indexed by column subsets.
    fn minor_expansion_det(&self) -> R::Elem {
        let r = &self.ring;
        let n = self.n;
        let mut minors: Vec<R::Elem> = vec![r.zero(); 1 << n];
        minors[0] = r.one();
        for mask in 1usize..(1 << n) {
            let row = mask.count_ones() as usize - 1;
            let mut acc = r.zero();
            let mut position = 0;
            for c in 0..n {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let a = self.get(row, c);
                if !r.is_zero(a) {
                    let term = r.mul(a, &minors[mask & !(1 << c)]);
                    acc = if (row + position).is_multiple_of(2) {
                        r.add(&acc, &term)
                    } else {
                        r.sub(&acc, &term)
                    };
                }
                position += 1;
            }
            minors[mask] = acc;
        }
        minors[(1 << n) - 1].clone()
    }

    /// True iff the determinant is a unit of the ring.
    pub fn is_invertible(&self) -> Result<bool> {
        let d = self.det()?;
        match self.ring.inverse(&d) {
            Ok(_) => Ok(true),
            Err(AlgebraError::NotInvertible(_)) | Err(AlgebraError::DivisionByZero) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Gauss–Jordan inverse over a division ring.
    pub fn inverse(&self) -> Result<Self> {
        let r = &self.ring;
        let n = self.n;
        let mut a: Vec<Vec<R::Elem>> = self.rows().map(|row| row.to_vec()).collect();
        let mut b: Vec<Vec<R::Elem>> = Self::identity(r.clone(), n).rows().map(|row| row.to_vec()).collect();
        for k in 0..n {
            let pivot = (k..n)
                .find(|&i| !r.is_zero(&a[i][k]))
                .ok_or_else(|| AlgebraError::NotInvertible("singular matrix".into()))?;
            a.swap(k, pivot);
            b.swap(k, pivot);
            let inv = r.inverse(&a[k][k])?;
            for x in a[k].iter_mut().chain(b[k].iter_mut()) {
                *x = r.mul(&inv, x);
            }
            for i in 0..n {
                if i == k || r.is_zero(&a[i][k]) {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..n {
                    a[i][j] = r.sub(&a[i][j], &r.mul(&f, &a[k][j]));
                    b[i][j] = r.sub(&b[i][j], &r.mul(&f, &b[k][j]));
                }
            }
        }
        Self::from_rows(r.clone(), b)
    }

    /// Row-major nested list of canonical entry strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.rows()
            .map(|row| row.iter().map(|a| self.ring.format(a)).collect())
            .collect()
    }
}

pub fn mat_mul<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Result<Matrix<R>> {
    a.mul(b)
}

pub fn mat_apply<R: Ring>(t: &Matrix<R>, x: &[R::Elem]) -> Result<Vec<R::Elem>> {
    t.apply(x)
}

pub fn trace<R: Ring>(t: &Matrix<R>) -> R::Elem {
    t.trace()
}

pub fn det<R: Ring>(t: &Matrix<R>) -> Result<R::Elem> {
    t.det()
}

pub fn is_invertible<R: Ring>(t: &Matrix<R>) -> Result<bool> {
    t.is_invertible()
}

/// `AB - BA`.
pub fn gl_bracket<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Result<Matrix<R>> {
    a.mul(b)?.sub(&b.mul(a)?)
}

pub fn sl_member<R: Ring>(t: &Matrix<R>) -> bool {
    t.ring.is_zero(&t.trace())
}

pub fn conj_transpose<R: Ring>(t: &Matrix<R>, star: impl Fn(&R::Elem) -> R::Elem) -> Matrix<R> {
    t.conj_transpose(star)
}

pub fn is_antisymmetric<R: Ring>(t: &Matrix<R>, star: impl Fn(&R::Elem) -> R::Elem) -> bool {
    t.conj_transpose(star) == t.neg()
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let json = serde_json::to_string(&self.to_string_rows()).map_err(|_| fmt::Error)?;
        f.write_str(&json)
    }
}

/// `M_n(A)` as a ring in its own right.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRing<R: Ring> {
    pub base: R,
    pub n: usize,
}

impl<R: Ring> MatrixRing<R> {
    pub fn new(base: R, n: usize) -> Self {
        Self { base, n }
    }
}

impl<R: Ring> Ring for MatrixRing<R> {
    type Elem = Matrix<R>;

    fn zero(&self) -> Matrix<R> {
        Matrix::zero(self.base.clone(), self.n)
    }
    fn one(&self) -> Matrix<R> {
        Matrix::identity(self.base.clone(), self.n)
    }
    fn add(&self, a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
        a.zip(b, |x, y| self.base.add(x, y))
    }
    fn neg(&self, a: &Matrix<R>) -> Matrix<R> {
        a.neg()
    }
    fn mul(&self, a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
        a.mul_unchecked(b)
    }
    fn is_zero(&self, a: &Matrix<R>) -> bool {
        a.is_zero()
    }
    fn is_commutative(&self) -> bool {
        self.n == 1 && self.base.is_commutative()
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn from_integer(&self, k: &BigInt) -> Matrix<R> {
        Matrix::scalar(self.base.clone(), self.n, self.base.from_integer(k))
    }
    fn from_rational(&self, q: &BigRational) -> Option<Matrix<R>> {
        self.base
            .from_rational(q)
            .map(|c| Matrix::scalar(self.base.clone(), self.n, c))
    }
    fn inverse(&self, a: &Matrix<R>) -> Result<Matrix<R>> {
        a.inverse()
    }
    fn format(&self, a: &Matrix<R>) -> String {
        a.to_string()
    }
}

impl<R: StarRing> StarRing for MatrixRing<R> {
    fn star(&self, a: &Matrix<R>) -> Matrix<R> {
        a.conj_transpose(|x| self.base.star(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;
    use crate::ring::{Integers, Rationals};
    use crate::scalars::{gaussian_int, int, GaussianRationals, PrimeField, Quaternion, Quaternions};

    fn qmat(rows: &[&[i64]]) -> Matrix<Rationals> {
        Matrix::from_rows(
            Rationals,
            rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(),
        )
        .unwrap()
    }

    fn zmat(rows: &[&[i64]]) -> Matrix<Integers> {
        Matrix::from_rows(
            Integers,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn products_and_units() {
        let a = qmat(&[&[1, 2], &[3, 4]]);
        assert_eq!(mat_mul(&a, &Matrix::identity(Rationals, 2)).unwrap(), a);
        let e12 = Matrix::unit(Rationals, 2, 0, 1);
        let e21 = Matrix::unit(Rationals, 2, 1, 0);
        assert_eq!(mat_mul(&e12, &e21).unwrap(), Matrix::unit(Rationals, 2, 0, 0));
        assert!(mat_mul(&a, &Matrix::identity(Rationals, 3)).is_err());
    }

    #[test]
    fn polynomial_entries() {
        let pr = PolyRing::new(Rationals, 1);
        let t = pr.var(1).unwrap();
        let a = Matrix::from_rows(pr.clone(), vec![vec![pr.one(), t.clone()], vec![pr.zero(), pr.one()]]).unwrap();
        let b = Matrix::from_rows(pr.clone(), vec![vec![pr.one(), t.neg()], vec![pr.zero(), pr.one()]]).unwrap();
        assert_eq!(mat_mul(&a, &b).unwrap(), Matrix::identity(pr.clone(), 2));
        assert_eq!(det(&a).unwrap(), pr.one());
    }

    #[test]
    fn apply() {
        let i3 = Matrix::identity(Rationals, 3);
        let x = vec![int(1), int(-2), int(5)];
        assert_eq!(mat_apply(&i3, &x).unwrap(), x);
        let e12 = Matrix::unit(Rationals, 2, 0, 1);
        assert_eq!(mat_apply(&e12, &[int(0), int(7)]).unwrap(), vec![int(7), int(0)]);
        assert!(mat_apply(&e12, &x).is_err());
    }

    #[test]
    fn traces() {
        assert_eq!(trace(&Matrix::unit(Rationals, 2, 0, 0)), int(1));
        assert_eq!(trace(&Matrix::identity(Rationals, 5)), int(5));
        assert!(sl_member(&Matrix::unit(Rationals, 2, 0, 1)));
        assert!(!sl_member(&Matrix::identity(Rationals, 2)));
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&qmat(&[&[2, 3], &[5, 7]])).unwrap(), int(-1));
        assert!(det(&Matrix::identity(Quaternions, 2)).is_err());
        assert_eq!(
            det(&Matrix::identity(Rationals, 13)),
            Err(AlgebraError::TooLarge { size: 13, limit: 12 })
        );
    }

    // Three algorithms on the same 6x6 integer matrix must agree with the
    // permutation-sum definition.
    #[test]
    fn determinant_algorithms_agree() {
        let rows: Vec<Vec<i64>> = (0..6)
            .map(|j| (0..6).map(|l| ((j * 7 + l * 3 + j * l) % 11) as i64 - 5).collect())
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let m = zmat(&refs);
        let leibniz = permutation_det(&rows);
        assert_eq!(m.det().unwrap(), BigInt::from(leibniz));
        assert_eq!(m.minor_expansion_det(), BigInt::from(leibniz));
        assert_eq!(m.bareiss_det(), Some(BigInt::from(leibniz)));
        let q = qmat(&refs);
        assert_eq!(q.det().unwrap(), int(leibniz));
        let pr = PolyRing::new(Rationals, 1);
        let as_poly = q.map(pr.clone(), |x| pr.constant(x.clone()));
        assert_eq!(as_poly.det().unwrap(), pr.constant(int(leibniz)));
    }

    fn permutation_det(rows: &[Vec<i64>]) -> i64 {
        fn perms(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == n {
                out.push(prefix.clone());
                return;
            }
            for c in 0..n {
                if !prefix.contains(&c) {
                    prefix.push(c);
                    perms(n, prefix, out);
                    prefix.pop();
                }
            }
        }
        let n = rows.len();
        let mut all = Vec::new();
        perms(n, &mut Vec::new(), &mut all);
        all.iter()
            .map(|p| {
                let inversions = (0..n)
                    .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                    .filter(|&(a, b)| p[a] > p[b])
                    .count();
                let sign = if inversions % 2 == 0 { 1 } else { -1 };
                sign * (0..n).map(|j| rows[j][p[j]]).product::<i64>()
            })
            .sum()
    }

    #[test]
    fn invertibility() {
        assert!(is_invertible(&zmat(&[&[1, 1], &[0, 1]])).unwrap());
        assert!(!is_invertible(&zmat(&[&[2, 0], &[0, 1]])).unwrap());
        assert!(is_invertible(&qmat(&[&[2, 0], &[0, 1]])).unwrap());
        assert!(!is_invertible(&qmat(&[&[1, 1], &[1, 1]])).unwrap());
        let f7 = PrimeField::new(7).unwrap();
        let m = Matrix::from_rows(
            f7,
            vec![vec![f7.element(3), f7.element(1)], vec![f7.element(2), f7.element(5)]],
        )
        .unwrap();
        assert!(is_invertible(&m).unwrap());
        assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), Matrix::identity(f7, 2));
    }

    #[test]
    fn brackets() {
        let a = qmat(&[&[1, 2], &[3, 4]]);
        assert!(gl_bracket(&a, &a).unwrap().is_zero());
        let e12 = Matrix::unit(Rationals, 2, 0, 1);
        let e21 = Matrix::unit(Rationals, 2, 1, 0);
        assert_eq!(gl_bracket(&e12, &e21).unwrap(), qmat(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn involutions() {
        let sym = qmat(&[&[1, 2], &[2, 5]]);
        assert_eq!(conj_transpose(&sym, |x| x.clone()), sym);

        let g = GaussianRationals;
        let z = g.zero();
        let m = Matrix::from_rows(g, vec![vec![z.clone(), gaussian_int(0, 1)], vec![z.clone(), z.clone()]]).unwrap();
        let expected = Matrix::from_rows(
            g,
            vec![vec![z.clone(), z.clone()], vec![gaussian_int(0, -1), z.clone()]],
        )
        .unwrap();
        assert_eq!(conj_transpose(&m, |x| x.conj()), expected);

        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let h = Quaternions;
        let q = Matrix::from_rows(h, vec![vec![i.clone(), j.clone()], vec![h.zero(), k.clone()]]).unwrap();
        let qe = Matrix::from_rows(h, vec![vec![-&i, h.zero()], vec![-&j, -&k]]).unwrap();
        assert_eq!(conj_transpose(&q, |x| x.conj()), qe);
    }

    #[test]
    fn antisymmetry() {
        assert!(is_antisymmetric(&Matrix::zero(GaussianRationals, 3), |x| x.conj()));
        let ii = Matrix::scalar(GaussianRationals, 2, gaussian_int(0, 1));
        assert!(is_antisymmetric(&ii, |x| x.conj()));
        assert!(!is_antisymmetric(&Matrix::identity(GaussianRationals, 2), |x| x.conj()));
    }

    #[test]
    fn display_is_json() {
        assert_eq!(qmat(&[&[1, 0], &[-2, 3]]).to_string(), r#"[["1","0"],["-2","3"]]"#);
    }
}
