use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::multi_index::MultiIndex;
use crate::error::{AlgebraError, Result};
use crate::ring::{Ring, StarRing};

/// Sparse polynomial in `t_1, …, t_n` over a (possibly noncommutative) ring.
/// The indeterminates commute with each other and with the coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<R: Ring> {
    ring: R,
    nvars: usize,
    terms: BTreeMap<MultiIndex, R::Elem>,
}

impl<R: Ring> Polynomial<R> {
    pub fn zero(ring: R, nvars: usize) -> Self {
        Self {
            ring,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: R, nvars: usize, c: R::Elem) -> Self {
        Self::monomial(ring, MultiIndex::zero(nvars), c)
    }

    pub fn one(ring: R, nvars: usize) -> Self {
        let c = ring.one();
        Self::constant(ring, nvars, c)
    }

    /// The indeterminate `t_j`, 1-based.
    pub fn var(ring: R, nvars: usize, j: usize) -> Result<Self> {
        if j == 0 || j > nvars {
            return Err(AlgebraError::IndexOutOfRange { index: j, max: nvars });
        }
        let c = ring.one();
        Ok(Self::monomial(ring, MultiIndex::unit(nvars, j - 1), c))
    }

    pub fn monomial(ring: R, index: MultiIndex, c: R::Elem) -> Self {
        let nvars = index.nvars();
        let mut p = Self::zero(ring, nvars);
        p.add_term(index, c);
        p
    }

    pub fn from_terms<I>(ring: R, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, R::Elem)>,
    {
        let mut p = Self::zero(ring, nvars);
        for (idx, c) in terms {
            crate::error::check_dim(nvars, idx.nvars())?;
            p.add_term(idx, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, index: MultiIndex, c: R::Elem) {
        debug_assert_eq!(index.nvars(), self.nvars);
        if let Some(old) = self.terms.get_mut(&index) {
            let s = self.ring.add(old, &c);
            if self.ring.is_zero(&s) {
                self.terms.remove(&index);
            } else {
                *old = s;
            }
        } else if !self.ring.is_zero(&c) {
            self.terms.insert(index, c);
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Nonzero terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &R::Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, index: &MultiIndex) -> R::Elem {
        self.terms.get(index).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn constant_term(&self) -> R::Elem {
        self.coeff(&MultiIndex::zero(self.nvars))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(MultiIndex::degree)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        crate::error::check_dim(self.nvars, other.nvars)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| self.ring.neg(c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_bounded(other, None))
    }

    /// Product keeping only terms of total degree `<= bound`.
    pub(crate) fn mul_bounded(&self, other: &Self, bound: Option<u32>) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.nvars);
        for (a, ca) in &self.terms {
            if bound.is_some_and(|d| a.degree() > d) {
                break;
            }
            for (b, cb) in &other.terms {
                if bound.is_some_and(|d| a.degree() + b.degree() > d) {
                    break;
                }
                out.add_term(a.add(b), self.ring.mul(ca, cb));
            }
        }
        out
    }

    /// `c·f`, scalar on the left.
    pub fn scale_left(&self, c: &R::Elem) -> Self {
        self.map_coeffs(|x| self.ring.mul(c, x))
    }

    /// `f·c`, scalar on the right.
    pub fn scale_right(&self, c: &R::Elem) -> Self {
        self.map_coeffs(|x| self.ring.mul(x, c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&R::Elem) -> R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.nvars);
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), f(c));
        }
        out
    }

    /// Drop every term of total degree above `degree`.
    pub fn truncated(&self, degree: u32) -> Self {
        Self {
            ring: self.ring.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(idx, _)| idx.degree() <= degree)
                .map(|(i, c)| (i.clone(), c.clone()))
                .collect(),
        }
    }

    /// Formal partial derivative in `t_j`, 1-based.
    pub fn partial(&self, j: usize) -> Result<Self> {
        if j == 0 || j > self.nvars {
            return Err(AlgebraError::IndexOutOfRange {
                index: j,
                max: self.nvars,
            });
        }
        let mut out = Self::zero(self.ring.clone(), self.nvars);
        for (idx, c) in &self.terms {
            if let Some(lowered) = idx.lower(j - 1) {
                let k = self.ring.from_integer(&BigInt::from(idx.exponents()[j - 1]));
                out.add_term(lowered, self.ring.mul(&k, c));
            }
        }
        Ok(out)
    }

    /// Terms of total degree exactly `degree`.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Self {
            ring: self.ring.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(idx, _)| idx.degree() == degree)
                .map(|(i, c)| (i.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|idx| idx.degree() == degree)
    }

    /// Evaluate at a point, substituting `t_j ↦ x_j` (coefficients on the left).
    pub fn eval(&self, point: &[R::Elem]) -> Result<R::Elem> {
        crate::error::check_dim(self.nvars, point.len())?;
        let mut acc = self.ring.zero();
        for (idx, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(idx.exponents()) {
                term = self.ring.mul(&term, &self.ring.pow(x, e as u64));
            }
            acc = self.ring.add(&acc, &term);
        }
        Ok(acc)
    }
}

pub fn poly_mul<R: Ring>(f: &Polynomial<R>, g: &Polynomial<R>) -> Result<Polynomial<R>> {
    f.mul(g)
}

pub fn partial<R: Ring>(j: usize, f: &Polynomial<R>) -> Result<Polynomial<R>> {
    f.partial(j)
}

pub fn homogeneous_part<R: Ring>(f: &Polynomial<R>, degree: u32) -> Polynomial<R> {
    f.homogeneous_part(degree)
}

fn needs_parens(s: &str) -> bool {
    s.char_indices()
        .any(|(i, ch)| (i > 0 && (ch == '+' || ch == '-')) || ch == ' ')
}

pub(crate) fn format_terms<'a, R: Ring + 'a>(
    ring: &R,
    terms: impl Iterator<Item = (&'a MultiIndex, &'a R::Elem)>,
) -> String {
    let mut out = String::new();
    for (idx, c) in terms {
        let s = ring.format(c);
        let wrapped = if needs_parens(&s) { format!("({s})") } else { s };
        let term = if idx.is_zero() {
            wrapped
        } else if wrapped == "1" {
            idx.to_string()
        } else if wrapped == "-1" {
            format!("-{idx}")
        } else {
            format!("{wrapped}*{idx}")
        };
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical form, ascending graded-lex, e.g. `1 - 3/2*t1^2*t2 + t3`.
impl<R: Ring> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_terms(&self.ring, self.terms.iter()))
    }
}

/// `A[t_1, …, t_n]` as a ring.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<R: Ring> {
    pub coeff: R,
    pub nvars: usize,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(coeff: R, nvars: usize) -> Self {
        Self { coeff, nvars }
    }

    pub fn var(&self, j: usize) -> Result<Polynomial<R>> {
        Polynomial::var(self.coeff.clone(), self.nvars, j)
    }

    pub fn constant(&self, c: R::Elem) -> Polynomial<R> {
        Polynomial::constant(self.coeff.clone(), self.nvars, c)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Polynomial<R>;

    fn zero(&self) -> Polynomial<R> {
        Polynomial::zero(self.coeff.clone(), self.nvars)
    }
    fn one(&self) -> Polynomial<R> {
        Polynomial::one(self.coeff.clone(), self.nvars)
    }
    fn add(&self, a: &Polynomial<R>, b: &Polynomial<R>) -> Polynomial<R> {
        a.add_unchecked(b)
    }
    fn neg(&self, a: &Polynomial<R>) -> Polynomial<R> {
        a.neg()
    }
    fn mul(&self, a: &Polynomial<R>, b: &Polynomial<R>) -> Polynomial<R> {
        a.mul_bounded(b, None)
    }
    fn is_zero(&self, a: &Polynomial<R>) -> bool {
        a.is_zero()
    }
    fn is_commutative(&self) -> bool {
        self.coeff.is_commutative()
    }
    fn characteristic(&self) -> u64 {
        self.coeff.characteristic()
    }
    fn from_integer(&self, n: &BigInt) -> Polynomial<R> {
        self.constant(self.coeff.from_integer(n))
    }
    fn from_rational(&self, q: &num_rational::BigRational) -> Option<Polynomial<R>> {
        self.coeff.from_rational(q).map(|c| self.constant(c))
    }
    /// Over a coefficient domain the units are the constant units.
    fn inverse(&self, a: &Polynomial<R>) -> Result<Polynomial<R>> {
        if !self.coeff.is_integral_domain() {
            return Err(AlgebraError::Unsupported(
                "unit test for polynomials needs a coefficient domain".into(),
            ));
        }
        if a.degree() != Some(0) {
            return Err(if a.is_zero() {
                AlgebraError::DivisionByZero
            } else {
                AlgebraError::NotInvertible(a.to_string())
            });
        }
        Ok(self.constant(self.coeff.inverse(&a.constant_term())?))
    }
    fn is_integral_domain(&self) -> bool {
        self.coeff.is_integral_domain()
    }
    fn format(&self, a: &Polynomial<R>) -> String {
        a.to_string()
    }
}

impl<R: StarRing> StarRing for PolyRing<R> {
    fn star(&self, a: &Polynomial<R>) -> Polynomial<R> {
        a.map_coeffs(|c| self.coeff.star(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;
    use crate::scalars::{int, rat};

    fn ring(n: usize) -> PolyRing<Rationals> {
        PolyRing::new(Rationals, n)
    }

    fn mono(exps: &[u32], c: i64) -> Polynomial<Rationals> {
        Polynomial::monomial(Rationals, MultiIndex::new(exps.to_vec()), int(c))
    }

    #[test]
    fn products() {
        let r = ring(2);
        let t1 = r.var(1).unwrap();
        let t2 = r.var(2).unwrap();
        assert_eq!(poly_mul(&t1, &t2).unwrap(), mono(&[1, 1], 1));
        assert_eq!(
            poly_mul(&mono(&[1, 2], 1), &mono(&[0, 3], 1)).unwrap(),
            mono(&[1, 5], 1)
        );

        let r1 = ring(1);
        let t = r1.var(1).unwrap();
        let one = r1.one();
        let lhs = poly_mul(&r1.add(&one, &t), &r1.sub(&one, &t)).unwrap();
        assert_eq!(lhs, r1.sub(&one, &r1.mul(&t, &t)));
        assert_eq!(lhs.to_string(), "1 - t1^2");
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        assert!(poly_mul(&ring(1).one(), &ring(2).one()).is_err());
    }

    #[test]
    fn partials() {
        let f = mono(&[2, 1], 1);
        assert_eq!(partial(1, &f).unwrap(), mono(&[1, 1], 2));
        assert!(partial(2, &ring(2).from_integer(&5.into())).unwrap().is_zero());
        assert!(partial(3, &f).is_err());
        assert!(partial(0, &f).is_err());
    }

    // Both sides of the product rule expanded by hand: t1 t2 + (1 + t1) t2.
    #[test]
    fn leibniz_on_small_example() {
        let r = ring(2);
        let f = r.add(&r.one(), &r.var(1).unwrap());
        let g = mono(&[1, 1], 1);
        let lhs = partial(1, &r.mul(&f, &g)).unwrap();
        let rhs = r.add(
            &r.mul(&partial(1, &f).unwrap(), &g),
            &r.mul(&f, &partial(1, &g).unwrap()),
        );
        let expected = r.add(&mono(&[1, 1], 1), &r.mul(&f, &mono(&[0, 1], 1)));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn homogeneous_parts() {
        let r = ring(2);
        let f = r.add(&r.add(&r.one(), &mono(&[1, 0], 1)), &mono(&[1, 1], 1));
        assert_eq!(homogeneous_part(&f, 2), mono(&[1, 1], 1));
        assert!(homogeneous_part(&f, 5).is_zero());
        let q = r.add(&r.add(&mono(&[2, 0], 1), &mono(&[1, 1], 1)), &mono(&[0, 2], 1));
        assert_eq!(homogeneous_part(&q, 2), q);
        let rebuilt = (0..=2).fold(r.zero(), |acc, l| r.add(&acc, &homogeneous_part(&f, l)));
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn display_forms() {
        let r = ring(3);
        let f = r.add(
            &Polynomial::monomial(Rationals, MultiIndex::new(vec![2, 1, 0]), rat(3, 2)),
            &r.var(3).unwrap(),
        );
        assert_eq!(f.to_string(), "t3 + 3/2*t1^2*t2");
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!(mono(&[0, 0, 1], -1).to_string(), "-t3");
    }

    #[test]
    fn units_are_constants() {
        let r = ring(1);
        assert_eq!(r.inverse(&r.from_integer(&2.into())).unwrap(), r.constant(rat(1, 2)));
        assert!(matches!(
            r.inverse(&r.var(1).unwrap()),
            Err(AlgebraError::NotInvertible(_))
        ));
    }

    #[test]
    fn evaluation() {
        let r = ring(2);
        let f = r.add(&mono(&[2, 1], 3), &r.one());
        assert_eq!(f.eval(&[int(2), int(-1)]).unwrap(), int(-11));
    }
}
