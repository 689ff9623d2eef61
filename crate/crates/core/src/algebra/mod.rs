//! Finite-dimensional algebras presented by structure constants over a field.
//!
//! A table `c[j][l][m]` means `e_j · e_l = Σ_m c[j][l][m] e_m`. When the
//! table is read as a bracket, the same multiplication is written `[x, y]`.

mod file;
pub mod library;

use std::fmt;

use num_rational::BigRational;

use crate::error::{check_dim, AlgebraError, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::parse::{parse_padic, parse_rational};
use crate::ring::{Rationals, Ring};
use crate::scalars::{FieldDescriptor, PadicField, PrimeField};

pub use file::{AnyStructureConstants, BracketEntry, TableFile};

/// Number of witnesses kept in a [`LieReport`].
pub const MAX_WITNESSES: usize = 16;

/// A ring that is a field with a serializable description.
pub trait Field: Ring {
    fn descriptor(&self) -> FieldDescriptor;
    fn parse_scalar(&self, text: &str) -> Result<Self::Elem>;
}

impl Field for Rationals {
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }
    fn parse_scalar(&self, text: &str) -> Result<BigRational> {
        parse_rational(text)
    }
}

impl Field for PrimeField {
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime { p: self.modulus() }
    }
    fn parse_scalar(&self, text: &str) -> Result<Self::Elem> {
        self.reduce_rational(&parse_rational(text)?)
    }
}

impl Field for PadicField {
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Padic {
            p: self.prime(),
            precision: self.precision(),
        }
    }
    fn parse_scalar(&self, text: &str) -> Result<Self::Elem> {
        if text.trim_start().starts_with("padic") {
            let x = parse_padic(text)?;
            if x.prime() != self.prime() || x.precision() != self.precision() {
                return Err(AlgebraError::RingMismatch);
            }
            Ok(x)
        } else {
            Ok(self.element(&parse_rational(text)?))
        }
    }
}

/// Coordinates of an element relative to the basis of its algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgElement<F: Ring> {
    coords: Vec<F::Elem>,
}

impl<F: Ring> AlgElement<F> {
    pub fn new(coords: Vec<F::Elem>) -> Self {
        Self { coords }
    }

    pub fn zero(field: &F, n: usize) -> Self {
        Self {
            coords: vec![field.zero(); n],
        }
    }

    /// The basis element `e_j` (0-based).
    pub fn basis(field: &F, n: usize, j: usize) -> Self {
        let mut coords = vec![field.zero(); n];
        coords[j] = field.one();
        Self { coords }
    }

    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<F::Elem> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.coords.iter().all(|c| field.is_zero(c))
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| field.add(a, b))
                .collect(),
        )
    }

    pub fn sub(&self, field: &F, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| field.sub(a, b))
                .collect(),
        )
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        Self::new(self.coords.iter().map(|a| field.mul(c, a)).collect())
    }

    pub fn format(&self, field: &F) -> Vec<String> {
        self.coords.iter().map(|c| field.format(c)).collect()
    }
}

/// The multiplication table of an `n`-dimensional algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants<F: Field> {
    field: F,
    basis: Vec<String>,
    table: Vec<F::Elem>,
}

impl<F: Field> StructureConstants<F> {
    /// `table` is laid out so that `c[j][l][m]` sits at `(j·n + l)·n + m`.
    pub fn new(field: F, basis: Vec<String>, table: Vec<F::Elem>) -> Result<Self> {
        let n = basis.len();
        if n == 0 {
            return Err(AlgebraError::InvalidArgument(
                "algebra must have positive dimension".into(),
            ));
        }
        check_dim(n * n * n, table.len())?;
        Ok(Self { field, basis, table })
    }

    pub fn zero(field: F, basis: Vec<String>) -> Result<Self> {
        let n = basis.len();
        let table = vec![field.zero(); n * n * n];
        Self::new(field, basis, table)
    }

    /// Default basis names `e1, …, en`.
    pub fn default_names(n: usize) -> Vec<String> {
        (1..=n).map(|j| format!("e{j}")).collect()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// Coordinates of `e_j · e_l` (0-based).
    pub fn product(&self, j: usize, l: usize) -> &[F::Elem] {
        let n = self.dim();
        let start = (j * n + l) * n;
        &self.table[start..start + n]
    }

    pub fn set_product(&mut self, j: usize, l: usize, coords: Vec<F::Elem>) -> Result<()> {
        let n = self.dim();
        check_dim(n, coords.len())?;
        for idx in [j, l] {
            if idx >= n {
                return Err(AlgebraError::IndexOutOfRange { index: idx, max: n - 1 });
            }
        }
        let start = (j * n + l) * n;
        self.table[start..start + n].clone_from_slice(&coords);
        Ok(())
    }

    pub fn basis_element(&self, j: usize) -> AlgElement<F> {
        AlgElement::basis(&self.field, self.dim(), j)
    }

    pub fn element(&self, coords: Vec<F::Elem>) -> Result<AlgElement<F>> {
        check_dim(self.dim(), coords.len())?;
        Ok(AlgElement::new(coords))
    }

    /// Map every constant into another field.
    pub fn map_field<G: Field>(
        &self,
        target: G,
        f: impl Fn(&F::Elem) -> Result<G::Elem>,
    ) -> Result<StructureConstants<G>> {
        let table = self.table.iter().map(f).collect::<Result<Vec<_>>>()?;
        StructureConstants::new(target, self.basis.clone(), table)
    }

    /// Table of the algebra spanned by `basis` inside the matrix algebra,
    /// with the product `prod`. Fails if the span is not closed under `prod`.
    pub fn from_matrix_basis(
        field: F,
        names: Vec<String>,
        basis: &[Matrix<F>],
        prod: impl Fn(&Matrix<F>, &Matrix<F>) -> Result<Matrix<F>>,
    ) -> Result<Self> {
        check_dim(names.len(), basis.len())?;
        let Some(first) = basis.first() else {
            return Err(AlgebraError::InvalidArgument("empty matrix basis".into()));
        };
        let width = first.dim() * first.dim();
        let vectors: Vec<Vec<F::Elem>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        if !linalg::is_independent(&field, &vectors, width) {
            return Err(AlgebraError::InvalidArgument(
                "matrix basis is linearly dependent".into(),
            ));
        }
        let mut sc = Self::zero(field.clone(), names)?;
        for (j, a) in basis.iter().enumerate() {
            for (l, b) in basis.iter().enumerate() {
                let c = prod(a, b)?;
                let coords = linalg::solve_in_basis(&field, &vectors, c.entries(), width).ok_or_else(|| {
                    AlgebraError::InvalidArgument(format!("product of basis {j},{l} leaves the span"))
                })?;
                sc.set_product(j, l, coords)?;
            }
        }
        Ok(sc)
    }

    fn check(&self, x: &AlgElement<F>) -> Result<()> {
        check_dim(self.dim(), x.dim())
    }

    /// `e_j · y`, linear in `y`.
    fn mult_basis_left(&self, j: usize, y: &[F::Elem]) -> Vec<F::Elem> {
        let n = self.dim();
        let f = &self.field;
        let mut out = vec![f.zero(); n];
        for (l, yl) in y.iter().enumerate() {
            if f.is_zero(yl) {
                continue;
            }
            for (o, c) in out.iter_mut().zip(self.product(j, l)) {
                if !f.is_zero(c) {
                    *o = f.add(o, &f.mul(yl, c));
                }
            }
        }
        out
    }

    fn mult_coords(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let n = self.dim();
        let f = &self.field;
        let mut out = vec![f.zero(); n];
        for (j, xj) in x.iter().enumerate() {
            if f.is_zero(xj) {
                continue;
            }
            for (o, v) in out.iter_mut().zip(self.mult_basis_left(j, y)) {
                *o = f.add(o, &f.mul(xj, &v));
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for StructureConstants<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let mut any = false;
        for j in 0..n {
            for l in 0..n {
                let v = AlgElement::<F>::new(self.product(j, l).to_vec());
                if v.is_zero(&self.field) {
                    continue;
                }
                if any {
                    writeln!(f)?;
                }
                any = true;
                write!(f, "{} * {} = {}", self.basis[j], self.basis[l], self.format_element(&v))?;
            }
        }
        if !any {
            write!(f, "(all products vanish)")?;
        }
        Ok(())
    }
}

impl<F: Field> StructureConstants<F> {
    /// Human-readable combination such as `2*e - h`.
    pub fn format_element(&self, x: &AlgElement<F>) -> String {
        let f = &self.field;
        let mut out = String::new();
        for (c, name) in x.coords().iter().zip(&self.basis) {
            if f.is_zero(c) {
                continue;
            }
            let s = f.format(c);
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, s),
            };
            let body = if body.contains(['+', '-', ' ']) {
                format!("({body})")
            } else {
                body
            };
            let term = if body == "1" {
                name.clone()
            } else {
                format!("{body}*{name}")
            };
            match (out.is_empty(), neg) {
                (true, false) => out.push_str(&term),
                (true, true) => out.push_str(&format!("-{term}")),
                (false, false) => out.push_str(&format!(" + {term}")),
                (false, true) => out.push_str(&format!(" - {term}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Bilinear extension of the table.
pub fn mult<F: Field>(sc: &StructureConstants<F>, x: &AlgElement<F>, y: &AlgElement<F>) -> Result<AlgElement<F>> {
    sc.check(x)?;
    sc.check(y)?;
    Ok(AlgElement::new(sc.mult_coords(x.coords(), y.coords())))
}

/// `a·b − b·a` for a table presenting an associative product.
pub fn bracket_from_assoc<F: Field>(
    a: &AlgElement<F>,
    b: &AlgElement<F>,
    sc: &StructureConstants<F>,
) -> Result<AlgElement<F>> {
    let ab = mult(sc, a, b)?;
    let ba = mult(sc, b, a)?;
    Ok(ab.sub(sc.field(), &ba))
}

/// Table of the commutator bracket of an associative table.
pub fn commutator_table<F: Field>(sc: &StructureConstants<F>) -> StructureConstants<F> {
    let n = sc.dim();
    let f = sc.field();
    let mut out = StructureConstants::zero(f.clone(), sc.basis_names().to_vec()).expect("positive dimension");
    for j in 0..n {
        for l in 0..n {
            let c = sc
                .product(j, l)
                .iter()
                .zip(sc.product(l, j))
                .map(|(a, b)| f.sub(a, b))
                .collect();
            out.set_product(j, l, c).expect("shape preserved");
        }
    }
    out
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`.
pub fn jacobi_defect<F: Field>(
    sc: &StructureConstants<F>,
    x: &AlgElement<F>,
    y: &AlgElement<F>,
    z: &AlgElement<F>,
) -> Result<AlgElement<F>> {
    let f = sc.field();
    let a = mult(sc, x, &mult(sc, y, z)?)?;
    let b = mult(sc, y, &mult(sc, z, x)?)?;
    let c = mult(sc, z, &mult(sc, x, y)?)?;
    Ok(a.add(f, &b).add(f, &c))
}

fn basis_jacobi<F: Field>(sc: &StructureConstants<F>, j: usize, l: usize, m: usize) -> Vec<F::Elem> {
    let f = sc.field();
    let a = sc.mult_basis_left(j, sc.product(l, m));
    let b = sc.mult_basis_left(l, sc.product(m, j));
    let c = sc.mult_basis_left(m, sc.product(j, l));
    a.iter()
        .zip(&b)
        .zip(&c)
        .map(|((a, b), c)| f.add(&f.add(a, b), c))
        .collect()
}

/// A pair of basis indices (1-based) where the alternating law fails.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PairWitness {
    pub j: usize,
    pub l: usize,
    /// Coordinates of `[e_j, e_l] + [e_l, e_j]`, or of `[e_j, e_j]` when `j = l`.
    pub value: Vec<String>,
}

/// A basis triple (1-based) with a nonzero Jacobi defect.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TripleWitness {
    pub j: usize,
    pub l: usize,
    pub m: usize,
    pub defect: Vec<String>,
}

/// Outcome of [`verify_lie`]. Failures are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieReport {
    /// `[e_j, e_j] = 0` for every `j`.
    pub alternating: bool,
    /// `[e_j, e_l] = −[e_l, e_j]` for every `j ≠ l`.
    pub antisymmetric: bool,
    /// Jacobi defect vanishes on every basis triple.
    pub jacobi: bool,
    pub pair_witnesses: Vec<PairWitness>,
    pub triple_witnesses: Vec<TripleWitness>,
}

impl LieReport {
    pub fn passed(&self) -> bool {
        self.alternating && self.antisymmetric && self.jacobi
    }
}

/// Check the Lie axioms on basis elements. Multilinearity makes this a
/// complete check on the whole space. The alternating law `[x,x] = 0` is
/// checked directly, which is stronger than antisymmetry in characteristic 2.
pub fn verify_lie<F: Field>(sc: &StructureConstants<F>) -> LieReport {
    let n = sc.dim();
    let f = sc.field();
    let zero = |v: &[F::Elem]| v.iter().all(|c| f.is_zero(c));
    let fmt = |v: &[F::Elem]| v.iter().map(|c| f.format(c)).collect::<Vec<_>>();
    let mut pairs = Vec::new();
    let (mut alternating, mut antisymmetric) = (true, true);
    for j in 0..n {
        if !zero(sc.product(j, j)) {
            alternating = false;
            pairs.push(PairWitness {
                j: j + 1,
                l: j + 1,
                value: fmt(sc.product(j, j)),
            });
        }
        for l in j + 1..n {
            let s: Vec<F::Elem> = sc
                .product(j, l)
                .iter()
                .zip(sc.product(l, j))
                .map(|(a, b)| f.add(a, b))
                .collect();
            if !zero(&s) {
                antisymmetric = false;
                pairs.push(PairWitness {
                    j: j + 1,
                    l: l + 1,
                    value: fmt(&s),
                });
            }
        }
    }
    // An alternating bracket has an alternating Jacobi form, so increasing
    // triples suffice; otherwise every ordered triple is examined.
    let ordered = alternating && antisymmetric;
    let mut triples = Vec::new();
    let mut jacobi = true;
    for j in 0..n {
        for l in if ordered { j + 1 } else { 0 }..n {
            for m in if ordered { l + 1 } else { 0 }..n {
                let d = basis_jacobi(sc, j, l, m);
                if !zero(&d) {
                    jacobi = false;
                    if triples.len() < MAX_WITNESSES {
                        triples.push(TripleWitness {
                            j: j + 1,
                            l: l + 1,
                            m: m + 1,
                            defect: fmt(&d),
                        });
                    }
                }
            }
        }
    }
    pairs.truncate(MAX_WITNESSES);
    LieReport {
        alternating,
        antisymmetric,
        jacobi,
        pair_witnesses: pairs,
        triple_witnesses: triples,
    }
}

/// Matrix of `y ↦ [x, y]`; column `l` holds `[x, e_l]`.
pub fn ad_matrix<F: Field>(sc: &StructureConstants<F>, x: &AlgElement<F>) -> Result<Matrix<F>> {
    sc.check(x)?;
    let n = sc.dim();
    let cols: Vec<Vec<F::Elem>> = (0..n)
        .map(|l| sc.mult_coords(x.coords(), AlgElement::<F>::basis(sc.field(), n, l).coords()))
        .collect();
    Ok(Matrix::from_fn(sc.field().clone(), n, |m, l| cols[l][m].clone()))
}

/// Linearly independent elements of an algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceBasis<F: Field> {
    field: F,
    n: usize,
    vectors: Vec<AlgElement<F>>,
}

impl<F: Field> SubspaceBasis<F> {
    /// Fails unless the vectors are independent and of length `n`.
    pub fn new(field: F, n: usize, vectors: Vec<AlgElement<F>>) -> Result<Self> {
        for v in &vectors {
            check_dim(n, v.dim())?;
        }
        let raw: Vec<Vec<F::Elem>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
        if !linalg::is_independent(&field, &raw, n) {
            return Err(AlgebraError::InvalidArgument(
                "subspace vectors are linearly dependent".into(),
            ));
        }
        Ok(Self { field, n, vectors })
    }

    /// Row-reduced basis of the span of arbitrary vectors.
    pub fn span(field: F, n: usize, vectors: &[AlgElement<F>]) -> Result<Self> {
        for v in vectors {
            check_dim(n, v.dim())?;
        }
        let raw: Vec<Vec<F::Elem>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
        let basis = linalg::span_basis(&field, &raw, n)
            .into_iter()
            .map(AlgElement::new)
            .collect();
        Ok(Self {
            field,
            n,
            vectors: basis,
        })
    }

    pub fn whole(sc: &StructureConstants<F>) -> Self {
        let vectors = (0..sc.dim()).map(|j| sc.basis_element(j)).collect();
        Self {
            field: sc.field().clone(),
            n: sc.dim(),
            vectors,
        }
    }

    pub fn vectors(&self) -> &[AlgElement<F>] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    fn raw(&self) -> Vec<Vec<F::Elem>> {
        self.vectors.iter().map(|v| v.coords().to_vec()).collect()
    }

    pub fn contains(&self, x: &AlgElement<F>) -> bool {
        x.dim() == self.n && linalg::in_span(&self.field, &self.raw(), x.coords(), self.n)
    }

    /// Same span, compared by rank.
    pub fn same_span(&self, other: &Self) -> bool {
        if self.n != other.n || self.dim() != other.dim() {
            return false;
        }
        let mut all = self.raw();
        all.extend(other.raw());
        linalg::rank(&self.field, &all, self.n) == self.dim()
    }
}

/// `{x : [x, e_l] = 0 for all l}`, the kernel of the adjoint representation.
pub fn center_basis<F: Field>(sc: &StructureConstants<F>) -> SubspaceBasis<F> {
    let n = sc.dim();
    // Row (l, m), column j: coefficient of e_m in [e_j, e_l].
    let rows: Vec<Vec<F::Elem>> = (0..n)
        .flat_map(|l| (0..n).map(move |m| (l, m)))
        .map(|(l, m)| (0..n).map(|j| sc.product(j, l)[m].clone()).collect())
        .collect();
    let vectors = linalg::nullspace(sc.field(), &rows, n)
        .into_iter()
        .map(AlgElement::new)
        .collect();
    SubspaceBasis {
        field: sc.field().clone(),
        n,
        vectors,
    }
}

/// Span of all products `[e_j, e_l]`.
pub fn derived_ideal_basis<F: Field>(sc: &StructureConstants<F>) -> SubspaceBasis<F> {
    let n = sc.dim();
    let products: Vec<AlgElement<F>> = (0..n)
        .flat_map(|j| (0..n).map(move |l| (j, l)))
        .map(|(j, l)| AlgElement::new(sc.product(j, l).to_vec()))
        .collect();
    SubspaceBasis::span(sc.field().clone(), n, &products).expect("products have length n")
}

/// True iff `[e_j, s]` lies in the subspace for every basis `e_j` and `s` in it.
pub fn is_ideal<F: Field>(sub: &SubspaceBasis<F>, sc: &StructureConstants<F>) -> bool {
    if sub.ambient_dim() != sc.dim() {
        return false;
    }
    (0..sc.dim()).all(|j| {
        sub.vectors()
            .iter()
            .all(|s| sub.contains(&AlgElement::new(sc.mult_basis_left(j, s.coords()))))
    })
}

/// Leibniz law `d(e_j e_l) = d(e_j) e_l + e_j d(e_l)` on all basis pairs.
pub fn is_derivation<F: Field>(d: &Matrix<F>, sc: &StructureConstants<F>) -> bool {
    let n = sc.dim();
    if d.dim() != n {
        return false;
    }
    let f = sc.field();
    let col = |l: usize| (0..n).map(|m| d.get(m, l).clone()).collect::<Vec<_>>();
    let image = |v: &[F::Elem]| {
        (0..n)
            .map(|m| f.sum(&(0..n).map(|k| f.mul(d.get(m, k), &v[k])).collect::<Vec<_>>()))
            .collect::<Vec<_>>()
    };
    let basis = |j: usize| AlgElement::<F>::basis(f, n, j).into_coords();
    (0..n).all(|j| {
        (0..n).all(|l| {
            let lhs = image(sc.product(j, l));
            let a = sc.mult_coords(&col(j), &basis(l));
            let b = sc.mult_basis_left(j, &col(l));
            lhs.iter().zip(a.iter().zip(&b)).all(|(x, (y, z))| *x == f.add(y, z))
        })
    })
}

/// Basis of the space of all derivations, as matrices.
pub fn derivation_basis<F: Field>(sc: &StructureConstants<F>) -> Vec<Matrix<F>> {
    let n = sc.dim();
    let f = sc.field();
    let var = |a: usize, b: usize| a * n + b;
    let mut rows = Vec::with_capacity(n * n * n);
    for j in 0..n {
        for l in 0..n {
            for m in 0..n {
                let mut row = vec![f.zero(); n * n];
                // d(e_j e_l)_m = Σ_k d[m][k] c[j][l][k]
                for k in 0..n {
                    let c = &sc.product(j, l)[k];
                    row[var(m, k)] = f.add(&row[var(m, k)], c);
                }
                // (d e_j) e_l: Σ_k d[k][j] c[k][l][m]
                for k in 0..n {
                    let c = &sc.product(k, l)[m];
                    row[var(k, j)] = f.sub(&row[var(k, j)], c);
                }
                // e_j (d e_l): Σ_k d[k][l] c[j][k][m]
                for k in 0..n {
                    let c = &sc.product(j, k)[m];
                    row[var(k, l)] = f.sub(&row[var(k, l)], c);
                }
                if row.iter().any(|x| !f.is_zero(x)) {
                    rows.push(row);
                }
            }
        }
    }
    linalg::nullspace(f, &rows, n * n)
        .into_iter()
        .map(|v| Matrix::from_fn(f.clone(), n, |a, b| v[var(a, b)].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::gl_bracket;
    use crate::scalars::int;

    fn q(v: &[i64]) -> AlgElement<Rationals> {
        AlgElement::new(v.iter().map(|&x| int(x)).collect())
    }

    fn sl2() -> StructureConstants<Rationals> {
        let h = Matrix::from_rows(Rationals, vec![vec![int(1), int(0)], vec![int(0), int(-1)]]).unwrap();
        let e = Matrix::unit(Rationals, 2, 0, 1);
        let fm = Matrix::unit(Rationals, 2, 1, 0);
        let names = ["h", "e", "f"].map(String::from).to_vec();
        StructureConstants::from_matrix_basis(Rationals, names, &[h, e, fm], gl_bracket).unwrap()
    }

    fn heisenberg() -> StructureConstants<Rationals> {
        let names = ["x", "y", "z"].map(String::from).to_vec();
        let b = [(0, 1), (1, 2), (0, 2)].map(|(i, j)| Matrix::unit(Rationals, 3, i, j));
        StructureConstants::from_matrix_basis(Rationals, names, &b, gl_bracket).unwrap()
    }

    #[test]
    fn sl2_products() {
        let sc = sl2();
        assert_eq!(mult(&sc, &q(&[1, 0, 0]), &q(&[0, 1, 0])).unwrap(), q(&[0, 2, 0]));
        assert_eq!(mult(&sc, &q(&[0, 1, 0]), &q(&[0, 0, 1])).unwrap(), q(&[1, 0, 0]));
        assert_eq!(mult(&sc, &q(&[3, 1, 4]), &q(&[0, 0, 0])).unwrap(), q(&[0, 0, 0]));
        assert!(mult(&sc, &q(&[1, 0]), &q(&[0, 0, 0])).is_err());
        assert_eq!(
            sc.to_string(),
            "h * e = 2*e\nh * f = -2*f\ne * h = -2*e\ne * f = h\nf * h = 2*f\nf * e = -h"
        );
    }

    #[test]
    fn lie_checks() {
        assert!(verify_lie(&sl2()).passed());
        assert!(verify_lie(&heisenberg()).passed());
        let mut bad = StructureConstants::zero(Rationals, StructureConstants::<Rationals>::default_names(2)).unwrap();
        bad.set_product(0, 0, vec![int(0), int(1)]).unwrap();
        let r = verify_lie(&bad);
        assert!(!r.alternating && r.antisymmetric);
        assert_eq!((r.pair_witnesses[0].j, r.pair_witnesses[0].l), (1, 1));
    }

    #[test]
    fn adjoint_and_center() {
        let sc = sl2();
        let ad_h = ad_matrix(&sc, &q(&[1, 0, 0])).unwrap();
        assert_eq!(ad_h, Matrix::diagonal(Rationals, vec![int(0), int(2), int(-2)]));
        assert!(is_derivation(&ad_h, &sc));
        assert!(!is_derivation(&Matrix::identity(Rationals, 3), &sc));
        assert!(is_derivation(&Matrix::zero(Rationals, 3), &sc));
        assert_eq!(center_basis(&sc).dim(), 0);
        assert_eq!(derived_ideal_basis(&sc).dim(), 3);
        assert_eq!(derivation_basis(&sc).len(), 3);

        let hz = heisenberg();
        let z = SubspaceBasis::new(Rationals, 3, vec![q(&[0, 0, 1])]).unwrap();
        assert!(center_basis(&hz).same_span(&z));
        assert!(derived_ideal_basis(&hz).same_span(&z));
        assert!(is_ideal(&z, &hz));
        assert!(ad_matrix(&hz, &q(&[0, 0, 1])).unwrap().is_zero());
        let e = SubspaceBasis::new(Rationals, 3, vec![q(&[0, 1, 0])]).unwrap();
        assert!(!is_ideal(&e, &sc));
        assert!(is_ideal(&SubspaceBasis::whole(&sc), &sc));
        assert!(SubspaceBasis::new(Rationals, 3, vec![q(&[1, 1, 0]), q(&[2, 2, 0])]).is_err());
    }

    #[test]
    fn gl2_commutator_from_associative_table() {
        let units: Vec<Matrix<Rationals>> = [(0, 0), (0, 1), (1, 0), (1, 1)]
            .iter()
            .map(|&(i, j)| Matrix::unit(Rationals, 2, i, j))
            .collect();
        let names = ["E11", "E12", "E21", "E22"].map(String::from).to_vec();
        let assoc = StructureConstants::from_matrix_basis(Rationals, names, &units, |a, b| a.mul(b)).unwrap();
        let b = bracket_from_assoc(&q(&[0, 1, 0, 0]), &q(&[0, 0, 1, 0]), &assoc).unwrap();
        assert_eq!(b, q(&[1, 0, 0, -1]));
        assert!(verify_lie(&commutator_table(&assoc)).passed());
        let a = q(&[1, 2, 3, 4]);
        assert!(bracket_from_assoc(&a, &a, &assoc).unwrap().is_zero(&Rationals));
    }

    #[test]
    fn cyclic_table_satisfies_jacobi() {
        let mut sc = StructureConstants::zero(Rationals, StructureConstants::<Rationals>::default_names(3)).unwrap();
        sc.set_product(0, 1, vec![int(0), int(0), int(1)]).unwrap();
        sc.set_product(1, 2, vec![int(1), int(0), int(0)]).unwrap();
        sc.set_product(2, 0, vec![int(0), int(-1), int(0)]).unwrap();
        let [e1, e2, e3] = [0, 1, 2].map(|j| sc.basis_element(j));
        assert!(jacobi_defect(&sc, &e1, &e2, &e3).unwrap().is_zero(&Rationals));
        let r = verify_lie(&sc);
        assert!(!r.antisymmetric);
        assert_eq!(r.pair_witnesses.len(), 3);
    }
}
