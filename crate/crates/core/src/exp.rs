//! Exponentials over three coefficient domains: floating complex matrices,
//! truncated power series in characteristic 0, and p-adic scalars and
//! matrices inside the disc of convergence. Also the `det(exp M) = exp(tr M)`
//! verifier and the factorial valuation estimate behind the p-adic domain.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{check_dim, AlgebraError, Result};
use crate::matrix::Matrix;
use crate::poly::{PowerSeries, SeriesRing};
use crate::ring::Ring;
use crate::scalars::{check_prime, PadicField, PadicScaled};

/// `v_p(n!) = Σ_{j≥1} ⌊n / p^j⌋`.
pub fn vp_factorial(n: u64, p: u64) -> Result<u64> {
    check_prime(p)?;
    let mut total = 0;
    let mut q = n;
    while q > 0 {
        q /= p;
        total += q;
    }
    Ok(total)
}

fn factorial_inverse(m: u64) -> BigRational {
    let mut f = BigInt::from(1);
    for k in 2..=m {
        f *= k;
    }
    BigRational::new(1.into(), f)
}

/// `Σ_{m=0}^{D} f^m / m!` for `f` with zero constant term.
pub fn exp_series<R: Ring>(f: &PowerSeries<R>) -> Result<PowerSeries<R>> {
    let ring = f.ring();
    if ring.characteristic() != 0 {
        return Err(AlgebraError::Unsupported("exp needs characteristic 0".into()));
    }
    if !ring.is_zero(&f.constant_term()) {
        return Err(AlgebraError::OutOfDomain(
            "exp of a series with nonzero constant term".into(),
        ));
    }
    let d = f.truncation();
    let mut acc = PowerSeries::one(ring.clone(), f.nvars(), d);
    let mut power = acc.clone();
    for m in 1..=d as u64 {
        power = power.mul(f)?;
        if power.is_zero() {
            break;
        }
        let c = ring
            .from_rational(&factorial_inverse(m))
            .ok_or_else(|| AlgebraError::Unsupported(format!("1/{m}! is not available in the coefficient ring")))?;
        acc = acc.add(&power.scale_left(&c))?;
    }
    Ok(acc)
}

/// Dense square matrix of double-precision complex numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for l in 0..n {
                entries.push(f(j, l));
            }
        }
        Self { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let n = rows.len();
        for r in &rows {
            check_dim(n, r.len())?;
        }
        let m = Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        };
        if !m.is_finite() {
            return Err(AlgebraError::InvalidArgument("matrix entries must be finite".into()));
        }
        Ok(m)
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |j, l| Complex64::new(if j == l { 1.0 } else { 0.0 }, 0.0))
    }

    pub fn diagonal(diag: &[Complex64]) -> Self {
        Self::from_fn(
            diag.len(),
            |j, l| if j == l { diag[j] } else { Complex64::new(0.0, 0.0) },
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, j: usize, l: usize) -> Complex64 {
        self.entries[j * self.n + l]
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.is_finite())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        Ok(Self {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        Ok(Self {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|a| c * a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        let n = self.n;
        Ok(Self::from_fn(n, |j, l| {
            (0..n).map(|k| self.get(j, k) * other.get(k, l)).sum()
        }))
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |j, l| self.get(l, j).conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|j| self.get(j, j)).sum()
    }

    /// Norm induced by the max-norm on vectors: the largest absolute row sum.
    pub fn opnorm(&self) -> f64 {
        (0..self.n)
            .map(|j| (0..self.n).map(|l| self.get(j, l).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Determinant by LU decomposition with partial pivoting.
    pub fn det(&self) -> Complex64 {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&x, &y| a[x * n + col].norm().total_cmp(&a[y * n + col].norm()))
                .expect("nonempty range");
            if a[pivot * n + col].norm() == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                }
                det = -det;
            }
            let d = a[col * n + col];
            det *= d;
            for r in col + 1..n {
                let factor = a[r * n + col] / d;
                for k in col..n {
                    let v = a[col * n + k];
                    a[r * n + k] -= factor * v;
                }
            }
        }
        det
    }

    /// Solve `self · x = b` column by column (Gauss–Jordan with partial pivoting).
    pub fn solve(&self, b: &Self) -> Result<Self> {
        check_dim(self.n, b.n)?;
        let n = self.n;
        let mut a = self.entries.clone();
        let mut x = b.entries.clone();
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&r, &s| a[r * n + col].norm().total_cmp(&a[s * n + col].norm()))
                .expect("nonempty range");
            if a[pivot * n + col].norm() == 0.0 {
                return Err(AlgebraError::NotInvertible("singular complex matrix".into()));
            }
            for k in 0..n {
                a.swap(col * n + k, pivot * n + k);
                x.swap(col * n + k, pivot * n + k);
            }
            let d = a[col * n + col];
            for k in 0..n {
                a[col * n + k] /= d;
                x[col * n + k] /= d;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col];
                for k in 0..n {
                    let (va, vx) = (a[col * n + k], x[col * n + k]);
                    a[r * n + k] -= factor * va;
                    x[r * n + k] -= factor * vx;
                }
            }
        }
        Ok(Self { n, entries: x })
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.entries.chunks(self.n).map(<[Complex64]>::to_vec).collect()
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .entries
            .chunks(self.n)
            .map(|r| r.iter().map(|z| format_complex(*z)).collect())
            .collect();
        write!(f, "{}", serde_json::to_string(&rows).expect("strings serialize"))
    }
}

/// Shortest round-trip text of a complex number, e.g. `1.5-2i`.
pub fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { "-" } else { "+" };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}

/// Cap on series terms; reached only for norms far beyond desk scale.
const MAX_FLOAT_TERMS: u64 = 10_000;

/// `Σ A^m / m!`, summed in increasing `m` until the tail bound
/// `2‖A‖^{m+1}/(m+1)!` is below `1e-16 · exp‖A‖`.
pub fn exp_complex_matrix(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !a.is_finite() {
        return Err(AlgebraError::InvalidArgument("matrix entries must be finite".into()));
    }
    let norm = a.opnorm();
    let bound = norm.exp();
    if !bound.is_finite() {
        return Err(AlgebraError::Overflow(format!("exp of operator norm {norm} overflows")));
    }
    let n = a.dim();
    let mut acc = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    let mut scalar = 1.0_f64;
    for m in 1..=MAX_FLOAT_TERMS {
        term = term.mul(a)?.scale(Complex64::new(1.0 / m as f64, 0.0));
        acc = acc.add(&term)?;
        scalar *= norm / m as f64;
        let next = scalar * norm / (m + 1) as f64;
        if (m + 2) as f64 > 2.0 * norm && 2.0 * next < 1e-16 * bound {
            if !acc.is_finite() {
                return Err(AlgebraError::Overflow("matrix exponential overflowed".into()));
            }
            return Ok(acc);
        }
    }
    Err(AlgebraError::Overflow(format!(
        "series did not settle within {MAX_FLOAT_TERMS} terms"
    )))
}

/// True when `|a|_p < p^{-1/(p-1)}`, i.e. `v(a)·(p−1) > 1`.
fn in_padic_domain(valuation: i64, p: u64) -> bool {
    valuation > 0 && (valuation as i128) * (p as i128 - 1) > 1
}

/// Number of terms `M` such that every term `a^m/m!` with `m ≥ M` vanishes at
/// absolute precision `N`: the least `m` with `m·v(p−1) − (m−1) ≥ N(p−1)`.
fn padic_term_count(valuation: i64, p: u64, precision: u32) -> u64 {
    let v = valuation as i128;
    let p = p as i128;
    let target = precision as i128 * (p - 1);
    let mut m: i128 = 1;
    while m * v * (p - 1) - (m - 1) < target {
        m += 1;
    }
    m as u64
}

fn domain_error(p: u64, what: &str) -> AlgebraError {
    AlgebraError::OutOfDomain(format!(
        "{what} lies outside the convergence disc |a|_{p} < {p}^(-1/{})",
        p - 1
    ))
}

/// `Σ a^m/m!` in Q_p, defined for `|a|_p < p^{-1/(p-1)}`.
pub fn exp_padic(a: &PadicScaled) -> Result<PadicScaled> {
    let (p, precision) = (a.prime(), a.precision());
    let field = PadicField::new(p, precision)?;
    let Some(v) = a.valuation() else {
        return Ok(field.one());
    };
    if !in_padic_domain(v, p) {
        return Err(domain_error(p, &a.to_string()));
    }
    let terms = padic_term_count(v, p, precision);
    let mut acc = field.one();
    let mut term = field.one();
    for m in 1..terms {
        let inv_m = field.element(&BigRational::new(1.into(), m.into()));
        term = field.mul(&field.mul(&term, a), &inv_m);
        acc = field.add(&acc, &term);
    }
    Ok(acc)
}

/// Smallest valuation among nonzero entries, or `None` for the zero matrix.
fn min_valuation(t: &Matrix<PadicField>) -> Option<i64> {
    t.entries().iter().filter_map(PadicScaled::valuation).min()
}

/// Matrix exponential over Q_p for `‖T‖ < p^{-1/(p-1)}` (max-entry norm).
pub fn exp_padic_matrix(t: &Matrix<PadicField>) -> Result<Matrix<PadicField>> {
    let field = *t.ring();
    let n = t.dim();
    let Some(v) = min_valuation(t) else {
        return Ok(Matrix::identity(field, n));
    };
    let p = field.prime();
    if !in_padic_domain(v, p) {
        return Err(domain_error(p, "matrix"));
    }
    let terms = padic_term_count(v, p, field.precision());
    let mut acc = Matrix::identity(field, n);
    let mut term = acc.clone();
    for m in 1..terms {
        let inv_m = field.element(&BigRational::new(1.into(), m.into()));
        term = term.mul(t)?.scale_left(&inv_m);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Entrywise agreement modulo `p^N`, where `N` is the field precision.
pub fn padic_matrices_agree(a: &Matrix<PadicField>, b: &Matrix<PadicField>) -> bool {
    let n = a.ring().precision() as i64;
    a.dim() == b.dim() && a.entries().iter().zip(b.entries()).all(|(x, y)| x.agrees_to(y, n))
}

/// Matrix exponential over truncated power series with zero constant terms.
pub fn exp_series_matrix<R: Ring>(m: &Matrix<SeriesRing<R>>) -> Result<Matrix<SeriesRing<R>>> {
    let ring = m.ring().clone();
    if ring.coeff.characteristic() != 0 {
        return Err(AlgebraError::Unsupported("exp needs characteristic 0".into()));
    }
    if m.entries().iter().any(|e| !ring.coeff.is_zero(&e.constant_term())) {
        return Err(AlgebraError::OutOfDomain(
            "matrix entries must have zero constant term".into(),
        ));
    }
    let n = m.dim();
    let mut acc = Matrix::identity(ring.clone(), n);
    let mut term = acc.clone();
    for k in 1..=ring.truncation as u64 {
        let c = ring
            .coeff
            .from_rational(&BigRational::new(1.into(), k.into()))
            .ok_or_else(|| AlgebraError::Unsupported(format!("1/{k} is not available in the coefficient ring")))?;
        term = term.mul(m)?.scale_left(&ring.constant(c));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExpMode {
    Float,
    Series,
    Padic,
}

impl ExpMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ExpMode::Float => "float",
            ExpMode::Series => "series",
            ExpMode::Padic => "padic",
        }
    }
}

impl std::str::FromStr for ExpMode {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "float" => Ok(ExpMode::Float),
            "series" => Ok(ExpMode::Series),
            "padic" => Ok(ExpMode::Padic),
            other => Err(AlgebraError::InvalidArgument(format!(
                "unknown mode '{other}' (float, series, padic)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExpOutcome {
    Difference(f64),
    Equal(bool),
}

/// The two sides of `det(exp M) = exp(tr M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpReport {
    pub mode: ExpMode,
    pub left: String,
    pub right: String,
    pub outcome: ExpOutcome,
    pub params: BTreeMap<String, String>,
}

impl ExpReport {
    /// Exact modes pass on equality, float mode when the difference is below `tol`.
    pub fn passes(&self, tol: f64) -> bool {
        match self.outcome {
            ExpOutcome::Difference(d) => d < tol,
            ExpOutcome::Equal(e) => e,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "mode": self.mode.as_str(),
            "left": self.left,
            "right": self.right,
            "params": self.params,
        });
        match self.outcome {
            ExpOutcome::Difference(d) => v["difference"] = json!(d),
            ExpOutcome::Equal(e) => v["equal"] = json!(e),
        }
        v
    }
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

pub fn det_exp_tr_float(a: &ComplexMatrix) -> Result<ExpReport> {
    let left = exp_complex_matrix(a)?.det();
    let right = a.trace().exp();
    Ok(ExpReport {
        mode: ExpMode::Float,
        left: format_complex(left),
        right: format_complex(right),
        outcome: ExpOutcome::Difference((left - right).norm()),
        params: params(&[("n", a.dim().to_string())]),
    })
}

pub fn det_exp_tr_series<R: Ring>(m: &Matrix<SeriesRing<R>>) -> Result<ExpReport> {
    if !m.ring().is_commutative() {
        return Err(AlgebraError::Unsupported("det needs commutative coefficients".into()));
    }
    let left = exp_series_matrix(m)?.det()?;
    let right = exp_series(&m.trace())?;
    Ok(ExpReport {
        mode: ExpMode::Series,
        left: left.to_string(),
        right: right.to_string(),
        outcome: ExpOutcome::Equal(left == right),
        params: params(&[
            ("n", m.dim().to_string()),
            ("nvars", m.ring().nvars.to_string()),
            ("truncation", m.ring().truncation.to_string()),
        ]),
    })
}

pub fn det_exp_tr_padic(t: &Matrix<PadicField>) -> Result<ExpReport> {
    let left = exp_padic_matrix(t)?.det()?;
    let right = exp_padic(&t.trace())?;
    let field = t.ring();
    let equal = left.agrees_to(&right, field.precision() as i64);
    Ok(ExpReport {
        mode: ExpMode::Padic,
        left: left.to_string(),
        right: right.to_string(),
        outcome: ExpOutcome::Equal(equal),
        params: params(&[
            ("n", t.dim().to_string()),
            ("p", field.prime().to_string()),
            ("precision", field.precision().to_string()),
        ]),
    })
}
