//! Real vector p-norms, exact ultrametric norms on Q_p^n and their operator
//! norms, and Banach-algebra checks for complex matrices.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{check_dim, AlgebraError, Result};
use crate::exp::ComplexMatrix;
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::scalars::{check_prime, PadicField, PadicScaled, UltraNorm};

/// Relative slack for floating-point inequality checks.
pub const FLOAT_SLACK: f64 = 1e-12;

/// `a ≤ b` up to [`FLOAT_SLACK`] relative to the larger side.
pub fn le_with_slack(a: f64, b: f64) -> bool {
    a <= b + FLOAT_SLACK * a.abs().max(b.abs())
}

/// `(Σ |v_j|^p)^{1/p}`, or `max |v_j|` for `p = ∞`.
pub fn pnorm(v: &[f64], p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(AlgebraError::InvalidArgument(format!("p-norm needs p >= 1, got {p}")));
    }
    if v.iter().any(|x| !x.is_finite()) {
        return Err(AlgebraError::InvalidArgument("vector entries must be finite".into()));
    }
    let max = v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    if p.is_infinite() || max == 0.0 {
        return Ok(max);
    }
    // Scale by the largest entry so that |v_j|^p cannot overflow.
    let s: f64 = v.iter().map(|x| (x.abs() / max).powf(p)).sum();
    Ok(max * s.powf(1.0 / p))
}

/// Both comparisons between the `p`- and `q`-norms of one vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PnormComparison {
    pub p: f64,
    pub q: f64,
    pub norm_p: f64,
    pub norm_q: f64,
    /// `‖v‖_q ≤ ‖v‖_p`.
    pub q_below_p: bool,
    /// `‖v‖_p ≤ n^{1/p − 1/q} ‖v‖_q`.
    pub p_below_scaled_q: bool,
}

impl PnormComparison {
    pub fn passed(&self) -> bool {
        self.q_below_p && self.p_below_scaled_q
    }
}

pub fn pnorm_inequality_check(v: &[f64], p: f64, q: f64) -> Result<PnormComparison> {
    if p.is_nan() || q.is_nan() || p > q {
        return Err(AlgebraError::InvalidArgument(format!(
            "need 1 <= p <= q, got p = {p}, q = {q}"
        )));
    }
    let norm_p = pnorm(v, p)?;
    let norm_q = pnorm(v, q)?;
    let factor = (v.len() as f64).powf(1.0 / p - 1.0 / q);
    Ok(PnormComparison {
        p,
        q,
        norm_p,
        norm_q,
        q_below_p: le_with_slack(norm_q, norm_p),
        p_below_scaled_q: le_with_slack(norm_p, factor * norm_q),
    })
}

/// `‖x‖ = max_j p^{q_j} |x_j|_p` on Q_p^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedUltraNorm {
    p: u64,
    exponents: Vec<BigRational>,
}

impl WeightedUltraNorm {
    /// Weights `p^{q_j}` given by their exponents.
    pub fn new(p: u64, exponents: Vec<BigRational>) -> Result<Self> {
        check_prime(p)?;
        if exponents.is_empty() {
            return Err(AlgebraError::InvalidArgument(
                "norm needs at least one coordinate".into(),
            ));
        }
        Ok(Self { p, exponents })
    }

    /// All weights 1: the max of the coordinate norms.
    pub fn unweighted(p: u64, n: usize) -> Result<Self> {
        Self::new(p, vec![BigRational::zero(); n])
    }

    /// Weights `p^{−(j−1)/n}`, under which the shift operator has norm `p^{−1/n}`.
    pub fn shift_weights(p: u64, n: usize) -> Result<Self> {
        let exps = (0..n)
            .map(|j| -BigRational::new((j as i64).into(), (n as i64).into()))
            .collect();
        Self::new(p, exps)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn weight(&self, j: usize) -> UltraNorm {
        UltraNorm::power(self.p, self.exponents[j].clone())
    }

    fn check(&self, p: u64, n: usize) -> Result<()> {
        if p != self.p {
            return Err(AlgebraError::RingMismatch);
        }
        check_dim(self.dim(), n)
    }
}

fn max_norm(items: impl IntoIterator<Item = UltraNorm>) -> Result<UltraNorm> {
    items.into_iter().try_fold(UltraNorm::Zero, |acc, x| acc.max(&x))
}

pub fn ultra_vecnorm(x: &[PadicScaled], w: &WeightedUltraNorm) -> Result<UltraNorm> {
    check_dim(w.dim(), x.len())?;
    for xj in x {
        if xj.prime() != w.prime() {
            return Err(AlgebraError::RingMismatch);
        }
    }
    max_norm(
        x.iter()
            .enumerate()
            .map(|(j, xj)| w.weight(j).mul(&xj.abs()))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// Operator norm together with a basis vector `e_l` attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UltraOpNorm {
    pub value: UltraNorm,
    /// 0-based column `l` with `‖T e_l‖ / ‖e_l‖ = value`; `None` for `T = 0`.
    pub witness: Option<usize>,
}

/// `max_{j,l} w_j |a_{jl}|_p / w_l`, which is the exact operator norm for the
/// weighted max-norm.
pub fn ultra_opnorm(t: &Matrix<PadicField>, w: &WeightedUltraNorm) -> Result<UltraOpNorm> {
    let n = t.dim();
    w.check(t.ring().prime(), n)?;
    let mut best = UltraOpNorm {
        value: UltraNorm::Zero,
        witness: None,
    };
    for l in 0..n {
        for j in 0..n {
            let a = t.get(j, l);
            if a.is_zero() {
                continue;
            }
            let v = w.weight(j).mul(&a.abs())?.div(&w.weight(l))?;
            if best.witness.is_none() || v > best.value {
                best = UltraOpNorm {
                    value: v,
                    witness: Some(l),
                };
            }
        }
    }
    Ok(best)
}

/// `‖T e_l‖ / ‖e_l‖` computed directly from the vector norm.
pub fn column_ratio(t: &Matrix<PadicField>, w: &WeightedUltraNorm, l: usize) -> Result<UltraNorm> {
    let field = *t.ring();
    let n = t.dim();
    let e: Vec<PadicScaled> = (0..n)
        .map(|k| if k == l { field.one() } else { field.zero() })
        .collect();
    let image = t.apply(&e)?;
    ultra_vecnorm(&image, w)?.div(&ultra_vecnorm(&e, w)?)
}

/// `T e_1 = e_2, …, T e_{n−1} = e_n, T e_n = p e_1`, so that `T^n = p·I`.
pub fn shift_operator(n: usize, p: u64, precision: u32) -> Result<Matrix<PadicField>> {
    if n < 2 {
        return Err(AlgebraError::InvalidArgument(format!(
            "shift operator needs n >= 2, got {n}"
        )));
    }
    let field = PadicField::new(p, precision)?;
    Ok(Matrix::from_fn(field, n, |j, l| {
        if j == 0 && l == n - 1 {
            field.int(p as i64)
        } else if j >= 1 && l == j - 1 {
            field.one()
        } else {
            field.zero()
        }
    }))
}

/// Partial Neumann sum and its error certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct NeumannResult {
    pub inverse: ComplexMatrix,
    pub norm: f64,
    /// `‖(I − x)·S − I‖`.
    pub residual: f64,
    /// `‖x‖^{terms+1} / (1 − ‖x‖)`.
    pub bound: f64,
}

impl NeumannResult {
    /// Residual within the bound, allowing `1e-12` absolute rounding slack.
    pub fn within_bound(&self) -> bool {
        self.residual <= self.bound + FLOAT_SLACK
    }
}

/// `S = Σ_{j=0}^{terms} x^j ≈ (I − x)^{-1}` for `‖x‖ < 1`.
pub fn neumann_inverse(x: &ComplexMatrix, terms: usize) -> Result<NeumannResult> {
    let norm = x.opnorm();
    if norm.is_nan() || norm >= 1.0 {
        return Err(AlgebraError::OutOfDomain(format!(
            "Neumann series needs norm < 1, got {norm}"
        )));
    }
    let n = x.dim();
    let id = ComplexMatrix::identity(n);
    let mut sum = id.clone();
    let mut power = id.clone();
    for _ in 0..terms {
        power = power.mul(x)?;
        sum = sum.add(&power)?;
    }
    let residual = id.sub(x)?.mul(&sum)?.sub(&id)?.opnorm();
    let bound = norm.powi(terms as i32 + 1) / (1.0 - norm);
    Ok(NeumannResult {
        inverse: sum,
        norm,
        residual,
        bound,
    })
}

/// `‖AB‖ ≤ ‖A‖‖B‖` for the max-row-sum operator norm.
#[derive(Debug, Clone, PartialEq)]
pub struct SubmultReport {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

pub fn submult_check(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<SubmultReport> {
    let lhs = a.mul(b)?.opnorm();
    let rhs = a.opnorm() * b.opnorm();
    Ok(SubmultReport {
        lhs,
        rhs,
        holds: le_with_slack(lhs, rhs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;
    use num_complex::Complex64;

    #[test]
    fn pnorm_examples() {
        assert_eq!(pnorm(&[3.0, 4.0], 2.0).unwrap(), 5.0);
        assert_eq!(pnorm(&[1.0, -2.0, 3.0], f64::INFINITY).unwrap(), 3.0);
        assert!((pnorm(&[1.0; 5], 3.0).unwrap() - 5f64.powf(1.0 / 3.0)).abs() < 1e-15);
        assert!(pnorm(&[1.0], 0.5).is_err());
        assert!(pnorm(&[1e300, 1e300], 2.0).unwrap().is_finite());
    }

    #[test]
    fn comparisons() {
        let r = pnorm_inequality_check(&[1.0, 1.0], 1.0, 2.0).unwrap();
        assert!(r.passed());
        assert!((r.norm_p - 2.0).abs() < 1e-15);
        assert!(pnorm_inequality_check(&[0.3, -7.0, 2.0], 2.0, 2.0).unwrap().passed());
        assert!(pnorm_inequality_check(&[0.3, -7.0, 2.0], 1.0, f64::INFINITY)
            .unwrap()
            .passed());
        assert!(pnorm_inequality_check(&[1.0], 3.0, 2.0).is_err());
    }

    #[test]
    fn ultrametric_examples() {
        let q5 = PadicField::new(5, 4).unwrap();
        let w = WeightedUltraNorm::unweighted(5, 2).unwrap();
        assert_eq!(ultra_vecnorm(&[q5.int(1), q5.int(5)], &w).unwrap(), UltraNorm::one(5));
        assert_eq!(ultra_vecnorm(&[q5.zero(), q5.zero()], &w).unwrap(), UltraNorm::Zero);
        let sw = WeightedUltraNorm::shift_weights(5, 3).unwrap();
        assert_eq!(
            ultra_vecnorm(&[q5.zero(), q5.int(1), q5.zero()], &sw).unwrap(),
            UltraNorm::power(5, rat(-1, 3))
        );

        let t = Matrix::from_rows(q5, vec![vec![q5.int(5), q5.int(1)], vec![q5.int(25), q5.int(5)]]).unwrap();
        let r = ultra_opnorm(&t, &w).unwrap();
        assert_eq!(r.value, UltraNorm::one(5));
        assert_eq!(column_ratio(&t, &w, r.witness.unwrap()).unwrap(), r.value);
        assert_eq!(ultra_opnorm(&Matrix::zero(q5, 2), &w).unwrap().value, UltraNorm::Zero);
    }

    #[test]
    fn shift_examples() {
        let t = shift_operator(2, 5, 4).unwrap();
        assert_eq!(t.pow(2), Matrix::scalar(*t.ring(), 2, t.ring().int(5)));
        let t3 = shift_operator(3, 7, 4).unwrap();
        let f = *t3.ring();
        let y = t3.apply(&[f.int(1), f.int(2), f.int(3)]).unwrap();
        assert_eq!(y, vec![f.int(21), f.int(1), f.int(2)]);
        let w = WeightedUltraNorm::unweighted(7, 3).unwrap();
        assert_eq!(ultra_opnorm(&t3, &w).unwrap().value, UltraNorm::one(7));
        let sw = WeightedUltraNorm::shift_weights(7, 3).unwrap();
        assert_eq!(ultra_opnorm(&t3, &sw).unwrap().value, UltraNorm::power(7, rat(-1, 3)));
        assert!(shift_operator(1, 5, 4).is_err());
    }

    #[test]
    fn banach_checks() {
        let z = ComplexMatrix::zero(2);
        let r = neumann_inverse(&z, 5).unwrap();
        assert_eq!(r.inverse, ComplexMatrix::identity(2));
        let half = ComplexMatrix::diagonal(&[Complex64::new(0.5, 0.0)]);
        let r = neumann_inverse(&half, 40).unwrap();
        assert!((r.inverse.get(0, 0).re - 2.0).abs() <= r.bound + 1e-12);
        assert!(r.within_bound());
        assert!(neumann_inverse(&ComplexMatrix::identity(2), 3).is_err());
        let id = ComplexMatrix::identity(3);
        let s = submult_check(&id, &id).unwrap();
        assert!(s.holds && s.lhs == 1.0 && s.rhs == 1.0);
        assert!(submult_check(&id, &ComplexMatrix::zero(3)).unwrap().holds);
    }
}
