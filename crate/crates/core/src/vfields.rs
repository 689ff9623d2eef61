//! Polynomial vector fields `Σ p_j ∂_j` acting as derivations of
//! `A[t_1, …, t_n]`, with their bracket and the link to matrices.

use std::fmt;

use crate::error::{check_dim, AlgebraError, Result};
use crate::matrix::Matrix;
use crate::poly::{MultiIndex, Polynomial};
use crate::ring::Ring;

/// An `n`-tuple of polynomials in `n` variables.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorFieldPoly<R: Ring> {
    components: Vec<Polynomial<R>>,
}

impl<R: Ring> VectorFieldPoly<R> {
    pub fn new(components: Vec<Polynomial<R>>) -> Result<Self> {
        let n = components.len();
        if n == 0 {
            return Err(AlgebraError::InvalidArgument(
                "vector field needs at least one component".into(),
            ));
        }
        let ring = components[0].ring().clone();
        for p in &components {
            check_dim(n, p.nvars())?;
            if *p.ring() != ring {
                return Err(AlgebraError::RingMismatch);
            }
        }
        Ok(Self { components })
    }

    pub fn zero(ring: R, n: usize) -> Self {
        Self {
            components: vec![Polynomial::zero(ring, n); n],
        }
    }

    /// `(t_1, …, t_n)`, which multiplies each homogeneous part by its degree.
    pub fn euler(ring: R, n: usize) -> Self {
        let components = (1..=n)
            .map(|j| Polynomial::var(ring.clone(), n, j).expect("index in range"))
            .collect();
        Self { components }
    }

    pub fn components(&self) -> &[Polynomial<R>] {
        &self.components
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn ring(&self) -> &R {
        self.components[0].ring()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.sub(b))
    }

    fn zip(&self, other: &Self, f: impl Fn(&Polynomial<R>, &Polynomial<R>) -> Result<Polynomial<R>>) -> Result<Self> {
        check_dim(self.nvars(), other.nvars())?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(Self { components })
    }

    /// Every component homogeneous of the given degree (zero counts).
    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.components.iter().all(|p| p.is_homogeneous(degree))
    }

    /// Canonical text, one polynomial literal per component.
    pub fn to_json(&self) -> String {
        let parts: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        serde_json::to_string(&parts).expect("strings serialize")
    }
}

impl<R: Ring> fmt::Display for VectorFieldPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, p) in self.components.iter().enumerate() {
            if j > 0 {
                write!(f, " + ")?;
            }
            let s = p.to_string();
            if s.contains(' ') {
                write!(f, "({s}) ∂{}", j + 1)?;
            } else {
                write!(f, "{s} ∂{}", j + 1)?;
            }
        }
        Ok(())
    }
}

/// `Σ_j p_j ∂_j f`.
pub fn vf_apply<R: Ring>(v: &VectorFieldPoly<R>, f: &Polynomial<R>) -> Result<Polynomial<R>> {
    check_dim(v.nvars(), f.nvars())?;
    if f.ring() != v.ring() {
        return Err(AlgebraError::RingMismatch);
    }
    let mut acc = Polynomial::zero(f.ring().clone(), f.nvars());
    for (j, p) in v.components.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        acc = acc.add(&p.mul(&f.partial(j + 1)?)?)?;
    }
    Ok(acc)
}

/// `r_j = Σ_l p_l ∂_l q_j − q_l ∂_l p_j`, the field whose action is the
/// commutator of the two actions.
pub fn vf_bracket<R: Ring>(v: &VectorFieldPoly<R>, w: &VectorFieldPoly<R>) -> Result<VectorFieldPoly<R>> {
    check_dim(v.nvars(), w.nvars())?;
    if v.ring() != w.ring() {
        return Err(AlgebraError::RingMismatch);
    }
    let components = v
        .components
        .iter()
        .zip(&w.components)
        .map(|(p, q)| vf_apply(v, q)?.sub(&vf_apply(w, p)?))
        .collect::<Result<_>>()?;
    Ok(VectorFieldPoly { components })
}

/// `[U,[V,W]] + [V,[W,U]] + [W,[U,V]]`.
pub fn vf_jacobi<R: Ring>(
    u: &VectorFieldPoly<R>,
    v: &VectorFieldPoly<R>,
    w: &VectorFieldPoly<R>,
) -> Result<VectorFieldPoly<R>> {
    let a = vf_bracket(u, &vf_bracket(v, w)?)?;
    let b = vf_bracket(v, &vf_bracket(w, u)?)?;
    let c = vf_bracket(w, &vf_bracket(u, v)?)?;
    a.add(&b)?.add(&c)
}

/// Linear field `p_j = Σ_l a_{jl} t_l`. Commutators of matrices go to the
/// negated bracket of fields.
pub fn matrix_to_vf<R: Ring>(m: &Matrix<R>) -> Result<VectorFieldPoly<R>> {
    let ring = m.ring();
    if !ring.is_commutative() {
        return Err(AlgebraError::Unsupported(
            "linear vector fields need a commutative ring".into(),
        ));
    }
    let n = m.dim();
    let components = (0..n)
        .map(|j| {
            let terms = (0..n).map(|l| (MultiIndex::unit(n, l), m.get(j, l).clone()));
            Polynomial::from_terms(ring.clone(), n, terms)
        })
        .collect::<Result<_>>()?;
    VectorFieldPoly::new(components)
}
