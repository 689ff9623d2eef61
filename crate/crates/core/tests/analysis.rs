use num_complex::Complex64;
use proptest::prelude::*;

use ultralie::exp::{
    exp_complex_matrix, exp_padic, exp_padic_matrix, padic_matrices_agree, vp_factorial, ComplexMatrix,
};
use ultralie::matrix::{gl_bracket, Matrix};
use ultralie::norms::{
    column_ratio, pnorm, submult_check, ultra_opnorm, ultra_vecnorm, WeightedUltraNorm, FLOAT_SLACK,
};
use ultralie::poly::{MultiIndex, Polynomial};
use ultralie::scalars::{BigRational, PadicField, PadicScaled, UltraNorm};
use ultralie::vfields::{matrix_to_vf, vf_apply, vf_bracket, vf_jacobi, VectorFieldPoly};
use ultralie::{Rationals, Ring};

fn rational() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=4).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

fn poly(nvars: usize) -> impl Strategy<Value = Polynomial<Rationals>> {
    prop::collection::vec((prop::collection::vec(0u32..=2, nvars), rational()), 0..4).prop_map(move |terms| {
        Polynomial::from_terms(
            Rationals,
            nvars,
            terms.into_iter().map(|(e, c)| (MultiIndex::new(e), c)),
        )
        .unwrap()
    })
}

fn field(nvars: usize) -> impl Strategy<Value = VectorFieldPoly<Rationals>> {
    prop::collection::vec(poly(nvars), nvars).prop_map(|c| VectorFieldPoly::new(c).unwrap())
}

fn rat_matrix(n: usize) -> impl Strategy<Value = Matrix<Rationals>> {
    prop::collection::vec(rational(), n * n)
        .prop_map(move |e| Matrix::from_fn(Rationals, n, |j, l| e[j * n + l].clone()))
}

fn complex_matrix(n: usize, scale: f64) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n)
        .prop_map(move |e| ComplexMatrix::from_fn(n, |j, l| Complex64::new(e[j * n + l].0, e[j * n + l].1) * scale))
}

fn padic_matrix(p: u64, n: usize, min_val: i64) -> impl Strategy<Value = Matrix<PadicField>> {
    prop::collection::vec((min_val..min_val + 4, 1u64..1000, 0u8..4), n * n).prop_map(move |e| {
        let field = PadicField::new(p, 6).unwrap();
        Matrix::from_fn(field, n, |j, l| {
            let (v, u, z) = e[j * n + l];
            if z == 0 || u % p == 0 {
                field.zero()
            } else {
                let x = BigRational::from_integer(u.into()) * BigRational::from_integer(p.into()).pow(v as i32);
                field.element(&x)
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_acts_as_commutator(v in field(2), w in field(2), f in poly(2)) {
        let lhs = vf_apply(&vf_bracket(&v, &w).unwrap(), &f).unwrap();
        let vw = vf_apply(&v, &vf_apply(&w, &f).unwrap()).unwrap();
        let wv = vf_apply(&w, &vf_apply(&v, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs, vw.sub(&wv).unwrap());
    }

    #[test]
    fn vector_field_jacobi(u in field(2), v in field(2), w in field(2)) {
        prop_assert!(vf_jacobi(&u, &v, &w).unwrap().is_zero());
        prop_assert!(vf_bracket(&v, &v).unwrap().is_zero());
    }

    #[test]
    fn linear_fields_anti_homomorphism(a in rat_matrix(3), b in rat_matrix(3)) {
        let lhs = matrix_to_vf(&gl_bracket(&a, &b).unwrap()).unwrap();
        let rhs = vf_bracket(&matrix_to_vf(&a).unwrap(), &matrix_to_vf(&b).unwrap()).unwrap();
        prop_assert!(lhs.add(&rhs).unwrap().is_zero());
    }

    #[test]
    fn complex_exp_inverse_and_star(a in complex_matrix(3, 1.5)) {
        let e = exp_complex_matrix(&a).unwrap();
        let back = e.mul(&exp_complex_matrix(&a.scale(Complex64::new(-1.0, 0.0))).unwrap()).unwrap();
        prop_assert!(back.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-10);
        let star = exp_complex_matrix(&a.conj_transpose()).unwrap();
        prop_assert!(star.max_abs_diff(&e.conj_transpose()) < 1e-10);
    }

    #[test]
    fn antihermitian_exponentials_are_unitary(a in complex_matrix(3, 1.0)) {
        let skew = a.sub(&a.conj_transpose()).unwrap();
        let u = exp_complex_matrix(&skew).unwrap();
        prop_assert!(u.mul(&u.conj_transpose()).unwrap().max_abs_diff(&ComplexMatrix::identity(3)) < 1e-10);
    }

    #[test]
    fn commuting_exponentials(d1 in complex_matrix(1, 2.0), d2 in complex_matrix(1, 2.0)) {
        let a = ComplexMatrix::diagonal(&[d1.get(0, 0), d2.get(0, 0)]);
        let b = ComplexMatrix::diagonal(&[d2.get(0, 0), d1.get(0, 0)]);
        let lhs = exp_complex_matrix(&a.add(&b).unwrap()).unwrap();
        let rhs = exp_complex_matrix(&a).unwrap().mul(&exp_complex_matrix(&b).unwrap()).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-9);
    }

    #[test]
    fn padic_matrix_exp_inverse(t in padic_matrix(5, 3, 1)) {
        let e = exp_padic_matrix(&t).unwrap();
        let back = e.mul(&exp_padic_matrix(&t.neg()).unwrap()).unwrap();
        prop_assert!(padic_matrices_agree(&back, &Matrix::identity(*t.ring(), 3)));
    }

    #[test]
    fn padic_exp_domain(v in -2i64..4, u in 1u64..500, p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        prop_assume!(u % p != 0);
        let x = PadicScaled::from_rational(
            &(BigRational::from_integer(u.into()) * BigRational::from_integer(p.into()).pow(v as i32)),
            p,
            6,
        )
        .unwrap();
        // the series converges exactly when v > 1/(p-1)
        let inside = (v as i128) * (p as i128 - 1) > 1;
        prop_assert_eq!(exp_padic(&x).is_ok(), inside);
    }

    #[test]
    fn ultra_opnorm_is_attained_and_bounds_images(t in padic_matrix(3, 3, -2), x in padic_matrix(3, 1, -1)) {
        let w = WeightedUltraNorm::new(3, vec![BigRational::new(1.into(), 2.into()), BigRational::from_integer(0.into()), BigRational::new((-1).into(), 3.into())]).unwrap();
        let norm = ultra_opnorm(&t, &w).unwrap();
        if let Some(l) = norm.witness {
            prop_assert_eq!(column_ratio(&t, &w, l).unwrap(), norm.value.clone());
        }
        let v: Vec<PadicScaled> = (0..3).map(|k| x.get(0, 0).clone().to_rational() * BigRational::from_integer((k + 1).into()))
            .map(|r| t.ring().element(&r)).collect();
        let image = t.apply(&v).unwrap();
        let bound = norm.value.mul(&ultra_vecnorm(&v, &w).unwrap()).unwrap();
        prop_assert!(ultra_vecnorm(&image, &w).unwrap() <= bound);
    }

    #[test]
    fn ultra_opnorm_submultiplicative(s in padic_matrix(7, 3, -1), t in padic_matrix(7, 3, -1)) {
        let w = WeightedUltraNorm::unweighted(7, 3).unwrap();
        let st = s.mul(&t).unwrap();
        let lhs = ultra_opnorm(&st, &w).unwrap().value;
        let rhs = ultra_opnorm(&s, &w).unwrap().value.mul(&ultra_opnorm(&t, &w).unwrap().value).unwrap();
        prop_assert!(lhs <= rhs);
    }

    #[test]
    fn float_norms(x in prop::collection::vec(-1e3f64..1e3, 1..16), y in prop::collection::vec(-1e3f64..1e3, 16)) {
        let y = &y[..x.len()];
        let sum: Vec<f64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        for p in [1.0, 1.5, 2.0, 3.0, f64::INFINITY] {
            let (a, b, c) = (pnorm(&x, p).unwrap(), pnorm(y, p).unwrap(), pnorm(&sum, p).unwrap());
            prop_assert!(c <= (a + b) * (1.0 + FLOAT_SLACK));
        }
    }

    #[test]
    fn float_opnorm_submultiplicative(a in complex_matrix(4, 3.0), b in complex_matrix(4, 3.0)) {
        prop_assert!(submult_check(&a, &b).unwrap().holds);
    }
}

#[test]
fn legendre_formula_small_cases() {
    assert_eq!(vp_factorial(10, 2).unwrap(), 8);
    assert_eq!(vp_factorial(100, 5).unwrap(), 24);
    assert_eq!(vp_factorial(0, 3).unwrap(), 0);
    assert!(vp_factorial(10, 4).is_err());
    assert_eq!(UltraNorm::one(5).to_f64(), 1.0);
}
