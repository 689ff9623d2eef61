use rand::Rng;
use serde_json::{json, Value};

use super::{in_range, reject_unused, usage, Collector, Params, SuiteSpec, STREAM_STRIDE};
use crate::error::{AlgebraError, Result};
use crate::exp::{
    det_exp_tr_float, det_exp_tr_padic, det_exp_tr_series, exp_padic, exp_padic_matrix, padic_matrices_agree,
    vp_factorial, ExpMode, ExpReport,
};
use crate::matrix::{gl_bracket, Matrix};
use crate::poly::SeriesRing;
use crate::random;
use crate::ring::{Rationals, Ring};
use crate::scalars::{primes_up_to, PadicField, PadicScaled};
use crate::vfields::{matrix_to_vf, vf_apply, vf_bracket, vf_jacobi, VectorFieldPoly};

fn vf_json(v: &VectorFieldPoly<Rationals>) -> Value {
    json!(v.components().iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

/// Bracket of vector fields against the commutator of their actions.
pub(super) fn vfield_bracket(spec: &SuiteSpec, params: &mut Params, c: &mut Collector) -> Result<()> {
    reject_unused(spec, &["dim"])?;
    let max_n = in_range("dim", spec.dim.unwrap_or(3), 1, 4)?;
    let trials = spec.trials.unwrap_or(100);
    let seed = spec.seed.expect("checked by run_suite");
    params.set("dim", max_n);
    params.set("trials", trials);
    params.set("field_degree", 3);
    params.set("test_degree", 3);
    params.set("matrix_dim", 2);

    c.trials(seed, 0, trials, |rng, t, c| {
        let n = rng.gen_range(1..=max_n);
        let v = random::vector_field(rng, n, 3, 3);
        let w = random::vector_field(rng, n, 3, 3);
        let f = random::polynomial(rng, n, 3, 4);
        let g = random::polynomial(rng, n, 2, 3);
        let witness = || json!({"trial": t, "V": vf_json(&v), "W": vf_json(&w), "f": f.to_string()});
        let operator = (|| -> Result<bool> {
            let lhs = vf_apply(&vf_bracket(&v, &w)?, &f)?;
            let rhs = vf_apply(&v, &vf_apply(&w, &f)?)?.sub(&vf_apply(&w, &vf_apply(&v, &f)?)?)?;
            Ok(lhs == rhs)
        })();
        c.record_result("operator-identity", operator, witness);
        let leibniz = (|| -> Result<bool> {
            let lhs = vf_apply(&v, &f.mul(&g)?)?;
            let rhs = vf_apply(&v, &f)?.mul(&g)?.add(&f.mul(&vf_apply(&v, &g)?)?)?;
            Ok(lhs == rhs)
        })();
        c.record_result(
            "leibniz",
            leibniz,
            || json!({"trial": t, "V": vf_json(&v), "f": f.to_string(), "g": g.to_string()}),
        );
    });

    c.trials(seed, STREAM_STRIDE, trials, |rng, t, c| {
        let n = rng.gen_range(1..=max_n);
        let u = random::vector_field(rng, n, 2, 2);
        let v = random::vector_field(rng, n, 2, 2);
        let w = random::vector_field(rng, n, 2, 2);
        let f = random::polynomial(rng, n, 3, 4);
        let witness = || json!({"trial": t, "U": vf_json(&u), "V": vf_json(&v), "W": vf_json(&w), "f": f.to_string()});
        let jac = vf_jacobi(&u, &v, &w);
        let applied = jac
            .as_ref()
            .map_err(Clone::clone)
            .and_then(|j| Ok(vf_apply(j, &f)?.is_zero()));
        c.record_result("jacobi-operator", applied, witness);
        if n <= 2 {
            c.record_result("jacobi-symbolic", jac.map(|j| j.is_zero()), witness);
        }
    });

    c.trials(seed, 2 * STREAM_STRIDE, trials, |rng, t, c| {
        let a = random::rational_matrix(rng, 2, 9, 4);
        let b = random::rational_matrix(rng, 2, 9, 4);
        let witness = || json!({"trial": t, "A": a.to_string_rows(), "B": b.to_string_rows()});
        let anti = (|| -> Result<bool> {
            let lhs = matrix_to_vf(&gl_bracket(&a, &b)?)?;
            let br = vf_bracket(&matrix_to_vf(&a)?, &matrix_to_vf(&b)?)?;
            Ok(lhs.add(&br)?.is_zero())
        })();
        c.record_result("matrix-anti-homomorphism", anti, witness);
        let closure = vf_bracket(
            &matrix_to_vf(&a).expect("Q is commutative"),
            &matrix_to_vf(&b).expect("Q is commutative"),
        )
        .map(|r| r.is_homogeneous(1));
        c.record_result("degree-one-closure", closure, witness);
    });
    Ok(())
}

fn exp_witness(report: &ExpReport, t: u64, input: Value) -> Value {
    let mut w = report.to_json();
    w["trial"] = json!(t);
    w["input"] = input;
    w
}

fn record_exp(c: &mut Collector, check: &str, t: u64, input: Value, report: Result<ExpReport>, tol: f64) {
    match report {
        Ok(r) => c.record(check, r.passes(tol), || exp_witness(&r, t, input)),
        Err(e) => c.record_result(check, Err(e), || json!({"trial": t, "input": input})),
    }
}

pub(super) const FLOAT_TOL: f64 = 1e-9;

/// `det(exp M) = exp(tr M)` in float, series and p-adic arithmetic.
pub(super) fn det_exp_tr(spec: &SuiteSpec, params: &mut Params, c: &mut Collector) -> Result<()> {
    reject_unused(spec, &["dim", "mode", "prime", "precision", "truncation"])?;
    let modes: Vec<ExpMode> = match spec.mode.as_deref() {
        None | Some("all") => vec![ExpMode::Float, ExpMode::Series, ExpMode::Padic],
        Some(m) => vec![m.parse().map_err(|e: AlgebraError| usage(e.to_string()))?],
    };
    let dim = spec.dim.map(|d| in_range("dim", d, 1, 6)).transpose()?;
    let d = in_range("truncation", spec.truncation.unwrap_or(6), 1, 16)?;
    let p = spec.prime.unwrap_or(5);
    let precision = in_range("precision", spec.precision.unwrap_or(6), 1, 64)?;
    let seed = spec.seed.expect("checked by run_suite");
    params.set("modes", modes.iter().map(|m| m.as_str()).collect::<Vec<_>>());
    if let Some(n) = dim {
        params.set("dim", n);
    }
    for &mode in &modes {
        let stream = mode as u64 * STREAM_STRIDE;
        match mode {
            ExpMode::Float => {
                let trials = spec.trials.unwrap_or(100);
                params.set("float_trials", trials);
                params.set("float_tolerance", FLOAT_TOL);
                c.trials(seed, stream, trials, |rng, t, c| {
                    let n = dim.unwrap_or_else(|| rng.gen_range(2..=4));
                    let a = random::complex_matrix(rng, n);
                    record_exp(c, "float", t, json!(a.to_string()), det_exp_tr_float(&a), FLOAT_TOL);
                });
            }
            ExpMode::Series => {
                let trials = spec.trials.unwrap_or(50);
                params.set("series_trials", trials);
                params.set("truncation", d);
                let ring = SeriesRing::new(Rationals, 1, d);
                let t1 = ring.var(1).expect("one variable");
                c.trials(seed, stream, trials, |rng, t, c| {
                    let n = dim.unwrap_or_else(|| rng.gen_range(2..=3));
                    let m = Matrix::from_fn(ring.clone(), n, |_, _| t1.scale_left(&random::rational(rng, 9, 5)));
                    let input = json!(m.to_string_rows());
                    record_exp(c, "series", t, input, det_exp_tr_series(&m), 0.0);
                });
            }
            ExpMode::Padic => {
                let trials = spec.trials.unwrap_or(50);
                let field = PadicField::new(p, precision)?;
                let min_val = if p == 2 { 2 } else { 1 };
                params.set("padic_trials", trials);
                params.set("prime", p);
                params.set("precision", precision);
                c.trials(seed, stream, trials, |rng, t, c| {
                    let n = dim.unwrap_or(2);
                    let m = random::padic_matrix(rng, &field, n, min_val, min_val + 3);
                    let input = json!(m.to_string_rows());
                    record_exp(c, "padic", t, input, det_exp_tr_padic(&m), 0.0);
                });
            }
        }
    }
    Ok(())
}

fn padic_in_domain<R: Rng>(rng: &mut R, field: &PadicField) -> PadicScaled {
    let min_val = if field.prime() == 2 { 2 } else { 1 };
    random::padic(rng, field, min_val, min_val + 4)
}

/// Homomorphism, inverse and domain rules of the p-adic exponential.
pub(super) fn padic_exp(spec: &SuiteSpec, params: &mut Params, c: &mut Collector) -> Result<()> {
    reject_unused(spec, &["prime", "precision"])?;
    let primes = spec.prime.map_or(vec![5, 7], |p| vec![p]);
    let precision = in_range("precision", spec.precision.unwrap_or(6), 1, 64)?;
    let trials = spec.trials.unwrap_or(100);
    let seed = spec.seed.expect("checked by run_suite");
    params.set("primes", primes.clone());
    params.set("precision", precision);
    params.set("trials", trials);
    for (i, &p) in primes.iter().enumerate() {
        let field = PadicField::new(p, precision)?;
        let one = field.one();
        c.trials(seed, i as u64 * STREAM_STRIDE, trials, |rng, t, c| {
            let a = padic_in_domain(rng, &field);
            let b = padic_in_domain(rng, &field);
            let w = || json!({"trial": t, "p": p, "a": a.to_string(), "b": b.to_string()});
            let hom = (|| -> Result<bool> {
                Ok(exp_padic(&field.add(&a, &b))? == field.mul(&exp_padic(&a)?, &exp_padic(&b)?))
            })();
            c.record_result(&format!("homomorphism:{p}"), hom, w);
            let inv = (|| -> Result<bool> { Ok(field.mul(&exp_padic(&a)?, &exp_padic(&field.neg(&a))?) == one) })();
            c.record_result(&format!("inverse:{p}"), inv, w);

            let u = random::padic(rng, &field, 0, 0);
            let rejected = matches!(exp_padic(&u), Err(AlgebraError::OutOfDomain(_)));
            c.record(
                &format!("domain-rejection:{p}"),
                rejected,
                || json!({"trial": t, "p": p, "a": u.to_string()}),
            );

            let min_val = if p == 2 { 2 } else { 1 };
            let m = random::padic_matrix(rng, &field, 2, min_val, min_val + 3);
            let mat = (|| -> Result<bool> {
                let prod = exp_padic_matrix(&m)?.mul(&exp_padic_matrix(&m.neg())?)?;
                Ok(padic_matrices_agree(&prod, &Matrix::identity(field, 2)))
            })();
            c.record_result(
                &format!("matrix-inverse:{p}"),
                mat,
                || json!({"trial": t, "p": p, "T": m.to_string_rows()}),
            );
        });
    }
    Ok(())
}

/// `v_p(n!) < n/(p−1)`, with `v_p(n!)` also accumulated as `Σ_{k≤n} v_p(k)`.
pub(super) fn factorial_valuation(spec: &SuiteSpec, params: &mut Params, c: &mut Collector) -> Result<()> {
    reject_unused(spec, &["prime"])?;
    let max_n = spec.trials.unwrap_or(10_000);
    let primes = spec.prime.map_or_else(|| primes_up_to(97), |p| vec![p]);
    params.set("max_n", max_n);
    params.set("primes", primes.clone());
    for p in primes {
        let mut running = 0u64;
        for n in 1..=max_n {
            let mut k = n;
            while k % p == 0 {
                k /= p;
                running += 1;
            }
            let v = vp_factorial(n, p)?;
            c.record(
                "legendre-bound",
                (v as u128) * (p as u128 - 1) < n as u128,
                || json!({"n": n, "p": p, "vp": v}),
            );
            c.record(
                "legendre-oracle",
                v == running,
                || json!({"n": n, "p": p, "vp": v, "oracle": running}),
            );
        }
    }
    Ok(())
}
