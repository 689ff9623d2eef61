use num_rational::BigRational;
use rand::Rng;
use serde_json::json;

use super::{in_range, reject_unused, Collector, Params, SuiteSpec, STREAM_STRIDE};
use crate::error::Result;
use crate::exp::ComplexMatrix;
use crate::matrix::Matrix;
use crate::norms::{
    column_ratio, neumann_inverse, pnorm, pnorm_inequality_check, shift_operator, submult_check, ultra_opnorm,
    ultra_vecnorm, WeightedUltraNorm, FLOAT_SLACK,
};
use crate::random;
use crate::ring::Ring;
use crate::scalars::{quat_conj, quat_mul, PadicField, Quaternion, UltraNorm};

/// Largest `|a_jl|_p`, folded independently of the operator-norm routine.
fn max_entry_norm(t: &Matrix<PadicField>) -> UltraNorm {
    let mut best = UltraNorm::Zero;
    for a in t.entries() {
        let v = a.abs();
        if matches!(v.partial_cmp(&best), Some(std::cmp::Ordering::Greater)) {
            best = v;
        }
    }
    best
}

fn random_weights<R: Rng>(rng: &mut R, p: u64, n: usize) -> WeightedUltraNorm {
    let exps = (0..n)
        .map(|_| BigRational::new(rng.gen_range(-6..=6).into(), rng.gen_range(1..=3).into()))
        .collect();
    WeightedUltraNorm::new(p, exps).expect("prime checked")
}

/// Shift operator identities, exact operator norms with attainment, and the
/// ultrametric inequality.
pub(super) fn ultrametric_norms(spec: &SuiteSpec, params: &mut Params, c: &mut Collector) -> Result<()> {
    reject_unused(spec, &["dim", "prime", "precision"])?;
    let primes = spec.prime.map_or(vec![3, 5, 7, 13], |p| vec![p]);
    let n_max = in_range("dim", spec.dim.unwrap_or(6), 2, 12)?;
    let precision = in_range("precision", spec.precision.unwrap_or(6), 1, 64)?;
    let trials = spec.trials.unwrap_or(200);
    let seed = spec.seed.expect("checked by run_suite");
    params.set("primes", primes.clone());
    params.set("dim", n_max);
    params.set("precision", precision);
    params.set("trials", trials);

    for &p in &primes {
        for n in 2..=n_max {
            let t = shift_operator(n, p, precision)?;
            let f = *t.ring();
            let w = || json!({"n": n, "p": p});
            c.record(
                "shift-power",
                t.pow(n as u64) == Matrix::scalar(f, n, f.int(p as i64)),
                w,
            );
            let weighted = ultra_opnorm(&t, &WeightedUltraNorm::shift_weights(p, n)?)?;
            let expect = UltraNorm::power(p, BigRational::new((-1).into(), (n as i64).into()));
            c.record(
                "shift-weighted-norm",
                weighted.value == expect,
                || json!({"n": n, "p": p, "norm": weighted.value.to_string(), "expected": expect.to_string()}),
            );
            let plain = ultra_opnorm(&t, &WeightedUltraNorm::unweighted(p, n)?)?;
            c.record("shift-unweighted-norm", plain.value == UltraNorm::one(p), w);
        }
    }

    c.trials(seed, 0, trials, |rng, t, c| {
        let p = primes[t as usize % primes.len()];
        let field = PadicField::new(p, precision).expect("prime checked");
        let n = rng.gen_range(1..=n_max.min(4));
        let a = random::padic_matrix(rng, &field, n, -2, 3);
        let b = random::padic_matrix(rng, &field, n, -2, 3);
        let wt = random_weights(rng, p, n);
        let unweighted = WeightedUltraNorm::unweighted(p, n).expect("prime checked");
        let witness = || json!({"trial": t, "p": p, "A": a.to_string_rows(), "B": b.to_string_rows()});

        let r = ultra_opnorm(&a, &unweighted);
        c.record_result(
            "opnorm-max-entry",
            r.as_ref().map(|r| r.value == max_entry_norm(&a)).map_err(Clone::clone),
            witness,
        );
        for (label, w) in [("opnorm-attained", &unweighted), ("opnorm-attained-weighted", &wt)] {
            let attained = ultra_opnorm(&a, w).and_then(|r| match r.witness {
                Some(l) => Ok(column_ratio(&a, w, l)? == r.value),
                None => Ok(a.is_zero()),
            });
            c.record_result(label, attained, witness);
        }
        let submult = (|| -> Result<bool> {
            let ab = ultra_opnorm(&a.mul(&b)?, &wt)?.value;
            let bound = ultra_opnorm(&a, &wt)?.value.mul(&ultra_opnorm(&b, &wt)?.value)?;
            Ok(ab <= bound)
        })();
        c.record_result("opnorm-submultiplicative", submult, witness);

        let x: Vec<_> = (0..n).map(|_| random::padic_or_zero(rng, &field, -2, 3)).collect();
        let y: Vec<_> = (0..n).map(|_| random::padic_or_zero(rng, &field, -2, 3)).collect();
        let tri = (|| -> Result<bool> {
            let sum: Vec<_> = x.iter().zip(&y).map(|(a, b)| field.add(a, b)).collect();
            let (nx, ny, ns) = (
                ultra_vecnorm(&x, &wt)?,
                ultra_vecnorm(&y, &wt)?,
                ultra_vecnorm(&sum, &wt)?,
            );
            let max = nx.max(&ny)?;
            Ok(ns <= max && (nx == ny || ns == max))
        })();
        c.record_result("ultrametric-triangle", tri, || {
            json!({"trial": t, "p": p, "x": x.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                   "y": y.iter().map(|v| v.to_string()).collect::<Vec<_>>()})
        });
    });
    Ok(())
}

fn quaternion_strings(q: &Quaternion) -> String {
    q.to_string()
}

/// Multiplicativity of the norm, the conjugate as an involution, and squares
/// of imaginary quaternions.
pub(super) fn quaternion(spec: &SuiteSpec, params: &mut Params, c: &mut Collector) -> Result<()> {
    reject_unused(spec, &[])?;
    let trials = spec.trials.unwrap_or(10_000);
    let seed = spec.seed.expect("checked by run_suite");
    params.set("trials", trials);
    c.trials(seed, 0, trials, |rng, t, c| {
        let x = random::quaternion(rng, 20, 7);
        let y = random::quaternion(rng, 20, 7);
        let witness = || json!({"trial": t, "x": quaternion_strings(&x), "y": quaternion_strings(&y)});
        let xy = quat_mul(&x, &y);
        c.record(
            "norm-multiplicative",
            xy.norm_sq() == x.norm_sq() * y.norm_sq(),
            witness,
        );
        c.record(
            "conjugate-reverses-products",
            quat_conj(&xy) == quat_mul(&quat_conj(&y), &quat_conj(&x)),
            witness,
        );
        c.record("conjugate-involution", quat_conj(&quat_conj(&x)) == x, witness);
        let w = Quaternion::new(Default::default(), x.ci.clone(), x.cj.clone(), x.ck.clone());
        c.record(
            "imaginary-square",
            quat_mul(&w, &w) == Quaternion::real(-w.norm_sq()),
            witness,
        );
        if !x.is_zero() {
            let ok = x
                .inv()
                .map(|inv| quat_mul(&x, &inv) == Quaternion::one() && quat_mul(&inv, &x) == Quaternion::one());
            c.record_result("inverse", ok, witness);
        }
    });
    Ok(())
}

const EXPONENTS: [f64; 5] = [1.0, 1.5, 2.0, 3.0, f64::INFINITY];

fn exponent_json(p: f64) -> serde_json::Value {
    if p.is_infinite() {
        json!("inf")
    } else {
        json!(p)
    }
}

/// Comparisons between p-norms, the triangle inequality, Neumann inversion
/// and submultiplicativity of the max-row-sum norm.
pub(super) fn pnorm_inequalities(spec: &SuiteSpec, params: &mut Params, c: &mut Collector) -> Result<()> {
    reject_unused(spec, &["dim"])?;
    let n_max = in_range("dim", spec.dim.unwrap_or(16), 1, 256)?;
    let trials = spec.trials.unwrap_or(10_000);
    let seed = spec.seed.expect("checked by run_suite");
    let matrix_trials = trials.min(100);
    params.set("dim", n_max);
    params.set("trials", trials);
    params.set("matrix_trials", matrix_trials);
    params.set("slack", FLOAT_SLACK);

    c.trials(seed, 0, trials, |rng, t, c| {
        let n = rng.gen_range(1..=n_max);
        let v = random::real_vector(rng, n);
        let u = random::real_vector(rng, n);
        let witness = |p: f64, q: f64| json!({"trial": t, "v": v, "p": exponent_json(p), "q": exponent_json(q)});
        for (i, &p) in EXPONENTS.iter().enumerate() {
            for &q in &EXPONENTS[i..] {
                let r = pnorm_inequality_check(&v, p, q).map(|r| r.passed());
                c.record_result("comparison", r, || witness(p, q));
            }
            let sum: Vec<f64> = v.iter().zip(&u).map(|(a, b)| a + b).collect();
            let tri = (|| -> Result<bool> {
                Ok(crate::norms::le_with_slack(
                    pnorm(&sum, p)?,
                    pnorm(&v, p)? + pnorm(&u, p)?,
                ))
            })();
            c.record_result(
                "triangle",
                tri,
                || json!({"trial": t, "v": v, "u": u, "p": exponent_json(p)}),
            );
        }
    });

    c.trials(seed, STREAM_STRIDE, matrix_trials, |rng, t, c| {
        let target = rng.gen_range(0.0..0.4);
        let x = random::contraction(rng, 3, target);
        let witness = || json!({"trial": t, "x": x.to_string()});
        let neumann = neumann_inverse(&x, 60).and_then(|r| {
            let direct = ComplexMatrix::identity(3).sub(&x)?.solve(&ComplexMatrix::identity(3))?;
            Ok(r.within_bound() && r.residual < 1e-12 && r.inverse.max_abs_diff(&direct) < 1e-12)
        });
        c.record_result("neumann", neumann, witness);
        let a = random::complex_matrix(rng, 4);
        let b = random::complex_matrix(rng, 4);
        c.record_result(
            "submultiplicative",
            submult_check(&a, &b).map(|r| r.holds),
            || json!({"trial": t, "A": a.to_string(), "B": b.to_string()}),
        );
    });
    Ok(())
}
