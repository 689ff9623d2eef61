use rand::Rng;
use serde_json::{json, Value};

use super::{reject_unused, usage, Collector, Params, SuiteSpec, STREAM_STRIDE};
use crate::algebra::{
    ad_matrix, center_basis, derivation_basis, is_derivation, library, mult, AlgElement, AnyStructureConstants, Field,
    StructureConstants,
};
use crate::error::Result;
use crate::linalg;
use crate::matrix::{gl_bracket, Matrix};
use crate::random::ring_element;
use crate::scalars::FieldDescriptor;

fn field_label(f: FieldDescriptor) -> String {
    match f {
        FieldDescriptor::Rationals => "Q".into(),
        FieldDescriptor::Prime { p } => format!("F_{p}"),
        FieldDescriptor::Padic { p, precision } => format!("Q_{p}(N={precision})"),
    }
}

fn load(name: &str) -> Result<AnyStructureConstants> {
    library::load(name).map_err(|e| usage(e.to_string()))
}

fn algebras(spec: &SuiteSpec, defaults: &[&str]) -> Vec<String> {
    if spec.algebras.is_empty() {
        defaults.iter().map(|s| s.to_string()).collect()
    } else {
        spec.algebras.clone()
    }
}

const LIE_DEFAULTS: [&str; 7] = ["so3", "sl2", "heisenberg", "gl1", "gl2", "gl3", "gl4"];

/// Exhaustive Lie-axiom check on basis elements, over Q and prime fields.
pub(super) fn lie_axioms(spec: &SuiteSpec, params: &mut Params, c: &mut Collector) -> Result<()> {
    reject_unused(spec, &["algebra", "prime"])?;
    let names = algebras(spec, &LIE_DEFAULTS);
    let primes = spec.prime.map_or(vec![2, 7], |p| vec![p]);
    params.set("algebras", names.clone());
    params.set("primes", primes.clone());
    for name in &names {
        let base = load(name)?;
        let mut variants = vec![base.clone()];
        if matches!(base, AnyStructureConstants::Rational(_)) {
            for &p in &primes {
                variants.push(base.change_field(FieldDescriptor::Prime { p })?);
            }
        }
        for sc in variants {
            let field = field_label(sc.to_file().field);
            let report = sc.verify_lie();
            let check = format!("lie:{name}:{field}");
            if report.passed() {
                c.record(&check, true, || Value::Null);
                continue;
            }
            let basis = sc.to_file().basis;
            for w in &report.pair_witnesses {
                let kind = if w.j == w.l { "alternating" } else { "antisymmetry" };
                c.record(&check, false, || {
                    json!({"algebra": name, "field": field, "kind": kind, "pair": [w.j, w.l], "basis": basis, "value": w.value})
                });
            }
            for w in &report.triple_witnesses {
                c.record(&check, false, || {
                    json!({"algebra": name, "field": field, "kind": "jacobi", "triple": [w.j, w.l, w.m], "basis": basis, "defect": w.defect})
                });
            }
        }
    }
    Ok(())
}

fn random_element<F: Field, R: Rng>(rng: &mut R, sc: &StructureConstants<F>) -> AlgElement<F> {
    AlgElement::new((0..sc.dim()).map(|_| ring_element(rng, sc.field())).collect())
}

fn element_json<F: Field>(sc: &StructureConstants<F>, x: &AlgElement<F>) -> Value {
    json!(x.format(sc.field()))
}

fn adjoint_trials<F: Field>(
    sc: &StructureConstants<F>,
    name: &str,
    seed: u64,
    stream: u64,
    trials: u64,
    c: &mut Collector,
) {
    let hom = format!("ad-homomorphism:{name}");
    let der = format!("ad-derivation:{name}");
    c.trials(seed, stream, trials, |rng, t, c| {
        let x = random_element(rng, sc);
        let y = random_element(rng, sc);
        let witness = || json!({"algebra": name, "trial": t, "x": element_json(sc, &x), "y": element_json(sc, &y)});
        let outcome = (|| -> Result<(bool, bool)> {
            let xy = mult(sc, &x, &y)?;
            let (ax, ay) = (ad_matrix(sc, &x)?, ad_matrix(sc, &y)?);
            let lhs = ad_matrix(sc, &xy)?;
            Ok((lhs == gl_bracket(&ax, &ay)?, is_derivation(&ax, sc)))
        })();
        match outcome {
            Ok((h, d)) => {
                c.record(&hom, h, witness);
                c.record(&der, d, witness);
            }
            Err(e) => c.record_result(&hom, Err(e), witness),
        }
    });
}

/// `ad[x,y] = [ad x, ad y]` and `ad x` is a derivation, on random pairs.
pub(super) fn adjoint(spec: &SuiteSpec, params: &mut Params, c: &mut Collector) -> Result<()> {
    reject_unused(spec, &["algebra"])?;
    let names = algebras(spec, &["sl2", "gl3"]);
    let trials = spec.trials.unwrap_or(200);
    let seed = spec.seed.expect("checked by run_suite");
    params.set("algebras", names.clone());
    params.set("trials", trials);
    for (i, name) in names.iter().enumerate() {
        let stream = i as u64 * STREAM_STRIDE;
        match load(name)? {
            AnyStructureConstants::Rational(sc) => adjoint_trials(&sc, name, seed, stream, trials, c),
            AnyStructureConstants::Prime(sc) => adjoint_trials(&sc, name, seed, stream, trials, c),
            AnyStructureConstants::Padic(sc) => adjoint_trials(&sc, name, seed, stream, trials, c),
        }
    }
    Ok(())
}

fn matrix_json<F: Field>(m: &Matrix<F>) -> Value {
    json!(m.to_string_rows())
}

fn combination<F: Field, R: Rng>(rng: &mut R, f: &F, basis: &[Matrix<F>], n: usize) -> Matrix<F> {
    basis.iter().fold(Matrix::zero(f.clone(), n), |acc, d| {
        acc.add(&d.scale_left(&ring_element(rng, f))).expect("same shape")
    })
}

fn derivation_checks<F: Field>(
    sc: &StructureConstants<F>,
    name: &str,
    seed: u64,
    stream: u64,
    trials: u64,
    c: &mut Collector,
) -> Result<()> {
    let n = sc.dim();
    let f = sc.field();
    let basis = derivation_basis(sc);
    for (k, d) in basis.iter().enumerate() {
        c.record(
            &format!("derivation-basis:{name}"),
            is_derivation(d, sc),
            || json!({"algebra": name, "index": k, "matrix": matrix_json(d)}),
        );
    }

    // The center is the kernel of x ↦ ad_x, so its dimension is n minus the
    // rank of the vectorized ad(e_j).
    let center = center_basis(sc);
    let ads: Vec<Vec<F::Elem>> = (0..n)
        .map(|j| Ok(ad_matrix(sc, &sc.basis_element(j))?.entries().to_vec()))
        .collect::<Result<_>>()?;
    let rank = linalg::rank(f, &ads, n * n);
    c.record(
        &format!("center-dimension:{name}"),
        center.dim() + rank == n,
        || json!({"algebra": name, "center_dim": center.dim(), "ad_rank": rank}),
    );
    for (k, z) in center.vectors().iter().enumerate() {
        let ok = ad_matrix(sc, z)?.is_zero();
        c.record(
            &format!("center-ad-zero:{name}"),
            ok,
            || json!({"algebra": name, "index": k}),
        );
    }

    let check = format!("derivation-commutator:{name}");
    c.trials(seed, stream, trials, |rng, t, c| {
        let d1 = combination(rng, f, &basis, n);
        let x = random_element(rng, sc);
        let witness =
            |d2: &Matrix<F>| json!({"algebra": name, "trial": t, "d1": matrix_json(&d1), "d2": matrix_json(d2)});
        let ad = ad_matrix(sc, &x).expect("element has length n");
        let d2 = combination(rng, f, &basis, n);
        for other in [ad, d2] {
            let br = gl_bracket(&d1, &other).expect("same shape");
            c.record(&check, is_derivation(&br, sc), || witness(&other));
        }
    });
    Ok(())
}

/// Derivation space, commutators of derivations, and the center as kernel of ad.
pub(super) fn derivations(spec: &SuiteSpec, params: &mut Params, c: &mut Collector) -> Result<()> {
    reject_unused(spec, &["algebra"])?;
    let names = algebras(spec, &["sl2", "so3", "heisenberg", "gl2"]);
    let trials = spec.trials.unwrap_or(50);
    let seed = spec.seed.expect("checked by run_suite");
    params.set("algebras", names.clone());
    params.set("trials", trials);
    for (i, name) in names.iter().enumerate() {
        let stream = i as u64 * STREAM_STRIDE;
        match load(name)? {
            AnyStructureConstants::Rational(sc) => derivation_checks(&sc, name, seed, stream, trials, c)?,
            AnyStructureConstants::Prime(sc) => derivation_checks(&sc, name, seed, stream, trials, c)?,
            AnyStructureConstants::Padic(sc) => derivation_checks(&sc, name, seed, stream, trials, c)?,
        }
    }
    Ok(())
}
