use proptest::prelude::*;

use ultralie::parse::{parse_expr, parse_polynomial, parse_quaternion, parse_rational, MatrixValue, Value};
use ultralie::poly::{MultiIndex, Polynomial};
use ultralie::scalars::{BigRational, PadicScaled, Quaternion};
use ultralie::Rationals;

fn rational() -> impl Strategy<Value = BigRational> {
    (-10_000i64..=10_000, 1i64..=500).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

fn poly() -> impl Strategy<Value = Polynomial<Rationals>> {
    prop::collection::vec((prop::collection::vec(0u32..=3, 3), rational()), 0..5).prop_map(|terms| {
        Polynomial::from_terms(Rationals, 3, terms.into_iter().map(|(e, c)| (MultiIndex::new(e), c))).unwrap()
    })
}

/// A value survives printing and parsing unchanged.
fn round_trips(v: &Value) -> bool {
    parse_expr(&v.to_string()).map(|w| &w == v).unwrap_or(false)
}

proptest! {
    #[test]
    fn rationals_round_trip(x in rational()) {
        prop_assert_eq!(parse_rational(&x.to_string()).unwrap(), x.clone());
        prop_assert!(round_trips(&Value::Rational(x)));
    }

    #[test]
    fn quaternions_round_trip(a in rational(), b in rational(), c in rational(), d in rational()) {
        let x = Quaternion::new(a, b, c, d);
        prop_assert_eq!(parse_quaternion(&x.to_string()).unwrap(), x.clone());
    }

    #[test]
    fn padics_round_trip(x in rational(), p in prop::sample::select(vec![2u64, 3, 5, 7]), n in 1u32..10) {
        let v = Value::Padic(PadicScaled::from_rational(&x, p, n).unwrap());
        prop_assert!(round_trips(&v), "{}", v);
    }

    #[test]
    fn polynomials_round_trip(f in poly()) {
        prop_assert_eq!(parse_polynomial(&f.to_string(), Some(3)).unwrap(), f.clone());
        if f.degree().unwrap_or(0) > 0 && f.terms().any(|(m, _)| m.exponents()[2] > 0) {
            prop_assert!(round_trips(&Value::Polynomial(f)));
        }
    }

    #[test]
    fn matrices_round_trip(cells in prop::collection::vec(rational(), 4)) {
        let text = serde_json::to_string(&[[cells[0].to_string(), cells[1].to_string()], [cells[2].to_string(), cells[3].to_string()]]).unwrap();
        let v = parse_expr(&text).unwrap();
        prop_assert!(matches!(v, Value::Matrix(MatrixValue::Rational(_))));
        prop_assert!(round_trips(&v));
    }

    #[test]
    fn arbitrary_text_never_panics(s in "\\PC{0,40}") {
        let _ = parse_expr(&s);
        let _ = parse_polynomial(&s, None);
    }

    #[test]
    fn structured_noise_never_panics(s in "[-+*/^()0-9tijk;padic ,\\[\\]\"]{0,30}") {
        let _ = parse_expr(&s);
    }
}

#[test]
fn errors_carry_positions() {
    for bad in ["1/0", "padic(1; 4, 3)", "t1^", "[[1,2],[3]]", "1 + ", "(t1"] {
        assert!(parse_expr(bad).is_err(), "{bad}");
    }
}
