use proptest::prelude::*;

use ultralie::exp::exp_series;
use ultralie::poly::{series_inverse, MultiIndex, Polynomial, PowerSeries, SeriesRing};
use ultralie::scalars::{gaussian, BigRational, GaussianRationals};
use ultralie::{Rationals, Ring, StarRing};

fn rational() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=6).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

fn poly(nvars: usize, max_degree: u32) -> impl Strategy<Value = Polynomial<Rationals>> {
    prop::collection::vec((prop::collection::vec(0..=max_degree, nvars), rational()), 0..6).prop_map(move |terms| {
        let terms = terms.into_iter().map(|(e, c)| (MultiIndex::new(e), c));
        Polynomial::from_terms(Rationals, nvars, terms).unwrap()
    })
}

fn zero_constant(f: &Polynomial<Rationals>) -> Polynomial<Rationals> {
    f.sub(&Polynomial::constant(Rationals, f.nvars(), f.constant_term()))
        .unwrap()
}

proptest! {
    #[test]
    fn leibniz_rule(f in poly(3, 3), g in poly(3, 3), j in 1usize..=3) {
        let lhs = f.mul(&g).unwrap().partial(j).unwrap();
        let rhs = f.partial(j).unwrap().mul(&g).unwrap().add(&f.mul(&g.partial(j).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_is_additive(f in poly(2, 4), g in poly(2, 4)) {
        let fg = f.mul(&g).unwrap();
        match (f.degree(), g.degree()) {
            (Some(a), Some(b)) => prop_assert_eq!(fg.degree(), Some(a + b)),
            _ => prop_assert!(fg.is_zero()),
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in poly(2, 3), g in poly(2, 3), x in rational(), y in rational()) {
        let pt = [x, y];
        let lhs = f.mul(&g).unwrap().eval(&pt).unwrap();
        prop_assert_eq!(lhs, f.eval(&pt).unwrap() * g.eval(&pt).unwrap());
    }

    #[test]
    fn homogeneous_parts_sum_to_whole(f in poly(3, 4)) {
        let d = f.degree().unwrap_or(0);
        let mut acc = Polynomial::zero(Rationals, 3);
        for k in 0..=d {
            let part = f.homogeneous_part(k);
            prop_assert!(part.is_homogeneous(k));
            acc = acc.add(&part).unwrap();
        }
        prop_assert_eq!(acc, f);
    }

    #[test]
    fn series_inverse_is_two_sided(f in poly(2, 3), c in rational(), d in 1u32..8) {
        prop_assume!(c != BigRational::from_integer(0.into()));
        let shifted = zero_constant(&f).add(&Polynomial::constant(Rationals, 2, c)).unwrap();
        let s = PowerSeries::new(shifted, d);
        let inv = series_inverse(&s).unwrap();
        let one = PowerSeries::one(Rationals, 2, d);
        prop_assert_eq!(s.mul(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.mul(&s).unwrap(), one);
    }

    #[test]
    fn series_without_unit_constant_is_not_invertible(f in poly(2, 3)) {
        let s = PowerSeries::new(zero_constant(&f), 5);
        prop_assert!(series_inverse(&s).is_err());
    }

    #[test]
    fn exp_series_homomorphism(f in poly(2, 3), g in poly(2, 3), d in 1u32..7) {
        let (f, g) = (PowerSeries::new(zero_constant(&f), d), PowerSeries::new(zero_constant(&g), d));
        let lhs = exp_series(&f.add(&g).unwrap()).unwrap();
        let rhs = exp_series(&f).unwrap().mul(&exp_series(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let back = exp_series(&f).unwrap().mul(&exp_series(&f.neg()).unwrap()).unwrap();
        prop_assert_eq!(back, PowerSeries::one(Rationals, 2, d));
    }

    #[test]
    fn series_star_is_an_involution(re in prop::collection::vec(rational(), 4), im in prop::collection::vec(rational(), 4)) {
        let ring = SeriesRing::new(GaussianRationals, 1, 3);
        let coeffs: Vec<_> = re.into_iter().zip(im).map(|(a, b)| gaussian(a, b)).collect();
        let terms = coeffs.iter().enumerate().map(|(k, c)| (MultiIndex::new(vec![k as u32]), c.clone()));
        let f = ring.series(Polynomial::from_terms(GaussianRationals, 1, terms).unwrap());
        let g = ring.mul(&f, &ring.var(1).unwrap());
        let star = |x: &_| GaussianRationals.star(x);
        prop_assert_eq!(f.star(star).star(star), f.clone());
        prop_assert_eq!(ring.mul(&f, &g).star(star), ring.mul(&g.star(star), &f.star(star)));
    }
}

#[test]
fn geometric_series() {
    let ring = SeriesRing::new(Rationals, 1, 12);
    let s = ring.one().sub(&ring.var(1).unwrap()).unwrap();
    let inv = series_inverse(&s).unwrap();
    for k in 0..=12 {
        assert_eq!(
            inv.coeff(&MultiIndex::new(vec![k])),
            BigRational::from_integer(1.into())
        );
    }
    assert_eq!(
        inv.coeff(&MultiIndex::new(vec![13])),
        BigRational::from_integer(0.into())
    );
}
