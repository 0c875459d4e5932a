use num_complex::Complex64;
use proptest::prelude::*;

use bohrlab::engine::{spherical_lambda, Codomain, SpherePoint};
use bohrlab::slices::{
    boundary_sample, build_witness, slice_series, support_functional, theorem_codomains, verify_multidim_bohr,
    BalancedBall, NormExponent, WitnessParams,
};

fn exponent() -> impl Strategy<Value = NormExponent> {
    prop_oneof![
        Just(NormExponent::One),
        Just(NormExponent::Infinity),
        (1.05..6.0f64).prop_map(NormExponent::Finite),
    ]
}

fn sphere_point() -> impl Strategy<Value = SpherePoint> {
    prop_oneof![
        1 => Just(SpherePoint::Infinity),
        12 => (-1.0..1.0f64, -1.0..1.0f64, -4.0..4.0f64)
            .prop_map(|(re, im, e)| SpherePoint::Finite(Complex64::new(re, im) * 10f64.powf(e))),
    ]
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| Complex64::new(a, b)), n)
}

proptest! {
    #[test]
    fn chordal_metric_axioms(x in sphere_point(), y in sphere_point(), z in sphere_point()) {
        prop_assert_eq!(spherical_lambda(x, y), spherical_lambda(y, x));
        prop_assert_eq!(spherical_lambda(x, x), 0.0);
        prop_assert!(spherical_lambda(x, y) <= 1.0 + 1e-15);
        prop_assert!(spherical_lambda(x, z) <= spherical_lambda(x, y) + spherical_lambda(y, z) + 1e-12);
    }

    #[test]
    fn norm_is_balanced(p in exponent(), x in vector(6), w in (-1.0..1.0f64, -1.0..1.0f64)) {
        let w = Complex64::new(w.0, w.1);
        let scaled: Vec<_> = x.iter().map(|v| v * w).collect();
        let (lhs, rhs) = (p.norm(&scaled), w.norm() * p.norm(&x));
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
    }

    #[test]
    fn functional_norms_and_hoelder(p in exponent(), n in 1usize..10, seed in any::<u64>(), x in vector(9)) {
        let ball = BalancedBall::new(n, p).unwrap();
        let v = boundary_sample(&ball, 1, seed).remove(0);
        let psi = support_functional(&ball, &v).unwrap();
        let at_v = psi.apply(&v).unwrap();
        prop_assert!((at_v - Complex64::new(psi.anchor_norm, 0.0)).norm() <= 1e-12);
        prop_assert!((psi.dual_norm() - 1.0).abs() <= 1e-12);
        let x = &x[..n];
        prop_assert!(psi.apply(x).unwrap().norm() <= p.norm(x) * (1.0 + 1e-12) + 1e-15);
    }
}

// Each case builds an order-200 witness, so these run fewer cases.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn slices_rescale_the_generator(kind in 0usize..4, p in exponent(), n in 1usize..8, seed in any::<u64>(), c in 0.1..0.99f64) {
        let kind = theorem_codomains()[kind];
        let ball = BalancedBall::new(n, p).unwrap();
        let mut dirs = boundary_sample(&ball, 2, seed);
        let v = dirs.remove(0);
        let y = dirs.remove(0);
        let f = build_witness(&kind, &ball, &v, c, &WitnessParams::default()).unwrap();
        let lambda = f.functional.apply(&y).unwrap() * (c / f.functional.anchor_norm);
        let slice = slice_series(&f, &y).unwrap();
        let mut power = Complex64::new(1.0, 0.0);
        for (a, s) in f.scalar_part.coeffs().iter().zip(slice.coeffs()) {
            prop_assert!((a * power - s).norm() <= 1e-12 * a.norm().max(1.0));
            power *= lambda;
        }
    }

    #[test]
    fn anchor_is_the_worst_direction(kind in 0usize..4, p in exponent(), n in 1usize..10, seed in any::<u64>(), r in 0.05..0.45f64) {
        let kind: Codomain = theorem_codomains()[kind];
        let ball = BalancedBall::new(n, p).unwrap();
        let v = boundary_sample(&ball, 1, seed).remove(0);
        let f = build_witness(&kind, &ball, &v, 0.95, &WitnessParams::default()).unwrap();
        let report = verify_multidim_bohr(&f, &kind, r, 30, seed.wrapping_add(1)).unwrap();
        prop_assert!(report.anchor_margin <= report.min_margin + 1e-12);
    }
}

#[test]
fn half_plane_anchor_value_matches_closed_form() {
    let ball = BalancedBall::new(3, NormExponent::One).unwrap();
    let v = boundary_sample(&ball, 1, 8).remove(0);
    let f = build_witness(&Codomain::HalfPlane, &ball, &v, 0.9, &WitnessParams::default()).unwrap();
    let report = verify_multidim_bohr(&f, &Codomain::HalfPlane, 0.4, 10, 8).unwrap();
    assert!((report.anchor_margin + 0.125).abs() <= 1e-12);
    assert_eq!(report.argmin, 0);
}
