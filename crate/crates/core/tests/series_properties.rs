use num_complex::Complex64;
use proptest::prelude::*;

use bohrlab::atlas::{h_t_series, koebe_square_series, moebius_l_series};
use bohrlab::{TailBound, TruncatedSeries};

fn complex(bound: f64) -> impl Strategy<Value = Complex64> {
    (-bound..bound, -bound..bound).prop_map(|(re, im)| Complex64::new(re, im))
}

fn coeffs(len: usize, bound: f64) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec(complex(bound), len)
}

fn vanishing_at_zero(mut c: Vec<Complex64>) -> TruncatedSeries {
    c[0] = Complex64::new(0.0, 0.0);
    TruncatedSeries::polynomial(c).unwrap()
}

fn max_gap(a: &TruncatedSeries, b: &TruncatedSeries) -> f64 {
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

proptest! {
    #[test]
    fn majorant_nondecreasing_in_r(c in coeffs(21, 2.0), tail_c in 0.0..3.0f64, rho in 0.0..1.0f64) {
        let f = TruncatedSeries::new(c, Some(TailBound::new(tail_c, rho).unwrap())).unwrap();
        let mut previous = (0.0, 0.0);
        for k in 0..=40 {
            let r = 0.0245 * k as f64;
            let sum = f.majorant_sum(r, false).unwrap();
            let upper = sum.upper().unwrap();
            prop_assert!(sum.value >= previous.0);
            prop_assert!(upper >= previous.1);
            previous = (sum.value, upper);
        }
    }

    #[test]
    fn exp_turns_sums_into_products(a in coeffs(21, 0.3), b in coeffs(21, 0.3)) {
        let f = TruncatedSeries::polynomial(a).unwrap().truncated(20);
        let g = TruncatedSeries::polynomial(b).unwrap().truncated(20);
        let lhs = (&f + &g).exp().unwrap();
        let rhs = &f.exp().unwrap() * &g.exp().unwrap();
        prop_assert_eq!(lhs.order(), 20);
        prop_assert_eq!(rhs.order(), 20);
        prop_assert!(max_gap(&lhs, &rhs) <= 1e-10);
    }

    #[test]
    fn composition_is_associative(a in coeffs(13, 0.5), b in coeffs(13, 0.5), c in coeffs(13, 0.5)) {
        let f = TruncatedSeries::polynomial(a).unwrap().truncated(12);
        let g = vanishing_at_zero(b).truncated(12);
        let h = vanishing_at_zero(c).truncated(12);
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert!(max_gap(&left, &right) <= 1e-10);
    }

    // Truncating a polynomial folds the dropped terms into a tail, so the
    // polynomial itself is a function the tails must account for.
    #[test]
    fn product_evaluation_within_tail_bounds(
        a in coeffs(30, 1.0),
        b in coeffs(30, 1.0),
        n in 3usize..20,
        m in 3usize..20,
        z in complex(0.35),
    ) {
        let (fp, gp) = (TruncatedSeries::polynomial(a).unwrap(), TruncatedSeries::polynomial(b).unwrap());
        let (f, g) = (fp.truncated(n), gp.truncated(m));
        let product = &f * &g;
        let exact = fp.eval(z) * gp.eval(z);
        let bound = product.eval_error_bound(z.norm()).unwrap();
        prop_assert!((product.eval(z) - exact).norm() <= bound + 1e-10);
        prop_assert!((f.eval(z) - fp.eval(z)).norm() <= f.eval_error_bound(z.norm()).unwrap() + 1e-12);
    }

    #[test]
    fn sums_track_both_operands(a in coeffs(25, 1.0), b in coeffs(25, 1.0), n in 2usize..24, z in complex(0.5)) {
        let (fp, gp) = (TruncatedSeries::polynomial(a).unwrap(), TruncatedSeries::polynomial(b).unwrap());
        let s = &fp.truncated(n) + &gp;
        let exact = fp.eval(z) + gp.eval(z);
        prop_assert!((s.eval(z) - exact).norm() <= s.eval_error_bound(z.norm()).unwrap() + 1e-12);
    }

    #[test]
    fn singular_inner_coefficients_stay_in_disk(t in 0.01..5.0f64) {
        let h = h_t_series(t, 80).unwrap();
        prop_assert!(h.coeffs().iter().all(|a| a.norm() <= 1.0 + 1e-12));
        let x = Complex64::new(0.2, -0.1);
        let closed = (-t * (1.0 + x) / (1.0 - x)).exp();
        prop_assert!((h.eval(x) - closed).norm() <= 1e-12);
    }
}

#[test]
fn koebe_square_is_moebius_squared() {
    let l = moebius_l_series(60);
    let u = koebe_square_series(60, 1.0).unwrap();
    assert!(max_gap(&(&l * &l), &u) <= 1e-12);
}

#[test]
fn singular_inner_by_composition() {
    let exp_series = TruncatedSeries::identity().truncated(50).exp().unwrap();
    let minus_tl = moebius_l_series(50).scale(Complex64::new(-1.0, 0.0));
    let shifted = minus_tl.shift_constant(Complex64::new(1.0, 0.0));
    let composed = exp_series
        .compose(&shifted)
        .unwrap()
        .scale(Complex64::new((-1.0f64).exp(), 0.0));
    assert!(max_gap(&composed, &h_t_series(1.0, 50).unwrap()) <= 1e-10);
}
