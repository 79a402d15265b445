use std::f64::consts::{FRAC_PI_2, PI};

use qsearch_core::overlap_prior::{
    prob_overlap_at_least, prob_overlap_with_density, target_density, uniform_prob_overlap,
    uniform_prob_overlap_analytic, uniform_prob_overlap_quadrature,
};
use qsearch_core::{OverlapBound, PriorSpec};

fn bound(x: f64) -> OverlapBound {
    OverlapBound::new(x).unwrap()
}

#[test]
fn analytic_and_quadrature_routes_agree() {
    for n in [2, 4, 8, 16] {
        for i in 0..20 {
            let b = bound(i as f64 / 19.0);
            let a = uniform_prob_overlap_analytic(b, n).unwrap();
            let q = uniform_prob_overlap_quadrature(b, n).unwrap();
            assert!((a - q).abs() < 1e-10, "N={n} x̄={}: {a} vs {q}", b.x_bar());
        }
    }
}

#[test]
fn probability_is_nonincreasing_in_bound() {
    let spec = PriorSpec::new(4, 3.0 * PI / 8.0, 1.0).unwrap();
    let mut prev = 1.0 + 1e-12;
    for i in 0..=40 {
        let v = prob_overlap_at_least(bound(i as f64 / 40.0), &spec).unwrap();
        assert!(v <= prev + 1e-12, "{v} > {prev}");
        prev = v;
    }
    assert!((prob_overlap_at_least(bound(0.0), &spec).unwrap() - 1.0).abs() < 1e-15);
    assert_eq!(prob_overlap_at_least(bound(1.0), &spec).unwrap(), 0.0);
}

#[test]
fn uniform_column_ignores_prior_shape() {
    // Uniform values depend only on N; a flat density reproduces them for any
    // (μ, σ²) the caller might have in mind.
    let b = bound((PI / 8.0).cos());
    for n in [4, 8, 16] {
        let want = uniform_prob_overlap(b, n).unwrap();
        for (mu, s2) in [(0.0, 0.1), (3.0 * PI / 8.0, 1.0), (FRAC_PI_2, 10.0)] {
            let _ = PriorSpec::new(n, mu, s2).unwrap();
            let got = prob_overlap_with_density(b, n, |_| 1.0).unwrap();
            assert!(
                (got - want).abs() <= 1e-10 * want.max(1e-300) + 1e-18,
                "{got} vs {want}"
            );
        }
    }
}

#[test]
fn density_normalization_cancels() {
    let b = bound((PI / 8.0).cos());
    for n in [4, 8] {
        let spec = PriorSpec::new(n, 3.0 * PI / 8.0, 1.0).unwrap();
        let base = prob_overlap_at_least(b, &spec).unwrap();
        for scale in [1e-6, 0.5, 3.0, 1e6] {
            let scaled = prob_overlap_with_density(b, n, |t| scale * target_density(t, &spec)).unwrap();
            assert!((scaled - base).abs() < 1e-10 * base, "{scaled} vs {base}");
        }
    }
}
