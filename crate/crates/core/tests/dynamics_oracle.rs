mod common;

use std::f64::consts::PI;

use common::{general_params, golden_max, overlap, real_params, rng};
use qsearch_core::dynamics::{
    amplitude, oscillation, oscillation_peak, p_max, p_max_unsimplified, propagate_numeric, sample_curve,
    search_outcome, t_star, tilde_coeffs, transition_probability,
};
use qsearch_core::hamiltonian::matrix_rep;
use qsearch_core::spectral::spectrum;
use qsearch_core::Overlap;
use rand::Rng;

#[test]
fn closed_form_matches_runge_kutta() {
    let mut r = rng(10);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let p = general_params(&mut r);
        let x = overlap(&mut r);
        let t = r.random_range(0.0..1.0);
        let m = matrix_rep(&p, x);
        let closed = transition_probability(&m, x, t, p.hbar());
        let numeric = propagate_numeric(&m, x, t, p.hbar()).unwrap();
        worst = worst.max((closed - numeric).abs());
    }
    assert!(worst < 1e-8, "worst deviation {worst:e}");
}

#[test]
fn amplitude_route_matches_closed_form() {
    let mut r = rng(11);
    for _ in 0..1000 {
        let p = general_params(&mut r);
        let x = overlap(&mut r);
        let t = r.random_range(0.0..2.0);
        let m = matrix_rep(&p, x);
        let amp = amplitude(&spectrum(&m), x, t, p.hbar()).unwrap();
        let closed = transition_probability(&m, x, t, p.hbar());
        assert!(
            (amp.norm_sqr() - closed).abs() < 1e-12,
            "{} vs {closed}",
            amp.norm_sqr()
        );
    }
}

#[test]
fn tilde_coefficients_sum_and_reality() {
    let mut r = rng(12);
    for _ in 0..1000 {
        let p = general_params(&mut r);
        let x = overlap(&mut r);
        let tc = tilde_coeffs(&spectrum(&matrix_rep(&p, x)), x).unwrap();
        let sum = tc.a_tilde + tc.b_tilde;
        assert!((sum.re - x.get()).abs() < 1e-12 && sum.im.abs() < 1e-12, "{sum}");
        // -2 Im(ÃB̃*) is the sin 2θ coefficient, zero exactly when h12 is real.
        let m = matrix_rep(&p, x);
        let osc = oscillation(&m, x, p.hbar()).unwrap();
        let cross = osc.amplitude * osc.phase.sin();
        assert!((-2.0 * (tc.a_tilde * tc.b_tilde.conj()).im - cross).abs() < 1e-12);
    }
    for _ in 0..1000 {
        let p = real_params(&mut r);
        let x = overlap(&mut r);
        let tc = tilde_coeffs(&spectrum(&matrix_rep(&p, x)), x).unwrap();
        assert!((tc.a_tilde * tc.b_tilde.conj()).im.abs() < 1e-12);
    }
}

/// |Ã|² + |B̃|² + 2Re(ÃB̃*)cos 2θ = |Ã - B̃|² sin²θ + |Ã + B̃|² cos²θ.
#[test]
fn trigonometric_rearrangement_identity() {
    let mut r = rng(13);
    for _ in 0..100 {
        let p = general_params(&mut r);
        let x = overlap(&mut r);
        let tc = tilde_coeffs(&spectrum(&matrix_rep(&p, x)), x).unwrap();
        let (a, b) = (tc.a_tilde, tc.b_tilde);
        for k in 0..100 {
            let theta = PI * k as f64 / 99.0;
            let lhs = a.norm_sqr() + b.norm_sqr() + 2.0 * (a * b.conj()).re * (2.0 * theta).cos();
            let rhs = (a - b).norm_sqr() * theta.sin().powi(2) + (a + b).norm_sqr() * theta.cos().powi(2);
            assert!((lhs - rhs).abs() < 1e-12, "{lhs} vs {rhs}");
        }
    }
}

#[test]
fn boundary_periodicity_and_range() {
    let mut r = rng(14);
    for _ in 0..500 {
        let p = general_params(&mut r);
        let x = overlap(&mut r);
        let m = matrix_rep(&p, x);
        let hbar = p.hbar();
        assert_eq!(transition_probability(&m, x, 0.0, hbar), x.get() * x.get());
        let a = spectrum(&m).gap;
        let period = PI * hbar / a;
        for k in 0..50 {
            let t = 3.0 * period * k as f64 / 49.0;
            let v = transition_probability(&m, x, t, hbar);
            assert!((-1e-12..=1.0 + 1e-12).contains(&v));
            let shifted = transition_probability(&m, x, t + period, hbar);
            assert!((v - shifted).abs() < 1e-12);
        }
    }
}

#[test]
fn peak_dominates_one_period_when_it_beats_the_overlap() {
    let mut r = rng(15);
    let mut checked = 0;
    for _ in 0..500 {
        let p = real_params(&mut r);
        let x = overlap(&mut r);
        let m = matrix_rep(&p, x);
        let hbar = p.hbar();
        let ts = t_star(&p, x).time().unwrap();
        let at_peak = transition_probability(&m, x, ts, hbar);
        assert!((at_peak - p_max(&p, x)).abs() < 1e-12);
        let x2 = x.get() * x.get();
        if at_peak < x2 {
            // The oscillation then dips below the starting value; t* is a minimum.
            for k in 0..200 {
                let t = 2.0 * ts * k as f64 / 199.0;
                assert!(transition_probability(&m, x, t, hbar) <= x2 + 1e-12);
            }
            continue;
        }
        checked += 1;
        for k in 0..1000 {
            let t = 2.0 * ts * k as f64 / 999.0;
            assert!(transition_probability(&m, x, t, hbar) <= at_peak + 1e-12);
        }
    }
    assert!(checked > 300);
}

#[test]
fn peak_agrees_with_numeric_maximization() {
    let mut r = rng(16);
    for i in 0..600 {
        let p = if i % 2 == 0 {
            general_params(&mut r)
        } else {
            real_params(&mut r)
        };
        let x = overlap(&mut r);
        let m = matrix_rep(&p, x);
        let hbar = p.hbar();
        let period = 2.0 * t_star(&p, x).time().unwrap();
        // Coarse scan, then golden section around the best node.
        let n = 400;
        let f = |t: f64| transition_probability(&m, x, t, hbar);
        let best = (0..=n)
            .map(|k| period * k as f64 / n as f64)
            .max_by(|a, b| f(*a).total_cmp(&f(*b)))
            .unwrap();
        let h = period / n as f64;
        let (_, numeric) = golden_max(f, (best - h).max(0.0), best + h);
        let outcome = search_outcome(&p, x);
        assert!((numeric - outcome.p_max).abs() < 1e-9, "{numeric} vs {}", outcome.p_max);
        if p.beta().im == 0.0 && oscillation_peak(&m, x) >= x.get() * x.get() {
            assert!((numeric - p_max(&p, x)).abs() < 1e-9);
        }
    }
}

#[test]
fn simplified_and_unsimplified_peaks_agree() {
    let mut r = rng(17);
    for _ in 0..10_000 {
        let p = general_params(&mut r);
        let x = overlap(&mut r);
        let simplified = p_max(&p, x);
        assert!((simplified - p_max_unsimplified(&p, x)).abs() < 1e-10);
        assert!((simplified - oscillation_peak(&matrix_rep(&p, x), x)).abs() < 1e-10);
    }
}

#[test]
fn outcome_bounds() {
    let mut r = rng(18);
    for _ in 0..1000 {
        let p = general_params(&mut r);
        let x = overlap(&mut r);
        let out = search_outcome(&p, x);
        let x2 = x.get() * x.get();
        assert!(x2 <= out.p_max && out.p_max <= 1.0 + 1e-12);
        let t = out.t_star.time().unwrap();
        let m = matrix_rep(&p, x);
        assert!((transition_probability(&m, x, t, p.hbar()) - out.p_max).abs() < 1e-12);
    }
}

#[test]
fn curve_rises_monotonically_to_the_peak() {
    let mut r = rng(19);
    for _ in 0..200 {
        let p = general_params(&mut r);
        let x = overlap(&mut r);
        let out = search_outcome(&p, x);
        let ts = out.t_star.time().unwrap();
        if ts == 0.0 {
            continue;
        }
        // The curve may dip first; it rises monotonically over the half period
        // that ends at the peak.
        let start = (ts - t_star(&p, x).time().unwrap()).max(0.0);
        let m = matrix_rep(&p, x);
        let mut prev = transition_probability(&m, x, start, p.hbar());
        for k in 1..257 {
            let t = start + (ts - start) * k as f64 / 256.0;
            let v = transition_probability(&m, x, t, p.hbar());
            assert!(v >= prev - 1e-14);
            prev = v;
        }
        assert!((prev - out.p_max).abs() < 1e-12);
    }
    for _ in 0..200 {
        let p = real_params(&mut r);
        let x = overlap(&mut r);
        if p_max(&p, x) <= x.get() * x.get() {
            continue;
        }
        let ts = t_star(&p, x).time().unwrap();
        let curve = sample_curve(&p, x, ts, 257).unwrap();
        assert_eq!(curve.probs[0], x.get() * x.get());
        for w in curve.probs.windows(2) {
            assert!(w[1] >= w[0] - 1e-15);
        }
    }
}

#[test]
fn runge_kutta_handles_long_horizons() {
    let p = qsearch_core::HamiltonianParams::unit(1.0, 1.0, qsearch_core::Complex64::new(0.0, 0.0)).unwrap();
    let x = Overlap::new(0.5).unwrap();
    let m = matrix_rep(&p, x);
    // Ten periods of the Farhi-Gutmann oscillation.
    let t = 10.0 + 0.5;
    let numeric = propagate_numeric(&m, x, t, p.hbar()).unwrap();
    assert!((numeric - 1.0).abs() < 1e-8, "{numeric}");
}
