use proptest::prelude::*;
use qsearch_core::dynamics::{search_outcome, transition_probability};
use qsearch_core::hamiltonian::matrix_rep;
use qsearch_core::{Complex64, HamiltonianParams, Overlap};

fn params() -> impl Strategy<Value = (HamiltonianParams, Overlap)> {
    (-5.0f64..5.0, -5.0f64..5.0, -5.0f64..5.0, -5.0f64..5.0, 0.01f64..0.99).prop_map(|(a, d, br, bi, x)| {
        (
            HamiltonianParams::unit(a, d, Complex64::new(br, bi)).unwrap(),
            Overlap::new(x).unwrap(),
        )
    })
}

proptest! {
    #[test]
    fn probability_stays_in_unit_interval((p, x) in params(), t in 0.0f64..100.0) {
        let v = transition_probability(&matrix_rep(&p, x), x, t, p.hbar());
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&v));
    }

    #[test]
    fn outcome_is_never_below_the_start((p, x) in params()) {
        let out = search_outcome(&p, x);
        prop_assert!(out.p_max >= x.get() * x.get());
        prop_assert!(out.p_max <= 1.0 + 1e-12);
    }

    #[test]
    fn energy_rescaling_only_rescales_time((p, x) in params(), e in 0.1f64..10.0, t in 0.0f64..5.0) {
        let q = HamiltonianParams::new(p.alpha(), p.delta(), p.beta(), e, 1.0).unwrap();
        let a = transition_probability(&matrix_rep(&p, x), x, t, p.hbar());
        let b = transition_probability(&matrix_rep(&q, x), x, t / e, q.hbar());
        prop_assert!((a - b).abs() < 1e-9);
    }
}
