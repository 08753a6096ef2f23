//! Property tests for the algebraic invariants of the solvency and energy
//! formulas.

use proptest::prelude::*;
use qtf_core::montecarlo::{closed_form_collapse_time, run_accrual, AccrualConfig};
use qtf_core::thermo::{coherence_cost, dynamic_rendering_rate, landauer_cost, ml_bound};
use qtf_core::{action_index, collapse_test, get_consts};

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

proptest! {
    #[test]
    fn index_increases_with_radius(r in 1e-6f64..0.1, dr in 1e-6f64..0.1, p in 1e-21f64..1e-18) {
        let c = get_consts();
        let a = action_index(r, p, &c).unwrap().n_real;
        let b = action_index(r + dr, p, &c).unwrap().n_real;
        prop_assert!(b > a);
    }

    #[test]
    fn index_increases_with_momentum(r in 1e-6f64..0.1, p in 1e-21f64..1e-18, dp in 1e-21f64..1e-18) {
        let c = get_consts();
        prop_assert!(action_index(r, p + dp, &c).unwrap().n_real > action_index(r, p, &c).unwrap().n_real);
    }

    #[test]
    fn index_scales_linearly(r in 1e-6f64..0.1, p in 1e-21f64..1e-19, k in 1e-3f64..1e2) {
        let c = get_consts();
        let base = action_index(r, p, &c).unwrap().n_real;
        let scaled = action_index(k * r, p, &c).unwrap().n_real;
        prop_assert!(rel(scaled, k * base) < 1e-12);
    }

    #[test]
    fn quantization_holds(r in 0.0f64..0.1, p in 0.0f64..1e-17) {
        let c = get_consts();
        let Ok(ix) = action_index(r, p, &c) else {
            prop_assert!(r * p / c.hbar >= qtf_core::solvency::MAX_EXACT_INDEX);
            return Ok(());
        };
        let q = ix.n_quanta as f64;
        prop_assert!(q <= ix.n_real && ix.n_real < q + 1.0);
        prop_assert_eq!(ix.action, q * c.h);
    }

    #[test]
    fn collapse_is_scale_invariant(a in 0.0f64..1e6, b in 1e-6f64..1e6, k in 1e-6f64..1e6) {
        // Exact powers of two keep the ratio bit-identical under scaling.
        let k = 2f64.powi(k.log2().round() as i32);
        prop_assert_eq!(
            collapse_test(k * a, k * b).unwrap().collapsed,
            collapse_test(a, b).unwrap().collapsed
        );
    }

    #[test]
    fn collapse_matches_strict_ratio(a in 0.0f64..1e6, b in 1e-6f64..1e6, k in 1e-3f64..1e3) {
        let r = collapse_test(a, b).unwrap();
        prop_assert_eq!(r.collapsed, a / b > 1.0);
        // Away from the boundary the verdict survives any positive scale.
        if (a / b - 1.0).abs() > 1e-9 {
            prop_assert_eq!(collapse_test(k * a, k * b).unwrap().collapsed, r.collapsed);
        }
    }

    #[test]
    fn energy_bounds_are_linear(x in 0.0f64..1e24, k in 1e-3f64..1e3, t in 1.0f64..1e4) {
        let c = get_consts();
        prop_assert!(rel(landauer_cost(t, k * x, &c).unwrap().1, k * landauer_cost(t, x, &c).unwrap().1) < 1e-12);
        prop_assert!(rel(coherence_cost(k * x, t, &c).unwrap(), k * coherence_cost(x, t, &c).unwrap()) < 1e-12);
        prop_assert!(rel(dynamic_rendering_rate(6e-14, k * x, 60.0).unwrap(), k * dynamic_rendering_rate(6e-14, x, 60.0).unwrap()) < 1e-12);
        prop_assert!(rel(dynamic_rendering_rate(6e-14, x, k * 60.0).unwrap(), k * dynamic_rendering_rate(6e-14, x, 60.0).unwrap()) < 1e-12);
    }

    #[test]
    fn landauer_ratio_is_ln2(t in 1e-3f64..1e6) {
        let c = get_consts();
        let (bit, _) = landauer_cost(t, 1.0, &c).unwrap();
        prop_assert!(rel(bit / (c.k_b * t), std::f64::consts::LN_2) < 1e-12);
    }

    #[test]
    fn speed_limit_inverts(t in 1e-40f64..1e3) {
        let c = get_consts();
        let (e, _) = ml_bound(t, 1.0, &c).unwrap();
        prop_assert!((e * 4.0 * t / c.h - 1.0).abs() < 1e-12);
    }

    #[test]
    fn accrual_tracks_closed_form(
        b in 0.0f64..100.0,
        a in 0.0f64..5.0,
        extra in 0.01f64..5.0,
        dt in 1e-3f64..0.1,
    ) {
        let cfg = AccrualConfig { initial_budget: b, budget_rate: a, cost_rate: a + extra, time_step: dt, max_time: 1e5 };
        let t = run_accrual(&cfg).unwrap().collapse_time.unwrap();
        let exact = closed_form_collapse_time(&cfg).unwrap();
        prop_assert!((t - exact).abs() <= dt * (1.0 + 1e-9), "{} vs {}", t, exact);
    }
}
