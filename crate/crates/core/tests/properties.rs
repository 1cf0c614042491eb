mod common;

use proptest::prelude::*;

use fair_transit::algorithms::{eca, eca_with_order, exact_min_cost, gc_trsp, greedy_capture, hybrid, HybridParams};
use fair_transit::cli::{hybrid_core_bound, hybrid_jr_bound};
use fair_transit::fairness::{
    core_ratio, core_violation, improves, jr_ratio, jr_threshold, jr_violation, pf_ratio, Alpha,
};
use fair_transit::instances::{instance_from_json, instance_to_json, random_euclidean, TransitMode};
use fair_transit::metric::Metric;
use fair_transit::model::{Instance, Solution};
use fair_transit::reduction::induce_clustering;

use common::naive_cost;

fn transit_mode() -> impl Strategy<Value = TransitMode> {
    prop_oneof![
        Just(TransitMode::Null),
        (0.0f64..2.0).prop_map(TransitMode::Scaled),
        Just(TransitMode::RandomMetric),
    ]
}

fn instance_with(transit: impl Strategy<Value = TransitMode>) -> impl Strategy<Value = Instance> {
    (1usize..9, 1usize..7, any::<u64>(), transit).prop_flat_map(|(n, m, seed, t)| {
        (1..=m).prop_map(move |k| random_euclidean(n, m, k, seed, t).unwrap())
    })
}

fn instance() -> impl Strategy<Value = Instance> {
    instance_with(transit_mode())
}

fn null_instance() -> impl Strategy<Value = Instance> {
    instance_with(Just(TransitMode::Null))
}

fn with_stops(inst: impl Strategy<Value = Instance>) -> impl Strategy<Value = (Instance, Solution)> {
    inst.prop_flat_map(|i| {
        let (m, k) = (i.m(), i.k());
        (Just(i), proptest::sample::subsequence((0..m).collect::<Vec<_>>(), 0..=k).prop_map(Solution::new))
    })
}

const EPS: f64 = 1e-9;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cost_matches_definition((inst, sol) in with_stops(instance())) {
        for i in 0..inst.n() {
            let c = inst.agent_cost(i, &sol).unwrap();
            let naive = naive_cost(&inst, i, sol.stops());
            prop_assert!((c - naive).abs() <= EPS, "agent {i}: {c} vs {naive}");
        }
    }

    #[test]
    fn cost_never_exceeds_walking((inst, sol) in with_stops(instance())) {
        for i in 0..inst.n() {
            prop_assert!(inst.agent_cost(i, &sol).unwrap() <= inst.walk_cost(i));
        }
        for i in 0..inst.n() {
            prop_assert_eq!(inst.agent_cost(i, &Solution::empty()).unwrap(), inst.walk_cost(i));
        }
    }

    #[test]
    fn adding_a_stop_never_hurts((inst, sol) in with_stops(instance()), extra in any::<prop::sample::Index>()) {
        let mut more = sol.clone();
        more.insert(extra.index(inst.m()));
        for i in 0..inst.n() {
            prop_assert!(inst.agent_cost(i, &more).unwrap() <= inst.agent_cost(i, &sol).unwrap() + EPS);
        }
    }

    #[test]
    fn free_transit_cost_is_walk_or_nearest_stops((inst, sol) in with_stops(null_instance())) {
        prop_assume!(!sol.is_empty());
        for i in 0..inst.n() {
            let (a, b) = inst.endpoints()[i];
            let near = |p: usize| sol.stops().iter().map(|&c| inst.to_stop(p, c)).fold(f64::INFINITY, f64::min);
            let expected = inst.walk_cost(i).min(near(a) + near(b));
            prop_assert!((inst.agent_cost(i, &sol).unwrap() - expected).abs() <= EPS);
            // Reversing every trip leaves costs unchanged.
            let reversed = Instance::new(
                inst.endpoints().iter().map(|&(a, b)| (b, a)).collect(),
                inst.candidates().to_vec(), inst.walk().clone(), inst.transit().clone(), inst.k()).unwrap();
            prop_assert!((reversed.agent_cost(i, &sol).unwrap() - expected).abs() <= EPS);
        }
    }

    #[test]
    fn algorithms_respect_budget_and_emit_clean_traces(inst in instance(), lambda in 0.0f64..=1.0) {
        let runs = [gc_trsp(&inst).unwrap(), eca(&inst).unwrap(), hybrid(&inst, HybridParams::new(lambda).unwrap()).unwrap()];
        for (sol, trace) in runs {
            prop_assert!(sol.len() <= inst.k());
            prop_assert!(trace.is_well_formed());
            let mut opened = trace.opened();
            opened.sort_unstable();
            prop_assert_eq!(opened.as_slice(), sol.stops());
        }
    }

    #[test]
    fn algorithms_are_deterministic(inst in instance(), lambda in 0.0f64..=1.0) {
        prop_assert_eq!(gc_trsp(&inst).unwrap(), gc_trsp(&inst).unwrap());
        prop_assert_eq!(eca(&inst).unwrap(), eca(&inst).unwrap());
        let p = HybridParams::new(lambda).unwrap();
        prop_assert_eq!(hybrid(&inst, p).unwrap(), hybrid(&inst, p).unwrap());
    }

    #[test]
    fn gc_replays_clustering_greedy_capture(inst in instance()) {
        let (sol, trace) = gc_trsp(&inst).unwrap();
        let (centers, ctrace) = greedy_capture(&induce_clustering(&inst));
        prop_assert_eq!(sol.stops(), centers.as_slice());
        prop_assert_eq!(trace, ctrace);
    }

    #[test]
    fn eca_follows_candidate_relabeling(inst in instance(), shift in 1usize..7) {
        let m = inst.m();
        // New index of old candidate c.
        let perm: Vec<usize> = (0..m).map(|c| (c + shift) % m).collect();
        let mut inv = vec![0; m];
        for (c, &p) in perm.iter().enumerate() {
            inv[p] = c;
        }
        let candidates = (0..m).map(|p| inst.candidates()[inv[p]]).collect();
        let transit = Metric::from_fn(m, |u, v| inst.transit().get(inv[u], inv[v]));
        let relabeled = Instance::new(inst.endpoints().to_vec(), candidates, inst.walk().clone(), transit, inst.k()).unwrap();
        let (a, ta) = eca(&inst).unwrap();
        // Old candidate c keeps its tie-break rank under its new index.
        let (b, tb) = eca_with_order(&relabeled, &perm).unwrap();
        prop_assert_eq!(Solution::new(a.stops().iter().map(|&c| perm[c])), b);
        prop_assert_eq!(ta.events.len(), tb.events.len());
        for (x, y) in ta.events.iter().zip(&tb.events) {
            prop_assert_eq!(x.radius, y.radius);
            prop_assert_eq!(&x.deactivated, &y.deactivated);
            prop_assert_eq!(x.opened.iter().map(|&c| perm[c]).collect::<Vec<_>>(), y.opened.clone());
        }
    }

    #[test]
    fn jr_witnesses_are_genuine((inst, sol) in with_stops(instance()), beta in 1.0f64..3.0) {
        if let Some(w) = jr_violation(&inst, &sol, beta) {
            prop_assert!(w.coalition.len() >= jr_threshold(inst.n(), inst.k()));
            let t = Solution::new(w.deviation.clone());
            prop_assert_eq!(t.len(), 2);
            for &i in &w.coalition {
                prop_assert!(improves(beta, inst.agent_cost(i, &sol).unwrap(), inst.agent_cost(i, &t).unwrap()));
            }
        }
    }

    #[test]
    fn jr_ratio_separates_violations((inst, sol) in with_stops(instance())) {
        let f = jr_ratio(&inst, &sol).factor;
        prop_assert!(f >= 1.0);
        if f.is_finite() {
            prop_assert!(jr_violation(&inst, &sol, f * (1.0 + 1e-6) + 1e-6).is_none());
        }
        if f > 1.0 + 1e-6 {
            prop_assert!(jr_violation(&inst, &sol, 1.0 + (f.min(1e6) - 1.0) / 2.0).is_some());
        }
    }

    #[test]
    fn core_witnesses_are_genuine((inst, sol) in with_stops(instance()), beta in 1.0f64..3.0, two in any::<bool>()) {
        let alpha = if two { Alpha::TWO } else { Alpha::ONE };
        if let Some(w) = core_violation(&inst, &sol, alpha, beta).unwrap() {
            let t = Solution::new(w.deviation.clone());
            prop_assert!(!t.is_empty() && t.len() <= inst.k());
            let lhs = w.coalition.len() as f64 * inst.k() as f64;
            prop_assert!(lhs >= alpha.as_f64() * t.len() as f64 * inst.n() as f64 - 1e-9);
            for &i in &w.coalition {
                prop_assert!(improves(beta, inst.agent_cost(i, &sol).unwrap(), inst.agent_cost(i, &t).unwrap()));
            }
        }
    }

    #[test]
    fn core_at_one_dominates_jr((inst, sol) in with_stops(instance())) {
        // Any JR deviation is a core deviation with |T| = 2 and |S| ≥ 2n/k.
        let jr = jr_ratio(&inst, &sol).factor;
        let core = core_ratio(&inst, &sol, Alpha::ONE).unwrap().factor;
        prop_assert!(core >= jr - EPS || (inst.k() < 2), "core {core} < jr {jr}");
    }

    #[test]
    fn bounds_hold_with_free_transit(inst in null_instance(), lambda in 0.05f64..=1.0) {
        let sqrt2 = 2f64.sqrt();
        let (g, _) = gc_trsp(&inst).unwrap();
        prop_assert!(jr_ratio(&inst, &g).factor <= 2.0 + 5f64.sqrt() + EPS);
        prop_assert!(core_violation(&inst, &g, Alpha::TWO, 1.0 + sqrt2).unwrap().is_none());
        let (h, _) = hybrid(&inst, HybridParams::new(lambda).unwrap()).unwrap();
        prop_assert!(jr_ratio(&inst, &h).factor <= hybrid_jr_bound(lambda) + EPS);
        prop_assert!(core_violation(&inst, &h, Alpha::TWO, hybrid_core_bound(lambda)).unwrap().is_none());
    }

    #[test]
    fn eca_bound_holds_with_any_transit(inst in instance()) {
        let (e, _) = eca(&inst).unwrap();
        prop_assert!(jr_ratio(&inst, &e).factor <= 1.0 + 2f64.sqrt() + EPS);
    }

    #[test]
    fn pf_on_induced_clustering_implies_core((inst, sol) in with_stops(instance())) {
        let rho = pf_ratio(&induce_clustering(&inst), sol.stops()).factor;
        prop_assume!(rho.is_finite());
        prop_assert!(core_violation(&inst, &sol, Alpha::TWO, rho).unwrap().is_none());
    }

    #[test]
    fn exact_min_cost_is_a_lower_bound(inst in instance(), lambda in 0.0f64..=1.0) {
        let (best_sol, best) = exact_min_cost(&inst, 1 << 20).unwrap();
        prop_assert!(best_sol.len() <= inst.k());
        prop_assert!((inst.total_cost(&best_sol).unwrap() - best).abs() <= EPS);
        for sol in [gc_trsp(&inst).unwrap().0, eca(&inst).unwrap().0, hybrid(&inst, HybridParams::new(lambda).unwrap()).unwrap().0] {
            prop_assert!(best <= inst.total_cost(&sol).unwrap() + EPS);
        }
    }

    #[test]
    fn instances_survive_json(inst in instance()) {
        let text = instance_to_json(&inst).unwrap();
        let back = instance_from_json(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(instance_to_json(&back).unwrap(), text);
    }
}
