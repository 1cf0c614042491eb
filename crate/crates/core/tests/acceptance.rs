//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fail.

mod common;

use std::time::{Duration, Instant};

use itertools::Itertools;

use fair_transit::algorithms::{
    eca, gc_trsp, hybrid, l_dictator_partition, line_sweep_baseline, exact_min_cost, HybridParams,
};
use fair_transit::cli::{hybrid_core_bound, hybrid_jr_bound, run_experiment, to_csv, ExperimentConfig, InstanceSource};
use fair_transit::clustering::LineClusteringInstance;
use fair_transit::fairness::{core_ratio, core_violation, jr_ratio, pf_ratio, Alpha, CoreBackend, CoreOptions};
use fair_transit::instances::{
    generate, random_clustering, random_euclidean, random_line, Family, FamilySpec, TransitMode,
};
use fair_transit::model::{Instance, Solution};
use fair_transit::reduction::{clustering_to_trsp, induce_clustering, split_sides};

use common::{brute_core_ratio, brute_jr_ratio, close, corpus, small_corpus, subsets};

/// Slack for exact values computed from closed forms.
const VALUE_TOL: f64 = 1e-6;
/// Slack for inequalities against theorem bounds.
const BOUND_TOL: f64 = 1e-9;

type Outcome = Result<String, String>;

fn family(name: &str, params: &[(&str, f64)]) -> Instance {
    let mut spec = FamilySpec::new(Family::from_name(name).unwrap());
    for &(k, v) in params {
        spec = spec.with(k, v);
    }
    generate(&spec).unwrap().into_trsp().unwrap()
}

fn labels(inst: &Instance, stops: &[usize]) -> Vec<String> {
    stops.iter().map(|&c| inst.label(c)).collect()
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    if t <= limit {
        Ok(t)
    } else {
        Err(format!("took {t:?}, limit {limit:?}"))
    }
}

fn c1() -> Outcome {
    let start = Instant::now();
    let inst = family("table3", &[]);
    let target = (1.0 + 3f64.sqrt()) / 2.0;
    let mut scored = Vec::new();
    for size in 0..=inst.k() {
        for stops in (0..inst.m()).combinations(size) {
            let f = jr_ratio(&inst, &Solution::new(stops.clone())).factor;
            scored.push((f, stops));
        }
    }
    let best = scored.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
    within(Duration::from_secs(1), start)?;
    // Stops 0..3 and 3..6 mirror each other across the two regions.
    let y2_shape = |s: &[usize]| {
        let a: Vec<usize> = s.iter().copied().filter(|&c| c < 3).collect();
        let b: Vec<usize> = s.iter().map(|&c| c).filter(|&c| c >= 3).map(|c| c - 3).collect();
        s.len() == 3 && ((a.len() == 1 && b.contains(&a[0])) || (b.len() == 1 && a.contains(&b[0])))
    };
    let shaped: Vec<&Vec<usize>> =
        scored.iter().filter(|(f, s)| (f - best).abs() <= VALUE_TOL && y2_shape(s)).map(|(_, s)| s).collect();
    let msg = format!("min jr_ratio over {} solutions = {best:.9} (target {target:.9})", scored.len());
    if (best - target).abs() > VALUE_TOL {
        return Err(msg);
    }
    match shaped.first() {
        Some(s) => Ok(format!("{msg}, attained by {:?}", labels(&inst, s))),
        None => Err(format!("{msg}, but no minimizer has the mirrored shape")),
    }
}

fn c2() -> Outcome {
    let start = Instant::now();
    let eps = 0.01;
    let inst = family("gc-jr-tight", &[("eps", eps)]);
    let (sol, _) = gc_trsp(&inst).map_err(|e| e.to_string())?;
    let f = jr_ratio(&inst, &sol).factor;
    within(Duration::from_secs(1), start)?;
    let bound = 2.0 + 5f64.sqrt();
    let names = labels(&inst, sol.stops());
    let msg = format!("stops {names:?}, jr_ratio {f:.9} in [{:.5}, {bound:.5}]", bound - eps);
    if names == ["y1", "y2"] && f >= bound - eps - BOUND_TOL && f <= bound + BOUND_TOL {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn c3() -> Outcome {
    let start = Instant::now();
    let eps = 0.01;
    let h = 10;
    let inst = family("gc-core-tight", &[("eps", eps), ("h", h as f64)]);
    let (sol, _) = gc_trsp(&inst).map_err(|e| e.to_string())?;
    let sqrt2 = 2f64.sqrt();
    let a = core_violation(&inst, &sol, Alpha::TWO, 1.0 + sqrt2).map_err(|e| e.to_string())?;
    let alpha = Alpha::new(59, 30).unwrap();
    let beta = 1.0 + sqrt2 - eps;
    let b = core_violation(&inst, &sol, alpha, beta).map_err(|e| e.to_string())?;
    let tight = core_ratio(&inst, &sol, alpha).map_err(|e| e.to_string())?;
    within(Duration::from_secs(5), start)?;
    let group = 6 * h - 1;
    let expected: Vec<usize> = (0..2 * group).collect();
    let part_a = a.is_none();
    let part_b = b
        .as_ref()
        .is_some_and(|w| w.coalition == expected && labels(&inst, &w.deviation) == ["τ1", "τ3"]);
    let tight_desc = match &tight.witness {
        Some(w) => format!(
            "{:.12} with |S| = {}, T = {:?}",
            tight.factor,
            w.coalition.len(),
            labels(&inst, &w.deviation)
        ),
        None => format!("{:.12}", tight.factor),
    };
    let msg = format!(
        "stops {:?}; (a) violation at alpha 2, beta 1+sqrt2: {}; (b) violation at alpha {alpha}, beta {beta:.12}: {}; tight factor at alpha {alpha} is {tight_desc}",
        labels(&inst, sol.stops()),
        if part_a { "none" } else { "found" },
        if b.is_some() { "found" } else { "none" },
    );
    if part_a && part_b {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn c4() -> Outcome {
    let eps = 0.01;
    let inst = family("eca-jr-tight", &[("eps", eps)]);
    let (sol, _) = eca(&inst).map_err(|e| e.to_string())?;
    let f = jr_ratio(&inst, &sol).factor;
    let target = (1.0 + 2f64.sqrt()) - (2f64.sqrt() + 1.0) * eps / 4.0;
    let names = labels(&inst, sol.stops());
    let msg = format!("stops {names:?}, jr_ratio {f:.9}, closed form {target:.9}");
    if names == ["τ2", "τ4"] && (f - target).abs() <= VALUE_TOL {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn c5() -> Outcome {
    let inst = family("kz", &[("gamma", 1.0), ("r", 2.0)]);
    let (sol, _) = eca(&inst).map_err(|e| e.to_string())?;
    let report = core_ratio(&inst, &sol, Alpha::ONE).map_err(|e| e.to_string())?;
    let w = report.witness.as_ref().ok_or("no witness")?;
    let t = Solution::new(w.deviation.clone());
    let costs_ok = w.coalition.iter().all(|&i| {
        inst.agent_cost(i, &sol).unwrap() == 2.0 && inst.agent_cost(i, &t).unwrap() == 0.0
    });
    // Agents on a vertex pair are all but the last of every edge's r = 2.
    let vertex_agents: Vec<usize> = (0..inst.n()).step_by(2).collect();
    let msg = format!(
        "{} stops, core factor {}, T = {:?}, coalition {:?}",
        sol.len(),
        report.factor,
        labels(&inst, &w.deviation),
        w.coalition
    );
    if report.factor.is_infinite()
        && labels(&inst, &w.deviation) == ["τ1", "τ2", "τ3"]
        && w.coalition == vertex_agents
        && costs_ok
        && sol.len() == 6
    {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn c6() -> Outcome {
    let eps = 0.01;
    let identity = (hybrid_jr_bound(1.0) - (2.0 + 5f64.sqrt())).abs() <= 1e-12;
    let mut parts = vec![format!("f(1) = 2+sqrt5: {identity}")];
    let mut ok = identity;
    for lambda in [0.25, 0.5, 1.0] {
        let inst = family("hybrid-jr-tight", &[("eps", eps), ("lambda", lambda)]);
        let (sol, _) = hybrid(&inst, HybridParams::new(lambda).unwrap()).map_err(|e| e.to_string())?;
        let f = jr_ratio(&inst, &sol).factor;
        let bound = hybrid_jr_bound(lambda);
        let names = labels(&inst, sol.stops());
        let pass = names == ["y1", "y2"] && f >= bound - eps - BOUND_TOL && f <= bound + BOUND_TOL;
        ok &= pass;
        parts.push(format!(
            "lambda {lambda}: stops {names:?}, jr_ratio {f:.6} vs [{:.6}, {bound:.6}] {}",
            bound - eps,
            if pass { "ok" } else { "out" }
        ));
    }
    let msg = parts.join("; ");
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn c7() -> Outcome {
    let insts = corpus(100, TransitMode::Null);
    let mut core_bad = 0;
    let mut pf_bad = Vec::new();
    let mut worst_pf_gap = f64::NEG_INFINITY;
    for lambda in [0.25, 0.5, 1.0] {
        let beta = hybrid_core_bound(lambda);
        for (s, inst) in insts.iter().enumerate() {
            let (sol, _) = hybrid(inst, HybridParams::new(lambda).unwrap()).map_err(|e| e.to_string())?;
            if core_violation(inst, &sol, Alpha::TWO, beta).map_err(|e| e.to_string())?.is_some() {
                core_bad += 1;
            }
            let pf = pf_ratio(&induce_clustering(inst), sol.stops()).factor;
            worst_pf_gap = worst_pf_gap.max(pf - beta);
            if pf > beta + BOUND_TOL {
                pf_bad.push((lambda, s));
            }
        }
    }
    let msg = format!(
        "300 runs: {core_bad} core violations, {} PF excesses (largest pf - beta = {worst_pf_gap:.6}){}",
        pf_bad.len(),
        if pf_bad.is_empty() { String::new() } else { format!(", first at (lambda, instance) {:?}", pf_bad[0]) }
    );
    if core_bad == 0 && pf_bad.is_empty() {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn c8() -> Outcome {
    let sqrt2 = 2f64.sqrt();
    let gc_jr = 2.0 + 5f64.sqrt();
    let mut worst = Duration::ZERO;
    let mut bad = Vec::new();
    let (mut max_gc, mut max_eca, mut max_eca_rm) = (1.0f64, 1.0f64, 1.0f64);
    for inst in corpus(100, TransitMode::Null) {
        let start = Instant::now();
        let (g, _) = gc_trsp(&inst).map_err(|e| e.to_string())?;
        let f = jr_ratio(&inst, &g).factor;
        max_gc = max_gc.max(f);
        if f > gc_jr + BOUND_TOL {
            bad.push(format!("gc jr {f}"));
        }
        if core_violation(&inst, &g, Alpha::TWO, 1.0 + sqrt2).map_err(|e| e.to_string())?.is_some() {
            bad.push("gc core".into());
        }
        let (e, _) = eca(&inst).map_err(|e| e.to_string())?;
        let f = jr_ratio(&inst, &e).factor;
        max_eca = max_eca.max(f);
        if f > 1.0 + sqrt2 + BOUND_TOL {
            bad.push(format!("eca jr {f}"));
        }
        worst = worst.max(start.elapsed());
    }
    for inst in corpus(100, TransitMode::RandomMetric) {
        let start = Instant::now();
        let (e, _) = eca(&inst).map_err(|e| e.to_string())?;
        let f = jr_ratio(&inst, &e).factor;
        max_eca_rm = max_eca_rm.max(f);
        if f > 1.0 + sqrt2 + BOUND_TOL {
            bad.push(format!("eca jr (random transit) {f}"));
        }
        worst = worst.max(start.elapsed());
    }
    let msg = format!(
        "max jr: gc {max_gc:.4}, eca {max_eca:.4}, eca random transit {max_eca_rm:.4}; slowest instance {worst:?}; {} violations",
        bad.len()
    );
    if bad.is_empty() && worst <= Duration::from_secs(2) {
        Ok(msg)
    } else {
        Err(format!("{msg} {bad:?}"))
    }
}

fn line_pf(line: &LineClusteringInstance, centers: &[usize]) -> f64 {
    let cl = line.to_clustering();
    pf_ratio(&cl, centers).factor
}

fn c9() -> Outcome {
    let g = generate(&FamilySpec::new(Family::from_name("line-fig7").unwrap())).unwrap();
    let line = g.into_line().unwrap();
    let base = line_sweep_baseline(&line);
    let dict = l_dictator_partition(&line);
    let (pb, pd) = (line_pf(&line, &base), line_pf(&line, &dict));
    let mut bad = 0;
    for seed in 0..200u64 {
        let n = 2 + (seed % 15) as usize;
        let m = 1 + ((seed / 3) % 8) as usize;
        let k = 1 + (seed as usize / 5) % m.min(n);
        let rl = random_line(n, m, k, seed).map_err(|e| e.to_string())?;
        let f = line_pf(&rl, &l_dictator_partition(&rl));
        if (f - 1.0).abs() > BOUND_TOL {
            bad += 1;
        }
    }
    let msg = format!(
        "baseline {base:?} pf {pb:.4}; dictator {dict:?} pf {pd:.4}; random lines with dictator pf != 1: {bad}/200"
    );
    if base == [1, 3] && pb >= 3.0 - BOUND_TOL && dict == [0, 2] && (pd - 1.0).abs() <= BOUND_TOL && bad == 0 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn c10() -> Outcome {
    let mut checked = 0;
    let mut bad_a = 0;
    for (s, inst) in corpus(100, TransitMode::Null).into_iter().enumerate() {
        let cl = induce_clustering(&inst);
        let mut sets = vec![gc_trsp(&inst).unwrap().0, eca(&inst).unwrap().0, hybrid(&inst, HybridParams::new(0.5).unwrap()).unwrap().0];
        let pool: Vec<Vec<usize>> = subsets(inst.m()).filter(|t| !t.is_empty() && t.len() <= inst.k()).collect();
        sets.extend((0..3).map(|j| Solution::new(pool[(s * 7 + j * 13) % pool.len()].clone())));
        for y in sets {
            let rho = pf_ratio(&cl, y.stops()).factor;
            if !rho.is_finite() {
                continue;
            }
            checked += 1;
            if core_violation(&inst, &y, Alpha::TWO, rho).unwrap().is_some() {
                bad_a += 1;
            }
        }
    }
    let mut bad_b = 0;
    for seed in 0..50u64 {
        let n = 2 + (seed % 4) as usize;
        let m = 2 + ((seed / 4) % 3) as usize;
        let k = 1 + (seed as usize / 2) % 2;
        let cl = random_clustering(n, m, k.min(m), seed).map_err(|e| e.to_string())?;
        let image = clustering_to_trsp(&cl);
        let sols: Vec<(f64, Solution)> = (0..=image.k())
            .flat_map(|s| (0..image.m()).combinations(s))
            .map(|c| {
                let y = Solution::new(c);
                (jr_ratio(&image, &y).factor, y)
            })
            .collect();
        let best = sols.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
        for (f, y) in sols.iter().filter(|(f, _)| (*f - best).abs() <= 1e-12) {
            let (a, b) = split_sides(y, cl.m());
            let ok = [a, b].iter().any(|side| side.len() <= cl.k() && pf_ratio(&cl, side).factor <= 2.0 * f + BOUND_TOL);
            if !ok {
                bad_b += 1;
            }
        }
    }
    let msg = format!("(a) {checked} center sets, {bad_a} core violations at their PF factor; (b) {bad_b} best-JR images without a 2x PF side");
    if bad_a == 0 && bad_b == 0 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn c11() -> Outcome {
    let mut bad = Vec::new();
    for (s, inst) in small_corpus(100, TransitMode::Null).into_iter().enumerate() {
        let sols = [gc_trsp(&inst).unwrap().0, eca(&inst).unwrap().0, Solution::new((0..inst.k().min(1)).collect::<Vec<_>>())];
        for y in &sols {
            let jr = jr_ratio(&inst, y).factor;
            let bj = brute_jr_ratio(&inst, y);
            if !close(jr, bj, BOUND_TOL) {
                bad.push(format!("jr {s}: {jr} vs {bj}"));
            }
            for alpha in [Alpha::ONE, Alpha::TWO] {
                let c = core_ratio(&inst, y, alpha).unwrap().factor;
                let bc = brute_core_ratio(&inst, y, alpha);
                if !close(c, bc, BOUND_TOL) {
                    bad.push(format!("core {s} alpha {alpha}: {c} vs {bc}"));
                }
            }
        }
    }
    let bb = CoreOptions { backend: CoreBackend::BranchAndBound, ..CoreOptions::default() };
    let en = CoreOptions::default();
    let mut compared = 0;
    for seed in 0..40u64 {
        let m = 8 + (seed % 7) as usize;
        let n = 6 + (seed % 9) as usize;
        let k = 2 + (seed as usize / 7) % 4;
        let inst = random_euclidean(n, m, k, 9000 + seed, TransitMode::Null).unwrap();
        let y = gc_trsp(&inst).unwrap().0;
        for alpha in [Alpha::ONE, Alpha::TWO] {
            let a = fair_transit::fairness::core_ratio_with(&inst, &y, alpha, &en).unwrap().factor;
            let b = fair_transit::fairness::core_ratio_with(&inst, &y, alpha, &bb).unwrap().factor;
            compared += 1;
            if !close(a, b, BOUND_TOL) {
                bad.push(format!("bb seed {seed} alpha {alpha}: {a} vs {b}"));
            }
        }
    }
    let msg = format!("100 small instances x 3 solutions against brute force, {compared} backend comparisons up to m = 14; {} mismatches", bad.len());
    if bad.is_empty() {
        Ok(msg)
    } else {
        Err(format!("{msg}: {:?}", &bad[..bad.len().min(5)]))
    }
}

fn c12() -> Outcome {
    let mut bad = 0;
    let mut runs = 0;
    for inst in corpus(100, TransitMode::Null).into_iter().chain(corpus(30, TransitMode::RandomMetric)) {
        let (_, best) = exact_min_cost(&inst, 1 << 20).map_err(|e| e.to_string())?;
        let outs = [gc_trsp(&inst).unwrap().0, eca(&inst).unwrap().0, hybrid(&inst, HybridParams::new(0.5).unwrap()).unwrap().0];
        for y in outs {
            runs += 1;
            let c = inst.total_cost(&y).unwrap();
            if best > c + BOUND_TOL * (1.0 + c) {
                bad += 1;
            }
        }
    }
    let msg = format!("{runs} algorithm runs, {bad} cheaper than the exact optimum");
    if bad == 0 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn c13() -> Outcome {
    let mut cfg = ExperimentConfig::new(InstanceSource::Random { n: 12, m: 8, transit: TransitMode::Null, seed_start: 0 });
    cfg.rounds = 50;
    cfg.ks = vec![2, 4];
    let first = run_experiment(&cfg).map_err(|e| e.to_string())?;
    let second = run_experiment(&cfg).map_err(|e| e.to_string())?;
    let (a, b) = (to_csv(&first).unwrap(), to_csv(&second).unwrap());
    let over = first.iter().filter(|r| r.bounds_ok == Some(false)).count();
    let unchecked = first.iter().filter(|r| r.bounds_ok.is_none()).count();
    let failed = first.iter().filter(|r| r.status != "ok").count();
    let msg = format!(
        "{} rows, identical bytes: {}, rows over a bound: {over}, rows without a bound: {unchecked}, failed rows: {failed}",
        first.len(),
        a == b
    );
    if first.len() == 300 && a == b && over == 0 && unchecked == 0 && failed == 0 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("JR lower bound over all solutions", c1),
        ("GC JR tightness", c2),
        ("GC core tightness", c3),
        ("ECA JR tightness", c4),
        ("ECA core failure", c5),
        ("hybrid JR tightness", c6),
        ("hybrid core and PF bounds", c7),
        ("theorem bounds on random corpus", c8),
        ("line clustering", c9),
        ("reductions", c10),
        ("oracle equivalence", c11),
        ("exact min cost dominance", c12),
        ("experiment determinism and bounds", c13),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(d) => println!("PASS {:>2} {name}: {d} [{t:.2?}]", i + 1),
            Err(d) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {d} [{t:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
