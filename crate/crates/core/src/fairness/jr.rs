use super::{improves, kth_largest, ratio, FairnessReport, Property, Witness};
use crate::model::{Instance, RouteTable, Solution};

/// ⌈2n/k⌉.
pub fn jr_threshold(n: usize, k: usize) -> usize {
    (2 * n).div_ceil(k)
}

fn current_costs(inst: &Instance, sol: &Solution) -> Vec<f64> {
    inst.costs(sol).expect("solution stops must be valid candidate indices")
}

fn pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..m).flat_map(move |u| (u + 1..m).map(move |v| (u, v)))
}

/// Pairs {u, v}, u < v, with β·c_i({u, v}) < c_i(Y).
///
/// Panics if the solution refers to a nonexistent candidate.
pub fn improving_pairs(inst: &Instance, agent: usize, sol: &Solution, beta: f64) -> Vec<(usize, usize)> {
    let cur = inst.agent_cost(agent, sol).expect("agent and stops must be in range");
    let table = RouteTable::new(inst);
    pairs(inst.m()).filter(|&(u, v)| improves(beta, cur, table.pair_cost(agent, u, v))).collect()
}

/// A pair of stops that ⌈2n/k⌉ agents all prefer by a factor above `beta`,
/// if one exists. The first such pair in lexicographic order is returned.
pub fn jr_violation(inst: &Instance, sol: &Solution, beta: f64) -> Option<Witness> {
    let n = inst.n();
    let thr = jr_threshold(n, inst.k());
    if thr > n {
        return None;
    }
    let cur = current_costs(inst, sol);
    let table = RouteTable::new(inst);
    for (u, v) in pairs(inst.m()) {
        let coalition: Vec<usize> =
            (0..n).filter(|&i| improves(beta, cur[i], table.pair_cost(i, u, v))).collect();
        if coalition.len() >= thr {
            let factor = coalition
                .iter()
                .map(|&i| ratio(cur[i], table.pair_cost(i, u, v)))
                .fold(f64::INFINITY, f64::min);
            return Some(Witness { coalition, deviation: vec![u, v], factor });
        }
    }
    None
}

/// The smallest β for which `sol` satisfies β-JR: the maximum over pairs
/// of the ⌈2n/k⌉-th largest improvement ratio.
pub fn jr_ratio(inst: &Instance, sol: &Solution) -> FairnessReport {
    let n = inst.n();
    let thr = jr_threshold(n, inst.k());
    let mut report = FairnessReport::satisfied(Property::Jr, None);
    if thr > n {
        return report;
    }
    let cur = current_costs(inst, sol);
    let table = RouteTable::new(inst);
    let mut ratios = vec![0.0; n];
    let mut scratch = vec![0.0; n];
    for (u, v) in pairs(inst.m()) {
        for i in 0..n {
            ratios[i] = ratio(cur[i], table.pair_cost(i, u, v));
        }
        scratch.copy_from_slice(&ratios);
        let beta = kth_largest(&mut scratch, thr).expect("thr <= n");
        if beta > report.factor {
            let coalition = (0..n).filter(|&i| ratios[i] >= beta).collect();
            report.factor = beta;
            report.witness = Some(Witness { coalition, deviation: vec![u, v], factor: beta });
        }
    }
    report
}
