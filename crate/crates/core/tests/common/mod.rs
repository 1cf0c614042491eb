#![allow(dead_code)]

use fair_transit::clustering::ClusteringInstance;
use fair_transit::fairness::{ratio, Alpha};
use fair_transit::instances::{random_euclidean, TransitMode};
use fair_transit::model::{Instance, Solution};

/// Seeded instances with n ≤ 20, m ≤ 10, k in 2..=5.
pub fn corpus(count: u64, transit: TransitMode) -> Vec<Instance> {
    (0..count)
        .map(|s| {
            let n = 4 + (s % 17) as usize;
            let m = 5 + ((s / 3) % 6) as usize;
            let k = 2 + ((s / 2) % 4) as usize;
            random_euclidean(n, m, k, 1000 + s, transit).unwrap()
        })
        .collect()
}

/// Small instances for exhaustive oracles: n, m ≤ 8.
pub fn small_corpus(count: u64, transit: TransitMode) -> Vec<Instance> {
    (0..count)
        .map(|s| {
            let n = 2 + (s % 7) as usize;
            let m = 2 + ((s / 2) % 7) as usize;
            let k = 1 + ((s / 3) as usize % m);
            random_euclidean(n, m, k, 5000 + s, transit).unwrap()
        })
        .collect()
}

/// Cost of agent `i` from first principles: best ordered pair of stops or
/// walking.
pub fn naive_cost(inst: &Instance, i: usize, stops: &[usize]) -> f64 {
    let (a, b) = inst.endpoints()[i];
    let w = inst.walk();
    let mut best = w.get(a, b);
    for &u in stops {
        for &v in stops {
            let pu = inst.candidates()[u];
            let pv = inst.candidates()[v];
            best = best.min(w.get(a, pu) + inst.transit().get(u, v) + w.get(pv, b));
        }
    }
    best
}

pub fn subsets(m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1 << m)).map(move |mask| (0..m).filter(|&c| mask >> c & 1 == 1).collect())
}

/// Largest, over coalitions S and deviations T, of the smallest ratio
/// c_i(Y)/c_i(T) inside S, where `admissible(|S|, |T|)` decides which
/// pairs count. Never below 1.
fn brute_factor(
    inst: &Instance,
    sol: &Solution,
    deviations: &[Vec<usize>],
    admissible: impl Fn(usize, usize) -> bool,
) -> f64 {
    let n = inst.n();
    let cur: Vec<f64> = (0..n).map(|i| naive_cost(inst, i, sol.stops())).collect();
    let mut best = 1.0f64;
    for t in deviations {
        let r: Vec<f64> = (0..n).map(|i| ratio(cur[i], naive_cost(inst, i, t))).collect();
        for mask in 1u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if !admissible(s.len(), t.len()) {
                continue;
            }
            let worst = s.iter().map(|&i| r[i]).fold(f64::INFINITY, f64::min);
            best = best.max(worst);
        }
    }
    best
}

pub fn brute_jr_ratio(inst: &Instance, sol: &Solution) -> f64 {
    let thr = (2 * inst.n()).div_ceil(inst.k());
    let m = inst.m();
    let pairs: Vec<Vec<usize>> = (0..m).flat_map(|u| (u + 1..m).map(move |v| vec![u, v])).collect();
    brute_factor(inst, sol, &pairs, |s, _| s >= thr)
}

pub fn brute_core_ratio(inst: &Instance, sol: &Solution, alpha: Alpha) -> f64 {
    let (n, k) = (inst.n() as u128, inst.k() as u128);
    let (p, q) = (alpha.numer() as u128, alpha.denom() as u128);
    let all: Vec<Vec<usize>> = subsets(inst.m()).filter(|t| !t.is_empty()).collect();
    brute_factor(inst, sol, &all, |s, t| (s as u128) * k * q >= p * (t as u128) * n)
}

/// Largest, over centers c and datapoint sets S of size ⌈n/k⌉, of the
/// smallest d(j, Y)/d(j, c) inside S.
pub fn brute_pf_ratio(cl: &ClusteringInstance, centers: &[usize]) -> f64 {
    let n = cl.n();
    let thr = n.div_ceil(cl.k());
    let mut best = 1.0f64;
    for c in 0..cl.m() {
        let r: Vec<f64> = (0..n).map(|j| ratio(cl.d_set(j, centers), cl.d(j, c))).collect();
        for mask in 1u32..(1 << n) {
            if (mask.count_ones() as usize) < thr {
                continue;
            }
            let worst = (0..n).filter(|&j| mask >> j & 1 == 1).map(|j| r[j]).fold(f64::INFINITY, f64::min);
            best = best.max(worst);
        }
    }
    best
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a.is_infinite() && b.is_infinite() && a.signum() == b.signum()) || (a - b).abs() <= tol
}
