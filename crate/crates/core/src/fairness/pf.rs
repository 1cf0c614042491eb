use super::{improves, kth_largest, ratio, FairnessReport, Property, Witness};
use crate::clustering::ClusteringInstance;

/// ⌈n'/k'⌉.
pub fn pf_threshold(n: usize, k: usize) -> usize {
    n.div_ceil(k)
}

fn distances(cl: &ClusteringInstance, centers: &[usize]) -> Vec<f64> {
    assert!(centers.iter().all(|&c| c < cl.m()), "center index out of range");
    (0..cl.n()).map(|j| cl.d_set(j, centers)).collect()
}

/// A center that ⌈n'/k'⌉ datapoints all prefer to their nearest chosen
/// center by a factor above `rho`.
pub fn pf_violation(cl: &ClusteringInstance, centers: &[usize], rho: f64) -> Option<Witness> {
    let n = cl.n();
    let thr = pf_threshold(n, cl.k());
    if n == 0 || thr > n {
        return None;
    }
    let cur = distances(cl, centers);
    for c in 0..cl.m() {
        let coalition: Vec<usize> = (0..n).filter(|&j| improves(rho, cur[j], cl.d(j, c))).collect();
        if coalition.len() >= thr {
            let factor = coalition.iter().map(|&j| ratio(cur[j], cl.d(j, c))).fold(f64::INFINITY, f64::min);
            return Some(Witness { coalition, deviation: vec![c], factor });
        }
    }
    None
}

/// The smallest ρ for which `centers` satisfies ρ-PF.
pub fn pf_ratio(cl: &ClusteringInstance, centers: &[usize]) -> FairnessReport {
    let n = cl.n();
    let thr = pf_threshold(n, cl.k());
    let mut report = FairnessReport::satisfied(Property::Pf, None);
    if n == 0 || thr > n {
        return report;
    }
    let cur = distances(cl, centers);
    let mut ratios = vec![0.0; n];
    let mut scratch = vec![0.0; n];
    for c in 0..cl.m() {
        for j in 0..n {
            ratios[j] = ratio(cur[j], cl.d(j, c));
        }
        scratch.copy_from_slice(&ratios);
        let rho = kth_largest(&mut scratch, thr).expect("thr <= n");
        if rho > report.factor {
            let coalition = (0..n).filter(|&j| ratios[j] >= rho).collect();
            report.factor = rho;
            report.witness = Some(Witness { coalition, deviation: vec![c], factor: rho });
        }
    }
    report
}
