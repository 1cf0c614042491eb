//! Maps between stop placement and clustering.

use crate::clustering::ClusteringInstance;
use crate::metric::Metric;
use crate::model::{Instance, Solution};

/// The clustering instance whose datapoints are all 2n endpoints, in the
/// order a₀, b₀, a₁, b₁, … Centers and budget carry over.
pub fn induce_clustering(inst: &Instance) -> ClusteringInstance {
    let datapoints = inst.endpoints().iter().flat_map(|&(a, b)| [a, b]).collect();
    ClusteringInstance::new(datapoints, inst.candidates().to_vec(), inst.walk().clone(), inst.k())
        .expect("a valid instance induces a valid clustering")
}

/// Two copies of the clustering metric at infinite separation. Datapoint `j`
/// becomes an agent travelling from its copy in A to its copy in B. Center
/// `c` appears as candidate `c` (copy A) and `m' + c` (copy B); the budget
/// doubles and transit is free.
pub fn clustering_to_trsp(cl: &ClusteringInstance) -> Instance {
    let p = cl.metric().size();
    let walk = Metric::from_fn(2 * p, |i, j| {
        if (i < p) == (j < p) {
            cl.metric().get(i % p, j % p)
        } else {
            f64::INFINITY
        }
    });
    let endpoints = cl.datapoints().iter().map(|&x| (x, p + x)).collect();
    let candidates = cl.centers().iter().copied().chain(cl.centers().iter().map(|&c| p + c)).collect();
    Instance::new(endpoints, candidates, walk, Metric::zeros(2 * cl.m()), 2 * cl.k())
        .expect("doubling a valid clustering gives a valid instance")
}

/// Splits a solution of [`clustering_to_trsp`] into its copy-A and copy-B
/// center sets.
pub fn split_sides(sol: &Solution, m_prime: usize) -> (Vec<usize>, Vec<usize>) {
    let a = sol.stops().iter().copied().filter(|&c| c < m_prime).collect();
    let b = sol.stops().iter().filter(|&&c| c >= m_prime).map(|&c| c - m_prime).collect();
    (a, b)
}
