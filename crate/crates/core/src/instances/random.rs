//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clustering::{ClusteringInstance, LineClusteringInstance};
use crate::error::{Error, Result};
use crate::metric::Metric;
use crate::model::Instance;

/// How ride costs between candidates are drawn.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TransitMode {
    /// Free transit.
    Null,
    /// The given multiple of the Euclidean distance between candidates.
    Scaled(f64),
    /// Independent uniform [0, 1) costs closed under shortest paths.
    RandomMetric,
}

fn euclid(points: &[(f64, f64)]) -> Metric {
    Metric::from_fn(points.len(), |i, j| {
        (points[i].0 - points[j].0).hypot(points[i].1 - points[j].1)
    })
}

/// `n` agents and `m` candidates drawn uniformly from the unit square.
/// Points are a₀, b₀, a₁, b₁, … followed by the candidates.
pub fn random_euclidean(n: usize, m: usize, k: usize, seed: u64, transit: TransitMode) -> Result<Instance> {
    if n == 0 || m == 0 || k == 0 || k > m {
        return Err(Error::InvalidParameter(format!(
            "random instance needs n, m, k >= 1 and k <= m (n = {n}, m = {m}, k = {k})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<(f64, f64)> = (0..2 * n + m).map(|_| (rng.gen(), rng.gen())).collect();
    let walk = euclid(&points);
    let candidates: Vec<usize> = (2 * n..2 * n + m).collect();
    let transit = match transit {
        TransitMode::Null => Metric::zeros(m),
        TransitMode::Scaled(f) => {
            if !(f >= 0.0) || !f.is_finite() {
                return Err(Error::InvalidParameter(format!("transit scale must be finite and >= 0, got {f}")));
            }
            let e = euclid(&points[2 * n..]);
            Metric::from_fn(m, |u, v| f * e.get(u, v))
        }
        TransitMode::RandomMetric => {
            let mut raw = vec![vec![0.0; m]; m];
            for u in 0..m {
                for v in u + 1..m {
                    let w: f64 = rng.gen();
                    raw[u][v] = w;
                    raw[v][u] = w;
                }
            }
            Metric::from_rows(&raw)?.closure()
        }
    };
    Instance::new((0..n).map(|i| (2 * i, 2 * i + 1)).collect(), candidates, walk, transit, k)
}

/// `n` datapoints and `m` centers drawn uniformly from the unit square.
pub fn random_clustering(n: usize, m: usize, k: usize, seed: u64) -> Result<ClusteringInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<(f64, f64)> = (0..n + m).map(|_| (rng.gen(), rng.gen())).collect();
    ClusteringInstance::new((0..n).collect(), (n..n + m).collect(), euclid(&points), k)
}

/// `n` datapoints and `m` centers drawn uniformly from [0, 1); ℓ is drawn
/// uniformly from 1..=⌊n/k⌋.
pub fn random_line(n: usize, m: usize, k: usize, seed: u64) -> Result<LineClusteringInstance> {
    if k == 0 || n < k {
        return Err(Error::InvalidParameter(format!("random line instance needs 1 <= k <= n (n = {n}, k = {k})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..n).map(|_| rng.gen()).collect();
    let centers = (0..m).map(|_| rng.gen()).collect();
    let ell = rng.gen_range(1..=n / k);
    LineClusteringInstance::new(data, centers, k, ell)
}
