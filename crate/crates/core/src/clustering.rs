//! Centroid clustering instances and Greedy Capture.

use crate::error::{Error, Result};
use crate::metric::{Metric, TOL};
use crate::trace::{RunTrace, Token};

/// Datapoints and candidate centers living in one metric. Datapoints may
/// repeat.
#[derive(Clone, Debug, PartialEq)]
pub struct ClusteringInstance {
    datapoints: Vec<usize>,
    centers: Vec<usize>,
    dist: Metric,
    k: usize,
}

impl ClusteringInstance {
    pub fn new(datapoints: Vec<usize>, centers: Vec<usize>, dist: Metric, k: usize) -> Result<Self> {
        let p = dist.size();
        if let Some(&x) = datapoints.iter().chain(&centers).find(|&&x| x >= p) {
            return Err(Error::InvalidInstance(format!("point {x} out of range (points = {p})")));
        }
        if k == 0 || k > centers.len() {
            return Err(Error::InvalidInstance(format!(
                "budget k' = {k} must satisfy 1 <= k' <= m' = {}",
                centers.len()
            )));
        }
        Ok(ClusteringInstance { datapoints, centers, dist, k })
    }

    pub fn n(&self) -> usize {
        self.datapoints.len()
    }

    pub fn m(&self) -> usize {
        self.centers.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn datapoints(&self) -> &[usize] {
        &self.datapoints
    }

    pub fn centers(&self) -> &[usize] {
        &self.centers
    }

    pub fn metric(&self) -> &Metric {
        &self.dist
    }

    /// Distance from datapoint `j` to center `c`.
    #[inline]
    pub fn d(&self, j: usize, c: usize) -> f64 {
        self.dist.get(self.datapoints[j], self.centers[c])
    }

    /// Distance from datapoint `j` to the nearest center in `set`.
    pub fn d_set(&self, j: usize, set: &[usize]) -> f64 {
        set.iter().map(|&c| self.d(j, c)).fold(f64::INFINITY, f64::min)
    }

    /// ⌈n'/k'⌉.
    pub fn threshold(&self) -> usize {
        self.n().div_ceil(self.k)
    }
}

/// Greedy Capture: grow balls around every center at the same rate, open a
/// center once its ball holds ⌈n'/k'⌉ active datapoints, and absorb later
/// datapoints that an open ball reaches.
///
/// Radii are visited as sorted datapoint–center distances. Ties open the
/// lowest center index first and are re-evaluated after every opening.
pub fn greedy_capture(cl: &ClusteringInstance) -> (Vec<usize>, RunTrace) {
    let n = cl.n();
    let m = cl.m();
    let thr = cl.threshold();
    let mut edges: Vec<(f64, usize, usize)> = Vec::with_capacity(n * m);
    for c in 0..m {
        for j in 0..n {
            let d = cl.d(j, c);
            if d.is_finite() {
                edges.push((d, c, j));
            }
        }
    }
    edges.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));

    let mut active = vec![true; n];
    let mut left = n;
    let mut open = vec![false; m];
    let mut opened = Vec::new();
    let mut reached_by_center: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut reached_by_point: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut count = vec![0usize; m];
    let mut trace = RunTrace::default();

    let deactivate = |j: usize,
                      active: &mut Vec<bool>,
                      count: &mut Vec<usize>,
                      open: &[bool],
                      reached_by_point: &Vec<Vec<usize>>| {
        active[j] = false;
        for &c in &reached_by_point[j] {
            if !open[c] {
                count[c] -= 1;
            }
        }
    };

    let mut idx = 0;
    while idx < edges.len() && left > 0 {
        let r = edges[idx].0;
        let mut absorbed = Vec::new();
        while idx < edges.len() && edges[idx].0 <= r + TOL {
            let (_, c, j) = edges[idx];
            idx += 1;
            reached_by_center[c].push(j);
            reached_by_point[j].push(c);
            if active[j] {
                if open[c] {
                    absorbed.push(j);
                    deactivate(j, &mut active, &mut count, &open, &reached_by_point);
                    left -= 1;
                } else {
                    count[c] += 1;
                }
            }
        }
        trace.push(r, vec![], absorbed.into_iter().map(Token::Endpoint).collect());
        while opened.len() < cl.k {
            let Some(c) = (0..m).find(|&c| !open[c] && count[c] >= thr) else { break };
            open[c] = true;
            opened.push(c);
            let mut captured = Vec::new();
            for &j in &reached_by_center[c] {
                if active[j] {
                    captured.push(j);
                    deactivate(j, &mut active, &mut count, &open, &reached_by_point);
                    left -= 1;
                }
            }
            trace.push(r, vec![c], captured.into_iter().map(Token::Endpoint).collect());
        }
    }
    let rest: Vec<Token> = (0..n).filter(|&j| active[j]).map(Token::Endpoint).collect();
    trace.push(f64::INFINITY, vec![], rest);
    opened.sort_unstable();
    (opened, trace)
}

/// Datapoints and centers on the real line.
#[derive(Clone, Debug, PartialEq)]
pub struct LineClusteringInstance {
    datapoints: Vec<f64>,
    centers: Vec<f64>,
    k: usize,
    ell: usize,
}

impl LineClusteringInstance {
    /// Sorts both coordinate lists. Requires finite coordinates,
    /// 1 ≤ k' ≤ m' and 1 ≤ ℓ ≤ ⌊n'/k'⌋.
    pub fn new(mut datapoints: Vec<f64>, mut centers: Vec<f64>, k: usize, ell: usize) -> Result<Self> {
        if datapoints.iter().chain(&centers).any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter("line coordinates must be finite".into()));
        }
        if k == 0 || k > centers.len() {
            return Err(Error::InvalidParameter(format!(
                "budget k' = {k} must satisfy 1 <= k' <= m' = {}",
                centers.len()
            )));
        }
        if ell == 0 || ell > datapoints.len() / k {
            return Err(Error::InvalidParameter(format!(
                "ell = {ell} must satisfy 1 <= ell <= floor(n'/k') = {}",
                datapoints.len() / k
            )));
        }
        datapoints.sort_by(f64::total_cmp);
        centers.sort_by(f64::total_cmp);
        Ok(LineClusteringInstance { datapoints, centers, k, ell })
    }

    pub fn datapoints(&self) -> &[f64] {
        &self.datapoints
    }

    pub fn centers(&self) -> &[f64] {
        &self.centers
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn with_ell(&self, ell: usize) -> Result<Self> {
        LineClusteringInstance::new(self.datapoints.clone(), self.centers.clone(), self.k, ell)
    }

    /// The same data as a general clustering instance. Points are the
    /// datapoints followed by the centers.
    pub fn to_clustering(&self) -> ClusteringInstance {
        let coords: Vec<f64> = self.datapoints.iter().chain(&self.centers).copied().collect();
        let n = self.datapoints.len();
        let dist = Metric::from_fn(coords.len(), |i, j| (coords[i] - coords[j]).abs());
        ClusteringInstance::new((0..n).collect(), (n..coords.len()).collect(), dist, self.k)
            .expect("line instance already checked")
    }
}
