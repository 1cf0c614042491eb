//! Distance matrices over extended reals.

use std::fmt;

use crate::error::{Error, Result};

/// Absolute tolerance used by every comparison in the crate.
pub const TOL: f64 = 1e-9;

/// A dense symmetric distance matrix. Entries are nonnegative floats or
/// `f64::INFINITY`.
#[derive(Clone, Debug, PartialEq)]
pub struct Metric {
    size: usize,
    dist: Vec<f64>,
}

/// One broken metric axiom.
#[derive(Clone, Debug, PartialEq)]
pub enum MetricIssue {
    NotANumber { i: usize, j: usize },
    Negative { i: usize, j: usize, value: f64 },
    NonZeroDiagonal { i: usize, value: f64 },
    Asymmetric { i: usize, j: usize, ij: f64, ji: f64 },
    Triangle { i: usize, j: usize, k: usize, direct: f64, via: f64 },
}

impl fmt::Display for MetricIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MetricIssue::NotANumber { i, j } => write!(f, "d({i},{j}) is NaN"),
            MetricIssue::Negative { i, j, value } => write!(f, "d({i},{j}) = {value} is negative"),
            MetricIssue::NonZeroDiagonal { i, value } => write!(f, "d({i},{i}) = {value}, expected 0"),
            MetricIssue::Asymmetric { i, j, ij, ji } => {
                write!(f, "asymmetric: d({i},{j}) = {ij} but d({j},{i}) = {ji}")
            }
            MetricIssue::Triangle { i, j, k, direct, via } => write!(
                f,
                "triangle inequality: d({i},{k}) = {direct} > d({i},{j}) + d({j},{k}) = {via}"
            ),
        }
    }
}

impl Metric {
    /// All-zero metric on `size` points.
    pub fn zeros(size: usize) -> Self {
        Metric { size, dist: vec![0.0; size * size] }
    }

    /// Builds a matrix from `f(i, j)`. The function is called for every
    /// ordered pair, so asymmetric inputs stay visible to [`Metric::issues`].
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut dist = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                dist.push(f(i, j));
            }
        }
        Metric { size, dist }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let size = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != size) {
            return Err(Error::InvalidMetric(format!(
                "row {bad} has {} entries, expected {size}",
                rows[bad].len()
            )));
        }
        Ok(Metric::from_fn(size, |i, j| rows[i][j]))
    }

    /// Symmetric matrix from a row-major lower triangle including the diagonal.
    pub fn from_lower_triangle(size: usize, tri: &[f64]) -> Result<Self> {
        let want = size * (size + 1) / 2;
        if tri.len() != want {
            return Err(Error::InvalidMetric(format!(
                "lower triangle has {} entries, expected {want} for {size} points",
                tri.len()
            )));
        }
        Ok(Metric::from_fn(size, |i, j| {
            let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
            tri[hi * (hi + 1) / 2 + lo]
        }))
    }

    /// Shortest-path metric of an undirected weighted graph. Missing edges
    /// are infinite.
    pub fn from_edges(size: usize, edges: &[(usize, usize, f64)]) -> Self {
        let mut m = Metric::from_fn(size, |i, j| if i == j { 0.0 } else { f64::INFINITY });
        for &(u, v, w) in edges {
            let w = w.min(m.get(u, v));
            m.set_sym(u, v, w);
        }
        m.closure()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.size + j]
    }

    fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.dist[i * self.size + j] = v;
        self.dist[j * self.size + i] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.dist[i * self.size..(i + 1) * self.size]
    }

    pub fn is_all_zero(&self) -> bool {
        self.dist.iter().all(|&x| x == 0.0)
    }

    /// Row-major lower triangle including the diagonal.
    pub fn lower_triangle(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.size * (self.size + 1) / 2);
        for i in 0..self.size {
            for j in 0..=i {
                out.push(self.get(i, j));
            }
        }
        out
    }

    /// Floyd–Warshall closure.
    pub fn closure(&self) -> Metric {
        let mut out = self.clone();
        let p = self.size;
        for k in 0..p {
            for i in 0..p {
                let dik = out.dist[i * p + k];
                if dik == f64::INFINITY {
                    continue;
                }
                for j in 0..p {
                    let via = dik + out.dist[k * p + j];
                    if via < out.dist[i * p + j] {
                        out.dist[i * p + j] = via;
                    }
                }
            }
        }
        out
    }

    /// Submatrix on the listed points, in the listed order.
    pub fn restrict(&self, points: &[usize]) -> Metric {
        Metric::from_fn(points.len(), |i, j| self.get(points[i], points[j]))
    }

    /// Every violated axiom. Cubic in the size.
    pub fn issues(&self) -> Vec<MetricIssue> {
        let p = self.size;
        let mut out = Vec::new();
        for i in 0..p {
            let d = self.get(i, i);
            if d.is_nan() {
                out.push(MetricIssue::NotANumber { i, j: i });
            } else if d.abs() > TOL {
                out.push(MetricIssue::NonZeroDiagonal { i, value: d });
            }
            for j in 0..p {
                if i == j {
                    continue;
                }
                let ij = self.get(i, j);
                if ij.is_nan() {
                    out.push(MetricIssue::NotANumber { i, j });
                    continue;
                }
                if ij < -TOL {
                    out.push(MetricIssue::Negative { i, j, value: ij });
                }
                let ji = self.get(j, i);
                if j > i && !ji.is_nan() && !approx_eq(ij, ji) {
                    out.push(MetricIssue::Asymmetric { i, j, ij, ji });
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for i in 0..p {
            for k in 0..p {
                let direct = self.get(i, k);
                if direct == 0.0 {
                    continue;
                }
                for j in 0..p {
                    let via = self.get(i, j) + self.get(j, k);
                    if direct > via + TOL {
                        out.push(MetricIssue::Triangle { i, j, k, direct, via });
                    }
                }
            }
        }
        out
    }
}

/// Equality up to [`TOL`], with infinities equal only to themselves.
pub fn approx_eq(a: f64, b: f64) -> bool {
    if a.is_infinite() || b.is_infinite() {
        a == b
    } else {
        (a - b).abs() <= TOL
    }
}
