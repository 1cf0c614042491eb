//! Agents, candidate stops, solutions and travel costs.

use std::fmt;

use crate::error::{Error, Result};
use crate::metric::{Metric, MetricIssue};

/// A transit stop placement instance.
///
/// `walk` covers every point. `transit` is indexed by candidate position, so
/// `transit.get(u, v)` is the ride cost between the `u`-th and `v`-th
/// candidates.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    endpoints: Vec<(usize, usize)>,
    candidates: Vec<usize>,
    walk: Metric,
    transit: Metric,
    k: usize,
    labels: Option<Vec<String>>,
    null_transit: bool,
}

/// A set of selected candidate indices, kept sorted and unique.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    stops: Vec<usize>,
}

impl Solution {
    pub fn empty() -> Self {
        Solution::default()
    }

    pub fn new(stops: impl IntoIterator<Item = usize>) -> Self {
        let mut stops: Vec<usize> = stops.into_iter().collect();
        stops.sort_unstable();
        stops.dedup();
        Solution { stops }
    }

    pub fn stops(&self) -> &[usize] {
        &self.stops
    }

    pub fn len(&self) -> usize {
        self.stops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stops.is_empty()
    }

    pub fn contains(&self, c: usize) -> bool {
        self.stops.binary_search(&c).is_ok()
    }

    pub fn insert(&mut self, c: usize) {
        if let Err(pos) = self.stops.binary_search(&c) {
            self.stops.insert(pos, c);
        }
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.stops.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// One problem found by [`validate_instance`].
#[derive(Clone, Debug, PartialEq)]
pub enum Issue {
    Walk(MetricIssue),
    Transit(MetricIssue),
    Structure(String),
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::Walk(x) => write!(f, "walk metric: {x}"),
            Issue::Transit(x) => write!(f, "transit metric: {x}"),
            Issue::Structure(s) => f.write_str(s),
        }
    }
}

/// Structural checks that have to pass before costs can be evaluated.
fn structure_issues(
    endpoints: &[(usize, usize)],
    candidates: &[usize],
    walk: &Metric,
    transit: &Metric,
    k: usize,
    labels: Option<&Vec<String>>,
) -> Vec<String> {
    let p = walk.size();
    let m = candidates.len();
    let mut out = Vec::new();
    for (i, &(a, b)) in endpoints.iter().enumerate() {
        if a >= p {
            out.push(format!("agent {i}: endpoint a = {a} is not a point (points = {p})"));
        }
        if b >= p {
            out.push(format!("agent {i}: endpoint b = {b} is not a point (points = {p})"));
        }
    }
    for (j, &c) in candidates.iter().enumerate() {
        if c >= p {
            out.push(format!("candidate {j}: point {c} out of range (points = {p})"));
        }
    }
    if transit.size() != m {
        out.push(format!("transit metric has size {}, expected m = {m}", transit.size()));
    }
    if k == 0 || k > m {
        out.push(format!("budget k = {k} must satisfy 1 <= k <= m = {m}"));
    }
    if let Some(l) = labels {
        if l.len() != m {
            out.push(format!("{} candidate labels for {m} candidates", l.len()));
        }
    }
    out
}

impl Instance {
    /// Checks indices, sizes and the budget. Metric axioms are checked by
    /// [`validate_instance`].
    pub fn new(
        endpoints: Vec<(usize, usize)>,
        candidates: Vec<usize>,
        walk: Metric,
        transit: Metric,
        k: usize,
    ) -> Result<Self> {
        let bad = structure_issues(&endpoints, &candidates, &walk, &transit, k, None);
        if !bad.is_empty() {
            return Err(Error::InvalidInstance(bad.join("; ")));
        }
        let null_transit = transit.is_all_zero();
        Ok(Instance { endpoints, candidates, walk, transit, k, labels: None, null_transit })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.m() {
            return Err(Error::InvalidInstance(format!(
                "{} candidate labels for {} candidates",
                labels.len(),
                self.m()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Same instance with a different budget.
    pub fn with_budget(&self, k: usize) -> Result<Self> {
        let mut out = self.clone();
        if k == 0 || k > self.m() {
            return Err(Error::InvalidInstance(format!(
                "budget k = {k} must satisfy 1 <= k <= m = {}",
                self.m()
            )));
        }
        out.k = k;
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.endpoints.len()
    }

    pub fn m(&self) -> usize {
        self.candidates.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn points(&self) -> usize {
        self.walk.size()
    }

    pub fn endpoints(&self) -> &[(usize, usize)] {
        &self.endpoints
    }

    pub fn candidates(&self) -> &[usize] {
        &self.candidates
    }

    pub fn walk(&self) -> &Metric {
        &self.walk
    }

    pub fn transit(&self) -> &Metric {
        &self.transit
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a candidate: its label if present, else its index.
    pub fn label(&self, c: usize) -> String {
        match &self.labels {
            Some(l) => l[c].clone(),
            None => c.to_string(),
        }
    }

    /// Index of the candidate with the given label.
    pub fn candidate_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// ⌈2n/k⌉, the coalition size that justified representation protects.
    pub fn threshold(&self) -> usize {
        (2 * self.n()).div_ceil(self.k)
    }

    pub fn is_null_transit(&self) -> bool {
        self.null_transit
    }

    /// Walking distance from a point to a candidate.
    #[inline]
    pub fn to_stop(&self, point: usize, c: usize) -> f64 {
        self.walk.get(point, self.candidates[c])
    }

    #[inline]
    pub fn walk_cost(&self, i: usize) -> f64 {
        let (a, b) = self.endpoints[i];
        self.walk.get(a, b)
    }

    /// Cost of the route a → u, ride u → v, v → b.
    #[inline]
    pub fn route(&self, i: usize, u: usize, v: usize) -> f64 {
        let (a, b) = self.endpoints[i];
        self.to_stop(a, u) + self.transit.get(u, v) + self.to_stop(b, v)
    }

    /// Agent cost without bounds checks on `stops`.
    pub fn cost_of(&self, i: usize, stops: &[usize]) -> f64 {
        let (a, b) = self.endpoints[i];
        let mut best = self.walk.get(a, b);
        if stops.is_empty() {
            return best;
        }
        if self.null_transit {
            let da = stops.iter().map(|&c| self.to_stop(a, c)).fold(f64::INFINITY, f64::min);
            let db = stops.iter().map(|&c| self.to_stop(b, c)).fold(f64::INFINITY, f64::min);
            return best.min(da + db);
        }
        for &u in stops {
            let au = self.to_stop(a, u);
            if au >= best {
                continue;
            }
            for &v in stops {
                let cost = au + self.transit.get(u, v) + self.to_stop(b, v);
                if cost < best {
                    best = cost;
                }
            }
        }
        best
    }

    /// Every stop index in range and the budget respected.
    pub fn check_solution(&self, sol: &Solution) -> Result<()> {
        self.check_stops(sol)?;
        if sol.len() > self.k {
            return Err(Error::OverBudget { size: sol.len(), k: self.k });
        }
        Ok(())
    }

    /// Every stop index in range. Deviation sets may exceed the budget.
    pub fn check_stops(&self, sol: &Solution) -> Result<()> {
        if let Some(&bad) = sol.stops().iter().find(|&&c| c >= self.m()) {
            return Err(Error::CandidateOutOfRange { index: bad, m: self.m() });
        }
        Ok(())
    }

    /// c_i(Y): the cheaper of walking and the best walk–ride–walk route
    /// through an ordered pair of selected stops.
    pub fn agent_cost(&self, i: usize, sol: &Solution) -> Result<f64> {
        if i >= self.n() {
            return Err(Error::AgentOutOfRange { index: i, n: self.n() });
        }
        self.check_stops(sol)?;
        Ok(self.cost_of(i, sol.stops()))
    }

    /// Sum of agent costs.
    pub fn total_cost(&self, sol: &Solution) -> Result<f64> {
        self.check_stops(sol)?;
        Ok((0..self.n()).map(|i| self.cost_of(i, sol.stops())).sum())
    }

    pub fn costs(&self, sol: &Solution) -> Result<Vec<f64>> {
        self.check_stops(sol)?;
        Ok((0..self.n()).map(|i| self.cost_of(i, sol.stops())).collect())
    }
}

/// Every route cost a → u → v → b, precomputed for repeated evaluation.
#[derive(Clone, Debug)]
pub struct RouteTable {
    n: usize,
    m: usize,
    walk: Vec<f64>,
    routes: Vec<f64>,
}

impl RouteTable {
    pub fn new(inst: &Instance) -> Self {
        let (n, m) = (inst.n(), inst.m());
        let mut routes = Vec::with_capacity(n * m * m);
        for i in 0..n {
            for u in 0..m {
                for v in 0..m {
                    routes.push(inst.route(i, u, v));
                }
            }
        }
        let walk = (0..n).map(|i| inst.walk_cost(i)).collect();
        RouteTable { n, m, walk, routes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn route(&self, i: usize, u: usize, v: usize) -> f64 {
        self.routes[(i * self.m + u) * self.m + v]
    }

    #[inline]
    pub fn walk(&self, i: usize) -> f64 {
        self.walk[i]
    }

    /// c_i of an unordered pair.
    #[inline]
    pub fn pair_cost(&self, i: usize, u: usize, v: usize) -> f64 {
        self.walk[i]
            .min(self.route(i, u, u))
            .min(self.route(i, v, v))
            .min(self.route(i, u, v))
            .min(self.route(i, v, u))
    }

    /// c_i of an arbitrary stop set.
    pub fn cost(&self, i: usize, stops: &[usize]) -> f64 {
        let mut best = self.walk[i];
        for &u in stops {
            for &v in stops {
                best = best.min(self.route(i, u, v));
            }
        }
        best
    }

    /// c_i(T ∪ {s}) from c_i(T).
    #[inline]
    pub fn extend(&self, i: usize, current: f64, stops: &[usize], s: usize) -> f64 {
        let mut best = current.min(self.route(i, s, s));
        for &t in stops {
            best = best.min(self.route(i, t, s)).min(self.route(i, s, t));
        }
        best
    }
}

/// Lists every violated invariant. An empty list means the instance is valid.
pub fn validate_instance(inst: &Instance) -> Vec<Issue> {
    let mut out: Vec<Issue> = structure_issues(
        &inst.endpoints,
        &inst.candidates,
        &inst.walk,
        &inst.transit,
        inst.k,
        inst.labels.as_ref(),
    )
    .into_iter()
    .map(Issue::Structure)
    .collect();
    out.extend(inst.walk.issues().into_iter().map(Issue::Walk));
    out.extend(inst.transit.issues().into_iter().map(Issue::Transit));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(points: &[f64]) -> Metric {
        Metric::from_fn(points.len(), |i, j| (points[i] - points[j]).abs())
    }

    #[test]
    fn empty_solution_walks() {
        let walk = line(&[0.0, 10.0, 1.0, 9.0]);
        let inst = Instance::new(vec![(0, 1)], vec![2, 3], walk, Metric::zeros(2), 2).unwrap();
        assert_eq!(inst.agent_cost(0, &Solution::empty()).unwrap(), 10.0);
        assert_eq!(inst.agent_cost(0, &Solution::new([0, 1])).unwrap(), 2.0);
        assert_eq!(inst.agent_cost(0, &Solution::new([0])).unwrap(), 10.0);
    }

    #[test]
    fn ordered_pair_uses_transit() {
        let walk = line(&[0.0, 10.0, 1.0, 9.0]);
        let transit = Metric::from_rows(&[vec![0.0, 3.0], vec![3.0, 0.0]]).unwrap();
        let inst = Instance::new(vec![(0, 1)], vec![2, 3], walk, transit, 2).unwrap();
        assert!(!inst.is_null_transit());
        assert_eq!(inst.agent_cost(0, &Solution::new([0, 1])).unwrap(), 5.0);
    }

    #[test]
    fn degenerate_agent_costs_zero() {
        let walk = line(&[4.0, 1.0]);
        let inst = Instance::new(vec![(0, 0)], vec![1], walk, Metric::zeros(1), 1).unwrap();
        assert_eq!(inst.agent_cost(0, &Solution::new([0])).unwrap(), 0.0);
    }

    #[test]
    fn out_of_range_is_rejected() {
        let walk = line(&[0.0, 1.0]);
        let inst = Instance::new(vec![(0, 1)], vec![1], walk.clone(), Metric::zeros(1), 1).unwrap();
        assert!(matches!(inst.agent_cost(1, &Solution::empty()), Err(Error::AgentOutOfRange { .. })));
        assert!(matches!(
            inst.agent_cost(0, &Solution::new([3])),
            Err(Error::CandidateOutOfRange { .. })
        ));
        assert!(Instance::new(vec![(0, 2)], vec![1], walk.clone(), Metric::zeros(1), 1).is_err());
        assert!(Instance::new(vec![(0, 1)], vec![1], walk, Metric::zeros(1), 2).is_err());
    }

    #[test]
    fn total_cost_of_empty_instance() {
        let inst = Instance::new(vec![], vec![0], Metric::zeros(1), Metric::zeros(1), 1).unwrap();
        assert_eq!(inst.total_cost(&Solution::empty()).unwrap(), 0.0);
    }
}
