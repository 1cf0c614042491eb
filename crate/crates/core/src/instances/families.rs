//! The hand-built worst-case instances.
//!
//! Agents, candidates and labels use the usual τ, c and y names of each
//! construction. Points that share a location share one point index, so an
//! endpoint drawn on top of a stop is that stop's point.

use std::collections::BTreeMap;
use std::fmt;

use crate::clustering::LineClusteringInstance;
use crate::error::{Error, Result};
use crate::metric::Metric;
use crate::model::Instance;

const SQRT2: f64 = std::f64::consts::SQRT_2;

/// Factor applied to the largest finite structural distance to obtain the
/// "far away" distance used for decoy stops.
pub const FAR_FACTOR: f64 = 1e6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Six agents on a 5 × 5 grid with four candidates, Euclidean walking
    /// distance, free transit, k = 3.
    MotivatingFig1,
    /// Three agents and six stops in two infinitely separated regions,
    /// k = 3: no solution is better than ((1+√3)/2)-JR.
    JrLowerTable3,
    /// Three unit claws, nine candidate centers, k = 6. Parameter `case`
    /// (1 or 2, default 2) selects the agent pairing that defeats the
    /// corresponding class of clustering solutions.
    ClusteringImpossibilityFig4,
    /// Two lines, seven agents, six stops, k = 4, parameter `eps`. Greedy
    /// Capture picks {y1, y2} and is no better than (2+√5−ε)-JR.
    GcJrTightFig5,
    /// Groups N1, N2 (6H−1 agents each) and N3 (3H+2), seven stops, k = 5.
    /// Parameters `eps` and either `h` or `delta` (H = ⌈1/(3δ)⌉).
    GcCoreTightTable4,
    /// Four agents, four stops, k = 3, parameter `eps` (0 allowed).
    EcaJrTightTable5,
    /// The complete-graph construction with parameters `gamma` ≥ 1 and
    /// integer `r` ≥ 2; z = ⌈rγ/(r−1) + 1⌉ vertices. With `grouped` = 1
    /// (the default) rides are free among vertex stops and within each
    /// edge's pair of stops and unavailable otherwise; 0 makes all rides
    /// free.
    EcaCoreFailKz,
    /// The Greedy Capture line pair with the far stops y3..y6, parameters
    /// `lambda` ∈ (0, 1] and `eps`.
    HybridJrTightFig6,
    /// Four zones and six agent groups, twelve stops, k = 8. Parameters
    /// `lambda` ∈ (0, 1], `eps` and either `h` ≥ 2 or `delta`
    /// (H = ⌈2/δ⌉). `grouped` = 1 restricts free rides to within the τ
    /// stops and within the c stops; the default 0 makes all rides free.
    HybridCoreTightTable6,
    /// Datapoints 1, 3, 8, 10 and centers 2, 6, 9, 13 on a line, k = 2;
    /// parameter `ell` (default 1).
    LineFig7,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::MotivatingFig1,
        Family::JrLowerTable3,
        Family::ClusteringImpossibilityFig4,
        Family::GcJrTightFig5,
        Family::GcCoreTightTable4,
        Family::EcaJrTightTable5,
        Family::EcaCoreFailKz,
        Family::HybridJrTightFig6,
        Family::HybridCoreTightTable6,
        Family::LineFig7,
    ];

    /// Command-line name.
    pub fn name(&self) -> &'static str {
        match self {
            Family::MotivatingFig1 => "fig1",
            Family::JrLowerTable3 => "table3",
            Family::ClusteringImpossibilityFig4 => "fig4",
            Family::GcJrTightFig5 => "gc-jr-tight",
            Family::GcCoreTightTable4 => "gc-core-tight",
            Family::EcaJrTightTable5 => "eca-jr-tight",
            Family::EcaCoreFailKz => "kz",
            Family::HybridJrTightFig6 => "hybrid-jr-tight",
            Family::HybridCoreTightTable6 => "hybrid-core-tight",
            Family::LineFig7 => "line-fig7",
        }
    }

    fn aliases(&self) -> &'static [&'static str] {
        match self {
            Family::MotivatingFig1 => &["motivating"],
            Family::JrLowerTable3 => &["jr-lower"],
            Family::ClusteringImpossibilityFig4 => &["clustering-impossibility"],
            Family::GcJrTightFig5 => &["fig5"],
            Family::GcCoreTightTable4 => &["table4"],
            Family::EcaJrTightTable5 => &["table5"],
            Family::EcaCoreFailKz => &["eca-core-fail"],
            Family::HybridJrTightFig6 => &["fig6"],
            Family::HybridCoreTightTable6 => &["table6"],
            Family::LineFig7 => &["fig7"],
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        let s = s.trim().to_ascii_lowercase().replace('_', "-");
        Family::ALL.into_iter().find(|f| f.name() == s || f.aliases().contains(&s.as_str()))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family and its numeric parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: BTreeMap<String, f64>,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec { family, params: BTreeMap::new() }
    }

    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    fn get(&self, name: &str) -> Option<f64> {
        self.params.get(name).copied()
    }

    fn require(&self, name: &str) -> Result<f64> {
        self.get(name).ok_or_else(|| {
            Error::InvalidParameter(format!("family {} requires parameter `{name}`", self.family))
        })
    }

    fn eps(&self, allow_zero: bool) -> Result<f64> {
        let eps = self.require("eps")?;
        let ok = if allow_zero { (0.0..1.0).contains(&eps) } else { eps > 0.0 && eps < 1.0 };
        if !ok {
            let lo = if allow_zero { "0 <= eps" } else { "0 < eps" };
            return Err(Error::InvalidParameter(format!("{}: need {lo} < 1, got {eps}", self.family)));
        }
        Ok(eps)
    }

    fn lambda(&self) -> Result<f64> {
        let l = self.require("lambda")?;
        if !(l > 0.0 && l <= 1.0) {
            return Err(Error::InvalidParameter(format!("{}: need 0 < lambda <= 1, got {l}", self.family)));
        }
        Ok(l)
    }

    /// A 0/1 parameter.
    fn flag(&self, name: &str, default: bool) -> Result<bool> {
        match self.get(name) {
            None => Ok(default),
            Some(v) if v == 0.0 => Ok(false),
            Some(v) if v == 1.0 => Ok(true),
            Some(v) => Err(Error::InvalidParameter(format!("{}: `{name}` must be 0 or 1, got {v}", self.family))),
        }
    }

    fn integer(&self, name: &str, value: f64, min: u64) -> Result<u64> {
        if value.fract() != 0.0 || value < min as f64 || value > 1e6 {
            return Err(Error::InvalidParameter(format!(
                "{}: `{name}` must be an integer >= {min}, got {value}",
                self.family
            )));
        }
        Ok(value as u64)
    }

    /// H from `h`, or from `delta` through `from_delta`.
    fn h(&self, min: u64, from_delta: impl Fn(f64) -> f64) -> Result<u64> {
        match (self.get("h"), self.get("delta")) {
            (Some(h), _) => self.integer("h", h, min),
            (None, Some(d)) if d > 0.0 => self.integer("h", from_delta(d).ceil().max(min as f64), min),
            (None, Some(d)) => Err(Error::InvalidParameter(format!("{}: need delta > 0, got {d}", self.family))),
            (None, None) => Err(Error::InvalidParameter(format!(
                "family {} requires parameter `h` or `delta`",
                self.family
            ))),
        }
    }
}

/// Output of [`generate`].
#[derive(Clone, Debug, PartialEq)]
pub enum Generated {
    Trsp(Instance),
    Line(LineClusteringInstance),
}

impl Generated {
    pub fn into_trsp(self) -> Option<Instance> {
        match self {
            Generated::Trsp(i) => Some(i),
            Generated::Line(_) => None,
        }
    }

    pub fn into_line(self) -> Option<LineClusteringInstance> {
        match self {
            Generated::Line(l) => Some(l),
            Generated::Trsp(_) => None,
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Generated> {
    let inst = match spec.family {
        Family::MotivatingFig1 => fig1(),
        Family::JrLowerTable3 => table3(),
        Family::ClusteringImpossibilityFig4 => fig4(spec)?,
        Family::GcJrTightFig5 => fig5(spec.eps(false)?),
        Family::GcCoreTightTable4 => table4(spec.h(1, |d| 1.0 / (3.0 * d))?, spec.eps(false)?),
        Family::EcaJrTightTable5 => table5(spec.eps(true)?),
        Family::EcaCoreFailKz => kz(spec)?,
        Family::HybridJrTightFig6 => fig6(spec.lambda()?, spec.eps(false)?),
        Family::HybridCoreTightTable6 => table6(
            spec.h(2, |d| 2.0 / d)?,
            spec.lambda()?,
            spec.eps(false)?,
            spec.flag("grouped", false)?,
        ),
        Family::LineFig7 => {
            let ell = spec.get("ell").unwrap_or(1.0);
            let ell = spec.integer("ell", ell, 1)? as usize;
            return Ok(Generated::Line(LineClusteringInstance::new(
                vec![1.0, 3.0, 8.0, 10.0],
                vec![2.0, 6.0, 9.0, 13.0],
                2,
                ell,
            )?));
        }
    };
    Ok(Generated::Trsp(inst))
}

/// d̂ for the hybrid JR construction; equals (√5−1)/2 at λ = 1.
pub fn hybrid_jr_dhat(lambda: f64) -> f64 {
    ((lambda * lambda + 10.0 * lambda + 9.0).sqrt() - lambda - 1.0) / 4.0
}

/// q for the hybrid core construction.
pub fn hybrid_core_q(lambda: f64) -> f64 {
    ((4.0 * lambda * lambda + 12.0 * lambda + 1.0).sqrt() - 2.0 * lambda - 1.0) / (4.0 * lambda)
}

/// Number of vertices of the complete-graph construction.
pub fn kz_vertices(gamma: f64, r: u64) -> u64 {
    (r as f64 / (r as f64 - 1.0) * gamma + 1.0 - 1e-12).ceil() as u64
}

/// Collects named points, weighted edges, agents and stops, and closes the
/// graph into a shortest-path metric.
#[derive(Default)]
struct Builder {
    names: Vec<String>,
    edges: Vec<(usize, usize, f64)>,
    agents: Vec<(usize, usize)>,
    stops: Vec<(usize, String)>,
}

impl Builder {
    fn point(&mut self, name: impl Into<String>) -> usize {
        self.names.push(name.into());
        self.names.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize, w: f64) {
        self.edges.push((u, v, w));
    }

    /// Points on a line at the given coordinates, joined in order.
    fn line(&mut self, points: &[(usize, f64)]) {
        let mut sorted = points.to_vec();
        sorted.sort_by(|x, y| x.1.total_cmp(&y.1));
        for w in sorted.windows(2) {
            self.edge(w[0].0, w[1].0, w[1].1 - w[0].1);
        }
    }

    fn stop(&mut self, point: usize, label: impl Into<String>) {
        self.stops.push((point, label.into()));
    }

    fn agents(&mut self, count: usize, a: usize, b: usize) {
        for _ in 0..count {
            self.agents.push((a, b));
        }
    }

    fn largest_edge(&self) -> f64 {
        self.edges.iter().map(|e| e.2).filter(|w| w.is_finite()).fold(0.0, f64::max)
    }

    fn build(self, k: usize) -> Instance {
        let walk = Metric::from_edges(self.names.len(), &self.edges);
        self.finish(walk, k)
    }

    fn finish(self, walk: Metric, k: usize) -> Instance {
        let m = self.stops.len();
        self.finish_with_transit(walk, Metric::zeros(m), k)
    }

    fn finish_with_transit(self, walk: Metric, transit: Metric, k: usize) -> Instance {
        let (candidates, labels): (Vec<usize>, Vec<String>) = self.stops.into_iter().unzip();
        Instance::new(self.agents, candidates, walk, transit, k)
            .and_then(|i| i.with_labels(labels))
            .expect("family generators build consistent instances")
    }
}

fn fig1() -> Instance {
    let mut b = Builder::default();
    let mut coords = Vec::new();
    let mut at = |b: &mut Builder, name: &str, x: f64, y: f64| {
        coords.push((x, y));
        b.point(name)
    };
    let stops = [("c1", 0.0, 5.0), ("c2", 0.0, 2.0), ("c3", 5.0, 5.0), ("c4", 5.0, 2.0)];
    for (name, x, y) in stops {
        let p = at(&mut b, name, x, y);
        b.stop(p, name);
    }
    let a = [(-1.0, 5.0), (0.0, 6.0), (1.0, 5.0), (0.0, 4.0), (-1.0, 2.0), (5.0, 6.0)];
    let z = [(4.0, 2.0), (6.0, 2.0), (5.0, 1.0), (5.0, 3.0), (0.0, 1.0), (6.0, 5.0)];
    for i in 0..6 {
        let pa = at(&mut b, &format!("a{}", i + 1), a[i].0, a[i].1);
        let pb = at(&mut b, &format!("b{}", i + 1), z[i].0, z[i].1);
        b.agents(1, pa, pb);
    }
    let walk = Metric::from_fn(coords.len(), |i, j| {
        let (dx, dy) = (coords[i].0 - coords[j].0, coords[i].1 - coords[j].1);
        dx.hypot(dy)
    });
    b.finish(walk, 3)
}

fn table3() -> Instance {
    let s3 = 3f64.sqrt();
    let far = 2.0 + s3;
    let mut b = Builder::default();
    let a: Vec<usize> = (1..=3).map(|i| b.point(format!("a{i}"))).collect();
    let z: Vec<usize> = (1..=3).map(|i| b.point(format!("b{i}"))).collect();
    let t: Vec<usize> = (1..=6).map(|i| b.point(format!("τ{i}"))).collect();
    // Each stop is 2+√3, √3 and 1 from the three endpoints of its region,
    // rotating by one position per stop.
    let rows = [[far, s3, 1.0], [s3, 1.0, far], [1.0, far, s3]];
    for (j, row) in rows.iter().enumerate() {
        for i in 0..3 {
            b.edge(t[j], a[i], row[i]);
            b.edge(t[j + 3], z[i], row[i]);
        }
    }
    for i in 0..3 {
        b.agents(1, a[i], z[i]);
    }
    for (j, &p) in t.iter().enumerate() {
        b.stop(p, format!("τ{}", j + 1));
    }
    b.build(3)
}

fn fig4(spec: &FamilySpec) -> Result<Instance> {
    let case = spec.integer("case", spec.get("case").unwrap_or(2.0), 1)?;
    if case > 2 {
        return Err(Error::InvalidParameter(format!("fig4: case must be 1 or 2, got {case}")));
    }
    let mut b = Builder::default();
    let x: Vec<usize> = (1..=12).map(|i| b.point(format!("x{i}"))).collect();
    // Claw g has arms x_{4g+1}, x_{4g+2}, x_{4g+3} around the hub x_{4g+4}.
    for g in 0..3 {
        for arm in 0..3 {
            b.edge(x[4 * g + arm], x[4 * g + 3], 1.0);
        }
    }
    for g in 0..3 {
        for arm in 0..3 {
            let j = 4 * g + arm;
            b.stop(x[j], format!("x{}", j + 1));
        }
    }
    let pairs: [(usize, usize); 6] = if case == 1 {
        [(1, 8), (4, 5), (2, 3), (6, 7), (9, 10), (11, 12)]
    } else {
        [(4, 7), (3, 8), (1, 2), (5, 6), (9, 10), (11, 12)]
    };
    for (p, q) in pairs {
        b.agents(1, x[p - 1], x[q - 1]);
    }
    Ok(b.build(6))
}

fn fig5(eps: f64) -> Instance {
    let dhat = (5f64.sqrt() - 1.0) / 2.0;
    let mut b = Builder::default();
    let a1 = b.point("a1/y3");
    let t1 = b.point("τ1/a2/a3");
    let a4 = b.point("a4");
    let y1 = b.point("y1/a5/a6/a7");
    let b3 = b.point("b3/y4");
    let t2 = b.point("τ2/b1/b4");
    let b2 = b.point("b2");
    let y2 = b.point("y2/b5/b6/b7");
    let end = 2.0 + dhat - eps / 8.0;
    b.line(&[(a1, 0.0), (t1, 1.0), (a4, 1.0 + dhat), (y1, end)]);
    b.line(&[(b3, 0.0), (t2, 1.0), (b2, 1.0 + dhat), (y2, end)]);
    b.agents(1, a1, t2);
    b.agents(1, t1, b2);
    b.agents(1, t1, b3);
    b.agents(1, a4, t2);
    b.agents(3, y1, y2);
    for (p, name) in [(t1, "τ1"), (t2, "τ2"), (y1, "y1"), (y2, "y2"), (a1, "y3"), (b3, "y4")] {
        b.stop(p, name);
    }
    b.build(4)
}

fn table4(h: u64, eps: f64) -> Instance {
    let h = h as usize;
    let near = SQRT2 - 1.0;
    let big = 1.0 + SQRT2 - eps;
    let mid = 1.0 - near * eps;
    let mut b = Builder::default();
    let a: Vec<usize> = (1..=3).map(|i| b.point(format!("a{i}"))).collect();
    let z: Vec<usize> = (1..=3).map(|i| b.point(format!("b{i}"))).collect();
    let t: Vec<usize> = (1..=7).map(|i| b.point(format!("τ{i}"))).collect();
    for (side, (s1, s2)) in [(&a, (t[0], t[1])), (&z, (t[2], t[3]))] {
        b.edge(s1, side[0], 1.0);
        b.edge(s1, side[1], near);
        b.edge(s1, side[2], 1.0);
        b.edge(s2, side[0], big);
        b.edge(s2, side[1], mid);
        b.edge(s2, side[2], mid);
    }
    let far = FAR_FACTOR * b.largest_edge();
    // τ5 and τ7 sit far from the a-side endpoints, τ6 far from the b-side.
    for (stop, side) in [(t[4], &a), (t[5], &z), (t[6], &a)] {
        for &p in side.iter() {
            b.edge(stop, p, far);
        }
    }
    b.agents(6 * h - 1, a[0], z[0]);
    b.agents(6 * h - 1, a[1], z[1]);
    b.agents(3 * h + 2, a[2], z[2]);
    for (j, &p) in t.iter().enumerate() {
        b.stop(p, format!("τ{}", j + 1));
    }
    b.build(5)
}

fn table5(eps: f64) -> Instance {
    let near = SQRT2 - 1.0;
    let far = 1.0 + SQRT2;
    let mid = 1.0 - eps / 4.0;
    let mut b = Builder::default();
    let a1 = b.point("a1");
    let a23 = b.point("a2/a3");
    let a4 = b.point("a4");
    let b1 = b.point("b1");
    let b23 = b.point("b2/b3");
    let b4 = b.point("b4");
    let t: Vec<usize> = (1..=4).map(|i| b.point(format!("τ{i}"))).collect();
    for (side, (s1, s2)) in [([a1, a23, a4], (t[0], t[1])), ([b1, b23, b4], (t[2], t[3]))] {
        b.edge(s1, side[0], 1.0);
        b.edge(s1, side[1], near);
        b.edge(s1, side[2], far);
        b.edge(s2, side[0], far);
        b.edge(s2, side[1], mid);
        b.edge(s2, side[2], mid);
    }
    b.agents(1, a1, b1);
    b.agents(2, a23, b23);
    b.agents(1, a4, b4);
    for (j, &p) in t.iter().enumerate() {
        b.stop(p, format!("τ{}", j + 1));
    }
    b.build(3)
}

/// Free rides between stops of the same group, none across groups.
fn grouped_transit(group: &[usize]) -> Metric {
    Metric::from_fn(group.len(), |u, v| if group[u] == group[v] { 0.0 } else { f64::INFINITY })
}

fn kz(spec: &FamilySpec) -> Result<Instance> {
    let gamma = spec.require("gamma")?;
    if !(gamma >= 1.0) || !gamma.is_finite() {
        return Err(Error::InvalidParameter(format!("kz: need gamma >= 1, got {gamma}")));
    }
    let r = spec.integer("r", spec.require("r")?, 2)?;
    let z = kz_vertices(gamma, r) as usize;
    if z > 40 {
        return Err(Error::InvalidParameter(format!("kz: z = {z} vertices is too large")));
    }
    let r = r as usize;
    let grouped = spec.flag("grouped", true)?;
    let mut b = Builder::default();
    let vertex: Vec<usize> = (1..=z).map(|i| b.point(format!("τ{i}"))).collect();
    for &v in &vertex {
        let label = b.names[v].clone();
        b.stop(v, label);
    }
    // Rides are free among the vertex stops and between the two stops of
    // one edge, impossible otherwise.
    let mut group = vec![0usize; z];
    let mut edges = 0;
    for i in 0..z {
        for j in i + 1..z {
            // Near vertex i: stop τ(j,i) one unit out, agent r's endpoint
            // one unit further; mirrored near vertex j.
            let near_i = b.point(format!("τ{},{}", j + 1, i + 1));
            let out_i = b.point(format!("a[{},{}]", i + 1, j + 1));
            let near_j = b.point(format!("τ{},{}", i + 1, j + 1));
            let out_j = b.point(format!("b[{},{}]", i + 1, j + 1));
            b.edge(vertex[i], near_i, 1.0);
            b.edge(near_i, out_i, 1.0);
            b.edge(vertex[j], near_j, 1.0);
            b.edge(near_j, out_j, 1.0);
            b.stop(near_i, format!("τ{},{}", j + 1, i + 1));
            b.stop(near_j, format!("τ{},{}", i + 1, j + 1));
            edges += 1;
            group.extend([edges, edges]);
            b.agents(r - 1, vertex[i], vertex[j]);
            b.agents(1, out_i, out_j);
        }
    }
    if !grouped {
        return Ok(b.build(z * z - z));
    }
    let walk = Metric::from_edges(b.names.len(), &b.edges);
    Ok(b.finish_with_transit(walk, grouped_transit(&group), z * z - z))
}

fn fig6(lambda: f64, eps: f64) -> Instance {
    let dhat = hybrid_jr_dhat(lambda);
    let mut b = Builder::default();
    let a1 = b.point("a1");
    let t1 = b.point("τ1/a2/a3");
    let a4 = b.point("a4");
    let y1 = b.point("y1/a5/a6/a7");
    let b3 = b.point("b3");
    let t2 = b.point("τ2/b1/b4");
    let b2 = b.point("b2");
    let y2 = b.point("y2/b5/b6/b7");
    let top = 1.0 + dhat + lambda * (1.0 - eps / 2.0);
    let bottom = 2.0 + dhat - (1.0 - lambda / 2.0) * eps;
    b.line(&[(a1, 0.0), (t1, 1.0), (a4, 1.0 + dhat), (y1, top)]);
    b.line(&[(b3, 0.0), (t2, 1.0), (b2, 1.0 + dhat), (y2, bottom)]);
    let far = FAR_FACTOR * top.max(bottom);
    let decoys: Vec<usize> = (3..=6).map(|i| b.point(format!("y{i}"))).collect();
    for (d, line) in decoys.iter().zip([[a1, t1, a4, y1], [a1, t1, a4, y1], [b3, t2, b2, y2], [b3, t2, b2, y2]]) {
        for p in line {
            b.edge(*d, p, far);
        }
    }
    b.agents(1, a1, t2);
    b.agents(1, t1, b2);
    b.agents(1, t1, b3);
    b.agents(1, a4, t2);
    b.agents(3, y1, y2);
    for (p, name) in [(t1, "τ1"), (t2, "τ2"), (y1, "y1"), (y2, "y2")] {
        b.stop(p, name);
    }
    for (j, &d) in decoys.iter().enumerate() {
        b.stop(d, format!("y{}", j + 3));
    }
    b.build(4)
}

fn table6(h: u64, lambda: f64, eps: f64, grouped: bool) -> Instance {
    let h = h as usize;
    let q = hybrid_core_q(lambda);
    let half = 1.0 / (2.0 * lambda);
    let mut b = Builder::default();
    let mut x = Vec::new();
    let mut y = Vec::new();
    let mut zz = Vec::new();
    let mut tau = Vec::new();
    let mut c = Vec::new();
    for j in 1..=4 {
        x.push(b.point(format!("x{j}")));
        y.push(b.point(format!("y{j}")));
        zz.push(b.point(format!("z{j}")));
        tau.push(b.point(format!("τ{j}")));
        c.push(b.point(format!("c{j}")));
    }
    for j in 0..4 {
        b.edge(x[j], tau[j], 1.0);
        b.edge(x[j], c[j], 1.0 + q + half - eps);
        b.edge(y[j], tau[j], q);
        b.edge(y[j], c[j], half - q * eps);
        b.edge(zz[j], tau[j], 1.0 + q);
        b.edge(zz[j], c[j], half - q * eps);
    }
    let far = FAR_FACTOR * b.largest_edge();
    let decoys: Vec<usize> = (5..=8).map(|j| b.point(format!("c{j}"))).collect();
    for j in 0..4 {
        for p in [x[j], y[j], zz[j]] {
            b.edge(decoys[j], p, far);
        }
    }
    b.agents(h - 1, x[0], x[2]);
    b.agents(h - 1, x[1], x[3]);
    b.agents(h - 1, y[0], y[1]);
    b.agents(h - 1, y[2], y[3]);
    b.agents(2, zz[0], zz[1]);
    b.agents(2, zz[2], zz[3]);
    for j in 0..4 {
        b.stop(tau[j], format!("τ{}", j + 1));
    }
    for j in 0..4 {
        b.stop(c[j], format!("c{}", j + 1));
    }
    for (j, &d) in decoys.iter().enumerate() {
        b.stop(d, format!("c{}", j + 5));
    }
    if !grouped {
        return b.build(8);
    }
    // τ stops form one group, c stops another.
    let walk = Metric::from_edges(b.names.len(), &b.edges);
    let group: Vec<usize> = (0..12).map(|c| usize::from(c >= 4)).collect();
    b.finish_with_transit(walk, grouped_transit(&group), 8)
}
