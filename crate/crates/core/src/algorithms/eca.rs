use super::sweep::{kth_smallest, reached};
use crate::error::{Error, Result};
use crate::model::{Instance, RouteTable, Solution};
use crate::trace::{RunTrace, Token};

/// Per-agent costs of the current stop set, kept in a form that makes
/// c_i(Y ∪ {u, v}) cheap to evaluate.
pub(crate) struct PairCosts<'a> {
    inst: &'a Instance,
    table: RouteTable,
    pub(crate) cur: Vec<f64>,
    // best a_i → y → (ride to t) over y ∈ Y, indexed [i * m + t]
    into: Vec<f64>,
    // best (ride from s) → y → b_i over y ∈ Y, indexed [i * m + s]
    out_of: Vec<f64>,
}

impl<'a> PairCosts<'a> {
    pub(crate) fn new(inst: &'a Instance) -> Self {
        let (n, m) = (inst.n(), inst.m());
        let table = RouteTable::new(inst);
        let cur = (0..n).map(|i| table.walk(i)).collect();
        PairCosts {
            inst,
            table,
            cur,
            into: vec![f64::INFINITY; n * m],
            out_of: vec![f64::INFINITY; n * m],
        }
    }

    pub(crate) fn add_stop(&mut self, y: usize) {
        let inst = self.inst;
        let m = inst.m();
        for i in 0..inst.n() {
            let (a, b) = inst.endpoints()[i];
            let ay = inst.to_stop(a, y);
            let yb = inst.to_stop(b, y);
            for t in 0..m {
                let into = ay + inst.transit().get(y, t);
                if into < self.into[i * m + t] {
                    self.into[i * m + t] = into;
                }
                let out = inst.transit().get(t, y) + yb;
                if out < self.out_of[i * m + t] {
                    self.out_of[i * m + t] = out;
                }
            }
            let c = self.cur[i]
                .min(self.into[i * m + y] + yb)
                .min(ay + self.out_of[i * m + y]);
            self.cur[i] = c;
        }
    }

    /// c_i(Y ∪ {u, v}).
    pub(crate) fn with_pair(&self, i: usize, u: usize, v: usize) -> f64 {
        let inst = self.inst;
        let m = inst.m();
        let (a, b) = inst.endpoints()[i];
        let mixed = |s: usize| {
            (self.into[i * m + s] + inst.to_stop(b, s)).min(inst.to_stop(a, s) + self.out_of[i * m + s])
        };
        self.cur[i].min(self.table.pair_cost(i, u, v)).min(mixed(u)).min(mixed(v))
    }
}

/// Unordered candidate pairs not already inside `sol`, in lexicographic
/// order.
pub(crate) fn open_pairs(m: usize, sol: &Solution) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..m)
        .flat_map(move |u| (u + 1..m).map(move |v| (u, v)))
        .filter(move |&(u, v)| !(sol.contains(u) && sol.contains(v)))
}

/// Like [`open_pairs`], lexicographic in the positions of `order`.
fn ordered_pairs<'a>(order: &'a [usize], sol: &'a Solution) -> impl Iterator<Item = (usize, usize)> + 'a {
    (0..order.len())
        .flat_map(move |p| (p + 1..order.len()).map(move |q| (order[p], order[q])))
        .filter(move |&(u, v)| !(sol.contains(u) && sol.contains(v)))
}

/// The Expanding Cost Algorithm: grow a cost radius r, retire agents whose
/// current cost is at most r, and open a pair of stops once ⌈2n/k⌉ active
/// agents could reach their destinations with cost at most r using it.
///
/// Pairs that qualify at the same radius open in lexicographic index order.
pub fn eca(inst: &Instance) -> Result<(Solution, RunTrace)> {
    let order: Vec<usize> = (0..inst.m()).collect();
    eca_with_order(inst, &order)
}

/// [`eca`] with ties broken by position in `order`, a permutation of the
/// candidate indices.
pub fn eca_with_order(inst: &Instance, order: &[usize]) -> Result<(Solution, RunTrace)> {
    let n = inst.n();
    let m = inst.m();
    let mut seen = vec![false; m];
    if order.len() != m || !order.iter().all(|&c| c < m && !std::mem::replace(&mut seen[c], true)) {
        return Err(Error::InvalidParameter(format!("tie-break order must be a permutation of 0..{m}")));
    }
    let thr = inst.threshold();
    let mut pc = PairCosts::new(inst);
    let mut active = vec![true; n];
    let mut sol = Solution::empty();
    let mut trace = RunTrace::default();
    let mut buf = Vec::with_capacity(n);

    loop {
        let mut r = (0..n).filter(|&i| active[i]).map(|i| pc.cur[i]).fold(f64::INFINITY, f64::min);
        if sol.len() + 2 <= inst.k() {
            for (u, v) in ordered_pairs(order, &sol) {
                buf.clear();
                buf.extend((0..n).filter(|&i| active[i]).map(|i| pc.with_pair(i, u, v)));
                r = r.min(kth_smallest(&mut buf, thr));
            }
        }
        if !r.is_finite() {
            break;
        }

        let retire = |active: &mut Vec<bool>, pc: &PairCosts| -> Vec<Token> {
            let gone: Vec<usize> = (0..n).filter(|&i| active[i] && reached(pc.cur[i], r)).collect();
            for &i in &gone {
                active[i] = false;
            }
            gone.into_iter().map(Token::Agent).collect()
        };
        let gone = retire(&mut active, &pc);
        trace.push(r, vec![], gone);

        while sol.len() + 2 <= inst.k() {
            let found = ordered_pairs(order, &sol).find_map(|(u, v)| {
                let s: Vec<usize> =
                    (0..n).filter(|&i| active[i] && reached(pc.with_pair(i, u, v), r)).collect();
                (s.len() >= thr).then_some((u, v, s))
            });
            let Some((u, v, s)) = found else { break };
            let mut opened = Vec::new();
            for c in [u, v] {
                if !sol.contains(c) {
                    sol.insert(c);
                    pc.add_stop(c);
                    opened.push(c);
                }
            }
            for &i in &s {
                active[i] = false;
            }
            let mut gone: Vec<Token> = s.into_iter().map(Token::Agent).collect();
            gone.extend(retire(&mut active, &pc));
            trace.push(r, opened, gone);
        }
    }
    let rest: Vec<Token> = (0..n).filter(|&i| active[i]).map(Token::Agent).collect();
    trace.push(f64::INFINITY, vec![], rest);
    Ok((sol, trace))
}
