use super::eca::{open_pairs, PairCosts};
use super::sweep::{kth_smallest, reached};
use crate::error::{Error, Result};
use crate::metric::TOL;
use crate::model::{Instance, Solution};
use crate::trace::{RunTrace, Token};

/// Rate at which the distance balls grow relative to the cost radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HybridParams {
    lambda: f64,
}

impl HybridParams {
    pub fn new(lambda: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidParameter(format!("lambda = {lambda} must lie in [0, 1]")));
        }
        Ok(HybridParams { lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// The cost radius at which a ball of radius `d` is reached.
    fn trigger(&self, d: f64) -> f64 {
        if self.lambda > 0.0 {
            d / self.lambda
        } else if d <= TOL {
            0.0
        } else {
            f64::INFINITY
        }
    }
}

/// One sweep running both rules: pairs open as in the Expanding Cost
/// Algorithm at cost radius r, single stops open as in Greedy Capture at
/// distance λ·r. At equal radius the pair rule goes first.
pub fn hybrid(inst: &Instance, params: HybridParams) -> Result<(Solution, RunTrace)> {
    let n = inst.n();
    let m = inst.m();
    let k = inst.k();
    let thr = inst.threshold();
    let points: Vec<usize> = inst.endpoints().iter().flat_map(|&(a, b)| [a, b]).collect();
    let trig = |e: usize, c: usize| params.trigger(inst.to_stop(points[e], c));

    let mut pc = PairCosts::new(inst);
    let mut live = vec![true; 2 * n];
    let mut trig_y = vec![f64::INFINITY; 2 * n];
    let mut sol = Solution::empty();
    let mut trace = RunTrace::default();
    let mut buf = Vec::with_capacity(2 * n);
    let full = |live: &[bool], i: usize| live[2 * i] && live[2 * i + 1];

    loop {
        let mut r = f64::INFINITY;
        for i in (0..n).filter(|&i| full(&live, i)) {
            r = r.min(pc.cur[i]);
        }
        for e in (0..2 * n).filter(|&e| live[e]) {
            r = r.min(trig_y[e]);
        }
        if sol.len() + 2 <= k {
            for (u, v) in open_pairs(m, &sol) {
                buf.clear();
                buf.extend((0..n).filter(|&i| full(&live, i)).map(|i| pc.with_pair(i, u, v)));
                r = r.min(kth_smallest(&mut buf, thr));
            }
        }
        if sol.len() < k {
            for c in (0..m).filter(|&c| !sol.contains(c)) {
                buf.clear();
                buf.extend((0..2 * n).filter(|&e| live[e]).map(|e| trig(e, c)));
                r = r.min(kth_smallest(&mut buf, thr));
            }
        }
        if !r.is_finite() {
            break;
        }

        loop {
            let mut gone = Vec::new();
            for i in 0..n {
                if full(&live, i) && reached(pc.cur[i], r) {
                    live[2 * i] = false;
                    live[2 * i + 1] = false;
                    gone.push(Token::Agent(i));
                }
            }
            for e in 0..2 * n {
                if live[e] && reached(trig_y[e], r) {
                    live[e] = false;
                    gone.push(Token::Endpoint(e));
                }
            }
            trace.push(r, vec![], gone);

            if sol.len() + 2 <= k {
                let found = open_pairs(m, &sol).find_map(|(u, v)| {
                    let s: Vec<usize> = (0..n)
                        .filter(|&i| full(&live, i) && reached(pc.with_pair(i, u, v), r))
                        .collect();
                    (s.len() >= thr).then_some((u, v, s))
                });
                if let Some((u, v, s)) = found {
                    let mut opened = Vec::new();
                    for c in [u, v] {
                        if !sol.contains(c) {
                            sol.insert(c);
                            pc.add_stop(c);
                            for e in 0..2 * n {
                                trig_y[e] = trig_y[e].min(trig(e, c));
                            }
                            opened.push(c);
                        }
                    }
                    for &i in &s {
                        live[2 * i] = false;
                        live[2 * i + 1] = false;
                    }
                    trace.push(r, opened, s.into_iter().map(Token::Agent).collect());
                    continue;
                }
            }

            if sol.len() < k {
                let found = (0..m).filter(|&c| !sol.contains(c)).find_map(|c| {
                    let ball: Vec<usize> = (0..2 * n).filter(|&e| live[e] && reached(trig(e, c), r)).collect();
                    (ball.len() >= thr).then_some((c, ball))
                });
                if let Some((c, ball)) = found {
                    sol.insert(c);
                    pc.add_stop(c);
                    for e in 0..2 * n {
                        trig_y[e] = trig_y[e].min(trig(e, c));
                    }
                    for &e in &ball {
                        live[e] = false;
                    }
                    trace.push(r, vec![c], ball.into_iter().map(Token::Endpoint).collect());
                    continue;
                }
            }
            break;
        }
    }
    let mut rest = Vec::new();
    for i in 0..n {
        if full(&live, i) {
            rest.push(Token::Agent(i));
        } else {
            for e in [2 * i, 2 * i + 1] {
                if live[e] {
                    rest.push(Token::Endpoint(e));
                }
            }
        }
    }
    trace.push(f64::INFINITY, vec![], rest);
    Ok((sol, trace))
}
