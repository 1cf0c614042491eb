use super::sweep::{kth_smallest, reached};
use crate::error::Result;
use crate::model::{Instance, Solution};
use crate::trace::{RunTrace, Token};

/// Greedy Capture on the endpoints: grow a ball around every candidate,
/// open a candidate once its ball holds ⌈2n/k⌉ active endpoints, and
/// absorb endpoints that an open ball reaches.
pub fn gc_trsp(inst: &Instance) -> Result<(Solution, RunTrace)> {
    let n = inst.n();
    let m = inst.m();
    let thr = inst.threshold();
    let points: Vec<usize> = inst.endpoints().iter().flat_map(|&(a, b)| [a, b]).collect();
    let d = |e: usize, c: usize| inst.to_stop(points[e], c);

    let mut active = vec![true; 2 * n];
    let mut to_y = vec![f64::INFINITY; 2 * n];
    let mut sol = Solution::empty();
    let mut trace = RunTrace::default();
    let mut buf = Vec::with_capacity(2 * n);

    loop {
        let mut r = (0..2 * n).filter(|&e| active[e]).map(|e| to_y[e]).fold(f64::INFINITY, f64::min);
        if sol.len() < inst.k() {
            for c in (0..m).filter(|&c| !sol.contains(c)) {
                buf.clear();
                buf.extend((0..2 * n).filter(|&e| active[e]).map(|e| d(e, c)));
                r = r.min(kth_smallest(&mut buf, thr));
            }
        }
        if !r.is_finite() {
            break;
        }

        let absorbed: Vec<usize> = (0..2 * n).filter(|&e| active[e] && reached(to_y[e], r)).collect();
        for &e in &absorbed {
            active[e] = false;
        }
        trace.push(r, vec![], absorbed.into_iter().map(Token::Endpoint).collect());

        while sol.len() < inst.k() {
            let ball = |c: usize| -> Vec<usize> {
                (0..2 * n).filter(|&e| active[e] && reached(d(e, c), r)).collect()
            };
            let Some((c, captured)) =
                (0..m).filter(|&c| !sol.contains(c)).map(|c| (c, ball(c))).find(|(_, b)| b.len() >= thr)
            else {
                break;
            };
            sol.insert(c);
            for e in 0..2 * n {
                to_y[e] = to_y[e].min(d(e, c));
            }
            for &e in &captured {
                active[e] = false;
            }
            trace.push(r, vec![c], captured.into_iter().map(Token::Endpoint).collect());
        }
    }
    let rest: Vec<Token> = (0..2 * n).filter(|&e| active[e]).map(Token::Endpoint).collect();
    trace.push(f64::INFINITY, vec![], rest);
    Ok((sol, trace))
}
