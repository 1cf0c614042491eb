use itertools::Itertools;

use crate::error::{Error, Result};
use crate::metric::TOL;
use crate::model::{Instance, Solution};

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Minimum total cost over every stop set of size at most k, found by
/// enumeration. Smaller sets win ties, then lexicographically smaller ones.
/// Fails when more than `max_subsets` sets would be visited.
pub fn exact_min_cost(inst: &Instance, max_subsets: u128) -> Result<(Solution, f64)> {
    let top = inst.k().min(inst.m());
    let count: u128 = (0..=top).map(|s| binomial(inst.m(), s)).sum();
    if count > max_subsets {
        return Err(Error::GuardExceeded { what: "stop subsets", count, limit: max_subsets });
    }
    let mut best = (Solution::empty(), inst.total_cost(&Solution::empty())?);
    for size in 1..=top {
        for stops in (0..inst.m()).combinations(size) {
            let cost: f64 = (0..inst.n()).map(|i| inst.cost_of(i, &stops)).sum();
            if cost < best.1 - TOL || (best.1.is_infinite() && cost < best.1) {
                best = (Solution::new(stops), cost);
            }
        }
    }
    Ok(best)
}
