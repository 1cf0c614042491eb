//! Three agents, six stops, budget three: every stop set leaves some pair
//! of agents able to improve by a factor close to (1+√3)/2.

use fair_transit::fairness::jr_ratio;
use fair_transit::instances::{generate, Family, FamilySpec};
use fair_transit::Solution;
use itertools::Itertools;

fn main() {
    let inst = generate(&FamilySpec::new(Family::JrLowerTable3)).unwrap().into_trsp().unwrap();
    let mut best: Option<(f64, Vec<usize>)> = None;
    for size in 0..=inst.k() {
        for stops in (0..inst.m()).combinations(size) {
            let f = jr_ratio(&inst, &Solution::new(stops.clone())).factor;
            if best.as_ref().is_none_or(|(b, _)| f < *b) {
                best = Some((f, stops));
            }
        }
    }
    let (f, stops) = best.unwrap();
    let labels: Vec<String> = stops.iter().map(|&c| inst.label(c)).collect();
    println!("best stop set {} has jr factor {f:.6}", labels.join(" "));
    println!("(1+√3)/2 = {:.6}", (1.0 + 3f64.sqrt()) / 2.0);
}
