use super::{improves, kth_largest, ratio, Alpha, FairnessReport, Property, Witness};
use crate::error::{Error, Result};
use crate::model::{Instance, RouteTable, Solution};

/// How deviating stop sets are searched.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CoreBackend {
    /// Every admissible stop set, smallest first.
    #[default]
    Enumeration,
    /// Include/exclude search with monotone bounds on coalition size and
    /// ratio.
    BranchAndBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoreOptions {
    pub backend: CoreBackend,
    /// Largest candidate count accepted before refusing to search.
    pub max_candidates: usize,
}

impl Default for CoreOptions {
    fn default() -> Self {
        CoreOptions { backend: CoreBackend::Enumeration, max_candidates: 24 }
    }
}

/// Everything a search needs, shared by both backends.
struct Search {
    table: RouteTable,
    cur: Vec<f64>,
    universe: Vec<usize>,
    alpha: Alpha,
    k: u128,
    n: usize,
    max_size: usize,
}

impl Search {
    fn new(inst: &Instance, sol: &Solution, alpha: Alpha, beta: f64, opts: &CoreOptions) -> Result<Self> {
        if inst.m() > opts.max_candidates {
            return Err(Error::GuardExceeded {
                what: "candidates for core search",
                count: inst.m() as u128,
                limit: opts.max_candidates as u128,
            });
        }
        let cur = inst.costs(sol)?;
        let table = RouteTable::new(inst);
        let n = inst.n();
        let m = inst.m();
        // A stop outside every improving pair can be dropped from any
        // deviation without changing who improves.
        let mut useful = vec![false; m];
        for u in 0..m {
            for v in u..m {
                if (0..n).any(|i| {
                    let c = table.pair_cost(i, u, v);
                    if beta > 1.0 {
                        improves(beta, cur[i], c)
                    } else {
                        c < cur[i]
                    }
                }) {
                    useful[u] = true;
                    useful[v] = true;
                }
            }
        }
        let universe = (0..m).filter(|&c| useful[c]).collect();
        let k = inst.k() as u128;
        let max_size = ((k * alpha.denom() as u128) / alpha.numer() as u128) as usize;
        Ok(Search { table, cur, universe, alpha, k, n, max_size })
    }

    /// Smallest coalition size s with s·k·q ≥ p·|T|·n.
    fn needed(&self, size: usize) -> usize {
        let num = self.alpha.numer() as u128 * size as u128 * self.n as u128;
        let den = self.k * self.alpha.denom() as u128;
        num.div_ceil(den) as usize
    }

    fn large_enough(&self, coalition: usize, size: usize) -> bool {
        coalition as u128 * self.k * self.alpha.denom() as u128
            >= self.alpha.numer() as u128 * size as u128 * self.n as u128
    }

    fn extend(&self, costs: &[f64], stops: &[usize], s: usize) -> Vec<f64> {
        (0..self.n).map(|i| self.table.extend(i, costs[i], stops, s)).collect()
    }

    fn costs_of(&self, stops: &[usize]) -> Vec<f64> {
        (0..self.n).map(|i| self.table.cost(i, stops)).collect()
    }

    fn coalition(&self, beta: f64, costs: &[f64]) -> Vec<usize> {
        (0..self.n).filter(|&i| improves(beta, self.cur[i], costs[i])).collect()
    }

    /// The tight ratio of one deviation and the agents attaining it.
    fn score(&self, size: usize, costs: &[f64]) -> Option<(f64, Vec<usize>)> {
        let s = self.needed(size);
        let ratios: Vec<f64> = (0..self.n).map(|i| ratio(self.cur[i], costs[i])).collect();
        let mut scratch = ratios.clone();
        let value = kth_largest(&mut scratch, s)?;
        Some((value, (0..self.n).filter(|&i| ratios[i] >= value).collect()))
    }

    /// Calls `visit` on every subset of the universe of exactly `size`
    /// stops, in lexicographic order, until it returns true.
    fn each_of_size(&self, size: usize, visit: &mut dyn FnMut(&[usize], &[f64]) -> bool) -> bool {
        let mut stops = Vec::with_capacity(size);
        let walk: Vec<f64> = (0..self.n).map(|i| self.table.walk(i)).collect();
        self.each_rec(0, size, &mut stops, &walk, visit)
    }

    fn each_rec(
        &self,
        from: usize,
        size: usize,
        stops: &mut Vec<usize>,
        costs: &[f64],
        visit: &mut dyn FnMut(&[usize], &[f64]) -> bool,
    ) -> bool {
        if stops.len() == size {
            return visit(stops, costs);
        }
        let need = size - stops.len();
        for idx in from..self.universe.len() {
            if self.universe.len() - idx < need {
                break;
            }
            let s = self.universe[idx];
            let next = self.extend(costs, stops, s);
            stops.push(s);
            let stop = self.each_rec(idx + 1, size, stops, &next, visit);
            stops.pop();
            if stop {
                return true;
            }
        }
        false
    }

    fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.max_size.min(self.universe.len())).take_while(|&t| self.needed(t) <= self.n)
    }

    fn violation_enum(&self, beta: f64) -> Option<Witness> {
        let mut found = None;
        for size in self.sizes() {
            let mut visit = |stops: &[usize], costs: &[f64]| {
                let coalition = self.coalition(beta, costs);
                if !coalition.is_empty() && self.large_enough(coalition.len(), size) {
                    found = Some(self.witness(coalition, stops, costs));
                    return true;
                }
                false
            };
            if self.each_of_size(size, &mut visit) {
                break;
            }
        }
        found
    }

    fn witness(&self, coalition: Vec<usize>, stops: &[usize], costs: &[f64]) -> Witness {
        let factor = coalition.iter().map(|&i| ratio(self.cur[i], costs[i])).fold(f64::INFINITY, f64::min);
        Witness { coalition, deviation: stops.to_vec(), factor }
    }

    fn ratio_enum(&self) -> (f64, Option<Witness>) {
        let mut best = 1.0;
        let mut witness = None;
        for size in self.sizes() {
            let mut visit = |stops: &[usize], costs: &[f64]| {
                if let Some((value, coalition)) = self.score(size, costs) {
                    if value > best {
                        best = value;
                        witness = Some(Witness { coalition, deviation: stops.to_vec(), factor: value });
                    }
                }
                false
            };
            self.each_of_size(size, &mut visit);
        }
        (best, witness)
    }

    fn violation_bb(&self, beta: f64) -> Option<Witness> {
        let walk: Vec<f64> = (0..self.n).map(|i| self.table.walk(i)).collect();
        let mut stops = Vec::new();
        self.violation_rec(beta, 0, &mut stops, &walk)
    }

    fn violation_rec(&self, beta: f64, idx: usize, stops: &mut Vec<usize>, costs: &[f64]) -> Option<Witness> {
        if idx == self.universe.len() || stops.len() == self.max_size {
            return None;
        }
        let size = stops.len() + 1;
        if self.needed(size) > self.n {
            return None;
        }
        let mut reach: Vec<usize> = stops.clone();
        reach.extend_from_slice(&self.universe[idx..]);
        let optimistic = self.coalition(beta, &self.costs_of(&reach)).len();
        if optimistic == 0 || !self.large_enough(optimistic, size) {
            return None;
        }
        let s = self.universe[idx];
        let next = self.extend(costs, stops, s);
        stops.push(s);
        let coalition = self.coalition(beta, &next);
        if !coalition.is_empty() && self.large_enough(coalition.len(), size) {
            let w = self.witness(coalition, stops, &next);
            stops.pop();
            return Some(w);
        }
        let found = self.violation_rec(beta, idx + 1, stops, &next);
        stops.pop();
        found.or_else(|| self.violation_rec(beta, idx + 1, stops, costs))
    }

    fn ratio_bb(&self) -> (f64, Option<Witness>) {
        let walk: Vec<f64> = (0..self.n).map(|i| self.table.walk(i)).collect();
        let mut best = (1.0, None);
        let mut stops = Vec::new();
        self.ratio_rec(0, &mut stops, &walk, &mut best);
        best
    }

    fn ratio_rec(&self, idx: usize, stops: &mut Vec<usize>, costs: &[f64], best: &mut (f64, Option<Witness>)) {
        if idx == self.universe.len() || stops.len() == self.max_size {
            return;
        }
        let size = stops.len() + 1;
        if self.needed(size) > self.n {
            return;
        }
        let mut reach: Vec<usize> = stops.clone();
        reach.extend_from_slice(&self.universe[idx..]);
        let upper = match self.score(size, &self.costs_of(&reach)) {
            Some((v, _)) => v,
            None => return,
        };
        if upper <= best.0 {
            return;
        }
        let s = self.universe[idx];
        let next = self.extend(costs, stops, s);
        stops.push(s);
        if let Some((value, coalition)) = self.score(size, &next) {
            if value > best.0 {
                *best = (value, Some(Witness { coalition, deviation: stops.clone(), factor: value }));
            }
        }
        self.ratio_rec(idx + 1, stops, &next, best);
        stops.pop();
        self.ratio_rec(idx + 1, stops, costs, best);
    }
}

/// A stop set T and a coalition S with |S| ≥ α·|T|·n/k whose members all
/// improve by a factor above `beta`, if one exists.
pub fn core_violation(inst: &Instance, sol: &Solution, alpha: Alpha, beta: f64) -> Result<Option<Witness>> {
    core_violation_with(inst, sol, alpha, beta, &CoreOptions::default())
}

pub fn core_violation_with(
    inst: &Instance,
    sol: &Solution,
    alpha: Alpha,
    beta: f64,
    opts: &CoreOptions,
) -> Result<Option<Witness>> {
    let search = Search::new(inst, sol, alpha, beta, opts)?;
    Ok(match opts.backend {
        CoreBackend::Enumeration => search.violation_enum(beta),
        CoreBackend::BranchAndBound => search.violation_bb(beta),
    })
}

/// The smallest β for which `sol` is in the (α, β)-core.
pub fn core_ratio(inst: &Instance, sol: &Solution, alpha: Alpha) -> Result<FairnessReport> {
    core_ratio_with(inst, sol, alpha, &CoreOptions::default())
}

pub fn core_ratio_with(inst: &Instance, sol: &Solution, alpha: Alpha, opts: &CoreOptions) -> Result<FairnessReport> {
    let search = Search::new(inst, sol, alpha, 1.0, opts)?;
    let (factor, witness) = match opts.backend {
        CoreBackend::Enumeration => search.ratio_enum(),
        CoreBackend::BranchAndBound => search.ratio_bb(),
    };
    Ok(FairnessReport { property: Property::Core, alpha: Some(alpha), factor, witness })
}
