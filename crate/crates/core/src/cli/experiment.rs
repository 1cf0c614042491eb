//! Batch experiments written as CSV.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::Args;
use rayon::prelude::*;

use super::{core_options, parse_family, FamilyParams, EXIT_OK};
use crate::algorithms::{eca, exact_min_cost, gc_trsp, hybrid, HybridParams};
use crate::error::{Error, Result};
use crate::fairness::{core_ratio_with, jr_ratio, pf_ratio, Alpha, CoreBackend, CoreOptions};
use crate::instances::{generate, random_euclidean, read_instance, FamilySpec, TransitMode};
use crate::model::{Instance, Solution};
use crate::reduction::induce_clustering;
use crate::trace::fmt_real;
use crate::metric::TOL;

/// First line of every experiment CSV.
pub const SCHEMA_LINE: &str = "# fair-transit experiment v1";

pub const COLUMNS: [&str; 16] = [
    "seed",
    "n",
    "m",
    "k",
    "transit",
    "algorithm",
    "stops",
    "jr_factor",
    "core_alpha",
    "core_factor",
    "pf_factor",
    "total_cost",
    "min_cost",
    "runtime_ms",
    "bounds_ok",
    "status",
];

#[derive(Clone, Debug)]
pub enum InstanceSource {
    File(PathBuf),
    Family(FamilySpec),
    Random { n: usize, m: usize, transit: TransitMode, seed_start: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AlgorithmSpec {
    Gc,
    Eca,
    Hybrid(f64),
}

impl AlgorithmSpec {
    pub fn name(&self) -> String {
        match self {
            AlgorithmSpec::Gc => "gc".into(),
            AlgorithmSpec::Eca => "eca".into(),
            AlgorithmSpec::Hybrid(l) => format!("hybrid({l})"),
        }
    }

    pub fn run(&self, inst: &Instance) -> Result<Solution> {
        Ok(match self {
            AlgorithmSpec::Gc => gc_trsp(inst)?.0,
            AlgorithmSpec::Eca => eca(inst)?.0,
            AlgorithmSpec::Hybrid(l) => hybrid(inst, HybridParams::new(*l)?)?.0,
        })
    }
}

impl FromStr for AlgorithmSpec {
    type Err = Error;

    /// `gc`, `eca`, `hybrid:0.5` or `hybrid(0.5)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "gc" => return Ok(AlgorithmSpec::Gc),
            "eca" => return Ok(AlgorithmSpec::Eca),
            _ => {}
        }
        let arg = s
            .strip_prefix("hybrid:")
            .or_else(|| s.strip_prefix("hybrid(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm {s:?}; expected gc, eca or hybrid:<lambda>")))?;
        let l: f64 = arg
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad lambda in {s:?}")))?;
        HybridParams::new(l)?;
        Ok(AlgorithmSpec::Hybrid(l))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CheckSpec {
    Jr,
    Core(Alpha),
    Pf,
    MinCost,
}

impl FromStr for CheckSpec {
    type Err = Error;

    /// `jr`, `core` (α = 1), `core:2`, `pf` or `mincost`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "jr" => Ok(CheckSpec::Jr),
            "pf" => Ok(CheckSpec::Pf),
            "mincost" => Ok(CheckSpec::MinCost),
            "core" => Ok(CheckSpec::Core(Alpha::ONE)),
            _ => match s.strip_prefix("core:") {
                Some(a) => Ok(CheckSpec::Core(a.parse()?)),
                None => Err(Error::InvalidParameter(format!(
                    "unknown check {s:?}; expected jr, core[:alpha], pf or mincost"
                ))),
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub source: InstanceSource,
    pub algorithms: Vec<AlgorithmSpec>,
    pub checks: Vec<CheckSpec>,
    /// Budgets to sweep; empty keeps the instance's own budget.
    pub ks: Vec<usize>,
    pub rounds: usize,
    /// Report wall-clock runtimes. Off by default so output is reproducible.
    pub timing: bool,
    pub core: CoreOptions,
    pub max_mincost_subsets: u128,
}

impl ExperimentConfig {
    pub fn new(source: InstanceSource) -> Self {
        ExperimentConfig {
            source,
            algorithms: vec![AlgorithmSpec::Gc, AlgorithmSpec::Eca, AlgorithmSpec::Hybrid(0.5)],
            checks: vec![CheckSpec::Jr, CheckSpec::Core(Alpha::TWO)],
            ks: Vec::new(),
            rounds: 1,
            timing: false,
            core: CoreOptions::default(),
            max_mincost_subsets: 1 << 22,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() {
            return Err(Error::InvalidParameter("experiment needs at least one algorithm".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::InvalidParameter("experiment needs at least one check".into()));
        }
        if self.rounds == 0 {
            return Err(Error::InvalidParameter("rounds must be >= 1".into()));
        }
        if self.ks.contains(&0) {
            return Err(Error::InvalidParameter("budgets must be >= 1".into()));
        }
        Ok(())
    }
}

fn transit_name(mode: TransitMode) -> String {
    match mode {
        TransitMode::Null => "null".into(),
        TransitMode::Scaled(f) => format!("scaled:{f}"),
        TransitMode::RandomMetric => "random-metric".into(),
    }
}

pub fn parse_transit(s: &str) -> Result<TransitMode> {
    match s.trim() {
        "null" => Ok(TransitMode::Null),
        "random-metric" | "random" => Ok(TransitMode::RandomMetric),
        t => match t.strip_prefix("scaled:").map(str::parse::<f64>) {
            Some(Ok(f)) if f.is_finite() && f >= 0.0 => Ok(TransitMode::Scaled(f)),
            _ => Err(Error::InvalidParameter(format!(
                "unknown transit mode {t:?}; expected null, scaled:<factor> or random-metric"
            ))),
        },
    }
}

/// Worst-case guarantees an algorithm carries on an instance; `None`
/// where no guarantee applies.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub jr: Option<f64>,
    /// Core bound for α ≥ 2.
    pub core2: Option<f64>,
    pub pf: Option<f64>,
}

pub fn theorem_bounds(alg: AlgorithmSpec, null_transit: bool) -> Bounds {
    let sqrt2 = 2f64.sqrt();
    match (alg, null_transit) {
        (AlgorithmSpec::Eca, _) => Bounds { jr: Some(1.0 + sqrt2), ..Bounds::default() },
        (AlgorithmSpec::Gc, true) => Bounds {
            jr: Some(2.0 + 5f64.sqrt()),
            core2: Some(1.0 + sqrt2),
            pf: Some(1.0 + sqrt2),
        },
        (AlgorithmSpec::Hybrid(l), true) => {
            let core = hybrid_core_bound(l);
            Bounds { jr: Some(hybrid_jr_bound(l)), core2: Some(core), pf: Some(core) }
        }
        _ => Bounds::default(),
    }
}

/// JR guarantee of the hybrid algorithm with rate `lambda`.
pub fn hybrid_jr_bound(lambda: f64) -> f64 {
    (lambda + 3.0 + (lambda * lambda + 10.0 * lambda + 9.0).sqrt()) / 2.0
}

/// Core (α = 2) and PF guarantee of the hybrid algorithm with rate `lambda`.
pub fn hybrid_core_bound(lambda: f64) -> f64 {
    ((lambda * lambda + 6.0 * lambda + 1.0).sqrt() + lambda + 1.0) / (2.0 * lambda)
}

/// One experiment row before formatting.
#[derive(Clone, Debug, Default)]
pub struct Row {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub transit: String,
    pub algorithm: String,
    pub stops: Vec<usize>,
    pub jr: Option<f64>,
    pub core: Option<(Alpha, f64)>,
    pub pf: Option<f64>,
    pub total_cost: Option<f64>,
    pub min_cost: Option<f64>,
    pub runtime_ms: Option<f64>,
    pub bounds_ok: Option<bool>,
    pub status: String,
}

impl Row {
    fn fields(&self) -> Vec<String> {
        let opt = |x: Option<f64>| x.map(fmt_real).unwrap_or_default();
        vec![
            self.seed.to_string(),
            self.n.to_string(),
            self.m.to_string(),
            self.k.to_string(),
            self.transit.clone(),
            self.algorithm.clone(),
            self.stops.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "),
            opt(self.jr),
            self.core.map(|(a, _)| a.to_string()).unwrap_or_default(),
            opt(self.core.map(|(_, f)| f)),
            opt(self.pf),
            opt(self.total_cost),
            opt(self.min_cost),
            self.runtime_ms.map(|t| format!("{t:.3}")).unwrap_or_else(|| "NA".into()),
            match self.bounds_ok {
                Some(true) => "true".into(),
                Some(false) => "false".into(),
                None => "NA".into(),
            },
            self.status.clone(),
        ]
    }
}

struct Job {
    round: usize,
    alg: usize,
    k: Option<usize>,
}

fn load(cfg: &ExperimentConfig, round: usize) -> Result<(u64, Instance, String)> {
    match &cfg.source {
        InstanceSource::File(p) => {
            let inst = read_instance(p)?;
            let t = if inst.is_null_transit() { "null" } else { "given" };
            Ok((round as u64, inst, t.into()))
        }
        InstanceSource::Family(spec) => {
            let inst = generate(spec)?
                .into_trsp()
                .ok_or_else(|| Error::InvalidParameter("line families have no transit instance".into()))?;
            let t = if inst.is_null_transit() { "null" } else { "given" };
            Ok((round as u64, inst, t.into()))
        }
        InstanceSource::Random { n, m, transit, seed_start } => {
            let seed = seed_start.wrapping_add(round as u64);
            // The budget is replaced per row; the largest legal one keeps
            // generation independent of it.
            let inst = random_euclidean(*n, *m, *m, seed, *transit)?;
            Ok((seed, inst, transit_name(*transit)))
        }
    }
}

fn run_job(cfg: &ExperimentConfig, job: &Job, base: &Result<(u64, Instance, String)>, row: &mut Row) -> Result<()> {
    let (seed, inst, transit) = match base {
        Ok(b) => b,
        Err(e) => return Err(Error::InvalidParameter(e.to_string())),
    };
    row.seed = *seed;
    row.transit = transit.clone();
    row.n = inst.n();
    row.m = inst.m();
    let inst = match job.k {
        Some(k) => inst.with_budget(k)?,
        None => inst.clone(),
    };
    row.k = inst.k();
    let alg = cfg.algorithms[job.alg];
    let start = Instant::now();
    let sol = alg.run(&inst)?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    if cfg.timing {
        row.runtime_ms = Some(elapsed);
    }
    row.stops = sol.stops().to_vec();
    let total = inst.total_cost(&sol)?;
    row.total_cost = Some(total);

    let bounds = theorem_bounds(alg, inst.is_null_transit());
    let mut ok: Option<bool> = None;
    let mut check = |pass: bool| ok = Some(ok.unwrap_or(true) && pass);
    for c in &cfg.checks {
        match *c {
            CheckSpec::Jr => {
                let f = jr_ratio(&inst, &sol).factor;
                row.jr = Some(f);
                if let Some(b) = bounds.jr {
                    check(f <= b + TOL);
                }
            }
            CheckSpec::Core(alpha) => {
                let f = core_ratio_with(&inst, &sol, alpha, &cfg.core)?.factor;
                row.core = Some((alpha, f));
                if let (Some(b), true) = (bounds.core2, alpha.as_f64() >= 2.0) {
                    check(f <= b + TOL);
                }
            }
            CheckSpec::Pf => {
                let f = pf_ratio(&induce_clustering(&inst), sol.stops()).factor;
                row.pf = Some(f);
                if let Some(b) = bounds.pf {
                    check(f <= b + TOL);
                }
            }
            CheckSpec::MinCost => {
                let (_, best) = exact_min_cost(&inst, cfg.max_mincost_subsets)?;
                row.min_cost = Some(best);
                check(best <= total + TOL * (1.0 + total.abs()));
            }
        }
    }
    row.bounds_ok = ok;
    Ok(())
}

/// Runs every (round, algorithm, budget) combination. Rows come back
/// ordered by seed, then algorithm in configuration order, then budget.
/// A failing row keeps its error in `status` and the run continues.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<Row>> {
    cfg.validate()?;
    let bases: Vec<_> = (0..cfg.rounds).into_par_iter().map(|r| load(cfg, r)).collect();
    if let (InstanceSource::File(_) | InstanceSource::Family(_), Some(Err(e))) = (&cfg.source, bases.first()) {
        return Err(Error::InvalidParameter(e.to_string()));
    }
    let ks: Vec<Option<usize>> = if cfg.ks.is_empty() { vec![None] } else { cfg.ks.iter().map(|&k| Some(k)).collect() };
    let mut jobs = Vec::new();
    for round in 0..cfg.rounds {
        for alg in 0..cfg.algorithms.len() {
            for &k in &ks {
                jobs.push(Job { round, alg, k });
            }
        }
    }
    let rows = jobs
        .par_iter()
        .map(|job| {
            let mut row = Row { algorithm: cfg.algorithms[job.alg].name(), k: job.k.unwrap_or(0), ..Row::default() };
            row.status = match run_job(cfg, job, &bases[job.round], &mut row) {
                Ok(()) => "ok".into(),
                Err(e) => format!("error: {e}"),
            };
            row
        })
        .collect();
    Ok(rows)
}

/// Formats rows as CSV, schema line first.
pub fn to_csv(rows: &[Row]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COLUMNS).map_err(csv_err)?;
    for r in rows {
        w.write_record(r.fields()).map_err(csv_err)?;
    }
    let body = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(format!("{SCHEMA_LINE}\n{}", String::from_utf8_lossy(&body)))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

#[derive(Args, Debug)]
pub struct ExperimentArgs {
    /// Use this instance file for every round.
    #[arg(long, conflicts_with = "family")]
    pub instance: Option<PathBuf>,
    /// Use this family instance for every round.
    #[arg(long)]
    pub family: Option<String>,
    #[command(flatten)]
    pub params: FamilyParams,
    /// Random instances: number of agents.
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    /// Random instances: number of candidate stops.
    #[arg(long, default_value_t = 8)]
    pub m: usize,
    /// Budgets, comma-separated. Defaults to 2,4 for random instances and
    /// the file's own budget otherwise.
    #[arg(long, value_delimiter = ',')]
    pub k: Vec<usize>,
    /// Random instances: null, scaled:<factor> or random-metric.
    #[arg(long, default_value = "null")]
    pub transit: String,
    /// Number of rounds; random rounds use consecutive seeds.
    #[arg(long, default_value_t = 10)]
    pub seeds: usize,
    #[arg(long, default_value_t = 0)]
    pub seed_start: u64,
    /// Comma-separated: gc, eca, hybrid:<lambda>.
    #[arg(long, value_delimiter = ',', default_value = "gc,eca,hybrid:0.5")]
    pub algs: Vec<String>,
    /// Comma-separated: jr, core[:alpha], pf, mincost.
    #[arg(long, value_delimiter = ',', default_value = "jr,core:2")]
    pub checks: Vec<String>,
    /// Record wall-clock runtimes (makes output nondeterministic).
    #[arg(long)]
    pub timing: bool,
    /// Output CSV; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn config_from_args(a: &ExperimentArgs) -> Result<ExperimentConfig> {
    let source = match (&a.instance, &a.family) {
        (Some(p), _) => InstanceSource::File(p.clone()),
        (None, Some(f)) => InstanceSource::Family(a.params.spec(parse_family(f)?)),
        (None, None) => InstanceSource::Random { n: a.n, m: a.m, transit: parse_transit(&a.transit)?, seed_start: a.seed_start },
    };
    let random = matches!(source, InstanceSource::Random { .. });
    let mut cfg = ExperimentConfig::new(source);
    cfg.algorithms = a.algs.iter().map(|s| s.parse()).collect::<Result<_>>()?;
    cfg.checks = a.checks.iter().map(|s| s.parse()).collect::<Result<_>>()?;
    cfg.ks = if a.k.is_empty() && random { vec![2, 4] } else { a.k.clone() };
    cfg.rounds = a.seeds;
    cfg.timing = a.timing;
    cfg.core = core_options(CoreBackend::Enumeration)?;
    Ok(cfg)
}

pub(super) fn cmd_experiment(a: &ExperimentArgs, out: &mut dyn Write) -> Result<i32> {
    let cfg = config_from_args(a)?;
    let rows = run_experiment(&cfg)?;
    let text = to_csv(&rows)?;
    match &a.out {
        Some(p) => {
            fs::write(p, &text)?;
            let failed = rows.iter().filter(|r| r.status != "ok").count();
            let over = rows.iter().filter(|r| r.bounds_ok == Some(false)).count();
            writeln!(out, "wrote {} rows to {} ({failed} failed, {over} over bound)", rows.len(), p.display())?;
        }
        None => write!(out, "{text}")?,
    }
    Ok(EXIT_OK)
}
