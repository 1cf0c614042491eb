use fair_transit::cli::{run_experiment, to_csv, AlgorithmSpec, CheckSpec, ExperimentConfig, InstanceSource};
use fair_transit::fairness::Alpha;
use fair_transit::instances::TransitMode;

fn main() -> fair_transit::Result<()> {
    let mut cfg = ExperimentConfig::new(InstanceSource::Random { n: 8, m: 6, transit: TransitMode::Null, seed_start: 0 });
    cfg.algorithms = vec![AlgorithmSpec::Gc, AlgorithmSpec::Eca, AlgorithmSpec::Hybrid(0.5)];
    cfg.checks = vec![CheckSpec::Jr, CheckSpec::Core(Alpha::new(2, 1)?), CheckSpec::Pf, CheckSpec::MinCost];
    cfg.ks = vec![2, 3];
    cfg.rounds = 5;
    let rows = run_experiment(&cfg)?;
    print!("{}", to_csv(&rows)?);
    let over = rows.iter().filter(|r| r.bounds_ok == Some(false)).count();
    eprintln!("{} rows, {over} over a bound", rows.len());
    Ok(())
}
