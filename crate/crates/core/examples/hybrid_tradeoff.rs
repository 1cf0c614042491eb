//! Sweep λ: the JR guarantee loosens and the core guarantee tightens as the
//! balls grow faster. Random instances where walking the whole trip is
//! impossible stay below both; the hard line pair pushes JR toward its
//! bound.

use fair_transit::algorithms::{hybrid, HybridParams};
use fair_transit::cli::{hybrid_core_bound, hybrid_jr_bound};
use fair_transit::fairness::{core_ratio, jr_ratio, Alpha};
use fair_transit::instances::{generate, random_clustering, Family, FamilySpec};
use fair_transit::reduction::clustering_to_trsp;

fn main() -> fair_transit::Result<()> {
    println!(
        "{:>6} {:>9} {:>9} {:>9} {:>10} {:>10}",
        "lambda", "jr bound", "hard jr", "worst jr", "core bound", "worst core"
    );
    for lambda in [0.1, 0.25, 0.5, 0.75, 1.0] {
        let params = HybridParams::new(lambda)?;
        let spec = FamilySpec::new(Family::HybridJrTightFig6).with("lambda", lambda).with("eps", 0.001);
        let hard = generate(&spec)?.into_trsp().unwrap();
        let hard_jr = jr_ratio(&hard, &hybrid(&hard, params)?.0).factor;
        let (mut jr, mut core) = (1f64, 1f64);
        for seed in 0..40 {
            let inst = clustering_to_trsp(&random_clustering(9, 5, 2, seed)?);
            let (sol, _) = hybrid(&inst, params)?;
            jr = jr.max(jr_ratio(&inst, &sol).factor);
            core = core.max(core_ratio(&inst, &sol, Alpha::new(2, 1)?)?.factor);
        }
        println!(
            "{lambda:>6} {:>9.4} {hard_jr:>9.4} {jr:>9.4} {:>10.4} {core:>10.4}",
            hybrid_jr_bound(lambda),
            hybrid_core_bound(lambda)
        );
    }
    Ok(())
}
