//! Fair placements against the cheapest one: the exact minimum total cost
//! and what each algorithm pays on top of it.

use fair_transit::algorithms::{eca, exact_min_cost, gc_trsp, hybrid, HybridParams};
use fair_transit::fairness::jr_ratio;
use fair_transit::instances::{random_euclidean, TransitMode};

fn main() -> fair_transit::Result<()> {
    for seed in 0..5 {
        let inst = random_euclidean(12, 8, 3, seed, TransitMode::Scaled(0.5))?;
        let (opt, cost) = exact_min_cost(&inst, 1 << 20)?;
        println!("seed {seed}: min cost {cost:.4} with {:?} (jr {:.3})", opt.stops(), jr_ratio(&inst, &opt).factor);
        let runs = [("gc", gc_trsp(&inst)?.0), ("eca", eca(&inst)?.0), ("hybrid", hybrid(&inst, HybridParams::new(0.5)?)?.0)];
        for (name, sol) in runs {
            let total = inst.total_cost(&sol)?;
            println!("  {name:<7} cost {total:.4} (x{:.3}) jr {:.3}", total / cost, jr_ratio(&inst, &sol).factor);
        }
    }
    Ok(())
}
