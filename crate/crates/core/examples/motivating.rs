//! The six-agent grid: compare what each algorithm builds and how the
//! agents fare.

use fair_transit::algorithms::{eca, gc_trsp, hybrid, HybridParams};
use fair_transit::fairness::{core_ratio, jr_ratio, Alpha};
use fair_transit::instances::{generate, Family, FamilySpec};
use fair_transit::trace::fmt_real;

fn main() -> fair_transit::Result<()> {
    let inst = generate(&FamilySpec::new(Family::MotivatingFig1))?.into_trsp().unwrap();
    println!("n = {}, m = {}, k = {}", inst.n(), inst.m(), inst.k());

    let runs = [
        ("gc", gc_trsp(&inst)?.0),
        ("eca", eca(&inst)?.0),
        ("hybrid(0.5)", hybrid(&inst, HybridParams::new(0.5)?)?.0),
    ];
    for (name, sol) in runs {
        let labels: Vec<String> = sol.stops().iter().map(|&c| inst.label(c)).collect();
        let costs: Vec<String> = inst.costs(&sol)?.into_iter().map(fmt_real).collect();
        let jr = jr_ratio(&inst, &sol).factor;
        let core = core_ratio(&inst, &sol, Alpha::ONE)?.factor;
        println!("{name:>12}: stops {:<12} costs [{}]", labels.join(" "), costs.join(", "));
        println!("{:>12}  jr factor {}, core factor {}", "", fmt_real(jr), fmt_real(core));
    }
    Ok(())
}
