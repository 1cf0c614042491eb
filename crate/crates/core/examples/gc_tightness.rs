//! Greedy Capture on its two worst cases: the JR factor approaches 2+√5
//! and the (2−δ)-core factor approaches 1+√2 as ε shrinks.

use fair_transit::algorithms::gc_trsp;
use fair_transit::fairness::{core_ratio, jr_ratio, Alpha};
use fair_transit::instances::{generate, Family, FamilySpec};

fn main() -> fair_transit::Result<()> {
    println!("jr, limit 2+√5 = {:.6}", 2.0 + 5f64.sqrt());
    for eps in [0.2, 0.05, 0.01, 0.001] {
        let inst = generate(&FamilySpec::new(Family::GcJrTightFig5).with("eps", eps))?.into_trsp().unwrap();
        let (sol, _) = gc_trsp(&inst)?;
        println!("  eps {eps:<6} jr factor {:.6}", jr_ratio(&inst, &sol).factor);
    }

    println!("core, limit 1+√2 = {:.6}", 1.0 + 2f64.sqrt());
    for h in [2u64, 5, 10] {
        let eps = 0.01;
        let spec = FamilySpec::new(Family::GcCoreTightTable4).with("h", h as f64).with("eps", eps);
        let inst = generate(&spec)?.into_trsp().unwrap();
        let (sol, _) = gc_trsp(&inst)?;
        // the largest α the coalition N1 ∪ N2 can afford: 2 − 1/(3H)
        let alpha = Alpha::new(6 * h - 1, 3 * h)?;
        let r = core_ratio(&inst, &sol, alpha)?;
        println!("  H {h:<3} alpha {alpha:<7} core factor {:.6}", r.factor);
    }
    Ok(())
}
