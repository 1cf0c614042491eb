//! The complete-graph instance: ECA spends its whole budget on edge stops
//! and leaves the vertex agents with no route, so no core factor holds.

use fair_transit::algorithms::eca;
use fair_transit::fairness::{core_ratio, jr_ratio, Alpha};
use fair_transit::instances::{generate, kz_vertices, Family, FamilySpec};

fn main() -> fair_transit::Result<()> {
    let (gamma, r) = (1.0, 2);
    let spec = FamilySpec::new(Family::EcaCoreFailKz).with("gamma", gamma).with("r", r as f64);
    let inst = generate(&spec)?.into_trsp().unwrap();
    println!("z = {}, n = {}, m = {}, k = {}", kz_vertices(gamma, r), inst.n(), inst.m(), inst.k());

    let (sol, _) = eca(&inst)?;
    let labels: Vec<String> = sol.stops().iter().map(|&c| inst.label(c)).collect();
    println!("ECA opens {}", labels.join(" "));
    println!("jr factor {}", jr_ratio(&inst, &sol).factor);
    let core = core_ratio(&inst, &sol, Alpha::new(gamma as u64, 1)?)?;
    println!("core factor at alpha {gamma}: {}", core.factor);
    if let Some(w) = core.witness {
        let dev: Vec<String> = w.deviation.iter().map(|&c| inst.label(c)).collect();
        println!("agents {:?} deviate to {}", w.coalition, dev.join(" "));
    }
    Ok(())
}
