use fair_transit::algorithms::eca;
use fair_transit::fairness::jr_ratio;
use fair_transit::instances::{generate, Family, FamilySpec};

fn main() -> fair_transit::Result<()> {
    println!("ECA jr factor, limit 1+√2 = {:.6}", 1.0 + 2f64.sqrt());
    for eps in [0.0, 0.1, 0.01, 0.001] {
        let inst = generate(&FamilySpec::new(Family::EcaJrTightTable5).with("eps", eps))?.into_trsp().unwrap();
        let (sol, trace) = eca(&inst)?;
        let labels: Vec<String> = sol.stops().iter().map(|&c| inst.label(c)).collect();
        let r = jr_ratio(&inst, &sol);
        println!("  eps {eps:<6} stops {} jr factor {:.6} ({} events)", labels.join(" "), r.factor, trace.events.len());
    }
    Ok(())
}
