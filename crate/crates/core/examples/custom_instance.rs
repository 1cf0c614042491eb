//! Build an instance by hand, save it, load it back and check a solution
//! with witnesses.

use fair_transit::fairness::{core_violation, jr_violation, Alpha};
use fair_transit::instances::{instance_from_json, instance_to_json};
use fair_transit::{Instance, Metric, Solution};

fn main() -> fair_transit::Result<()> {
    // points on a line: 0 home, 1 stop A, 2 stop B, 3 work, 4 stop C
    let x: [f64; 5] = [0.0, 0.5, 9.5, 10.0, 20.0];
    let walk = Metric::from_fn(5, |i, j| (x[i] - x[j]).abs());
    let transit = Metric::from_rows(&[vec![0.0, 1.0, 3.0], vec![1.0, 0.0, 2.0], vec![3.0, 2.0, 0.0]])?;
    let inst = Instance::new(vec![(0, 3), (0, 3), (3, 0)], vec![1, 2, 4], walk, transit, 2)?
        .with_labels(vec!["A".into(), "B".into(), "C".into()])?;

    let text = instance_to_json(&inst)?;
    let back = instance_from_json(&text)?;
    assert_eq!(back, inst);
    println!("{text}");

    let sol = Solution::new([2]);
    println!("costs with {{C}}: {:?}", inst.costs(&sol)?);
    match jr_violation(&inst, &sol, 2.0) {
        Some(w) => println!("2-JR fails: agents {:?} prefer {:?} by {:.3}", w.coalition, w.deviation, w.factor),
        None => println!("2-JR holds"),
    }
    let w = core_violation(&inst, &sol, Alpha::ONE, 1.0)?;
    println!("core witness: {w:?}");
    Ok(())
}
