//! Stop placement with free transit and clustering are two views of the
//! same problem: Greedy Capture gives the same centers either way, and a
//! clustering instance can be doubled into a stop placement instance.

use fair_transit::algorithms::{gc_trsp, greedy_capture};
use fair_transit::fairness::{jr_ratio, pf_ratio};
use fair_transit::instances::{generate, random_clustering, random_euclidean, Family, FamilySpec, TransitMode};
use fair_transit::reduction::{clustering_to_trsp, induce_clustering, split_sides};

fn main() -> fair_transit::Result<()> {
    let inst = random_euclidean(8, 6, 3, 7, TransitMode::Null)?;
    let cl = induce_clustering(&inst);
    let (sol, _) = gc_trsp(&inst)?;
    let (centers, _) = greedy_capture(&cl);
    println!("stops {:?}, clustering centers {centers:?}", sol.stops());
    println!("pf factor of the stops on the induced clustering: {:.4}", pf_ratio(&cl, sol.stops()).factor);

    let cl = random_clustering(6, 4, 2, 3)?;
    let doubled = clustering_to_trsp(&cl);
    let (sol, _) = gc_trsp(&doubled)?;
    let (a, b) = split_sides(&sol, cl.m());
    println!("doubled instance: n = {}, m = {}, k = {}", doubled.n(), doubled.m(), doubled.k());
    println!("copy A centers {a:?}, copy B centers {b:?}");

    // three claws: every clustering solution fails some JR coalition
    for case in [1.0, 2.0] {
        let inst = generate(&FamilySpec::new(Family::ClusteringImpossibilityFig4).with("case", case))?.into_trsp().unwrap();
        let (sol, _) = gc_trsp(&inst)?;
        println!("claws, case {case}: gc jr factor {:.4}", jr_ratio(&inst, &sol).factor);
    }
    Ok(())
}
