use fair_transit::algorithms::{l_dictator_partition, line_sweep_baseline};
use fair_transit::fairness::pf_ratio;
use fair_transit::instances::{generate, random_line, Family, FamilySpec};

fn main() -> fair_transit::Result<()> {
    let line = generate(&FamilySpec::new(Family::LineFig7))?.into_line().unwrap();
    let cl = line.to_clustering();
    let show = |centers: &[usize]| centers.iter().map(|&c| line.centers()[c].to_string()).collect::<Vec<_>>().join(" ");
    let dict = l_dictator_partition(&line);
    let base = line_sweep_baseline(&line);
    println!("datapoints {:?}, centers {:?}", line.datapoints(), line.centers());
    println!("dictator picks {} (pf factor {:.4})", show(&dict), pf_ratio(&cl, &dict).factor);
    println!("baseline picks {} (pf factor {:.4})", show(&base), pf_ratio(&cl, &base).factor);

    let (mut worst_d, mut worst_b) = (1f64, 1f64);
    for seed in 0..200 {
        let line = random_line(12, 6, 3, seed)?;
        let cl = line.to_clustering();
        worst_d = worst_d.max(pf_ratio(&cl, &l_dictator_partition(&line)).factor);
        worst_b = worst_b.max(pf_ratio(&cl, &line_sweep_baseline(&line)).factor);
    }
    println!("random lines: worst dictator pf {worst_d:.4}, worst baseline pf {worst_b:.4}");
    Ok(())
}
