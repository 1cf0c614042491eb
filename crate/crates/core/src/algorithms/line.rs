use crate::clustering::LineClusteringInstance;

fn blocks(line: &LineClusteringInstance) -> impl Iterator<Item = &[f64]> {
    let data = line.datapoints();
    let size = data.len().div_ceil(line.k()).max(1);
    data.chunks(size).take(line.k())
}

/// Nearest center in `pool` to `x`, ties to the left.
fn nearest(centers: &[f64], pool: impl Iterator<Item = usize>, x: f64) -> Option<usize> {
    pool.min_by(|&a, &b| (centers[a] - x).abs().total_cmp(&(centers[b] - x).abs()).then(a.cmp(&b)))
}

/// The ℓ-dictator partition: split the sorted datapoints into blocks of
/// ⌈n'/k'⌉, and let the ℓ-th point of each block pick its nearest center
/// not yet taken. Blocks with fewer than ℓ points pick nothing. Returns
/// center indices in ascending order.
pub fn l_dictator_partition(line: &LineClusteringInstance) -> Vec<usize> {
    let centers = line.centers();
    let mut taken = vec![false; centers.len()];
    let mut out = Vec::new();
    for block in blocks(line) {
        let Some(&x) = block.get(line.ell() - 1) else { continue };
        if let Some(c) = nearest(centers, (0..centers.len()).filter(|&c| !taken[c]), x) {
            taken[c] = true;
            out.push(c);
        }
    }
    out.sort_unstable();
    out
}

/// Left-to-right baseline: each block of ⌈n'/k'⌉ sorted datapoints takes
/// the nearest free center at or to the right of its last point, or the
/// nearest free center overall when none lies to the right.
pub fn line_sweep_baseline(line: &LineClusteringInstance) -> Vec<usize> {
    let centers = line.centers();
    let mut taken = vec![false; centers.len()];
    let mut out = Vec::new();
    for block in blocks(line) {
        let x = *block.last().expect("chunks are nonempty");
        let right = (0..centers.len()).find(|&c| !taken[c] && centers[c] >= x);
        let pick = right.or_else(|| nearest(centers, (0..centers.len()).filter(|&c| !taken[c]), x));
        if let Some(c) = pick {
            taken[c] = true;
            out.push(c);
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig() -> LineClusteringInstance {
        LineClusteringInstance::new(vec![1.0, 3.0, 8.0, 10.0], vec![2.0, 6.0, 9.0, 13.0], 2, 1).unwrap()
    }

    #[test]
    fn dictator_picks_nearest() {
        assert_eq!(l_dictator_partition(&fig()), vec![0, 2]);
    }

    #[test]
    fn baseline_moves_right() {
        assert_eq!(line_sweep_baseline(&fig()), vec![1, 3]);
    }

    #[test]
    fn single_block_uses_last_rank() {
        let line = LineClusteringInstance::new(vec![0.0, 1.0, 4.0], vec![0.5, 3.0, 10.0], 1, 3).unwrap();
        assert_eq!(l_dictator_partition(&line), vec![1]);
        assert_eq!(line_sweep_baseline(&line), vec![2]);
    }
}
