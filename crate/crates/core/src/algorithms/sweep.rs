use crate::metric::TOL;

/// The `k`-th smallest value (1-based), or infinity when there are fewer
/// than `k` values.
pub(crate) fn kth_smallest(values: &mut [f64], k: usize) -> f64 {
    if k == 0 || values.len() < k {
        return f64::INFINITY;
    }
    let (_, x, _) = values.select_nth_unstable_by(k - 1, f64::total_cmp);
    *x
}

/// Trigger predicate shared by every sweep.
#[inline]
pub(crate) fn reached(trigger: f64, r: f64) -> bool {
    trigger <= r + TOL
}
