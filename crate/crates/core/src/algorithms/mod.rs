//! Placement algorithms.

mod eca;
mod gc;
mod hybrid;
mod line;
mod mincost;
mod sweep;

pub use crate::clustering::{greedy_capture, LineClusteringInstance};
pub use eca::{eca, eca_with_order};
pub use gc::gc_trsp;
pub use hybrid::{hybrid, HybridParams};
pub use line::{l_dictator_partition, line_sweep_baseline};
pub use mincost::exact_min_cost;
