//! Fair transit stop placement in general metric spaces.
//!
//! Agents travel between two endpoints and either walk directly or walk to a
//! selected stop, ride to another selected stop, and walk on. The crate
//! provides:
//!
//! * the cost model and the reductions to and from centroid clustering
//!   ([`model`], [`reduction`], [`clustering`]),
//! * the placement algorithms: Greedy Capture for stops, the Expanding Cost
//!   Algorithm, the λ-Hybrid sweep, the ℓ-dictator line partition and an exact
//!   minimum-cost oracle ([`algorithms`]),
//! * exact verifiers for justified representation, the (α, β)-core and
//!   proportional fairness, each returning a tight factor and a witness
//!   ([`fairness`]),
//! * generators for every hand-built worst-case instance, a seeded random
//!   generator and the JSON instance format ([`instances`]),
//! * the command-line front end used by the `fair-transit` binary ([`cli`]).
//!
//! ```
//! use fair_transit::algorithms::eca;
//! use fair_transit::fairness::jr_ratio;
//! use fair_transit::instances::{generate, Family, FamilySpec};
//!
//! let spec = FamilySpec::new(Family::EcaJrTightTable5).with("eps", 0.01);
//! let inst = generate(&spec).unwrap().into_trsp().unwrap();
//! let (sol, _trace) = eca(&inst).unwrap();
//! let report = jr_ratio(&inst, &sol);
//! assert!(report.factor < 1.0 + 2f64.sqrt());
//! ```

pub mod algorithms;
pub mod cli;
pub mod clustering;
pub mod error;
pub mod fairness;
pub mod instances;
pub mod metric;
pub mod model;
pub mod reduction;
pub mod trace;

pub use error::{Error, Result};
pub use metric::{Metric, TOL};
pub use model::{Instance, Solution};
