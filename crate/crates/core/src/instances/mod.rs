//! Instance generators and file I/O.

mod families;
mod io;
mod random;

pub use families::{
    generate, hybrid_core_q, hybrid_jr_dhat, kz_vertices, Family, FamilySpec, Generated, FAR_FACTOR,
};
pub use io::{
    instance_from_json, instance_to_json, line_from_json, line_to_json, read_instance, write_instance,
};
pub use random::{random_clustering, random_euclidean, random_line, TransitMode};
