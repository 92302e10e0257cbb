//! Exact Schubert calculus on products of Grassmannians, and the invariants of
//! generic determinantal varieties built on it.

pub mod arith;
pub mod charclass;
pub mod cohomology;
pub mod detvar;
pub mod error;
pub mod partitions;
pub mod projbundle;
pub mod reference;

pub use charclass::{tangent_bundle, universal_bundles, BundleClass};
pub use cohomology::{GradedClass, Space};
pub use detvar::{
    chern_mather, conormal_cycle, euler_obstruction, euler_obstruction_matrix, invariant_report,
    microlocal_multiplicities, pascal_verify, polar_degrees, small_resolution_verify,
    ConormalCycle, InvariantReport, VarietyId,
};
pub use error::{Error, Result};
pub use partitions::{lr_coefficient, Partition};
pub use projbundle::{FiberedBundle, FiberedClass, ProjBundle};
