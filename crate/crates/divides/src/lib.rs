//! Divide curves of staircase lattice regions and their link invariants.

pub mod braid;
pub mod families;
pub mod laurent;
pub mod region;
pub mod tracer;

pub use braid::{
    alexander, alexander_cable_trefoil, alexander_torus, band_to_artin, divide_to_braid,
    BraidError, BraidLetter, BraidWord, Sign,
};
pub use families::{FamilyError, FamilySpec, KnotDescriptor, SporadicData, SporadicType, TorusParams};
pub use laurent::LaurentPoly;
pub use region::{Edge, LatticePoint, Region, RegionError, StairType};
pub use tracer::intersect::{
    intersection_matrix, AuxLabel, AuxSegment, IntersectError, MultiDivide,
};
pub use tracer::{trace, Component, Divide, TraceError};
