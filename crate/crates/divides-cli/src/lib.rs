//! Library half of the `divides` binary: output records, verification
//! sweeps, and the SVG renderer, kept separate so integration tests can
//! drive them directly.

pub mod records;
pub mod report;
pub mod suites;
pub mod svg;
