//! Planar dipole Kakeya sets: explicit constructions, covering-number
//! estimators, and the discretized incidence machinery used to probe their
//! box and Assouad dimensions at finite scale.
//!
//! A *dipole Kakeya set* is a bounded planar set `A` with `A - A ⊇ S¹`,
//! i.e. one that realizes a unit-distance pair in every direction. This
//! crate builds two such sets by iterated arc operations and measures the
//! quantitative laws they obey: covering-number growth, neighbourhood
//! containment, direction density, annuli intersections, and maximal-
//! operator ratios.

pub mod checks;
pub mod construction_a;
pub mod construction_b;
pub mod dimension;
pub mod discretization;
pub mod geometry;
pub mod grid;

mod error;

pub use error::Error;

/// Tolerance for exact geometric identities (rotations, unit distances).
pub const GEOM_TOL: f64 = 1e-12;

/// Slack added to per-stage containment and density contracts.
pub const STAGE_TOL: f64 = 1e-9;

/// Unit-distance tolerance accepted when ingesting dipole pairs.
pub const PAIR_TOL: f64 = 1e-9;

/// Smallest covering scale before float resolution becomes suspect.
pub const MIN_COVER_SCALE: f64 = 9.094947017729282e-13; // 2^-40

/// Default cap on the number of points a construction may generate.
pub const DEFAULT_POINT_CAP: u64 = 50_000_000;

pub type Result<T> = std::result::Result<T, Error>;
