//! Fixed quadrature rules on the unit circle and the unit disk.

mod circle;
mod disk;
mod gauss;

pub use circle::{circle_integrate, CircleRule, DEFAULT_CIRCLE_NODES};
pub use disk::{
    disk_integrate, disk_integrate_centered, DiskNode, DiskRule, DiskScheme, CENTERED_INNER_POINTS,
    CENTERED_INNER_RADIUS, CENTERED_MIN_RING, CENTERED_OUTER_POINTS, DEFAULT_ANGULAR, DEFAULT_RADIAL,
};
pub use gauss::{gauss_legendre, gauss_legendre_on};
