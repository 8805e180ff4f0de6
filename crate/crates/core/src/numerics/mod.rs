//! Quadrature, polyline geometry and fitting primitives.

mod fit;
mod geometry;
mod quadrature;

pub use fit::{fit_power_law, PowerLawFit};
pub use geometry::{
    distance_to_polyline, hausdorff_distance, point_segment_distance, polyline_area,
    real_axis_crossings, winding_number, winding_number_with_tolerance,
};
pub use quadrature::{
    contour_quadrature, gauss_legendre, singular_endpoint_quadrature, Contour, ContourKind,
    IntervalPoint, DEFAULT_SINGULAR_NODES,
};
