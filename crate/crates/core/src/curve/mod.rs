//! Tropical hypersurfaces, weighted plane curves and their divisors.

mod divisor;
mod duality;
mod plane;

pub use divisor::{curve_to_divisor, divisor_sub, Divisor, Piece, Shape, SupportLine};
pub use duality::{duality_samples, graph_duality_check, Clause, DualityReport, SampleOutcome};
pub use plane::{
    balancing_check, hypersurface_member, plane_curve, recession_fan, CurveEdge, CurveRay,
    PlaneCurve,
};
