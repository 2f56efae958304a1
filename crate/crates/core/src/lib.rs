//! Bar billiards in the unit disk: the circle map obtained by bouncing a
//! tangent line around a triangular obstacle, and the hyperbolic test that
//! decides when its rotation number is exactly 1/3.

pub mod circle_map;
pub mod congruence;
pub mod error;
pub mod hyperbolic;
pub mod inscribed;
pub mod numeric;
pub mod point;

pub use circle_map::{
    classify_dynamics, find_period3_orbits, iterate_orbit, psi, psi_lift, rotation_number, Basin,
    DynamicsCase, DynamicsReport, Period3Orbits, RotationEstimate, TangentMap,
};
pub use congruence::{
    admissible_translations, centered_equilateral, congruence_invariance_report, kappa, mu_estimate,
    scale_about, translate, CongruenceReport, MuEstimate, ShapeKind, TriangleShape,
};
pub use error::{GeometryError, Result};
pub use hyperbolic::{
    delta, foot_distance, from_klein, klein_chord_endpoints, klein_distance, klein_tangent_gap, omega,
    poincare_distance, tangent_gap, to_half_plane, to_klein, SideLengths,
};
pub use inscribed::{
    chord_frame, classify_via_ellipse, construct_inscribed_triangles, count_inscribed,
    count_inscribed_via_omega, envelope_line, poincare_arcs, tangency_ellipse, ArcCircle, ChordFrame,
    InscribedCount, Multiplicity, TangencyEllipse, DEFAULT_BAND,
};
pub use point::{BoundaryPoint, CircleAngle, DiskPoint, Point, Triangle};
