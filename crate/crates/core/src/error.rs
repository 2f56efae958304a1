use thiserror::Error;

/// Everything that can go wrong while building or measuring the billiard geometry.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("point ({x}, {y}) is not strictly inside the unit disk")]
    OutsideDisk { x: f64, y: f64 },

    #[error("degenerate triangle (twice signed area {area:e})")]
    DegenerateTriangle { area: f64 },

    #[error("degenerate chord: the two points coincide")]
    DegenerateChord,

    #[error("points are not in chord-frame form: x-coordinates {0} and {1} differ")]
    NotInChordFrame(f64, f64),

    #[error("side lengths violate the triangle inequality (slack {slack:e})")]
    TriangleInequality { slack: f64 },

    #[error("{what} out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    #[error("no admissible placement of the triangle inside the disk")]
    NoPlacement,

    #[error("bisection did not converge; last bracket [{lower}, {upper}]")]
    NotConverged { lower: f64, upper: f64 },

    #[error("no transition found in [{lower}, {upper}]")]
    NoTransition { lower: f64, upper: f64 },
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
