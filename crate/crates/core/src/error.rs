use thiserror::Error;

use crate::arrangement2d::GeneralPosition2;
use crate::arrangement3d::GeneralPosition3;
use crate::geometry::{GeometryError, LineId, PlaneId};

/// Why a bounding box is unusable for an arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoxViolation {
    /// A vertex of the generators lies on or outside the box.
    VertexOutsideBox(String),
    /// A point of the extended arrangement lies on more hyperplanes than
    /// the dimension allows (box corner on a generator, generator vertex on
    /// a box side, ...).
    OverdeterminedVertex(String),
    /// The intersection line of two generators lies inside a box plane.
    LineInBoxFace(PlaneId, PlaneId),
    /// A generator line misses the interior of the box.
    LineMissesBox(LineId),
}

impl std::fmt::Display for BoxViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoxViolation::VertexOutsideBox(what) => write!(f, "vertex {what} is not inside the box"),
            BoxViolation::OverdeterminedVertex(what) => {
                write!(f, "point {what} lies on too many hyperplanes")
            }
            BoxViolation::LineInBoxFace(a, b) => {
                write!(f, "line of planes {a} and {b} lies in a box plane")
            }
            BoxViolation::LineMissesBox(l) => write!(f, "line {l} misses the box interior"),
        }
    }
}

/// Why a zone query is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryDegeneracy {
    ParallelTo(usize),
    ThroughVertex(String),
}

impl std::fmt::Display for QueryDegeneracy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QueryDegeneracy::ParallelTo(id) => write!(f, "query is parallel to generator {id}"),
            QueryDegeneracy::ThroughVertex(what) => write!(f, "query passes through vertex {what}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("lines not in general position: {0}")]
    NotGeneralPosition2(GeneralPosition2),
    #[error("planes not in general position: {0}")]
    NotGeneralPosition3(GeneralPosition3),
    #[error("box half-width {half_width} is too small: {violation}")]
    BoxTooSmall {
        half_width: String,
        violation: BoxViolation,
    },
    #[error("box half-width {half_width} is not generic: {violation}")]
    BoxGenericityViolation {
        half_width: String,
        violation: BoxViolation,
    },
    #[error("degenerate query: {0}")]
    DegenerateQuery(QueryDegeneracy),
    #[error("no generator with id {0}")]
    UnknownPlane(PlaneId),
    #[error("box half-width must be positive")]
    NonPositiveBox,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
