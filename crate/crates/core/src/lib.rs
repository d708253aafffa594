//! Exact line and plane arrangements, zones, and empirical checks of the
//! counting argument behind the quadratic bound on zones of planes in space.
//!
//! All geometry is exact rational arithmetic. Arrangements are built inside
//! an axis-aligned bounding box so every cell is a bounded convex polytope;
//! box-supported faces and edges take part in the geometry but never in zone
//! sizes.

pub mod arrangement2d;
pub mod arrangement3d;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod harness;
pub mod io;
pub mod rng;
pub mod zone_analysis;

pub use arrangement2d::{
    build_arrangement_2d, compute_square_half_width, general_position_2d, zone_2d, Arrangement2, Zone2Report,
};
pub use arrangement3d::{
    build_arrangement_3d, compute_box_half_width, general_position_3d, induced_arrangement, remove_plane, zone_3d,
    Arrangement3, Chart, Zone3Report,
};
pub use error::ArrangementError;
pub use exact::{ExactScalar, Sign, SignVector};
pub use geometry::{Line2, Plane, Point2, Point3};
pub use harness::{run_experiment, ExperimentConfig, ExperimentOutput, HarnessError, Mode};
pub use zone_analysis::{
    count_pairs, fit_constants, recurrence_for, theorem1_for, verify_recurrence, verify_theorem1, AnalysisError,
    CaseBreakdown, RecurrenceRecord, Theorem1Record, ZoneInstance, ZoneSample, ZoneStatistics,
};
