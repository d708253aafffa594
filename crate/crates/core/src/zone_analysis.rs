//! Pair counting for a removed plane, and the summed inequality over all
//! planes that drives the quadratic zone bound.
//!
//! For a generator `Q` and query plane `S`, the pairs `(f, C)` with `C` a
//! zone cell and `f` a generator face of `C` not on `Q` are bounded by the
//! zone size of `S` in the arrangement without `Q` plus the zone size of the
//! line `S ∩ Q` in the line arrangement induced on `Q`. The per-case counts
//! in [`CaseBreakdown`] follow the cells of the reduced arrangement: each is
//! either untouched by `Q`, or split by `Q` into two cells of which the
//! query crosses one or both.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::arrangement2d::zone_2d;
use crate::arrangement3d::{
    build_arrangement_3d, compute_box_half_width, general_position_3d, induced_arrangement, remove_plane, zone_3d,
    Arrangement3, Zone3Report,
};
use crate::error::ArrangementError;
use crate::exact::{to_f64, ExactScalar, Sign};
use crate::geometry::{Plane, PlaneId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("degenerate instance: {0}")]
    DegenerateInstance(#[from] ArrangementError),
    #[error("pair count exceeds the bound for plane {}: {} > {} + {}", .0.q_id, .0.lhs_pairs, .0.rhs_zone_without_q, .0.rhs_zone_induced)]
    Theorem1Violated(Box<Theorem1Record>),
    #[error("case accounting for plane {q_id} is inconsistent: {detail}")]
    InconsistentCases { q_id: PlaneId, detail: String },
    #[error("summed inequality fails for n = {}: lhs {} rhs {} pairs {}", .0.n, .0.lhs, .0.rhs, .0.sum_pairs)]
    RecurrenceViolated(Box<RecurrenceRecord>),
    #[error("constant fitting needs at least two distinct n values")]
    InsufficientData,
}

/// Pairs grouped by how `Q` meets the reduced-arrangement cell they come from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaseBreakdown {
    /// Zone cells of the reduced arrangement that `Q` does not cut.
    pub uncut_cells: usize,
    pub uncut_pairs: usize,
    /// Cut cells where the query crosses only one part.
    pub one_side_cells: usize,
    pub one_side_pairs: usize,
    /// Cut cells where the query crosses both parts.
    pub both_side_cells: usize,
    /// Faces of those cells that `Q` splits; each yields two pairs.
    pub both_side_split_faces: usize,
    /// Faces of those cells left whole in one part.
    pub both_side_unsplit_faces: usize,
}

impl CaseBreakdown {
    pub fn total_pairs(&self) -> usize {
        self.uncut_pairs + self.one_side_pairs + 2 * self.both_side_split_faces + self.both_side_unsplit_faces
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Record {
    pub q_id: PlaneId,
    pub lhs_pairs: usize,
    /// Zone size of the query in the arrangement without `Q`.
    pub rhs_zone_without_q: usize,
    /// Zone size of `S ∩ Q` in the line arrangement induced on `Q`.
    pub rhs_zone_induced: usize,
    pub cases: CaseBreakdown,
}

impl Theorem1Record {
    pub fn rhs(&self) -> usize {
        self.rhs_zone_without_q + self.rhs_zone_induced
    }

    pub fn holds(&self) -> bool {
        self.lhs_pairs <= self.rhs()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceRecord {
    pub n: usize,
    pub zone_size: usize,
    pub per_q: Vec<Theorem1Record>,
    /// `(n − 1) · zone_size`.
    pub lhs: i64,
    /// Sum of both right-hand terms over all `Q`.
    pub rhs: i64,
    /// Sum of `lhs_pairs` over all `Q`.
    pub sum_pairs: i64,
    /// `zone_size / n`.
    pub f_value: ExactScalar,
}

impl RecurrenceRecord {
    pub fn holds(&self) -> bool {
        self.lhs == self.sum_pairs && self.lhs <= self.rhs
    }
}

/// An arrangement with a validated query plane and its zone.
#[derive(Debug, Clone)]
pub struct ZoneInstance {
    pub arrangement: Arrangement3,
    pub query: Plane,
    pub zone: Zone3Report,
}

impl ZoneInstance {
    /// Checks general position of `planes ∪ {query}`, sizes the box for both,
    /// and computes the zone.
    pub fn new(planes: &[Plane], query: &Plane) -> Result<ZoneInstance, AnalysisError> {
        let report = general_position_3d(planes, Some(query));
        if !report.is_ok() {
            return Err(ArrangementError::NotGeneralPosition3(report).into());
        }
        let half_width = compute_box_half_width(planes, std::slice::from_ref(query))?;
        let arrangement = build_arrangement_3d(planes, half_width)?;
        let zone = zone_3d(&arrangement, query)?;
        Ok(ZoneInstance {
            arrangement,
            query: query.clone(),
            zone,
        })
    }

    pub fn n(&self) -> usize {
        self.arrangement.planes().len()
    }
}

/// Zone cells of `arr` times their generator faces not lying in `Q`.
pub fn count_pairs(arr: &Arrangement3, query: &Plane, q_id: PlaneId) -> Result<usize, AnalysisError> {
    let zone = zone_3d(arr, query)?;
    count_pairs_in_zone(arr, &zone, q_id)
}

fn count_pairs_in_zone(arr: &Arrangement3, zone: &Zone3Report, q_id: PlaneId) -> Result<usize, AnalysisError> {
    let qi = arr.index_of(q_id).ok_or(ArrangementError::UnknownPlane(q_id))?;
    Ok(zone
        .cell_ids
        .iter()
        .map(|&c| arr.cells()[c].generator_faces().filter(|&g| g != qi).count())
        .sum())
}

/// Plane ids of the generator faces of a cell, optionally leaving one out.
fn face_plane_ids(arr: &Arrangement3, cell: usize, skip: Option<PlaneId>) -> BTreeSet<PlaneId> {
    arr.cells()[cell]
        .generator_faces()
        .map(|g| arr.planes()[g].id())
        .filter(|id| Some(*id) != skip)
        .collect()
}

/// Builds the reduced and induced arrangements for `q_id` and compares the
/// pair count against both zone sizes.
pub fn theorem1_for(instance: &ZoneInstance, q_id: PlaneId) -> Result<Theorem1Record, AnalysisError> {
    let arr = &instance.arrangement;
    let qi = arr.index_of(q_id).ok_or(ArrangementError::UnknownPlane(q_id))?;
    let lhs_pairs = count_pairs_in_zone(arr, &instance.zone, q_id)?;

    let reduced = remove_plane(arr, q_id)?;
    let reduced_zone = zone_3d(&reduced, &instance.query)?;
    let (induced, chart) = induced_arrangement(arr, q_id)?;
    let trace = chart.line_of(&instance.query).map_err(ArrangementError::from)?;
    let induced_zone = zone_2d(&induced, &trace)?;

    let inconsistent = |detail: String| AnalysisError::InconsistentCases { q_id, detail };
    let mut cases = CaseBreakdown::default();
    for &c in &reduced_zone.cell_ids {
        let cell = &reduced.cells()[c];
        let above = arr.cell_of(&cell.sign_vector.with_inserted(qi, Sign::Positive));
        let below = arr.cell_of(&cell.sign_vector.with_inserted(qi, Sign::Negative));
        let reduced_faces = face_plane_ids(&reduced, c, None);
        match (above, below) {
            (Some(part), None) | (None, Some(part)) => {
                if !instance.zone.cell_ids.contains(&part) {
                    return Err(inconsistent(format!("uncut cell {} left the zone", cell.sign_vector)));
                }
                if face_plane_ids(arr, part, None) != reduced_faces {
                    return Err(inconsistent(format!("uncut cell {} changed faces", cell.sign_vector)));
                }
                cases.uncut_cells += 1;
                cases.uncut_pairs += reduced_faces.len();
            }
            (Some(a), Some(b)) => {
                let faces_a = face_plane_ids(arr, a, Some(q_id));
                let faces_b = face_plane_ids(arr, b, Some(q_id));
                let union: BTreeSet<PlaneId> = faces_a.union(&faces_b).copied().collect();
                if union != reduced_faces {
                    return Err(inconsistent(format!(
                        "parts of cut cell {} do not cover its faces",
                        cell.sign_vector
                    )));
                }
                match (instance.zone.cell_ids.contains(&a), instance.zone.cell_ids.contains(&b)) {
                    (true, true) => {
                        let split = faces_a.intersection(&faces_b).count();
                        cases.both_side_cells += 1;
                        cases.both_side_split_faces += split;
                        cases.both_side_unsplit_faces += union.len() - split;
                    }
                    (true, false) => {
                        cases.one_side_cells += 1;
                        cases.one_side_pairs += faces_a.len();
                    }
                    (false, true) => {
                        cases.one_side_cells += 1;
                        cases.one_side_pairs += faces_b.len();
                    }
                    (false, false) => {
                        return Err(inconsistent(format!(
                            "query crosses cut cell {} but neither part",
                            cell.sign_vector
                        )))
                    }
                }
            }
            (None, None) => {
                return Err(inconsistent(format!("cell {} has no counterpart", cell.sign_vector)));
            }
        }
    }

    let record = Theorem1Record {
        q_id,
        lhs_pairs,
        rhs_zone_without_q: reduced_zone.zone_size,
        rhs_zone_induced: induced_zone.zone_size,
        cases,
    };
    if record.cases.total_pairs() != record.lhs_pairs {
        return Err(inconsistent(format!(
            "cases account for {} pairs, direct count is {}",
            record.cases.total_pairs(),
            record.lhs_pairs
        )));
    }
    if record.cases.both_side_split_faces > record.rhs_zone_induced {
        return Err(inconsistent(format!(
            "{} split faces but the induced zone has size {}",
            record.cases.both_side_split_faces, record.rhs_zone_induced
        )));
    }
    if !record.holds() {
        return Err(AnalysisError::Theorem1Violated(Box::new(record)));
    }
    Ok(record)
}

pub fn verify_theorem1(planes: &[Plane], query: &Plane, q_id: PlaneId) -> Result<Theorem1Record, AnalysisError> {
    let instance = ZoneInstance::new(planes, query)?;
    theorem1_for(&instance, q_id)
}

/// Runs [`theorem1_for`] for every generator and checks the summed form.
pub fn recurrence_for(instance: &ZoneInstance) -> Result<RecurrenceRecord, AnalysisError> {
    let ids: Vec<PlaneId> = instance.arrangement.planes().iter().map(|p| p.id()).collect();
    let per_q = ids
        .par_iter()
        .map(|&q| theorem1_for(instance, q))
        .collect::<Result<Vec<_>, _>>()?;
    let n = instance.n();
    let zone_size = instance.zone.zone_size;
    let f_value = if n == 0 {
        BigRational::from_integer(BigInt::from(0))
    } else {
        BigRational::new(BigInt::from(zone_size), BigInt::from(n))
    };
    let record = RecurrenceRecord {
        n,
        zone_size,
        lhs: (n as i64 - 1) * zone_size as i64,
        rhs: per_q.iter().map(|r| r.rhs() as i64).sum(),
        sum_pairs: per_q.iter().map(|r| r.lhs_pairs as i64).sum(),
        per_q,
        f_value,
    };
    if n > 0 && !record.holds() {
        return Err(AnalysisError::RecurrenceViolated(Box::new(record)));
    }
    Ok(record)
}

pub fn verify_recurrence(planes: &[Plane], query: &Plane) -> Result<RecurrenceRecord, AnalysisError> {
    let instance = ZoneInstance::new(planes, query)?;
    recurrence_for(&instance)
}

/// One observed zone size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZoneSample {
    pub n: usize,
    pub zone_size: usize,
}

impl From<&RecurrenceRecord> for ZoneSample {
    fn from(r: &RecurrenceRecord) -> Self {
        ZoneSample {
            n: r.n,
            zone_size: r.zone_size,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZoneStatRow {
    pub n: usize,
    pub trials: usize,
    pub max_zone: usize,
    /// `max_zone / n`.
    pub max_f: ExactScalar,
    /// `max_zone / n²`.
    pub max_zone_over_n2: ExactScalar,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZoneStatistics {
    pub rows: Vec<ZoneStatRow>,
    /// Least-squares slope of `max_f` against `n`.
    pub slope_approx: f64,
    pub intercept_approx: f64,
}

impl ZoneStatistics {
    pub fn row(&self, n: usize) -> Option<&ZoneStatRow> {
        self.rows.iter().find(|r| r.n == n)
    }
}

/// Per-`n` maxima and a linear fit of `z(n)/n` against `n`.
pub fn fit_constants(samples: &[ZoneSample]) -> Result<ZoneStatistics, AnalysisError> {
    let mut by_n: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for s in samples.iter().filter(|s| s.n > 0) {
        let entry = by_n.entry(s.n).or_insert((0, 0));
        entry.0 += 1;
        entry.1 = entry.1.max(s.zone_size);
    }
    if by_n.len() < 2 {
        return Err(AnalysisError::InsufficientData);
    }
    let rows: Vec<ZoneStatRow> = by_n
        .into_iter()
        .map(|(n, (trials, max_zone))| ZoneStatRow {
            n,
            trials,
            max_zone,
            max_f: BigRational::new(BigInt::from(max_zone), BigInt::from(n)),
            max_zone_over_n2: BigRational::new(BigInt::from(max_zone), BigInt::from(n * n)),
        })
        .collect();
    let xs: Vec<f64> = rows.iter().map(|r| r.n as f64).collect();
    let ys: Vec<f64> = rows.iter().map(|r| to_f64(&r.max_f)).collect();
    let count = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / count;
    let mean_y = ys.iter().sum::<f64>() / count;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mean_x) * (x - mean_x)).sum();
    let slope_approx = sxy / sxx;
    Ok(ZoneStatistics {
        rows,
        slope_approx,
        intercept_approx: mean_y - slope_approx * mean_x,
    })
}
