//! Random general-position instances and experiment runs.
//!
//! Every trial draws from its own [`SplitMix64`] stream keyed by
//! `(seed, n, trial)`, so trials run in parallel and rows still come out
//! ordered by `(n, trial)` with byte-identical output for a fixed config.

use std::fmt::Write as _;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::arrangement2d::{build_arrangement_2d, compute_square_half_width, general_position_2d, zone_2d};
use crate::arrangement3d::{build_arrangement_3d, compute_box_half_width, general_position_3d, Arrangement3};
use crate::error::ArrangementError;
use crate::exact::{format_rational, to_f64, ExactScalar};
use crate::geometry::{GeometryError, Line2, Plane};
use crate::io::{format_lines, format_planes, CsvTable};
use crate::rng::SplitMix64;
use crate::zone_analysis::{fit_constants, recurrence_for, theorem1_for, AnalysisError, ZoneInstance, ZoneSample};

/// Draws allowed per instance before giving up.
pub const GENERATION_BUDGET: usize = 10_000;

/// Largest `n` accepted unless overridden.
pub const DEFAULT_MAX_N: usize = 15;

/// Constant in the empirical linear bound on 2D zone sizes.
pub const ZONE2D_LINEAR_BOUND: usize = 10;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("no general-position instance with n = {n} after {attempts} draws; raise the coefficient bound")]
    GenerationExhausted { n: usize, attempts: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("seed {seed}, n {n}, trial {trial}: {message}\n{dump}")]
    Instance {
        seed: u64,
        n: usize,
        trial: usize,
        message: String,
        dump: String,
        /// True for failed checks, false for rejected input.
        assertion: bool,
    },
}

impl HarnessError {
    /// 1 for a failed check, 2 for usage or input problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Instance { assertion: true, .. } => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    EulerChecks,
    Zone2d,
    Zone3d,
    Theorem1,
    Recurrence,
    Sweep,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::EulerChecks => "euler-checks",
            Mode::Zone2d => "zone2d",
            Mode::Zone3d => "zone3d",
            Mode::Theorem1 => "theorem1",
            Mode::Recurrence => "recurrence",
            Mode::Sweep => "sweep",
        }
    }
}

/// Instance input that replaces random generation.
#[derive(Debug, Clone, Default)]
pub struct Fixture {
    pub planes: Option<Vec<Plane>>,
    pub query_plane: Option<Plane>,
    pub lines: Option<Vec<Line2>>,
    pub query_line: Option<Line2>,
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub mode: Mode,
    pub n_min: usize,
    pub n_max: usize,
    pub trials_per_n: usize,
    pub seed: u64,
    pub coefficient_bound: i64,
    pub max_n: usize,
    pub fixture: Fixture,
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(mode: Mode) -> Self {
        ExperimentConfig {
            mode,
            n_min: 3,
            n_max: 8,
            trials_per_n: 5,
            seed: 1,
            coefficient_bound: 20,
            max_n: DEFAULT_MAX_N,
            fixture: Fixture::default(),
            out: None,
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let fail = |m: String| Err(HarnessError::Config(m));
        if self.n_min < 1 {
            return fail("n_min must be at least 1".into());
        }
        if self.n_min > self.n_max {
            return fail(format!("n_min {} exceeds n_max {}", self.n_min, self.n_max));
        }
        if self.trials_per_n < 1 {
            return fail("trials per n must be at least 1".into());
        }
        if self.coefficient_bound < 2 {
            return fail("coefficient bound must be at least 2".into());
        }
        let largest = self.instance_sizes().into_iter().max().unwrap_or(0);
        if largest > self.max_n {
            return fail(format!(
                "n = {largest} exceeds the ceiling {}; pass a larger --max-n-override",
                self.max_n
            ));
        }
        if self.mode == Mode::Sweep && self.fixture_size().is_some() {
            return fail("sweep mode generates its own instances".into());
        }
        Ok(())
    }

    fn fixture_size(&self) -> Option<usize> {
        match self.mode {
            Mode::Zone2d => self.fixture.lines.as_ref().map(Vec::len),
            _ => self.fixture.planes.as_ref().map(Vec::len),
        }
    }

    /// `(n, trial)` pairs in output order.
    fn schedule(&self) -> Vec<(usize, usize)> {
        match self.fixture_size() {
            Some(n) => vec![(n, 0)],
            None => (self.n_min..=self.n_max)
                .flat_map(|n| (0..self.trials_per_n).map(move |t| (n, t)))
                .collect(),
        }
    }

    fn instance_sizes(&self) -> Vec<usize> {
        self.schedule().into_iter().map(|(n, _)| n).collect()
    }
}

fn random_rational(rng: &mut SplitMix64, bound: i64) -> ExactScalar {
    let num = rng.range_inclusive(-bound, bound);
    let den = rng.range_inclusive(1, bound);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn random_plane(rng: &mut SplitMix64, bound: i64, id: usize) -> Option<Plane> {
    let [a, b, c, d] = [(); 4].map(|_| random_rational(rng, bound));
    Plane::new(id, a, b, c, d).ok()
}

fn random_line(rng: &mut SplitMix64, bound: i64, id: usize) -> Option<Line2> {
    let [a, b, c] = [(); 3].map(|_| random_rational(rng, bound));
    Line2::new(id, a, b, c).ok()
}

/// `n` planes with random rational coefficients, ids `0..n`, drawn one at a
/// time and redrawn until the set stays in general position and admits a
/// generic bounding box.
pub fn generate_planes(n: usize, rng: &mut SplitMix64, bound: i64) -> Result<Vec<Plane>, HarnessError> {
    let mut planes: Vec<Plane> = Vec::with_capacity(n);
    let mut attempts = 0;
    while planes.len() < n {
        if attempts == GENERATION_BUDGET {
            return Err(HarnessError::GenerationExhausted { n, attempts });
        }
        attempts += 1;
        let Some(candidate) = random_plane(rng, bound, planes.len()) else {
            continue;
        };
        if !general_position_3d(&planes, Some(&candidate)).is_ok() {
            continue;
        }
        planes.push(candidate);
        if compute_box_half_width(&planes, &[]).is_err() {
            planes.pop();
        }
    }
    Ok(planes)
}

/// A query plane with id `planes.len()` in general position with `planes`.
pub fn generate_query_plane(planes: &[Plane], rng: &mut SplitMix64, bound: i64) -> Result<Plane, HarnessError> {
    for _ in 0..GENERATION_BUDGET {
        let Some(candidate) = random_plane(rng, bound, planes.len()) else {
            continue;
        };
        if general_position_3d(planes, Some(&candidate)).is_ok()
            && compute_box_half_width(planes, std::slice::from_ref(&candidate)).is_ok()
        {
            return Ok(candidate);
        }
    }
    Err(HarnessError::GenerationExhausted {
        n: planes.len() + 1,
        attempts: GENERATION_BUDGET,
    })
}

pub fn generate_lines(n: usize, rng: &mut SplitMix64, bound: i64) -> Result<Vec<Line2>, HarnessError> {
    let mut lines: Vec<Line2> = Vec::with_capacity(n);
    let mut attempts = 0;
    while lines.len() < n {
        if attempts == GENERATION_BUDGET {
            return Err(HarnessError::GenerationExhausted { n, attempts });
        }
        attempts += 1;
        let Some(candidate) = random_line(rng, bound, lines.len()) else {
            continue;
        };
        lines.push(candidate);
        if !general_position_2d(&lines).is_ok() || compute_square_half_width(&lines, &[]).is_err() {
            lines.pop();
        }
    }
    Ok(lines)
}

pub fn generate_query_line(lines: &[Line2], rng: &mut SplitMix64, bound: i64) -> Result<Line2, HarnessError> {
    for _ in 0..GENERATION_BUDGET {
        let Some(candidate) = random_line(rng, bound, lines.len()) else {
            continue;
        };
        if compute_square_half_width(lines, std::slice::from_ref(&candidate)).is_ok() {
            return Ok(candidate);
        }
    }
    Err(HarnessError::GenerationExhausted {
        n: lines.len() + 1,
        attempts: GENERATION_BUDGET,
    })
}

/// Rows plus a human-readable summary.
#[derive(Debug, Clone)]
pub struct ExperimentOutput {
    pub table: CsvTable,
    pub summary: String,
}

struct TrialContext<'a> {
    config: &'a ExperimentConfig,
    n: usize,
    trial: usize,
    rng: SplitMix64,
}

impl TrialContext<'_> {
    fn fail(&self, message: String, dump: String, assertion: bool) -> HarnessError {
        HarnessError::Instance {
            seed: self.config.seed,
            n: self.n,
            trial: self.trial,
            message,
            dump,
            assertion,
        }
    }

    fn planes(&mut self) -> Result<Vec<Plane>, HarnessError> {
        match &self.config.fixture.planes {
            Some(p) => Ok(p.clone()),
            None => generate_planes(self.n, &mut self.rng, self.config.coefficient_bound),
        }
    }

    fn query_plane(&mut self, planes: &[Plane]) -> Result<Plane, HarnessError> {
        match &self.config.fixture.query_plane {
            Some(s) => Ok(s.with_id(planes.len())),
            None => generate_query_plane(planes, &mut self.rng, self.config.coefficient_bound),
        }
    }

    fn lines(&mut self) -> Result<Vec<Line2>, HarnessError> {
        match &self.config.fixture.lines {
            Some(l) => Ok(l.clone()),
            None => generate_lines(self.n, &mut self.rng, self.config.coefficient_bound),
        }
    }

    fn query_line(&mut self, lines: &[Line2]) -> Result<Line2, HarnessError> {
        match &self.config.fixture.query_line {
            Some(s) => Ok(s.with_id(lines.len())),
            None => generate_query_line(lines, &mut self.rng, self.config.coefficient_bound),
        }
    }

    fn planes_dump(planes: &[Plane], query: Option<&Plane>) -> String {
        let mut dump = format!("# planes\n{}", format_planes(planes));
        if let Some(s) = query {
            let _ = write!(dump, "# query\n{s}\n");
        }
        dump
    }

    fn instance(&mut self) -> Result<(ZoneInstance, String), HarnessError> {
        let planes = self.planes()?;
        let query = self.query_plane(&planes)?;
        let dump = Self::planes_dump(&planes, Some(&query));
        let instance = ZoneInstance::new(&planes, &query).map_err(|e| self.fail(e.to_string(), dump.clone(), false))?;
        Ok((instance, dump))
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(n,0) + C(n,1) + C(n,2) + C(n,3)`.
pub fn expected_cell_count(n: usize) -> usize {
    (0..=3).map(|k| binomial(n, k)).sum()
}

/// `1 + n + C(n,2)`.
pub fn expected_face_count(n: usize) -> usize {
    1 + n + binomial(n, 2)
}

/// Exact per-cell identities and census checks; the first failure as text.
pub fn check_cell_identities(arr: &Arrangement3) -> Result<(), String> {
    let n = arr.planes().len();
    for (i, c) in arr.cells().iter().enumerate() {
        if 2 * c.e_count != 3 * c.v_count {
            return Err(format!("cell {i}: 2E = {} but 3V = {}", 2 * c.e_count, 3 * c.v_count));
        }
        if c.f_count + c.v_count != c.e_count + 2 {
            return Err(format!(
                "cell {i}: F = {} but E - V + 2 = {}",
                c.f_count,
                c.e_count as i64 - c.v_count as i64 + 2
            ));
        }
        if c.v_count >= 2 * c.f_count || c.e_count >= 3 * c.f_count {
            return Err(format!("cell {i}: V < 2F or E < 3F fails"));
        }
    }
    if arr.cells().len() != expected_cell_count(n) {
        return Err(format!(
            "{} cells, expected {}",
            arr.cells().len(),
            expected_cell_count(n)
        ));
    }
    if arr.generator_vertex_count() != binomial(n, 3) {
        return Err(format!(
            "{} generator vertices, expected {}",
            arr.generator_vertex_count(),
            binomial(n, 3)
        ));
    }
    Ok(())
}

fn approx(x: f64) -> String {
    format!("{x:.6}")
}

fn ratio_approx(num: usize, den: usize) -> String {
    if den == 0 {
        approx(0.0)
    } else {
        approx(num as f64 / den as f64)
    }
}

fn run_trial(config: &ExperimentConfig, n: usize, trial: usize) -> Result<Vec<Vec<String>>, HarnessError> {
    let mut ctx = TrialContext {
        config,
        n,
        trial,
        rng: SplitMix64::for_trial(config.seed, n, trial),
    };
    let prefix = [config.seed.to_string(), n.to_string(), trial.to_string()];
    let row = |cells: Vec<String>| -> Vec<String> { prefix.iter().cloned().chain(cells).collect() };

    match config.mode {
        Mode::EulerChecks => {
            let planes = ctx.planes()?;
            let dump = TrialContext::planes_dump(&planes, None);
            let arr = compute_box_half_width(&planes, &[])
                .and_then(|a| build_arrangement_3d(&planes, a))
                .map_err(|e| ctx.fail(e.to_string(), dump.clone(), false))?;
            check_cell_identities(&arr).map_err(|m| ctx.fail(m, format!("{dump}{}", arr.dump()), true))?;
            Ok(vec![row(vec![
                format_rational(arr.box_half_width()),
                arr.cells().len().to_string(),
                arr.vertices().len().to_string(),
                arr.generator_vertex_count().to_string(),
                "true".into(),
            ])])
        }
        Mode::Zone2d => {
            let lines = ctx.lines()?;
            let query = ctx.query_line(&lines)?;
            let dump = format!("# lines\n{}# query\n{query}\n", format_lines(&lines));
            let (arr, zone) = compute_square_half_width(&lines, std::slice::from_ref(&query))
                .and_then(|w| build_arrangement_2d(&lines, w))
                .and_then(|arr| zone_2d(&arr, &query).map(|z| (arr, z)))
                .map_err(|e| ctx.fail(e.to_string(), dump.clone(), false))?;
            let n = lines.len();
            if arr.faces().len() != expected_face_count(n) {
                return Err(ctx.fail(
                    format!("{} faces, expected {}", arr.faces().len(), expected_face_count(n)),
                    dump,
                    true,
                ));
            }
            if zone.zone_size > ZONE2D_LINEAR_BOUND * n {
                return Err(ctx.fail(
                    format!("2D zone size {} exceeds {}n", zone.zone_size, ZONE2D_LINEAR_BOUND),
                    dump,
                    true,
                ));
            }
            Ok(vec![row(vec![
                arr.faces().len().to_string(),
                zone.face_count().to_string(),
                zone.zone_size.to_string(),
                ratio_approx(zone.zone_size, n),
            ])])
        }
        Mode::Zone3d => {
            let (instance, dump) = ctx.instance()?;
            let zone = &instance.zone;
            if instance.n() >= 1 && zone.cell_count > zone.zone_size {
                return Err(ctx.fail(
                    format!("zone has {} cells but size {}", zone.cell_count, zone.zone_size),
                    dump,
                    true,
                ));
            }
            Ok(vec![row(vec![
                instance.arrangement.cells().len().to_string(),
                zone.cell_count.to_string(),
                zone.zone_size.to_string(),
                ratio_approx(zone.zone_size, instance.n() * instance.n()),
            ])])
        }
        Mode::Theorem1 => {
            let (instance, dump) = ctx.instance()?;
            let mut rows = Vec::new();
            for plane in instance.arrangement.planes() {
                let record = theorem1_for(&instance, plane.id()).map_err(|e| analysis_failure(&ctx, e, &dump))?;
                let c = &record.cases;
                rows.push(row(vec![
                    record.q_id.to_string(),
                    record.lhs_pairs.to_string(),
                    record.rhs_zone_without_q.to_string(),
                    record.rhs_zone_induced.to_string(),
                    record.holds().to_string(),
                    c.uncut_pairs.to_string(),
                    c.one_side_pairs.to_string(),
                    c.both_side_split_faces.to_string(),
                    c.both_side_unsplit_faces.to_string(),
                ]));
            }
            Ok(rows)
        }
        Mode::Recurrence => {
            let (instance, dump) = ctx.instance()?;
            let record = recurrence_for(&instance).map_err(|e| analysis_failure(&ctx, e, &dump))?;
            Ok(vec![row(vec![
                record.zone_size.to_string(),
                record.lhs.to_string(),
                record.sum_pairs.to_string(),
                record.rhs.to_string(),
                record.holds().to_string(),
                format_rational(&record.f_value),
                approx(to_f64(&record.f_value)),
            ])])
        }
        Mode::Sweep => {
            let (instance, dump) = ctx.instance()?;
            let lines = generate_lines(n, &mut ctx.rng, config.coefficient_bound)?;
            let query = generate_query_line(&lines, &mut ctx.rng, config.coefficient_bound)?;
            let zone2 = compute_square_half_width(&lines, std::slice::from_ref(&query))
                .and_then(|w| build_arrangement_2d(&lines, w))
                .and_then(|arr| zone_2d(&arr, &query))
                .map_err(|e| ctx.fail(e.to_string(), dump.clone(), false))?;
            if zone2.zone_size > ZONE2D_LINEAR_BOUND * n {
                let dump = format!("# lines\n{}# query\n{query}\n", format_lines(&lines));
                return Err(ctx.fail(
                    format!("2D zone size {} exceeds {}n", zone2.zone_size, ZONE2D_LINEAR_BOUND),
                    dump,
                    true,
                ));
            }
            let z = instance.zone.zone_size;
            Ok(vec![row(vec![
                z.to_string(),
                instance.zone.cell_count.to_string(),
                zone2.zone_size.to_string(),
                ratio_approx(z, n),
                ratio_approx(z, n * n),
                ratio_approx(zone2.zone_size, n),
            ])])
        }
    }
}

fn analysis_failure(ctx: &TrialContext<'_>, err: AnalysisError, dump: &str) -> HarnessError {
    let assertion = !matches!(err, AnalysisError::DegenerateInstance(_));
    ctx.fail(err.to_string(), dump.to_string(), assertion)
}

fn header(mode: Mode) -> CsvTable {
    let specific: &[&str] = match mode {
        Mode::EulerChecks => &["box_half_width", "cells", "vertices", "generator_vertices", "identities_ok"],
        Mode::Zone2d => &["faces", "zone_faces", "zone_size", "zone_over_n_approx"],
        Mode::Zone3d => &["cells", "zone_cells", "zone_size", "zone_over_n2_approx"],
        Mode::Theorem1 => &[
            "q",
            "lhs",
            "rhs_without_q",
            "rhs_induced",
            "ok",
            "uncut_pairs",
            "one_side_pairs",
            "split_faces",
            "unsplit_faces",
        ],
        Mode::Recurrence => &["zone_size", "lhs", "sum_pairs", "rhs", "ok", "f", "f_approx"],
        Mode::Sweep => &[
            "zone_size",
            "zone_cells",
            "zone2d_size",
            "z_over_n_approx",
            "z_over_n2_approx",
            "zone2d_over_n_approx",
        ],
    };
    let mut columns = vec!["seed", "n", "trial"];
    columns.extend_from_slice(specific);
    CsvTable::new(&columns)
}

/// Largest `z(n)/n²` at `n_hi` over that at `n_lo`, when both were swept.
pub fn growth_ratio(stats: &crate::zone_analysis::ZoneStatistics, n_lo: usize, n_hi: usize) -> Option<f64> {
    let lo = stats.row(n_lo)?;
    let hi = stats.row(n_hi)?;
    Some(to_f64(&hi.max_zone_over_n2) / to_f64(&lo.max_zone_over_n2))
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutput, HarnessError> {
    config.validate()?;
    let schedule = config.schedule();
    let results: Vec<Vec<Vec<String>>> = schedule
        .par_iter()
        .map(|&(n, trial)| run_trial(config, n, trial))
        .collect::<Result<_, _>>()?;
    let mut table = header(config.mode);
    table.rows = results.into_iter().flatten().collect();

    let mut summary = format!(
        "mode={} seed={} instances={} rows={}\n",
        config.mode.name(),
        config.seed,
        schedule.len(),
        table.rows.len()
    );
    if config.mode == Mode::Sweep {
        let zi = table.column("zone_size").expect("column");
        let z2 = table.column("zone2d_size").expect("column");
        let samples: Vec<ZoneSample> = table
            .rows
            .iter()
            .map(|r| ZoneSample {
                n: r[1].parse().expect("n column"),
                zone_size: r[zi].parse().expect("zone column"),
            })
            .collect();
        let max2d = table
            .rows
            .iter()
            .map(|r| (r[z2].parse::<usize>().expect("zone2d column"), r[1].parse::<usize>().expect("n")))
            .max_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
        match fit_constants(&samples) {
            Ok(stats) => {
                let _ = writeln!(summary, "n,max_z,max_f,max_z_over_n2_approx");
                for r in &stats.rows {
                    let _ = writeln!(
                        summary,
                        "{},{},{},{}",
                        r.n,
                        r.max_zone,
                        format_rational(&r.max_f),
                        approx(to_f64(&r.max_zone_over_n2))
                    );
                }
                let _ = writeln!(
                    summary,
                    "fit f(n) ~ {} * n + {}",
                    approx(stats.slope_approx),
                    approx(stats.intercept_approx)
                );
                if let Some(g) = growth_ratio(&stats, 5, 10) {
                    let _ = writeln!(summary, "growth of max z(n)/n^2 from n=5 to n=10: {}", approx(g));
                }
            }
            Err(e) => {
                let _ = writeln!(summary, "no fit: {e}");
            }
        }
        if let Some((z, n)) = max2d {
            let _ = writeln!(summary, "largest 2D zone/n: {z}/{n}");
        }
    }
    let _ = writeln!(summary, "all checks passed");
    Ok(ExperimentOutput { table, summary })
}

impl From<GeometryError> for HarnessError {
    fn from(e: GeometryError) -> Self {
        HarnessError::Config(e.to_string())
    }
}

impl From<ArrangementError> for HarnessError {
    fn from(e: ArrangementError) -> Self {
        HarnessError::Config(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_plane_needs_one_draw() {
        let mut rng = SplitMix64::new(3);
        let planes = generate_planes(1, &mut rng, 5).unwrap();
        assert_eq!(planes.len(), 1);
    }

    #[test]
    fn generated_planes_are_in_general_position() {
        let mut rng = SplitMix64::new(11);
        let planes = generate_planes(10, &mut rng, 50).unwrap();
        assert!(general_position_3d(&planes, None).is_ok());
        let s = generate_query_plane(&planes, &mut rng, 50).unwrap();
        assert!(general_position_3d(&planes, Some(&s)).is_ok());
        let other = generate_planes(10, &mut SplitMix64::new(12), 50).unwrap();
        assert_ne!(planes, other);
    }

    #[test]
    fn parallel_draws_are_rejected() {
        // With bound 2 many draws collide; the result must still be valid.
        let mut rng = SplitMix64::new(5);
        let planes = generate_planes(6, &mut rng, 2).unwrap();
        assert!(general_position_3d(&planes, None).is_ok());
    }

    #[test]
    fn config_validation() {
        let mut c = ExperimentConfig::new(Mode::EulerChecks);
        assert!(c.validate().is_ok());
        c.trials_per_n = 0;
        assert!(matches!(c.validate(), Err(HarnessError::Config(_))));
        c.trials_per_n = 1;
        c.n_min = 9;
        assert!(c.validate().is_err());
        c.n_min = 3;
        c.n_max = 16;
        assert!(c.validate().is_err());
        c.max_n = 16;
        assert!(c.validate().is_ok());
        c.coefficient_bound = 1;
        assert!(c.validate().is_err());
    }

    #[test]
    fn census_formulas() {
        assert_eq!(expected_cell_count(3), 8);
        assert_eq!(expected_cell_count(4), 15);
        assert_eq!(expected_cell_count(15), 576);
        assert_eq!(expected_face_count(3), 7);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(HarnessError::Config("x".into()).exit_code(), 2);
        let e = HarnessError::Instance {
            seed: 0,
            n: 1,
            trial: 0,
            message: String::new(),
            dump: String::new(),
            assertion: true,
        };
        assert_eq!(e.exit_code(), 1);
    }
}
