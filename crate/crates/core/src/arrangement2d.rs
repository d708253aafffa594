//! Line arrangements clipped to a bounding square, and 2D zones.
//!
//! The arrangement is built over the extended line set: the `n` generator
//! lines plus the four sides `u = ±W`, `v = ±W` of the square. Every vertex of
//! the extended arrangement lies on exactly two lines, so the faces incident
//! to a vertex are the sign choices on its generator lines (box sides only
//! admit the inside). Faces are identified by their sign vector over the
//! generators; all faces lie inside the square, so the box signs are
//! implicit.
//!
//! Edge counts only include edges supported by generator lines. Every
//! generator line is cut by the vertices on it into segments; each segment
//! is an edge of the two faces on either side of it.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{ArrangementError, BoxViolation, QueryDegeneracy};
use crate::exact::{format_rational, ExactScalar, Sign, SignVector};
use crate::geometry::{intersect_two_lines, side_of_line, Line2, LineId, Point2};

/// First violation found by [`general_position_2d`], in pair-then-triple order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneralPosition2 {
    Ok,
    ParallelPair(LineId, LineId),
    ConcurrentTriple(LineId, LineId, LineId),
}

impl GeneralPosition2 {
    pub fn is_ok(&self) -> bool {
        matches!(self, GeneralPosition2::Ok)
    }
}

impl fmt::Display for GeneralPosition2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneralPosition2::Ok => write!(f, "ok"),
            GeneralPosition2::ParallelPair(a, b) => write!(f, "lines {a} and {b} are parallel"),
            GeneralPosition2::ConcurrentTriple(a, b, c) => {
                write!(f, "lines {a}, {b}, {c} pass through one point")
            }
        }
    }
}

/// Exhaustive exact check over all pairs and triples.
pub fn general_position_2d(lines: &[Line2]) -> GeneralPosition2 {
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if lines[i].cross_normal(&lines[j]).is_zero() {
                return GeneralPosition2::ParallelPair(lines[i].id(), lines[j].id());
            }
        }
    }
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = intersect_two_lines(&lines[i], &lines[j]).expect("not parallel");
            for k in j + 1..lines.len() {
                if lines[k].eval(&p).is_zero() {
                    return GeneralPosition2::ConcurrentTriple(
                        lines[i].id(),
                        lines[j].id(),
                        lines[k].id(),
                    );
                }
            }
        }
    }
    GeneralPosition2::Ok
}

/// Side of the bounding square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoxSide2 {
    UMin,
    UMax,
    VMin,
    VMax,
}

impl BoxSide2 {
    pub const ALL: [BoxSide2; 4] = [BoxSide2::UMin, BoxSide2::UMax, BoxSide2::VMin, BoxSide2::VMax];

    fn line(self, half_width: &ExactScalar) -> Line2 {
        let one = BigRational::from_integer(1.into());
        let zero = BigRational::zero();
        let (a, b, c) = match self {
            BoxSide2::UMin => (one, zero, half_width.clone()),
            BoxSide2::UMax => (one, zero, -half_width),
            BoxSide2::VMin => (zero, one, half_width.clone()),
            BoxSide2::VMax => (zero, one, -half_width),
        };
        Line2::new(usize::MAX, a, b, c).expect("nonzero normal")
    }
}

/// What a vertex or edge of the extended arrangement lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Support2 {
    /// Index into [`Arrangement2::lines`].
    Generator(usize),
    Box(BoxSide2),
}

#[derive(Clone, Debug)]
pub struct Vertex2 {
    pub point: Point2,
    pub supports: [Support2; 2],
}

impl Vertex2 {
    pub fn on_box(&self) -> bool {
        self.supports.iter().any(|s| matches!(s, Support2::Box(_)))
    }
}

/// An edge supported by a generator line, between two extended vertices.
#[derive(Clone, Debug)]
pub struct Edge2 {
    pub line: usize,
    pub endpoints: [usize; 2],
    /// Faces on the negative and positive side of the supporting line.
    pub faces: [usize; 2],
}

#[derive(Clone, Debug)]
pub struct Face2 {
    pub sign_vector: SignVector,
    /// Generator-supported edges only.
    pub edge_count: usize,
    pub representative_point: Point2,
    /// Indices into [`Arrangement2::vertices`].
    pub vertices: Vec<usize>,
    pub touches_box: bool,
}

#[derive(Clone, Debug)]
pub struct Arrangement2 {
    lines: Vec<Line2>,
    box_half_width: ExactScalar,
    vertices: Vec<Vertex2>,
    edges: Vec<Edge2>,
    faces: Vec<Face2>,
    face_index: HashMap<SignVector, usize>,
}

fn sign_vector_2d(p: &Point2, lines: &[Line2]) -> SignVector {
    SignVector(lines.iter().map(|l| side_of_line(p, l)).collect())
}

fn strictly_inside(p: &Point2, w: &ExactScalar) -> bool {
    p.u.abs() < *w && p.v.abs() < *w
}

fn inside_closed(p: &Point2, w: &ExactScalar) -> bool {
    p.u.abs() <= *w && p.v.abs() <= *w
}

/// Position of `p` along `line`, for sorting points on that line.
fn parameter_on(line: &Line2, p: &Point2) -> ExactScalar {
    let [du, dv] = line.direction();
    &p.u * du + &p.v * dv
}

pub fn build_arrangement_2d(
    lines: &[Line2],
    box_half_width: ExactScalar,
) -> Result<Arrangement2, ArrangementError> {
    if !box_half_width.is_positive() {
        return Err(ArrangementError::NonPositiveBox);
    }
    let report = general_position_2d(lines);
    if !report.is_ok() {
        return Err(ArrangementError::NotGeneralPosition2(report));
    }
    let w = &box_half_width;
    let too_small = |violation| ArrangementError::BoxTooSmall {
        half_width: format_rational(w),
        violation,
    };
    let not_generic = |violation| ArrangementError::BoxGenericityViolation {
        half_width: format_rational(w),
        violation,
    };

    let mut extended: Vec<(Support2, Line2)> = lines
        .iter()
        .enumerate()
        .map(|(i, l)| (Support2::Generator(i), l.clone()))
        .collect();
    extended.extend(BoxSide2::ALL.iter().map(|s| (Support2::Box(*s), s.line(w))));

    let mut vertices = Vec::new();
    for i in 0..extended.len() {
        for j in i + 1..extended.len() {
            let (si, li) = &extended[i];
            let (sj, lj) = &extended[j];
            let Ok(p) = intersect_two_lines(li, lj) else {
                continue;
            };
            let both_generators =
                matches!(si, Support2::Generator(_)) && matches!(sj, Support2::Generator(_));
            if both_generators && !strictly_inside(&p, w) {
                return Err(too_small(BoxViolation::VertexOutsideBox(p.to_string())));
            }
            if !inside_closed(&p, w) {
                continue;
            }
            let incident = extended.iter().filter(|(_, l)| l.eval(&p).is_zero()).count();
            if incident > 2 {
                return Err(not_generic(BoxViolation::OverdeterminedVertex(p.to_string())));
            }
            vertices.push(Vertex2 {
                point: p,
                supports: [*si, *sj],
            });
        }
    }

    let vertex_signs: Vec<SignVector> = vertices
        .iter()
        .map(|v| sign_vector_2d(&v.point, lines))
        .collect();

    // Faces around each vertex: all sign choices on its generator lines.
    let mut face_vertices: HashMap<SignVector, Vec<usize>> = HashMap::new();
    for (vi, v) in vertices.iter().enumerate() {
        let free: Vec<usize> = v
            .supports
            .iter()
            .filter_map(|s| match s {
                Support2::Generator(i) => Some(*i),
                Support2::Box(_) => None,
            })
            .collect();
        for mask in 0..(1u32 << free.len()) {
            let mut sv = vertex_signs[vi].clone();
            for (bit, line) in free.iter().enumerate() {
                sv.0[*line] = if mask & (1 << bit) != 0 {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
            }
            face_vertices.entry(sv).or_default().push(vi);
        }
    }
    let mut keys: Vec<SignVector> = face_vertices.keys().cloned().collect();
    keys.sort();
    let face_index: HashMap<SignVector, usize> =
        keys.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
    let mut faces: Vec<Face2> = keys
        .into_iter()
        .map(|sv| {
            let verts = face_vertices.remove(&sv).expect("key present");
            let representative_point =
                Point2::centroid(verts.iter().map(|&i| &vertices[i].point)).expect("nonempty");
            let touches_box = verts.iter().any(|&i| vertices[i].on_box());
            Face2 {
                sign_vector: sv,
                edge_count: 0,
                representative_point,
                vertices: verts,
                touches_box,
            }
        })
        .collect();

    // Generator-supported edges: consecutive vertices along each line.
    let mut edges = Vec::new();
    for (li, line) in lines.iter().enumerate() {
        let mut on_line: Vec<(ExactScalar, usize)> = vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.supports.contains(&Support2::Generator(li)))
            .map(|(vi, v)| (parameter_on(line, &v.point), vi))
            .collect();
        if on_line.len() < 2 {
            return Err(too_small(BoxViolation::LineMissesBox(line.id())));
        }
        on_line.sort();
        for pair in on_line.windows(2) {
            let (a, b) = (pair[0].1, pair[1].1);
            let mid = Point2::centroid([&vertices[a].point, &vertices[b].point]).expect("two");
            let mut sv = sign_vector_2d(&mid, lines);
            debug_assert_eq!(sv.get(li), Sign::Zero);
            let mut sides = [0usize; 2];
            for (k, side) in [Sign::Negative, Sign::Positive].into_iter().enumerate() {
                sv.0[li] = side;
                let face = *face_index
                    .get(&sv)
                    .expect("edge neighbour is a face incident to the edge's endpoints");
                faces[face].edge_count += 1;
                sides[k] = face;
            }
            edges.push(Edge2 {
                line: li,
                endpoints: [a, b],
                faces: sides,
            });
        }
    }

    for face in &faces {
        debug_assert_eq!(
            sign_vector_2d(&face.representative_point, lines),
            face.sign_vector
        );
    }

    Ok(Arrangement2 {
        lines: lines.to_vec(),
        box_half_width,
        vertices,
        edges,
        faces,
        face_index,
    })
}

impl Arrangement2 {
    pub fn lines(&self) -> &[Line2] {
        &self.lines
    }

    pub fn box_half_width(&self) -> &ExactScalar {
        &self.box_half_width
    }

    pub fn vertices(&self) -> &[Vertex2] {
        &self.vertices
    }

    /// Vertices where two generator lines meet.
    pub fn generator_vertex_count(&self) -> usize {
        self.vertices.iter().filter(|v| !v.on_box()).count()
    }

    pub fn edges(&self) -> &[Edge2] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face2] {
        &self.faces
    }

    pub fn face_of(&self, sign_vector: &SignVector) -> Option<usize> {
        self.face_index.get(sign_vector).copied()
    }

    pub fn sign_vector(&self, p: &Point2) -> SignVector {
        sign_vector_2d(p, &self.lines)
    }

    /// Face containing `p` in its interior, if `p` is off every line and
    /// strictly inside the box.
    pub fn locate(&self, p: &Point2) -> Option<usize> {
        if !strictly_inside(p, &self.box_half_width) {
            return None;
        }
        let sv = self.sign_vector(p);
        if !sv.is_strict() {
            return None;
        }
        self.face_of(&sv)
    }
}

/// Half-width of a square enclosing every vertex formed by `lines` and
/// `extras`: one more than the largest absolute vertex coordinate, grown by
/// one until no line passes through a corner and no vertex of the combined
/// set lies on a side.
pub fn compute_square_half_width(lines: &[Line2], extras: &[Line2]) -> Result<ExactScalar, ArrangementError> {
    let all: Vec<Line2> = lines.iter().chain(extras).cloned().collect();
    let report = general_position_2d(&all);
    if !report.is_ok() {
        return Err(ArrangementError::NotGeneralPosition2(report));
    }
    let mut max = BigRational::zero();
    for line in &all {
        let p = line.base_point();
        max = max.max(p.u.abs()).max(p.v.abs());
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let p = intersect_two_lines(&all[i], &all[j])?;
            for c in [p.u.abs(), p.v.abs()] {
                if c > max {
                    max = c;
                }
            }
        }
    }
    let mut half_width = max + BigRational::from_integer(1.into());
    let mut retries = 0;
    loop {
        match build_arrangement_2d(&all, half_width.clone()) {
            Ok(_) => return Ok(half_width),
            Err(ArrangementError::BoxGenericityViolation { .. }) if retries < crate::arrangement3d::MAX_BOX_RETRIES => {
                retries += 1;
                half_width += BigRational::from_integer(1.into());
            }
            Err(other) => return Err(other),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zone2Report {
    pub face_ids: BTreeSet<usize>,
    pub zone_size: usize,
}

impl Zone2Report {
    pub fn face_count(&self) -> usize {
        self.face_ids.len()
    }
}

/// Faces whose interior the query line crosses inside the box, found by
/// walking the line: the crossings with the generators split the clipped
/// line into segments, and each segment midpoint is located by sign vector.
///
/// A query line that misses the box interior has an empty zone.
pub fn zone_2d(arr: &Arrangement2, query: &Line2) -> Result<Zone2Report, ArrangementError> {
    let base = query.base_point();
    let dir = query.direction();
    let along = |t: &ExactScalar| Point2::new(&base.u + &dir[0] * t, &base.v + &dir[1] * t);
    // Parameter where the query meets `line`, or None when parallel.
    let crossing = |line: &Line2| -> Option<ExactScalar> {
        let [a, b, _] = line.coefficients();
        let rate = a * &dir[0] + b * &dir[1];
        if rate.is_zero() {
            None
        } else {
            Some(-line.eval(&base) / rate)
        }
    };

    let mut cuts: Vec<ExactScalar> = Vec::with_capacity(arr.lines.len());
    for line in &arr.lines {
        match crossing(line) {
            Some(t) => cuts.push(t),
            None => {
                return Err(ArrangementError::DegenerateQuery(QueryDegeneracy::ParallelTo(
                    line.id(),
                )))
            }
        }
    }
    let mut sorted = cuts.clone();
    sorted.sort();
    if let Some(pair) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(ArrangementError::DegenerateQuery(
            QueryDegeneracy::ThroughVertex(along(&pair[0]).to_string()),
        ));
    }

    // Clip to the open square.
    let w = &arr.box_half_width;
    let mut lo: Option<ExactScalar> = None;
    let mut hi: Option<ExactScalar> = None;
    for (coord, rate) in [(&base.u, &dir[0]), (&base.v, &dir[1])] {
        if rate.is_zero() {
            if coord.abs() >= *w {
                return Ok(Zone2Report {
                    face_ids: BTreeSet::new(),
                    zone_size: 0,
                });
            }
            continue;
        }
        let t1 = (w - coord) / rate;
        let t2 = (-w - coord) / rate;
        let (a, b) = if t1 < t2 { (t1, t2) } else { (t2, t1) };
        lo = Some(match lo {
            Some(cur) if cur > a => cur,
            _ => a,
        });
        hi = Some(match hi {
            Some(cur) if cur < b => cur,
            _ => b,
        });
    }
    let (lo, hi) = (lo.expect("direction nonzero"), hi.expect("direction nonzero"));
    if lo >= hi {
        return Ok(Zone2Report {
            face_ids: BTreeSet::new(),
            zone_size: 0,
        });
    }

    let mut breaks = vec![lo.clone()];
    breaks.extend(sorted.into_iter().filter(|t| *t > lo && *t < hi));
    breaks.push(hi);
    let two = BigRational::from_integer(2.into());
    let mut face_ids = BTreeSet::new();
    for seg in breaks.windows(2) {
        let mid = along(&((&seg[0] + &seg[1]) / &two));
        let face = arr
            .locate(&mid)
            .expect("segment midpoint lies in the interior of a face");
        face_ids.insert(face);
    }
    let zone_size = face_ids.iter().map(|&f| arr.faces[f].edge_count).sum();
    Ok(Zone2Report {
        face_ids,
        zone_size,
    })
}
