//! Plane arrangements inside an axis-aligned bounding box.
//!
//! The extended plane set is the `n` generators plus the six box planes
//! `x = ±A`, `y = ±A`, `z = ±A`. Its vertices are the points inside the closed
//! box where three extended planes meet; a generic box guarantees that each
//! such point lies on exactly three planes. Cells are the distinct sign
//! vectors over the generators realized next to some vertex: every bounded
//! cell has a vertex, and the eight octants around a vertex of three
//! generators are all cells (box planes only admit the inside).
//!
//! A vertex belongs to the closure of a cell exactly when its sign vector
//! agrees with the cell's on every plane it does not lie on. Two vertices of
//! a cell that share two supporting planes span an edge of the cell, and
//! every extended plane through a vertex of a cell supports a face of it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arrangement2d::{build_arrangement_2d, Arrangement2};
use crate::error::{ArrangementError, BoxViolation, QueryDegeneracy};
use crate::exact::{format_rational, ExactScalar, Sign, SignVector};
use crate::geometry::{
    cross, det3, det4, dot, intersect_three_planes, intersect_two_planes, is_zero_vec,
    side_of_plane, GeometryError, Line2, Plane, PlaneId, Point2, Point3, Vec3,
};

/// First violation found by [`general_position_3d`], checked in the order
/// pairs, triples, quadruples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneralPosition3 {
    Ok,
    ParallelPair(PlaneId, PlaneId),
    /// The three normals are linearly dependent: the planes share a line or
    /// their pairwise lines are parallel, so they do not meet in one point.
    DegenerateTriple(PlaneId, PlaneId, PlaneId),
    ConcurrentQuadruple(PlaneId, PlaneId, PlaneId, PlaneId),
}

impl GeneralPosition3 {
    pub fn is_ok(&self) -> bool {
        matches!(self, GeneralPosition3::Ok)
    }
}

impl fmt::Display for GeneralPosition3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneralPosition3::Ok => write!(f, "ok"),
            GeneralPosition3::ParallelPair(a, b) => write!(f, "planes {a} and {b} are parallel"),
            GeneralPosition3::DegenerateTriple(a, b, c) => {
                write!(f, "planes {a}, {b}, {c} do not meet in a single point")
            }
            GeneralPosition3::ConcurrentQuadruple(a, b, c, d) => {
                write!(f, "planes {a}, {b}, {c}, {d} share a point")
            }
        }
    }
}

/// Exhaustive exact check of the generators, and of `extra` together with
/// them when supplied.
pub fn general_position_3d(planes: &[Plane], extra: Option<&Plane>) -> GeneralPosition3 {
    let all: Vec<&Plane> = planes.iter().chain(extra).collect();
    let normals: Vec<Vec3> = all.iter().map(|p| p.normal()).collect();
    let n = all.len();
    for i in 0..n {
        for j in i + 1..n {
            if is_zero_vec(&cross(&normals[i], &normals[j])) {
                return GeneralPosition3::ParallelPair(all[i].id(), all[j].id());
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if det3([&normals[i], &normals[j], &normals[k]]).is_zero() {
                    return GeneralPosition3::DegenerateTriple(all[i].id(), all[j].id(), all[k].id());
                }
            }
        }
    }
    let rows: Vec<[ExactScalar; 4]> = all.iter().map(|p| p.coefficients().clone()).collect();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let m = [
                        rows[i].clone(),
                        rows[j].clone(),
                        rows[k].clone(),
                        rows[l].clone(),
                    ];
                    // All triples are nonsingular here, so a singular 4x4
                    // system means the four planes share a point.
                    if det4(&m).is_zero() {
                        return GeneralPosition3::ConcurrentQuadruple(
                            all[i].id(),
                            all[j].id(),
                            all[k].id(),
                            all[l].id(),
                        );
                    }
                }
            }
        }
    }
    GeneralPosition3::Ok
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoxPlane {
    XMin,
    XMax,
    YMin,
    YMax,
    ZMin,
    ZMax,
}

impl BoxPlane {
    pub const ALL: [BoxPlane; 6] = [
        BoxPlane::XMin,
        BoxPlane::XMax,
        BoxPlane::YMin,
        BoxPlane::YMax,
        BoxPlane::ZMin,
        BoxPlane::ZMax,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BoxPlane::XMin => "x-",
            BoxPlane::XMax => "x+",
            BoxPlane::YMin => "y-",
            BoxPlane::YMax => "y+",
            BoxPlane::ZMin => "z-",
            BoxPlane::ZMax => "z+",
        }
    }

    pub fn plane(self, half_width: &ExactScalar) -> Plane {
        let one = BigRational::one();
        let zero = BigRational::zero();
        let mut abc = [zero.clone(), zero.clone(), zero];
        let (axis, d) = match self {
            BoxPlane::XMin => (0, half_width.clone()),
            BoxPlane::XMax => (0, -half_width),
            BoxPlane::YMin => (1, half_width.clone()),
            BoxPlane::YMax => (1, -half_width),
            BoxPlane::ZMin => (2, half_width.clone()),
            BoxPlane::ZMax => (2, -half_width),
        };
        abc[axis] = one;
        let [a, b, c] = abc;
        Plane::new(usize::MAX, a, b, c, d).expect("axis normal")
    }
}

/// A plane of the extended arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Support3 {
    /// Index into [`Arrangement3::planes`].
    Generator(usize),
    Box(BoxPlane),
}

impl Support3 {
    pub fn is_generator(self) -> bool {
        matches!(self, Support3::Generator(_))
    }
}

#[derive(Clone, Debug)]
pub struct Vertex3 {
    pub point: Point3,
    pub supports: [Support3; 3],
}

impl Vertex3 {
    pub fn on_box(&self) -> bool {
        self.supports.iter().any(|s| !s.is_generator())
    }
}

/// Unit increments tried when growing a box past non-generic sizes.
pub const MAX_BOX_RETRIES: usize = 256;

fn inside_closed_box(p: &Point3, a: &ExactScalar) -> bool {
    p.coords().iter().all(|c| c.abs() <= *a)
}

fn strictly_inside_box(p: &Point3, a: &ExactScalar) -> bool {
    p.coords().iter().all(|c| c.abs() < *a)
}

fn extended_planes(planes: &[Plane], half_width: &ExactScalar) -> Vec<(Support3, Plane)> {
    let mut out: Vec<(Support3, Plane)> = planes
        .iter()
        .enumerate()
        .map(|(i, p)| (Support3::Generator(i), p.clone()))
        .collect();
    out.extend(
        BoxPlane::ALL
            .iter()
            .map(|b| (Support3::Box(*b), b.plane(half_width))),
    );
    out
}

/// Vertices of the extended arrangement, or the first box violation.
/// Assumes the generators are in general position.
fn extended_vertices(planes: &[Plane], half_width: &ExactScalar) -> Result<Vec<Vertex3>, BoxViolation> {
    let ext = extended_planes(planes, half_width);
    let normals: Vec<Vec3> = ext.iter().map(|(_, p)| p.normal()).collect();

    // A generator line parallel to a box plane must not lie in it.
    for i in 0..planes.len() {
        for j in i + 1..planes.len() {
            let line = intersect_two_planes(&planes[i], &planes[j]).expect("general position");
            for (support, box_plane) in &ext[planes.len()..] {
                debug_assert!(!support.is_generator());
                if dot(&box_plane.normal(), &line.direction).is_zero() && box_plane.contains(&line.point) {
                    return Err(BoxViolation::LineInBoxFace(planes[i].id(), planes[j].id()));
                }
            }
        }
    }

    let mut vertices = Vec::new();
    for i in 0..ext.len() {
        for j in i + 1..ext.len() {
            for k in j + 1..ext.len() {
                if det3([&normals[i], &normals[j], &normals[k]]).is_zero() {
                    continue;
                }
                let p = intersect_three_planes(&ext[i].1, &ext[j].1, &ext[k].1).expect("nonsingular");
                let supports = [ext[i].0, ext[j].0, ext[k].0];
                if supports.iter().all(|s| s.is_generator()) && !strictly_inside_box(&p, half_width) {
                    return Err(BoxViolation::VertexOutsideBox(p.to_string()));
                }
                if !inside_closed_box(&p, half_width) {
                    continue;
                }
                let incident = ext.iter().filter(|(_, h)| h.contains(&p)).count();
                if incident > 3 {
                    return Err(BoxViolation::OverdeterminedVertex(p.to_string()));
                }
                vertices.push(Vertex3 { point: p, supports });
            }
        }
    }
    Ok(vertices)
}

/// Half-width `A` of a box enclosing every vertex formed by `planes` and
/// `extras`: one more than the largest absolute coordinate of any such
/// vertex, then increased by one until the box is generic for the combined
/// plane set (no plane through a box corner, no vertex on a box plane, no
/// line inside a box plane).
pub fn compute_box_half_width(planes: &[Plane], extras: &[Plane]) -> Result<ExactScalar, ArrangementError> {
    let all: Vec<Plane> = planes.iter().chain(extras).cloned().collect();
    let report = general_position_3d(&all, None);
    if !report.is_ok() {
        return Err(ArrangementError::NotGeneralPosition3(report));
    }
    // Points nearest the origin on every plane and every pairwise line keep
    // each of them inside the box even when there are too few planes to
    // form a vertex.
    let mut max = BigRational::zero();
    for (i, p) in all.iter().enumerate() {
        let n = p.normal();
        let t = -p.offset() / dot(&n, &n);
        max = max.max(Point3::from_coords(n.map(|c| c * &t)).max_abs());
        for q in &all[i + 1..] {
            max = max.max(intersect_two_planes(p, q)?.point.max_abs());
        }
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            for k in j + 1..all.len() {
                let p = intersect_three_planes(&all[i], &all[j], &all[k])?;
                let m = p.max_abs();
                if m > max {
                    max = m;
                }
            }
        }
    }
    let mut half_width = max + BigRational::one();
    let mut retries = 0;
    loop {
        match extended_vertices(&all, &half_width) {
            Ok(_) => return Ok(half_width),
            // Planes through the origin can contain a box edge at every scale.
            Err(violation) if retries == MAX_BOX_RETRIES => {
                return Err(ArrangementError::BoxGenericityViolation {
                    half_width: format_rational(&half_width),
                    violation,
                })
            }
            Err(_) => {
                retries += 1;
                half_width += BigRational::one();
            }
        }
    }
}

/// A face of a cell: the convex polygon where the cell meets one of its
/// supporting planes.
#[derive(Clone, Debug)]
pub struct FaceRecord {
    pub support: Support3,
    pub cell: usize,
    /// Vertex cycle in angular order within the supporting plane.
    pub polygon: Vec<Point3>,
    pub edge_count: usize,
}

#[derive(Clone, Debug)]
pub struct Cell3 {
    pub sign_vector: SignVector,
    /// Indices into [`Arrangement3::vertices`].
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub v_count: usize,
    pub e_count: usize,
    pub f_count: usize,
    /// Faces supported by generator planes.
    pub f_real: usize,
    pub face_records: Vec<FaceRecord>,
    pub representative_point: Point3,
}

impl Cell3 {
    /// Generator indices of the cell's generator-supported faces.
    pub fn generator_faces(&self) -> impl Iterator<Item = usize> + '_ {
        self.face_records.iter().filter_map(|f| match f.support {
            Support3::Generator(i) => Some(i),
            Support3::Box(_) => None,
        })
    }

    pub fn touches_box(&self) -> bool {
        self.face_records.iter().any(|f| !f.support.is_generator())
    }
}

#[derive(Clone, Debug)]
pub struct Arrangement3 {
    planes: Vec<Plane>,
    box_half_width: ExactScalar,
    vertices: Vec<Vertex3>,
    vertex_signs: Vec<SignVector>,
    cells: Vec<Cell3>,
    cell_index: HashMap<SignVector, usize>,
}

fn sign_vector_3d(p: &Point3, planes: &[Plane]) -> SignVector {
    SignVector(planes.iter().map(|h| side_of_plane(p, h)).collect())
}

/// Orders coplanar points of a convex polygon by angle around their centroid.
fn angular_order(points: &mut [Point3], normal: &Vec3) {
    // Project onto the coordinate plane where the normal has its largest component.
    let drop = (0..3)
        .max_by(|&a, &b| normal[a].abs().cmp(&normal[b].abs()))
        .expect("three axes");
    let keep: Vec<usize> = (0..3).filter(|&k| k != drop).collect();
    let Some(center) = Point3::centroid(points.iter()) else {
        return;
    };
    let c = center.to_vec();
    let rel = |p: &Point3| {
        let v = p.to_vec();
        (&v[keep[0]] - &c[keep[0]], &v[keep[1]] - &c[keep[1]])
    };
    points.sort_by(|p, q| {
        let (px, py) = rel(p);
        let (qx, qy) = rel(q);
        let half = |x: &ExactScalar, y: &ExactScalar| -> u8 {
            if y.is_positive() || (y.is_zero() && x.is_positive()) {
                0
            } else {
                1
            }
        };
        half(&px, &py).cmp(&half(&qx, &qy)).then_with(|| {
            let turn = &px * &qy - &py * &qx;
            // Counter-clockwise first.
            BigRational::zero().cmp(&turn)
        })
    });
}

pub fn build_arrangement_3d(planes: &[Plane], half_width: ExactScalar) -> Result<Arrangement3, ArrangementError> {
    if !half_width.is_positive() {
        return Err(ArrangementError::NonPositiveBox);
    }
    let report = general_position_3d(planes, None);
    if !report.is_ok() {
        return Err(ArrangementError::NotGeneralPosition3(report));
    }
    let vertices = extended_vertices(planes, &half_width).map_err(|violation| {
        ArrangementError::BoxGenericityViolation {
            half_width: format_rational(&half_width),
            violation,
        }
    })?;
    let vertex_signs: Vec<SignVector> = vertices
        .iter()
        .map(|v| sign_vector_3d(&v.point, planes))
        .collect();

    let mut cell_vertices: BTreeMap<SignVector, Vec<usize>> = BTreeMap::new();
    for (vi, v) in vertices.iter().enumerate() {
        let free: Vec<usize> = v
            .supports
            .iter()
            .filter_map(|s| match s {
                Support3::Generator(i) => Some(*i),
                Support3::Box(_) => None,
            })
            .collect();
        for mask in 0..(1u32 << free.len()) {
            let mut sv = vertex_signs[vi].clone();
            for (bit, g) in free.iter().enumerate() {
                sv.0[*g] = if mask & (1 << bit) != 0 {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
            }
            cell_vertices.entry(sv).or_default().push(vi);
        }
    }

    let ext = extended_planes(planes, &half_width);
    let ext_index = |s: Support3| -> usize {
        match s {
            Support3::Generator(i) => i,
            Support3::Box(b) => planes.len() + BoxPlane::ALL.iter().position(|x| *x == b).expect("box plane"),
        }
    };
    let two = BigRational::from_integer(2.into());

    let mut cells = Vec::with_capacity(cell_vertices.len());
    let mut cell_index = HashMap::with_capacity(cell_vertices.len());
    for (ci, (sign_vector, verts)) in cell_vertices.into_iter().enumerate() {
        // Vertices grouped by the line (pair of supports) they lie on.
        let mut by_line: BTreeMap<(Support3, Support3), Vec<usize>> = BTreeMap::new();
        let mut by_plane: BTreeMap<Support3, Vec<usize>> = BTreeMap::new();
        for &vi in &verts {
            let s = vertices[vi].supports;
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                let key = if s[a] < s[b] { (s[a], s[b]) } else { (s[b], s[a]) };
                by_line.entry(key).or_default().push(vi);
            }
            for support in s {
                by_plane.entry(support).or_default().push(vi);
            }
        }
        let mut edges = Vec::new();
        for ends in by_line.values() {
            assert_eq!(ends.len(), 2, "a cell meets each of its edge lines in a segment");
            let mid = Point3::new(
                (&vertices[ends[0]].point.x + &vertices[ends[1]].point.x) / &two,
                (&vertices[ends[0]].point.y + &vertices[ends[1]].point.y) / &two,
                (&vertices[ends[0]].point.z + &vertices[ends[1]].point.z) / &two,
            );
            if sign_vector_3d(&mid, planes).in_closure_of(&sign_vector) {
                edges.push([ends[0], ends[1]]);
            }
        }
        let face_records: Vec<FaceRecord> = by_plane
            .into_iter()
            .map(|(support, on_plane)| {
                let mut polygon: Vec<Point3> = on_plane.iter().map(|&vi| vertices[vi].point.clone()).collect();
                angular_order(&mut polygon, &ext[ext_index(support)].1.normal());
                FaceRecord {
                    support,
                    cell: ci,
                    edge_count: polygon.len(),
                    polygon,
                }
            })
            .collect();
        let f_real = face_records.iter().filter(|f| f.support.is_generator()).count();
        let representative_point = Point3::centroid(verts.iter().map(|&vi| &vertices[vi].point)).expect("nonempty");
        debug_assert_eq!(sign_vector_3d(&representative_point, planes), sign_vector);
        cell_index.insert(sign_vector.clone(), ci);
        cells.push(Cell3 {
            sign_vector,
            v_count: verts.len(),
            e_count: edges.len(),
            f_count: face_records.len(),
            f_real,
            vertices: verts,
            edges,
            face_records,
            representative_point,
        });
    }

    Ok(Arrangement3 {
        planes: planes.to_vec(),
        box_half_width: half_width,
        vertices,
        vertex_signs,
        cells,
        cell_index,
    })
}

impl Arrangement3 {
    pub fn planes(&self) -> &[Plane] {
        &self.planes
    }

    pub fn box_half_width(&self) -> &ExactScalar {
        &self.box_half_width
    }

    pub fn vertices(&self) -> &[Vertex3] {
        &self.vertices
    }

    /// Vertices where three generators meet.
    pub fn generator_vertex_count(&self) -> usize {
        self.vertices.iter().filter(|v| !v.on_box()).count()
    }

    pub fn cells(&self) -> &[Cell3] {
        &self.cells
    }

    pub fn cell_of(&self, sign_vector: &SignVector) -> Option<usize> {
        self.cell_index.get(sign_vector).copied()
    }

    pub fn index_of(&self, id: PlaneId) -> Option<usize> {
        self.planes.iter().position(|p| p.id() == id)
    }

    pub fn sign_vector(&self, p: &Point3) -> SignVector {
        sign_vector_3d(p, &self.planes)
    }

    /// Cell containing `p` in its interior, if `p` is off every generator
    /// and strictly inside the box.
    pub fn locate(&self, p: &Point3) -> Option<usize> {
        if !strictly_inside_box(p, &self.box_half_width) {
            return None;
        }
        let sv = self.sign_vector(p);
        if !sv.is_strict() {
            return None;
        }
        self.cell_of(&sv)
    }

    pub fn support_label(&self, support: Support3) -> String {
        match support {
            Support3::Generator(i) => format!("p{}", self.planes[i].id()),
            Support3::Box(b) => b.label().to_string(),
        }
    }

    /// Plain-text dump with sections `VERTICES` and `CELLS`.
    pub fn dump(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "ARRANGEMENT n={} box={}",
            self.planes.len(),
            format_rational(&self.box_half_width)
        );
        let _ = writeln!(out, "PLANES {}", self.planes.len());
        for p in &self.planes {
            let _ = writeln!(out, "p{} {}", p.id(), p);
        }
        let _ = writeln!(out, "VERTICES {}", self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            let labels: Vec<String> = v.supports.iter().map(|s| self.support_label(*s)).collect();
            let _ = writeln!(
                out,
                "{} {} {} {} on={} signs={}",
                i,
                format_rational(&v.point.x),
                format_rational(&v.point.y),
                format_rational(&v.point.z),
                labels.join(","),
                self.vertex_signs[i]
            );
        }
        let _ = writeln!(out, "CELLS {}", self.cells.len());
        for (i, c) in self.cells.iter().enumerate() {
            let _ = writeln!(
                out,
                "{} signs={} V={} E={} F={} F_real={}",
                i, c.sign_vector, c.v_count, c.e_count, c.f_count, c.f_real
            );
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zone3Report {
    pub cell_ids: BTreeSet<usize>,
    /// Sum of `f_real` over the zone's cells.
    pub zone_size: usize,
    pub cell_count: usize,
}

/// Cells whose interior the query plane crosses: those with polytope
/// vertices strictly on both sides of it.
pub fn zone_3d(arr: &Arrangement3, query: &Plane) -> Result<Zone3Report, ArrangementError> {
    let qn = query.normal();
    for p in &arr.planes {
        if is_zero_vec(&cross(&p.normal(), &qn)) {
            return Err(ArrangementError::DegenerateQuery(QueryDegeneracy::ParallelTo(p.id())));
        }
    }
    let mut sides = Vec::with_capacity(arr.vertices.len());
    for v in &arr.vertices {
        let s = side_of_plane(&v.point, query);
        if s == Sign::Zero {
            return Err(ArrangementError::DegenerateQuery(QueryDegeneracy::ThroughVertex(
                v.point.to_string(),
            )));
        }
        sides.push(s);
    }
    let cell_ids: BTreeSet<usize> = arr
        .cells
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            let first = sides[c.vertices[0]];
            c.vertices.iter().any(|&vi| sides[vi] != first)
        })
        .map(|(i, _)| i)
        .collect();
    let zone_size = cell_ids.iter().map(|&c| arr.cells[c].f_real).sum();
    Ok(Zone3Report {
        cell_count: cell_ids.len(),
        cell_ids,
        zone_size,
    })
}

/// The arrangement without generator `id`, over the same box.
pub fn remove_plane(arr: &Arrangement3, id: PlaneId) -> Result<Arrangement3, ArrangementError> {
    let index = arr.index_of(id).ok_or(ArrangementError::UnknownPlane(id))?;
    let remaining: Vec<Plane> = arr
        .planes
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != index)
        .map(|(_, p)| p.clone())
        .collect();
    build_arrangement_3d(&remaining, arr.box_half_width.clone())
}

/// Affine coordinates on a plane: `point = origin + u·basis[0] + v·basis[1]`.
///
/// With `k` the first axis where the plane's normal `n` is nonzero, the
/// origin sits on axis `k` and each basis vector has `n[k]` on another axis
/// `j` and `−n[j]` on axis `k`, so every entry stays rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub plane_id: PlaneId,
    pub origin: Point3,
    pub basis: [Vec3; 2],
    pivot: usize,
    others: [usize; 2],
}

impl Chart {
    pub fn on(plane: &Plane) -> Chart {
        let normal = plane.normal();
        let pivot = (0..3).find(|&k| !normal[k].is_zero()).expect("nonzero normal");
        let others = match pivot {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        };
        let mut origin = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
        origin[pivot] = -plane.offset() / &normal[pivot];
        let basis = others.map(|j| {
            let mut e = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
            e[j] = normal[pivot].clone();
            e[pivot] = -&normal[j];
            e
        });
        Chart {
            plane_id: plane.id(),
            origin: Point3::from_coords(origin),
            basis,
            pivot,
            others,
        }
    }

    pub fn lift(&self, p: &Point2) -> Point3 {
        self.origin
            .offset(&self.basis[0], &p.u)
            .offset(&self.basis[1], &p.v)
    }

    /// Chart coordinates of a point assumed to lie on the charted plane.
    pub fn project(&self, p: &Point3) -> Point2 {
        let c = p.to_vec();
        let o = self.origin.to_vec();
        let scale = &self.basis[0][self.others[0]];
        Point2::new(
            (&c[self.others[0]] - &o[self.others[0]]) / scale,
            (&c[self.others[1]] - &o[self.others[1]]) / scale,
        )
    }

    /// The line where `plane` meets the charted plane, in chart coordinates.
    /// The line keeps the id of `plane`.
    pub fn line_of(&self, plane: &Plane) -> Result<Line2, GeometryError> {
        let n = plane.normal();
        let a = dot(&n, &self.basis[0]);
        let b = dot(&n, &self.basis[1]);
        let c = plane.eval(&self.origin);
        Line2::new(plane.id(), a, b, c).map_err(|_| GeometryError::ParallelPlanes(self.plane_id, plane.id()))
    }
}

/// The line arrangement that the other generators cut out on generator `id`,
/// with the chart used to express it.
///
/// The square is sized to contain the chart image of the plane's section of
/// the 3D box, so every face crossed inside the box is also crossed inside
/// the square.
pub fn induced_arrangement(arr: &Arrangement3, id: PlaneId) -> Result<(Arrangement2, Chart), ArrangementError> {
    let index = arr.index_of(id).ok_or(ArrangementError::UnknownPlane(id))?;
    let q = &arr.planes[index];
    let chart = Chart::on(q);
    let lines = arr
        .planes
        .iter()
        .filter(|p| p.id() != id)
        .map(|p| chart.line_of(p))
        .collect::<Result<Vec<Line2>, GeometryError>>()?;

    let mut max = BigRational::zero();
    for v in &arr.vertices {
        if v.supports.contains(&Support3::Generator(index)) {
            let p = chart.project(&v.point);
            for c in [p.u.abs(), p.v.abs()] {
                if c > max {
                    max = c;
                }
            }
        }
    }
    let mut half_width = max + BigRational::one();
    let mut retries = 0;
    loop {
        match build_arrangement_2d(&lines, half_width.clone()) {
            Ok(induced) => return Ok((induced, chart)),
            Err(ArrangementError::BoxGenericityViolation { .. }) if retries < MAX_BOX_RETRIES => {
                retries += 1;
                half_width += BigRational::one();
            }
            Err(other) => return Err(other),
        }
    }
}
