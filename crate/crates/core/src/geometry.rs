//! Points, planes and lines with exact predicates and constructions.
//!
//! Planes and lines are stored canonically: coefficients are scaled to
//! coprime integers and the first nonzero coefficient is made positive. Two
//! inputs describing the same hyperplane therefore carry identical
//! coefficients, and "same plane" is a syntactic check. Note that
//! canonicalization may flip the orientation of the input; every sign in the
//! crate is relative to the canonical form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{format_rational, ExactScalar, Sign};

pub type PlaneId = usize;
pub type LineId = usize;

/// Exact 3-vector, used for normals and line directions.
pub type Vec3 = [ExactScalar; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("hyperplane has a zero normal vector")]
    ZeroNormal,
    #[error("planes {0}, {1}, {2} have no unique common point")]
    SingularTriple(PlaneId, PlaneId, PlaneId),
    #[error("planes {0} and {1} are parallel")]
    ParallelPlanes(PlaneId, PlaneId),
    #[error("lines {0} and {1} are parallel")]
    ParallelLines(LineId, LineId),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point3 {
    pub x: ExactScalar,
    pub y: ExactScalar,
    pub z: ExactScalar,
}

impl Point3 {
    pub fn new(x: ExactScalar, y: ExactScalar, z: ExactScalar) -> Self {
        Point3 { x, y, z }
    }

    pub fn from_coords([x, y, z]: Vec3) -> Self {
        Point3 { x, y, z }
    }

    pub fn coords(&self) -> [&ExactScalar; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn to_vec(&self) -> Vec3 {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn offset(&self, direction: &Vec3, t: &ExactScalar) -> Point3 {
        Point3 {
            x: &self.x + &direction[0] * t,
            y: &self.y + &direction[1] * t,
            z: &self.z + &direction[2] * t,
        }
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> ExactScalar {
        self.coords()
            .into_iter()
            .map(|c| c.abs())
            .max()
            .expect("three coordinates")
    }

    /// Exact average of a nonempty point set.
    pub fn centroid<'a>(points: impl IntoIterator<Item = &'a Point3>) -> Option<Point3> {
        let mut sum = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
        let mut count = 0i64;
        for p in points {
            sum[0] += &p.x;
            sum[1] += &p.y;
            sum[2] += &p.z;
            count += 1;
        }
        if count == 0 {
            return None;
        }
        let k = BigRational::from_integer(BigInt::from(count));
        Some(Point3::new(&sum[0] / &k, &sum[1] / &k, &sum[2] / &k))
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            format_rational(&self.x),
            format_rational(&self.y),
            format_rational(&self.z)
        )
    }
}

pub fn dot(a: &Vec3, b: &Vec3) -> ExactScalar {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn is_zero_vec(v: &Vec3) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn det3(rows: [&Vec3; 3]) -> ExactScalar {
    dot(rows[0], &cross(rows[1], rows[2]))
}

/// Determinant of a 4x4 matrix by cofactor expansion along the first row.
pub fn det4(m: &[[ExactScalar; 4]; 4]) -> ExactScalar {
    let mut total = BigRational::zero();
    for col in 0..4 {
        if m[0][col].is_zero() {
            continue;
        }
        let minor_row = |r: usize| -> Vec3 {
            let mut out: Vec<ExactScalar> = Vec::with_capacity(3);
            for (c, v) in m[r].iter().enumerate() {
                if c != col {
                    out.push(v.clone());
                }
            }
            [out[0].clone(), out[1].clone(), out[2].clone()]
        };
        let (r1, r2, r3) = (minor_row(1), minor_row(2), minor_row(3));
        let minor = det3([&r1, &r2, &r3]);
        let term = &m[0][col] * minor;
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Solves `rows · p = rhs` by Cramer's rule; `None` when singular.
pub fn solve3(rows: [&Vec3; 3], rhs: &Vec3) -> Option<Vec3> {
    let det = det3(rows);
    if det.is_zero() {
        return None;
    }
    let column = |k: usize| -> ExactScalar {
        let replaced: Vec<Vec3> = (0..3)
            .map(|r| {
                let mut row = rows[r].clone();
                row[k] = rhs[r].clone();
                row
            })
            .collect();
        det3([&replaced[0], &replaced[1], &replaced[2]]) / &det
    };
    Some([column(0), column(1), column(2)])
}

/// Scales a coefficient tuple to coprime integers with the first nonzero
/// entry positive. The tuple must not be all zero.
fn canonicalize<const N: usize>(coeffs: [ExactScalar; N]) -> [ExactScalar; N] {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        content = BigInt::one();
    }
    let leading_negative = ints
        .iter()
        .find(|c| !c.is_zero())
        .map(|c| c.is_negative())
        .unwrap_or(false);
    if leading_negative {
        content = -content;
    }
    let scaled: Vec<ExactScalar> = ints
        .into_iter()
        .map(|c| BigRational::from_integer(c / &content))
        .collect();
    scaled.try_into().expect("length preserved")
}

/// The plane `a·x + b·y + c·z + d = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Plane {
    id: PlaneId,
    coeffs: [ExactScalar; 4],
}

impl Plane {
    pub fn new(
        id: PlaneId,
        a: ExactScalar,
        b: ExactScalar,
        c: ExactScalar,
        d: ExactScalar,
    ) -> Result<Plane, GeometryError> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(GeometryError::ZeroNormal);
        }
        Ok(Plane {
            id,
            coeffs: canonicalize([a, b, c, d]),
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(id: PlaneId, a: i64, b: i64, c: i64, d: i64) -> Result<Plane, GeometryError> {
        use crate::exact::int;
        Plane::new(id, int(a), int(b), int(c), int(d))
    }

    pub fn id(&self) -> PlaneId {
        self.id
    }

    pub fn with_id(&self, id: PlaneId) -> Plane {
        Plane {
            id,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Canonical `(a, b, c, d)`.
    pub fn coefficients(&self) -> &[ExactScalar; 4] {
        &self.coeffs
    }

    pub fn normal(&self) -> Vec3 {
        [
            self.coeffs[0].clone(),
            self.coeffs[1].clone(),
            self.coeffs[2].clone(),
        ]
    }

    pub fn offset(&self) -> &ExactScalar {
        &self.coeffs[3]
    }

    /// `a·x + b·y + c·z + d`.
    pub fn eval(&self, p: &Point3) -> ExactScalar {
        let [a, b, c, d] = &self.coeffs;
        a * &p.x + b * &p.y + c * &p.z + d
    }

    pub fn same_hyperplane(&self, other: &Plane) -> bool {
        self.coeffs == other.coeffs
    }

    pub fn contains(&self, p: &Point3) -> bool {
        self.eval(p).is_zero()
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coeffs;
        write!(
            f,
            "{} {} {} {}",
            format_rational(a),
            format_rational(b),
            format_rational(c),
            format_rational(d)
        )
    }
}

pub fn side_of_plane(p: &Point3, plane: &Plane) -> Sign {
    Sign::of(&plane.eval(p))
}

pub fn intersect_three_planes(h1: &Plane, h2: &Plane, h3: &Plane) -> Result<Point3, GeometryError> {
    let rows = [h1.normal(), h2.normal(), h3.normal()];
    let rhs = [-h1.offset(), -h2.offset(), -h3.offset()];
    solve3([&rows[0], &rows[1], &rows[2]], &rhs)
        .map(Point3::from_coords)
        .ok_or(GeometryError::SingularTriple(h1.id(), h2.id(), h3.id()))
}

/// A line in space as `point + t·direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line3 {
    pub point: Point3,
    pub direction: Vec3,
}

/// The direction is the cross product of the two normals; the base point is
/// the line's closest point to the origin.
pub fn intersect_two_planes(h1: &Plane, h2: &Plane) -> Result<Line3, GeometryError> {
    let n1 = h1.normal();
    let n2 = h2.normal();
    let direction = cross(&n1, &n2);
    if is_zero_vec(&direction) {
        return Err(GeometryError::ParallelPlanes(h1.id(), h2.id()));
    }
    let rhs = [-h1.offset(), -h2.offset(), BigRational::zero()];
    let point = solve3([&n1, &n2, &direction], &rhs).expect("independent rows");
    Ok(Line3 {
        point: Point3::from_coords(point),
        direction,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub u: ExactScalar,
    pub v: ExactScalar,
}

impl Point2 {
    pub fn new(u: ExactScalar, v: ExactScalar) -> Self {
        Point2 { u, v }
    }

    pub fn centroid<'a>(points: impl IntoIterator<Item = &'a Point2>) -> Option<Point2> {
        let mut su = BigRational::zero();
        let mut sv = BigRational::zero();
        let mut count = 0i64;
        for p in points {
            su += &p.u;
            sv += &p.v;
            count += 1;
        }
        if count == 0 {
            return None;
        }
        let k = BigRational::from_integer(BigInt::from(count));
        Some(Point2::new(su / &k, sv / &k))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.u), format_rational(&self.v))
    }
}

/// The line `a·u + b·v + c = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line2 {
    id: LineId,
    coeffs: [ExactScalar; 3],
}

impl Line2 {
    pub fn new(id: LineId, a: ExactScalar, b: ExactScalar, c: ExactScalar) -> Result<Line2, GeometryError> {
        if a.is_zero() && b.is_zero() {
            return Err(GeometryError::ZeroNormal);
        }
        Ok(Line2 {
            id,
            coeffs: canonicalize([a, b, c]),
        })
    }

    pub fn from_ints(id: LineId, a: i64, b: i64, c: i64) -> Result<Line2, GeometryError> {
        use crate::exact::int;
        Line2::new(id, int(a), int(b), int(c))
    }

    pub fn id(&self) -> LineId {
        self.id
    }

    pub fn with_id(&self, id: LineId) -> Line2 {
        Line2 {
            id,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn coefficients(&self) -> &[ExactScalar; 3] {
        &self.coeffs
    }

    pub fn eval(&self, p: &Point2) -> ExactScalar {
        let [a, b, c] = &self.coeffs;
        a * &p.u + b * &p.v + c
    }

    pub fn same_hyperplane(&self, other: &Line2) -> bool {
        self.coeffs == other.coeffs
    }

    /// `a1·b2 − a2·b1`; zero iff the lines are parallel.
    pub fn cross_normal(&self, other: &Line2) -> ExactScalar {
        &self.coeffs[0] * &other.coeffs[1] - &other.coeffs[0] * &self.coeffs[1]
    }

    /// Some exact point on the line.
    pub fn base_point(&self) -> Point2 {
        let [a, b, c] = &self.coeffs;
        if !a.is_zero() {
            Point2::new(-c / a, BigRational::zero())
        } else {
            Point2::new(BigRational::zero(), -c / b)
        }
    }

    /// Direction `(−b, a)`.
    pub fn direction(&self) -> [ExactScalar; 2] {
        [-self.coeffs[1].clone(), self.coeffs[0].clone()]
    }
}

impl fmt::Display for Line2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coeffs;
        write!(
            f,
            "{} {} {}",
            format_rational(a),
            format_rational(b),
            format_rational(c)
        )
    }
}

pub fn side_of_line(p: &Point2, line: &Line2) -> Sign {
    Sign::of(&line.eval(p))
}

pub fn intersect_two_lines(l1: &Line2, l2: &Line2) -> Result<Point2, GeometryError> {
    let det = l1.cross_normal(l2);
    if det.is_zero() {
        return Err(GeometryError::ParallelLines(l1.id(), l2.id()));
    }
    let [a1, b1, c1] = l1.coefficients();
    let [a2, b2, c2] = l2.coefficients();
    let u = (b1 * c2 - b2 * c1) / &det;
    let v = (c1 * a2 - c2 * a1) / &det;
    Ok(Point2::new(u, v))
}
