//! Independent oracles shared by the integration tests. Everything here is
//! computed from the raw plane and line coefficients, never from the
//! arrangement's own vertex or cell lists.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use zonecheck::exact::{int, ExactScalar, Sign};
use zonecheck::geometry::{cross, dot, intersect_three_planes, intersect_two_lines, Line2, Plane, Point2, Point3, Vec3};
use zonecheck::harness::{generate_lines, generate_planes, generate_query_line, generate_query_plane};
use zonecheck::rng::SplitMix64;
use zonecheck::Arrangement3;

pub type Q = ExactScalar;

/// Strict inequality `coeffs · x + constant > 0`.
#[derive(Clone, Debug)]
pub struct Strict {
    pub coeffs: Vec<Q>,
    pub constant: Q,
}

/// Fourier–Motzkin elimination for a system of strict inequalities.
pub fn fm_feasible(mut system: Vec<Strict>) -> bool {
    let dims = system.first().map_or(0, |c| c.coeffs.len());
    for k in (0..dims).rev() {
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in system {
            match Sign::of(&c.coeffs[k]) {
                Sign::Positive => lower.push(c),
                Sign::Negative => upper.push(c),
                Sign::Zero => rest.push(c),
            }
        }
        for l in &lower {
            for u in &upper {
                // Positive combination cancelling x_k.
                let wl = -u.coeffs[k].clone();
                let wu = l.coeffs[k].clone();
                let coeffs = l.coeffs.iter().zip(&u.coeffs).map(|(a, b)| a * &wl + b * &wu).collect();
                rest.push(Strict {
                    coeffs,
                    constant: &l.constant * &wl + &u.constant * &wu,
                });
            }
        }
        system = rest;
    }
    system.iter().all(|c| c.constant.is_positive())
}

/// Constraints for the open cell with sign vector `signs`, clipped to the
/// open box, restricted to `query = 0` by eliminating one coordinate.
fn cell_on_query(planes: &[Plane], signs: &[Sign], half_width: &Q, query: &Plane) -> Vec<Strict> {
    let n = query.normal();
    let pivot = (0..3).find(|&j| !n[j].is_zero()).expect("nonzero normal");
    let free: Vec<usize> = (0..3).filter(|&j| j != pivot).collect();
    // x_pivot = -(d + Σ n_i x_i) / n_pivot, an affine map of the free coordinates.
    let sub = |coeffs: &Vec3, constant: &Q| -> Strict {
        let scale = &coeffs[pivot] / &n[pivot];
        Strict {
            coeffs: free.iter().map(|&i| &coeffs[i] - &scale * &n[i]).collect(),
            constant: constant - &scale * query.offset(),
        }
    };
    let mut out = Vec::new();
    for (p, s) in planes.iter().zip(signs) {
        let sg = int(s.as_i8() as i64);
        let c = p.normal().map(|v| v * &sg);
        out.push(sub(&c, &(p.offset() * &sg)));
    }
    for axis in 0..3 {
        for sg in [1i64, -1] {
            // half_width ± x_axis > 0
            let mut c: Vec3 = [Q::zero(), Q::zero(), Q::zero()];
            c[axis] = int(sg);
            out.push(sub(&c, half_width));
        }
    }
    out
}

/// Cells whose open interior meets the query plane inside the open box.
pub fn zone_by_feasibility(arr: &Arrangement3, query: &Plane) -> BTreeSet<usize> {
    arr.cells()
        .iter()
        .enumerate()
        .filter(|(_, c)| fm_feasible(cell_on_query(arr.planes(), &c.sign_vector.0, arr.box_half_width(), query)))
        .map(|(i, _)| i)
        .collect()
}

fn box_planes(half_width: &Q) -> Vec<Plane> {
    let mut out = Vec::new();
    for axis in 0..3 {
        let mut c = [Q::zero(), Q::zero(), Q::zero()];
        c[axis] = Q::one();
        let [a, b, cc] = c;
        out.push(Plane::new(usize::MAX, a.clone(), b.clone(), cc.clone(), half_width.clone()).unwrap());
        out.push(Plane::new(usize::MAX, a, b, cc, -half_width).unwrap());
    }
    out
}

/// Cells located by exact perturbation around every vertex of the
/// arrangement induced on the query plane: at each such vertex, one point in
/// each of the four surrounding quadrants, moved a provably safe distance.
pub fn zone_by_perturbation(arr: &Arrangement3, query: &Plane) -> BTreeSet<usize> {
    let mut all: Vec<Plane> = arr.planes().to_vec();
    all.extend(box_planes(arr.box_half_width()));
    let a = arr.box_half_width();
    let ns = query.normal();
    let mut found = BTreeSet::new();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let Ok(v) = intersect_three_planes(query, &all[i], &all[j]) else {
                continue;
            };
            if v.coords().iter().any(|c| c.abs() > *a) {
                continue;
            }
            let u1 = cross(&ns, &all[i].normal());
            let u2 = cross(&ns, &all[j].normal());
            for s1 in [1i64, -1] {
                for s2 in [1i64, -1] {
                    let w: Vec3 = std::array::from_fn(|k| &u1[k] * int(s1) + &u2[k] * int(s2));
                    let mut eps = Q::one();
                    for h in &all {
                        let hv = h.eval(&v);
                        let rate = dot(&h.normal(), &w);
                        if !hv.is_zero() && !rate.is_zero() {
                            let limit = (hv / rate).abs() / int(2);
                            if limit < eps {
                                eps = limit;
                            }
                        }
                    }
                    if let Some(cell) = arr.locate(&v.offset(&w, &eps)) {
                        found.insert(cell);
                    }
                }
            }
        }
    }
    found
}

/// Cells hit by `samples` random rational points of the query plane.
pub fn zone_by_sampling(arr: &Arrangement3, query: &Plane, rng: &mut SplitMix64, samples: usize) -> BTreeSet<usize> {
    let n = query.normal();
    let pivot = (0..3).find(|&j| !n[j].is_zero()).unwrap();
    let a = arr.box_half_width();
    let mut found = BTreeSet::new();
    for _ in 0..samples {
        let mut c: Vec3 = [Q::zero(), Q::zero(), Q::zero()];
        for (k, slot) in c.iter_mut().enumerate() {
            if k != pivot {
                let t = Q::new(rng.range_inclusive(-1000, 1000).into(), 1000.into());
                *slot = a * t;
            }
        }
        let rest: Q = (0..3).filter(|&k| k != pivot).map(|k| &n[k] * &c[k]).sum();
        c[pivot] = -(rest + query.offset()) / &n[pivot];
        if let Some(cell) = arr.locate(&Point3::from_coords(c)) {
            found.insert(cell);
        }
    }
    found
}

/// Number of faces of a line arrangement inside the open square: at every
/// vertex of the clipped arrangement, one point in each of the four
/// surrounding quadrants, moved a provably safe distance.
pub fn face_count_by_perturbation(lines: &[Line2], half_width: &Q) -> usize {
    let mut all = lines.to_vec();
    for (a, b, c) in [(1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1)] {
        all.push(Line2::new(usize::MAX, int(a), int(b), half_width * int(c)).unwrap());
    }
    let lin = |l: &Line2, w: &[Q; 2]| &l.coefficients()[0] * &w[0] + &l.coefficients()[1] * &w[1];
    let mut faces = BTreeSet::new();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let Ok(v) = intersect_two_lines(&all[i], &all[j]) else {
                continue;
            };
            if v.u.abs() > *half_width || v.v.abs() > *half_width {
                continue;
            }
            let (d1, d2) = (all[i].direction(), all[j].direction());
            for s1 in [1i64, -1] {
                for s2 in [1i64, -1] {
                    let w: [Q; 2] = std::array::from_fn(|k| &d1[k] * int(s1) + &d2[k] * int(s2));
                    let mut eps = Q::one();
                    for h in &all {
                        let (hv, rate) = (h.eval(&v), lin(h, &w));
                        if !hv.is_zero() && !rate.is_zero() {
                            eps = eps.min((hv / rate).abs() / int(2));
                        }
                    }
                    let p = Point2::new(&v.u + &w[0] * &eps, &v.v + &w[1] * &eps);
                    if p.u.abs() >= *half_width || p.v.abs() >= *half_width {
                        continue;
                    }
                    let signs: Vec<Sign> = lines.iter().map(|l| Sign::of(&l.eval(&p))).collect();
                    debug_assert!(signs.iter().all(|s| *s != Sign::Zero));
                    faces.insert(signs);
                }
            }
        }
    }
    faces.len()
}

pub fn random_instance(seed: u64, n: usize, bound: i64) -> (Vec<Plane>, Plane) {
    let mut rng = SplitMix64::new(seed);
    let planes = generate_planes(n, &mut rng, bound).expect("generation");
    let query = generate_query_plane(&planes, &mut rng, bound).expect("query");
    (planes, query)
}

pub fn random_lines(seed: u64, n: usize, bound: i64) -> (Vec<Line2>, Line2) {
    let mut rng = SplitMix64::new(seed);
    let lines = generate_lines(n, &mut rng, bound).expect("generation");
    let query = generate_query_line(&lines, &mut rng, bound).expect("query");
    (lines, query)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn octant_planes() -> Vec<Plane> {
    vec![
        Plane::from_ints(0, 1, 0, 0, 0).unwrap(),
        Plane::from_ints(1, 0, 1, 0, 0).unwrap(),
        Plane::from_ints(2, 0, 0, 1, 0).unwrap(),
    ]
}

/// `x + y + z = 1/2`.
pub fn octant_query() -> Plane {
    Plane::new(3, int(1), int(1), int(1), zonecheck::exact::ratio(-1, 2)).unwrap()
}

pub const OCTANT_FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/octant_planes.txt");
