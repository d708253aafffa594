mod common;

use std::collections::BTreeSet;

use common::*;
use zonecheck::exact::{int, ratio};
use zonecheck::harness::check_cell_identities;
use zonecheck::rng::SplitMix64;
use zonecheck::{
    build_arrangement_2d, compute_box_half_width, compute_square_half_width, zone_2d, Line2, Plane, ZoneInstance,
};

fn strict(coeffs: &[i64], constant: i64) -> Strict {
    Strict {
        coeffs: coeffs.iter().map(|&c| int(c)).collect(),
        constant: int(constant),
    }
}

#[test]
fn fourier_motzkin_small_systems() {
    // 0 < x < 1
    assert!(fm_feasible(vec![strict(&[1], 0), strict(&[-1], 1)]));
    // 0 < x < 0
    assert!(!fm_feasible(vec![strict(&[1], 0), strict(&[-1], 0)]));
    // x > 0, y > 0, x + y < 1
    assert!(fm_feasible(vec![strict(&[1, 0], 0), strict(&[0, 1], 0), strict(&[-1, -1], 1)]));
    // x > 1, y > 1, x + y < 2
    assert!(!fm_feasible(vec![strict(&[1, 0], -1), strict(&[0, 1], -1), strict(&[-1, -1], 2)]));
}

#[test]
fn octant_zone_matches_every_oracle() {
    let instance = ZoneInstance::new(&octant_planes(), &octant_query()).unwrap();
    let zone = &instance.zone.cell_ids;
    assert_eq!(zone.len(), 7);
    assert_eq!(instance.zone.zone_size, 21);
    assert_eq!(&zone_by_feasibility(&instance.arrangement, &instance.query), zone);
    assert_eq!(&zone_by_perturbation(&instance.arrangement, &instance.query), zone);
    let sampled = zone_by_sampling(&instance.arrangement, &instance.query, &mut SplitMix64::new(9), 500);
    assert!(sampled.is_subset(zone));
    // The all-negative octant never meets x + y + z = 1/2.
    let neg = instance.arrangement.locate(&zonecheck::Point3::new(ratio(-1, 2), ratio(-1, 2), ratio(-1, 2)));
    assert!(!zone.contains(&neg.unwrap()));
}

#[test]
fn random_zones_match_oracles() {
    for seed in 0..6u64 {
        let n = 3 + (seed as usize % 4);
        let (planes, query) = random_instance(seed, n, 12);
        let instance = ZoneInstance::new(&planes, &query).unwrap();
        let zone = &instance.zone.cell_ids;
        assert_eq!(&zone_by_feasibility(&instance.arrangement, &query), zone, "seed {seed}");
        assert_eq!(&zone_by_perturbation(&instance.arrangement, &query), zone, "seed {seed}");
        let sampled = zone_by_sampling(&instance.arrangement, &query, &mut SplitMix64::new(seed), 300);
        assert!(sampled.is_subset(zone), "seed {seed}");
    }
}

#[test]
fn mirrored_query_misses_the_positive_octant() {
    // x + y + z = -1/2 meets every octant except x, y, z > 0.
    let planes = octant_planes();
    let query = Plane::new(3, int(1), int(1), int(1), ratio(1, 2)).unwrap();
    let instance = ZoneInstance::new(&planes, &query).unwrap();
    let feasible = zone_by_feasibility(&instance.arrangement, &query);
    assert_eq!(feasible.len(), 7);
    assert_eq!(feasible, instance.zone.cell_ids);
    let pos = instance.arrangement.locate(&zonecheck::Point3::new(ratio(1, 2), ratio(1, 2), ratio(1, 2)));
    assert!(!feasible.contains(&pos.unwrap()));
}

#[test]
fn face_counts_match_perturbation_oracle() {
    for seed in 0..8u64 {
        let n = 1 + seed as usize;
        let (lines, _) = random_lines(seed, n, 15);
        let w = compute_square_half_width(&lines, &[]).unwrap();
        let arr = build_arrangement_2d(&lines, w.clone()).unwrap();
        assert_eq!(arr.faces().len(), 1 + n + binomial(n, 2), "seed {seed}");
        assert_eq!(face_count_by_perturbation(&lines, &w), arr.faces().len(), "seed {seed}");
    }
}

#[test]
fn two_dimensional_zone_of_a_grid() {
    // u = 0, v = 0 and the query u + 2v = 1/2 crosses three quadrants.
    let lines = vec![Line2::from_ints(0, 1, 0, 0).unwrap(), Line2::from_ints(1, 0, 1, 0).unwrap()];
    let query = Line2::new(2, int(1), int(2), ratio(-1, 2)).unwrap();
    let w = compute_square_half_width(&lines, std::slice::from_ref(&query)).unwrap();
    let arr = build_arrangement_2d(&lines, w).unwrap();
    let zone = zone_2d(&arr, &query).unwrap();
    assert_eq!(zone.face_count(), 3);
    // Every quadrant is bounded by two clipped half-lines.
    assert_eq!(zone.zone_size, 6);
}

#[test]
fn random_instances_satisfy_identities() {
    for seed in 0..5u64 {
        let (planes, _) = random_instance(100 + seed, 4 + seed as usize, 20);
        let a = compute_box_half_width(&planes, &[]).unwrap();
        let arr = zonecheck::build_arrangement_3d(&planes, a).unwrap();
        check_cell_identities(&arr).unwrap();
        let vertex_keys: BTreeSet<_> = arr.vertices().iter().map(|v| v.point.to_vec()).collect();
        assert_eq!(vertex_keys.len(), arr.vertices().len(), "duplicate vertex");
    }
}
