//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::time::Instant;

use common::*;
use zonecheck::harness::{check_cell_identities, expected_cell_count, expected_face_count, growth_ratio};
use zonecheck::io::parse_planes_file;
use zonecheck::rng::SplitMix64;
use zonecheck::zone_analysis::ZoneSample;
use zonecheck::{
    build_arrangement_2d, build_arrangement_3d, compute_box_half_width, compute_square_half_width, count_pairs,
    fit_constants, recurrence_for, run_experiment, ExperimentConfig, Mode, ZoneInstance,
};

const SEED: u64 = 20_240_601;
const BOUND: i64 = 20;

/// Largest allowed growth of max z(n)/n² from n = 5 to n = 10.
const SWEEP_GROWTH_TOLERANCE: f64 = 2.0;
/// Largest allowed 2D zone size per line.
const ZONE2D_PER_LINE: usize = 10;

type Outcome = Result<String, String>;

fn instance_3d(k: usize, n: usize) -> (Vec<zonecheck::Plane>, zonecheck::Plane) {
    let seed = SplitMix64::for_trial(SEED, n, k).next_u64();
    random_instance(seed, n, BOUND)
}

fn structural_identities() -> Outcome {
    for k in 0..50 {
        let n = 3 + k % 8;
        let (planes, _) = instance_3d(k, n);
        let arr = compute_box_half_width(&planes, &[])
            .and_then(|a| build_arrangement_3d(&planes, a))
            .map_err(|e| format!("instance {k}: {e}"))?;
        for (i, c) in arr.cells().iter().enumerate() {
            if 2 * c.e_count != 3 * c.v_count || c.f_count + c.v_count != c.e_count + 2 {
                return Err(format!("instance {k}, n {n}, cell {i}: V {} E {} F {}", c.v_count, c.e_count, c.f_count));
            }
        }
    }
    Ok("50 instances, n 3..10, zero violations".into())
}

fn census() -> Outcome {
    for k in 0..50 {
        let n = 3 + k % 8;
        let (planes, _) = instance_3d(k, n);
        let arr = compute_box_half_width(&planes, &[])
            .and_then(|a| build_arrangement_3d(&planes, a))
            .map_err(|e| format!("instance {k}: {e}"))?;
        check_cell_identities(&arr).map_err(|m| format!("3D instance {k}, n {n}: {m}"))?;
        debug_assert_eq!(arr.cells().len(), expected_cell_count(n));
    }
    for k in 0..50 {
        let n = 1 + k % 12;
        let seed = SplitMix64::for_trial(SEED ^ 2, n, k).next_u64();
        let (lines, _) = random_lines(seed, n, BOUND);
        let w = compute_square_half_width(&lines, &[]).map_err(|e| e.to_string())?;
        let arr = build_arrangement_2d(&lines, w.clone()).map_err(|e| e.to_string())?;
        let oracle = face_count_by_perturbation(&lines, &w);
        if arr.faces().len() != expected_face_count(n) || oracle != arr.faces().len() {
            return Err(format!(
                "2D instance {k}, n {n}: {} faces, oracle {oracle}, expected {}",
                arr.faces().len(),
                expected_face_count(n)
            ));
        }
    }
    Ok("50 3D and 50 2D instances match the closed forms".into())
}

fn zone_oracles() -> Outcome {
    let mut cells = 0;
    for k in 0..20 {
        let n = 3 + k % 6;
        let (planes, query) = instance_3d(100 + k, n);
        let inst = ZoneInstance::new(&planes, &query).map_err(|e| format!("instance {k}: {e}"))?;
        let zone = &inst.zone.cell_ids;
        let feasible = zone_by_feasibility(&inst.arrangement, &query);
        let perturbed = zone_by_perturbation(&inst.arrangement, &query);
        let sampled = zone_by_sampling(&inst.arrangement, &query, &mut SplitMix64::new(k as u64), 400);
        if &feasible != zone || &perturbed != zone || !sampled.is_subset(zone) {
            return Err(format!(
                "instance {k}, n {n}: zone {zone:?}, feasibility {feasible:?}, perturbation {perturbed:?}"
            ));
        }
        cells += inst.arrangement.cells().len();
    }
    Ok(format!("20 instances, {cells} cells classified identically"))
}

fn theorem1_and_recurrence() -> (Outcome, Outcome) {
    let mut checks = 0;
    let mut records = Vec::new();
    for k in 0..30 {
        let n = 3 + k % 6;
        let (planes, query) = instance_3d(200 + k, n);
        let result = ZoneInstance::new(&planes, &query)
            .and_then(|inst| recurrence_for(&inst))
            .map_err(|e| format!("instance {k}, n {n}: {e}"));
        match result {
            Ok(r) => records.push(r),
            Err(e) => return (Err(e.clone()), Err(e)),
        }
    }
    for r in &records {
        for q in &r.per_q {
            if q.lhs_pairs > q.rhs_zone_without_q + q.rhs_zone_induced {
                return (Err(format!("n {}, Q {}: {} > {}", r.n, q.q_id, q.lhs_pairs, q.rhs())), Err("skipped".into()));
            }
            checks += 1;
        }
    }
    let t1 = Ok(format!("30 instances, {checks} planes, zero violations"));
    for r in &records {
        let expected = (r.n as i64 - 1) * r.zone_size as i64;
        if r.sum_pairs != expected || r.lhs != expected || r.lhs > r.rhs {
            return (
                t1,
                Err(format!("n {}: sum {} vs (n-1)z {} vs rhs {}", r.n, r.sum_pairs, expected, r.rhs)),
            );
        }
    }
    (t1, Ok("summed identity exact and bounded on 30 instances".into()))
}

fn sweep() -> Outcome {
    let mut config = ExperimentConfig::new(Mode::Sweep);
    config.n_min = 3;
    config.n_max = 10;
    config.trials_per_n = 20;
    config.seed = SEED;
    let start = Instant::now();
    let out = run_experiment(&config).map_err(|e| e.to_string())?;
    let t = &out.table;
    let (zi, z2) = (t.column("zone_size").unwrap(), t.column("zone2d_size").unwrap());
    let samples: Vec<ZoneSample> = t
        .rows
        .iter()
        .map(|r| ZoneSample {
            n: r[1].parse().unwrap(),
            zone_size: r[zi].parse().unwrap(),
        })
        .collect();
    let stats = fit_constants(&samples).map_err(|e| e.to_string())?;
    let growth = growth_ratio(&stats, 5, 10).ok_or("missing n = 5 or n = 10")?;
    let worst2d = t
        .rows
        .iter()
        .map(|r| (r[z2].parse::<usize>().unwrap(), r[1].parse::<usize>().unwrap()))
        .find(|&(z, n)| z > ZONE2D_PER_LINE * n);
    if growth > SWEEP_GROWTH_TOLERANCE {
        return Err(format!("max z/n^2 grew by {growth:.3} from n=5 to n=10"));
    }
    if let Some((z, n)) = worst2d {
        return Err(format!("2D zone {z} exceeds {ZONE2D_PER_LINE}*{n}"));
    }
    Ok(format!(
        "160 trials in {:.1}s, growth {growth:.3} <= {SWEEP_GROWTH_TOLERANCE}, 2D zone <= {ZONE2D_PER_LINE}n",
        start.elapsed().as_secs_f64()
    ))
}

fn octant_fixture() -> Outcome {
    let planes = parse_planes_file(std::path::Path::new(OCTANT_FIXTURE)).map_err(|e| e.to_string())?;
    let inst = ZoneInstance::new(&planes, &octant_query()).map_err(|e| e.to_string())?;
    let pairs = count_pairs(&inst.arrangement, &inst.query, 2).map_err(|e| e.to_string())?;
    let rec = recurrence_for(&inst).map_err(|e| e.to_string())?;
    let got = (inst.zone.zone_size, pairs, rec.lhs);
    if got != (21, 14, 42) {
        return Err(format!("zone, pairs, lhs = {got:?}"));
    }
    Ok("zone 21, pairs 14, lhs 42".into())
}

fn determinism() -> Outcome {
    let mut total = 0;
    for mode in [Mode::EulerChecks, Mode::Zone2d, Mode::Zone3d, Mode::Theorem1, Mode::Recurrence] {
        let mut config = ExperimentConfig::new(mode);
        config.n_min = 3;
        config.n_max = 6;
        config.trials_per_n = 2;
        config.seed = SEED;
        let a = run_experiment(&config).map_err(|e| e.to_string())?.table.render();
        let b = run_experiment(&config).map_err(|e| e.to_string())?.table.render();
        if a != b {
            return Err(format!("{} output differs between runs", mode.name()));
        }
        total += a.len();
    }
    Ok(format!("5 modes, {total} bytes identical across runs"))
}

fn timed(f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let secs = |t: Instant| t.elapsed().as_secs_f64();
    f().map(|d| format!("{d}; {:.1}s", secs(start))).map_err(|d| format!("{d}; {:.1}s", secs(start)))
}

fn main() {
    let start = Instant::now();
    let mut results: Vec<(&str, Outcome)> = vec![
        ("structural identities", timed(structural_identities)),
        ("census formulas", timed(census)),
        ("zone oracle equivalence", timed(zone_oracles)),
    ];
    let (t1, rec) = theorem1_and_recurrence();
    results.push(("pair-counting inequality", t1));
    results.push(("summed identity and recurrence", rec));
    results.push(("asymptotic sweep", sweep()));
    results.push(("octant fixture", timed(octant_fixture)));
    results.push(("deterministic CSV", timed(determinism)));
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({detail})", i + 1);
            }
        }
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
