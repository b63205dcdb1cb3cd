//! Oracles shared by the integration tests. They compute everything from the
//! raw instance data and avoid the library's DP code paths.

#![allow(dead_code)]

use pwt_core::io::{generate, Family, GeneratorSpec, ValueRange};
use pwt_core::Instance;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Weight range used for the small random cases, scaled so that a capacity
/// of at most 40 still admits several items.
pub const CASE_RANGE: ValueRange = ValueRange { lo: 1, hi: 30 };
pub const CASE_CAPACITY: u64 = 40;

/// Random instance with `m <= max_items`, `W <= 40`, cycling through the
/// four generator families.
pub fn small_case(seed: u64, max_items: usize) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_ca5e);
    let family = Family::ALL[(seed % 4) as usize];
    let m = rng.gen_range(1..=max_items);
    let spec = GeneratorSpec {
        range: CASE_RANGE,
        nodes: rng.gen_range(2..=8),
        ..GeneratorSpec::new(family, m, rng.gen_range(1..=10), seed)
    };
    let generated = generate(&spec).expect("valid spec");
    let capacity = generated.capacity().min(CASE_CAPACITY);
    generated
        .with_capacity(capacity)
        .expect("positive capacity")
}

fn unit_time(instance: &Instance, w: u64) -> f64 {
    let v = instance.vehicle();
    let nu = (v.v_max - v.v_min) / instance.capacity() as f64;
    1.0 / (v.v_max - nu * w as f64)
}

/// Dense DP over exact weights, charging travel leg by leg as the route is
/// walked. Returns, after each item (root first), the best benefit of every
/// reachable weight assuming nothing more is picked up.
pub fn dense_columns(instance: &Instance) -> Vec<Vec<Option<f64>>> {
    let cap = instance.capacity() as usize;
    let rent = instance.rent();
    let d = instance.distances();
    let n = d.len();
    // best[w]: profit minus rent for the legs already travelled
    let mut best: Vec<Option<f64>> = vec![None; cap + 1];
    best[0] = Some(0.0);
    let remaining = |from_leg: usize, w: usize| -> f64 {
        (from_leg..n)
            .map(|leg| rent * d[leg] * unit_time(instance, w as u64))
            .sum()
    };
    let complete = |best: &[Option<f64>], from_leg: usize| -> Vec<Option<f64>> {
        best.iter()
            .enumerate()
            .map(|(w, b)| b.map(|b| b - remaining(from_leg, w)))
            .collect()
    };
    let mut columns = vec![complete(&best, 0)];
    let mut leg = 0;
    for item in instance.items() {
        while leg + 1 < item.city {
            charge_leg(&mut best, instance, leg);
            leg += 1;
        }
        let w = item.weight as usize;
        if w <= cap {
            for total in (w..=cap).rev() {
                if let Some(prev) = best[total - w] {
                    let cand = prev + item.profit;
                    if best[total].is_none_or(|b| cand > b) {
                        best[total] = Some(cand);
                    }
                }
            }
        }
        columns.push(complete(&best, leg));
    }
    columns
}

fn charge_leg(best: &mut [Option<f64>], instance: &Instance, leg: usize) {
    let cost = instance.rent() * instance.distances()[leg];
    for (w, b) in best.iter_mut().enumerate() {
        if let Some(b) = b {
            *b -= cost * unit_time(instance, w as u64);
        }
    }
}

/// Entries `(w, b)` whose benefit beats every lighter reachable weight.
pub fn frontier(column: &[Option<f64>]) -> Vec<(u64, f64)> {
    let mut out = Vec::new();
    let mut top = f64::NEG_INFINITY;
    for (w, b) in column.iter().enumerate() {
        if let Some(b) = *b {
            if b > top {
                out.push((w as u64, b));
                top = b;
            }
        }
    }
    out
}

/// Best benefit over all feasible selections, from the dense table.
pub fn dense_optimum(instance: &Instance) -> f64 {
    dense_columns(instance)
        .last()
        .unwrap()
        .iter()
        .flatten()
        .fold(f64::NEG_INFINITY, |a, &b| a.max(b))
}

fn subset_sums(values: &[u64]) -> Vec<u64> {
    let mut sums = vec![0u64];
    for &v in values {
        let shifted: Vec<u64> = sums.iter().map(|s| s + v).collect();
        sums.extend(shifted);
    }
    sums.sort_unstable();
    sums.dedup();
    sums
}

/// Meet-in-the-middle subset-sum decision.
pub fn ssp_has_subset(values: &[u64], target: u64) -> bool {
    let (left, right) = values.split_at(values.len() / 2);
    let right = subset_sums(right);
    subset_sums(left)
        .into_iter()
        .filter(|&s| s <= target)
        .any(|s| right.binary_search(&(target - s)).is_ok())
}

pub fn relative_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
