use crate::model::{Instance, ItemSpec, Vehicle};
use rand::Rng;

pub fn assert_close(actual: f64, expected: f64) {
    let tol = 1e-9 * expected.abs().max(1.0);
    assert!(
        (actual - expected).abs() <= tol,
        "expected {expected}, got {actual}"
    );
}

/// Small random instance with `m` items and capacity at most `max_capacity`.
pub fn random_instance(rng: &mut impl Rng, m: usize, max_capacity: u64) -> Instance {
    let n = rng.gen_range(1..=m.max(1).div_ceil(2) + 1);
    let distances = (0..n).map(|_| rng.gen_range(1.0..10.0)).collect();
    let items = (0..m)
        .map(|_| ItemSpec {
            city: rng.gen_range(1..=n),
            profit: rng.gen_range(1..=30) as f64,
            weight: rng.gen_range(1..=15),
        })
        .collect();
    let vehicle = Vehicle {
        v_min: 0.1,
        v_max: 1.0,
        capacity: rng.gen_range(1..=max_capacity),
        rent: rng.gen_range(0.05..1.0),
    };
    Instance::new("random", distances, vehicle, items).unwrap()
}
