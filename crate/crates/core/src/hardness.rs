//! Subset-sum to packing-while-traveling reductions.
//!
//! Both constructions use one leg of length 1 and one item per subset-sum
//! value with `p = w = s_k`, so the benefit of a selection of total weight `w`
//! is a single-variable curve `f(w) = w - R / (v_max - nu * w)`. The vehicle
//! parameters are chosen so that `f` is concave with its unique maximum,
//! exactly 0, at an integer weight `w*`. An instance therefore has a
//! selection with `B >= 0` iff some subset sums to `w*`.
//!
//! * Capacitated: `W = Q`, `v_max = 2`, `v_min = 1`, `R = Q`, and `w* = Q`.
//!   The capacity cuts the curve off at its peak.
//! * Unconstrained: the capacity is the sum of all values, so it never binds.
//!   The curve `w - P / (2 - w / P)` peaks at `w* = P` and stays finite only
//!   for `w < 2P`, so the peak `P` must exceed half the total. `P = Q` when
//!   `2Q > sum`; otherwise `P = sum - Q` (a subset hits `Q` iff its complement
//!   hits `sum - Q`); and when `2Q == sum` an extra value `sum + 1` is added
//!   with `P = Q + sum + 1`, which only subsets containing the extra value can reach.
//!
//! [`reduce_unconstrained_literal`] builds the variant with
//! `v_min = sqrt(Q / (2W - Q))`, `v_max = 2 v_min` and
//! `R = v_min W (v_max - v_min Q / W)^2`. Its curve is 0 at `Q` but has slope
//! `1 - v_min^2 > 0` there whenever `Q < W`, so heavier selections can reach a
//! positive benefit without any subset summing to `Q`. It is kept for
//! comparison only.

use crate::error::HardnessError;
use crate::model::{Instance, ItemSpec, Vehicle};

/// Benefits at or above `-DECISION_TOLERANCE` count as non-negative.
pub const DECISION_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SspInstance {
    values: Vec<u64>,
    target: u64,
}

impl SspInstance {
    pub fn new(values: Vec<u64>, target: u64) -> Result<Self, HardnessError> {
        if values.is_empty() {
            return Err(HardnessError::NoValues);
        }
        if target == 0 || values.contains(&0) {
            return Err(HardnessError::NonPositive);
        }
        let total: u64 = values.iter().sum();
        if target > total {
            return Err(HardnessError::TargetTooLarge { target, total });
        }
        Ok(SspInstance { values, target })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    Capacitated,
    Unconstrained,
}

/// `f(w) = w - R / (v_max - nu * w)` on `[0, W]`: the benefit of any
/// selection of total weight `w` in a reduced instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenefitCurve {
    pub rent: f64,
    pub v_max: f64,
    pub nu: f64,
    pub capacity: u64,
}

impl BenefitCurve {
    pub fn of(instance: &Instance) -> Self {
        BenefitCurve {
            rent: instance.rent(),
            v_max: instance.vehicle().v_max,
            nu: instance.nu(),
            capacity: instance.capacity(),
        }
    }

    pub fn value(&self, w: f64) -> Result<f64, HardnessError> {
        let capacity = self.capacity as f64;
        if !(0.0..=capacity).contains(&w) {
            return Err(HardnessError::OutOfDomain { w, capacity });
        }
        Ok(w - self.rent / (self.v_max - self.nu * w))
    }
}

/// A reduced instance together with the weight at which its curve peaks at 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Reduction {
    pub kind: ReductionKind,
    pub instance: Instance,
    pub peak: u64,
}

impl Reduction {
    pub fn curve(&self) -> BenefitCurve {
        BenefitCurve::of(&self.instance)
    }
}

fn two_city_instance(
    name: String,
    values: &[u64],
    vehicle: Vehicle,
) -> Result<Instance, HardnessError> {
    let items = values
        .iter()
        .map(|&s| ItemSpec {
            city: 1,
            profit: s as f64,
            weight: s,
        })
        .collect();
    Ok(Instance::new(name, vec![1.0], vehicle, items)?)
}

fn label(prefix: &str, ssp: &SspInstance) -> String {
    format!("{prefix}-m{}-q{}", ssp.values.len(), ssp.target)
}

pub fn reduce_capacitated(ssp: &SspInstance) -> Result<Reduction, HardnessError> {
    let q = ssp.target;
    let instance = two_city_instance(
        label("ssp-capacitated", ssp),
        &ssp.values,
        Vehicle {
            v_min: 1.0,
            v_max: 2.0,
            capacity: q,
            rent: q as f64,
        },
    )?;
    Ok(Reduction {
        kind: ReductionKind::Capacitated,
        instance,
        peak: q,
    })
}

pub fn reduce_unconstrained(ssp: &SspInstance) -> Result<Reduction, HardnessError> {
    let total = ssp.total();
    let q = ssp.target;
    let (values, peak) = if 2 * q > total {
        (ssp.values.clone(), q)
    } else if 2 * q < total {
        (ssp.values.clone(), total - q)
    } else {
        let mut padded = ssp.values.clone();
        padded.push(total + 1);
        (padded, q + total + 1)
    };
    let capacity: u64 = values.iter().sum();
    let instance = two_city_instance(
        label("ssp-unconstrained", ssp),
        &values,
        Vehicle {
            v_min: 2.0 - capacity as f64 / peak as f64,
            v_max: 2.0,
            capacity,
            rent: peak as f64,
        },
    )?;
    Ok(Reduction {
        kind: ReductionKind::Unconstrained,
        instance,
        peak,
    })
}

/// The unsound unconstrained construction described in the module docs.
pub fn reduce_unconstrained_literal(ssp: &SspInstance) -> Result<Instance, HardnessError> {
    let w = ssp.total() as f64;
    let q = ssp.target as f64;
    let v_min = (q / (2.0 * w - q)).sqrt();
    let v_max = 2.0 * v_min;
    let rent = v_min * w * (v_max - v_min * q / w).powi(2);
    two_city_instance(
        label("ssp-unconstrained-literal", ssp),
        &ssp.values,
        Vehicle {
            v_min,
            v_max,
            capacity: ssp.total(),
            rent,
        },
    )
}

pub fn reduce(kind: ReductionKind, ssp: &SspInstance) -> Result<Reduction, HardnessError> {
    match kind {
        ReductionKind::Capacitated => reduce_capacitated(ssp),
        ReductionKind::Unconstrained => reduce_unconstrained(ssp),
    }
}

/// Evaluates the reduction curve of `ssp` at weight `w`.
pub fn curve_value(kind: ReductionKind, ssp: &SspInstance, w: f64) -> Result<f64, HardnessError> {
    reduce(kind, ssp)?.curve().value(w)
}

pub fn is_nonnegative(benefit: f64) -> bool {
    benefit >= -DECISION_TOLERANCE
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp::dp_solve;
    use crate::model::brute_force;

    fn ssp(values: &[u64], target: u64) -> SspInstance {
        SspInstance::new(values.to_vec(), target).unwrap()
    }

    fn best(kind: ReductionKind, s: &SspInstance) -> f64 {
        brute_force(&reduce(kind, s).unwrap().instance)
            .unwrap()
            .1
            .benefit
    }

    #[test]
    fn ssp_validation() {
        assert_eq!(SspInstance::new(vec![], 1), Err(HardnessError::NoValues));
        assert_eq!(
            SspInstance::new(vec![1, 0], 1),
            Err(HardnessError::NonPositive)
        );
        assert_eq!(
            SspInstance::new(vec![1], 0),
            Err(HardnessError::NonPositive)
        );
        assert_eq!(
            SspInstance::new(vec![1, 2], 4),
            Err(HardnessError::TargetTooLarge {
                target: 4,
                total: 3
            })
        );
    }

    #[test]
    fn capacitated_examples() {
        let yes = ssp(&[3, 5, 8], 8);
        let r = reduce_capacitated(&yes).unwrap();
        assert_eq!(r.instance.capacity(), 8);
        assert_eq!(r.instance.distances(), &[1.0]);
        let (sel, ev) = brute_force(&r.instance).unwrap();
        assert!(ev.benefit.abs() < 1e-9);
        assert_eq!(sel.total_weight(), 8);

        assert!(best(ReductionKind::Capacitated, &ssp(&[3, 5], 4)) < -1e-9);

        for q in [1, 7, 100] {
            assert!(best(ReductionKind::Capacitated, &ssp(&[q], q)).abs() < 1e-9);
        }
    }

    #[test]
    fn unconstrained_examples() {
        let yes = ssp(&[3, 5, 8], 8);
        let r = reduce_unconstrained(&yes).unwrap();
        // 2Q == sum, so the instance is padded with 17 and peaks at 25
        assert_eq!(r.peak, 25);
        assert_eq!(r.instance.capacity(), 33);
        let (sel, ev) = brute_force(&r.instance).unwrap();
        assert!(ev.benefit.abs() < 1e-9);
        assert_eq!(sel.total_weight(), 25);

        assert!(best(ReductionKind::Unconstrained, &ssp(&[2, 3], 4)) < -1e-9);

        let single = reduce_unconstrained(&ssp(&[6], 6)).unwrap();
        assert_eq!(single.instance.capacity(), 6);
        assert!(brute_force(&single.instance).unwrap().1.benefit.abs() < 1e-9);

        // small target: the complement sum is the peak
        let r = reduce_unconstrained(&ssp(&[1, 2, 4, 9], 3)).unwrap();
        assert_eq!(r.peak, 13);
        assert!(is_nonnegative(brute_force(&r.instance).unwrap().1.benefit));
    }

    #[test]
    fn literal_unconstrained_variant_is_not_a_reduction() {
        // no subset of {2, 3} sums to 4, yet taking both items pays off
        let no = ssp(&[2, 3], 4);
        let inst = reduce_unconstrained_literal(&no).unwrap();
        let curve = BenefitCurve::of(&inst);
        assert!(curve.value(4.0).unwrap().abs() < 1e-9);
        let (sel, ev) = brute_force(&inst).unwrap();
        assert_eq!(sel.total_weight(), 5);
        assert!(ev.benefit > 0.1);

        let yes = reduce_unconstrained_literal(&ssp(&[3, 5, 8], 8)).unwrap();
        assert!((brute_force(&yes).unwrap().1.benefit - 4.0).abs() < 1e-9);
    }

    #[test]
    fn curve_examples() {
        let s = ssp(&[8], 8);
        assert!(
            curve_value(ReductionKind::Capacitated, &s, 8.0)
                .unwrap()
                .abs()
                < 1e-12
        );
        assert!((curve_value(ReductionKind::Capacitated, &s, 0.0).unwrap() + 4.0).abs() < 1e-12);
        let s = ssp(&[3, 5, 8], 8);
        let r = reduce_unconstrained(&s).unwrap();
        assert!(r.curve().value(r.peak as f64).unwrap().abs() < 1e-9);
        assert!(matches!(
            curve_value(ReductionKind::Capacitated, &s, 9.0),
            Err(HardnessError::OutOfDomain { .. })
        ));
        assert!(curve_value(ReductionKind::Capacitated, &s, -0.5).is_err());
    }

    #[test]
    fn curves_are_concave() {
        for s in [
            ssp(&[3, 5, 8], 8),
            ssp(&[4, 9, 13, 2], 11),
            ssp(&[10, 20, 30], 25),
        ] {
            for kind in [ReductionKind::Capacitated, ReductionKind::Unconstrained] {
                let curve = reduce(kind, &s).unwrap().curve();
                let cap = curve.capacity as f64;
                let at = |i: u32| curve.value(cap * i as f64 / 400.0).unwrap();
                for i in 1..400 {
                    let w = cap * i as f64 / 400.0;
                    let second = at(i - 1) - 2.0 * at(i) + at(i + 1);
                    assert!(second <= 1e-9, "{kind:?} at {w}");
                }
            }
        }
    }

    #[test]
    fn dp_agrees_with_brute_force_on_reductions() {
        let cases = [
            ssp(&[3, 5, 8], 8),
            ssp(&[2, 3], 4),
            ssp(&[7, 11, 13, 17], 24),
        ];
        for s in &cases {
            for kind in [ReductionKind::Capacitated, ReductionKind::Unconstrained] {
                let inst = reduce(kind, s).unwrap().instance;
                let exact = brute_force(&inst).unwrap().1.benefit;
                assert!((dp_solve(&inst).evaluation.benefit - exact).abs() < 1e-9);
            }
        }
    }
}
