//! Approximation scheme for the gain over the empty-route cost,
//! `B'(x) = B(x) - B(empty)`.
//!
//! The DP runs in `B'` space (the root entry is 0) and two entries compete on
//! `floor(B' / r)` instead of the exact value, with `r = eps * L / m` and `L`
//! the best single-item gain. Each column then holds at most one entry per
//! bucket, which bounds the non-negative part of a column by `m^2 / eps + 1`.
//! Every rounding step loses less than `r`, so after `m` items the loss is at
//! most `eps * L <= eps * OPT'`.
//!
//! Entries with negative gain are kept by default, under the same weight
//! dominance rule with negative bucket indices. [`NegativeStates::Discard`]
//! drops them instead.

use crate::dp::{merge_extend, reconstruct, ParetoColumn};
use crate::error::FptasError;
use crate::model::{Instance, Selection};
use crate::solution::{Solution, SolveStats};

/// Rounding parameters derived from an instance and `eps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FptasConfig {
    pub epsilon: f64,
    /// `L`: the largest gain of a single packable item.
    pub best_single_gain: f64,
    /// `r = eps * L / m`; zero when the config is trivial.
    pub scale: f64,
}

impl FptasConfig {
    /// No single item has positive gain, so the optimum gain is 0 and the
    /// empty selection is returned.
    pub fn is_trivial(&self) -> bool {
        self.best_single_gain <= 0.0
    }

    /// Upper bound on non-negative entries in any column, `m^2 / eps + 1`.
    pub fn column_bound(&self, m: usize) -> f64 {
        (m * m) as f64 / self.epsilon + 1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NegativeStates {
    /// Keep negative-gain prefix states, bucketed like the rest.
    #[default]
    Keep,
    /// Drop every state whose gain is negative.
    Discard,
}

fn check_epsilon(epsilon: f64) -> Result<(), FptasError> {
    if epsilon > 0.0 && epsilon <= 1.0 {
        Ok(())
    } else {
        Err(FptasError::Epsilon(epsilon))
    }
}

/// Computes `L` and `r`. Items heavier than the capacity are ignored.
pub fn compute_scale(instance: &Instance, epsilon: f64) -> Result<FptasConfig, FptasError> {
    check_epsilon(epsilon)?;
    let mut best = 0.0f64;
    for (pos, item) in instance.items().iter().enumerate() {
        if !instance.is_selectable(item) {
            continue;
        }
        let single = Selection::from_positions(instance, &[pos])?;
        best = best.max(instance.benefit(&single)?.gain);
    }
    let m = instance.item_count();
    let scale = if best > 0.0 {
        epsilon * best / m as f64
    } else {
        0.0
    };
    Ok(FptasConfig {
        epsilon,
        best_single_gain: best,
        scale,
    })
}

#[inline]
fn bucket(value: f64, scale: f64) -> f64 {
    (value / scale).floor()
}

/// True iff some entry of `column` lighter than `candidate_weight` falls in a
/// bucket at least as high as the candidate's.
pub fn rounded_dominates(
    candidate_benefit: f64,
    candidate_weight: u64,
    column: &ParetoColumn,
    scale: f64,
) -> bool {
    let target = bucket(candidate_benefit, scale);
    column
        .entries()
        .iter()
        .take_while(|e| e.weight < candidate_weight)
        .any(|e| bucket(e.benefit, scale) >= target)
}

fn extend_rounded(
    column: &ParetoColumn,
    instance: &Instance,
    position: usize,
    scale: f64,
    negative: NegativeStates,
) -> ParetoColumn {
    let item = &instance.items()[position];
    let d_in = instance.distance_to_end(item.city);
    merge_extend(column, item, d_in, instance, |next, candidate| {
        if negative == NegativeStates::Discard && candidate.benefit < 0.0 {
            return;
        }
        next.offer_by(candidate, |b| bucket(b, scale));
    })
}

/// Every column of a run, root first. Empty for trivial configs.
pub fn fptas_history(
    instance: &Instance,
    epsilon: f64,
    negative: NegativeStates,
) -> Result<Vec<ParetoColumn>, FptasError> {
    let config = compute_scale(instance, epsilon)?;
    if config.is_trivial() {
        return Ok(Vec::new());
    }
    let mut history = Vec::with_capacity(instance.item_count() + 1);
    history.push(ParetoColumn::root(0.0));
    for pos in 0..instance.item_count() {
        let next = extend_rounded(
            history.last().unwrap(),
            instance,
            pos,
            config.scale,
            negative,
        );
        history.push(next);
    }
    Ok(history)
}

/// Selection with `B'(x) >= (1 - eps) * OPT'`, keeping negative-gain states.
pub fn fptas_solve(instance: &Instance, epsilon: f64) -> Result<Solution, FptasError> {
    fptas_solve_with(instance, epsilon, NegativeStates::Keep)
}

pub fn fptas_solve_with(
    instance: &Instance,
    epsilon: f64,
    negative: NegativeStates,
) -> Result<Solution, FptasError> {
    let history = fptas_history(instance, epsilon, negative)?;
    if history.is_empty() {
        let selection = Selection::empty(instance);
        let evaluation = instance.benefit(&selection)?;
        return Ok(Solution {
            selection,
            evaluation,
            stats: SolveStats::default(),
        });
    }
    let mut stats = SolveStats::default();
    for column in &history[1..] {
        stats.record(column);
    }
    let last = history.last().unwrap();
    stats.value = last.entries()[last.best().unwrap()].benefit;
    let selection = reconstruct(&history, instance);
    let evaluation = instance.benefit(&selection)?;
    Ok(Solution {
        selection,
        evaluation,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp::{dp_solve, prune_dominated, ParetoEntry};
    use crate::model::fixtures::{e1, e2};
    use crate::model::{ItemSpec, Vehicle};
    use crate::testutil::{assert_close, random_instance};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn losing_instance() -> Instance {
        Instance::new(
            "losing",
            vec![100.0, 100.0],
            Vehicle {
                v_min: 0.1,
                v_max: 1.0,
                capacity: 10,
                rent: 5.0,
            },
            vec![
                ItemSpec {
                    city: 1,
                    profit: 1.0,
                    weight: 5,
                },
                ItemSpec {
                    city: 2,
                    profit: 2.0,
                    weight: 4,
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn scale_examples() {
        let cfg = compute_scale(&e2(), 0.5).unwrap();
        assert_close(cfg.best_single_gain, 2.75);
        assert_close(cfg.scale, 0.6875);

        let cfg = compute_scale(&e1(), 1.0).unwrap();
        assert_close(cfg.best_single_gain, 9.5);
        assert_close(cfg.scale, 9.5);

        assert!(compute_scale(&losing_instance(), 0.5).unwrap().is_trivial());
    }

    #[test]
    fn epsilon_is_validated() {
        for eps in [0.0, -0.1, 1.0000001, 2.0, f64::NAN] {
            let err = fptas_solve(&e2(), eps).unwrap_err();
            assert!(matches!(err, FptasError::Epsilon(_)));
            assert!(err.to_string().starts_with("eps must be in (0,1]"));
        }
        assert!(fptas_solve(&e2(), 1.0).is_ok());
    }

    #[test]
    fn solves_e2_exactly() {
        let sol = fptas_solve(&e2(), 0.5).unwrap();
        assert!(sol.evaluation.gain >= 2.2);
        assert_close(sol.evaluation.gain, 4.4);
    }

    #[test]
    fn nothing_worth_packing_returns_empty() {
        let inst = losing_instance();
        let sol = fptas_solve(&inst, 0.3).unwrap();
        assert_eq!(sol.selection.count(), 0);
        assert_eq!(sol.evaluation.gain, 0.0);
    }

    #[test]
    fn rounded_dominance_examples() {
        let column = prune_dominated(&[(0, 0.0)]);
        assert!(rounded_dominates(0.9, 1, &column, 1.0));
        assert!(!rounded_dominates(1.2, 1, &column, 1.0));
        // same weight is not "lighter"
        assert!(!rounded_dominates(0.5, 0, &column, 1.0));
    }

    #[test]
    fn admitted_entries_occupy_increasing_buckets() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for trial in 0..100 {
            let inst = random_instance(&mut rng, 12, 40);
            let eps = [0.75, 0.25, 0.05][trial % 3];
            let cfg = compute_scale(&inst, eps).unwrap();
            let history = fptas_history(&inst, eps, NegativeStates::Keep).unwrap();
            for column in history.iter().skip(1) {
                for w in column.entries().windows(2) {
                    assert!(w[0].weight < w[1].weight);
                    assert!(bucket(w[0].benefit, cfg.scale) < bucket(w[1].benefit, cfg.scale));
                }
                for (i, e) in column.entries().iter().enumerate() {
                    let pairs: Vec<(u64, f64)> = column.entries()[..i]
                        .iter()
                        .map(|e| (e.weight, e.benefit))
                        .collect();
                    let lighter = prune_dominated(&pairs);
                    assert_eq!(lighter.len(), i);
                    assert!(!rounded_dominates(e.benefit, e.weight, &lighter, cfg.scale));
                }
            }
        }
    }

    #[test]
    fn guarantee_holds_for_both_negative_state_policies() {
        let mut rng = ChaCha8Rng::seed_from_u64(100);
        let mut differing = 0;
        for trial in 0..500 {
            let inst = random_instance(&mut rng, 1 + trial % 15, 40);
            let opt = dp_solve(&inst).evaluation.gain;
            for eps in [0.75, 0.25, 0.01] {
                let keep = fptas_solve_with(&inst, eps, NegativeStates::Keep).unwrap();
                let drop = fptas_solve_with(&inst, eps, NegativeStates::Discard).unwrap();
                assert!(keep.evaluation.gain >= (1.0 - eps) * opt - 1e-9);
                assert!(drop.evaluation.gain >= (1.0 - eps) * opt - 1e-9);
                assert!(keep.evaluation.gain >= 0.0);
                if keep.evaluation.gain != drop.evaluation.gain {
                    differing += 1;
                }
            }
        }
        // informational only; both variants must meet the bound
        eprintln!("keep/discard variants differed on {differing} runs");
    }

    #[test]
    fn stored_values_never_exceed_the_optimum() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..200 {
            let inst = random_instance(&mut rng, 12, 40);
            let opt = dp_solve(&inst).evaluation.gain;
            for mode in [NegativeStates::Keep, NegativeStates::Discard] {
                for column in fptas_history(&inst, 0.1, mode).unwrap() {
                    for ParetoEntry { benefit, .. } in column.entries() {
                        assert!(*benefit <= opt + 1e-9);
                        if mode == NegativeStates::Discard {
                            assert!(*benefit >= 0.0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn best_single_gain_sandwiches_the_optimum() {
        let mut rng = ChaCha8Rng::seed_from_u64(66);
        for _ in 0..300 {
            let inst = random_instance(&mut rng, 10, 40);
            let cfg = compute_scale(&inst, 0.5).unwrap();
            if cfg.is_trivial() {
                continue;
            }
            let opt = dp_solve(&inst).evaluation.gain;
            let m = inst.item_count() as f64;
            assert!(cfg.best_single_gain <= opt + 1e-9);
            assert!(opt <= m * cfg.best_single_gain + 1e-9);
        }
    }

    #[test]
    fn column_sizes_respect_the_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..200 {
            let inst = random_instance(&mut rng, 15, 40);
            for eps in [1.0, 0.5, 0.1] {
                let cfg = compute_scale(&inst, eps).unwrap();
                let sol = fptas_solve(&inst, eps).unwrap();
                assert!(
                    sol.stats.peak_nonnegative_entries as f64
                        <= cfg.column_bound(inst.item_count())
                );
                assert!(sol.stats.peak_entries as u64 <= inst.capacity() + 1);
            }
        }
    }
}
