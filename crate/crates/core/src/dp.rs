//! Exact pseudo-polynomial dynamic program over the route order of items.
//!
//! Column `i` holds, for every weight `k` reachable with the first `i` items,
//! the best benefit of a subset of weight exactly `k`. Columns are sparse and
//! Pareto-pruned: an entry survives only if every lighter entry has strictly
//! smaller benefit. The cost of hauling a fixed weight from a city to the end
//! of the route does not depend on which items make up that weight, so adding
//! an item at city `c` to an entry of weight `k` changes the benefit by
//! `p - R * d(c) * (t(k + w) - t(k))` where `d(c)` is the remaining distance.

use crate::model::{Instance, Item, Selection};
use crate::solution::{Solution, SolveStats};

/// Link from an entry to the entry of the previous column it was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Backpointer {
    pub pred: usize,
    pub took: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParetoEntry {
    pub weight: u64,
    pub benefit: f64,
    /// `None` for the root entry and for columns built outside a solve.
    pub back: Option<Backpointer>,
}

/// One DP column: entries strictly increasing in weight and in benefit.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ParetoColumn {
    entries: Vec<ParetoEntry>,
}

impl ParetoColumn {
    /// Column holding only the empty selection.
    pub fn root(benefit: f64) -> Self {
        ParetoColumn {
            entries: vec![ParetoEntry {
                weight: 0,
                benefit,
                back: None,
            }],
        }
    }

    pub fn entries(&self) -> &[ParetoEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Index of the entry with the largest benefit (always the heaviest).
    pub fn best(&self) -> Option<usize> {
        self.entries.len().checked_sub(1)
    }

    /// Offers a candidate no lighter than the current last entry. It is kept
    /// iff `key(benefit)` beats the key of the last lighter entry; an equal
    /// weight candidate replaces the last entry only with a strictly larger
    /// benefit. `key` must be monotone non-decreasing.
    pub(crate) fn offer_by<K: PartialOrd>(
        &mut self,
        candidate: ParetoEntry,
        key: impl Fn(f64) -> K,
    ) -> bool {
        match self.entries.last_mut() {
            None => {
                self.entries.push(candidate);
                true
            }
            Some(last) if last.weight == candidate.weight => {
                if candidate.benefit > last.benefit {
                    *last = candidate;
                    true
                } else {
                    false
                }
            }
            Some(last) => {
                debug_assert!(candidate.weight > last.weight);
                if key(candidate.benefit) > key(last.benefit) {
                    self.entries.push(candidate);
                    true
                } else {
                    false
                }
            }
        }
    }
}

/// Keeps an entry iff its benefit strictly exceeds every benefit at smaller
/// weight; equal-weight duplicates keep the larger benefit (earlier on ties).
/// Input must be sorted by weight.
pub fn prune_dominated(entries: &[(u64, f64)]) -> ParetoColumn {
    let mut column = ParetoColumn::default();
    for &(weight, benefit) in entries {
        column.offer_by(
            ParetoEntry {
                weight,
                benefit,
                back: None,
            },
            |b| b,
        );
    }
    column
}

/// Merges the skip branch (the old column) with the take branch (every old
/// entry shifted by the item) in weight order, feeding each candidate to
/// `admit`. Skip candidates go first on equal weight.
pub(crate) fn merge_extend(
    column: &ParetoColumn,
    item: &Item,
    d_in: f64,
    instance: &Instance,
    mut admit: impl FnMut(&mut ParetoColumn, ParetoEntry),
) -> ParetoColumn {
    let old = column.entries();
    let capacity = instance.capacity();
    // shifted entries past the capacity are dropped
    let takeable = if item.weight > capacity {
        0
    } else {
        old.partition_point(|e| e.weight <= capacity - item.weight)
    };
    let mut next = ParetoColumn {
        entries: Vec::with_capacity(old.len() + takeable),
    };
    let (mut s, mut t) = (0, 0);
    while s < old.len() || t < takeable {
        let skip_next =
            t >= takeable || (s < old.len() && old[s].weight <= old[t].weight + item.weight);
        let candidate = if skip_next {
            let e = &old[s];
            s += 1;
            ParetoEntry {
                weight: e.weight,
                benefit: e.benefit,
                back: Some(Backpointer {
                    pred: s - 1,
                    took: false,
                }),
            }
        } else {
            let e = &old[t];
            t += 1;
            ParetoEntry {
                weight: e.weight + item.weight,
                benefit: e.benefit + instance.take_delta(item.profit, d_in, e.weight, item.weight),
                back: Some(Backpointer {
                    pred: t - 1,
                    took: true,
                }),
            }
        };
        admit(&mut next, candidate);
    }
    next
}

/// One step of the recurrence: the dominance-pruned column after considering `item`.
/// `d_in` is the distance from the item's city to the end of the route.
pub fn extend_column(
    column: &ParetoColumn,
    item: &Item,
    d_in: f64,
    instance: &Instance,
) -> ParetoColumn {
    merge_extend(column, item, d_in, instance, |col, cand| {
        col.offer_by(cand, |b| b);
    })
}

/// Walks backpointers from the best entry of the last column.
pub(crate) fn reconstruct(history: &[ParetoColumn], instance: &Instance) -> Selection {
    let mut bits = vec![false; instance.item_count()];
    let last = history.last().expect("history holds the root column");
    let mut idx = last.best().expect("columns are never empty");
    for (pos, column) in history.iter().enumerate().skip(1).rev() {
        let back = column.entries()[idx]
            .back
            .expect("solver entries carry backpointers");
        bits[pos - 1] = back.took;
        idx = back.pred;
    }
    Selection::from_bits(instance, bits).expect("length matches the instance")
}

/// Optimal selection for `B`, reconstructed from the full column history.
/// The returned evaluation is recomputed from the selection; the DP's own
/// column maximum is in `stats.value`.
pub fn dp_solve(instance: &Instance) -> Solution {
    let mut stats = SolveStats::default();
    let mut history = Vec::with_capacity(instance.item_count() + 1);
    history.push(ParetoColumn::root(instance.baseline_benefit()));
    for item in instance.items() {
        let d_in = instance.distance_to_end(item.city);
        let next = extend_column(history.last().unwrap(), item, d_in, instance);
        stats.record(&next);
        history.push(next);
    }
    let last = history.last().unwrap();
    stats.value = last.entries()[last.best().unwrap()].benefit;
    let selection = reconstruct(&history, instance);
    let evaluation = instance
        .benefit(&selection)
        .expect("DP selections respect capacity");
    Solution {
        selection,
        evaluation,
        stats,
    }
}

/// Optimal benefit only; keeps two columns alive instead of the whole history.
pub fn dp_value(instance: &Instance) -> SolveStats {
    let mut stats = SolveStats::default();
    let mut column = ParetoColumn::root(instance.baseline_benefit());
    for item in instance.items() {
        let d_in = instance.distance_to_end(item.city);
        column = extend_column(&column, item, d_in, instance);
        stats.record(&column);
    }
    stats.value = column.entries()[column.best().unwrap()].benefit;
    stats
}
