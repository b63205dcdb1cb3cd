//! Instance and selection data model, and exact evaluation of the nonlinear
//! benefit `B(x) = P(x) - R * T(x)`.
//!
//! Items are kept in route order: sorted by city, and within a city by the
//! order in which they were supplied. Every algorithm in this crate indexes
//! items by their position in that order.

use crate::error::ModelError;

/// Default item-count ceiling for [`brute_force`].
pub const BRUTE_FORCE_LIMIT: usize = 25;

/// Vehicle parameters: speed range, knapsack capacity and renting rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vehicle {
    pub v_min: f64,
    pub v_max: f64,
    pub capacity: u64,
    pub rent: f64,
}

/// An item as supplied by a caller, before route ordering.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ItemSpec {
    /// 1-based city index, at most `n`.
    pub city: usize,
    pub profit: f64,
    pub weight: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Item {
    /// Position of the item in the caller's input; stable across reordering.
    pub id: usize,
    pub city: usize,
    pub profit: f64,
    pub weight: u64,
}

/// A complete packing-while-traveling input over the fixed route `1..=n+1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    name: String,
    distances: Vec<f64>,
    items: Vec<Item>,
    vehicle: Vehicle,
    nu: f64,
    suffix: Vec<f64>,
}

impl Instance {
    /// Validates and builds an instance. `distances[i]` is the leg from city
    /// `i + 1` to city `i + 2`.
    pub fn new(
        name: impl Into<String>,
        distances: Vec<f64>,
        vehicle: Vehicle,
        items: Vec<ItemSpec>,
    ) -> Result<Self, ModelError> {
        let Vehicle {
            v_min,
            v_max,
            capacity,
            rent,
        } = vehicle;
        if !(v_min.is_finite() && v_max.is_finite() && v_min > 0.0 && v_min <= v_max) {
            return Err(ModelError::InvalidSpeeds { v_min, v_max });
        }
        if capacity == 0 {
            return Err(ModelError::ZeroCapacity);
        }
        if !(rent.is_finite() && rent > 0.0) {
            return Err(ModelError::InvalidRent(rent));
        }
        if distances.is_empty() {
            return Err(ModelError::NoLegs);
        }
        if let Some((leg, &d)) = distances
            .iter()
            .enumerate()
            .find(|(_, d)| !(d.is_finite() && **d > 0.0))
        {
            return Err(ModelError::InvalidDistance {
                leg: leg + 1,
                value: d,
            });
        }
        let n = distances.len();
        let mut ordered = Vec::with_capacity(items.len());
        for (id, spec) in items.into_iter().enumerate() {
            if spec.city == 0 || spec.city > n {
                return Err(ModelError::ItemCity {
                    item: id + 1,
                    city: spec.city,
                    n,
                });
            }
            if !(spec.profit.is_finite() && spec.profit > 0.0) {
                return Err(ModelError::ItemProfit {
                    item: id + 1,
                    value: spec.profit,
                });
            }
            if spec.weight == 0 {
                return Err(ModelError::ItemWeight { item: id + 1 });
            }
            ordered.push(Item {
                id,
                city: spec.city,
                profit: spec.profit,
                weight: spec.weight,
            });
        }
        // stable: ties keep input order within a city
        ordered.sort_by_key(|item| item.city);

        let mut suffix = vec![0.0; n];
        let mut acc = 0.0;
        for i in (0..n).rev() {
            acc += distances[i];
            suffix[i] = acc;
        }

        Ok(Instance {
            name: name.into(),
            distances,
            items: ordered,
            vehicle,
            nu: (v_max - v_min) / capacity as f64,
            suffix,
        })
    }

    /// Same instance with a different capacity (re-validated).
    pub fn with_capacity(&self, capacity: u64) -> Result<Self, ModelError> {
        Instance::new(
            self.name.clone(),
            self.distances.clone(),
            Vehicle {
                capacity,
                ..self.vehicle
            },
            self.item_specs_in_input_order(),
        )
    }

    /// Items in their original input order, as they would be passed to [`Instance::new`].
    pub fn item_specs_in_input_order(&self) -> Vec<ItemSpec> {
        let mut by_id: Vec<&Item> = self.items.iter().collect();
        by_id.sort_by_key(|item| item.id);
        by_id
            .into_iter()
            .map(|item| ItemSpec {
                city: item.city,
                profit: item.profit,
                weight: item.weight,
            })
            .collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    /// Number of non-terminal cities `n`.
    pub fn cities(&self) -> usize {
        self.distances.len()
    }

    pub fn distances(&self) -> &[f64] {
        &self.distances
    }

    /// Items in route order.
    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn item_count(&self) -> usize {
        self.items.len()
    }

    pub fn vehicle(&self) -> Vehicle {
        self.vehicle
    }

    pub fn capacity(&self) -> u64 {
        self.vehicle.capacity
    }

    pub fn rent(&self) -> f64 {
        self.vehicle.rent
    }

    /// Speed loss per unit of carried weight, `(v_max - v_min) / W`.
    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Whether an item can be packed at all (`w <= W`).
    pub fn is_selectable(&self, item: &Item) -> bool {
        item.weight <= self.vehicle.capacity
    }

    /// `result[i]` is the distance from city `i + 1` to the final city.
    pub fn suffix_distances(&self) -> Vec<f64> {
        self.suffix.clone()
    }

    /// Remaining distance from `city` (1-based) to the end of the route.
    pub fn distance_to_end(&self, city: usize) -> f64 {
        self.suffix[city - 1]
    }

    /// Travel time per unit distance when carrying `weight`, `1 / (v_max - nu * w)`.
    pub fn unit_travel_time(&self, weight: u64) -> Result<f64, ModelError> {
        if weight > self.vehicle.capacity {
            return Err(ModelError::WeightOutOfRange {
                weight,
                capacity: self.vehicle.capacity,
            });
        }
        Ok(self.unit_time(weight))
    }

    /// Unchecked `t(w)`; callers guarantee `w <= W`.
    #[inline]
    pub(crate) fn unit_time(&self, weight: u64) -> f64 {
        1.0 / (self.vehicle.v_max - self.nu * weight as f64)
    }

    /// Benefit change from adding weight `added` at a city with remaining
    /// distance `d_in`, when `carried` is already on board: `p - R*d_in*(t(k+w) - t(k))`.
    #[inline]
    pub(crate) fn take_delta(&self, profit: f64, d_in: f64, carried: u64, added: u64) -> f64 {
        profit
            - self.vehicle.rent * d_in * (self.unit_time(carried + added) - self.unit_time(carried))
    }

    /// Benefit of the empty selection, `-R * sum(d_i) / v_max`.
    pub fn baseline_benefit(&self) -> f64 {
        let t0 = self.unit_time(0);
        let time: f64 = self.distances.iter().map(|d| d * t0).sum();
        -self.vehicle.rent * time
    }

    /// Profit, travel time and total weight of the items picked by `selected`
    /// (route-order positions). Callers check capacity first.
    fn accumulate(&self, selected: impl Fn(usize) -> bool) -> (f64, f64, u64) {
        let mut profit = 0.0;
        let mut time = 0.0;
        let mut weight = 0u64;
        let mut next = 0;
        for (leg, d) in self.distances.iter().enumerate() {
            let city = leg + 1;
            while next < self.items.len() && self.items[next].city == city {
                if selected(next) {
                    profit += self.items[next].profit;
                    weight += self.items[next].weight;
                }
                next += 1;
            }
            time += d * self.unit_time(weight);
        }
        (profit, time, weight)
    }

    fn check_selection(&self, selection: &Selection) -> Result<(), ModelError> {
        if selection.len() != self.items.len() {
            return Err(ModelError::SelectionLength {
                expected: self.items.len(),
                found: selection.len(),
            });
        }
        if selection.total_weight() > self.vehicle.capacity {
            return Err(ModelError::Infeasible {
                weight: selection.total_weight(),
                capacity: self.vehicle.capacity,
            });
        }
        Ok(())
    }

    /// Total travel time `T(x)`.
    pub fn travel_time(&self, selection: &Selection) -> Result<f64, ModelError> {
        self.check_selection(selection)?;
        Ok(self.accumulate(|i| selection.bits[i]).1)
    }

    /// Evaluates `P`, `T`, `B` and the gain over the empty route for a selection.
    pub fn benefit(&self, selection: &Selection) -> Result<Evaluation, ModelError> {
        self.check_selection(selection)?;
        let (profit, time, _) = self.accumulate(|i| selection.bits[i]);
        Ok(self.evaluation(profit, time))
    }

    fn evaluation(&self, profit: f64, time: f64) -> Evaluation {
        let benefit = profit - self.vehicle.rent * time;
        Evaluation {
            profit,
            time,
            benefit,
            gain: benefit - self.baseline_benefit(),
        }
    }
}

/// Decision vector over the items of one instance, in route order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Selection {
    bits: Vec<bool>,
    total_weight: u64,
}

impl Selection {
    pub fn empty(instance: &Instance) -> Self {
        Selection {
            bits: vec![false; instance.item_count()],
            total_weight: 0,
        }
    }

    pub fn from_bits(instance: &Instance, bits: Vec<bool>) -> Result<Self, ModelError> {
        if bits.len() != instance.item_count() {
            return Err(ModelError::SelectionLength {
                expected: instance.item_count(),
                found: bits.len(),
            });
        }
        let total_weight = bits
            .iter()
            .zip(instance.items())
            .filter(|(b, _)| **b)
            .map(|(_, item)| item.weight)
            .sum();
        Ok(Selection { bits, total_weight })
    }

    /// Selects the given route-order positions.
    pub fn from_positions(instance: &Instance, positions: &[usize]) -> Result<Self, ModelError> {
        let mut selection = Selection::empty(instance);
        for &pos in positions {
            selection.select(instance, pos)?;
        }
        Ok(selection)
    }

    pub fn select(&mut self, instance: &Instance, position: usize) -> Result<(), ModelError> {
        let item = instance
            .items()
            .get(position)
            .ok_or(ModelError::SelectionLength {
                expected: instance.item_count(),
                found: position + 1,
            })?;
        if !self.bits[position] {
            self.bits[position] = true;
            self.total_weight += item.weight;
        }
        Ok(())
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_selected(&self, position: usize) -> bool {
        self.bits[position]
    }

    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    pub fn is_feasible(&self, instance: &Instance) -> bool {
        self.total_weight <= instance.capacity()
    }

    /// Route-order positions of the selected items.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, b)| **b)
            .map(|(i, _)| i)
    }

    /// Original input ids of the selected items, ascending.
    pub fn item_ids(&self, instance: &Instance) -> Vec<usize> {
        let mut ids: Vec<usize> = self.positions().map(|p| instance.items()[p].id).collect();
        ids.sort_unstable();
        ids
    }
}

/// Objective components for one selection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    /// Total profit `P(x)`.
    pub profit: f64,
    /// Total travel time `T(x)`.
    pub time: f64,
    /// `B(x) = P(x) - R * T(x)`.
    pub benefit: f64,
    /// `B(x) - B(empty)`.
    pub gain: f64,
}

/// Exhaustive search with the default item limit.
pub fn brute_force(instance: &Instance) -> Result<(Selection, Evaluation), ModelError> {
    brute_force_with_limit(instance, BRUTE_FORCE_LIMIT)
}

/// Enumerates every decision vector and returns the best feasible one.
/// Ties go to the lexicographically smallest vector (first item most significant).
pub fn brute_force_with_limit(
    instance: &Instance,
    limit: usize,
) -> Result<(Selection, Evaluation), ModelError> {
    let m = instance.item_count();
    if m > limit || m >= 64 {
        return Err(ModelError::TooManyItems { m, limit });
    }
    let capacity = instance.capacity();
    let weights: Vec<u64> = instance.items().iter().map(|it| it.weight).collect();
    let bit = |mask: u64, i: usize| (mask >> (m - 1 - i)) & 1 == 1;

    let mut best_mask = 0u64;
    let (p0, t0, _) = instance.accumulate(|_| false);
    let mut best = instance.evaluation(p0, t0).benefit;
    for mask in 1u64..(1u64 << m) {
        let weight: u64 = (0..m).filter(|&i| bit(mask, i)).map(|i| weights[i]).sum();
        if weight > capacity {
            continue;
        }
        let (profit, time, _) = instance.accumulate(|i| bit(mask, i));
        let value = instance.evaluation(profit, time).benefit;
        if value > best {
            best = value;
            best_mask = mask;
        }
    }
    let bits = (0..m).map(|i| bit(best_mask, i)).collect();
    let selection = Selection::from_bits(instance, bits)?;
    let evaluation = instance.benefit(&selection)?;
    Ok((selection, evaluation))
}
