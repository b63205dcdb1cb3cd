//! Seeded generator for benchmark-style instances.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so a spec and a
//! seed always produce the same instance on every platform.
//!
//! Nodes get integer coordinates in `[0, 100]^2` and the route is the closed
//! tour over them in index order (`CEIL_2D` distances). Items go to nodes
//! `2..=N`; node 1 is the depot. Knapsack families, with `span = hi - lo`:
//!
//! * `uncorr`: `w`, `p` uniform on `[lo, hi]`.
//! * `uncorr-s-w`: `w` uniform on `[lo + 0.9 span, hi]`, `p` uniform on `[lo, hi]`.
//! * `b-s-corr`: `w` uniform, `p = min(w + span / 10, hi)`.
//! * `m-s-corr`: `w` uniform, `p = w + c * span / 10` with `c` uniform in `{1, 2, 3}`.
//!
//! Capacity class `c` sets `W = ceil(c * sum(w) / 11)`. Unless given, the
//! renting rate is chosen so that carrying a full knapsack of average profit
//! density over the whole route costs half of that knapsack's profit.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenerateError;
use crate::io::ttp::ceil_distance;
use crate::model::{Instance, ItemSpec, Vehicle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Uncorrelated,
    UncorrelatedSimilarWeights,
    BoundedStronglyCorrelated,
    MultipleStronglyCorrelated,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Uncorrelated,
        Family::UncorrelatedSimilarWeights,
        Family::BoundedStronglyCorrelated,
        Family::MultipleStronglyCorrelated,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Uncorrelated => "uncorr",
            Family::UncorrelatedSimilarWeights => "uncorr-s-w",
            Family::BoundedStronglyCorrelated => "b-s-corr",
            Family::MultipleStronglyCorrelated => "m-s-corr",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uncorr" | "uncorrelated" => Ok(Family::Uncorrelated),
            "uncorr-s-w" | "uncorrelated-similar-weights" => Ok(Family::UncorrelatedSimilarWeights),
            "b-s-corr" | "bounded-strongly-correlated" => Ok(Family::BoundedStronglyCorrelated),
            "m-s-corr" | "multiple-strongly-correlated" => Ok(Family::MultipleStronglyCorrelated),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

/// Closed integer range for profits and weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValueRange {
    pub lo: u64,
    pub hi: u64,
}

impl ValueRange {
    pub const SMALL: ValueRange = ValueRange { lo: 1, hi: 1_000 };
    pub const LARGE: ValueRange = ValueRange {
        lo: 1,
        hi: 10_000_000,
    };

    fn span(self) -> u64 {
        self.hi - self.lo
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Assignment {
    /// Item `i` goes to node `2 + i mod (N - 1)`.
    RoundRobin,
    /// Items sorted by decreasing profit fill nodes `2, 3, ...` in blocks of `per_city`.
    ProfitSorted { per_city: usize },
}

impl FromStr for Assignment {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "round-robin" {
            return Ok(Assignment::RoundRobin);
        }
        s.strip_prefix("sorted:")
            .and_then(|k| k.parse().ok())
            .filter(|&k| k > 0)
            .map(|per_city| Assignment::ProfitSorted { per_city })
            .ok_or_else(|| format!("assignment must be `round-robin` or `sorted:<k>`, got `{s}`"))
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Assignment::RoundRobin => f.write_str("round-robin"),
            Assignment::ProfitSorted { per_city } => write!(f, "sorted:{per_city}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub range: ValueRange,
    pub m: usize,
    /// 1..=10, the `_01`..`_10` suffix.
    pub capacity_class: u32,
    pub assignment: Assignment,
    pub seed: u64,
    /// Number of nodes `N`, depot included.
    pub nodes: usize,
    pub v_min: f64,
    pub v_max: f64,
    pub rent: Option<f64>,
}

impl GeneratorSpec {
    /// 101 nodes, speeds in `[0.1, 1]`, small range, round-robin assignment.
    pub fn new(family: Family, m: usize, capacity_class: u32, seed: u64) -> Self {
        GeneratorSpec {
            family,
            range: ValueRange::SMALL,
            m,
            capacity_class,
            assignment: Assignment::RoundRobin,
            seed,
            nodes: 101,
            v_min: 0.1,
            v_max: 1.0,
            rent: None,
        }
    }

    pub fn name(&self) -> String {
        format!(
            "{}_{:02}-m{}-s{}",
            self.family, self.capacity_class, self.m, self.seed
        )
    }
}

fn draw_item(rng: &mut ChaCha8Rng, family: Family, range: ValueRange) -> (u64, u64) {
    let span = range.span();
    let uniform = |rng: &mut ChaCha8Rng| rng.gen_range(range.lo..=range.hi);
    match family {
        Family::Uncorrelated => {
            let w = uniform(rng);
            (uniform(rng), w)
        }
        Family::UncorrelatedSimilarWeights => {
            let w = rng.gen_range(range.lo + span * 9 / 10..=range.hi);
            (uniform(rng), w)
        }
        Family::BoundedStronglyCorrelated => {
            let w = uniform(rng);
            ((w + span / 10).min(range.hi), w)
        }
        Family::MultipleStronglyCorrelated => {
            let w = uniform(rng);
            let c = rng.gen_range(1..=3u64);
            (w + c * span / 10, w)
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Instance, GenerateError> {
    if spec.nodes < 2 {
        return Err(GenerateError::TooFewCities(spec.nodes));
    }
    if !(1..=10).contains(&spec.capacity_class) {
        return Err(GenerateError::CapacityClass(spec.capacity_class));
    }
    if spec.range.lo == 0 || spec.range.lo > spec.range.hi {
        return Err(GenerateError::Range {
            lo: spec.range.lo,
            hi: spec.range.hi,
        });
    }
    let slots = spec.nodes - 1;
    if let Assignment::ProfitSorted { per_city } = spec.assignment {
        if spec.m > slots * per_city {
            return Err(GenerateError::TooManyItems {
                m: spec.m,
                per_city,
                slots: slots * per_city,
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut coords: Vec<(f64, f64)> = Vec::with_capacity(spec.nodes);
    while coords.len() < spec.nodes {
        let p = (
            rng.gen_range(0..=100u32) as f64,
            rng.gen_range(0..=100u32) as f64,
        );
        let repeats_previous = coords.last() == Some(&p);
        let closes_on_itself = coords.len() + 1 == spec.nodes && coords.first() == Some(&p);
        if !repeats_previous && !closes_on_itself {
            coords.push(p);
        }
    }
    let mut distances: Vec<f64> = coords
        .windows(2)
        .map(|w| ceil_distance(w[0], w[1]))
        .collect();
    distances.push(ceil_distance(coords[spec.nodes - 1], coords[0]));

    let drawn: Vec<(u64, u64)> = (0..spec.m)
        .map(|_| draw_item(&mut rng, spec.family, spec.range))
        .collect();
    let mut node = vec![0usize; spec.m];
    match spec.assignment {
        Assignment::RoundRobin => {
            for (i, n) in node.iter_mut().enumerate() {
                *n = 2 + i % slots;
            }
        }
        Assignment::ProfitSorted { per_city } => {
            let mut order: Vec<usize> = (0..spec.m).collect();
            order.sort_by(|&a, &b| drawn[b].0.cmp(&drawn[a].0));
            for (rank, &i) in order.iter().enumerate() {
                node[i] = 2 + rank / per_city;
            }
        }
    }

    let total_weight: u64 = drawn.iter().map(|&(_, w)| w).sum();
    let total_profit: u64 = drawn.iter().map(|&(p, _)| p).sum();
    let capacity = (spec.capacity_class as u64 * total_weight)
        .div_ceil(11)
        .max(1);
    let rent = spec.rent.unwrap_or_else(|| {
        let route: f64 = distances.iter().sum();
        let density = if total_weight > 0 {
            total_profit as f64 / total_weight as f64
        } else {
            1.0
        };
        let slowdown = 1.0 / spec.v_min - 1.0 / spec.v_max;
        if slowdown > 0.0 {
            0.5 * capacity as f64 * density / (route * slowdown)
        } else {
            1.0
        }
    });

    let items = drawn
        .iter()
        .zip(&node)
        .map(|(&(p, w), &n)| ItemSpec {
            city: n,
            profit: p as f64,
            weight: w,
        })
        .collect();
    Ok(Instance::new(
        spec.name(),
        distances,
        Vehicle {
            v_min: spec.v_min,
            v_max: spec.v_max,
            capacity,
            rent,
        },
        items,
    )?)
}
