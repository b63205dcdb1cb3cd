use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("speeds must satisfy 0 < v_min <= v_max (got v_min={v_min}, v_max={v_max})")]
    InvalidSpeeds { v_min: f64, v_max: f64 },
    #[error("capacity must be at least 1")]
    ZeroCapacity,
    #[error("renting rate must be positive (got {0})")]
    InvalidRent(f64),
    #[error("route needs at least one leg")]
    NoLegs,
    #[error("distance of leg {leg} must be positive (got {value})")]
    InvalidDistance { leg: usize, value: f64 },
    #[error("item {item} is assigned to city {city}, outside 1..={n}")]
    ItemCity { item: usize, city: usize, n: usize },
    #[error("item {item} has non-positive profit {value}")]
    ItemProfit { item: usize, value: f64 },
    #[error("item {item} has zero weight")]
    ItemWeight { item: usize },
    #[error("selection weighs {weight}, capacity is {capacity}")]
    Infeasible { weight: u64, capacity: u64 },
    #[error("weight {weight} outside 0..={capacity}")]
    WeightOutOfRange { weight: u64, capacity: u64 },
    #[error("selection has {found} entries, instance has {expected} items")]
    SelectionLength { expected: usize, found: usize },
    #[error("brute force limited to {limit} items, instance has {m}; use the dp solver")]
    TooManyItems { m: usize, limit: usize },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FptasError {
    #[error("eps must be in (0,1] (got {0})")]
    Epsilon(f64),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HardnessError {
    #[error("subset-sum instance needs at least one value")]
    NoValues,
    #[error("subset-sum values and target must be positive integers")]
    NonPositive,
    #[error("target {target} exceeds the sum of all values {total}")]
    TargetTooLarge { target: u64, total: u64 },
    #[error("w = {w} outside [0, {capacity}]")]
    OutOfDomain { w: f64, capacity: f64 },
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing header key `{0}`")]
    MissingKey(&'static str),
    #[error("{0}")]
    Format(String),
    #[error("invalid instance: {0}")]
    Model(#[from] ModelError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenerateError {
    #[error("profit-sorted assignment with {per_city} items per city fits {slots} items, got {m}")]
    TooManyItems {
        m: usize,
        per_city: usize,
        slots: usize,
    },
    #[error("generator needs at least two cities, got {0}")]
    TooFewCities(usize),
    #[error("capacity class must be in 1..=10, got {0}")]
    CapacityClass(u32),
    #[error("value range [{lo}, {hi}] is empty or starts at zero")]
    Range { lo: u64, hi: u64 },
    #[error(transparent)]
    Model(#[from] ModelError),
}
