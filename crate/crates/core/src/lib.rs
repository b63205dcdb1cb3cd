//! Solvers for packing while traveling: choose items along a fixed route to
//! maximise total profit minus a renting rate times travel time, where the
//! vehicle slows down linearly with the weight it carries.
//!
//! * [`dp`]: exact pseudo-polynomial DP with Pareto pruning.
//! * [`fptas`]: approximation scheme for the gain over the empty-route cost.
//! * [`hardness`]: subset-sum reductions showing that deciding `B(x) >= 0` is
//!   NP-hard, which is why no ratio guarantee is possible for `B` itself.
//! * [`io`]: benchmark and native file formats, seeded instance generator.

pub mod dp;
pub mod error;
pub mod fptas;
pub mod hardness;
pub mod io;
pub mod model;
pub mod solution;

#[cfg(test)]
mod testutil;

pub use dp::{dp_solve, dp_value, extend_column, prune_dominated, ParetoColumn, ParetoEntry};
pub use error::{FptasError, GenerateError, HardnessError, ModelError, ParseError};
pub use fptas::{compute_scale, fptas_solve, fptas_solve_with, FptasConfig, NegativeStates};
pub use model::{
    brute_force, brute_force_with_limit, Evaluation, Instance, Item, ItemSpec, Selection, Vehicle,
};
pub use solution::{Solution, SolveStats};
