//! Solving on set variables with counted primitive operations.

mod partition;
mod solver;
mod store;

pub use partition::SuccinctPartitionStack;
pub use solver::{
    per_call_op_budget, per_frame_budget, succinct_budget, sym_attract, sym_universal_solve,
    PER_FRAME_OFFSET, SUCCINCT_OFFSET,
};
pub use store::{Layout, SetVar, SymbolicCounters, SymbolicStore};
