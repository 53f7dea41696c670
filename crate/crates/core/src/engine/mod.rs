//! The reachability engine: a bottom-up table pass over the decomposition,
//! a top-down occupancy pass, and the decision built from both.

mod decide;
mod freedom;
mod ris;

pub use decide::{decide, decide_with_cotree, tj_decide, Analysis, Decision, Failure, FailureKind};
pub use freedom::{compute_freedom, NodeValues};
pub use ris::{compute_ris_tables, ris_join, ris_union, ris_union_traced, token_counts, RisTable};
