//! Exact counts of abelian extensions of ℚ ordered by product of ramified primes.

mod budget;
mod count;
mod group;
mod lattice;

pub use budget::{local_budget, tame_local_budget, wild_local_budget, LocalHomBudget};
pub use count::{
    count_fields_exact, count_fields_total, default_cap, ratio_trend, CountRow, FieldCountRecord,
    FieldCounter, InertiaSemantics, MAX_TAME,
};
pub use group::{members, AbelianGroupSpec, Subgroup, DEFAULT_ORDER_CAP};
pub use lattice::SubgroupLattice;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldCountError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("group order {order} exceeds the cap {cap}")]
    OrderTooLarge { order: u64, cap: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} divides |G|; use the wild budget")]
    WildPrime(u64),
    #[error("{0} does not divide |G|; use the tame budget")]
    TamePrime(u64),
    #[error("omega is not closed under invertible powering")]
    NotClosed,
    #[error("x = {x} exceeds the cap {cap}")]
    CapExceeded { x: u64, cap: u64 },
    #[error("no fields below x = {0}")]
    EmptyRange(u64),
    #[error("checkpoints must be strictly ascending")]
    Checkpoints,
}
