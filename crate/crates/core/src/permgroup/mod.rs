//! Transitive permutation groups and the orbit invariants attached to them.

mod dihedral;
mod group;
mod invariants;
mod permutation;
mod spec;

pub use dihedral::DihedralStructure;
pub use group::{PermGroup, DEFAULT_GROUP_CAP};
pub use invariants::{
    beta, beta_f, closed_under_conjugation, closed_under_invertible_powering, h_p,
    non_random_primes, omega_set, Level, OmegaSet,
};
pub use permutation::Permutation;
pub use spec::{parse_group_spec, GroupSpec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("point {point} outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown group spec `{0}`")]
    UnknownSpec(String),
    #[error("group does not act transitively on {degree} points")]
    NonTransitive { degree: usize },
    #[error("group closure exceeds {cap} elements")]
    CapExceeded { cap: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("set is not contained in the group")]
    NotSubset,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("set is not closed under invertible powering and conjugation")]
    NotClosed,
    #[error("set is not contained in the abelian normal subgroup H")]
    NotInH,
    #[error("not a dihedral decomposition: {0}")]
    NotDihedral(String),
}
