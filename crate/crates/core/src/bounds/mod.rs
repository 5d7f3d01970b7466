//! Class-rank bounds computed from ramification data.

mod d4;
mod profile;
mod rank;

pub use d4::{clm_predicted_moment, d4_bounds, d4_omegas, indicator_omega_r, omega_tally, D4Report};
pub use profile::{Ramification, RamificationProfile, RamifiedPrimeRecord};
pub use rank::{
    e_k, genus_rank_lower_bound, is_type, rz_lower_bound, rz_relative_lower_bound, BoundReport, GenusData,
    GenusRankBound, GenusReport, RZInputs,
};

use thiserror::Error;

use crate::permgroup::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("invalid record for p = {p}: {reason}")]
    InvalidRecord { p: u64, reason: String },
    #[error("inertia classes need a group")]
    MissingGroup,
    #[error("p = {0} has no inertia class")]
    NeedsInertiaClass(u64),
    #[error("rank of the maximal abelian subextension at q = {0} is required")]
    MissingAbelianRank(u64),
    #[error("invalid inputs: {0}")]
    InvalidInputs(String),
    #[error("expected the group {0}")]
    WrongGroup(String),
    #[error("set is not closed under invertible powering and conjugation")]
    NotClosed,
    #[error("fixed-point count must be positive")]
    NonPositive,
    #[error(transparent)]
    Group(#[from] GroupError),
}
