//! Primes in progressions, Tauberian main terms and fitting of growth exponents.

mod ap;
mod fit;
mod sieve;
mod summatory;
mod tauberian;

pub use ap::{mertens_ap, primes_in_ap, APClass, MertensRow};
pub use fit::{fit_asymptotic, FitReport};
pub use sieve::{segmented_primes, PrimeSieve};
pub use summatory::{summatory_scan, Coefficients, SummatoryRow, SUMMATORY_CAP};
pub use tauberian::{
    delange_ikehara_main_term, predicted_shape, shape_from_singularity, singularity_product,
    AsymptoticShape, Exponent, ShapeKind, ShapeParams, SingularityDescriptor,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DirichletError {
    #[error("residue {n} is not coprime to modulus {m}")]
    BadResidue { m: u64, n: u64 },
    #[error("singularity with alpha = 0 and b = 0 has no main term")]
    UnsupportedSingularity,
    #[error("missing parameter `{0}`")]
    MissingParam(&'static str),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("x = {x} exceeds the cap {cap}")]
    CapExceeded { x: u64, cap: u64 },
    #[error("checkpoints must be strictly ascending")]
    Checkpoints,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
