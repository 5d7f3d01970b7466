//! Non-random primes of permutation groups, class-rank bounds from ramification
//! data, exact abelian field counts by product of ramified primes, and the
//! analytic helpers used to check their growth.

pub mod arith;
pub mod permgroup;
pub mod quadratic;
pub mod abelian;
pub mod dirichlet;
pub mod bounds;
