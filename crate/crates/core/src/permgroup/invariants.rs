use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;

use crate::arith::{gcd, is_prime, phi, prime_divisors, valuation};

use super::{DihedralStructure, GroupError, PermGroup, Permutation};

pub type OmegaSet = BTreeSet<Permutation>;

/// Exponent selector for Ω(G, q^l).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Exact(u32),
    Infinite,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Exact(l) => write!(f, "{l}"),
            Level::Infinite => write!(f, "inf"),
        }
    }
}

/// Elements σ with q^l exactly dividing e(σ), or with q | e(σ) for `Level::Infinite`.
pub fn omega_set(group: &PermGroup, q: u64, level: Level) -> Result<OmegaSet, GroupError> {
    if !is_prime(q) {
        return Err(GroupError::NotPrime(q));
    }
    let set: OmegaSet = group
        .elements()
        .iter()
        .filter(|g| {
            let v = valuation(g.orbit_gcd(), q);
            match level {
                Level::Exact(l) => l >= 1 && v == l,
                Level::Infinite => v >= 1,
            }
        })
        .cloned()
        .collect();
    debug_assert!(closed_under_invertible_powering(group, &set).unwrap_or(false));
    debug_assert!(closed_under_conjugation(group, &set).unwrap_or(false));
    Ok(set)
}

/// Primes q dividing e(σ) for some σ in the group.
pub fn non_random_primes(group: &PermGroup) -> BTreeSet<u64> {
    group
        .elements()
        .iter()
        .map(Permutation::orbit_gcd)
        .filter(|&e| e > 1)
        .flat_map(prime_divisors)
        .collect()
}

fn check_subset(group: &PermGroup, set: &OmegaSet) -> Result<(), GroupError> {
    if set.iter().all(|g| group.contains(g)) {
        Ok(())
    } else {
        Err(GroupError::NotSubset)
    }
}

pub fn closed_under_invertible_powering(
    group: &PermGroup,
    set: &OmegaSet,
) -> Result<bool, GroupError> {
    check_subset(group, set)?;
    Ok(set.iter().all(|g| {
        let order = group.element_order(g);
        (1..order)
            .filter(|&a| gcd(a, order) == 1)
            .all(|a| set.contains(&g.pow(a as i64)))
    }))
}

pub fn closed_under_conjugation(group: &PermGroup, set: &OmegaSet) -> Result<bool, GroupError> {
    check_subset(group, set)?;
    Ok(set.iter().all(|g| {
        group
            .generators()
            .iter()
            .all(|s| set.contains(&s.compose(g).compose(&s.inverse())))
    }))
}

/// β(Ω) = Σ_{id ≠ h ∈ Ω} 1/φ(γ_h) for abelian G.
pub fn beta(group: &PermGroup, set: &OmegaSet) -> Result<u64, GroupError> {
    if !group.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    if !closed_under_invertible_powering(group, set)? {
        return Err(GroupError::NotClosed);
    }
    weighted_sum(set.iter().map(|h| (1, group.element_order(h))))
}

/// β(F, Ω) = Σ_{id ≠ h ∈ Ω} c(h)/φ(γ_h), with c(h) the size of the conjugacy class in G.
pub fn beta_f(d: &DihedralStructure, set: &OmegaSet) -> Result<u64, GroupError> {
    let group = d.group();
    if !set.iter().all(|h| d.h().contains(h)) {
        return Err(GroupError::NotInH);
    }
    if !closed_under_invertible_powering(group, set)? || !closed_under_conjugation(group, set)? {
        return Err(GroupError::NotClosed);
    }
    weighted_sum(
        set.iter()
            .map(|h| (group.class_size(h), group.element_order(h))),
    )
}

fn weighted_sum(terms: impl Iterator<Item = (u64, u64)>) -> Result<u64, GroupError> {
    let total = terms
        .filter(|&(_, order)| order > 1)
        .fold(Ratio::<u64>::from_integer(0), |acc, (c, order)| {
            acc + Ratio::new(c, phi(order))
        });
    if total.is_integer() {
        Ok(total.to_integer())
    } else {
        Err(GroupError::NotClosed)
    }
}

/// Number of non-identity h ∈ S with p ≡ ±1 mod γ_h (only +1 when F is trivial).
pub fn h_p(d: &DihedralStructure, p: u64, set: &OmegaSet) -> u64 {
    let group = d.group();
    let both_signs = d.f().len() > 1;
    set.iter()
        .filter(|h| group.contains(h) && !h.is_identity())
        .filter(|h| {
            let m = group.element_order(h);
            let r = p % m;
            r == 1 % m || (both_signs && r == m - 1)
        })
        .count() as u64
}
