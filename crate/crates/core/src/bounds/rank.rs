use serde::Serialize;

use crate::arith::{gcd, invariant_factors, valuation};
use crate::permgroup::PermGroup;

use super::{BoundsError, Ramification, RamificationProfile, RamifiedPrimeRecord};

/// e_K(p): gcd of the ramification indices, or the orbit gcd of the inertia generator.
pub fn e_k(rec: &RamifiedPrimeRecord, group: Option<&PermGroup>) -> Result<u64, BoundsError> {
    match &rec.ramification {
        Ramification::Exponents(es) => Ok(es.iter().fold(0, |g, &e| gcd(g, e))),
        Ramification::InertiaClass(c) => {
            group.ok_or(BoundsError::MissingGroup)?;
            Ok(c.orbit_gcd())
        }
    }
}

/// Whether p is a ramified prime of type q^l, i.e. q^l | e_K(p).
pub fn is_type(rec: &RamifiedPrimeRecord, group: Option<&PermGroup>, q: u64, l: u32) -> Result<bool, BoundsError> {
    Ok(e_k(rec, group)? % q.pow(l) == 0)
}

fn e_values(profile: &RamificationProfile) -> Result<Vec<(u64, u64)>, BoundsError> {
    profile
        .primes()
        .iter()
        .map(|rec| Ok((rec.p, e_k(rec, profile.group())?)))
        .collect()
}

fn type_count(profile: &RamificationProfile, q: u64, l: u32) -> Result<u64, BoundsError> {
    let ql = q.pow(l);
    Ok(e_values(profile)?.iter().filter(|&&(_, e)| e % ql == 0).count() as u64)
}

/// JSON bound report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub q: u64,
    pub l: u32,
    pub type_count: u64,
    pub lower_bound_raw: i64,
    pub lower_bound: i64,
    pub upper_bound: Option<u64>,
}

impl BoundReport {
    fn new(q: u64, l: u32, type_count: u64, subtract: i64, upper_bound: Option<u64>) -> Self {
        let raw = type_count as i64 - subtract;
        BoundReport { q, l, type_count, lower_bound_raw: raw, lower_bound: raw.max(0), upper_bound }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenusRankBound {
    pub l: u32,
    pub bound: i64,
}

/// The abelian part ∏_{p ∤ e_K(p)} ℤ/gcd(p−1, e_K(p)) and the genus rank bounds for one q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusData {
    pub abelian_part: Vec<u64>,
    pub q: u64,
    pub rank_bounds: Vec<GenusRankBound>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub bound: BoundReport,
    pub abelian_rank: u32,
    pub genus: GenusData,
}

fn group_q_rank(group: &PermGroup, q: u64) -> u32 {
    let torsion = group.elements().iter().filter(|g| g.pow(q as i64).is_identity()).count() as u64;
    valuation(torsion, q)
}

/// #{p of type q^l with p ≡ 1 mod q} − rk_q Gal(K₀/ℚ).
pub fn genus_rank_lower_bound(profile: &RamificationProfile, q: u64, l: u32) -> Result<GenusReport, BoundsError> {
    let abelian_rank = match (profile.abelian_rank(q), profile.group()) {
        (Some(r), _) => r,
        (None, Some(g)) if g.is_abelian() => group_q_rank(g, q),
        _ => return Err(BoundsError::MissingAbelianRank(q)),
    };
    let es = e_values(profile)?;
    let count_at = |l: u32| {
        let ql = q.pow(l);
        es.iter().filter(|&&(p, e)| e % ql == 0 && p % q == 1).count() as u64
    };

    let factors: Vec<u64> = es
        .iter()
        .filter(|&&(p, e)| e % p != 0)
        .map(|&(p, e)| gcd(p - 1, e))
        .filter(|&g| g > 1)
        .collect();
    let abelian_part = invariant_factors(&factors);
    let top = es.iter().map(|&(_, e)| valuation(e, q)).max().unwrap_or(0).max(l);
    let rank_bounds = (1..=top)
        .map(|l| GenusRankBound { l, bound: count_at(l) as i64 - abelian_rank as i64 })
        .collect();

    Ok(GenusReport {
        bound: BoundReport::new(q, l, count_at(l), abelian_rank as i64, None),
        abelian_rank,
        genus: GenusData { abelian_part, q, rank_bounds },
    })
}

/// rk_K, v_q(n_q) and δ_K^(q) for the sharp Roquette–Zassenhaus bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RZInputs {
    pub unit_rank: u64,
    pub vq_nq: u64,
    pub delta: u64,
}

impl RZInputs {
    fn validate(&self, n: u64, q: u64) -> Result<(), BoundsError> {
        let bad = |why: &str| Err(BoundsError::InvalidInputs(why.to_string()));
        if self.unit_rank > n - 1 {
            return bad("unit rank exceeds n - 1");
        }
        if self.vq_nq > valuation(n, q) as u64 {
            return bad("v_q(n_q) exceeds v_q(n)");
        }
        if self.delta > 1 {
            return bad("delta must be 0 or 1");
        }
        if self.unit_rank + self.vq_nq + self.delta > 2 * (n - 1) {
            return bad("sum exceeds 2(n - 1)");
        }
        Ok(())
    }
}

/// #{p of type q^l} − (rk_K + v_q(n_q) + δ), or − 2(n−1) without inputs; the count is also an upper bound.
pub fn rz_lower_bound(
    profile: &RamificationProfile,
    q: u64,
    l: u32,
    inputs: Option<&RZInputs>,
) -> Result<BoundReport, BoundsError> {
    let n = profile.degree();
    let subtract = match inputs {
        Some(i) => {
            i.validate(n, q)?;
            (i.unit_rank + i.vq_nq + i.delta) as i64
        }
        None => 2 * (n as i64 - 1),
    };
    let count = type_count(profile, q, l)?;
    Ok(BoundReport::new(q, l, count, subtract, Some(count)))
}

/// #{p of type q^l} − 2(n−1) for the relative class group Cl(K/K′), where q^l ‖ [K:K′] is the caller's claim.
pub fn rz_relative_lower_bound(
    profile: &RamificationProfile,
    q: u64,
    l: u32,
    n: u64,
) -> Result<BoundReport, BoundsError> {
    if n < 1 {
        return Err(BoundsError::InvalidInputs("degree must be positive".into()));
    }
    let count = type_count(profile, q, l)?;
    Ok(BoundReport::new(q, l, count, 2 * (n as i64 - 1), None))
}
