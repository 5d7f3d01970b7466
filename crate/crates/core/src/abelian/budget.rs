use std::collections::BTreeMap;

use crate::arith::{gcd, is_prime};

use super::group::{members, AbelianGroupSpec, Subgroup};
use super::FieldCountError;

/// Continuous homomorphisms `Z_p^* → G`, tallied by image.
///
/// Tame primes see only the roots of unity, so a local map is an element of
/// `G[p-1]` and its image is cyclic. At a wild odd prime the unit group is
/// `Z/(p-1) × Z_p`, and at 2 it is `Z/2 × Z_2`; the `Z_p` factor can land on
/// any element of `p`-power order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalHomBudget {
    pub p: u64,
    pub wild: bool,
    per_image: BTreeMap<Subgroup, u64>,
}

impl LocalHomBudget {
    pub(crate) fn from_parts(p: u64, wild: bool, per_image: BTreeMap<Subgroup, u64>) -> Self {
        LocalHomBudget { p, wild, per_image }
    }

    /// Nontrivial maps keyed by their exact image.
    pub fn per_image(&self) -> &BTreeMap<Subgroup, u64> {
        &self.per_image
    }

    pub fn total_nontrivial(&self) -> u64 {
        self.per_image.values().sum()
    }

    /// All maps, the trivial one included.
    pub fn total(&self) -> u64 {
        self.total_nontrivial() + 1
    }

    /// Nontrivial maps whose image lies in `h`.
    pub fn nontrivial_into(&self, h: Subgroup) -> u64 {
        self.per_image
            .iter()
            .filter(|(&c, _)| c & h == c)
            .map(|(_, &n)| n)
            .sum()
    }
}

pub fn tame_local_budget(p: u64, g: &AbelianGroupSpec) -> Result<LocalHomBudget, FieldCountError> {
    if !is_prime(p) {
        return Err(FieldCountError::NotPrime(p));
    }
    if g.order() % p == 0 {
        return Err(FieldCountError::WildPrime(p));
    }
    let mut per_image = BTreeMap::new();
    for h in members(g.torsion(gcd(p - 1, g.exponent()))).filter(|&h| h != 0) {
        *per_image.entry(g.span(&[h])).or_insert(0) += 1;
    }
    Ok(LocalHomBudget { p, wild: false, per_image })
}

pub fn wild_local_budget(p: u64, g: &AbelianGroupSpec) -> Result<LocalHomBudget, FieldCountError> {
    if !is_prime(p) {
        return Err(FieldCountError::NotPrime(p));
    }
    if g.order() % p != 0 {
        return Err(FieldCountError::TamePrime(p));
    }
    let torsion_order = if p == 2 { 2 } else { p - 1 };
    let tors: Vec<usize> = members(g.torsion(torsion_order)).collect();
    let pro_p: Vec<usize> = members(g.primary_part(p)).collect();
    let mut per_image = BTreeMap::new();
    for &a in &tors {
        for &b in &pro_p {
            if a == 0 && b == 0 {
                continue;
            }
            *per_image.entry(g.span(&[a, b])).or_insert(0) += 1;
        }
    }
    Ok(LocalHomBudget { p, wild: true, per_image })
}

/// Tame or wild budget according to whether `p` divides |G|.
pub fn local_budget(p: u64, g: &AbelianGroupSpec) -> Result<LocalHomBudget, FieldCountError> {
    if g.order() % p == 0 {
        wild_local_budget(p, g)
    } else {
        tame_local_budget(p, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> AbelianGroupSpec {
        name.parse().unwrap()
    }

    #[test]
    fn tame_examples() {
        let c2 = g("C2");
        let b = tame_local_budget(5, &c2).unwrap();
        assert_eq!(b.total_nontrivial(), 1);
        assert_eq!(b.per_image().get(&c2.full()), Some(&1));
        let c3 = g("C3");
        assert_eq!(tame_local_budget(7, &c3).unwrap().total_nontrivial(), 2);
        assert_eq!(tame_local_budget(5, &c3).unwrap().total_nontrivial(), 0);
        assert_eq!(tame_local_budget(3, &c3), Err(FieldCountError::WildPrime(3)));
        assert_eq!(tame_local_budget(9, &c3), Err(FieldCountError::NotPrime(9)));
    }

    #[test]
    fn tame_total_is_product_of_gcds() {
        for name in ["C2", "C4", "C2xC2", "C2xC4", "C3xC3", "C12", "C2xC6"] {
            let grp = g(name);
            for p in [5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 73, 97] {
                if grp.order() % p == 0 {
                    continue;
                }
                let b = tame_local_budget(p, &grp).unwrap();
                let expect: u64 = grp.invariant_factors().iter().map(|&d| gcd(d, p - 1)).product();
                assert_eq!(b.total(), expect, "{name} p={p}");
            }
        }
    }

    #[test]
    fn wild_examples() {
        let c2 = g("C2");
        let b = wild_local_budget(2, &c2).unwrap();
        assert_eq!((b.total(), b.total_nontrivial()), (4, 3));
        let c3 = g("C3");
        let b = wild_local_budget(3, &c3).unwrap();
        assert_eq!((b.total(), b.total_nontrivial()), (3, 2));
        assert_eq!(wild_local_budget(2, &c3), Err(FieldCountError::TamePrime(2)));
        // image at 2 can be all of C2 x C2
        let v4 = g("C2xC2");
        let b = wild_local_budget(2, &v4).unwrap();
        assert_eq!(b.total(), 16);
        assert_eq!(b.per_image().get(&v4.full()), Some(&6));
    }
}
