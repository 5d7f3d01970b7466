use std::collections::BTreeSet;

use super::{GroupError, PermGroup, Permutation};

/// A decomposition G = H ⋊ F with H, F abelian and every non-identity f ∈ F
/// acting on H by inversion. Abelian G is the case F = {id}.
#[derive(Clone, Debug)]
pub struct DihedralStructure {
    group: PermGroup,
    h: BTreeSet<Permutation>,
    f: BTreeSet<Permutation>,
}

impl DihedralStructure {
    pub fn new(
        group: PermGroup,
        h: BTreeSet<Permutation>,
        f: BTreeSet<Permutation>,
    ) -> Result<Self, GroupError> {
        let bad = |why: &str| Err(GroupError::NotDihedral(why.to_string()));
        if !h.iter().chain(f.iter()).all(|x| group.contains(x)) {
            return Err(GroupError::NotSubset);
        }
        if !is_subgroup(&h) || !is_subgroup(&f) {
            return bad("H and F must be subgroups");
        }
        if !is_abelian_set(&h) || !is_abelian_set(&f) {
            return bad("H and F must be abelian");
        }
        if h.intersection(&f).count() != 1 {
            return bad("H and F must meet trivially");
        }
        if (h.len() * f.len()) as u64 != group.order() {
            return bad("|H|·|F| must equal |G|");
        }
        for g in group.generators() {
            let g_inv = g.inverse();
            if !h.iter().all(|x| h.contains(&g.compose(x).compose(&g_inv))) {
                return bad("H must be normal");
            }
        }
        for fe in f.iter().filter(|x| !x.is_identity()) {
            let f_inv = fe.inverse();
            if !h
                .iter()
                .all(|x| fe.compose(x).compose(&f_inv) == x.inverse())
            {
                return bad("non-identity elements of F must invert H");
            }
        }
        Ok(DihedralStructure { group, h, f })
    }

    /// The F-trivial structure of an abelian group.
    pub fn abelian(group: PermGroup) -> Result<Self, GroupError> {
        if !group.is_abelian() {
            return Err(GroupError::NotAbelian);
        }
        let h = group.elements().iter().cloned().collect();
        let f = BTreeSet::from([group.identity().clone()]);
        Self::new(group, h, f)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn h(&self) -> &BTreeSet<Permutation> {
        &self.h
    }

    pub fn f(&self) -> &BTreeSet<Permutation> {
        &self.f
    }
}

fn is_subgroup(set: &BTreeSet<Permutation>) -> bool {
    !set.is_empty()
        && set
            .iter()
            .all(|a| set.iter().all(|b| set.contains(&a.compose(b))))
}

fn is_abelian_set(set: &BTreeSet<Permutation>) -> bool {
    set.iter()
        .all(|a| set.iter().all(|b| a.compose(b) == b.compose(a)))
}
