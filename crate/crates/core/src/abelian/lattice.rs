use std::collections::{HashSet, VecDeque};

use super::group::{members, AbelianGroupSpec, Subgroup};

/// All subgroups of G with the Möbius values μ(H, G).
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    moebius: Vec<i64>,
}

impl SubgroupLattice {
    pub fn build(g: &AbelianGroupSpec) -> Self {
        let mut seen: HashSet<Subgroup> = HashSet::from([1]);
        let mut queue = VecDeque::from([1 as Subgroup]);
        while let Some(s) = queue.pop_front() {
            for x in g.elements() {
                if s >> x & 1 == 1 {
                    continue;
                }
                let mut gens: Vec<usize> = members(s).collect();
                gens.push(x);
                let t = g.span(&gens);
                if seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        let mut subgroups: Vec<Subgroup> = seen.into_iter().collect();
        // larger subgroups first, so μ can be filled top-down
        subgroups.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));

        let mut moebius = vec![0i64; subgroups.len()];
        for i in 0..subgroups.len() {
            if i == 0 {
                moebius[0] = 1;
                continue;
            }
            let h = subgroups[i];
            let above: i64 = (0..i)
                .filter(|&j| subgroups[j] & h == h && subgroups[j] != h)
                .map(|j| moebius[j])
                .sum();
            moebius[i] = -above;
        }
        let lattice = SubgroupLattice { subgroups, moebius };
        debug_assert!(lattice.check_recursion());
        lattice
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn mu(&self, h: Subgroup) -> Option<i64> {
        self.subgroups
            .iter()
            .position(|&s| s == h)
            .map(|i| self.moebius[i])
    }

    /// `(H, μ(H, G))` for the subgroups with μ ≠ 0.
    pub fn nonzero(&self) -> impl Iterator<Item = (Subgroup, i64)> + '_ {
        self.subgroups
            .iter()
            .zip(&self.moebius)
            .filter(|(_, &m)| m != 0)
            .map(|(&s, &m)| (s, m))
    }

    /// Σ_{H ≤ K ≤ G} μ(K, G) = 0 for every proper H.
    pub fn check_recursion(&self) -> bool {
        self.moebius[0] == 1
            && self.subgroups.iter().skip(1).all(|&h| {
                self.subgroups
                    .iter()
                    .zip(&self.moebius)
                    .filter(|(&k, _)| k & h == h)
                    .map(|(_, &m)| m)
                    .sum::<i64>()
                    == 0
            })
    }

    /// |Aut(G)| as the number of surjective endomorphisms, Σ_H μ(H, G) |Hom(G, H)|.
    pub fn automorphism_count(&self, g: &AbelianGroupSpec) -> u128 {
        let total: i128 = self
            .nonzero()
            .map(|(h, m)| m as i128 * g.hom_count_into(h) as i128)
            .sum();
        total as u128
    }
}
