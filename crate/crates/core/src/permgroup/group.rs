use std::collections::{HashMap, HashSet, VecDeque};

use super::{GroupError, Permutation};

pub const DEFAULT_GROUP_CAP: usize = 10_000;

/// A finite transitive permutation group with element orders and conjugacy classes
/// precomputed.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    orders: Vec<u64>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl PermGroup {
    pub fn generate(generators: &[Permutation], degree: usize) -> Result<Self, GroupError> {
        Self::generate_with_cap(generators, degree, DEFAULT_GROUP_CAP)
    }

    pub fn generate_with_cap(
        generators: &[Permutation],
        degree: usize,
        cap: usize,
    ) -> Result<Self, GroupError> {
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        if !is_transitive(generators, degree) {
            return Err(GroupError::NonTransitive { degree });
        }

        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        let mut elements = Vec::new();
        while let Some(x) = queue.pop_front() {
            for s in generators {
                let y = x.compose(s);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
            elements.push(x);
        }
        elements.sort();

        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        let orders = elements.iter().map(Permutation::order).collect();

        let mut class_of = vec![usize::MAX; elements.len()];
        let mut classes = Vec::new();
        for start in 0..elements.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut members = vec![start];
            class_of[start] = cid;
            let mut frontier = vec![start];
            while let Some(i) = frontier.pop() {
                for s in generators {
                    let c = s.compose(&elements[i]).compose(&s.inverse());
                    let j = index[&c];
                    if class_of[j] == usize::MAX {
                        class_of[j] = cid;
                        members.push(j);
                        frontier.push(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }

        Ok(PermGroup {
            degree,
            generators: generators.to_vec(),
            elements,
            index,
            orders,
            class_of,
            classes,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Elements in ascending image order; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// γ_g, the order of `g`. Panics if `g` is not in the group.
    pub fn element_order(&self, g: &Permutation) -> u64 {
        self.orders[self.index[g]]
    }

    pub fn class_id(&self, g: &Permutation) -> usize {
        self.class_of[self.index[g]]
    }

    pub fn class_size(&self, g: &Permutation) -> u64 {
        self.classes[self.class_id(g)].len() as u64
    }

    pub fn conjugacy_classes(&self) -> impl Iterator<Item = Vec<&Permutation>> + '_ {
        self.classes
            .iter()
            .map(|c| c.iter().map(|&i| &self.elements[i]).collect())
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Exponent of the group, the lcm of the element orders.
    pub fn exponent(&self) -> u64 {
        self.orders
            .iter()
            .fold(1, |acc, &o| crate::arith::lcm(acc, o))
    }
}

fn is_transitive(generators: &[Permutation], degree: usize) -> bool {
    if degree == 0 {
        return false;
    }
    let mut seen = vec![false; degree];
    seen[0] = true;
    let mut stack = vec![0usize];
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for g in generators {
            let j = g.apply(i);
            if !seen[j] {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == degree
}
