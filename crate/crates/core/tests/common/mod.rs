//! Brute-force oracles shared by the integration targets; no library code beyond arithmetic helpers.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use nonrandom::arith::{factorize, is_squarefree};

/// Plain tuple arithmetic in Z/d1 × ... × Z/dk, no shared code with the library.
#[derive(Clone)]
pub struct Tuples {
    pub mods: Vec<u64>,
}

pub type Elt = Vec<u64>;

impl Tuples {
    pub fn all(&self) -> Vec<Elt> {
        let mut out = vec![vec![]];
        for &m in &self.mods {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..m).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    pub fn zero(&self) -> Elt {
        vec![0; self.mods.len()]
    }

    pub fn add(&self, a: &Elt, b: &Elt) -> Elt {
        a.iter().zip(b).zip(&self.mods).map(|((x, y), m)| (x + y) % m).collect()
    }

    pub fn scale(&self, k: u64, a: &Elt) -> Elt {
        a.iter().zip(&self.mods).map(|(x, m)| (x * (k % m)) % m).collect()
    }

    pub fn order(&self, a: &Elt) -> u64 {
        let mut k = 1;
        while self.scale(k, a) != self.zero() {
            k += 1;
        }
        k
    }

    pub fn span(&self, gens: &[Elt]) -> HashSet<Elt> {
        let mut seen = HashSet::from([self.zero()]);
        let mut queue = VecDeque::from([self.zero()]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = self.add(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn order_total(&self) -> usize {
        self.mods.iter().product::<u64>() as usize
    }

    /// Local maps Z_p^* → G listed by the images of topological generators.
    pub fn local_maps(&self, p: u64) -> Vec<Vec<Elt>> {
        let all = self.all();
        let n = self.order_total() as u64;
        if n % p != 0 {
            all.iter()
                .filter(|a| (p - 1) % self.order(a) == 0)
                .map(|a| vec![a.clone()])
                .collect()
        } else {
            let root_order = if p == 2 { 2 } else { p - 1 };
            let mut out = Vec::new();
            for a in all.iter().filter(|a| root_order % self.order(a) == 0) {
                for b in all.iter().filter(|b| {
                    let o = self.order(b);
                    factorize(o).iter().all(|&(q, _)| q == p)
                }) {
                    out.push(vec![a.clone(), b.clone()]);
                }
            }
            out
        }
    }
}

/// Surjective tuples of local maps with ramified set exactly the primes of n, summed over n < x.
pub fn brute_force_total(mods: &[u64], x: u64) -> u128 {
    brute_force_by_n(mods, x).iter().sum()
}

/// Entry n holds the number of surjective tuples whose ramified set is exactly the primes of n.
pub fn brute_force_by_n(mods: &[u64], x: u64) -> Vec<u128> {
    let t = Tuples { mods: mods.to_vec() };
    let order = t.order_total();
    let mut maps_at: HashMap<u64, Vec<Vec<Elt>>> = HashMap::new();
    let mut by_n = vec![0u128; x.max(1) as usize];
    for n in 2..x {
        if !is_squarefree(n) {
            continue;
        }
        let primes: Vec<u64> = factorize(n).into_iter().map(|(p, _)| p).collect();
        let lists: Vec<Vec<Vec<Elt>>> = primes
            .iter()
            .map(|&p| {
                maps_at
                    .entry(p)
                    .or_insert_with(|| t.local_maps(p))
                    .iter()
                    .filter(|m| m.iter().any(|e| *e != t.zero()))
                    .cloned()
                    .collect()
            })
            .collect();
        if lists.iter().any(Vec::is_empty) {
            continue;
        }
        // odometer over the product of nontrivial local maps
        let mut idx = vec![0usize; lists.len()];
        'tuples: loop {
            let gens: Vec<Elt> = idx
                .iter()
                .zip(&lists)
                .flat_map(|(&i, l)| l[i].iter().cloned())
                .collect();
            if t.span(&gens).len() == order {
                by_n[n as usize] += 1;
            }
            let mut k = 0;
            loop {
                if k == idx.len() {
                    break 'tuples;
                }
                idx[k] += 1;
                if idx[k] < lists[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
    by_n
}

