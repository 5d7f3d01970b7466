//! Named groups: `Cm`, `C2xC4`, `Dn@Sn`, `Dn@reg`, `Sn`, `An`, `A4@S6`.

use std::collections::BTreeSet;

use super::{DihedralStructure, GroupError, PermGroup, Permutation};

/// A parsed group together with whatever extra structure the name carries.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub name: String,
    pub group: PermGroup,
    /// H ⋊ F decomposition for dihedral and abelian specs.
    pub dihedral: Option<DihedralStructure>,
    /// Cyclic factors as written, for abelian specs in the regular action.
    pub abelian_factors: Option<Vec<u64>>,
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, GroupError> {
    let name = text.trim();
    let unknown = || GroupError::UnknownSpec(name.to_string());

    if name == "A4@S6" {
        let gens = [
            Permutation::parse_cycles("(3 6)(4 5)", 6)?,
            Permutation::parse_cycles("(1 3 4)(2 6 5)", 6)?,
        ];
        let group = PermGroup::generate(&gens, 6)?;
        return Ok(plain(name, group));
    }

    if let Some((left, right)) = name.split_once('@') {
        let n = parse_index(left.strip_prefix('D').ok_or_else(unknown)?)?;
        return if right == "reg" {
            dihedral_regular(name, n)
        } else if right.strip_prefix('S').map(parse_index) == Some(Ok(n)) {
            dihedral_natural(name, n)
        } else {
            Err(unknown())
        };
    }

    if name.starts_with('C') {
        let factors = name
            .split('x')
            .map(|part| part.strip_prefix('C').ok_or_else(unknown).and_then(parse_index))
            .collect::<Result<Vec<_>, _>>()?;
        return abelian_regular(name, &factors);
    }

    if let Some(rest) = name.strip_prefix('D') {
        return dihedral_natural(name, parse_index(rest)?);
    }
    if let Some(rest) = name.strip_prefix('S') {
        let n = parse_index(rest)?;
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(cycle(n, &(1..=n).collect::<Vec<_>>())?);
            gens.push(cycle(n, &[1, 2])?);
        }
        return Ok(plain(name, PermGroup::generate(&gens, n as usize)?));
    }
    if let Some(rest) = name.strip_prefix('A') {
        let n = parse_index(rest)?;
        if n < 3 {
            return Err(unknown());
        }
        let gens = (3..=n)
            .map(|k| cycle(n, &[1, 2, k]))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(plain(name, PermGroup::generate(&gens, n as usize)?));
    }
    Err(unknown())
}

fn parse_index(s: &str) -> Result<u64, GroupError> {
    match s.parse::<u64>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(GroupError::Parse(format!("expected a positive integer, found `{s}`"))),
    }
}

fn cycle(degree: u64, points: &[u64]) -> Result<Permutation, GroupError> {
    let pts: Vec<usize> = points.iter().map(|&p| p as usize).collect();
    Permutation::from_cycles(degree as usize, &[&pts])
}

fn plain(name: &str, group: PermGroup) -> GroupSpec {
    GroupSpec {
        name: name.to_string(),
        group,
        dihedral: None,
        abelian_factors: None,
    }
}

fn abelian_regular(name: &str, factors: &[u64]) -> Result<GroupSpec, GroupError> {
    let degree: u64 = factors.iter().product();
    if degree as usize > super::DEFAULT_GROUP_CAP {
        return Err(GroupError::CapExceeded {
            cap: super::DEFAULT_GROUP_CAP,
        });
    }
    let degree = degree as usize;
    // point index = mixed-radix digits, first factor least significant
    let mut gens = Vec::new();
    let mut stride = 1usize;
    for &m in factors {
        let m = m as usize;
        let images: Vec<usize> = (0..degree)
            .map(|i| {
                let digit = (i / stride) % m;
                let shifted = i - digit * stride + ((digit + 1) % m) * stride;
                shifted + 1
            })
            .collect();
        gens.push(Permutation::from_images(&images)?);
        stride *= m;
    }
    let group = PermGroup::generate(&gens, degree)?;
    Ok(GroupSpec {
        name: name.to_string(),
        dihedral: Some(DihedralStructure::abelian(group.clone())?),
        group,
        abelian_factors: Some(factors.to_vec()),
    })
}

fn dihedral_natural(name: &str, n: u64) -> Result<GroupSpec, GroupError> {
    if n < 3 {
        return Err(GroupError::UnknownSpec(name.to_string()));
    }
    let deg = n as usize;
    let sigma = cycle(n, &(1..=n).collect::<Vec<_>>())?;
    // τ: i ↦ 2 − i (mod n) on 0-based points, so τ = (1 3) for n = 4
    let tau_images: Vec<usize> = (0..deg).map(|i| (2 + deg - i) % deg + 1).collect();
    let tau = Permutation::from_images(&tau_images)?;
    let group = PermGroup::generate(&[sigma.clone(), tau.clone()], deg)?;
    let h = (0..n as i64).map(|k| sigma.pow(k)).collect();
    let f = BTreeSet::from([Permutation::identity(deg), tau]);
    Ok(GroupSpec {
        name: name.to_string(),
        dihedral: Some(DihedralStructure::new(group.clone(), h, f)?),
        group,
        abelian_factors: None,
    })
}

fn dihedral_regular(name: &str, n: u64) -> Result<GroupSpec, GroupError> {
    if n < 2 {
        return Err(GroupError::UnknownSpec(name.to_string()));
    }
    let n = n as usize;
    // element r^k s^e sits at point k + n·e; generators act by left multiplication
    let rot: Vec<usize> = (0..2 * n)
        .map(|i| {
            let (k, e) = (i % n, i / n);
            (k + 1) % n + n * e + 1
        })
        .collect();
    let refl: Vec<usize> = (0..2 * n)
        .map(|i| {
            let (k, e) = (i % n, i / n);
            (n - k) % n + n * (1 - e) + 1
        })
        .collect();
    let r = Permutation::from_images(&rot)?;
    let s = Permutation::from_images(&refl)?;
    let group = PermGroup::generate(&[r.clone(), s.clone()], 2 * n)?;
    let h = (0..n as i64).map(|k| r.pow(k)).collect();
    let f = BTreeSet::from([Permutation::identity(2 * n), s]);
    Ok(GroupSpec {
        name: name.to_string(),
        dihedral: Some(DihedralStructure::new(group.clone(), h, f)?),
        group,
        abelian_factors: None,
    })
}
