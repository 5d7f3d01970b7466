use nonrandom::arith::{is_prime, prime_divisors, valuation};
use nonrandom::permgroup::{
    beta, beta_f, non_random_primes, omega_set, parse_group_spec, GroupSpec, Level, OmegaSet,
};
use serde::Serialize;

use crate::args::GroupArgs;
use crate::error::{usage, Result};
use crate::output::Sink;

#[derive(Serialize)]
struct GroupReport {
    spec: String,
    order: u64,
    degree: usize,
    abelian: bool,
    non_random_primes: Vec<u64>,
    /// β(G) = β(G∖{id}) for abelian G.
    beta: Option<u64>,
    /// β(F) = β(F, H∖{id}) when G = H ⋊ F is dihedral.
    beta_f: Option<u64>,
    omega: Vec<OmegaReport>,
}

#[derive(Serialize)]
struct OmegaReport {
    q: u64,
    level: String,
    size: usize,
    elements: Vec<String>,
    beta: Option<u64>,
    beta_complement: Option<u64>,
    beta_f: Option<u64>,
    beta_f_complement: Option<u64>,
}

/// Parses `none`, `q`, `q^l` or `q^inf`.
pub fn parse_omega(text: &str) -> Result<Option<(u64, Level)>> {
    let text = text.trim();
    if text == "none" {
        return Ok(None);
    }
    let (q, level) = match text.split_once('^') {
        None => (text, Level::Infinite),
        Some((q, "inf")) => (q, Level::Infinite),
        Some((q, l)) => match l.parse::<u32>() {
            Ok(l) if l >= 1 => (q, Level::Exact(l)),
            _ => return usage(format!("bad omega level in `{text}`")),
        },
    };
    match q.parse::<u64>() {
        Ok(q) if is_prime(q) => Ok(Some((q, level))),
        _ => usage(format!("omega `{text}`: expected none, q, q^l or q^inf with q prime")),
    }
}

/// Elements of H outside `set`, if `set` lies inside H.
pub fn h_complement(spec: &GroupSpec, set: &OmegaSet) -> Option<OmegaSet> {
    let d = spec.dihedral.as_ref()?;
    set.is_subset(d.h()).then(|| d.h().difference(set).cloned().collect())
}

pub fn run(args: &GroupArgs, sink: &Sink) -> Result<()> {
    let spec = parse_group_spec(&args.spec)?;
    let group = &spec.group;
    let order = group.order();
    let primes: Vec<u64> = match args.q {
        Some(q) if !is_prime(q) => return usage(format!("{q} is not prime")),
        Some(q) => vec![q],
        None => prime_divisors(order),
    };
    let everything: OmegaSet = group.elements().iter().cloned().collect();
    let nontrivial: OmegaSet = group.elements().iter().filter(|g| !g.is_identity()).cloned().collect();
    let abelian = group.is_abelian();
    let beta_of = |set: &OmegaSet| if abelian { beta(group, set).ok() } else { None };
    let beta_f_of = |set: &OmegaSet| spec.dihedral.as_ref().and_then(|d| beta_f(d, set).ok());

    let mut omega = Vec::new();
    for &q in &primes {
        let top = valuation(order, q).max(1);
        let levels = (1..=top).map(Level::Exact).chain([Level::Infinite]);
        for level in levels {
            let set = omega_set(group, q, level)?;
            if set.is_empty() && level != Level::Infinite {
                continue;
            }
            log::debug!("Ω({}, {q}^{level}) has {} elements", spec.name, set.len());
            let complement: OmegaSet = everything.difference(&set).cloned().collect();
            omega.push(OmegaReport {
                q,
                level: level.to_string(),
                size: set.len(),
                elements: set.iter().map(ToString::to_string).collect(),
                beta: beta_of(&set),
                beta_complement: beta_of(&complement),
                beta_f: beta_f_of(&set),
                beta_f_complement: h_complement(&spec, &set).and_then(|c| beta_f_of(&c)),
            });
        }
    }

    let report = GroupReport {
        spec: spec.name.clone(),
        order,
        degree: group.degree(),
        abelian,
        non_random_primes: non_random_primes(group).into_iter().collect(),
        beta: beta_of(&nontrivial),
        beta_f: spec
            .dihedral
            .as_ref()
            .and_then(|d| beta_f_of(&d.h().iter().filter(|h| !h.is_identity()).cloned().collect())),
        omega,
    };
    sink.report(&report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_selectors() {
        assert_eq!(parse_omega("none").unwrap(), None);
        assert_eq!(parse_omega("3").unwrap(), Some((3, Level::Infinite)));
        assert_eq!(parse_omega("2^inf").unwrap(), Some((2, Level::Infinite)));
        assert_eq!(parse_omega("2^2").unwrap(), Some((2, Level::Exact(2))));
        assert!(parse_omega("4").is_err());
        assert!(parse_omega("2^0").is_err());
        assert!(parse_omega("all").is_err());
    }
}
