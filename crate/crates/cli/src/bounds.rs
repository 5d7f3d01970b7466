use nonrandom::bounds::{
    d4_bounds, genus_rank_lower_bound, rz_lower_bound, rz_relative_lower_bound, BoundReport, BoundsError, D4Report,
    GenusReport, RZInputs, RamificationProfile,
};
use serde::Serialize;

use crate::args::BoundsArgs;
use crate::error::{CliError, Result};
use crate::output::Sink;

#[derive(Serialize)]
struct ProfileSummary {
    degree: u64,
    group: Option<String>,
    ramified_primes: Vec<u64>,
}

#[derive(Serialize)]
struct BoundsOutput {
    profile: ProfileSummary,
    q: u64,
    l: u32,
    rz: BoundReport,
    genus: Option<GenusReport>,
    /// Why the genus bound is missing, e.g. no abelian rank for a non-abelian profile.
    genus_unavailable: Option<String>,
    relative: Option<BoundReport>,
    d4: Option<D4Report>,
}

pub fn run(args: &BoundsArgs, sink: &Sink) -> Result<()> {
    let text = std::fs::read_to_string(&args.profile).map_err(|source| CliError::Io {
        path: args.profile.clone(),
        source,
    })?;
    let profile: RamificationProfile = text.parse()?;
    let inputs = args.unit_rank.map(|unit_rank| RZInputs {
        unit_rank,
        vq_nq: args.vq_nq.unwrap_or(0),
        delta: args.delta.unwrap_or(0),
    });
    let rz = rz_lower_bound(&profile, args.q, args.l, inputs.as_ref())?;
    let (genus, genus_unavailable) = match genus_rank_lower_bound(&profile, args.q, args.l) {
        Ok(g) => (Some(g), None),
        Err(e @ (BoundsError::MissingAbelianRank(_) | BoundsError::NeedsInertiaClass(_))) => (None, Some(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    let relative = args
        .relative
        .map(|n| rz_relative_lower_bound(&profile, args.q, args.l, n))
        .transpose()?;
    let d4 = if args.d4 { Some(d4_bounds(&profile)?) } else { None };
    sink.report(&BoundsOutput {
        profile: ProfileSummary {
            degree: profile.degree(),
            group: profile.group_name().map(str::to_string),
            ramified_primes: profile.primes().iter().map(|r| r.p).collect(),
        },
        q: args.q,
        l: args.l,
        rz,
        genus,
        genus_unavailable,
        relative,
        d4,
    })
}
