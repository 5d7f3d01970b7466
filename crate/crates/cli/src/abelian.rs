use nonrandom::abelian::{AbelianGroupSpec, FieldCounter, InertiaSemantics, MAX_TAME};

use crate::args::{AbelianArgs, Semantics};
use crate::error::{usage, Result};
use crate::group::parse_omega;
use crate::output::{Cell, Sink, Table};

pub fn run(args: &AbelianArgs, sink: &Sink) -> Result<()> {
    if args.max_r as usize >= MAX_TAME {
        return usage(format!("--max-r must be below {MAX_TAME}"));
    }
    let group: AbelianGroupSpec = args.spec.parse()?;
    let omega = match parse_omega(&args.omega)? {
        Some((q, level)) => group.omega(q, level),
        None => 0,
    };
    let semantics = match args.semantics {
        Semantics::Meets => InertiaSemantics::SubgroupMeets,
        Semantics::Generator => InertiaSemantics::GeneratorIn,
    };
    let mut counter = FieldCounter::new(group, omega, semantics)?;
    if let Some(cap) = args.cap {
        counter = counter.with_cap(cap);
    }
    let rs: Vec<u32> = match args.r {
        Some(r) => vec![r],
        None if omega == 0 => vec![],
        None => (0..=args.max_r).collect(),
    };
    log::info!("counting {} fields up to {:?}", args.spec, args.checkpoints.last());
    let rows = counter.count_table(&args.checkpoints)?;

    let unit = if args.fields { "fields" } else { "pairs" };
    let mut header = vec!["x".to_string(), format!("total_{unit}")];
    for r in &rs {
        header.push(format!("{unit}_r{r}"));
        header.push(format!("ratio_r{r}"));
    }
    let rows = rows
        .iter()
        .map(|row| {
            let mut cells: Vec<Cell> = vec![row.x.into()];
            cells.push(if args.fields { row.total_fields() } else { row.total }.into());
            for &r in &rs {
                cells.push(if args.fields { row.fields(r).into() } else { row.pairs(r).into() });
                cells.push(row.ratio(r).into());
            }
            cells
        })
        .collect();
    sink.table(&Table { header, rows })
}
