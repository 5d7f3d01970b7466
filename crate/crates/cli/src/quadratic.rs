use nonrandom::quadratic::{moment_scan, rank_probability_scan, DiscOrder};

use crate::args::{Order, QuadraticArgs, ScanKind};
use crate::error::Result;
use crate::output::{Sink, Table};

pub fn run(args: &QuadraticArgs, sink: &Sink) -> Result<()> {
    let order = match args.order {
        Order::Radical => DiscOrder::Radical,
        Order::Absdisc => DiscOrder::AbsDisc,
    };
    log::info!("quadratic {:?} scan up to {:?}", args.kind, args.checkpoints.last());
    let table = match args.kind {
        ScanKind::Moment => Table {
            header: vec!["x".into(), "n".into(), "e_hat".into()],
            rows: moment_scan(order, &args.checkpoints)?
                .into_iter()
                .map(|r| vec![r.x.into(), r.n.into(), r.e_hat.into()])
                .collect(),
        },
        ScanKind::Probability => Table {
            header: vec!["x".into(), "n".into(), "r".into(), "p_hat".into()],
            rows: rank_probability_scan(order, &args.checkpoints, args.r)?
                .into_iter()
                .map(|row| vec![row.x.into(), row.n.into(), u64::from(args.r).into(), row.p_hat.into()])
                .collect(),
        },
    };
    sink.table(&table)
}
