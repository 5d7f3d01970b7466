use nonrandom::dirichlet::{fit_asymptotic, predicted_shape, AsymptoticShape, FitReport, ShapeKind, ShapeParams};
use nonrandom::permgroup::{beta, beta_f, omega_set, parse_group_spec, OmegaSet};
use serde::Serialize;

use crate::args::{AsymptoticCommand, FitArgs, Kind, PredictArgs};
use crate::error::{usage, CliError, Result};
use crate::group::{h_complement, parse_omega};
use crate::output::{Sink, Table};

#[derive(Serialize)]
struct Params {
    r: Option<u32>,
    beta_complement: Option<u64>,
    omega_empty: bool,
    beta_f_complement: Option<u64>,
    beta_f: Option<u64>,
    beta_1: Option<u64>,
}

#[derive(Serialize)]
struct PredictReport {
    kind: &'static str,
    group: Option<String>,
    omega: String,
    params: Params,
    shape: AsymptoticShape,
    formula: String,
}

#[derive(Serialize)]
struct FitOutput {
    x_column: String,
    y_column: String,
    rows: usize,
    fixed_loglog: Option<f64>,
    fit: FitReport,
}

pub fn run(cmd: &AsymptoticCommand, sink: &Sink) -> Result<()> {
    match cmd {
        AsymptoticCommand::Predict(args) => predict(args, sink),
        AsymptoticCommand::Fit(args) => fit(args, sink),
    }
}

fn kind_name(kind: Kind) -> (&'static str, ShapeKind) {
    match kind {
        Kind::Abelian => ("abelian", ShapeKind::Abelian),
        Kind::DihedralUpper => ("dihedral_upper", ShapeKind::DihedralUpper),
        Kind::DqUpper => ("dq_upper", ShapeKind::DqUpper),
        Kind::D4Upper => ("d4_upper", ShapeKind::D4Upper),
    }
}

/// β values implied by a group spec and Ω selector; explicit flags take precedence.
fn derive_params(args: &PredictArgs) -> Result<ShapeParams> {
    let selector = parse_omega(&args.omega)?;
    let mut params = ShapeParams {
        r: args.r,
        omega_empty: selector.is_none(),
        ..ShapeParams::default()
    };
    if let Some(name) = &args.group {
        let spec = parse_group_spec(name)?;
        let group = &spec.group;
        let omega: OmegaSet = match selector {
            Some((q, level)) => omega_set(group, q, level)?,
            None => OmegaSet::new(),
        };
        params.omega_empty = omega.is_empty();
        if group.is_abelian() {
            let complement: OmegaSet = group.elements().iter().filter(|g| !omega.contains(g)).cloned().collect();
            params.beta_complement = Some(beta(group, &complement)?);
        }
        if let Some(d) = &spec.dihedral {
            let nontrivial: OmegaSet = d.h().iter().filter(|h| !h.is_identity()).cloned().collect();
            params.beta_f = Some(beta_f(d, &nontrivial)?);
            if let Some(c) = h_complement(&spec, &omega) {
                params.beta_f_complement = Some(beta_f(d, &c)?);
            }
        }
    }
    params.beta_complement = args.beta_complement.or(params.beta_complement);
    params.beta_f_complement = args.beta_f_complement.or(params.beta_f_complement);
    params.beta_f = args.beta_f.or(params.beta_f);
    params.beta_1 = args.beta_1;
    Ok(params)
}

fn predict(args: &PredictArgs, sink: &Sink) -> Result<()> {
    let (name, kind) = kind_name(args.kind);
    let params = derive_params(args)?;
    let shape = predicted_shape(kind, &params)?;
    if !args.checkpoints.is_empty() {
        if !(args.constant > 0.0) {
            return usage("--constant must be positive");
        }
        let mut shape = shape;
        shape.constant = Some(args.constant);
        let rows = args
            .checkpoints
            .iter()
            .map(|&x| vec![x.into(), shape.evaluate(x as f64).into()])
            .collect();
        return sink.table(&Table { header: vec!["x".into(), "value".into()], rows });
    }
    sink.report(&PredictReport {
        kind: name,
        group: args.group.clone(),
        omega: args.omega.clone(),
        params: Params {
            r: params.r,
            beta_complement: params.beta_complement,
            omega_empty: params.omega_empty,
            beta_f_complement: params.beta_f_complement,
            beta_f: params.beta_f,
            beta_1: params.beta_1,
        },
        formula: shape.to_string(),
        shape,
    })
}

fn fit(args: &FitArgs, sink: &Sink) -> Result<()> {
    let io_err = |source: std::io::Error| CliError::Io { path: args.input.clone(), source };
    let file = std::fs::File::open(&args.input).map_err(io_err)?;
    let mut reader = csv::Reader::from_reader(file);
    let header = reader.headers()?.clone();
    let column = |name: &str| {
        header
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| CliError::Usage(format!("no column `{name}` in {}", args.input.display())))
    };
    let xi = column(&args.x_column)?;
    let y_name = match &args.y_column {
        Some(y) => y.clone(),
        None => match header.get(1) {
            Some(y) => y.to_string(),
            None => return usage("input needs at least two columns"),
        },
    };
    let yi = column(&y_name)?;
    let mut rows = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record?;
        let cell = |i: usize| record.get(i).unwrap_or("").trim().to_string();
        let (x, y) = (cell(xi), cell(yi));
        if y == "NA" || y.is_empty() {
            log::warn!("skipping row {} with no value", line + 2);
            continue;
        }
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| CliError::Usage(format!("row {}: `{s}` is not a number", line + 2)))
        };
        rows.push((parse(&x)?, parse(&y)?));
    }
    let report = fit_asymptotic(&rows, args.loglog)?;
    sink.report(&FitOutput {
        x_column: args.x_column.clone(),
        y_column: y_name,
        rows: rows.len(),
        fixed_loglog: args.loglog,
        fit: report,
    })
}
