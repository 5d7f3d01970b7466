use std::fmt;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use statrs::function::gamma::gamma;

use super::DirichletError;

pub type Exponent = Ratio<i64>;

/// Leading singularity `c · (s−1)^{−α} · log^b(1/(s−1))` of a Dirichlet series at s = 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SingularityDescriptor {
    pub alpha: Exponent,
    pub b: u32,
    pub coeff: f64,
}

impl SingularityDescriptor {
    pub fn new(alpha: Exponent, b: u32, coeff: f64) -> Result<Self, DirichletError> {
        if alpha < Exponent::zero() || !(coeff > 0.0) {
            return Err(DirichletError::InvalidArgument(format!(
                "need alpha >= 0 and coeff > 0, got alpha = {alpha}, coeff = {coeff}"
            )));
        }
        Ok(SingularityDescriptor { alpha, b, coeff })
    }

    pub fn identity() -> Self {
        SingularityDescriptor {
            alpha: Exponent::zero(),
            b: 0,
            coeff: 1.0,
        }
    }
}

/// Leading-order product: pole orders and log powers add, coefficients multiply.
pub fn singularity_product(a: &SingularityDescriptor, b: &SingularityDescriptor) -> SingularityDescriptor {
    SingularityDescriptor {
        alpha: a.alpha + b.alpha,
        b: a.b + b.b,
        coeff: a.coeff * b.coeff,
    }
}

/// Summatory main term from the Delange–Ikehara theorem.
///
/// For α > 0 this is `c/Γ(α) · x (log x)^{α−1} (log log x)^b`; for α = 0 and
/// b ≥ 1 it is `b c · x (log log x)^{b−1} / log x`.
pub fn delange_ikehara_main_term(d: &SingularityDescriptor, x: f64) -> Result<f64, DirichletError> {
    if !(x >= std::f64::consts::E * std::f64::consts::E) {
        return Err(DirichletError::InvalidArgument(format!("x = {x} is below e^2")));
    }
    let shape = shape_from_singularity(d)?;
    Ok(shape.evaluate(x))
}

/// The shape of the Delange–Ikehara main term, constant included.
pub fn shape_from_singularity(d: &SingularityDescriptor) -> Result<AsymptoticShape, DirichletError> {
    let alpha = d.alpha;
    if alpha > Exponent::zero() {
        let a = alpha.to_f64().unwrap();
        Ok(AsymptoticShape {
            log_exp: alpha - 1,
            loglog_exp: Exponent::from_integer(d.b as i64),
            constant: Some(d.coeff / gamma(a)),
        })
    } else if alpha.is_zero() && d.b >= 1 {
        Ok(AsymptoticShape {
            log_exp: Exponent::from_integer(-1),
            loglog_exp: Exponent::from_integer(d.b as i64 - 1),
            constant: Some(d.b as f64 * d.coeff),
        })
    } else {
        Err(DirichletError::UnsupportedSingularity)
    }
}

/// `C · x (log x)^{log_exp} (log log x)^{loglog_exp}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticShape {
    #[serde(serialize_with = "ser_ratio")]
    pub log_exp: Exponent,
    #[serde(serialize_with = "ser_ratio")]
    pub loglog_exp: Exponent,
    pub constant: Option<f64>,
}

fn ser_ratio<S: serde::Serializer>(r: &Exponent, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl AsymptoticShape {
    pub fn new(log_exp: Exponent, loglog_exp: Exponent) -> Self {
        AsymptoticShape {
            log_exp,
            loglog_exp,
            constant: None,
        }
    }

    /// Value at x, taking a missing constant as 1.
    pub fn evaluate(&self, x: f64) -> f64 {
        let l = x.ln();
        self.constant.unwrap_or(1.0)
            * x
            * l.powf(self.log_exp.to_f64().unwrap())
            * l.ln().powf(self.loglog_exp.to_f64().unwrap())
    }
}

impl fmt::Display for AsymptoticShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.constant {
            write!(f, "{c} * ")?;
        }
        write!(f, "x (log x)^({}) (log log x)^({})", self.log_exp, self.loglog_exp)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    /// Abelian G ordered by product of ramified primes with r primes meeting Ω.
    Abelian,
    /// Upper bound for dihedral G = H ⋊ F.
    DihedralUpper,
    /// Upper bound for D_q, q an odd prime.
    DqUpper,
    /// Upper bound for D4 with Ω₁ or Ω₂.
    D4Upper,
}

/// Inputs to [`predicted_shape`]; each kind reads only the fields it needs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ShapeParams {
    pub r: Option<u32>,
    /// β(G∖Ω) for abelian G.
    pub beta_complement: Option<u64>,
    /// Ω is empty, so the indicator is identically 1.
    pub omega_empty: bool,
    /// β(F, H∖Ω).
    pub beta_f_complement: Option<u64>,
    /// β(F) = β(F, H∖{id}).
    pub beta_f: Option<u64>,
    pub beta_1: Option<u64>,
}

fn need<T>(v: Option<T>, name: &'static str) -> Result<T, DirichletError> {
    v.ok_or(DirichletError::MissingParam(name))
}

/// δ(β): 1 at β = −1 and 0 otherwise. β is a nonnegative count, so this is always 0.
fn delta(beta: i64) -> i64 {
    i64::from(beta == -1)
}

/// Exponents of the counting bounds, taken literally from their statements.
pub fn predicted_shape(kind: ShapeKind, params: &ShapeParams) -> Result<AsymptoticShape, DirichletError> {
    let int = Exponent::from_integer;
    let shape = match kind {
        ShapeKind::Abelian => {
            let beta = need(params.beta_complement, "beta_complement")? as i64;
            if params.omega_empty {
                AsymptoticShape::new(int(beta - 1), int(0))
            } else {
                let r = need(params.r, "r")? as i64;
                AsymptoticShape::new(int(beta - 1), int(r - delta(beta)))
            }
        }
        ShapeKind::DihedralUpper => {
            let r = need(params.r, "r")? as i64;
            let bc = need(params.beta_f_complement, "beta_f_complement")? as i64;
            let bf = need(params.beta_f, "beta_f")? as i64;
            let b1 = need(params.beta_1, "beta_1")? as i64;
            AsymptoticShape::new(int(bc) + Exponent::new(bf + b1, 2), Exponent::new(r, 2) + 1)
        }
        ShapeKind::DqUpper => {
            let r = need(params.r, "r")? as i64;
            AsymptoticShape::new(Exponent::new(1, 2), Exponent::new(r, 2) + 1)
        }
        ShapeKind::D4Upper => {
            let r = need(params.r, "r")? as i64;
            AsymptoticShape::new(int(2), int(r + 1))
        }
    };
    Ok(shape)
}
