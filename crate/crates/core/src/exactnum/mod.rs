//! Exact coefficient fields: the rationals and real quadratic extensions
//! `Q(sqrt d)`.
//!
//! Every algorithm in the crate is generic over [`Scalar`]. Two
//! implementations are provided: [`Rational`] (arbitrary precision, via
//! `num-rational`) and [`QuadExt`], the elements `r + q*sqrt(d)`.

mod quad;

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use quad::QuadExt;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `num/den` from machine integers. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// How a coefficient renders inside a term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffParts {
    pub negative: bool,
    /// Magnitude without the sign, in the literal syntax of the parser.
    pub body: String,
    /// True when the magnitude is a sum and needs parentheses next to a
    /// monomial.
    pub compound: bool,
    pub is_unit: bool,
}

/// A field element usable as a polynomial coefficient.
///
/// Implementations are exact; `Ord` is the order of the real embedding with
/// `sqrt(d) > 0`.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Eq
    + Hash
    + Ord
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: Rational) -> Self;

    /// `Some` when the value lies in the prime field.
    fn to_rational(&self) -> Option<Rational>;

    /// The extension generator `sqrt(d)`, if representable under `cfg`.
    fn generator(cfg: &FieldConfig) -> Option<Self>;

    fn inv(&self) -> Result<Self>;

    /// A square root of a rational radicand, following the nonnegative
    /// convention, or `None` when no root exists in the configured field.
    fn sqrt_rational(r: &Rational, cfg: &FieldConfig) -> Option<Self>;

    fn approx_f64(&self) -> f64;

    fn parts(&self) -> CoeffParts;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }
}

impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn generator(_cfg: &FieldConfig) -> Option<Self> {
        None
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn sqrt_rational(r: &Rational, _cfg: &FieldConfig) -> Option<Self> {
        rational_sqrt(r)
    }

    fn approx_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parts(&self) -> CoeffParts {
        CoeffParts {
            negative: self.is_negative(),
            body: self.abs().to_string(),
            compound: false,
            is_unit: self.abs().is_one(),
        }
    }
}

/// Exact square root of a rational, when it is itself rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Which computable subfield of the algebraically closed field is in use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    QuadraticExtension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldConfig {
    pub kind: FieldKind,
    d: Option<u64>,
}

impl FieldConfig {
    pub const fn rationals() -> Self {
        Self {
            kind: FieldKind::Rationals,
            d: None,
        }
    }

    pub fn quadratic(d: u64) -> Result<Self> {
        if d == 0 || is_square(d) {
            return Err(Error::InvalidField(format!(
                "d = {d} must be a positive nonsquare integer"
            )));
        }
        Ok(Self {
            kind: FieldKind::QuadraticExtension,
            d: Some(d),
        })
    }

    pub fn d(&self) -> Option<u64> {
        self.d
    }
}

impl Default for FieldConfig {
    fn default() -> Self {
        Self::rationals()
    }
}

impl FromStr for FieldConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" {
            return Ok(Self::rationals());
        }
        match s.strip_prefix("qsqrt:") {
            Some(d) => {
                let d = d
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidField(format!("bad radicand in `{s}`")))?;
                Self::quadratic(d)
            }
            None => Err(Error::InvalidField(format!(
                "expected `q` or `qsqrt:<d>`, got `{s}`"
            ))),
        }
    }
}

impl Display for FieldConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            None => write!(f, "q"),
            Some(d) => write!(f, "qsqrt:{d}"),
        }
    }
}

fn is_square(n: u64) -> bool {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).any(|k| k * k == n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary field operation.
pub fn field_arith<F: Scalar>(a: &F, b: &F, op: FieldOp) -> Result<F> {
    Ok(match op {
        FieldOp::Add => a.clone() + b.clone(),
        FieldOp::Sub => a.clone() - b.clone(),
        FieldOp::Mul => a.clone() * b.clone(),
        FieldOp::Div => a.clone() * b.inv()?,
    })
}

pub fn sqrt_in_field<F: Scalar>(r: &Rational, cfg: &FieldConfig) -> Option<F> {
    F::sqrt_rational(r, cfg)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root<F> {
    pub value: F,
    pub multiplicity: u32,
}

/// Roots of `alpha*T^2 + beta*T + gamma` lying in the configured field.
///
/// The `+sqrt(disc)` branch is listed first. A double root appears once with
/// multiplicity 2. Discriminants outside the prime field are rejected with
/// [`Error::Unsupported`].
pub fn solve_quadratic<F: Scalar>(
    alpha: &F,
    beta: &F,
    gamma: &F,
    cfg: &FieldConfig,
) -> Result<Vec<Root<F>>> {
    if alpha.is_zero() {
        return Err(Error::NotQuadratic);
    }
    let four = F::from_i64(4);
    let disc = beta.clone() * beta.clone() - four * alpha.clone() * gamma.clone();
    let two_alpha = F::from_i64(2) * alpha.clone();
    if disc.is_zero() {
        return Ok(vec![Root {
            value: -beta.clone() / two_alpha,
            multiplicity: 2,
        }]);
    }
    let disc = disc.to_rational().ok_or_else(|| {
        Error::Unsupported(format!("square root of non-rational discriminant {disc}"))
    })?;
    let Some(sq) = F::sqrt_rational(&disc, cfg) else {
        return Ok(Vec::new());
    };
    Ok(vec![
        Root {
            value: (-beta.clone() + sq.clone()) / two_alpha.clone(),
            multiplicity: 1,
        },
        Root {
            value: (-beta.clone() - sq) / two_alpha,
            multiplicity: 1,
        },
    ])
}

/// Debug rendering with 15 significant digits, for sampling checks only.
pub fn to_float_string<F: Scalar>(x: &F) -> String {
    format!("{:.14e}", x.approx_f64())
}
