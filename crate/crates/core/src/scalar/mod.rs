//! Exact scalar fields.
//!
//! Every linear-algebra routine in the crate is generic over [`Field`]. Two
//! implementations ship: [`Cyclotomic`], elements of `Q(ζ_m)`, and
//! [`BigRational`], which suffices whenever every bicharacter value is `±1`.

mod cyclotomic;
mod poly;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("{given} coefficients exceed conductor {conductor}")]
    TooManyCoefficients { conductor: u32, given: usize },
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("no primitive {0}-th root of unity in this field")]
    NoRootOfUnity(u64),
    #[error("value {0} is not representable in this field")]
    NotRepresentable(String),
}

/// A commutative field of characteristic zero with exact equality.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    /// `ζ_order^exponent`, or `None` if the field has no such root.
    fn root_of_unity(order: u64, exponent: i64) -> Option<Self>;

    fn from_rational(q: BigRational) -> Self;

    fn from_repr(repr: &ScalarRepr) -> Result<Self, ScalarError>;

    fn to_repr(&self) -> ScalarRepr;

    fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self.clone() / rhs.clone())
        }
    }

    /// True if `self` is `1` or `-1`.
    fn is_sign(&self) -> bool {
        self.is_one() || (-self.clone()).is_one()
    }
}

/// Text encoding of a scalar: `"p/q"`, a bare integer, or a cyclotomic
/// coefficient object in the power basis of `Q(ζ_conductor)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Integer(i64),
    Rational(String),
    Cyclotomic { conductor: u32, coeffs: Vec<RationalRepr> },
}

/// A single rational coefficient; accepts either a JSON integer or a string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalRepr {
    Integer(i64),
    Text(String),
}

impl RationalRepr {
    pub fn parse(&self) -> Result<BigRational, ScalarError> {
        match self {
            RationalRepr::Integer(n) => Ok(BigRational::from_integer(BigInt::from(*n))),
            RationalRepr::Text(s) => parse_rational(s),
        }
    }
}

impl From<i64> for RationalRepr {
    fn from(n: i64) -> Self {
        RationalRepr::Integer(n)
    }
}

impl From<&BigRational> for RationalRepr {
    fn from(q: &BigRational) -> Self {
        RationalRepr::Text(format_rational(q))
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational, ScalarError> {
    let bad = || ScalarError::MalformedRational(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Field for BigRational {
    fn root_of_unity(order: u64, exponent: i64) -> Option<Self> {
        match order {
            0 => None,
            1 => Some(Self::one()),
            2 if exponent.rem_euclid(2) == 0 => Some(Self::one()),
            2 => Some(-Self::one()),
            // ζ_m^k is rational exactly when it equals ±1.
            m => {
                let k = exponent.rem_euclid(m as i64) as u64;
                if k == 0 {
                    Some(Self::one())
                } else if 2 * k == m {
                    Some(-Self::one())
                } else {
                    None
                }
            }
        }
    }

    fn from_rational(q: BigRational) -> Self {
        q
    }

    fn from_repr(repr: &ScalarRepr) -> Result<Self, ScalarError> {
        let c = Cyclotomic::from_repr(repr)?;
        c.to_rational()
            .ok_or_else(|| ScalarError::NotRepresentable(c.to_string()))
    }

    fn to_repr(&self) -> ScalarRepr {
        ScalarRepr::Rational(format_rational(self))
    }
}

/// Render a rational with an explicit sign for use inside sums.
pub(crate) fn signed_term(q: &BigRational, first: bool) -> (String, String) {
    let sign = if q.is_negative() {
        if first {
            "-"
        } else {
            " - "
        }
    } else if first {
        ""
    } else {
        " + "
    };
    (sign.to_string(), format_rational(&q.abs()))
}
