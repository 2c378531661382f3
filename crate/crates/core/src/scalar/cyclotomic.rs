use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{self, QPoly};
use super::{format_rational, signed_term, Field, RationalRepr, ScalarError, ScalarRepr};

/// An element of the cyclotomic field `Q(ζ_m)`, stored as its coordinates in
/// the power basis `1, ζ, …, ζ^{φ(m)-1}`.
///
/// Coordinates are always reduced modulo the `m`-th cyclotomic polynomial, so
/// two elements of the same conductor are equal iff their coefficient vectors
/// are. Operands of different conductors are lifted to the lcm.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

type PolyCache = RwLock<HashMap<u32, Arc<Vec<BigInt>>>>;

fn cache() -> &'static PolyCache {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Integer coefficients of `Φ_m`, low degree first.
///
/// Computed as `(x^m - 1) / ∏_{d | m, d < m} Φ_d` and memoized.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<BigInt>> {
    assert!(m > 0, "conductor must be positive");
    if let Some(p) = cache().read().unwrap().get(&m) {
        return p.clone();
    }
    let mut num: Vec<BigInt> = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in (1..m).filter(|d| m % d == 0) {
        let den = cyclotomic_polynomial(d);
        num = exact_div_monic(&num, &den);
    }
    let p = Arc::new(num);
    cache().write().unwrap().insert(m, p.clone());
    p
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for shift in (0..quot.len()).rev() {
        let c = rem[shift + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[shift + i] -= &c * d;
        }
        quot[shift] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

impl Cyclotomic {
    /// Canonical reduction of `Σ coeffs[i] ζ_m^i`.
    pub fn new(conductor: u32, coeffs: Vec<BigRational>) -> Result<Self, ScalarError> {
        if conductor == 0 {
            return Err(ScalarError::ZeroConductor);
        }
        if coeffs.len() > conductor as usize {
            return Err(ScalarError::TooManyCoefficients {
                conductor,
                given: coeffs.len(),
            });
        }
        Ok(Self::reduce(conductor, coeffs))
    }

    pub fn rational(q: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// `ζ_m^k` with `k` taken mod `m`.
    pub fn root_of_unity(m: u32, k: i64) -> Self {
        assert!(m > 0, "conductor must be positive");
        let e = k.rem_euclid(m as i64) as usize;
        let mut p = vec![BigRational::zero(); e + 1];
        p[e] = BigRational::one();
        Self::reduce(m, p)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn reduce(conductor: u32, mut p: QPoly) -> Self {
        let phi = euler_phi(conductor) as usize;
        if p.len() > conductor as usize {
            // fold exponents mod m first
            let m = conductor as usize;
            let mut folded = vec![BigRational::zero(); m];
            for (i, c) in p.into_iter().enumerate() {
                folded[i % m] += c;
            }
            p = folded;
        }
        if p.len() > phi {
            poly::reduce_monic(&mut p, &cyclotomic_polynomial(conductor));
        } else {
            p.resize(phi, BigRational::zero());
        }
        Cyclotomic { conductor, coeffs: p }
    }

    /// Re-express `self` in `Q(ζ_n)`; `n` must be a multiple of the conductor.
    pub fn lift(&self, n: u32) -> Self {
        assert!(
            n % self.conductor == 0,
            "cannot lift conductor {} to {n}",
            self.conductor
        );
        if n == self.conductor {
            return self.clone();
        }
        let step = (n / self.conductor) as usize;
        let mut p = vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            p[(i * step) % n as usize] += c;
        }
        Self::reduce(n, p)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let n = self.conductor.lcm(&other.conductor);
        (self.lift(n), other.lift(n))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        if self.conductor == other.conductor {
            Cyclotomic {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
            }
        } else {
            let (a, b) = self.aligned(other);
            a.zip_with(&b, f)
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.conductor != other.conductor {
            // Rationals multiply coordinate-wise without a lift.
            if let Some(q) = self.as_scalar_rational() {
                return other.scale(q);
            }
            if let Some(q) = other.as_scalar_rational() {
                return self.scale(q);
            }
            let (a, b) = self.aligned(other);
            return a.mul_ref(&b);
        }
        if self.coeffs.len() == 1 {
            return Cyclotomic {
                conductor: self.conductor,
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            };
        }
        Self::reduce(self.conductor, poly::mul(&self.coeffs, &other.coeffs))
    }

    fn as_scalar_rational(&self) -> Option<&BigRational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Cyclotomic {
                conductor: self.conductor,
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        let modulus = cyclotomic_polynomial(self.conductor);
        let inv = poly::inverse_mod(&self.coeffs, &modulus).ok_or(ScalarError::DivisionByZero)?;
        Ok(Self::reduce(self.conductor, inv))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul_ref(&rhs.inv()?))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = self.aligned(other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for Cyclotomic {}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::rational(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::rational(BigRational::one())
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> Neg for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                f(self, rhs)
            }
        }
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.zip_with(b, |x, y| x + y));
forward_binop!(Sub, sub, |a, b| a.zip_with(b, |x, y| x - y));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero"));

impl AddAssign for Cyclotomic {
    fn add_assign(&mut self, rhs: Cyclotomic) {
        if self.conductor == rhs.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + &rhs;
        }
    }
}

impl SubAssign for Cyclotomic {
    fn sub_assign(&mut self, rhs: Cyclotomic) {
        if self.conductor == rhs.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
                *a -= b;
            }
        } else {
            *self = &*self - &rhs;
        }
    }
}

impl MulAssign for Cyclotomic {
    fn mul_assign(&mut self, rhs: Cyclotomic) {
        *self = self.mul_ref(&rhs);
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{}", format_rational(&q));
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = signed_term(c, first);
            first = false;
            let zeta = match i {
                0 => String::new(),
                1 => format!("ζ{}", self.conductor),
                _ => format!("ζ{}^{i}", self.conductor),
            };
            if i == 0 {
                write!(f, "{sign}{mag}")?;
            } else if mag == "1" {
                write!(f, "{sign}{zeta}")?;
            } else {
                write!(f, "{sign}{mag}·{zeta}")?;
            }
        }
        Ok(())
    }
}

impl Field for Cyclotomic {
    fn root_of_unity(order: u64, exponent: i64) -> Option<Self> {
        let m = u32::try_from(order).ok().filter(|m| *m > 0)?;
        Some(Cyclotomic::root_of_unity(m, exponent))
    }

    fn from_rational(q: BigRational) -> Self {
        Cyclotomic::rational(q)
    }

    fn from_repr(repr: &ScalarRepr) -> Result<Self, ScalarError> {
        match repr {
            ScalarRepr::Integer(n) => Ok(Cyclotomic::from_integer(*n)),
            ScalarRepr::Rational(s) => Ok(Cyclotomic::rational(super::parse_rational(s)?)),
            ScalarRepr::Cyclotomic { conductor, coeffs } => {
                let coeffs = coeffs.iter().map(RationalRepr::parse).collect::<Result<Vec<_>, _>>()?;
                Cyclotomic::new(*conductor, coeffs)
            }
        }
    }

    fn to_repr(&self) -> ScalarRepr {
        match self.to_rational() {
            Some(q) => ScalarRepr::Rational(format_rational(&q)),
            None => ScalarRepr::Cyclotomic {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().map(RationalRepr::from).collect(),
            },
        }
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Cyclotomic::checked_div(self, rhs)
    }
}
