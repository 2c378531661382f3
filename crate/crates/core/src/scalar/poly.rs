//! Dense univariate polynomials over `Q`, low degree first.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type QPoly = Vec<BigRational>;

pub(crate) fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Reduce `p` modulo the monic integer polynomial `modulus` in place,
/// leaving exactly `deg(modulus)` coefficients.
pub(crate) fn reduce_monic(p: &mut QPoly, modulus: &[BigInt]) {
    let deg = modulus.len() - 1;
    debug_assert!(modulus[deg].is_one());
    for top in (deg..p.len()).rev() {
        if p[top].is_zero() {
            continue;
        }
        let lead = std::mem::replace(&mut p[top], BigRational::zero());
        let base = top - deg;
        for (t, m) in modulus[..deg].iter().enumerate() {
            if !m.is_zero() {
                p[base + t] -= &lead * BigRational::from_integer(m.clone());
            }
        }
    }
    p.resize(deg, BigRational::zero());
}

fn divrem(num: &[BigRational], den: &[BigRational]) -> (QPoly, QPoly) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    let lead = &den[dd];
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let c = rem.last().unwrap() / lead;
        for (i, d) in den.iter().enumerate() {
            rem[shift + i] -= &c * d;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

fn sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `modulus` via the extended Euclidean algorithm.
/// Returns `None` when `a` and `modulus` share a factor (for an irreducible
/// modulus this happens only for `a ≡ 0`).
pub(crate) fn inverse_mod(a: &[BigRational], modulus: &[BigInt]) -> Option<QPoly> {
    let m: QPoly = modulus.iter().cloned().map(BigRational::from_integer).collect();
    let mut a = a.to_vec();
    trim(&mut a);
    if a.is_empty() {
        return None;
    }
    // Invariant: s_i * a ≡ r_i (mod m).
    let (mut r0, mut r1) = (m.clone(), a);
    let (mut s0, mut s1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let mut inv: QPoly = s0.into_iter().map(|x| x / &c).collect();
    let (_, mut rem) = divrem(&inv, &m);
    rem.resize(m.len() - 1, BigRational::zero());
    inv = rem;
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn reduces_by_monic() {
        // x^2 mod (x^2 + 1) = -1
        let mut p = vec![q(0), q(0), q(1)];
        reduce_monic(&mut p, &[1.into(), 0.into(), 1.into()]);
        assert_eq!(p, vec![q(-1), q(0)]);
    }

    #[test]
    fn inverts_modulo() {
        // (1 + x)^{-1} mod x^2 + 1 = (1 - x)/2
        let m: Vec<BigInt> = vec![1.into(), 0.into(), 1.into()];
        let inv = inverse_mod(&[q(1), q(1)], &m).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(inv, vec![half.clone(), -half]);
    }
}
