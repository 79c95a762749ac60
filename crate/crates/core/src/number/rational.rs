//! The field Q over arbitrary-precision integers.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use crate::error::{Error, Result};
use crate::field::Field;

/// Reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact integer square root of a nonnegative integer, if it is a square.
pub fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// True iff `r >= 0` and numerator and denominator are perfect squares.
pub fn rational_is_square(r: &Rational) -> bool {
    rational_sqrt(r).is_some()
}

/// The nonnegative square root, when rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let n = integer_sqrt(r.numer())?;
    let d = integer_sqrt(r.denom())?;
    Some(Rational::new(n, d))
}

/// Prime factorization of `|n|` by trial division, `n != 0`.
pub fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut m = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        let mut e = 0;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += if d == BigInt::from(2) { 1 } else { 2 };
    }
    if m > BigInt::one() {
        out.push((m, 1));
    }
    out
}

/// The squarefree integer in the square class of `r != 0`.
pub fn squarefree_part(r: &Rational) -> BigInt {
    let n = r.numer() * r.denom();
    let mut out = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    for (p, e) in factor(&n) {
        if e % 2 == 1 {
            out *= p;
        }
    }
    out
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `n` or `n/d`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut m = n.clone();
    let mut v = 0;
    while (&m % p).is_zero() {
        m /= p;
        v += 1;
    }
    (v, m)
}

pub fn to_biguint(n: &BigInt) -> BigUint {
    match n.sign() {
        Sign::Minus => panic!("negative value"),
        _ => n.magnitude().clone(),
    }
}

/// Legendre symbol (n/p) for an odd prime `p` not dividing `n`.
pub fn legendre(n: &BigInt, p: &BigInt) -> i8 {
    let r = n.mod_floor(p);
    let e = (p - 1u32) / 2u32;
    let v = r.modpow(&e, p);
    if v.is_one() {
        1
    } else {
        -1
    }
}

/// Q as a [`Field`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn from_i64(&self, n: i64) -> Rational {
        int(n)
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn inv(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn eq_elem(&self, a: &Rational, b: &Rational) -> bool {
        a == b
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn has_square_root(&self, a: &Rational) -> bool {
        rational_is_square(a)
    }

    fn sqrt(&self, a: &Rational) -> Option<Rational> {
        rational_sqrt(a)
    }

    fn cmp_elem(&self, a: &Rational, b: &Rational) -> Ordering {
        a.cmp(b)
    }

    fn format(&self, a: &Rational) -> String {
        format_rational(a)
    }

    fn parse(&self, s: &str) -> Result<Rational> {
        parse_rational(s)
    }

    fn random(&self, rng: &mut dyn RngCore) -> Rational {
        rat(rng.gen_range(-20..=20), rng.gen_range(1..=9))
    }
}
