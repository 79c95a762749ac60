//! Quadratic fields Q(√a) with their conjugation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::RngCore;

use super::rational::{
    format_rational, parse_rational, rational_sqrt, squarefree_part, Rational, RationalField,
};
use crate::algebra::{CoeffAlgebra, SquareRoot};
use crate::error::{Error, Result};
use crate::field::Field;

/// Q(√a) with `a` a squarefree integer other than 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadField {
    a: BigInt,
}

/// `x + y√a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElement {
    pub x: Rational,
    pub y: Rational,
}

impl QuadElement {
    pub fn new(x: Rational, y: Rational) -> Self {
        QuadElement { x, y }
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", format_rational(&self.x), format_rational(&self.y))
    }
}

/// The two automorphisms of Q(√a).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadAut {
    Identity,
    Conjugation,
}

impl QuadField {
    /// Normalizes `a` to the squarefree integer in its square class.
    pub fn new(a: &Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::SquareRadicand("0".into()));
        }
        let sf = squarefree_part(a);
        if sf.is_one() {
            return Err(Error::SquareRadicand(format_rational(a)));
        }
        Ok(QuadField { a: sf })
    }

    pub fn from_int(a: i64) -> Result<Self> {
        QuadField::new(&Rational::from_integer(a.into()))
    }

    /// Parses `quad(a)` with `a` an integer or fraction.
    pub fn parse_spec(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("quad(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected quad(a): {s}")))?;
        QuadField::new(&parse_rational(body)?)
    }

    pub fn radicand(&self) -> &BigInt {
        &self.a
    }

    pub fn radicand_rational(&self) -> Rational {
        Rational::from_integer(self.a.clone())
    }

    pub fn elem(&self, x: Rational, y: Rational) -> QuadElement {
        QuadElement { x, y }
    }

    pub fn from_ints(&self, x: i64, y: i64) -> QuadElement {
        QuadElement::new(Rational::from_integer(x.into()), Rational::from_integer(y.into()))
    }

    /// √a.
    pub fn sqrt_a(&self) -> QuadElement {
        self.from_ints(0, 1)
    }

    pub fn quad_add(&self, a: &QuadElement, b: &QuadElement) -> QuadElement {
        QuadElement::new(&a.x + &b.x, &a.y + &b.y)
    }

    pub fn quad_sub(&self, a: &QuadElement, b: &QuadElement) -> QuadElement {
        QuadElement::new(&a.x - &b.x, &a.y - &b.y)
    }

    pub fn quad_neg(&self, a: &QuadElement) -> QuadElement {
        QuadElement::new(-&a.x, -&a.y)
    }

    pub fn quad_mul(&self, a: &QuadElement, b: &QuadElement) -> QuadElement {
        let ar = self.radicand_rational();
        QuadElement::new(&a.x * &b.x + ar * &a.y * &b.y, &a.x * &b.y + &a.y * &b.x)
    }

    pub fn conjugate(&self, a: &QuadElement) -> QuadElement {
        QuadElement::new(a.x.clone(), -&a.y)
    }

    /// x² − a·y².
    pub fn quad_norm(&self, z: &QuadElement) -> Rational {
        &z.x * &z.x - self.radicand_rational() * &z.y * &z.y
    }

    pub fn quad_trace(&self, z: &QuadElement) -> Rational {
        &z.x + &z.x
    }

    pub fn quad_inv(&self, z: &QuadElement) -> Result<QuadElement> {
        let n = self.quad_norm(z);
        if n.is_zero() {
            return Err(Error::ZeroInversion);
        }
        let c = self.conjugate(z);
        Ok(QuadElement::new(c.x / &n, c.y / &n))
    }

    pub fn scale_rational(&self, s: &Rational, z: &QuadElement) -> QuadElement {
        QuadElement::new(s * &z.x, s * &z.y)
    }

    /// Exact square root: solves (s + t√a)² = x + y√a.
    pub fn quad_sqrt(&self, z: &QuadElement) -> Option<QuadElement> {
        let ar = self.radicand_rational();
        if z.y.is_zero() {
            if let Some(s) = rational_sqrt(&z.x) {
                return Some(QuadElement::new(s, Rational::zero()));
            }
            return rational_sqrt(&(&z.x / &ar)).map(|t| QuadElement::new(Rational::zero(), t));
        }
        let n = rational_sqrt(&self.quad_norm(z))?;
        let two = Rational::from_integer(2.into());
        for cand in [(&z.x + &n) / &two, (&z.x - &n) / &two] {
            if let Some(s) = rational_sqrt(&cand) {
                if s.is_zero() {
                    continue;
                }
                let t = &z.y / (&two * &s);
                return Some(QuadElement::new(s, t));
            }
        }
        None
    }
}

impl CoeffAlgebra for QuadField {
    type Base = RationalField;
    type Elem = QuadElement;
    type Aut = QuadAut;

    fn base(&self) -> RationalField {
        RationalField
    }

    fn dim(&self) -> usize {
        2
    }

    fn zero(&self) -> QuadElement {
        self.from_ints(0, 0)
    }

    fn one(&self) -> QuadElement {
        self.from_ints(1, 0)
    }

    fn add(&self, a: &QuadElement, b: &QuadElement) -> QuadElement {
        self.quad_add(a, b)
    }

    fn neg(&self, a: &QuadElement) -> QuadElement {
        self.quad_neg(a)
    }

    fn sub(&self, a: &QuadElement, b: &QuadElement) -> QuadElement {
        self.quad_sub(a, b)
    }

    fn mul(&self, a: &QuadElement, b: &QuadElement) -> QuadElement {
        self.quad_mul(a, b)
    }

    fn inv(&self, a: &QuadElement) -> Option<QuadElement> {
        self.quad_inv(a).ok()
    }

    fn is_zero(&self, a: &QuadElement) -> bool {
        a.x.is_zero() && a.y.is_zero()
    }

    fn eq_elem(&self, a: &QuadElement, b: &QuadElement) -> bool {
        a == b
    }

    fn scalar(&self, s: &Rational) -> QuadElement {
        QuadElement::new(s.clone(), Rational::zero())
    }

    fn coords(&self, a: &QuadElement) -> Vec<Rational> {
        vec![a.x.clone(), a.y.clone()]
    }

    fn from_coords(&self, c: &[Rational]) -> QuadElement {
        QuadElement::new(c[0].clone(), c[1].clone())
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn norm(&self, a: &QuadElement) -> Rational {
        self.quad_norm(a)
    }

    fn square_root(&self, a: &QuadElement) -> SquareRoot<QuadElement> {
        match self.quad_sqrt(a) {
            Some(r) => SquareRoot::Root(r),
            None => SquareRoot::NotSquare,
        }
    }

    fn identity_aut(&self) -> QuadAut {
        QuadAut::Identity
    }

    fn apply(&self, t: &QuadAut, a: &QuadElement) -> QuadElement {
        match t {
            QuadAut::Identity => a.clone(),
            QuadAut::Conjugation => self.conjugate(a),
        }
    }

    fn compose(&self, f: &QuadAut, g: &QuadAut) -> QuadAut {
        if f == g {
            QuadAut::Identity
        } else {
            QuadAut::Conjugation
        }
    }

    fn aut_inverse(&self, f: &QuadAut) -> QuadAut {
        *f
    }

    fn aut_eq(&self, f: &QuadAut, g: &QuadAut) -> bool {
        f == g
    }

    fn automorphism_group(&self) -> Option<Vec<QuadAut>> {
        Some(vec![QuadAut::Identity, QuadAut::Conjugation])
    }

    fn format_elem(&self, a: &QuadElement) -> String {
        a.to_string()
    }

    /// `x,y` or `x,y,b` for `x + y√b`, where `b` must lie in the square class
    /// of the radicand.
    fn parse_elem(&self, s: &str) -> Result<QuadElement> {
        let parts: Vec<&str> = s.split(',').collect();
        match parts.as_slice() {
            [x] => Ok(QuadElement::new(parse_rational(x)?, Rational::zero())),
            [x, y] => Ok(QuadElement::new(parse_rational(x)?, parse_rational(y)?)),
            [x, y, b] => {
                let b = parse_rational(b)?;
                let ratio = rational_sqrt(&(&b / self.radicand_rational())).ok_or_else(|| {
                    Error::Parse(format!(
                        "√{} does not lie in Q(√{})",
                        format_rational(&b),
                        self.a
                    ))
                })?;
                Ok(QuadElement::new(parse_rational(x)?, parse_rational(y)? * ratio))
            }
            _ => Err(Error::Parse(format!("bad quadratic element {s:?}"))),
        }
    }

    fn format_aut(&self, t: &QuadAut) -> String {
        match t {
            QuadAut::Identity => "id".into(),
            QuadAut::Conjugation => "conj".into(),
        }
    }

    fn random_elem(&self, rng: &mut dyn RngCore) -> QuadElement {
        QuadElement::new(RationalField.random(rng), RationalField.random(rng))
    }

    fn describe(&self) -> String {
        format!("quad({})", self.a)
    }
}
