//! The scalar-field interface shared by every base field in the crate.
//!
//! Fields are runtime structures: elements are plain values and every
//! operation goes through the structure (`k.mul(&a, &b)`), so fields whose
//! parameters are only known at runtime (GF(p^n), Q_p at a given precision)
//! need no global state.

use std::cmp::Ordering;
use std::fmt;

use rand::RngCore;

use crate::error::Result;

pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, &self.one()))
    }

    fn eq_elem(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    /// 0 for Q and Q_p.
    fn characteristic(&self) -> u64;

    /// Whether `a` is a square in this field. Zero counts as a square.
    fn has_square_root(&self, a: &Self::Elem) -> bool;

    /// Some square root of `a`, if one exists.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// A fixed total order used for canonical output.
    fn cmp_elem(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;

    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;
}
