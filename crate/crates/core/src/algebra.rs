//! Coefficient algebras: the associative algebras that get doubled.
//!
//! A [`CoeffAlgebra`] is a unital associative algebra of finite dimension over
//! a base [`Field`], together with a way to apply, compose and compare its
//! automorphisms. Finite fields, quadratic number fields, quadratic extensions
//! of Q_p and quaternion algebras all implement it.

use std::cmp::Ordering;
use std::fmt;

use rand::RngCore;

use crate::error::Result;
use crate::field::Field;

/// Outcome of a square-root query in a coefficient algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum SquareRoot<E> {
    Root(E),
    NotSquare,
    /// The algebra cannot decide (e.g. scalars in a quaternion algebra).
    Unknown,
}

impl<E> SquareRoot<E> {
    pub fn root(self) -> Option<E> {
        match self {
            SquareRoot::Root(r) => Some(r),
            _ => None,
        }
    }
}

pub type BaseElem<A> = <<A as CoeffAlgebra>::Base as Field>::Elem;

pub trait CoeffAlgebra: Clone + fmt::Debug + Send + Sync {
    type Base: Field;
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;
    type Aut: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn base(&self) -> Self::Base;
    /// Dimension over the base field.
    fn dim(&self) -> usize;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Two-sided inverse; `None` when `a` is not a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        let base = self.base();
        self.coords(a).iter().all(|x| base.is_zero(x))
    }

    fn eq_elem(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    fn scale(&self, s: &BaseElem<Self>, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.scalar(s), a)
    }

    /// Embedding of the base field.
    fn scalar(&self, s: &BaseElem<Self>) -> Self::Elem;

    /// The base-field value of `a` if `a` lies in the image of [`Self::scalar`].
    /// The first basis vector is always the unit.
    fn as_scalar(&self, a: &Self::Elem) -> Option<BaseElem<Self>> {
        let base = self.base();
        let c = self.coords(a);
        if c[1..].iter().all(|x| base.is_zero(x)) {
            Some(c[0].clone())
        } else {
            None
        }
    }

    fn coords(&self, a: &Self::Elem) -> Vec<BaseElem<Self>>;
    fn from_coords(&self, c: &[BaseElem<Self>]) -> Self::Elem;

    fn basis(&self) -> Vec<Self::Elem> {
        let base = self.base();
        (0..self.dim())
            .map(|i| {
                let v: Vec<_> = (0..self.dim())
                    .map(|j| if i == j { base.one() } else { base.zero() })
                    .collect();
                self.from_coords(&v)
            })
            .collect()
    }

    fn is_commutative(&self) -> bool;

    /// The reduced norm to the base field.
    fn norm(&self, a: &Self::Elem) -> BaseElem<Self>;

    fn square_root(&self, a: &Self::Elem) -> SquareRoot<Self::Elem>;

    fn identity_aut(&self) -> Self::Aut;
    fn apply(&self, t: &Self::Aut, a: &Self::Elem) -> Self::Elem;
    /// `f ∘ g`.
    fn compose(&self, f: &Self::Aut, g: &Self::Aut) -> Self::Aut;
    fn aut_inverse(&self, f: &Self::Aut) -> Self::Aut;

    /// Equality of automorphisms as maps (checked on a basis).
    fn aut_eq(&self, f: &Self::Aut, g: &Self::Aut) -> bool {
        self.basis()
            .iter()
            .all(|e| self.eq_elem(&self.apply(f, e), &self.apply(g, e)))
    }

    fn is_identity(&self, f: &Self::Aut) -> bool {
        self.aut_eq(f, &self.identity_aut())
    }

    /// The full group Aut_F(A) when it is finite and known.
    fn automorphism_group(&self) -> Option<Vec<Self::Aut>>;

    fn cmp_elem(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        let base = self.base();
        let (ca, cb) = (self.coords(a), self.coords(b));
        for (x, y) in ca.iter().zip(&cb) {
            match base.cmp_elem(x, y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    fn format_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn format_aut(&self, t: &Self::Aut) -> String;
    fn random_elem(&self, rng: &mut dyn RngCore) -> Self::Elem;
    /// Short spec string such as `gf(3,2;1,0,1)`.
    fn describe(&self) -> String;
}

/// Coefficient algebras with finitely many elements.
pub trait FiniteCoeffAlgebra: CoeffAlgebra {
    fn order(&self) -> u64;
    /// Every element, in lexicographic order of coordinates.
    fn elements(&self) -> Vec<Self::Elem>;
    /// Elements of the base field in the same order.
    fn base_elements(&self) -> Vec<BaseElem<Self>>;
}
