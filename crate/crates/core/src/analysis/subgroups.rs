//! The subgroups J(c), C(σ) and Aut(K)_c of the coefficient automorphisms.

use crate::algebra::{CoeffAlgebra, SquareRoot};
use crate::dickson::DicksonAlgebra;
use crate::field::Field;

#[derive(Debug, Clone)]
pub struct SubgroupReport<T> {
    /// The automorphisms examined (all of them when `complete`).
    pub aut: Vec<T>,
    pub complete: bool,
    pub j_c: Vec<T>,
    pub c_sigma: Vec<T>,
    pub intersection: Vec<T>,
    pub isotropy: Vec<T>,
    /// Closure under composition and inverses, in the order J, C, J ∩ C,
    /// isotropy. Only meaningful when `complete`.
    pub closed: [bool; 4],
}

impl<T> SubgroupReport<T> {
    pub fn orders(&self) -> [usize; 5] {
        [
            self.aut.len(),
            self.j_c.len(),
            self.c_sigma.len(),
            self.intersection.len(),
            self.isotropy.len(),
        ]
    }
}

/// Does τ commute with σ?
pub fn commutes<A: CoeffAlgebra>(k: &A, tau: &A::Aut, sigma: &A::Aut) -> bool {
    k.aut_eq(&k.compose(tau, sigma), &k.compose(sigma, tau))
}

/// A square root of `c⁻¹ τ(c)`: in K for commutative coefficients, in the
/// base field otherwise. `None` when τ ∉ J(c) (or membership is undecided).
pub fn j_root<A: CoeffAlgebra>(k: &A, tau: &A::Aut, c: &A::Elem) -> Option<A::Elem> {
    let target = k.mul(&k.inv(c)?, &k.apply(tau, c));
    if k.is_commutative() {
        match k.square_root(&target) {
            SquareRoot::Root(r) => Some(r),
            _ => None,
        }
    } else {
        let s = k.as_scalar(&target)?;
        let f = k.base();
        f.sqrt(&s).map(|r| k.scalar(&r))
    }
}

pub fn in_j<A: CoeffAlgebra>(k: &A, tau: &A::Aut, c: &A::Elem) -> bool {
    j_root(k, tau, c).is_some()
}

fn is_subgroup<A: CoeffAlgebra>(k: &A, s: &[A::Aut]) -> bool {
    let has = |t: &A::Aut| s.iter().any(|x| k.aut_eq(x, t));
    has(&k.identity_aut())
        && s.iter().all(|a| has(&k.aut_inverse(a)) && s.iter().all(|b| has(&k.compose(a, b))))
}

/// Membership of each automorphism in J(c), C(σ), and the isotropy group of
/// c. Uses the full automorphism group when `taus` is `None`.
pub fn subgroups<A: CoeffAlgebra>(
    d: &DicksonAlgebra<A>,
    taus: Option<&[A::Aut]>,
) -> Option<SubgroupReport<A::Aut>> {
    let k = d.coeff();
    let (aut, complete) = match taus {
        Some(t) => (t.to_vec(), false),
        None => (k.automorphism_group()?, true),
    };
    let keep = |pred: &dyn Fn(&A::Aut) -> bool| -> Vec<A::Aut> {
        aut.iter().filter(|t| pred(t)).cloned().collect()
    };
    let j_c = keep(&|t| in_j(k, t, d.c()));
    let c_sigma = keep(&|t| commutes(k, t, d.sigma()));
    let intersection = keep(&|t| in_j(k, t, d.c()) && commutes(k, t, d.sigma()));
    let isotropy = keep(&|t| k.eq_elem(&k.apply(t, d.c()), d.c()));
    let closed = [&j_c, &c_sigma, &intersection, &isotropy].map(|s| is_subgroup(k, s));
    Some(SubgroupReport { aut, complete, j_c, c_sigma, intersection, isotropy, closed })
}
