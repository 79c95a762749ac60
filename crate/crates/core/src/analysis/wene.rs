//! The inner map built from λ = (0, 1) and its left inverse.
//!
//! With ℓ the left inverse of λ, the bracketing (ℓz)λ equals (σ(x), σ(y))
//! for every c, and that map is an automorphism iff σ(c) = c. The other
//! bracketing ℓ(zλ) = (σ(x), σ(y)cσ⁻¹(c)⁻¹) equals (σ(x), σ(y)) iff σ(c) = c.
//! Both are reported.

use super::automorphisms::{apply_descriptor, enumerate_automorphisms, is_homomorphism, AutomorphismDescriptor};
use crate::algebra::CoeffAlgebra;
use crate::dickson::DicksonAlgebra;
use crate::error::{Error, Result};
use crate::verdict::Pair;

#[derive(Debug, Clone)]
pub struct WeneReport<E> {
    pub sigma_fixes_c: bool,
    /// ℓ with ℓλ = 1.
    pub left_inverse: Pair<E>,
    /// z ↦ (ℓz)λ agrees with (σ(x), σ(y)) on a basis.
    pub phi_is_sigma_sigma: bool,
    /// z ↦ (ℓz)λ is multiplicative on a basis.
    pub phi_is_automorphism: bool,
    /// (σ, 1) is in the enumerated automorphism group, when enumerable.
    pub phi_in_enumerated: Option<bool>,
    /// z ↦ ℓ(zλ) agrees with (σ(x), σ(y)) on a basis.
    pub alt_is_sigma_sigma: bool,
    /// phi_is_automorphism and alt_is_sigma_sigma both match sigma_fixes_c.
    pub consistent: bool,
}

pub fn wene_inner_check<A: CoeffAlgebra>(d: &DicksonAlgebra<A>) -> Result<WeneReport<A::Elem>> {
    let k = d.coeff();
    let lambda = d.lambda();
    let ell = d.left_inverse(&lambda).ok_or(Error::NoLeftInverse)?;
    let sigma_fixes_c = k.eq_elem(&d.sigma_apply(d.c()), d.c());
    let ss = AutomorphismDescriptor { tau: d.sigma().clone(), b: k.one() };
    let basis = d.basis();
    let agrees = |f: &dyn Fn(&Pair<A::Elem>) -> Pair<A::Elem>| {
        basis.iter().all(|z| d.eq(&f(z), &apply_descriptor(k, &ss, z)))
    };
    let phi = |z: &Pair<A::Elem>| d.mul(&d.mul(&ell, z), &lambda);
    let alt = |z: &Pair<A::Elem>| d.mul(&ell, &d.mul(z, &lambda));
    let phi_is_sigma_sigma = agrees(&phi);
    let alt_is_sigma_sigma = agrees(&alt);
    // Multiplicativity of z ↦ (ℓz)λ on basis pairs.
    let phi_is_automorphism = basis.iter().all(|x| {
        basis.iter().all(|y| d.eq(&phi(&d.mul(x, y)), &d.mul(&phi(x), &phi(y))))
    });
    debug_assert!(!phi_is_sigma_sigma || phi_is_automorphism == is_homomorphism(d, d, &ss));
    let phi_in_enumerated = k.automorphism_group().map(|_| {
        enumerate_automorphisms(d, None)
            .map(|g| g.elements.iter().any(|h| k.aut_eq(&h.tau, &ss.tau) && k.eq_elem(&h.b, &ss.b)))
            .unwrap_or(false)
    });
    let consistent = phi_is_automorphism == sigma_fixes_c && alt_is_sigma_sigma == sigma_fixes_c;
    Ok(WeneReport {
        sigma_fixes_c,
        left_inverse: ell,
        phi_is_sigma_sigma,
        phi_is_automorphism,
        phi_in_enumerated,
        alt_is_sigma_sigma,
        consistent,
    })
}
