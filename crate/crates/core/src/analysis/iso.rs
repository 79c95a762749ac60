//! Isomorphism tests between doubles via maps G(x, y) = (τ(x), τ(y)b).

use super::automorphisms::{is_homomorphism, AutomorphismDescriptor, Descriptor};
use crate::algebra::{CoeffAlgebra, SquareRoot};
use crate::dickson::{DicksonAlgebra, Variant};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq)]
pub enum IsoVerdict<T, E> {
    Isomorphic { witness: AutomorphismDescriptor<T, E> },
    NotIsomorphic { reason: String },
    Unknown { reason: String },
}

impl<T, E> IsoVerdict<T, E> {
    pub fn label(&self) -> &'static str {
        match self {
            IsoVerdict::Isomorphic { .. } => "isomorphic",
            IsoVerdict::NotIsomorphic { .. } => "not-isomorphic",
            IsoVerdict::Unknown { .. } => "unknown",
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic { .. })
    }

    pub fn is_not_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::NotIsomorphic { .. })
    }

    pub fn reason(&self) -> String {
        match self {
            IsoVerdict::Isomorphic { .. } => "G(x, y) = (τ(x), τ(y)b) is multiplicative on a basis".into(),
            IsoVerdict::NotIsomorphic { reason } | IsoVerdict::Unknown { reason } => reason.clone(),
        }
    }
}

pub type Iso<A> = IsoVerdict<<A as CoeffAlgebra>::Aut, <A as CoeffAlgebra>::Elem>;

/// Candidate b for τ: φ(b)² = τ(c)d⁻¹ in K (commutative coefficients) or
/// b² = d⁻¹τ(c) with b in the base field. `Err(())` when the root is undecided.
fn iso_roots<A: CoeffAlgebra>(
    src: &DicksonAlgebra<A>,
    dst: &DicksonAlgebra<A>,
    tau: &A::Aut,
) -> Result<Vec<A::Elem>, ()> {
    let k = src.coeff();
    let Some(d_inv) = k.inv(dst.c()) else {
        return Ok(Vec::new());
    };
    let tc = k.apply(tau, src.c());
    let b = if k.is_commutative() {
        match k.square_root(&k.mul(&tc, &d_inv)) {
            SquareRoot::Root(w) => k.apply(&k.aut_inverse(dst.sigma()), &w),
            SquareRoot::NotSquare => return Ok(Vec::new()),
            SquareRoot::Unknown => return Err(()),
        }
    } else {
        let Some(s) = k.as_scalar(&k.mul(&d_inv, &tc)) else {
            return Ok(Vec::new());
        };
        let f = k.base();
        match f.sqrt(&s) {
            Some(r) => k.scalar(&r),
            None if f.has_square_root(&s) => return Err(()),
            None => return Ok(Vec::new()),
        }
    };
    let mut roots = vec![b.clone(), k.neg(&b)];
    roots.sort_by(|x, y| k.cmp_elem(x, y));
    roots.dedup_by(|x, y| k.eq_elem(x, y));
    Ok(roots)
}

/// Searches τ with φτ = τσ over `taus` (or the full automorphism group) and
/// the matching b, verifying each candidate on a basis. No obstructions are
/// tried here; see [`iso_test`].
pub fn iso_search<A: CoeffAlgebra>(
    src: &DicksonAlgebra<A>,
    dst: &DicksonAlgebra<A>,
    taus: Option<&[A::Aut]>,
) -> Iso<A> {
    let k = src.coeff();
    let (candidates, from_group) = match taus {
        Some(t) => (t.to_vec(), false),
        None => match k.automorphism_group() {
            Some(g) => (g, true),
            None => {
                return IsoVerdict::Unknown {
                    reason: format!("{} has no finite automorphism list; supply witnesses", k.describe()),
                }
            }
        },
    };
    let mut undecided = false;
    for tau in &candidates {
        let lhs = k.compose(dst.sigma(), tau);
        let rhs = k.compose(tau, src.sigma());
        if !k.aut_eq(&lhs, &rhs) {
            continue;
        }
        let Ok(roots) = iso_roots(src, dst, tau) else {
            undecided = true;
            continue;
        };
        for b in roots {
            let g = AutomorphismDescriptor { tau: tau.clone(), b };
            if is_homomorphism(src, dst, &g) {
                return IsoVerdict::Isomorphic { witness: g };
            }
        }
    }
    // Every isomorphism has the searched form when char F ≠ 2, σ and φ are
    // nontrivial, and the middle nucleus is the whole coefficient algebra.
    let nontrivial = !src.sigma_is_identity() && !dst.sigma_is_identity();
    let same_shape = src.variant() == dst.variant()
        && (k.is_commutative() || src.variant() != Variant::Middle);
    let odd = k.base().characteristic() != 2;
    if from_group && !undecided && nontrivial && same_shape && odd {
        IsoVerdict::NotIsomorphic {
            reason: format!(
                "no τ among {} automorphisms satisfies φτ = τσ with a root b",
                candidates.len()
            ),
        }
    } else {
        let why = if undecided {
            "a square root could not be decided"
        } else if !from_group {
            "search limited to supplied witnesses"
        } else if !nontrivial {
            "σ = id admits isomorphisms of other forms"
        } else if !odd {
            "characteristic 2 admits isomorphisms of other forms"
        } else {
            "isomorphisms of the middle variant need not have the searched form"
        };
        IsoVerdict::Unknown { reason: format!("no witness found; {why}") }
    }
}

/// Full test: presentation check, nucleus-dimension obstruction, then
/// [`iso_search`].
pub fn iso_test<A: CoeffAlgebra>(
    src: &DicksonAlgebra<A>,
    dst: &DicksonAlgebra<A>,
    taus: Option<&[A::Aut]>,
) -> Iso<A> {
    if src.dim() != dst.dim() {
        return IsoVerdict::NotIsomorphic {
            reason: format!("dimensions differ: {} vs {}", src.dim(), dst.dim()),
        };
    }
    let (ks, kd) = (src.coeff().describe(), dst.coeff().describe());
    if ks != kd {
        return IsoVerdict::Unknown {
            reason: format!("coefficient algebras {ks} and {kd} are different presentations"),
        };
    }
    iso_test_with_dims(src, dst, src.nuclei().dims(), dst.nuclei().dims(), taus)
}

/// [`iso_test`] with precomputed nucleus dimensions, for repeated use.
pub fn iso_test_with_dims<A: CoeffAlgebra>(
    src: &DicksonAlgebra<A>,
    dst: &DicksonAlgebra<A>,
    src_dims: [usize; 6],
    dst_dims: [usize; 6],
    taus: Option<&[A::Aut]>,
) -> Iso<A> {
    if src_dims != dst_dims {
        return IsoVerdict::NotIsomorphic {
            reason: format!("nucleus dimensions differ: {src_dims:?} vs {dst_dims:?}"),
        };
    }
    iso_search(src, dst, taus)
}

/// Checks a caller-supplied witness G: D → D′.
pub fn verify_iso_witness<A: CoeffAlgebra>(
    src: &DicksonAlgebra<A>,
    dst: &DicksonAlgebra<A>,
    g: &Descriptor<A>,
) -> bool {
    src.coeff().inv(&g.b).is_some() && is_homomorphism(src, dst, g)
}
