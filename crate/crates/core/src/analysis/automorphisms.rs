//! Automorphisms G(x, y) = (τ(x), τ(y)b) of a double, their enumeration, and
//! an independent generator-image oracle over finite fields.

use std::cmp::Ordering;

use rayon::prelude::*;

use super::subgroups::{commutes, j_root, subgroups};
use crate::algebra::CoeffAlgebra;
use crate::dickson::{max_exhaustive, DicksonAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::finite_field::{FieldElement, FiniteField};
use crate::linalg;
use crate::verdict::Pair;

/// The map G(x, y) = (τ(x), τ(y)b).
#[derive(Debug, Clone, PartialEq)]
pub struct AutomorphismDescriptor<T, E> {
    pub tau: T,
    pub b: E,
}

pub type Descriptor<A> = AutomorphismDescriptor<<A as CoeffAlgebra>::Aut, <A as CoeffAlgebra>::Elem>;

#[derive(Debug, Clone)]
pub struct AutGroupReport<T, E> {
    pub elements: Vec<AutomorphismDescriptor<T, E>>,
    /// False when τ ranged over caller-supplied witnesses only.
    pub complete: bool,
    /// 2|J(c) ∩ C(σ)| over the examined τ.
    pub expected_order: usize,
    /// `table[i][j]` = index of `elements[i] ∘ elements[j]`, when closed.
    pub table: Option<Vec<Vec<usize>>>,
    pub table_is_group: bool,
}

impl<T, E> AutGroupReport<T, E> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

pub fn apply_descriptor<A: CoeffAlgebra>(
    k: &A,
    g: &Descriptor<A>,
    p: &Pair<A::Elem>,
) -> Pair<A::Elem> {
    Pair::new(k.apply(&g.tau, &p.u), k.mul(&k.apply(&g.tau, &p.v), &g.b))
}

/// G ∘ H = (τ_G τ_H, τ_G(b_H) b_G).
pub fn compose_descriptors<A: CoeffAlgebra>(
    k: &A,
    g: &Descriptor<A>,
    h: &Descriptor<A>,
) -> Descriptor<A> {
    AutomorphismDescriptor {
        tau: k.compose(&g.tau, &h.tau),
        b: k.mul(&k.apply(&g.tau, &h.b), &g.b),
    }
}

pub fn descriptor_eq<A: CoeffAlgebra>(k: &A, g: &Descriptor<A>, h: &Descriptor<A>) -> bool {
    k.aut_eq(&g.tau, &h.tau) && k.eq_elem(&g.b, &h.b)
}

/// Checks G(pq) = G(p)G(q) on all pairs of basis elements, multiplying in
/// `src` before applying G and in `dst` after.
pub fn is_homomorphism<A: CoeffAlgebra>(
    src: &DicksonAlgebra<A>,
    dst: &DicksonAlgebra<A>,
    g: &Descriptor<A>,
) -> bool {
    let k = src.coeff();
    if k.inv(&g.b).is_none() {
        return false;
    }
    let basis = src.basis();
    let images: Vec<_> = basis.iter().map(|e| apply_descriptor(k, g, e)).collect();
    basis.iter().zip(&images).all(|(x, gx)| {
        basis.iter().zip(&images).all(|(y, gy)| {
            dst.eq(&apply_descriptor(k, g, &src.mul(x, y)), &dst.mul(gx, gy))
        })
    })
}

/// The b values for τ: solutions of σ(b)² = τ(c)c⁻¹ in K (commutative
/// coefficients) or of b² = c⁻¹τ(c) in the base field (otherwise), sorted.
pub fn b_roots<A: CoeffAlgebra>(d: &DicksonAlgebra<A>, tau: &A::Aut) -> Vec<A::Elem> {
    let k = d.coeff();
    let Some(w) = j_root(k, tau, d.c()) else {
        return Vec::new();
    };
    let b = if k.is_commutative() {
        k.apply(&k.aut_inverse(d.sigma()), &w)
    } else {
        w
    };
    let mut roots = vec![b.clone(), k.neg(&b)];
    roots.sort_by(|x, y| k.cmp_elem(x, y));
    roots.dedup_by(|x, y| k.eq_elem(x, y));
    roots
}

/// All automorphisms given by τ ∈ J(c) ∩ C(σ), each re-verified on a basis.
/// τ ranges over the full automorphism group, or over `taus` when supplied.
pub fn enumerate_automorphisms<A: CoeffAlgebra>(
    d: &DicksonAlgebra<A>,
    taus: Option<&[A::Aut]>,
) -> Result<AutGroupReport<A::Aut, A::Elem>> {
    let k = d.coeff();
    let sub = subgroups(d, taus).ok_or_else(|| {
        Error::Unsupported(format!("{} has no finite automorphism list; supply witnesses", k.describe()))
    })?;
    let mut elements = Vec::new();
    for tau in &sub.aut {
        if !commutes(k, tau, d.sigma()) {
            continue;
        }
        for b in b_roots(d, tau) {
            let g = AutomorphismDescriptor { tau: tau.clone(), b };
            if is_homomorphism(d, d, &g) {
                elements.push(g);
            }
        }
    }
    let table = composition_table(k, &elements);
    let table_is_group = table.as_ref().is_some_and(|t| table_is_group(k, &elements, t));
    Ok(AutGroupReport {
        elements,
        complete: sub.complete,
        expected_order: 2 * sub.intersection.len(),
        table,
        table_is_group,
    })
}

fn composition_table<A: CoeffAlgebra>(k: &A, els: &[Descriptor<A>]) -> Option<Vec<Vec<usize>>> {
    els.iter()
        .map(|g| {
            els.iter()
                .map(|h| {
                    let gh = compose_descriptors(k, g, h);
                    els.iter().position(|x| descriptor_eq(k, x, &gh))
                })
                .collect()
        })
        .collect()
}

fn table_is_group<A: CoeffAlgebra>(k: &A, els: &[Descriptor<A>], t: &[Vec<usize>]) -> bool {
    let id = AutomorphismDescriptor { tau: k.identity_aut(), b: k.one() };
    let Some(e) = els.iter().position(|x| descriptor_eq(k, x, &id)) else {
        return false;
    };
    let n = els.len();
    let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])));
    let unit = (0..n).all(|a| t[e][a] == a && t[a][e] == a);
    let inverses = (0..n).all(|a| (0..n).any(|b| t[a][b] == e && t[b][a] == e));
    assoc && unit && inverses
}

/// Bounds 2|C(σ) ∩ Aut(K)_c| ≤ |Aut(D)| ≤ 2|C(σ)|.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AutBounds {
    pub lower: usize,
    pub order: usize,
    pub upper: usize,
    pub holds: bool,
    /// For prime [K : F] = p: whether |Aut(D)| ∈ {2, 2p}.
    pub prime_degree_ok: Option<bool>,
}

pub fn aut_bounds_check<A: CoeffAlgebra>(d: &DicksonAlgebra<A>) -> Result<AutBounds> {
    let k = d.coeff();
    let sub = subgroups(d, None)
        .ok_or_else(|| Error::Unsupported("automorphism bounds need a finite automorphism group".into()))?;
    let group = enumerate_automorphisms(d, None)?;
    let lower = 2 * sub
        .c_sigma
        .iter()
        .filter(|t| k.eq_elem(&k.apply(t, d.c()), d.c()))
        .count();
    let upper = 2 * sub.c_sigma.len();
    let order = group.order();
    let n = sub.aut.len();
    let prime_degree_ok = (n >= 2 && (2..n).all(|q| n % q != 0)).then(|| order == 2 || order == 2 * n);
    Ok(AutBounds { lower, order, upper, holds: lower <= order && order <= upper, prime_degree_ok })
}

/// Images of the basis under a linear map of D.
pub type BasisImages = Vec<Pair<FieldElement>>;

fn images_key(images: &BasisImages) -> Vec<u32> {
    images.iter().flat_map(|p| [p.u.value(), p.v.value()]).collect()
}

pub fn descriptor_images(d: &DicksonAlgebra<FiniteField>, g: &Descriptor<FiniteField>) -> BasisImages {
    d.basis().iter().map(|e| apply_descriptor(d.coeff(), g, e)).collect()
}

/// Every automorphism of D over a finite field, found without the structure
/// theorem: G is fixed by X = G(x, 0) and Y = G(0, 1), where x generates K.
/// X must be a root of the modulus (powers taken as X·X^(k−1)), Y must square to
/// G(c, 0), and the resulting linear map must be bijective and multiplicative.
pub fn oracle_automorphisms(d: &DicksonAlgebra<FiniteField>) -> Result<Vec<BasisImages>> {
    let k = d.coeff();
    let cap = max_exhaustive();
    let size = d.order();
    if size > cap {
        return Err(Error::SearchTooLarge { size, cap });
    }
    let f = CoeffAlgebra::base(k);
    let n = k.degree() as usize;
    let modulus: Vec<FieldElement> =
        k.modulus().iter().map(|m| f.from_i64(*m as i64)).collect();
    let all = d.elements();

    let powers = |x: &Pair<FieldElement>| -> Vec<Pair<FieldElement>> {
        let mut out = vec![d.one()];
        for i in 1..=n {
            out.push(d.mul(x, &out[i - 1]));
        }
        out
    };
    let combo = |coeffs: &[FieldElement], pw: &[Pair<FieldElement>]| -> Pair<FieldElement> {
        coeffs
            .iter()
            .zip(pw)
            .fold(d.zero(), |acc, (a, p)| d.add(&acc, &d.scale(a, p)))
    };

    let xs: Vec<(Pair<FieldElement>, Vec<Pair<FieldElement>>)> = all
        .par_iter()
        .filter_map(|x| {
            let pw = powers(x);
            d.is_zero(&combo(&modulus, &pw)).then(|| (x.clone(), pw))
        })
        .collect();
    let c_coords = k.coords(d.c());

    let mut found: Vec<BasisImages> = xs
        .par_iter()
        .flat_map_iter(|(_, pw)| {
            let gc = combo(&c_coords, pw);
            all.iter()
                .filter(|y| d.eq(&d.mul(y, y), &gc))
                .filter_map(|y| {
                    let mut images: BasisImages = pw[..n].to_vec();
                    images.extend(pw[..n].iter().map(|p| d.mul(p, y)));
                    is_linear_automorphism(d, &images).then_some(images)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    found.sort_by_key(images_key);
    Ok(found)
}

fn is_linear_automorphism(d: &DicksonAlgebra<FiniteField>, images: &BasisImages) -> bool {
    let f = CoeffAlgebra::base(d.coeff());
    let rows: Vec<_> = images.iter().map(|p| d.coords(p)).collect();
    if linalg::rank(&f, &rows, d.dim()) != d.dim() {
        return false;
    }
    let apply = |p: &Pair<FieldElement>| {
        d.coords(p)
            .iter()
            .zip(images)
            .fold(d.zero(), |acc, (a, img)| d.add(&acc, &d.scale(a, img)))
    };
    let basis = d.basis();
    basis.iter().zip(images).all(|(x, gx)| {
        basis
            .iter()
            .zip(images)
            .all(|(y, gy)| d.eq(&apply(&d.mul(x, y)), &d.mul(gx, gy)))
    })
}

/// Compares the enumerated group with the oracle as sets of linear maps.
pub fn enumeration_matches_oracle(
    d: &DicksonAlgebra<FiniteField>,
    report: &AutGroupReport<<FiniteField as CoeffAlgebra>::Aut, FieldElement>,
    oracle: &[BasisImages],
) -> bool {
    let mut mine: Vec<BasisImages> = report.elements.iter().map(|g| descriptor_images(d, g)).collect();
    mine.sort_by_key(images_key);
    mine.len() == oracle.len()
        && mine.iter().zip(oracle).all(|(a, b)| images_key(a).cmp(&images_key(b)) == Ordering::Equal)
}
