//! Zero divisors: exhaustive search over finite doublings, critical values
//! and the explicit witnesses attached to them.

use std::cmp::Ordering;

use rayon::prelude::*;

use super::{DicksonAlgebra, Variant};
use crate::algebra::{BaseElem, CoeffAlgebra, FiniteCoeffAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg;
use crate::verdict::{Pair, ZeroDivisorWitness};

/// Default cap on |D| for exhaustive searches.
pub const DEFAULT_MAX_EXHAUSTIVE: u64 = 1_000_000;

/// The cap on |D| for exhaustive searches, overridable through
/// `DICKSON_MAX_EXHAUSTIVE`.
pub fn max_exhaustive() -> u64 {
    std::env::var("DICKSON_MAX_EXHAUSTIVE")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_EXHAUSTIVE)
}

fn cmp_coords<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| f.cmp_elem(x, y))
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal)
}

impl<A: FiniteCoeffAlgebra> DicksonAlgebra<A> {
    /// Number of elements of D.
    pub fn order(&self) -> u64 {
        self.coeff().order().saturating_mul(self.coeff().order())
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> Vec<Pair<A::Elem>> {
        let els = self.coeff().elements();
        let mut out = Vec::with_capacity(els.len() * els.len());
        for u in &els {
            for v in &els {
                out.push(Pair::new(u.clone(), v.clone()));
            }
        }
        out
    }

    /// The lexicographically first nonzero element of the span of `basis`.
    fn lex_first_in_span(&self, basis: &[Vec<BaseElem<A>>]) -> Vec<BaseElem<A>> {
        let f = self.coeff().base();
        let scalars = self.coeff().base_elements();
        let n = self.dim();
        let k = basis.len();
        let p = scalars.len();
        let mut best: Option<Vec<BaseElem<A>>> = None;
        let mut digits = vec![0usize; k];
        loop {
            // next combination, skipping the all-zero one
            let mut i = k;
            loop {
                if i == 0 {
                    return best.expect("nonzero span");
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
            }
            let mut v = vec![f.zero(); n];
            for (d, b) in digits.iter().zip(basis) {
                if *d == 0 {
                    continue;
                }
                for (slot, x) in v.iter_mut().zip(b) {
                    *slot = f.add(slot, &f.mul(&scalars[*d], x));
                }
            }
            if best.as_ref().is_none_or(|b| cmp_coords(&f, &v, b) == Ordering::Less) {
                best = Some(v);
            }
        }
    }

    /// Coordinate basis of `{b : a b = 0}`.
    fn left_mult_kernel(&self, a: &Pair<A::Elem>) -> Vec<Vec<BaseElem<A>>> {
        let f = self.coeff().base();
        let cols: Vec<_> = self.basis().iter().map(|e| self.coords(&self.mul(a, e))).collect();
        linalg::kernel(&f, &linalg::columns_to_rows(&cols), self.dim())
    }
}

/// The lexicographically first pair (a, b) of nonzero elements with a·b = 0,
/// or `None` when D has no zero divisors. Refuses when |D| exceeds `cap`
/// (default [`max_exhaustive`]).
pub fn zero_divisor_search<A: FiniteCoeffAlgebra>(
    d: &DicksonAlgebra<A>,
    cap: Option<u64>,
) -> Result<Option<ZeroDivisorWitness<A::Elem>>> {
    let cap = cap.unwrap_or_else(max_exhaustive);
    let size = d.order();
    if size > cap {
        return Err(Error::SearchTooLarge { size, cap });
    }
    let els = d.coeff().elements();
    let q = els.len();
    let pair_at = |idx: usize| Pair::new(els[idx / q].clone(), els[idx % q].clone());
    let hit = (1..q * q).into_par_iter().find_map_first(|idx| {
        let a = pair_at(idx);
        let ker = d.left_mult_kernel(&a);
        (!ker.is_empty()).then_some((a, ker))
    });
    Ok(hit.map(|(left, ker)| {
        let right = d.from_coords(&d.lex_first_in_span(&ker));
        ZeroDivisorWitness { left, right }
    }))
}

/// Plain scan over all pairs of nonzero elements.
pub fn brute_force_zero_divisor<A: FiniteCoeffAlgebra>(
    d: &DicksonAlgebra<A>,
    cap: Option<u64>,
) -> Result<Option<ZeroDivisorWitness<A::Elem>>> {
    let cap = cap.unwrap_or_else(max_exhaustive);
    let size = d.order().saturating_mul(d.order());
    if size > cap {
        return Err(Error::SearchTooLarge { size, cap });
    }
    let els = d.elements();
    for a in els.iter().skip(1) {
        for b in els.iter().skip(1) {
            if d.is_zero(&d.mul(a, b)) {
                return Ok(Some(ZeroDivisorWitness { left: a.clone(), right: b.clone() }));
            }
        }
    }
    Ok(None)
}

/// The critical value of (r, s, t) for the given variant:
///
/// * commutative: `r² s σ(s)⁻¹ t⁻¹ σ(t)⁻¹`
/// * left: `r t⁻¹ r s σ(s⁻¹ t⁻¹)`
/// * middle: `σ(t)⁻¹ r t⁻¹ r s σ(s)⁻¹`
/// * right: `σ(s⁻¹ t⁻¹) r t⁻¹ r s`
pub fn critical_value<A: CoeffAlgebra>(
    coeff: &A,
    sigma: &A::Aut,
    variant: Variant,
    r: &A::Elem,
    s: &A::Elem,
    t: &A::Elem,
) -> Result<A::Elem> {
    let inv = |x: &A::Elem| coeff.inv(x).ok_or(Error::NotInvertible);
    let sg = |x: &A::Elem| coeff.apply(sigma, x);
    let m = |x: &A::Elem, y: &A::Elem| coeff.mul(x, y);
    inv(r)?;
    let (si, ti) = (inv(s)?, inv(t)?);
    let rtirs = m(&m(&m(r, &ti), r), s);
    Ok(match variant {
        Variant::Commutative => {
            let sig_s_inv = inv(&sg(s))?;
            let sig_t_inv = inv(&sg(t))?;
            m(&m(&m(&m(r, r), s), &m(&sig_s_inv, &ti)), &sig_t_inv)
        }
        Variant::Left => m(&rtirs, &sg(&m(&si, &ti))),
        Variant::Middle => m(&m(&inv(&sg(t))?, &rtirs), &inv(&sg(s))?),
        Variant::Right => m(&sg(&m(&si, &ti)), &rtirs),
    })
}

/// The pair attached to (r, s, t): `(r, t)(−r s t⁻¹, s)` for the commutative
/// variant and `(r, t)(−t⁻¹ r s, s)` otherwise.
pub fn theorem_pair<A: CoeffAlgebra>(
    coeff: &A,
    variant: Variant,
    r: &A::Elem,
    s: &A::Elem,
    t: &A::Elem,
) -> Result<ZeroDivisorWitness<A::Elem>> {
    let ti = coeff.inv(t).ok_or(Error::NotInvertible)?;
    let x = match variant {
        Variant::Commutative => coeff.mul(&coeff.mul(r, s), &ti),
        _ => coeff.mul(&coeff.mul(&ti, r), s),
    };
    Ok(ZeroDivisorWitness {
        left: Pair::new(r.clone(), t.clone()),
        right: Pair::new(coeff.neg(&x), s.clone()),
    })
}

/// Checks that c is the critical value of (r, s, t) and returns the attached
/// pair after confirming that its product is exactly zero.
pub fn theorem_zero_divisor_witness<A: CoeffAlgebra>(
    d: &DicksonAlgebra<A>,
    r: &A::Elem,
    s: &A::Elem,
    t: &A::Elem,
) -> Result<ZeroDivisorWitness<A::Elem>> {
    let k = d.coeff();
    let crit = critical_value(k, d.sigma(), d.variant(), r, s, t)?;
    if !k.eq_elem(&crit, d.c()) {
        return Err(Error::CriticalValueMismatch);
    }
    let w = theorem_pair(k, d.variant(), r, s, t)?;
    if !d.is_zero(&d.mul(&w.left, &w.right)) {
        return Err(Error::Inconsistent("critical pair has nonzero product".into()));
    }
    Ok(w)
}

fn sorted_unique<A: CoeffAlgebra>(k: &A, mut v: Vec<A::Elem>) -> Vec<A::Elem> {
    v.sort_by(|a, b| k.cmp_elem(a, b));
    v.dedup_by(|a, b| k.eq_elem(a, b));
    v
}

/// All critical values of D's variant and σ, sorted and without repeats.
///
/// Over a commutative coefficient algebra the set factors as
/// `{r²} · {s/σ(s)} · {1/(tσ(t))}`; otherwise all triples are enumerated.
pub fn critical_set<A: FiniteCoeffAlgebra>(d: &DicksonAlgebra<A>) -> Vec<A::Elem> {
    let k = d.coeff();
    let units: Vec<A::Elem> = k.elements().into_iter().filter(|x| !k.is_zero(x)).collect();
    if !k.is_commutative() {
        return critical_set_exhaustive(d);
    }
    let sg = |x: &A::Elem| d.sigma_apply(x);
    let squares = sorted_unique(k, units.iter().map(|r| k.mul(r, r)).collect());
    let ratios = sorted_unique(
        k,
        units.iter().map(|s| k.mul(s, &k.inv(&sg(s)).expect("unit"))).collect(),
    );
    let norms = sorted_unique(
        k,
        units.iter().map(|t| k.inv(&k.mul(t, &sg(t))).expect("unit")).collect(),
    );
    let mut acc = squares;
    for factor in [ratios, norms] {
        let prod = acc
            .iter()
            .flat_map(|a| factor.iter().map(move |b| k.mul(a, b)))
            .collect();
        acc = sorted_unique(k, prod);
    }
    acc
}

/// Direct enumeration over all triples of units.
pub fn critical_set_exhaustive<A: FiniteCoeffAlgebra>(d: &DicksonAlgebra<A>) -> Vec<A::Elem> {
    let k = d.coeff();
    let units: Vec<A::Elem> = k.elements().into_iter().filter(|x| !k.is_zero(x)).collect();
    let mut out = Vec::new();
    for r in &units {
        for s in &units {
            for t in &units {
                out.push(
                    critical_value(k, d.sigma(), d.variant(), r, s, t).expect("units invert"),
                );
            }
        }
    }
    sorted_unique(k, out)
}
