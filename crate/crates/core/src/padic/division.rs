//! Division decisions for D(K, σ, c) with K a quadratic extension of Q_p and
//! σ its conjugation.

use super::ext::{PadicQuadElem, PadicQuadExt};
use super::number::{legendre_u64, PadicNumber};
use crate::error::{Error, Result};
use crate::verdict::{DivisionVerdict, Pair, ZeroDivisorWitness};

/// (s, t)_p for nonzero p-adic numbers, p odd.
pub fn padic_hilbert_symbol(s: &PadicNumber, t: &PadicNumber) -> Result<i8> {
    let (alpha, beta) = match (s.valuation(), t.valuation()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroInput),
    };
    let p = s.p();
    let mut sign: i8 = 1;
    if alpha.rem_euclid(2) == 1 && beta.rem_euclid(2) == 1 && p % 4 == 3 {
        sign = -sign;
    }
    if beta.rem_euclid(2) == 1 {
        sign *= legendre_u64(s.residue(), p);
    }
    if alpha.rem_euclid(2) == 1 {
        sign *= legendre_u64(t.residue(), p);
    }
    Ok(sign)
}

/// Local norm test: s ∈ N(K^×) iff (s, α²)_p = 1.
pub fn is_norm_from_ext(s: &PadicNumber, k: &PadicQuadExt) -> Result<bool> {
    Ok(padic_hilbert_symbol(s, k.alpha_squared())? == 1)
}

/// Searches x² − α²y² = m with y = p^e·j for small e and j.
pub fn find_norm_solution_padic(m: &PadicNumber, k: &PadicQuadExt) -> Option<PadicQuadElem> {
    let base = k.base_field();
    let d = k.alpha_squared();
    let p = base.p() as i64;
    if let Some(x) = base.padic_sqrt(m) {
        return Some(k.elem(x, base.zero_elem()));
    }
    let vm = m.valuation()?;
    for e in (vm.div_euclid(2) - 1)..=(vm.div_euclid(2) + 1) {
        for j in 1..(4 * p) {
            let y = base.from_parts(e, &j.into());
            let target = base.add_elem(m, &base.mul_elem(d, &base.mul_elem(&y, &y)));
            if target.is_zero() {
                continue;
            }
            if let Some(x) = base.padic_sqrt(&target) {
                return Some(k.elem(x, y));
            }
        }
    }
    None
}

/// Exact decision (at the working precision): not division iff N(c) = r²
/// with r or −r a local norm.
pub fn padic_division_decision(
    k: &PadicQuadExt,
    c: &PadicQuadElem,
) -> Result<DivisionVerdict<PadicQuadElem>> {
    let base = k.base_field();
    if k.ext_is_zero(c) {
        return Err(Error::ZeroConstant);
    }
    if let Some(r) = k.ext_sqrt(c) {
        let one = k.one_elem();
        return Ok(DivisionVerdict::ProvedNotDivision {
            reason: "c is a square in K".into(),
            witness: Some(ZeroDivisorWitness {
                left: Pair::new(r.clone(), one.clone()),
                right: Pair::new(k.ext_neg(&r), one),
            }),
        });
    }
    let n = k.ext_norm(c);
    if n.is_zero() {
        return Err(Error::PrecisionExhausted);
    }
    let Some(r) = base.padic_sqrt(&n) else {
        return Ok(DivisionVerdict::ProvedDivision {
            reason: format!("N(c) = {} is not a square in Q_{}", base.format_elem(&n), base.p()),
        });
    };
    for cand in [r.clone(), base.neg_elem(&r)] {
        if !is_norm_from_ext(&cand, k)? {
            continue;
        }
        return Ok(DivisionVerdict::ProvedNotDivision {
            reason: format!(
                "N(c) = r² with r = {} and {} a norm from K",
                base.format_elem(&r),
                base.format_elem(&cand)
            ),
            witness: norm_witness(k, c, &cand),
        });
    }
    Ok(DivisionVerdict::ProvedDivision {
        reason: format!(
            "N(c) = r² with r = {}, but neither ±r is a norm from K",
            base.format_elem(&r)
        ),
    })
}

// Same construction as over Q: t = 1/w with N(w) = m, x = c/m of norm one,
// x = s/σ(s) with s = 1 + x (or α when x = −1).
fn norm_witness(
    k: &PadicQuadExt,
    c: &PadicQuadElem,
    m: &PadicNumber,
) -> Option<ZeroDivisorWitness<PadicQuadElem>> {
    let base = k.base_field();
    let w = find_norm_solution_padic(m, k)?;
    let t = k.ext_inv(&w).ok()?;
    let x = k.scale(&base.inv_elem(m).ok()?, c);
    let one = k.one_elem();
    let s = {
        let s = k.ext_add(&one, &x);
        if k.ext_is_zero(&s) {
            k.alpha()
        } else {
            s
        }
    };
    let t_inv = k.ext_inv(&t).ok()?;
    Some(ZeroDivisorWitness {
        left: Pair::new(one, t),
        right: Pair::new(k.ext_neg(&k.ext_mul(&s, &t_inv)), s),
    })
}

/// The example family c = yα: N(c) = −y²α², so division whenever −α² is not
/// a square in Q_p. Falls back to the full decision otherwise.
pub fn padic_example_division_check(
    k: &PadicQuadExt,
    y: &PadicNumber,
) -> Result<DivisionVerdict<PadicQuadElem>> {
    let base = k.base_field();
    if y.is_zero() {
        return Err(Error::ZeroConstant);
    }
    let n = base.neg_elem(&base.mul_elem(&base.mul_elem(y, y), k.alpha_squared()));
    if !base.padic_is_square(&n)? {
        return Ok(DivisionVerdict::ProvedDivision {
            reason: format!(
                "N(yα) = {} is not a square in Q_{}",
                base.format_elem(&n),
                base.p()
            ),
        });
    }
    padic_division_decision(k, &k.elem(base.zero_elem(), y.clone()))
}

impl PadicQuadExt {
    pub fn one_elem(&self) -> PadicQuadElem {
        self.from_ints(1, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CoeffAlgebra;
    use crate::padic::ext::ExtKind;
    use crate::padic::number::PadicField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ext(p: u64, kind: ExtKind) -> PadicQuadExt {
        PadicQuadExt::new(&PadicField::with_default_precision(p).unwrap(), kind)
    }

    fn product(k: &PadicQuadExt, c: &PadicQuadElem, l: &Pair<PadicQuadElem>, r: &Pair<PadicQuadElem>) -> Pair<PadicQuadElem> {
        let vy = k.ext_mul(&l.v, &r.v);
        Pair::new(
            k.ext_add(&k.ext_mul(&l.u, &r.u), &k.ext_mul(c, &k.conjugate(&vy))),
            k.ext_add(&k.ext_mul(&l.u, &r.v), &k.ext_mul(&l.v, &r.u)),
        )
    }

    #[test]
    fn example_family() {
        let k5 = ext(5, ExtKind::SqrtP);
        let one = k5.base_field().from_int(1);
        assert!(padic_example_division_check(&k5, &one).unwrap().is_division());
        let k13 = ext(13, ExtKind::SqrtU);
        let one13 = k13.base_field().from_int(1);
        assert!(padic_example_division_check(&k13, &one13).unwrap().is_division());
        let d = padic_division_decision(&k5, &k5.from_ints(4, 0)).unwrap();
        assert!(d.is_not_division());
    }

    #[test]
    fn hilbert_symbol_local() {
        let k = PadicField::with_default_precision(5).unwrap();
        assert_eq!(padic_hilbert_symbol(&k.from_int(5), &k.from_int(2)).unwrap(), -1);
        assert_eq!(padic_hilbert_symbol(&k.from_int(5), &k.from_int(-1)).unwrap(), 1);
        let k3 = PadicField::with_default_precision(3).unwrap();
        assert_eq!(padic_hilbert_symbol(&k3.from_int(3), &k3.from_int(3)).unwrap(), -1);
    }

    #[test]
    fn norms_are_norms() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for p in [3u64, 5, 7] {
            for kind in ExtKind::all() {
                let k = ext(p, kind);
                for _ in 0..50 {
                    let z = k.random_elem(&mut rng);
                    let n = k.ext_norm(&z);
                    assert!(is_norm_from_ext(&n, &k).unwrap());
                    let w = find_norm_solution_padic(&n, &k).expect("norm solution");
                    assert!(k.base_field().approx_eq(&k.ext_norm(&w), &n));
                }
            }
        }
    }

    #[test]
    fn not_division_witnesses_vanish() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for p in [3u64, 5, 7] {
            for kind in ExtKind::all() {
                let k = ext(p, kind);
                let mut counts = [0usize; 2];
                for _ in 0..60 {
                    let c = k.random_elem(&mut rng);
                    let d = padic_division_decision(&k, &c).unwrap();
                    counts[d.is_division() as usize] += 1;
                    if let Some(w) = d.witness() {
                        let prod = product(&k, &c, &w.left, &w.right);
                        assert!(k.ext_is_zero(&prod.u) && k.ext_is_zero(&prod.v), "{p} {kind:?} {c:?}");
                    } else {
                        assert!(d.is_division(), "missing witness for {c:?}");
                    }
                }
                assert!(counts[0] > 0 && counts[1] > 0, "{p} {kind:?} {counts:?}");
            }
        }
    }
}
