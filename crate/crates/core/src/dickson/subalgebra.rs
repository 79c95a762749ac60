//! Closure checks for subspaces of D.

use super::nuclei::echelon;
use super::DicksonAlgebra;
use crate::algebra::CoeffAlgebra;
use crate::linalg;
use crate::verdict::Pair;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraReport {
    pub dim: usize,
    pub closed: bool,
    pub contains_one: bool,
    /// Only meaningful when `closed`.
    pub commutative: bool,
    pub associative: bool,
    /// Indices (into the echelon basis) of a product leaving the subspace.
    pub escape: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledSubalgebraReport {
    pub k_dim: usize,
    pub k_closed: bool,
    pub k_commutative: bool,
    pub sigma_stable: bool,
    pub c_in_k: bool,
    /// K ⊕ K is closed under the product of D.
    pub closed: bool,
    /// On K ⊕ K the product equals `(ux + cσ(vy), uy + vx)`.
    pub matches_commutative: bool,
}

impl<A: CoeffAlgebra> DicksonAlgebra<A> {
    /// Checks whether `span(gens)` is closed under multiplication.
    pub fn subalgebra_check(&self, gens: &[Pair<A::Elem>]) -> SubalgebraReport {
        let f = self.coeff().base();
        let n = self.dim();
        let rows = echelon(&f, gens.iter().map(|g| self.coords(g)).collect(), n);
        let basis: Vec<Pair<A::Elem>> = rows.iter().map(|r| self.from_coords(r)).collect();
        let inside = |p: &Pair<A::Elem>| linalg::in_span(&f, &rows, &self.coords(p));
        let mut escape = None;
        let mut commutative = true;
        'outer: for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let xy = self.mul(x, y);
                if !inside(&xy) {
                    escape = Some((i, j));
                    break 'outer;
                }
                if !self.eq(&xy, &self.mul(y, x)) {
                    commutative = false;
                }
            }
        }
        let closed = escape.is_none();
        let associative = closed
            && basis.iter().all(|x| {
                basis
                    .iter()
                    .all(|y| basis.iter().all(|z| self.is_zero(&self.associator(x, y, z))))
            });
        SubalgebraReport {
            dim: basis.len(),
            closed,
            contains_one: inside(&self.one()),
            commutative: closed && commutative,
            associative,
            escape,
        }
    }

    /// For a subspace K of the coefficient algebra (given by spanning
    /// elements), checks the subspace K ⊕ K of D.
    pub fn doubled_subalgebra_check(&self, k_gens: &[A::Elem]) -> DoubledSubalgebraReport {
        let k = self.coeff();
        let f = k.base();
        let m = k.dim();
        let rows = echelon(&f, k_gens.iter().map(|g| k.coords(g)).collect(), m);
        let kb: Vec<A::Elem> = rows.iter().map(|r| k.from_coords(r)).collect();
        let in_k = |a: &A::Elem| linalg::in_span(&f, &rows, &k.coords(a));
        let k_closed = kb.iter().all(|x| kb.iter().all(|y| in_k(&k.mul(x, y))));
        let k_commutative =
            kb.iter().all(|x| kb.iter().all(|y| k.eq_elem(&k.mul(x, y), &k.mul(y, x))));
        let sigma_stable = kb.iter().all(|x| in_k(&self.sigma_apply(x)));
        let c_in_k = in_k(self.c());

        let z = k.zero();
        let mut gens: Vec<Pair<A::Elem>> = kb.iter().map(|x| Pair::new(x.clone(), z.clone())).collect();
        gens.extend(kb.iter().map(|x| Pair::new(z.clone(), x.clone())));
        let closed = self.subalgebra_check(&gens).closed;

        let commutative_product = |p: &Pair<A::Elem>, q: &Pair<A::Elem>| {
            let vy = k.mul(&p.v, &q.v);
            Pair::new(
                k.add(&k.mul(&p.u, &q.u), &k.mul(self.c(), &self.sigma_apply(&vy))),
                k.add(&k.mul(&p.u, &q.v), &k.mul(&p.v, &q.u)),
            )
        };
        let matches_commutative = gens
            .iter()
            .all(|p| gens.iter().all(|q| self.eq(&self.mul(p, q), &commutative_product(p, q))));
        DoubledSubalgebraReport {
            k_dim: kb.len(),
            k_closed,
            k_commutative,
            sigma_stable,
            c_in_k,
            closed,
            matches_commutative,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::Variant;
    use super::*;
    use crate::quaternion::QuaternionAlgebra;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn quadratic_subfield_doubles() {
        let b = QuaternionAlgebra::rational(2, 3).unwrap();
        let sigma = b.inner(b.j()).unwrap();
        for v in [Variant::Left, Variant::Middle, Variant::Right] {
            let d = DicksonAlgebra::new(b.clone(), sigma.clone(), b.i(), v, false).unwrap();
            let r = d.doubled_subalgebra_check(&[b.one(), b.i()]);
            assert!(r.k_closed && r.k_commutative && r.sigma_stable && r.c_in_k);
            assert!(r.closed && r.matches_commutative, "{v}");
            let sub = d.subalgebra_check(&[d.one(), d.pair(b.i(), b.zero()), d.lambda(), d.pair(b.zero(), b.i())]);
            assert!(sub.closed && sub.commutative && sub.contains_one && sub.dim == 4);
        }
    }

    #[test]
    fn random_subspace_not_closed() {
        let b = QuaternionAlgebra::rational(2, 3).unwrap();
        let d = DicksonAlgebra::new(b.clone(), b.inner(b.j()).unwrap(), b.i(), Variant::Middle, false).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let gens: Vec<_> = (0..3).map(|_| d.random_pair(&mut rng)).collect();
        let r = d.subalgebra_check(&gens);
        assert_eq!(r.dim, 3);
        assert!(!r.closed && r.escape.is_some());
        // c outside K breaks closure of K ⊕ K.
        let d2 = d.with_c(b.j()).unwrap();
        let r2 = d2.doubled_subalgebra_check(&[b.one(), b.i()]);
        assert!(!r2.c_in_k && !r2.closed);
    }
}
