//! Nuclei, commuter and center as kernels of linear systems over the base field.

use super::DicksonAlgebra;
use crate::algebra::{BaseElem, CoeffAlgebra};
use crate::field::Field;
use crate::linalg;
use crate::verdict::Pair;

/// Bases (in reduced row echelon form) of the six distinguished subspaces.
#[derive(Debug, Clone)]
pub struct NucleusReport<E> {
    pub left: Vec<Pair<E>>,
    pub middle: Vec<Pair<E>>,
    pub right: Vec<Pair<E>>,
    pub nucleus: Vec<Pair<E>>,
    pub commuter: Vec<Pair<E>>,
    pub center: Vec<Pair<E>>,
}

impl<E> NucleusReport<E> {
    /// Dimensions in the order left, middle, right, nucleus, commuter, center.
    pub fn dims(&self) -> [usize; 6] {
        [
            self.left.len(),
            self.middle.len(),
            self.right.len(),
            self.nucleus.len(),
            self.commuter.len(),
            self.center.len(),
        ]
    }
}

pub(super) fn echelon<F: Field>(f: &F, mut vs: Vec<Vec<F::Elem>>, dim: usize) -> Vec<Vec<F::Elem>> {
    let pivots = linalg::rref(f, &mut vs, dim);
    vs.truncate(pivots.len());
    vs
}

impl<A: CoeffAlgebra> DicksonAlgebra<A> {
    /// `[i][j][k]` = coordinates of the associator of basis elements i, j, k.
    pub fn associator_table(&self) -> Vec<Vec<Vec<Vec<BaseElem<A>>>>> {
        let b = self.basis();
        let prods: Vec<Vec<Pair<A::Elem>>> =
            b.iter().map(|x| b.iter().map(|y| self.mul(x, y)).collect()).collect();
        let n = b.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| {
                                let lhs = self.mul(&prods[i][j], &b[k]);
                                let rhs = self.mul(&b[i], &prods[j][k]);
                                self.coords(&self.sub(&lhs, &rhs))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    fn kernel_pairs(&self, rows: Vec<Vec<BaseElem<A>>>) -> Vec<Vec<BaseElem<A>>> {
        let f = self.coeff().base();
        let n = self.dim();
        echelon(&f, linalg::kernel(&f, &rows, n), n)
    }

    fn to_pairs(&self, vs: &[Vec<BaseElem<A>>]) -> Vec<Pair<A::Elem>> {
        vs.iter().map(|v| self.from_coords(v)).collect()
    }

    /// Nucleus position 0, 1 or 2: the slot of the associator that is free.
    fn nucleus_rows(
        &self,
        table: &[Vec<Vec<Vec<BaseElem<A>>>>],
        slot: usize,
    ) -> Vec<Vec<BaseElem<A>>> {
        let n = self.dim();
        let mut rows = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for l in 0..n {
                    rows.push(
                        (0..n)
                            .map(|x| {
                                let (i, j, k) = match slot {
                                    0 => (x, a, b),
                                    1 => (a, x, b),
                                    _ => (a, b, x),
                                };
                                table[i][j][k][l].clone()
                            })
                            .collect(),
                    );
                }
            }
        }
        rows
    }

    pub fn nuclei(&self) -> NucleusReport<A::Elem> {
        let f = self.coeff().base();
        let n = self.dim();
        let table = self.associator_table();
        let [left, middle, right] =
            [0, 1, 2].map(|slot| self.kernel_pairs(self.nucleus_rows(&table, slot)));
        let lm = linalg::intersect(&f, &left, &middle);
        let nucleus = echelon(&f, linalg::intersect(&f, &lm, &right), n);

        let b = self.basis();
        let comm: Vec<Vec<Vec<BaseElem<A>>>> = b
            .iter()
            .map(|x| b.iter().map(|y| self.coords(&self.commutator(x, y))).collect())
            .collect();
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for l in 0..n {
                rows.push((0..n).map(|i| comm[i][j][l].clone()).collect());
            }
        }
        let commuter = self.kernel_pairs(rows);
        let center = echelon(&f, linalg::intersect(&f, &nucleus, &commuter), n);

        NucleusReport {
            left: self.to_pairs(&left),
            middle: self.to_pairs(&middle),
            right: self.to_pairs(&right),
            nucleus: self.to_pairs(&nucleus),
            commuter: self.to_pairs(&commuter),
            center: self.to_pairs(&center),
        }
    }

    /// Is `p` in the span of `basis`?
    pub fn in_span(&self, basis: &[Pair<A::Elem>], p: &Pair<A::Elem>) -> bool {
        let f = self.coeff().base();
        let b: Vec<_> = basis.iter().map(|x| self.coords(x)).collect();
        linalg::in_span(&f, &b, &self.coords(p))
    }
}

#[cfg(test)]
mod tests {
    use super::super::Variant;
    use super::*;
    use crate::algebra::FiniteCoeffAlgebra;
    use crate::finite_field::FiniteField;
    use crate::number::{QuadAut, QuadField};
    use crate::quaternion::QuaternionAlgebra;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gf9_nuclei() {
        let k = FiniteField::new(3, 2, None).unwrap();
        let c = k.element(&[1, 1]).unwrap();
        let d = DicksonAlgebra::new(k.clone(), k.frobenius(1), c, Variant::Commutative, false).unwrap();
        let r = d.nuclei();
        assert_eq!(r.dims(), [1, 2, 1, 1, 4, 1]);
        // Middle nucleus is K ⊕ 0.
        let zero = CoeffAlgebra::zero(&k);
        for a in k.elements() {
            assert!(d.in_span(&r.middle, &d.pair(a, zero)));
        }
        assert!(!d.in_span(&r.middle, &d.lambda()));
        assert!(d.in_span(&r.center, &d.one()));
    }

    #[test]
    fn nuclei_members_pass_random_associators() {
        let q = QuadField::from_int(5).unwrap();
        let d = DicksonAlgebra::new(q.clone(), QuadAut::Conjugation, q.from_ints(1, 1), Variant::Commutative, false).unwrap();
        let r = d.nuclei();
        assert_eq!(r.dims(), [1, 2, 1, 1, 4, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..50 {
            let (y, z) = (d.random_pair(&mut rng), d.random_pair(&mut rng));
            for m in &r.middle {
                assert!(d.is_zero(&d.associator(&y, m, &z)));
            }
            for m in &r.left {
                assert!(d.is_zero(&d.associator(m, &y, &z)));
            }
        }
    }

    #[test]
    fn quaternion_middle_nucleus() {
        let b = QuaternionAlgebra::rational(2, 3).unwrap();
        let sigma = b.inner(b.j()).unwrap();
        for v in [Variant::Left, Variant::Middle, Variant::Right] {
            let d = DicksonAlgebra::new(b.clone(), sigma.clone(), b.i(), v, false).unwrap();
            let r = d.nuclei();
            assert!(r.dims()[1] <= 4);
            assert_eq!(r.center.len(), 1, "{v}");
        }
    }

    #[test]
    fn quaternion_outer_nuclei() {
        // σ = ι_i: with c = i every (0, y) associates in the outer slot,
        // and the right nucleus of D_r is {k : σ(k)c = ck}.
        let b = QuaternionAlgebra::rational(2, 3).unwrap();
        let sigma = b.inner(b.i()).unwrap();
        let sg = |x: &_| b.apply(&sigma, x);
        let d = DicksonAlgebra::new(b.clone(), sigma.clone(), b.i(), Variant::Left, false).unwrap();
        let r = d.nuclei();
        assert_eq!(r.dims()[..3], [4, 4, 4]);
        assert!(d.in_span(&r.right, &d.lambda()));
        let d = DicksonAlgebra::new(b.clone(), sigma.clone(), b.i(), Variant::Right, false).unwrap();
        assert_eq!(d.nuclei().dims()[..3], [4, 4, 4]);

        let c = b.from_ints(1, 0, 0, 1);
        let d = DicksonAlgebra::new(b.clone(), sigma.clone(), c.clone(), Variant::Right, false).unwrap();
        let r = d.nuclei();
        assert_eq!(r.dims()[..3], [2, 4, 2]);
        for e in &r.right {
            assert!(b.is_zero(&e.v));
            assert!(b.eq_elem(&b.mul(&sg(&e.u), &c), &b.mul(&c, &e.u)));
        }
        let u = b.from_ints(0, 1, 2, 0);
        assert!(d.in_span(&r.right, &d.pair(u.clone(), b.zero())));
        assert!(!b.eq_elem(&b.mul(&c, &sg(&u)), &b.mul(&u, &c)));
    }

    #[test]
    fn identity_sigma_gives_associative_commutative() {
        let k = FiniteField::new(5, 2, None).unwrap();
        let c = k.element(&[2, 0]).unwrap();
        let d = DicksonAlgebra::new(k.clone(), k.frobenius(0), c, Variant::Commutative, true).unwrap();
        assert_eq!(d.nuclei().dims(), [4, 4, 4, 4, 4, 4]);
    }
}
