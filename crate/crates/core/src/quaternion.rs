//! Quaternion algebras (a, b) over Q or GF(p), p odd.

use std::fmt;

use rand::RngCore;

use crate::algebra::{CoeffAlgebra, SquareRoot};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::finite_field::FiniteField;
use crate::linalg;
use crate::number::rational::{parse_rational, RationalField};

/// `x + y·i + z·j + w·k` with i² = a, j² = b, ij = −ji = k.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quaternion<E> {
    pub x: E,
    pub y: E,
    pub z: E,
    pub w: E,
}

impl<E> Quaternion<E> {
    pub fn new(x: E, y: E, z: E, w: E) -> Self {
        Quaternion { x, y, z, w }
    }
}

/// x ↦ m⁻¹ x m.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InnerAut<E> {
    pub witness: Quaternion<E>,
}

#[derive(Clone)]
pub struct QuaternionAlgebra<F: Field> {
    base: F,
    a: F::Elem,
    b: F::Elem,
}

impl<F: Field> fmt::Debug for QuaternionAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.base.format(&self.a), self.base.format(&self.b))
    }
}

impl<F: Field> PartialEq for QuaternionAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.base.eq_elem(&self.a, &other.a) && self.base.eq_elem(&self.b, &other.b)
    }
}

pub type RationalQuaternions = QuaternionAlgebra<RationalField>;

impl QuaternionAlgebra<RationalField> {
    pub fn rational(a: i64, b: i64) -> Result<Self> {
        QuaternionAlgebra::new(RationalField, RationalField.from_i64(a), RationalField.from_i64(b))
    }

    /// Parses `quat(a,b)` with rational a, b.
    pub fn parse_spec(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("quat(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected quat(a,b): {s}")))?;
        let (a, b) = body
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected quat(a,b): {s}")))?;
        QuaternionAlgebra::new(RationalField, parse_rational(a)?, parse_rational(b)?)
    }
}

impl QuaternionAlgebra<FiniteField> {
    pub fn over_prime_field(p: u64, a: i64, b: i64) -> Result<Self> {
        let k = FiniteField::new(p, 1, None)?;
        let (a, b) = (Field::from_i64(&k, a), Field::from_i64(&k, b));
        QuaternionAlgebra::new(k, a, b)
    }
}

impl<F: Field> QuaternionAlgebra<F> {
    pub fn new(base: F, a: F::Elem, b: F::Elem) -> Result<Self> {
        if base.characteristic() == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if base.is_zero(&a) || base.is_zero(&b) {
            return Err(Error::ZeroInput);
        }
        Ok(QuaternionAlgebra { base, a, b })
    }

    pub fn a(&self) -> &F::Elem {
        &self.a
    }

    pub fn b(&self) -> &F::Elem {
        &self.b
    }

    pub fn base_field(&self) -> &F {
        &self.base
    }

    pub fn from_ints(&self, x: i64, y: i64, z: i64, w: i64) -> Quaternion<F::Elem> {
        let f = &self.base;
        Quaternion::new(f.from_i64(x), f.from_i64(y), f.from_i64(z), f.from_i64(w))
    }

    pub fn i(&self) -> Quaternion<F::Elem> {
        self.from_ints(0, 1, 0, 0)
    }

    pub fn j(&self) -> Quaternion<F::Elem> {
        self.from_ints(0, 0, 1, 0)
    }

    pub fn k(&self) -> Quaternion<F::Elem> {
        self.from_ints(0, 0, 0, 1)
    }

    pub fn quat_add(&self, p: &Quaternion<F::Elem>, q: &Quaternion<F::Elem>) -> Quaternion<F::Elem> {
        let f = &self.base;
        Quaternion::new(f.add(&p.x, &q.x), f.add(&p.y, &q.y), f.add(&p.z, &q.z), f.add(&p.w, &q.w))
    }

    pub fn quat_neg(&self, p: &Quaternion<F::Elem>) -> Quaternion<F::Elem> {
        let f = &self.base;
        Quaternion::new(f.neg(&p.x), f.neg(&p.y), f.neg(&p.z), f.neg(&p.w))
    }

    pub fn quat_scale(&self, s: &F::Elem, p: &Quaternion<F::Elem>) -> Quaternion<F::Elem> {
        let f = &self.base;
        Quaternion::new(f.mul(s, &p.x), f.mul(s, &p.y), f.mul(s, &p.z), f.mul(s, &p.w))
    }

    pub fn quat_mul(&self, p: &Quaternion<F::Elem>, q: &Quaternion<F::Elem>) -> Quaternion<F::Elem> {
        let f = &self.base;
        let (a, b) = (&self.a, &self.b);
        let ab = f.mul(a, b);
        let m = |u: &F::Elem, v: &F::Elem| f.mul(u, v);
        // i² = a, j² = b, k² = −ab, ij = k, jk = −bi, ki = −aj.
        let x = f.add(
            &f.add(&m(&p.x, &q.x), &f.mul(a, &m(&p.y, &q.y))),
            &f.sub(&f.mul(b, &m(&p.z, &q.z)), &f.mul(&ab, &m(&p.w, &q.w))),
        );
        let y = f.add(
            &f.add(&m(&p.x, &q.y), &m(&p.y, &q.x)),
            &f.mul(b, &f.sub(&m(&p.w, &q.z), &m(&p.z, &q.w))),
        );
        let z = f.add(
            &f.add(&m(&p.x, &q.z), &m(&p.z, &q.x)),
            &f.mul(a, &f.sub(&m(&p.y, &q.w), &m(&p.w, &q.y))),
        );
        let w = f.add(
            &f.add(&m(&p.x, &q.w), &m(&p.w, &q.x)),
            &f.sub(&m(&p.y, &q.z), &m(&p.z, &q.y)),
        );
        Quaternion::new(x, y, z, w)
    }

    pub fn conjugate(&self, p: &Quaternion<F::Elem>) -> Quaternion<F::Elem> {
        let f = &self.base;
        Quaternion::new(p.x.clone(), f.neg(&p.y), f.neg(&p.z), f.neg(&p.w))
    }

    /// x² − a·y² − b·z² + ab·w².
    pub fn quat_norm(&self, p: &Quaternion<F::Elem>) -> F::Elem {
        let f = &self.base;
        let sq = |u: &F::Elem| f.mul(u, u);
        let ab = f.mul(&self.a, &self.b);
        f.add(
            &f.sub(&f.sub(&sq(&p.x), &f.mul(&self.a, &sq(&p.y))), &f.mul(&self.b, &sq(&p.z))),
            &f.mul(&ab, &sq(&p.w)),
        )
    }

    pub fn quat_inv(&self, p: &Quaternion<F::Elem>) -> Result<Quaternion<F::Elem>> {
        let n = self.quat_norm(p);
        let ni = self.base.inv(&n).ok_or(Error::NotInvertible)?;
        Ok(self.quat_scale(&ni, &self.conjugate(p)))
    }

    pub fn inner(&self, m: Quaternion<F::Elem>) -> Result<InnerAut<F::Elem>> {
        self.quat_inv(&m)?;
        Ok(InnerAut { witness: m })
    }

    /// m⁻¹ z m.
    pub fn inner_apply(&self, t: &InnerAut<F::Elem>, z: &Quaternion<F::Elem>) -> Quaternion<F::Elem> {
        let mi = self.quat_inv(&t.witness).expect("witness is invertible");
        self.quat_mul(&self.quat_mul(&mi, z), &t.witness)
    }

    fn coord_vec(&self, p: &Quaternion<F::Elem>) -> Vec<F::Elem> {
        vec![p.x.clone(), p.y.clone(), p.z.clone(), p.w.clone()]
    }

    fn from_vec(&self, c: &[F::Elem]) -> Quaternion<F::Elem> {
        Quaternion::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
    }

    fn std_basis(&self) -> Vec<Quaternion<F::Elem>> {
        vec![self.from_ints(1, 0, 0, 0), self.i(), self.j(), self.k()]
    }

    /// A basis of {z : m z = z m} (equivalently τ(z) = z), in echelon form.
    pub fn fixed_subalgebra(&self, t: &InnerAut<F::Elem>) -> Vec<Quaternion<F::Elem>> {
        let m = &t.witness;
        let cols: Vec<Vec<F::Elem>> = self
            .std_basis()
            .iter()
            .map(|e| {
                let d = self.quat_add(&self.quat_mul(m, e), &self.quat_neg(&self.quat_mul(e, m)));
                self.coord_vec(&d)
            })
            .collect();
        let mut ker = linalg::kernel(&self.base, &linalg::columns_to_rows(&cols), 4);
        linalg::rref(&self.base, &mut ker, 4);
        ker.iter().map(|v| self.from_vec(v)).collect()
    }

    fn solve_pure_square(&self, x: &F::Elem) -> Option<Quaternion<F::Elem>> {
        // u with u² = x among multiples of i, j and k.
        let f = &self.base;
        let zero = f.zero();
        let cands = [(self.a.clone(), 1), (self.b.clone(), 2), (f.neg(&f.mul(&self.a, &self.b)), 3)];
        for (sq, slot) in cands {
            if let Some(t) = f.div(x, &sq).and_then(|q| f.sqrt(&q)) {
                let mut v = vec![zero.clone(), zero.clone(), zero.clone(), zero.clone()];
                v[slot] = t;
                return Some(self.from_vec(&v));
            }
        }
        None
    }
}

impl<F: Field> CoeffAlgebra for QuaternionAlgebra<F> {
    type Base = F;
    type Elem = Quaternion<F::Elem>;
    type Aut = InnerAut<F::Elem>;

    fn base(&self) -> F {
        self.base.clone()
    }

    fn dim(&self) -> usize {
        4
    }

    fn zero(&self) -> Self::Elem {
        self.from_ints(0, 0, 0, 0)
    }

    fn one(&self) -> Self::Elem {
        self.from_ints(1, 0, 0, 0)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.quat_add(a, b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.quat_neg(a)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.quat_mul(a, b)
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.quat_inv(a).ok()
    }

    fn scalar(&self, s: &F::Elem) -> Self::Elem {
        let z = self.base.zero();
        Quaternion::new(s.clone(), z.clone(), z.clone(), z)
    }

    fn scale(&self, s: &F::Elem, a: &Self::Elem) -> Self::Elem {
        self.quat_scale(s, a)
    }

    fn coords(&self, a: &Self::Elem) -> Vec<F::Elem> {
        self.coord_vec(a)
    }

    fn from_coords(&self, c: &[F::Elem]) -> Self::Elem {
        self.from_vec(c)
    }

    fn is_commutative(&self) -> bool {
        false
    }

    fn norm(&self, a: &Self::Elem) -> F::Elem {
        self.quat_norm(a)
    }

    fn square_root(&self, z: &Self::Elem) -> SquareRoot<Self::Elem> {
        let f = &self.base;
        let pure_zero = f.is_zero(&z.y) && f.is_zero(&z.z) && f.is_zero(&z.w);
        if pure_zero {
            if let Some(s) = f.sqrt(&z.x) {
                return SquareRoot::Root(self.scalar(&s));
            }
            return match self.solve_pure_square(&z.x) {
                Some(u) => SquareRoot::Root(u),
                None => SquareRoot::Unknown,
            };
        }
        // q = s + u with 2su = v and s² = (x ± √N(z))/2.
        let Some(rn) = f.sqrt(&self.quat_norm(z)) else {
            return SquareRoot::NotSquare;
        };
        let half = f.inv(&f.from_i64(2)).expect("odd characteristic");
        for r in [rn.clone(), f.neg(&rn)] {
            let s2 = f.mul(&f.add(&z.x, &r), &half);
            let Some(s) = f.sqrt(&s2) else { continue };
            let Some(si) = f.inv(&s) else { continue };
            let k = f.mul(&half, &si);
            let q = Quaternion::new(s, f.mul(&k, &z.y), f.mul(&k, &z.z), f.mul(&k, &z.w));
            if self.eq_elem(&self.quat_mul(&q, &q), z) {
                return SquareRoot::Root(q);
            }
        }
        SquareRoot::NotSquare
    }

    fn identity_aut(&self) -> Self::Aut {
        InnerAut { witness: self.one() }
    }

    fn apply(&self, t: &Self::Aut, a: &Self::Elem) -> Self::Elem {
        self.inner_apply(t, a)
    }

    /// f∘g is conjugation by g_m·f_m.
    fn compose(&self, f: &Self::Aut, g: &Self::Aut) -> Self::Aut {
        InnerAut { witness: self.quat_mul(&g.witness, &f.witness) }
    }

    fn aut_inverse(&self, f: &Self::Aut) -> Self::Aut {
        InnerAut { witness: self.quat_inv(&f.witness).expect("witness is invertible") }
    }

    fn automorphism_group(&self) -> Option<Vec<Self::Aut>> {
        None
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        let f = &self.base;
        format!("{},{},{},{}", f.format(&a.x), f.format(&a.y), f.format(&a.z), f.format(&a.w))
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected x,y,z,w: {s:?}")));
        }
        let v: Vec<F::Elem> = parts.iter().map(|t| self.base.parse(t)).collect::<Result<_>>()?;
        Ok(self.from_vec(&v))
    }

    fn format_aut(&self, t: &Self::Aut) -> String {
        format!("conj[{}]", self.format_elem(&t.witness))
    }

    fn random_elem(&self, rng: &mut dyn RngCore) -> Self::Elem {
        let f = &self.base;
        Quaternion::new(f.random(rng), f.random(rng), f.random(rng), f.random(rng))
    }

    fn describe(&self) -> String {
        format!("quat({},{})", self.base.format(&self.a), self.base.format(&self.b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::rational::{int, Rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn b23() -> RationalQuaternions {
        QuaternionAlgebra::rational(2, 3).unwrap()
    }

    #[test]
    fn defining_relations() {
        let b = b23();
        assert_eq!(b.quat_mul(&b.i(), &b.j()), b.k());
        assert_eq!(b.quat_mul(&b.j(), &b.i()), b.quat_neg(&b.k()));
        assert_eq!(b.quat_mul(&b.i(), &b.i()), b.from_ints(2, 0, 0, 0));
        assert_eq!(b.quat_mul(&b.j(), &b.j()), b.from_ints(3, 0, 0, 0));
        assert_eq!(b.quat_mul(&b.k(), &b.k()), b.from_ints(-6, 0, 0, 0));
    }

    #[test]
    fn associative_on_basis() {
        let b = b23();
        let basis = b.std_basis();
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    let l = b.quat_mul(&b.quat_mul(x, y), z);
                    let r = b.quat_mul(x, &b.quat_mul(y, z));
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn norm_and_inverse() {
        let b = b23();
        let c = b.from_ints(0, 1, 1, 0);
        assert_eq!(b.quat_norm(&c), int(-5));
        assert_eq!(b.quat_norm(&b.one()), int(1));
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..200 {
            let z = b.random_elem(&mut rng);
            let w = b.random_elem(&mut rng);
            assert_eq!(b.quat_norm(&b.quat_mul(&z, &w)), b.quat_norm(&z) * b.quat_norm(&w));
            if !b.is_zero(&z) {
                // (2,3) is a division algebra, so nonzero means invertible.
                assert!(b.quat_norm(&z) != Rational::from_integer(0.into()));
                assert_eq!(b.quat_mul(&z, &b.quat_inv(&z).unwrap()), b.one());
            }
        }
        assert_eq!(b.quat_inv(&b.zero()), Err(Error::NotInvertible));
    }

    #[test]
    fn inner_automorphisms() {
        let b = b23();
        let ti = b.inner(b.i()).unwrap();
        assert_eq!(b.inner_apply(&ti, &b.j()), b.quat_neg(&b.j()));
        let t5 = b.inner(b.from_ints(5, 0, 0, 0)).unwrap();
        let t7i = b.inner(b.quat_scale(&int(7), &b.i())).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..200 {
            let z = b.random_elem(&mut rng);
            assert_eq!(b.inner_apply(&t5, &z), z);
            assert_eq!(b.quat_norm(&b.inner_apply(&ti, &z)), b.quat_norm(&z));
            assert_eq!(b.inner_apply(&t7i, &z), b.inner_apply(&ti, &z));
            let w = b.random_elem(&mut rng);
            assert_eq!(
                b.inner_apply(&ti, &b.quat_mul(&z, &w)),
                b.quat_mul(&b.inner_apply(&ti, &z), &b.inner_apply(&ti, &w))
            );
        }
        let tj = b.inner(b.j()).unwrap();
        let comp = b.compose(&ti, &tj);
        for _ in 0..20 {
            let z = b.random_elem(&mut rng);
            assert_eq!(b.apply(&comp, &z), b.apply(&ti, &b.apply(&tj, &z)));
        }
    }

    #[test]
    fn fixed_subalgebras() {
        let b = b23();
        let fix = b.fixed_subalgebra(&b.inner(b.i()).unwrap());
        assert_eq!(fix, vec![b.one(), b.i()]);
        assert_eq!(b.fixed_subalgebra(&b.identity_aut()).len(), 4);
        let fix = b.fixed_subalgebra(&b.inner(b.from_ints(1, 0, 1, 1)).unwrap());
        assert_eq!(fix.len(), 2);
        // Closed under products.
        for x in &fix {
            for y in &fix {
                let p = b.coords(&b.quat_mul(x, y));
                let basis: Vec<Vec<Rational>> = fix.iter().map(|e| b.coords(e)).collect();
                assert!(linalg::in_span(&RationalField, &basis, &p));
            }
        }
    }

    #[test]
    fn square_roots() {
        let b = b23();
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..50 {
            let z = b.random_elem(&mut rng);
            let sq = b.quat_mul(&z, &z);
            match b.square_root(&sq) {
                SquareRoot::Root(r) => assert_eq!(b.quat_mul(&r, &r), sq),
                // Roots of scalars by pure quaternions are only searched on
                // the coordinate axes.
                SquareRoot::Unknown => assert!(b.as_scalar(&sq).is_some()),
                SquareRoot::NotSquare => panic!("{sq:?} is a square"),
            }
        }
        let pure = b.from_ints(0, 1, 0, 0);
        assert_eq!(b.square_root(&b.quat_mul(&pure, &pure)).root(), Some(b.i()));
        assert_eq!(b.square_root(&b.from_ints(0, 1, 1, 0)), SquareRoot::NotSquare);
        assert_eq!(b.square_root(&b.from_ints(2, 0, 0, 0)).root(), Some(b.i()));
    }

    #[test]
    fn split_over_prime_field() {
        let b = QuaternionAlgebra::over_prime_field(5, 2, 3).unwrap();
        let mut found = false;
        for x in 0..5 {
            for y in 0..5 {
                for z in 0..5 {
                    let q = b.from_ints(x, y, z, 1);
                    if b.base_field().is_zero(&b.quat_norm(&q)) {
                        assert_eq!(b.quat_inv(&q), Err(Error::NotInvertible));
                        found = true;
                    }
                }
            }
        }
        assert!(found);
        assert!(matches!(QuaternionAlgebra::over_prime_field(2, 1, 1), Err(Error::CharacteristicTwo)));
        assert_eq!(b23().describe(), "quat(2,3)");
        assert_eq!(RationalQuaternions::parse_spec("quat(2,3)").unwrap(), b23());
    }
}
