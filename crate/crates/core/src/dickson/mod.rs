//! The doubling D(A, σ, c) = A ⊕ A of a coefficient algebra.
//!
//! All four products share the second slot `uy + vx`; the first slot is
//!
//! | variant               | first slot         |
//! |-----------------------|--------------------|
//! | commutative / left    | `ux + c·σ(vy)`     |
//! | middle                | `ux + σ(v)·c·σ(y)` |
//! | right                 | `ux + σ(vy)·c`     |
//!
//! Over a commutative A all four coincide. The commutative variant is only
//! accepted for commutative A.

mod nuclei;
mod search;
mod subalgebra;

use std::fmt;
use std::str::FromStr;

use rand::RngCore;

use crate::algebra::{BaseElem, CoeffAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
pub use crate::verdict::{Pair, ZeroDivisorWitness};

pub use nuclei::NucleusReport;
pub use search::{
    brute_force_zero_divisor, critical_set, critical_set_exhaustive, critical_value,
    max_exhaustive, theorem_pair, theorem_zero_divisor_witness, zero_divisor_search,
    DEFAULT_MAX_EXHAUSTIVE,
};
pub use subalgebra::{DoubledSubalgebraReport, SubalgebraReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Commutative,
    Left,
    Middle,
    Right,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Commutative => "commutative",
            Variant::Left => "left",
            Variant::Middle => "middle",
            Variant::Right => "right",
        }
    }

    pub fn all() -> [Variant; 4] {
        [Variant::Commutative, Variant::Left, Variant::Middle, Variant::Right]
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "commutative" | "commutative-left" => Ok(Variant::Commutative),
            "left" => Ok(Variant::Left),
            "middle" => Ok(Variant::Middle),
            "right" => Ok(Variant::Right),
            other => Err(Error::Parse(format!("unknown variant {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DicksonAlgebra<A: CoeffAlgebra> {
    coeff: A,
    sigma: A::Aut,
    c: A::Elem,
    variant: Variant,
    identity_sigma: bool,
}

impl<A: CoeffAlgebra> DicksonAlgebra<A> {
    /// Rejects σ = id unless `allow_identity` is set.
    pub fn new(
        coeff: A,
        sigma: A::Aut,
        c: A::Elem,
        variant: Variant,
        allow_identity: bool,
    ) -> Result<Self> {
        if coeff.is_zero(&c) {
            return Err(Error::ZeroConstant);
        }
        if variant == Variant::Commutative && !coeff.is_commutative() {
            return Err(Error::NonCommutativeCoefficients);
        }
        let identity_sigma = coeff.is_identity(&sigma);
        if identity_sigma && !allow_identity {
            return Err(Error::IdentitySigma);
        }
        Ok(DicksonAlgebra { coeff, sigma, c, variant, identity_sigma })
    }

    pub fn coeff(&self) -> &A {
        &self.coeff
    }

    pub fn sigma(&self) -> &A::Aut {
        &self.sigma
    }

    pub fn c(&self) -> &A::Elem {
        &self.c
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn sigma_is_identity(&self) -> bool {
        self.identity_sigma
    }

    /// Same coefficient algebra, σ and variant with a different constant.
    pub fn with_c(&self, c: A::Elem) -> Result<Self> {
        DicksonAlgebra::new(self.coeff.clone(), self.sigma.clone(), c, self.variant, true)
    }

    /// Dimension over the base field.
    pub fn dim(&self) -> usize {
        2 * self.coeff.dim()
    }

    pub fn pair(&self, u: A::Elem, v: A::Elem) -> Pair<A::Elem> {
        Pair::new(u, v)
    }

    pub fn zero(&self) -> Pair<A::Elem> {
        Pair::new(self.coeff.zero(), self.coeff.zero())
    }

    pub fn one(&self) -> Pair<A::Elem> {
        Pair::new(self.coeff.one(), self.coeff.zero())
    }

    /// (0, 1).
    pub fn lambda(&self) -> Pair<A::Elem> {
        Pair::new(self.coeff.zero(), self.coeff.one())
    }

    pub fn add(&self, p: &Pair<A::Elem>, q: &Pair<A::Elem>) -> Pair<A::Elem> {
        Pair::new(self.coeff.add(&p.u, &q.u), self.coeff.add(&p.v, &q.v))
    }

    pub fn neg(&self, p: &Pair<A::Elem>) -> Pair<A::Elem> {
        Pair::new(self.coeff.neg(&p.u), self.coeff.neg(&p.v))
    }

    pub fn sub(&self, p: &Pair<A::Elem>, q: &Pair<A::Elem>) -> Pair<A::Elem> {
        Pair::new(self.coeff.sub(&p.u, &q.u), self.coeff.sub(&p.v, &q.v))
    }

    pub fn scale(&self, s: &BaseElem<A>, p: &Pair<A::Elem>) -> Pair<A::Elem> {
        Pair::new(self.coeff.scale(s, &p.u), self.coeff.scale(s, &p.v))
    }

    pub fn is_zero(&self, p: &Pair<A::Elem>) -> bool {
        self.coeff.is_zero(&p.u) && self.coeff.is_zero(&p.v)
    }

    pub fn eq(&self, p: &Pair<A::Elem>, q: &Pair<A::Elem>) -> bool {
        self.coeff.eq_elem(&p.u, &q.u) && self.coeff.eq_elem(&p.v, &q.v)
    }

    pub fn sigma_apply(&self, a: &A::Elem) -> A::Elem {
        self.coeff.apply(&self.sigma, a)
    }

    /// The variant-dependent first-slot correction for (·, v)(·, y).
    fn twist(&self, v: &A::Elem, y: &A::Elem) -> A::Elem {
        let k = &self.coeff;
        match self.variant {
            Variant::Commutative | Variant::Left => k.mul(&self.c, &self.sigma_apply(&k.mul(v, y))),
            Variant::Middle => k.mul(&k.mul(&self.sigma_apply(v), &self.c), &self.sigma_apply(y)),
            Variant::Right => k.mul(&self.sigma_apply(&k.mul(v, y)), &self.c),
        }
    }

    pub fn mul(&self, p: &Pair<A::Elem>, q: &Pair<A::Elem>) -> Pair<A::Elem> {
        let k = &self.coeff;
        let u = k.add(&k.mul(&p.u, &q.u), &self.twist(&p.v, &q.v));
        let v = k.add(&k.mul(&p.u, &q.v), &k.mul(&p.v, &q.u));
        Pair::new(u, v)
    }

    /// (xy)z − x(yz).
    pub fn associator(
        &self,
        x: &Pair<A::Elem>,
        y: &Pair<A::Elem>,
        z: &Pair<A::Elem>,
    ) -> Pair<A::Elem> {
        self.sub(&self.mul(&self.mul(x, y), z), &self.mul(x, &self.mul(y, z)))
    }

    pub fn commutator(&self, x: &Pair<A::Elem>, y: &Pair<A::Elem>) -> Pair<A::Elem> {
        self.sub(&self.mul(x, y), &self.mul(y, x))
    }

    /// Coordinates over the base field: those of u, then those of v.
    pub fn coords(&self, p: &Pair<A::Elem>) -> Vec<BaseElem<A>> {
        let mut c = self.coeff.coords(&p.u);
        c.extend(self.coeff.coords(&p.v));
        c
    }

    pub fn from_coords(&self, c: &[BaseElem<A>]) -> Pair<A::Elem> {
        let m = self.coeff.dim();
        Pair::new(self.coeff.from_coords(&c[..m]), self.coeff.from_coords(&c[m..]))
    }

    /// {(e_i, 0)} followed by {(0, e_i)}.
    pub fn basis(&self) -> Vec<Pair<A::Elem>> {
        let kb = self.coeff.basis();
        let z = self.coeff.zero();
        kb.iter()
            .map(|e| Pair::new(e.clone(), z.clone()))
            .chain(kb.iter().map(|e| Pair::new(z.clone(), e.clone())))
            .collect()
    }

    /// `table[i][j]` = coordinates of `e_i e_j`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<BaseElem<A>>>> {
        let b = self.basis();
        b.iter()
            .map(|x| b.iter().map(|y| self.coords(&self.mul(x, y))).collect())
            .collect()
    }

    /// The product expanded bilinearly through a structure-constant table.
    pub fn mul_by_table(
        &self,
        table: &[Vec<Vec<BaseElem<A>>>],
        p: &Pair<A::Elem>,
        q: &Pair<A::Elem>,
    ) -> Pair<A::Elem> {
        let f = self.coeff.base();
        let (cp, cq) = (self.coords(p), self.coords(q));
        let n = self.dim();
        let mut out = vec![f.zero(); n];
        for (i, a) in cp.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in cq.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot = f.add(slot, &f.mul(&ab, &table[i][j][k]));
                }
            }
        }
        self.from_coords(&out)
    }

    pub fn random_pair(&self, rng: &mut dyn RngCore) -> Pair<A::Elem> {
        Pair::new(self.coeff.random_elem(rng), self.coeff.random_elem(rng))
    }

    pub fn format_pair(&self, p: &Pair<A::Elem>) -> String {
        format!("({} | {})", self.coeff.format_elem(&p.u), self.coeff.format_elem(&p.v))
    }

    /// Parses `u|v`, each side in the coefficient algebra's element syntax.
    pub fn parse_pair(&self, s: &str) -> Result<Pair<A::Elem>> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (u, v) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected u|v: {s:?}")))?;
        Ok(Pair::new(self.coeff.parse_elem(u.trim())?, self.coeff.parse_elem(v.trim())?))
    }

    /// Left inverse ℓ of `p` (ℓ p = 1), by a linear solve over the base field.
    pub fn left_inverse(&self, p: &Pair<A::Elem>) -> Option<Pair<A::Elem>> {
        // ℓ ↦ ℓ p is linear; its columns are e_i p.
        let f = self.coeff.base();
        let cols: Vec<Vec<BaseElem<A>>> =
            self.basis().iter().map(|e| self.coords(&self.mul(e, p))).collect();
        let rows = crate::linalg::columns_to_rows(&cols);
        let x = crate::linalg::solve(&f, &rows, &self.coords(&self.one()), self.dim())?;
        Some(self.from_coords(&x))
    }

    pub fn describe(&self) -> String {
        format!(
            "D({}, {}, {}) [{}]",
            self.coeff.describe(),
            self.coeff.format_aut(&self.sigma),
            self.coeff.format_elem(&self.c),
            self.variant
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteCoeffAlgebra;
    use crate::finite_field::FiniteField;
    use crate::number::QuadField;
    use crate::quaternion::QuaternionAlgebra;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf9(c: &str) -> DicksonAlgebra<FiniteField> {
        let k = FiniteField::new(3, 2, None).unwrap();
        let c = k.parse_elem(c).unwrap();
        DicksonAlgebra::new(k.clone(), k.frobenius(1), c, Variant::Commutative, false).unwrap()
    }

    #[test]
    fn construction_checks() {
        let k = FiniteField::new(3, 2, None).unwrap();
        let one = CoeffAlgebra::one(&k);
        assert_eq!(
            DicksonAlgebra::new(k.clone(), k.frobenius(0), one, Variant::Commutative, false).unwrap_err(),
            Error::IdentitySigma
        );
        assert!(DicksonAlgebra::new(k.clone(), k.frobenius(0), one, Variant::Commutative, true).is_ok());
        assert_eq!(
            DicksonAlgebra::new(k.clone(), k.frobenius(1), CoeffAlgebra::zero(&k), Variant::Left, false)
                .unwrap_err(),
            Error::ZeroConstant
        );
        let b = QuaternionAlgebra::rational(2, 3).unwrap();
        let s = b.inner(b.i()).unwrap();
        assert_eq!(
            DicksonAlgebra::new(b.clone(), s, b.i(), Variant::Commutative, false).unwrap_err(),
            Error::NonCommutativeCoefficients
        );
        let central = b.inner(b.from_ints(3, 0, 0, 0)).unwrap();
        assert_eq!(
            DicksonAlgebra::new(b.clone(), central, b.i(), Variant::Left, false).unwrap_err(),
            Error::IdentitySigma
        );
        assert_eq!("middle".parse::<Variant>().unwrap(), Variant::Middle);
        assert!("up".parse::<Variant>().is_err());
    }

    #[test]
    fn unit_and_lambda_square() {
        let d = gf9("1,1");
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..500 {
            let x = d.random_pair(&mut rng);
            assert!(d.eq(&d.mul(&d.one(), &x), &x));
            assert!(d.eq(&d.mul(&x, &d.one()), &x));
        }
        let b = QuaternionAlgebra::rational(2, 3).unwrap();
        for v in Variant::all().into_iter().skip(1) {
            let d = DicksonAlgebra::new(b.clone(), b.inner(b.i()).unwrap(), b.j(), v, false).unwrap();
            assert!(d.eq(&d.mul(&d.lambda(), &d.lambda()), &d.pair(b.j(), b.zero())));
        }
    }

    #[test]
    fn gf9_products_match_hand_values() {
        let d = gf9("0,1");
        let k = d.coeff().clone();
        let x = k.generator();
        let zero = CoeffAlgebra::zero(&k);
        let xz = d.pair(x, zero);
        let lam = d.lambda();
        assert_eq!(d.mul(&lam, &xz), d.pair(zero, x));
        assert_eq!(d.mul(&xz, &lam), d.pair(zero, x));
        // (0,x)(0,1) = (c σ(x), 0) = (x · (−x), 0) = (1, 0) since x² = −1.
        let zx = d.pair(zero, x);
        assert_eq!(d.mul(&zx, &lam), d.pair(CoeffAlgebra::one(&k), zero));
        let table = d.structure_constants();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..300 {
            let p = d.random_pair(&mut rng);
            let q = d.random_pair(&mut rng);
            assert_eq!(d.mul(&p, &q), d.mul_by_table(&table, &p, &q));
        }
    }

    #[test]
    fn commutative_and_bilinear() {
        let d = gf9("1,1");
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..500 {
            let (x, y, z) = (d.random_pair(&mut rng), d.random_pair(&mut rng), d.random_pair(&mut rng));
            assert_eq!(d.mul(&x, &y), d.mul(&y, &x));
            assert_eq!(d.mul(&x, &d.add(&y, &z)), d.add(&d.mul(&x, &y), &d.mul(&x, &z)));
            assert_eq!(d.mul(&d.add(&x, &y), &z), d.add(&d.mul(&x, &z), &d.mul(&y, &z)));
        }
        let q = QuadField::from_int(2).unwrap();
        let d = DicksonAlgebra::new(q.clone(), crate::number::QuadAut::Conjugation, q.sqrt_a(), Variant::Commutative, false).unwrap();
        for _ in 0..200 {
            let (x, y) = (d.random_pair(&mut rng), d.random_pair(&mut rng));
            assert_eq!(d.mul(&x, &y), d.mul(&y, &x));
        }
    }

    #[test]
    fn associators() {
        let d = gf9("1,1");
        let k = d.coeff().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for _ in 0..200 {
            let (y, z) = (d.random_pair(&mut rng), d.random_pair(&mut rng));
            assert!(d.is_zero(&d.associator(&d.one(), &y, &z)));
        }
        let lam = d.lambda();
        let zero = CoeffAlgebra::zero(&k);
        for a in k.elements() {
            let fixed = k.frobenius_apply(d.sigma(), &a) == a;
            let assoc = d.associator(&lam, &lam, &d.pair(a, zero));
            assert_eq!(d.is_zero(&assoc), fixed);
        }
        // Trilinearity in the first slot.
        for _ in 0..100 {
            let (x1, x2, y, z) = (
                d.random_pair(&mut rng),
                d.random_pair(&mut rng),
                d.random_pair(&mut rng),
                d.random_pair(&mut rng),
            );
            let s = k.prime_field().element(&[2]).unwrap();
            let lhs = d.associator(&d.add(&d.scale(&s, &x1), &x2), &y, &z);
            let rhs = d.add(&d.scale(&s, &d.associator(&x1, &y, &z)), &d.associator(&x2, &y, &z));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn pair_syntax() {
        let d = gf9("1,1");
        let p = d.parse_pair("1,2|0,1").unwrap();
        assert_eq!(d.format_pair(&p), "(1,2 | 0,1)");
        assert_eq!(d.parse_pair("(1,2 | 0,1)").unwrap(), p);
        assert!(d.parse_pair("1,2").is_err());
    }

    #[test]
    fn left_inverse_of_lambda() {
        let d = gf9("1,1");
        let l = d.left_inverse(&d.lambda()).unwrap();
        assert!(d.eq(&d.mul(&l, &d.lambda()), &d.one()));
    }
}
