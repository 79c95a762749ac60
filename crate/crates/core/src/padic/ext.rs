//! The three quadratic extensions Q_p(√p), Q_p(√u), Q_p(√(up)).

use std::fmt;

use rand::RngCore;

use super::number::{legendre_u64, PadicField, PadicNumber};
use crate::algebra::{CoeffAlgebra, SquareRoot};
use crate::error::{Error, Result};
use crate::number::QuadAut;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtKind {
    SqrtP,
    SqrtU,
    SqrtUp,
}

impl ExtKind {
    pub fn name(&self) -> &'static str {
        match self {
            ExtKind::SqrtP => "sqrt_p",
            ExtKind::SqrtU => "sqrt_u",
            ExtKind::SqrtUp => "sqrt_up",
        }
    }

    pub fn all() -> [ExtKind; 3] {
        [ExtKind::SqrtP, ExtKind::SqrtU, ExtKind::SqrtUp]
    }

    pub fn is_ramified(&self) -> bool {
        !matches!(self, ExtKind::SqrtU)
    }
}

/// K^×/(K^×)², for K = Q_p or a quadratic extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SquareClass {
    One,
    U,
    Pi,
    UPi,
}

impl SquareClass {
    pub fn from_bits(unit_bit: bool, pi_bit: bool) -> Self {
        match (unit_bit, pi_bit) {
            (false, false) => SquareClass::One,
            (true, false) => SquareClass::U,
            (false, true) => SquareClass::Pi,
            (true, true) => SquareClass::UPi,
        }
    }

    /// (non-square unit part, odd valuation).
    pub fn bits(&self) -> (bool, bool) {
        match self {
            SquareClass::One => (false, false),
            SquareClass::U => (true, false),
            SquareClass::Pi => (false, true),
            SquareClass::UPi => (true, true),
        }
    }

    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        let (a, b) = self.bits();
        let (c, d) = other.bits();
        SquareClass::from_bits(a ^ c, b ^ d)
    }

    pub fn label(&self) -> &'static str {
        match self {
            SquareClass::One => "1",
            SquareClass::U => "u",
            SquareClass::Pi => "π",
            SquareClass::UPi => "uπ",
        }
    }

    pub fn all() -> [SquareClass; 4] {
        [SquareClass::One, SquareClass::U, SquareClass::Pi, SquareClass::UPi]
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Square class of a nonzero element of Q_p (π = p, u = smallest non-residue).
pub fn square_class_qp(k: &PadicField, z: &PadicNumber) -> Result<SquareClass> {
    let v = z.valuation().ok_or(Error::ZeroInput)?;
    let qr = legendre_u64(z.residue(), k.p()) == 1;
    Ok(SquareClass::from_bits(!qr, v.rem_euclid(2) == 1))
}

/// `a + b·α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicQuadElem {
    pub a: PadicNumber,
    pub b: PadicNumber,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicQuadExt {
    base: PadicField,
    kind: ExtKind,
    u: u64,
    /// α².
    d: PadicNumber,
    /// A non-square unit of K, used as the `u` class representative.
    eta: (i64, i64),
}

impl PadicQuadExt {
    pub fn new(base: &PadicField, kind: ExtKind) -> Self {
        let p = base.p();
        let u = base.nonresidue();
        let d = match kind {
            ExtKind::SqrtP => p,
            ExtKind::SqrtU => u,
            ExtKind::SqrtUp => u * p,
        };
        let eta = match kind {
            ExtKind::SqrtU => {
                // Every rational unit is a square in the unramified extension;
                // pick the first a + bα whose residue norm is a non-residue.
                let mut found = None;
                'outer: for a in 0..p as i64 {
                    for b in 0..p as i64 {
                        let n = (a * a - (u as i64) * b * b).rem_euclid(p as i64) as u64;
                        if n != 0 && legendre_u64(n, p) == -1 {
                            found = Some((a, b));
                            break 'outer;
                        }
                    }
                }
                found.expect("the residue norm is surjective")
            }
            _ => (u as i64, 0),
        };
        PadicQuadExt { base: base.clone(), kind, u, d: base.from_int(d as i64), eta }
    }

    /// Parses `qp(p;sqrt_p)`, `qp(p;sqrt_u)` or `qp(p;sqrt_up)`.
    pub fn parse_spec(s: &str, prec: u32) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("qp(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected qp(p;kind): {s}")))?;
        let (p, kind) = body
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected qp(p;kind): {s}")))?;
        let p: u64 = p.trim().parse().map_err(|_| Error::Parse(p.into()))?;
        let kind = match kind.trim() {
            "sqrt_p" => ExtKind::SqrtP,
            "sqrt_u" => ExtKind::SqrtU,
            "sqrt_up" => ExtKind::SqrtUp,
            other => return Err(Error::Parse(format!("unknown extension kind {other:?}"))),
        };
        Ok(PadicQuadExt::new(&PadicField::new(p, prec)?, kind))
    }

    pub fn base_field(&self) -> &PadicField {
        &self.base
    }

    pub fn kind(&self) -> ExtKind {
        self.kind
    }

    pub fn nonresidue(&self) -> u64 {
        self.u
    }

    /// α².
    pub fn alpha_squared(&self) -> &PadicNumber {
        &self.d
    }

    pub fn elem(&self, a: PadicNumber, b: PadicNumber) -> PadicQuadElem {
        PadicQuadElem { a, b }
    }

    pub fn from_ints(&self, a: i64, b: i64) -> PadicQuadElem {
        PadicQuadElem { a: self.base.from_int(a), b: self.base.from_int(b) }
    }

    pub fn alpha(&self) -> PadicQuadElem {
        self.from_ints(0, 1)
    }

    /// The uniformizer: α when ramified, p otherwise.
    pub fn uniformizer(&self) -> PadicQuadElem {
        if self.kind.is_ramified() {
            self.alpha()
        } else {
            self.from_ints(self.base.p() as i64, 0)
        }
    }

    pub fn class_representative(&self, c: SquareClass) -> PadicQuadElem {
        let eta = self.from_ints(self.eta.0, self.eta.1);
        let pi = self.uniformizer();
        match c {
            SquareClass::One => self.from_ints(1, 0),
            SquareClass::U => eta,
            SquareClass::Pi => pi,
            SquareClass::UPi => self.ext_mul(&eta, &pi),
        }
    }

    pub fn ext_add(&self, x: &PadicQuadElem, y: &PadicQuadElem) -> PadicQuadElem {
        let k = &self.base;
        PadicQuadElem { a: k.add_elem(&x.a, &y.a), b: k.add_elem(&x.b, &y.b) }
    }

    pub fn ext_neg(&self, x: &PadicQuadElem) -> PadicQuadElem {
        let k = &self.base;
        PadicQuadElem { a: k.neg_elem(&x.a), b: k.neg_elem(&x.b) }
    }

    pub fn ext_mul(&self, x: &PadicQuadElem, y: &PadicQuadElem) -> PadicQuadElem {
        let k = &self.base;
        let bb = k.mul_elem(&self.d, &k.mul_elem(&x.b, &y.b));
        PadicQuadElem {
            a: k.add_elem(&k.mul_elem(&x.a, &y.a), &bb),
            b: k.add_elem(&k.mul_elem(&x.a, &y.b), &k.mul_elem(&x.b, &y.a)),
        }
    }

    pub fn conjugate(&self, x: &PadicQuadElem) -> PadicQuadElem {
        PadicQuadElem { a: x.a.clone(), b: self.base.neg_elem(&x.b) }
    }

    /// a² − α²b².
    pub fn ext_norm(&self, x: &PadicQuadElem) -> PadicNumber {
        let k = &self.base;
        k.sub_elem(&k.mul_elem(&x.a, &x.a), &k.mul_elem(&self.d, &k.mul_elem(&x.b, &x.b)))
    }

    pub fn ext_inv(&self, x: &PadicQuadElem) -> Result<PadicQuadElem> {
        let n = self.ext_norm(x);
        if n.is_zero() {
            return Err(Error::ZeroInversion);
        }
        let ni = self.base.inv_elem(&n)?;
        let c = self.conjugate(x);
        Ok(PadicQuadElem { a: self.base.mul_elem(&c.a, &ni), b: self.base.mul_elem(&c.b, &ni) })
    }

    pub fn scale(&self, s: &PadicNumber, x: &PadicQuadElem) -> PadicQuadElem {
        PadicQuadElem { a: self.base.mul_elem(s, &x.a), b: self.base.mul_elem(s, &x.b) }
    }

    pub fn ext_is_zero(&self, x: &PadicQuadElem) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }

    /// (valuation w.r.t. π, whether the residue of z/π^v is a square).
    fn class_data(&self, z: &PadicQuadElem) -> Result<(i64, bool)> {
        let p = self.base.p();
        let (va, vb) = (z.a.valuation(), z.b.valuation());
        if va.is_none() && vb.is_none() {
            return Err(Error::ZeroInput);
        }
        if self.kind.is_ramified() {
            // α² = p·w with w ∈ {1, u}; p^k = π^{2k} w^{-k}.
            let w = if self.kind == ExtKind::SqrtP { 1 } else { self.u };
            let lw = legendre_u64(w, p);
            let use_a = match (va, vb) {
                (Some(a), Some(b)) => a <= b,
                (Some(_), None) => true,
                _ => false,
            };
            if use_a {
                let k = va.unwrap();
                let sign = if k.rem_euclid(2) == 1 { lw } else { 1 };
                Ok((2 * k, sign * legendre_u64(z.a.residue(), p) == 1))
            } else {
                let k = vb.unwrap();
                let sign = if k.rem_euclid(2) == 1 { lw } else { 1 };
                Ok((2 * k + 1, sign * legendre_u64(z.b.residue(), p) == 1))
            }
        } else {
            let k = match (va, vb) {
                (Some(a), Some(b)) => a.min(b),
                (Some(a), None) => a,
                (None, Some(b)) => b,
                _ => unreachable!(),
            };
            let res = |x: &PadicNumber, v: Option<i64>| match v {
                Some(v) if v == k => x.residue() as i128,
                _ => 0,
            };
            let (ra, rb) = (res(&z.a, va), res(&z.b, vb));
            let n = (ra * ra - self.u as i128 * rb * rb).rem_euclid(p as i128) as u64;
            Ok((k, legendre_u64(n, p) == 1))
        }
    }

    pub fn pi_valuation(&self, z: &PadicQuadElem) -> Result<i64> {
        Ok(self.class_data(z)?.0)
    }

    pub fn padic_is_square(&self, z: &PadicQuadElem) -> Result<bool> {
        let (v, qr) = self.class_data(z)?;
        Ok(v.rem_euclid(2) == 0 && qr)
    }

    pub fn square_class(&self, z: &PadicQuadElem) -> Result<SquareClass> {
        let (v, qr) = self.class_data(z)?;
        Ok(SquareClass::from_bits(!qr, v.rem_euclid(2) == 1))
    }

    pub fn approx_eq(&self, x: &PadicQuadElem, y: &PadicQuadElem) -> bool {
        self.ext_is_zero(&self.ext_add(x, &self.ext_neg(y)))
    }

    /// Solves (s + tα)² = a + bα.
    pub fn ext_sqrt(&self, z: &PadicQuadElem) -> Option<PadicQuadElem> {
        if self.ext_is_zero(z) {
            return Some(z.clone());
        }
        if !self.padic_is_square(z).ok()? {
            return None;
        }
        let k = &self.base;
        let zero = k.zero_elem();
        let two_inv = k.inv_elem(&k.from_int(2)).ok()?;
        let mut candidates = Vec::new();
        if z.b.is_zero() {
            if let Some(s) = k.padic_sqrt(&z.a) {
                candidates.push(PadicQuadElem { a: s, b: zero.clone() });
            }
            let q = k.mul_elem(&z.a, &k.inv_elem(&self.d).ok()?);
            if let Some(t) = k.padic_sqrt(&q) {
                candidates.push(PadicQuadElem { a: zero.clone(), b: t });
            }
        } else {
            let r = k.padic_sqrt(&self.ext_norm(z))?;
            for r in [r.clone(), k.neg_elem(&r)] {
                let half = k.mul_elem(&k.add_elem(&z.a, &r), &two_inv);
                if half.is_zero() {
                    continue;
                }
                if let Some(s) = k.padic_sqrt(&half) {
                    let t = k.mul_elem(&z.b, &k.mul_elem(&two_inv, &k.inv_elem(&s).ok()?));
                    candidates.push(PadicQuadElem { a: s, b: t });
                }
            }
        }
        candidates.into_iter().find(|r| self.approx_eq(&self.ext_mul(r, r), z))
    }
}

impl CoeffAlgebra for PadicQuadExt {
    type Base = PadicField;
    type Elem = PadicQuadElem;
    type Aut = QuadAut;

    fn base(&self) -> PadicField {
        self.base.clone()
    }

    fn dim(&self) -> usize {
        2
    }

    fn zero(&self) -> PadicQuadElem {
        self.from_ints(0, 0)
    }

    fn one(&self) -> PadicQuadElem {
        self.from_ints(1, 0)
    }

    fn add(&self, a: &PadicQuadElem, b: &PadicQuadElem) -> PadicQuadElem {
        self.ext_add(a, b)
    }

    fn neg(&self, a: &PadicQuadElem) -> PadicQuadElem {
        self.ext_neg(a)
    }

    fn mul(&self, a: &PadicQuadElem, b: &PadicQuadElem) -> PadicQuadElem {
        self.ext_mul(a, b)
    }

    fn inv(&self, a: &PadicQuadElem) -> Option<PadicQuadElem> {
        self.ext_inv(a).ok()
    }

    fn is_zero(&self, a: &PadicQuadElem) -> bool {
        self.ext_is_zero(a)
    }

    fn scalar(&self, s: &PadicNumber) -> PadicQuadElem {
        PadicQuadElem { a: s.clone(), b: self.base.zero_elem() }
    }

    fn coords(&self, a: &PadicQuadElem) -> Vec<PadicNumber> {
        vec![a.a.clone(), a.b.clone()]
    }

    fn from_coords(&self, c: &[PadicNumber]) -> PadicQuadElem {
        PadicQuadElem { a: c[0].clone(), b: c[1].clone() }
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn norm(&self, a: &PadicQuadElem) -> PadicNumber {
        self.ext_norm(a)
    }

    fn square_root(&self, a: &PadicQuadElem) -> SquareRoot<PadicQuadElem> {
        match self.padic_is_square(a) {
            Ok(false) => SquareRoot::NotSquare,
            _ => match self.ext_sqrt(a) {
                Some(r) => SquareRoot::Root(r),
                None => SquareRoot::Unknown,
            },
        }
    }

    fn identity_aut(&self) -> QuadAut {
        QuadAut::Identity
    }

    fn apply(&self, t: &QuadAut, a: &PadicQuadElem) -> PadicQuadElem {
        match t {
            QuadAut::Identity => a.clone(),
            QuadAut::Conjugation => self.conjugate(a),
        }
    }

    fn compose(&self, f: &QuadAut, g: &QuadAut) -> QuadAut {
        if f == g {
            QuadAut::Identity
        } else {
            QuadAut::Conjugation
        }
    }

    fn aut_inverse(&self, f: &QuadAut) -> QuadAut {
        *f
    }

    fn aut_eq(&self, f: &QuadAut, g: &QuadAut) -> bool {
        f == g
    }

    fn automorphism_group(&self) -> Option<Vec<QuadAut>> {
        Some(vec![QuadAut::Identity, QuadAut::Conjugation])
    }

    fn format_elem(&self, a: &PadicQuadElem) -> String {
        format!("{},{}", self.base.format_elem(&a.a), self.base.format_elem(&a.b))
    }

    /// `a,b` with each part `val:unit` or an integer.
    fn parse_elem(&self, s: &str) -> Result<PadicQuadElem> {
        match s.split(',').collect::<Vec<_>>().as_slice() {
            [a] => Ok(PadicQuadElem { a: self.base.parse_elem(a)?, b: self.base.zero_elem() }),
            [a, b] => Ok(PadicQuadElem { a: self.base.parse_elem(a)?, b: self.base.parse_elem(b)? }),
            _ => Err(Error::Parse(format!("bad extension element {s:?}"))),
        }
    }

    fn format_aut(&self, t: &QuadAut) -> String {
        match t {
            QuadAut::Identity => "id".into(),
            QuadAut::Conjugation => "conj".into(),
        }
    }

    fn random_elem(&self, rng: &mut dyn RngCore) -> PadicQuadElem {
        PadicQuadElem { a: self.base.random_elem(rng), b: self.base.random_elem(rng) }
    }

    fn describe(&self) -> String {
        format!("qp({};{})", self.base.p(), self.kind.name())
    }
}

/// Q_p doubled over itself (σ = id only).
impl CoeffAlgebra for PadicField {
    type Base = PadicField;
    type Elem = PadicNumber;
    type Aut = QuadAut;

    fn base(&self) -> PadicField {
        self.clone()
    }

    fn dim(&self) -> usize {
        1
    }

    fn zero(&self) -> PadicNumber {
        self.zero_elem()
    }

    fn one(&self) -> PadicNumber {
        self.from_int(1)
    }

    fn add(&self, a: &PadicNumber, b: &PadicNumber) -> PadicNumber {
        self.add_elem(a, b)
    }

    fn neg(&self, a: &PadicNumber) -> PadicNumber {
        self.neg_elem(a)
    }

    fn mul(&self, a: &PadicNumber, b: &PadicNumber) -> PadicNumber {
        self.mul_elem(a, b)
    }

    fn inv(&self, a: &PadicNumber) -> Option<PadicNumber> {
        self.inv_elem(a).ok()
    }

    fn is_zero(&self, a: &PadicNumber) -> bool {
        a.is_zero()
    }

    fn scalar(&self, s: &PadicNumber) -> PadicNumber {
        s.clone()
    }

    fn coords(&self, a: &PadicNumber) -> Vec<PadicNumber> {
        vec![a.clone()]
    }

    fn from_coords(&self, c: &[PadicNumber]) -> PadicNumber {
        c[0].clone()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn norm(&self, a: &PadicNumber) -> PadicNumber {
        a.clone()
    }

    fn square_root(&self, a: &PadicNumber) -> SquareRoot<PadicNumber> {
        match self.padic_sqrt(a) {
            Some(r) => SquareRoot::Root(r),
            None => SquareRoot::NotSquare,
        }
    }

    fn identity_aut(&self) -> QuadAut {
        QuadAut::Identity
    }

    fn apply(&self, _t: &QuadAut, a: &PadicNumber) -> PadicNumber {
        a.clone()
    }

    fn compose(&self, _f: &QuadAut, _g: &QuadAut) -> QuadAut {
        QuadAut::Identity
    }

    fn aut_inverse(&self, _f: &QuadAut) -> QuadAut {
        QuadAut::Identity
    }

    fn automorphism_group(&self) -> Option<Vec<QuadAut>> {
        Some(vec![QuadAut::Identity])
    }

    fn format_elem(&self, a: &PadicNumber) -> String {
        PadicField::format_elem(self, a)
    }

    fn parse_elem(&self, s: &str) -> Result<PadicNumber> {
        PadicField::parse_elem(self, s)
    }

    fn format_aut(&self, _t: &QuadAut) -> String {
        "id".into()
    }

    fn random_elem(&self, rng: &mut dyn RngCore) -> PadicNumber {
        PadicField::random_elem(self, rng)
    }

    fn describe(&self) -> String {
        format!("qp({})", self.p())
    }
}

/// Parses `qp(p)`.
pub fn parse_qp_spec(s: &str, prec: u32) -> Result<PadicField> {
    let body = s
        .trim()
        .strip_prefix("qp(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected qp(p): {s}")))?;
    let p: u64 = body.trim().parse().map_err(|_| Error::Parse(body.into()))?;
    PadicField::new(p, prec)
}
