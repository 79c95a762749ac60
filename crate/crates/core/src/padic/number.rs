//! Q_p at a fixed relative precision, p odd.
//!
//! A nonzero value is `p^val · unit + O(p^(val + prec))` with `unit` a
//! residue modulo `p^prec` prime to p. Products keep the smaller relative
//! precision; sums lose the digits that cancel.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, RngCore};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::finite_field::is_prime;
use crate::number::rational::Rational;

pub const DEFAULT_PRECISION: u32 = 32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PadicNumber {
    p: u64,
    val: i64,
    /// Zero for the zero sentinel.
    unit: BigUint,
    prec: u32,
}

impl PadicNumber {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The valuation, or `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    pub fn unit(&self) -> &BigUint {
        &self.unit
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    /// The unit part reduced mod p.
    pub fn residue(&self) -> u64 {
        (&self.unit % self.p).to_u64().unwrap()
    }
}

impl fmt::Debug for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0 (Q_{})", self.p)
        } else {
            write!(f, "{}^{}*{} + O({}^{})", self.p, self.val, self.unit, self.p, self.val + self.prec as i64)
        }
    }
}

/// Q_p with a working precision.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicField {
    p: u64,
    prec: u32,
}

fn mod_inverse(a: &BigUint, m: &BigUint) -> BigUint {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let g = a.extended_gcd(&m);
    debug_assert!(g.gcd.is_one());
    g.x.mod_floor(&m).to_biguint().unwrap()
}

/// Square root of a quadratic residue modulo an odd prime (Tonelli–Shanks).
pub fn sqrt_mod_prime(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    let pow = |mut b: u64, mut e: u64| {
        let mut r: u128 = 1;
        let mut b128 = b as u128 % p as u128;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b128 % p as u128;
            }
            b128 = b128 * b128 % p as u128;
            e >>= 1;
        }
        b = r as u64;
        b
    };
    if pow(a, (p - 1) / 2) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow(z, (p - 1) / 2) == p - 1).unwrap();
    let mut m = s;
    let mut c = pow(z, q);
    let mut t = pow(a, q);
    let mut r = pow(a, q.div_ceil(2));
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul(tt, tt);
            i += 1;
        }
        let mut b = c;
        for _ in 0..(m - i - 1) {
            b = mul(b, b);
        }
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    Some(r)
}

pub(crate) fn legendre_u64(a: u64, p: u64) -> i8 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if sqrt_mod_prime(a, p).is_some() {
        1
    } else {
        -1
    }
}

impl PadicField {
    pub fn new(p: u64, prec: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::PadicTwo);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::PrimeOutOfRange(p));
        }
        Ok(PadicField { p, prec: prec.max(1) })
    }

    pub fn with_default_precision(p: u64) -> Result<Self> {
        PadicField::new(p, DEFAULT_PRECISION)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Smallest positive quadratic non-residue mod p.
    pub fn nonresidue(&self) -> u64 {
        (2..self.p).find(|&u| legendre_u64(u, self.p) == -1).unwrap()
    }

    fn modulus(&self, prec: u32) -> BigUint {
        BigUint::from(self.p).pow(prec)
    }

    pub fn zero_elem(&self) -> PadicNumber {
        PadicNumber { p: self.p, val: 0, unit: BigUint::zero(), prec: self.prec }
    }

    /// Normalizes `p^val · m` with `m` known modulo p^prec.
    fn normalize(&self, val: i64, m: BigInt, prec: u32) -> PadicNumber {
        if prec == 0 {
            return self.zero_elem();
        }
        let modulus = BigInt::from(self.modulus(prec));
        let mut m = m.mod_floor(&modulus);
        if m.is_zero() {
            return self.zero_elem();
        }
        let p = BigInt::from(self.p);
        let mut val = val;
        let mut prec = prec;
        while (&m % &p).is_zero() {
            m /= &p;
            val += 1;
            prec -= 1;
        }
        PadicNumber { p: self.p, val, unit: m.to_biguint().unwrap(), prec: prec.min(self.prec) }
    }

    pub fn from_bigint(&self, n: &BigInt) -> PadicNumber {
        if n.is_zero() {
            return self.zero_elem();
        }
        let p = BigInt::from(self.p);
        let mut m = n.clone();
        let mut val = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            val += 1;
        }
        self.normalize(val, m, self.prec)
    }

    pub fn from_int(&self, n: i64) -> PadicNumber {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_rational(&self, r: &Rational) -> Result<PadicNumber> {
        let num = self.from_bigint(r.numer());
        let den = self.from_bigint(r.denom());
        Ok(self.mul_elem(&num, &self.inv_elem(&den)?))
    }

    /// `p^val · unit`; `unit` is reduced and its p-part absorbed.
    pub fn from_parts(&self, val: i64, unit: &BigInt) -> PadicNumber {
        if unit.is_zero() {
            return self.zero_elem();
        }
        let u = self.from_bigint(unit);
        PadicNumber { val: u.val + val, ..u }
    }

    pub fn uniformizer(&self) -> PadicNumber {
        self.from_int(self.p as i64)
    }

    pub fn add_elem(&self, a: &PadicNumber, b: &PadicNumber) -> PadicNumber {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        let (lo, hi) = if a.val <= b.val { (a, b) } else { (b, a) };
        let abs_prec = (lo.val + lo.prec as i64).min(hi.val + hi.prec as i64);
        let rel = (abs_prec - lo.val) as u32;
        let shift = (hi.val - lo.val) as u32;
        let m = BigInt::from(lo.unit.clone())
            + BigInt::from(hi.unit.clone()) * BigInt::from(self.p).pow(shift);
        self.normalize(lo.val, m, rel)
    }

    pub fn neg_elem(&self, a: &PadicNumber) -> PadicNumber {
        if a.is_zero() {
            return a.clone();
        }
        let m = self.modulus(a.prec);
        PadicNumber { unit: (&m - &a.unit) % &m, ..a.clone() }
    }

    pub fn sub_elem(&self, a: &PadicNumber, b: &PadicNumber) -> PadicNumber {
        self.add_elem(a, &self.neg_elem(b))
    }

    pub fn mul_elem(&self, a: &PadicNumber, b: &PadicNumber) -> PadicNumber {
        if a.is_zero() || b.is_zero() {
            return self.zero_elem();
        }
        let prec = a.prec.min(b.prec);
        let m = self.modulus(prec);
        PadicNumber { p: self.p, val: a.val + b.val, unit: (&a.unit * &b.unit) % m, prec }
    }

    pub fn inv_elem(&self, a: &PadicNumber) -> Result<PadicNumber> {
        if a.is_zero() {
            return Err(Error::ZeroInversion);
        }
        let m = self.modulus(a.prec);
        Ok(PadicNumber { p: self.p, val: -a.val, unit: mod_inverse(&a.unit, &m), prec: a.prec })
    }

    /// Square test from valuation parity and the residue of the unit.
    pub fn padic_is_square(&self, z: &PadicNumber) -> Result<bool> {
        if z.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(z.val % 2 == 0 && legendre_u64(z.residue(), self.p) == 1)
    }

    /// Square root by Tonelli–Shanks on the residue and Newton lifting.
    pub fn padic_sqrt(&self, z: &PadicNumber) -> Option<PadicNumber> {
        if z.is_zero() {
            return Some(z.clone());
        }
        if !self.padic_is_square(z).ok()? {
            return None;
        }
        let r0 = sqrt_mod_prime(z.residue(), self.p)?;
        let m = BigInt::from(self.modulus(z.prec));
        let u = BigInt::from(z.unit.clone());
        let mut x = BigInt::from(r0);
        // Each step doubles the number of correct digits.
        let mut correct = 1u32;
        while correct < z.prec {
            let fx = (&x * &x - &u).mod_floor(&m);
            let two_x = (BigInt::from(2) * &x).mod_floor(&m);
            let inv = mod_inverse(&two_x.to_biguint().unwrap(), &m.to_biguint().unwrap());
            x = (&x - fx * BigInt::from(inv)).mod_floor(&m);
            correct *= 2;
        }
        let root = PadicNumber { p: self.p, val: z.val / 2, unit: x.to_biguint().unwrap(), prec: z.prec };
        // Canonical root: the one whose unit residue is at most (p-1)/2.
        if root.residue() > (self.p - 1) / 2 {
            Some(self.neg_elem(&root))
        } else {
            Some(root)
        }
    }

    /// Parses `val:unit` or a plain integer (or fraction).
    pub fn parse_elem(&self, s: &str) -> Result<PadicNumber> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad p-adic literal {s:?}"));
        if let Some((v, u)) = s.split_once(':') {
            let v: i64 = v.trim().parse().map_err(|_| bad())?;
            let u: BigInt = u.trim().parse().map_err(|_| bad())?;
            return Ok(self.from_parts(v, &u));
        }
        let r = crate::number::rational::parse_rational(s).map_err(|_| bad())?;
        self.from_rational(&r)
    }

    pub fn format_elem(&self, a: &PadicNumber) -> String {
        if a.is_zero() {
            "0".into()
        } else {
            // Print the unit as a balanced residue when it is small, so exact
            // integers stay recognizable.
            let m = self.modulus(a.prec);
            let half = &m >> 1u32;
            let unit = if a.unit > half {
                format!("-{}", &m - &a.unit)
            } else {
                a.unit.to_string()
            };
            format!("{}:{}", a.val, unit)
        }
    }

    pub fn cmp(&self, a: &PadicNumber, b: &PadicNumber) -> Ordering {
        (a.is_zero(), a.val, &a.unit).cmp(&(b.is_zero(), b.val, &b.unit))
    }

    pub fn random_elem(&self, rng: &mut dyn RngCore) -> PadicNumber {
        let val = rng.gen_range(-1..=2);
        loop {
            let u: i64 = rng.gen_range(-500..=500);
            if u % self.p as i64 != 0 {
                return self.from_parts(val, &BigInt::from(u));
            }
        }
    }

    /// Unit test for equality up to the shared precision.
    pub fn approx_eq(&self, a: &PadicNumber, b: &PadicNumber) -> bool {
        self.sub_elem(a, b).is_zero()
    }
}

impl Field for PadicField {
    type Elem = PadicNumber;

    fn zero(&self) -> PadicNumber {
        self.zero_elem()
    }

    fn one(&self) -> PadicNumber {
        self.from_int(1)
    }

    fn from_i64(&self, n: i64) -> PadicNumber {
        self.from_int(n)
    }

    fn add(&self, a: &PadicNumber, b: &PadicNumber) -> PadicNumber {
        self.add_elem(a, b)
    }

    fn neg(&self, a: &PadicNumber) -> PadicNumber {
        self.neg_elem(a)
    }

    fn sub(&self, a: &PadicNumber, b: &PadicNumber) -> PadicNumber {
        self.sub_elem(a, b)
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

    fn characteristic(&self) -> u64 {
        0
    }

    fn has_square_root(&self, a: &PadicNumber) -> bool {
        a.is_zero() || self.padic_is_square(a).unwrap_or(false)
    }

    fn sqrt(&self, a: &PadicNumber) -> Option<PadicNumber> {
        self.padic_sqrt(a)
    }

    fn cmp_elem(&self, a: &PadicNumber, b: &PadicNumber) -> Ordering {
        self.cmp(a, b)
    }

    fn format(&self, a: &PadicNumber) -> String {
        self.format_elem(a)
    }

    fn parse(&self, s: &str) -> Result<PadicNumber> {
        self.parse_elem(s)
    }

    fn random(&self, rng: &mut dyn RngCore) -> PadicNumber {
        self.random_elem(rng)
    }
}
