//! Exact arithmetic in GF(p^n).
//!
//! A field is presented as F_p[x]/(f) for a monic irreducible `f`; when no
//! modulus is supplied the lexicographically smallest one is chosen
//! (coefficients compared from the constant term upwards), so every report is
//! reproducible. Elements are stored as the integer `sum c_i p^i` of their
//! coefficient sequence, and multiplication goes through exp/log tables built
//! once per field from a primitive element.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, RngCore};

use crate::algebra::{CoeffAlgebra, FiniteCoeffAlgebra, SquareRoot};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg;

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// A validated prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::PrimeOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// Dense polynomials over F_p, ascending coefficients.
mod poly {
    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let mut m = m.to_vec();
        trim(&mut m);
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let d = r.len() - 1;
            let f = r[d] * lead_inv % p;
            for (i, &mi) in m.iter().enumerate() {
                let idx = d - dm + i;
                r[idx] = (r[idx] + p - f * mi % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x * y) % p;
            }
        }
        rem(&r, m, p)
    }

    pub fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut result = vec![1u64];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                result = mulmod(&result, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            e >>= 1;
        }
        rem(&result, m, p)
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut r: Vec<u64> = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut r);
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    pub fn inv_mod(a: u64, p: u64) -> u64 {
        let mut r = 1u64;
        let mut b = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    /// gcd(X^{p^k} - X, f) = 1 for 1 <= k < n and X^{p^n} = X mod f.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let n = f.len() - 1;
        if n == 1 {
            return true;
        }
        let x = vec![0u64, 1];
        let mut xp = x.clone();
        for k in 1..=n {
            xp = powmod(&xp, p, f, p);
            let diff = sub(&xp, &x, p);
            if k < n {
                let g = gcd(&diff, f, p);
                if g.len() != 1 {
                    return false;
                }
            } else if !diff.is_empty() {
                return false;
            }
        }
        true
    }
}

struct Inner {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    tag: u32,
    /// `exp[i] = g^i`, stored twice over so sums of logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for Inner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {:?})", self.p, self.n, self.modulus)
    }
}

/// GF(p^n), cheap to clone.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
    prime: Arc<Inner>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p
            && self.inner.n == other.inner.n
            && self.inner.modulus == other.inner.modulus
    }
}

impl Eq for FiniteField {}

/// An element of some GF(p^n). Carries its field's parameters so it can be
/// printed and checked against its parent.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    p: u32,
    n: u32,
    tag: u32,
}

impl FieldElement {
    /// The integer encoding `sum c_i p^i`.
    pub fn value(&self) -> u32 {
        self.value
    }

    /// Coefficients in ascending degree, length n.
    pub fn coeffs(&self) -> Vec<u32> {
        let mut v = self.value;
        (0..self.n)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// x -> x^{p^exponent}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frobenius {
    pub exponent: u32,
}

/// Which subfield a norm is taken down to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subfield {
    Prime,
    /// Fix(phi^k).
    FixedBy(u32),
}

/// Fix(tau) as an abstract field together with its image inside the parent.
#[derive(Debug, Clone)]
pub struct FixedField {
    pub field: FiniteField,
    /// An F_p-basis of the fixed subspace, in echelon form.
    pub basis: Vec<FieldElement>,
    pub elements: Vec<FieldElement>,
    /// Image of the generator x of `field` in the parent.
    pub generator_image: FieldElement,
}

fn fingerprint(p: u32, n: u32, modulus: &[u32]) -> u32 {
    let mut h: u32 = 0x811c_9dc5;
    for w in [p, n].iter().chain(modulus) {
        for b in w.to_le_bytes() {
            h ^= b as u32;
            h = h.wrapping_mul(0x0100_0193);
        }
    }
    h
}

impl FiniteField {
    /// GF(p^n), with the smallest monic irreducible modulus when `modulus` is
    /// `None`. A supplied modulus is in ascending order including the leading 1.
    pub fn new(p: u64, n: u32, modulus: Option<&[u32]>) -> Result<Self> {
        let prime = PrimeField::new(p)?;
        if n == 0 {
            return Err(Error::InvalidDegree(n));
        }
        let q = (p as u128).pow(n);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge(q.min(u64::MAX as u128) as u64));
        }
        let p32 = prime.p();
        let modulus: Vec<u32> = match modulus {
            Some(m) => {
                if m.len() != n as usize + 1 || m[n as usize] != 1 || m.iter().any(|&c| c >= p32)
                {
                    return Err(Error::BadModulus { expected: n });
                }
                let f: Vec<u64> = m.iter().map(|&c| c as u64).collect();
                if !poly::is_irreducible(&f, p) {
                    return Err(Error::ReducibleModulus(format_poly(m)));
                }
                m.to_vec()
            }
            None => smallest_irreducible(p32, n),
        };
        let inner = Arc::new(build_inner(p32, n, modulus));
        let prime = if n == 1 {
            inner.clone()
        } else {
            Arc::new(build_inner(p32, 1, vec![0, 1]))
        };
        Ok(FiniteField { inner, prime })
    }

    /// Parses `gf(p,n)` or `gf(p,n;c0,c1,...,1)`.
    pub fn parse_spec(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected gf(p,n): {s}")))?;
        let (head, modulus) = match body.split_once(';') {
            Some((h, m)) => (h, Some(parse_u32_list(m)?)),
            None => (body, None),
        };
        let parts: Vec<&str> = head.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected gf(p,n): {s}")));
        }
        let p: u64 = parts[0].parse().map_err(|_| Error::Parse(parts[0].into()))?;
        let n: u32 = parts[1].parse().map_err(|_| Error::Parse(parts[1].into()))?;
        FiniteField::new(p, n, modulus.as_deref())
    }

    pub fn characteristic_p(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.n
    }

    pub fn size(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn prime_field(&self) -> FiniteField {
        FiniteField {
            inner: self.prime.clone(),
            prime: self.prime.clone(),
        }
    }

    fn wrap(&self, value: u32) -> FieldElement {
        FieldElement {
            value,
            p: self.inner.p,
            n: self.inner.n,
            tag: self.inner.tag,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        self.wrap(self.add_raw(a.value, b.value))
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.wrap(self.neg_raw(a.value))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.wrap(self.add_raw(a.value, self.neg_raw(b.value)))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        self.wrap(self.mul_raw(a.value, b.value))
    }

    pub fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        if a.value == 0 {
            return None;
        }
        let order = self.inner.q - 1;
        let l = self.inner.log[a.value as usize];
        Some(self.wrap(self.inner.exp[((order - l) % order) as usize]))
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.value == 0
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        a.tag == self.inner.tag && a.p == self.inner.p && a.n == self.inner.n && a.value < self.inner.q
    }

    fn check(&self, a: &FieldElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    /// Element from ascending coefficients (at most n, each reduced mod p).
    pub fn element(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() > self.inner.n as usize {
            return Err(Error::Parse(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.inner.n
            )));
        }
        let p = self.inner.p as i64;
        let mut v: u64 = 0;
        for &c in coeffs.iter().rev() {
            v = v * p as u64 + c.rem_euclid(p) as u64;
        }
        Ok(self.wrap(v as u32))
    }

    pub fn from_value(&self, value: u32) -> Result<FieldElement> {
        if value >= self.inner.q {
            return Err(Error::Parse(format!("value {value} out of range")));
        }
        Ok(self.wrap(value))
    }

    /// The class of x.
    pub fn generator(&self) -> FieldElement {
        if self.inner.n == 1 {
            // x reduces to 0 modulo X; use the residue of x instead.
            let m0 = self.inner.modulus[0];
            return self.wrap((self.inner.p - m0) % self.inner.p);
        }
        self.wrap(self.inner.p)
    }

    /// A primitive element (generator of the multiplicative group).
    pub fn primitive_element(&self) -> FieldElement {
        self.wrap(self.inner.exp[1])
    }

    // Raw arithmetic on encoded values.

    fn add_raw(&self, a: u32, b: u32) -> u32 {
        let p = self.inner.p;
        if self.inner.n == 1 {
            return ((a as u64 + b as u64) % p as u64) as u32;
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut x, mut y, mut r, mut m) = (a, b, 0u32, 1u32);
        for _ in 0..self.inner.n {
            let d = (x % p + y % p) % p;
            r += d * m;
            m = m.wrapping_mul(p);
            x /= p;
            y /= p;
        }
        r
    }

    fn neg_raw(&self, a: u32) -> u32 {
        let p = self.inner.p;
        if p == 2 {
            return a;
        }
        if self.inner.n == 1 {
            return (p - a) % p;
        }
        let (mut x, mut r, mut m) = (a, 0u32, 1u32);
        for _ in 0..self.inner.n {
            let d = (p - x % p) % p;
            r += d * m;
            m = m.wrapping_mul(p);
            x /= p;
        }
        r
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let i = self.inner.log[a as usize] + self.inner.log[b as usize];
        self.inner.exp[i as usize]
    }

    fn pow_raw(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.inner.q - 1) as u64;
        let l = (self.inner.log[a as usize] as u64 * (e % order)) % order;
        self.inner.exp[l as usize]
    }

    pub fn pow(&self, a: &FieldElement, e: u64) -> FieldElement {
        self.wrap(self.pow_raw(a.value, e))
    }

    /// Multiplication through polynomial arithmetic modulo the modulus,
    /// bypassing the tables. Reference implementation for tests.
    pub fn mul_reference(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.inner.p as u64;
        let m: Vec<u64> = self.inner.modulus.iter().map(|&c| c as u64).collect();
        let ca: Vec<u64> = a.coeffs().iter().map(|&c| c as u64).collect();
        let cb: Vec<u64> = b.coeffs().iter().map(|&c| c as u64).collect();
        let r = poly::mulmod(&ca, &cb, &m, p);
        self.wrap(encode(&r, self.inner.p))
    }

    pub fn try_add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.add_raw(a.value, b.value)))
    }

    pub fn try_sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.add_raw(a.value, self.neg_raw(b.value))))
    }

    pub fn try_mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.mul_raw(a.value, b.value)))
    }

    pub fn try_inv(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        Field::inv(self, a).ok_or(Error::ZeroInversion)
    }

    pub fn frobenius(&self, exponent: u32) -> Frobenius {
        Frobenius {
            exponent: exponent % self.inner.n,
        }
    }

    /// a^{p^k}.
    pub fn frobenius_apply(&self, t: &Frobenius, a: &FieldElement) -> FieldElement {
        debug_assert!(self.contains(a));
        let k = t.exponent % self.inner.n;
        if k == 0 || a.value == 0 {
            return *a;
        }
        let e = (self.inner.p as u64).pow(k);
        self.wrap(self.pow_raw(a.value, e))
    }

    /// Fix(tau) = GF(p^g) with g = gcd(k, n).
    pub fn fixed_field(&self, t: &Frobenius) -> Result<FixedField> {
        let n = self.inner.n;
        let g = if t.exponent.is_multiple_of(n) { n } else { gcd(t.exponent % n, n) };
        let prime = self.prime_field();
        // Kernel of tau - id on coordinates.
        let cols: Vec<Vec<FieldElement>> = self
            .basis()
            .iter()
            .map(|e| self.coords(&self.sub(&self.frobenius_apply(t, e), e)))
            .collect();
        let rows = linalg::columns_to_rows(&cols);
        let mut ker = linalg::kernel(&prime, &rows, n as usize);
        linalg::rref(&prime, &mut ker, n as usize);
        let basis: Vec<FieldElement> = ker.iter().map(|v| self.from_coords(v)).collect();
        let elements: Vec<FieldElement> = self
            .elements()
            .into_iter()
            .filter(|a| self.frobenius_apply(t, a) == *a)
            .collect();
        let sub = FiniteField::new(self.inner.p as u64, g, None)?;
        // Reject the generators of proper subfields by requiring a root of
        // the subfield's modulus.
        let m = sub.modulus().to_vec();
        let generator_image = elements
            .iter()
            .copied()
            .find(|&theta| {
                let mut acc = self.zero();
                let mut pw = self.one();
                for &c in &m {
                    acc = self.add(&acc, &self.mul(&self.wrap_int(c), &pw));
                    pw = self.mul(&pw, &theta);
                }
                self.is_zero(&acc)
            })
            .ok_or_else(|| Error::Inconsistent("no root of the subfield modulus".into()))?;
        Ok(FixedField {
            field: sub,
            basis,
            elements,
            generator_image,
        })
    }

    fn wrap_int(&self, c: u32) -> FieldElement {
        self.wrap(c % self.inner.p)
    }

    /// N_{K/L}(a) as the product over the Gal(K/L)-orbit of `a`.
    pub fn norm_over(&self, a: &FieldElement, l: Subfield) -> FieldElement {
        let n = self.inner.n;
        let g = match l {
            Subfield::Prime => 1,
            Subfield::FixedBy(k) if k % n == 0 => n,
            Subfield::FixedBy(k) => gcd(k % n, n),
        };
        let step = self.frobenius(g);
        let mut acc = self.one();
        let mut cur = *a;
        for _ in 0..(n / g) {
            acc = self.mul(&acc, &cur);
            cur = self.frobenius_apply(&step, &cur);
        }
        acc
    }

    /// Squareness of a nonzero element. In characteristic 2 everything is a
    /// square.
    pub fn is_square(&self, a: &FieldElement) -> Result<bool> {
        self.check(a)?;
        if a.value == 0 {
            return Err(Error::ZeroInput);
        }
        if self.inner.p == 2 {
            return Ok(true);
        }
        Ok(self.inner.log[a.value as usize].is_multiple_of(2))
    }

    /// Lexicographic comparison of coefficient sequences, constant term first.
    pub fn cmp_lex(&self, a: &FieldElement, b: &FieldElement) -> Ordering {
        a.coeffs().cmp(&b.coeffs())
    }
}

fn encode(coeffs: &[u64], p: u32) -> u32 {
    let mut v: u64 = 0;
    for &c in coeffs.iter().rev() {
        v = v * p as u64 + c;
    }
    v as u32
}

fn format_poly(m: &[u32]) -> String {
    let terms: Vec<String> = m
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "X".to_string(),
            (1, c) => format!("{c}X"),
            (i, 1) => format!("X^{i}"),
            (i, c) => format!("{c}X^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub(crate) fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
        })
        .collect()
}

fn smallest_irreducible(p: u32, n: u32) -> Vec<u32> {
    // Enumerate (c_0, ..., c_{n-1}) with c_0 most significant.
    let count = (p as u64).pow(n);
    for idx in 0..count {
        let mut digits = vec![0u64; n as usize];
        let mut r = idx;
        for i in (0..n as usize).rev() {
            digits[i] = r % p as u64;
            r /= p as u64;
        }
        let mut f = digits.clone();
        f.push(1);
        if poly::is_irreducible(&f, p as u64) {
            return f.iter().map(|&c| c as u32).collect();
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn build_inner(p: u32, n: u32, modulus: Vec<u32>) -> Inner {
    let q = p.pow(n);
    let pm = p as u64;
    let m: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
    let order = (q - 1) as u64;
    let factors = prime_factors(order);
    let tag = fingerprint(p, n, &modulus);
    let mut exp = vec![0u32; 2 * (q as usize - 1).max(1)];
    let mut log = vec![0u32; q as usize];
    if q == 2 {
        exp[0] = 1;
        exp[1] = 1;
        return Inner { p, n, q, modulus, tag, exp, log };
    }
    // Smallest primitive element by encoded value.
    let mut g = Vec::new();
    for v in 2..q as u64 + 1 {
        let v = v - 1;
        let mut c = Vec::new();
        let mut r = v;
        for _ in 0..n {
            c.push(r % pm);
            r /= pm;
        }
        poly::trim(&mut c);
        let primitive = factors
            .iter()
            .all(|&f| poly::powmod(&c, order / f, &m, pm) != vec![1]);
        if primitive {
            g = c;
            break;
        }
    }
    let mut cur = vec![1u64];
    for i in 0..order as usize {
        let v = encode(&cur, p);
        exp[i] = v;
        exp[i + order as usize] = v;
        log[v as usize] = i as u32;
        cur = poly::mulmod(&cur, &g, &m, pm);
    }
    Inner { p, n, q, modulus, tag, exp, log }
}

impl Field for FiniteField {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        FiniteField::zero(self)
    }

    fn one(&self) -> FieldElement {
        FiniteField::one(self)
    }

    fn from_i64(&self, n: i64) -> FieldElement {
        self.wrap(n.rem_euclid(self.inner.p as i64) as u32)
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FiniteField::add(self, a, b)
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        FiniteField::neg(self, a)
    }

    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FiniteField::sub(self, a, b)
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FiniteField::mul(self, a, b)
    }

    fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        FiniteField::inv(self, a)
    }

    fn is_zero(&self, a: &FieldElement) -> bool {
        a.value == 0
    }

    fn eq_elem(&self, a: &FieldElement, b: &FieldElement) -> bool {
        a == b
    }

    fn characteristic(&self) -> u64 {
        self.inner.p as u64
    }

    fn has_square_root(&self, a: &FieldElement) -> bool {
        a.value == 0 || self.inner.p == 2 || self.inner.log[a.value as usize].is_multiple_of(2)
    }

    fn sqrt(&self, a: &FieldElement) -> Option<FieldElement> {
        if a.value == 0 {
            return Some(*a);
        }
        let order = self.inner.q - 1;
        let l = self.inner.log[a.value as usize];
        if self.inner.p == 2 {
            let e = (l as u64 * (self.inner.q as u64 / 2)) % order as u64;
            return Some(self.wrap(self.inner.exp[e as usize]));
        }
        if l % 2 == 1 {
            return None;
        }
        let r = self.wrap(self.inner.exp[(l / 2) as usize]);
        let s = self.neg(&r);
        // Canonical choice: the lexicographically smaller root.
        Some(if self.cmp_lex(&s, &r) == Ordering::Less { s } else { r })
    }

    fn cmp_elem(&self, a: &FieldElement, b: &FieldElement) -> Ordering {
        self.cmp_lex(a, b)
    }

    fn format(&self, a: &FieldElement) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<FieldElement> {
        let coeffs: Vec<i64> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<_>>()?;
        self.element(&coeffs)
    }

    fn random(&self, rng: &mut dyn RngCore) -> FieldElement {
        self.wrap(rng.gen_range(0..self.inner.q))
    }
}

impl CoeffAlgebra for FiniteField {
    type Base = FiniteField;
    type Elem = FieldElement;
    type Aut = Frobenius;

    fn base(&self) -> FiniteField {
        self.prime_field()
    }

    fn dim(&self) -> usize {
        self.inner.n as usize
    }

    fn zero(&self) -> FieldElement {
        FiniteField::zero(self)
    }

    fn one(&self) -> FieldElement {
        FiniteField::one(self)
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FiniteField::add(self, a, b)
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        FiniteField::neg(self, a)
    }

    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FiniteField::sub(self, a, b)
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FiniteField::mul(self, a, b)
    }

    fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        FiniteField::inv(self, a)
    }

    fn is_zero(&self, a: &FieldElement) -> bool {
        a.value == 0
    }

    fn eq_elem(&self, a: &FieldElement, b: &FieldElement) -> bool {
        a == b
    }

    fn scalar(&self, s: &FieldElement) -> FieldElement {
        self.wrap(s.value)
    }

    fn as_scalar(&self, a: &FieldElement) -> Option<FieldElement> {
        (a.value < self.inner.p).then(|| self.prime_field().wrap(a.value))
    }

    fn coords(&self, a: &FieldElement) -> Vec<FieldElement> {
        let prime = self.prime_field();
        a.coeffs().into_iter().map(|c| prime.wrap(c)).collect()
    }

    fn from_coords(&self, c: &[FieldElement]) -> FieldElement {
        let digits: Vec<u64> = c.iter().map(|x| x.value as u64).collect();
        self.wrap(encode(&digits, self.inner.p))
    }

    fn basis(&self) -> Vec<FieldElement> {
        (0..self.inner.n).map(|i| self.wrap(self.inner.p.pow(i))).collect()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn norm(&self, a: &FieldElement) -> FieldElement {
        let nrm = self.norm_over(a, Subfield::Prime);
        self.prime_field().wrap(nrm.value)
    }

    fn square_root(&self, a: &FieldElement) -> SquareRoot<FieldElement> {
        match Field::sqrt(self, a) {
            Some(r) => SquareRoot::Root(r),
            None => SquareRoot::NotSquare,
        }
    }

    fn identity_aut(&self) -> Frobenius {
        Frobenius { exponent: 0 }
    }

    fn apply(&self, t: &Frobenius, a: &FieldElement) -> FieldElement {
        self.frobenius_apply(t, a)
    }

    fn compose(&self, f: &Frobenius, g: &Frobenius) -> Frobenius {
        self.frobenius(f.exponent + g.exponent)
    }

    fn aut_inverse(&self, f: &Frobenius) -> Frobenius {
        self.frobenius(self.inner.n - f.exponent % self.inner.n)
    }

    fn automorphism_group(&self) -> Option<Vec<Frobenius>> {
        Some((0..self.inner.n).map(|k| Frobenius { exponent: k }).collect())
    }

    fn cmp_elem(&self, a: &FieldElement, b: &FieldElement) -> Ordering {
        self.cmp_lex(a, b)
    }

    fn format_elem(&self, a: &FieldElement) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<FieldElement> {
        Field::parse(self, s)
    }

    fn format_aut(&self, t: &Frobenius) -> String {
        format!("frobenius:{}", t.exponent)
    }

    fn random_elem(&self, rng: &mut dyn RngCore) -> FieldElement {
        Field::random(self, rng)
    }

    fn describe(&self) -> String {
        let m: Vec<String> = self.inner.modulus.iter().map(|c| c.to_string()).collect();
        format!("gf({},{};{})", self.inner.p, self.inner.n, m.join(","))
    }
}

impl FiniteCoeffAlgebra for FiniteField {
    fn order(&self) -> u64 {
        self.inner.q as u64
    }

    fn elements(&self) -> Vec<FieldElement> {
        // Lexicographic in (c_0, c_1, ...): c_0 varies slowest.
        let p = self.inner.p;
        let n = self.inner.n;
        (0..self.inner.q)
            .map(|idx| {
                let mut r = idx;
                let mut digits = vec![0u64; n as usize];
                for i in (0..n as usize).rev() {
                    digits[i] = (r % p) as u64;
                    r /= p;
                }
                self.wrap(encode(&digits, p))
            })
            .collect()
    }

    fn base_elements(&self) -> Vec<FieldElement> {
        let prime = self.prime_field();
        (0..self.inner.p).map(|v| prime.wrap(v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64, n: u32) -> FiniteField {
        FiniteField::new(p, n, None).unwrap()
    }

    /// Brute-force irreducibility by root search (degree <= 3).
    fn has_no_roots(m: &[u32], p: u32) -> bool {
        (0..p).all(|x| {
            let v = m
                .iter()
                .rev()
                .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64);
            v != 0
        })
    }

    #[test]
    fn default_moduli() {
        assert_eq!(gf(3, 1).modulus(), &[0, 1]);
        assert_eq!(gf(3, 2).modulus(), &[1, 0, 1]);
        // Oracle: first monic quadratic over F_3 without roots, c_0 first.
        let mut first = None;
        'outer: for c0 in 0..3 {
            for c1 in 0..3 {
                if has_no_roots(&[c0, c1, 1], 3) {
                    first = Some(vec![c0, c1, 1]);
                    break 'outer;
                }
            }
        }
        assert_eq!(first.as_deref(), Some(gf(3, 2).modulus()));
        assert_eq!(gf(5, 2).modulus(), &[1, 1, 1]);
        assert_eq!(gf(3, 3).modulus(), &[1, 0, 2, 1]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            FiniteField::new(3, 2, Some(&[0, 1, 1])).unwrap_err(),
            Error::ReducibleModulus("X^2 + X".into())
        );
        assert_eq!(FiniteField::new(9, 1, None).unwrap_err(), Error::NotPrime(9));
        assert!(matches!(
            FiniteField::new(3, 2, Some(&[1, 0, 2])),
            Err(Error::BadModulus { .. })
        ));
        assert!(matches!(FiniteField::new(2, 30, None), Err(Error::FieldTooLarge(_))));
    }

    #[test]
    fn small_arithmetic() {
        let k = gf(3, 2);
        let x = k.generator();
        assert_eq!(Field::mul(&k, &x, &x), k.element(&[2]).unwrap());
        let f3 = gf(3, 1);
        let two = f3.element(&[2]).unwrap();
        assert_eq!(f3.try_inv(&two).unwrap(), two);
        // Brute-force inverse of x over the 8 nonzero elements.
        let inv = k
            .elements()
            .into_iter()
            .find(|b| k.mul_reference(&x, b) == Field::one(&k))
            .unwrap();
        assert_eq!(inv, k.element(&[0, 2]).unwrap());
        assert_eq!(k.try_inv(&x).unwrap(), inv);
        assert_eq!(k.try_inv(&Field::zero(&k)), Err(Error::ZeroInversion));
    }

    #[test]
    fn mixed_parents_are_rejected() {
        let a = gf(3, 2);
        let b = FiniteField::new(3, 2, Some(&[2, 2, 1])).unwrap();
        assert_eq!(a.try_add(&a.generator(), &b.generator()), Err(Error::MixedFields));
        assert_eq!(a.try_mul(&gf(5, 1).one(), &a.one()), Err(Error::MixedFields));
    }

    #[test]
    fn table_multiplication_matches_polynomial_arithmetic() {
        for (p, n) in [(2, 1), (2, 3), (3, 2), (5, 2), (3, 3), (7, 1)] {
            let k = gf(p, n);
            let els = k.elements();
            for a in &els {
                for b in &els {
                    assert_eq!(Field::mul(&k, a, b), k.mul_reference(a, b));
                }
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let k = gf(3, 2);
        let x = k.generator();
        let id = k.frobenius(0);
        assert!(k.elements().iter().all(|a| k.frobenius_apply(&id, a) == *a));
        assert_eq!(k.frobenius_apply(&k.frobenius(1), &x), Field::neg(&k, &x));
        let k27 = gf(3, 3);
        let t = k27.frobenius(3);
        assert!(k27.elements().iter().all(|a| k27.frobenius_apply(&t, a) == *a));
    }

    #[test]
    fn frobenius_powers_are_distinct_automorphisms() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, n) in [(3, 3), (5, 2), (2, 4), (3, 4)] {
            let k = gf(p, n);
            let mut images = Vec::new();
            for e in 0..n {
                let t = k.frobenius(e);
                for _ in 0..500 {
                    let a = Field::random(&k, &mut rng);
                    let b = Field::random(&k, &mut rng);
                    let ta = k.frobenius_apply(&t, &a);
                    let tb = k.frobenius_apply(&t, &b);
                    assert_eq!(k.frobenius_apply(&t, &Field::add(&k, &a, &b)), Field::add(&k, &ta, &tb));
                    assert_eq!(k.frobenius_apply(&t, &Field::mul(&k, &a, &b)), Field::mul(&k, &ta, &tb));
                }
                // Fixes the prime field; x^{p^e} computed by repeated multiplication.
                let x = k.generator();
                let by_mult = (0..p.pow(e)).fold(Field::one(&k), |acc, _| k.mul_reference(&acc, &x));
                assert_eq!(k.frobenius_apply(&t, &x), by_mult);
                images.push(k.frobenius_apply(&t, &x));
            }
            images.sort_by_key(|a| a.value());
            images.dedup();
            assert_eq!(images.len(), n as usize);
        }
    }

    #[test]
    fn fixed_field_orders() {
        for (p, n) in [(3u64, 1u32), (3, 2), (3, 3), (3, 4), (3, 6), (5, 2), (2, 4), (7, 2), (2, 6)] {
            let k = gf(p, n);
            for e in 0..n {
                let fx = k.fixed_field(&k.frobenius(e)).unwrap();
                let g = if e == 0 { n } else { gcd(e, n) };
                let scan = k
                    .elements()
                    .into_iter()
                    .filter(|a| k.frobenius_apply(&k.frobenius(e), a) == *a)
                    .count();
                assert_eq!(fx.elements.len() as u64, (p).pow(g));
                assert_eq!(scan as u64, (p).pow(g));
                assert_eq!(fx.basis.len() as u32, g);
                assert_eq!(fx.field.size() as u64, p.pow(g));
            }
        }
    }

    #[test]
    fn fixed_field_examples() {
        let k9 = gf(3, 2);
        let fx = k9.fixed_field(&k9.frobenius(1)).unwrap();
        let want: Vec<_> = (0..3).map(|c| k9.element(&[c]).unwrap()).collect();
        assert_eq!(fx.elements, want);
        let k16 = gf(2, 4);
        let fx = k16.fixed_field(&k16.frobenius(2)).unwrap();
        assert_eq!(fx.elements.len(), 4);
        // The generator image satisfies the subfield's modulus.
        let m = fx.field.modulus();
        let theta = fx.generator_image;
        let mut acc = Field::zero(&k16);
        for (i, &c) in m.iter().enumerate() {
            let t = Field::mul(&k16, &Field::from_i64(&k16, c as i64), &k16.pow(&theta, i as u64));
            acc = Field::add(&k16, &acc, &t);
        }
        assert!(Field::is_zero(&k16, &acc));
    }

    #[test]
    fn norms() {
        let k = gf(3, 2);
        let x = k.generator();
        assert_eq!(k.norm_over(&x, Subfield::Prime), Field::one(&k));
        assert_eq!(k.norm_over(&Field::one(&k), Subfield::Prime), Field::one(&k));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let k25 = gf(5, 2);
        for _ in 0..200 {
            let a = Field::random(&k25, &mut rng);
            let b = Field::random(&k25, &mut rng);
            let lhs = k25.norm_over(&Field::mul(&k25, &a, &b), Subfield::Prime);
            let rhs = Field::mul(&k25, &k25.norm_over(&a, Subfield::Prime), &k25.norm_over(&b, Subfield::Prime));
            assert_eq!(lhs, rhs);
        }
        for (p, n) in [(3u64, 3u32), (5, 2), (3, 4), (7, 2)] {
            let k = gf(p, n);
            let q = p.pow(n);
            for a in k.elements().iter().filter(|a| a.value() != 0) {
                let nrm = k.norm_over(a, Subfield::Prime);
                assert_eq!(nrm, k.pow(a, (q - 1) / (p - 1)));
                assert!(nrm.value() < p as u32);
            }
        }
        // Relative norm lands in the subfield.
        let k81 = gf(3, 4);
        let fix = k81.fixed_field(&k81.frobenius(2)).unwrap();
        for a in k81.elements().iter().step_by(7) {
            assert!(fix.elements.contains(&k81.norm_over(a, Subfield::FixedBy(2))));
        }
    }

    #[test]
    fn squares() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let k = gf(5, 2);
        for _ in 0..100 {
            let g = Field::random(&k, &mut rng);
            if g.value() == 0 {
                continue;
            }
            assert!(k.is_square(&Field::mul(&k, &g, &g)).unwrap());
        }
        let f5 = gf(5, 1);
        assert!(!f5.is_square(&f5.element(&[2]).unwrap()).unwrap());
        let k4 = gf(2, 2);
        for a in k4.elements().iter().skip(1) {
            assert!(k4.is_square(a).unwrap());
        }
        assert_eq!(k.is_square(&Field::zero(&k)), Err(Error::ZeroInput));
        for (p, n) in [(3u64, 2u32), (5, 2), (3, 3), (7, 1), (11, 2)] {
            let k = gf(p, n);
            let q = p.pow(n);
            let sq = k
                .elements()
                .iter()
                .filter(|a| a.value() != 0 && k.is_square(a).unwrap())
                .count() as u64;
            assert_eq!(sq, (q - 1) / 2);
        }
    }

    #[test]
    fn sqrt_roots_square_back() {
        for (p, n) in [(3u64, 2u32), (2, 3), (5, 2)] {
            let k = gf(p, n);
            for a in k.elements() {
                if let Some(r) = Field::sqrt(&k, &a) {
                    assert_eq!(Field::mul(&k, &r, &r), a);
                } else {
                    assert!(!k.is_square(&a).unwrap());
                }
            }
        }
    }

    #[test]
    fn spec_strings() {
        let k = FiniteField::parse_spec("gf(3,2;1,0,1)").unwrap();
        assert_eq!(k, gf(3, 2));
        assert_eq!(k.describe(), "gf(3,2;1,0,1)");
        assert!(FiniteField::parse_spec("gf(3,2;0,1,1)").is_err());
        assert!(FiniteField::parse_spec("gf(3)").is_err());
        assert_eq!(Field::parse(&k, "0,1").unwrap(), k.generator());
    }

    #[test]
    fn elements_in_lexicographic_order() {
        let k = gf(3, 2);
        let els: Vec<Vec<u32>> = k.elements().iter().map(|a| a.coeffs()).collect();
        let mut sorted = els.clone();
        sorted.sort();
        assert_eq!(els, sorted);
        assert_eq!(els.len(), 9);
    }
}
