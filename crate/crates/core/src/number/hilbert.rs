//! Local Hilbert symbols over Q and the norm decision for Q(√a).

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::quadratic::{QuadElement, QuadField};
use super::rational::{factor, format_rational, legendre, rational_sqrt, valuation, Rational};
use crate::error::{Error, Result};
use crate::verdict::{DivisionVerdict, Pair, ZeroDivisorWitness};

/// A place of Q.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Prime(BigInt),
    Infinity,
}

impl Place {
    pub fn prime(p: i64) -> Self {
        Place::Prime(BigInt::from(p))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

// s = n/d lies in the square class of n·d.
fn integral(r: &Rational) -> BigInt {
    r.numer() * r.denom()
}

fn eps(u: &BigInt) -> u32 {
    // (u - 1)/2 mod 2
    u32::from(u.mod_floor(&BigInt::from(4)) == BigInt::from(3))
}

fn omega(u: &BigInt) -> u32 {
    // (u² - 1)/8 mod 2
    let r = u.mod_floor(&BigInt::from(8));
    u32::from(r == BigInt::from(3) || r == BigInt::from(5))
}

/// The local symbol (s, a)_v for nonzero rationals.
pub fn hilbert_symbol(s: &Rational, a: &Rational, place: &Place) -> Result<i8> {
    if s.is_zero() || a.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (s, a) = (integral(s), integral(a));
    let p = match place {
        Place::Infinity => {
            return Ok(if s.is_negative() && a.is_negative() { -1 } else { 1 });
        }
        Place::Prime(p) => p,
    };
    let (alpha, u) = valuation(&s, p);
    let (beta, v) = valuation(&a, p);
    if *p == BigInt::from(2) {
        let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
        return Ok(if e.is_multiple_of(2) { 1 } else { -1 });
    }
    let mut sign: i8 = 1;
    let ep = u32::from(((p - 1u32) / 2u32).is_odd());
    if (alpha * beta * ep) % 2 == 1 {
        sign = -sign;
    }
    if beta % 2 == 1 {
        sign *= legendre(&u, p);
    }
    if alpha % 2 == 1 {
        sign *= legendre(&v, p);
    }
    Ok(sign)
}

/// {2, ∞} together with every prime dividing the numerators or
/// denominators of `s` and `a`. Outside this set all symbols are +1.
pub fn support_places(s: &Rational, a: &Rational) -> Vec<Place> {
    let mut primes: BTreeSet<BigInt> = BTreeSet::new();
    primes.insert(BigInt::from(2));
    for r in [s, a] {
        for n in [r.numer(), r.denom()] {
            if !n.is_zero() {
                primes.extend(factor(n).into_iter().map(|(p, _)| p));
            }
        }
    }
    let mut out: Vec<Place> = primes.into_iter().map(Place::Prime).collect();
    out.push(Place::Infinity);
    out
}

/// Whether `s` is a norm from Q(√a): by the Hasse norm theorem, iff every
/// local symbol (s, a)_v is +1.
pub fn is_norm_from_quadfield(s: &Rational, k: &QuadField) -> Result<bool> {
    let a = k.radicand_rational();
    for v in support_places(s, &a) {
        if hilbert_symbol(s, &a, &v)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The first local obstruction to `s` being a norm, if any.
pub fn norm_obstruction(s: &Rational, k: &QuadField) -> Result<Option<Place>> {
    let a = k.radicand_rational();
    for v in support_places(s, &a) {
        if hilbert_symbol(s, &a, &v)? != 1 {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Searches X² − aY² = sZ² with 1 ≤ Z ≤ bound and 0 ≤ Y ≤ bound and returns
/// (X + Y√a)/Z.
pub fn find_norm_solution(s: &Rational, k: &QuadField, bound: u32) -> Option<QuadElement> {
    let a = k.radicand_rational();
    for z in 1..=bound {
        let z = Rational::from_integer(z.into());
        let sz2 = s * &z * &z;
        for y in 0..=bound {
            let y = Rational::from_integer(y.into());
            if let Some(x) = rational_sqrt(&(&sz2 + &a * &y * &y)) {
                return Some(QuadElement::new(x / &z, y / &z));
            }
        }
    }
    None
}

pub const NORM_SEARCH_BOUND: u32 = 48;

/// Writes a norm-one `x` as w/σ(w) (Hilbert 90).
pub fn hilbert90(k: &QuadField, x: &QuadElement) -> QuadElement {
    let minus_one = k.from_ints(-1, 0);
    if *x == minus_one {
        k.sqrt_a()
    } else {
        k.quad_add(&k.from_ints(1, 0), x)
    }
}

/// Exact division decision for D(K, σ, c) with K = Q(√a) and σ the
/// conjugation: not division iff N(c) = r² with r or −r a norm from K.
pub fn cyclic_division_decision_quad(
    k: &QuadField,
    c: &QuadElement,
) -> Result<DivisionVerdict<QuadElement>> {
    let n = k.quad_norm(c);
    if n.is_zero() {
        return Err(Error::ZeroConstant);
    }
    let Some(r) = rational_sqrt(&n) else {
        return Ok(DivisionVerdict::ProvedDivision {
            reason: format!("N(c) = {} is not a rational square", format_rational(&n)),
        });
    };
    for cand in [r.clone(), -r.clone()] {
        if !is_norm_from_quadfield(&cand, k)? {
            continue;
        }
        let witness = norm_witness(k, c, &cand);
        return Ok(DivisionVerdict::ProvedNotDivision {
            reason: format!(
                "N(c) = {} = ({})² and {} is a norm from {}",
                format_rational(&n),
                format_rational(&r),
                format_rational(&cand),
                describe(k)
            ),
            witness,
        });
    }
    let mut why = Vec::new();
    for cand in [r.clone(), -r.clone()] {
        if let Some(v) = norm_obstruction(&cand, k)? {
            why.push(format!("({}, {})_{} = -1", format_rational(&cand), k.radicand(), v));
        }
    }
    Ok(DivisionVerdict::ProvedDivision {
        reason: format!(
            "N(c) = {} but neither ±{} is a norm: {}",
            format_rational(&n),
            format_rational(&r),
            why.join(", ")
        ),
    })
}

fn describe(k: &QuadField) -> String {
    format!("Q(√{})", k.radicand())
}

// With N(w) = m and m² = N(c): t = 1/w, x = c/m has norm one and equals
// s/σ(s), so c = s σ(s)⁻¹ t⁻¹ σ(t)⁻¹ and (1, t)(−s/t, s) = 0.
fn norm_witness(
    k: &QuadField,
    c: &QuadElement,
    m: &Rational,
) -> Option<ZeroDivisorWitness<QuadElement>> {
    let w = find_norm_solution(m, k, NORM_SEARCH_BOUND)?;
    let t = k.quad_inv(&w).ok()?;
    let x = k.scale_rational(&m.recip(), c);
    let s = hilbert90(k, &x);
    let t_inv = k.quad_inv(&t).ok()?;
    let left = Pair::new(k.from_ints(1, 0), t);
    let right = Pair::new(k.quad_neg(&k.quad_mul(&s, &t_inv)), s);
    debug_assert!(k.quad_norm(&x) == Rational::one());
    Some(ZeroDivisorWitness { left, right })
}
