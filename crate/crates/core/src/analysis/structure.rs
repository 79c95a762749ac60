//! Group structure of Aut(D): the Φ-labeling by (τ, ±1) and a structure
//! read directly off the composition table.

use std::collections::BTreeMap;
use std::fmt;

use super::automorphisms::{descriptor_eq, AutGroupReport, AutomorphismDescriptor, Descriptor};
use crate::algebra::CoeffAlgebra;
use crate::dickson::DicksonAlgebra;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelingVerdict {
    /// Φ is a bijective homomorphism onto (C ∩ J) × F_2.
    Yes,
    No(String),
    Undetermined(String),
}

impl LabelingVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            LabelingVerdict::Yes => "yes",
            LabelingVerdict::No(_) => "no",
            LabelingVerdict::Undetermined(_) => "undetermined",
        }
    }
}

/// A finite group up to isomorphism, as far as we classify it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupShape {
    /// Invariant factors d_1 | d_2 | …, empty for the trivial group.
    Abelian(Vec<usize>),
    NonAbelian(usize),
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupShape::Abelian(v) if v.is_empty() => f.write_str("C1"),
            GroupShape::Abelian(v) => {
                let parts: Vec<String> = v.iter().map(|d| format!("C{d}")).collect();
                f.write_str(&parts.join(" x "))
            }
            GroupShape::NonAbelian(n) => write!(f, "nonabelian of order {n}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct StructureReport<E> {
    /// Structure of the composition table.
    pub table_shape: Option<GroupShape>,
    /// Structure of (C ∩ J) × F_2.
    pub expected_shape: Option<GroupShape>,
    /// Both shapes known and equal.
    pub table_matches: bool,
    pub labeling: LabelingVerdict,
    /// (τ-exponent index, sign) per element when the labeling succeeded.
    pub phi: Option<Vec<(usize, i8)>>,
    /// The chosen root b_τ for the generator of C ∩ J.
    pub generator_root: Option<E>,
    /// b τ(b) … τ^(m−1)(b) for every element, m the order of τ.
    pub orbit_products: Vec<E>,
    /// Every orbit product is ±1.
    pub orbit_products_pm_one: bool,
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Classifies a group from its multiplication table (identity at `e`).
pub fn table_shape(t: &[Vec<usize>], e: usize) -> GroupShape {
    let n = t.len();
    let abelian = (0..n).all(|a| (0..n).all(|b| t[a][b] == t[b][a]));
    if !abelian {
        return GroupShape::NonAbelian(n);
    }
    let order = |a: usize| {
        let (mut x, mut k) = (a, 1);
        while x != e {
            x = t[x][a];
            k += 1;
        }
        k
    };
    let orders: Vec<usize> = (0..n).map(order).collect();
    shape_from_orders(n, &orders)
}

/// For an abelian group given by the orders of its elements. The p-part has
/// partition λ with #{x : x^(p^k) = 1} = p^(Σ min(k, λ_i)).
fn shape_from_orders(n: usize, orders: &[usize]) -> GroupShape {
    let mut factors: Vec<Vec<usize>> = Vec::new();
    for p in prime_factors(n) {
        let mut parts_at_least = Vec::new(); // #{i : λ_i ≥ k} for k = 1, 2, …
        let mut prev_exp = 0u32;
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let count = orders.iter().filter(|o| is_p_power_divisor(**o, p, pk)).count();
            let exp = (count as f64).log(p as f64).round() as u32;
            if exp == prev_exp {
                break;
            }
            parts_at_least.push((exp - prev_exp) as usize);
            prev_exp = exp;
            k += 1;
        }
        // Conjugate partition: λ_i = #{k : parts_at_least[k] ≥ i}.
        let len = parts_at_least.first().copied().unwrap_or(0);
        let lambda: Vec<usize> =
            (1..=len).map(|i| parts_at_least.iter().filter(|c| **c >= i).count()).collect();
        factors.push(lambda.iter().map(|l| p.pow(*l as u32)).collect());
    }
    // Invariant factors: multiply the largest of each prime, then the next, …
    let width = factors.iter().map(Vec::len).max().unwrap_or(0);
    let mut inv: Vec<usize> = (0..width)
        .map(|i| factors.iter().map(|f| f.get(i).copied().unwrap_or(1)).product())
        .collect();
    inv.sort_unstable();
    GroupShape::Abelian(inv)
}

fn is_p_power_divisor(order: usize, p: usize, pk: usize) -> bool {
    // x^(p^k) = 1 iff order | p^k, i.e. order is a power of p dividing p^k.
    let mut o = order;
    while o.is_multiple_of(p) {
        o /= p;
    }
    o == 1 && pk.is_multiple_of(order)
}

/// Structure of C_m × C_2.
pub fn cyclic_times_two(m: usize) -> GroupShape {
    let n = 2 * m;
    // Elements (a, s) ∈ Z_m × Z_2 have order lcm(m / gcd(a, m), ord s).
    let gcd = |mut a: usize, mut b: usize| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let orders: Vec<usize> = (0..m)
        .flat_map(|a| {
            let oa = m / gcd(a, m);
            [oa, oa * 2 / gcd(oa, 2)]
        })
        .collect();
    shape_from_orders(n, &orders)
}

fn aut_order<A: CoeffAlgebra>(k: &A, t: &A::Aut) -> usize {
    let (mut x, mut m) = (t.clone(), 1);
    while !k.is_identity(&x) {
        x = k.compose(&x, t);
        m += 1;
        assert!(m <= 1 << 20, "automorphism of unbounded order");
    }
    m
}

/// b τ(b) τ²(b) … τ^(m−1)(b).
pub fn orbit_product<A: CoeffAlgebra>(k: &A, g: &Descriptor<A>) -> A::Elem {
    let m = aut_order(k, &g.tau);
    let mut acc = k.one();
    let mut x = g.b.clone();
    for _ in 0..m {
        acc = k.mul(&acc, &x);
        x = k.apply(&g.tau, &x);
    }
    acc
}

pub fn group_structure<A: CoeffAlgebra>(
    d: &DicksonAlgebra<A>,
    report: &AutGroupReport<A::Aut, A::Elem>,
) -> StructureReport<A::Elem> {
    let k = d.coeff();
    let els = &report.elements;
    let one = k.one();
    let minus_one = k.neg(&one);
    let orbit_products: Vec<A::Elem> = els.iter().map(|g| orbit_product(k, g)).collect();
    let orbit_products_pm_one =
        orbit_products.iter().all(|x| k.eq_elem(x, &one) || k.eq_elem(x, &minus_one));

    let id = AutomorphismDescriptor { tau: k.identity_aut(), b: one.clone() };
    let e = els.iter().position(|g| descriptor_eq(k, g, &id));
    let table_shape = match (&report.table, e, report.table_is_group) {
        (Some(t), Some(e), true) => Some(table_shape(t, e)),
        _ => None,
    };

    // The distinct τ, which form C ∩ J.
    let mut taus: Vec<A::Aut> = Vec::new();
    for g in els {
        if !taus.iter().any(|t| k.aut_eq(t, &g.tau)) {
            taus.push(g.tau.clone());
        }
    }
    let m = taus.len();
    let generator = taus.iter().find(|t| aut_order(k, t) == m).cloned();
    let expected_shape = generator.as_ref().map(|_| cyclic_times_two(m));
    let table_matches = matches!((&table_shape, &expected_shape), (Some(a), Some(b)) if a == b);

    let mut out = StructureReport {
        table_shape,
        expected_shape,
        table_matches,
        labeling: LabelingVerdict::Undetermined(String::new()),
        phi: None,
        generator_root: None,
        orbit_products,
        orbit_products_pm_one,
    };
    if !report.complete || report.table.is_none() || els.len() != 2 * m {
        out.labeling = LabelingVerdict::Undetermined("the automorphism list is not a complete group".into());
        return out;
    }
    let Some(tau) = generator else {
        out.labeling = LabelingVerdict::Undetermined("C ∩ J is not cyclic".into());
        return out;
    };
    if m % 2 == 0 {
        out.labeling =
            LabelingVerdict::Undetermined(format!("the generator of C ∩ J has even order {m}"));
        return out;
    }
    // Root b_τ with orbit product +1; for m = 1 this is b = 1.
    let with_tau: Vec<&Descriptor<A>> = els.iter().filter(|g| k.aut_eq(&g.tau, &tau)).collect();
    let good: Vec<&&Descriptor<A>> =
        with_tau.iter().filter(|g| k.eq_elem(&orbit_product(k, g), &one)).collect();
    if good.len() != 1 {
        out.labeling = LabelingVerdict::No(format!("{} roots have orbit product 1", good.len()));
        return out;
    }
    let b_tau = good[0].b.clone();
    // b_{τ^j} = b_τ τ(b_{τ^(j−1)}).
    let mut powers: Vec<(A::Aut, A::Elem)> = vec![(k.identity_aut(), one.clone())];
    for j in 1..m {
        let (prev_t, prev_b) = powers[j - 1].clone();
        powers.push((k.compose(&tau, &prev_t), k.mul(&b_tau, &k.apply(&tau, &prev_b))));
    }
    let mut phi = Vec::with_capacity(els.len());
    for g in els {
        let Some(j) = powers.iter().position(|(t, _)| k.aut_eq(t, &g.tau)) else {
            out.labeling = LabelingVerdict::No("τ outside the cyclic group".into());
            return out;
        };
        let bj = &powers[j].1;
        let sign = if k.eq_elem(&g.b, bj) {
            1
        } else if k.eq_elem(&g.b, &k.neg(bj)) {
            -1
        } else {
            out.labeling = LabelingVerdict::No("b is not ±b_τ".into());
            return out;
        };
        phi.push((j, sign));
    }
    let table = report.table.as_ref().expect("checked above");
    let mut seen = BTreeMap::new();
    for (i, p) in phi.iter().enumerate() {
        seen.insert(*p, i);
    }
    let bijective = seen.len() == els.len();
    let homomorphism = (0..els.len()).all(|a| {
        (0..els.len()).all(|b| {
            let (ja, sa) = phi[a];
            let (jb, sb) = phi[b];
            phi[table[a][b]] == ((ja + jb) % m, sa * sb)
        })
    });
    out.labeling = if bijective && homomorphism {
        LabelingVerdict::Yes
    } else {
        LabelingVerdict::No(format!("bijective {bijective}, homomorphism {homomorphism}"))
    };
    out.phi = Some(phi);
    out.generator_root = Some(b_tau);
    out
}

#[cfg(test)]
mod tests {
    use super::super::automorphisms::enumerate_automorphisms;
    use super::*;
    use crate::algebra::FiniteCoeffAlgebra;
    use crate::dickson::Variant;
    use crate::finite_field::FiniteField;

    #[test]
    fn shapes() {
        assert_eq!(cyclic_times_two(1), GroupShape::Abelian(vec![2]));
        assert_eq!(cyclic_times_two(2), GroupShape::Abelian(vec![2, 2]));
        assert_eq!(cyclic_times_two(3), GroupShape::Abelian(vec![6]));
        assert_eq!(cyclic_times_two(4), GroupShape::Abelian(vec![2, 4]));
        assert_eq!(cyclic_times_two(6), GroupShape::Abelian(vec![2, 6]));
        assert_eq!(format!("{}", cyclic_times_two(2)), "C2 x C2");
        // Z_4 by addition.
        let z4: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        assert_eq!(table_shape(&z4, 0), GroupShape::Abelian(vec![4]));
        // S_3 as permutations of {0,1,2}.
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let pos = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let s3: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| perms.iter().map(|b| pos([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        assert_eq!(table_shape(&s3, 0), GroupShape::NonAbelian(6));
    }

    #[test]
    fn gf27_labeling() {
        let k = FiniteField::new(3, 3, None).unwrap();
        for c in k.elements().into_iter().skip(1) {
            if k.is_square(&c).unwrap() {
                continue;
            }
            for s in [1, 2] {
                let d = DicksonAlgebra::new(k.clone(), k.frobenius(s), c, Variant::Commutative, false).unwrap();
                let r = enumerate_automorphisms(&d, None).unwrap();
                let st = group_structure(&d, &r);
                assert!(st.orbit_products_pm_one);
                assert_eq!(st.labeling, LabelingVerdict::Yes, "{c}");
                assert!(st.table_matches);
            }
        }
    }

    #[test]
    fn gf9_even_order_is_undetermined() {
        let k = FiniteField::new(3, 2, None).unwrap();
        let c = k.element(&[1, 1]).unwrap();
        let d = DicksonAlgebra::new(k.clone(), k.frobenius(1), c, Variant::Commutative, false).unwrap();
        let r = enumerate_automorphisms(&d, None).unwrap();
        let st = group_structure(&d, &r);
        assert!(matches!(st.labeling, LabelingVerdict::Undetermined(_)));
        assert!(st.orbit_products_pm_one);
        assert_eq!(st.table_shape, Some(GroupShape::Abelian(vec![4])));
        assert!(!st.table_matches);
    }
}
