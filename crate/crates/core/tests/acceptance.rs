//! Acceptance suite: one PASS/FAIL line per criterion, then a single assertion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dickson_core::analysis::automorphisms::{b_roots, enumeration_matches_oracle};
use dickson_core::analysis::census;
use dickson_core::dickson::{critical_set_exhaustive, critical_value, theorem_pair, zero_divisor_search};
use dickson_core::padic::{ExtKind, PadicField, PadicQuadExt, SquareClass};
use dickson_core::{
    division_decide, enumerate_automorphisms, group_structure, oracle_automorphisms, subgroups,
    wene_inner_check, CoeffAlgebra, DicksonAlgebra, DivisionDecide, FieldElement, FiniteField,
    FiniteCoeffAlgebra, LabelingVerdict, QuadAut, QuadField, QuaternionAlgebra, Variant,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gf(p: u64, n: u32) -> FiniteField {
    FiniteField::new(p, n, None).expect("field")
}

fn units(k: &FiniteField) -> Vec<FieldElement> {
    k.elements().into_iter().filter(|x| !k.is_zero(x)).collect()
}

fn non_squares(k: &FiniteField) -> Vec<FieldElement> {
    units(k).into_iter().filter(|c| !k.is_square(c).unwrap()).collect()
}

fn finite(k: &FiniteField, sigma: u32, c: &FieldElement, v: Variant, allow_id: bool) -> DicksonAlgebra<FiniteField> {
    DicksonAlgebra::new(k.clone(), k.frobenius(sigma), *c, v, allow_id).expect("algebra")
}

fn division_equivalence() -> Outcome {
    let mut checked = 0;
    for (p, n) in [(3, 2), (5, 2)] {
        let k = gf(p, n);
        let any = finite(&k, 1, &k.one(), Variant::Commutative, false);
        let crit = critical_set_exhaustive(&any);
        for c in units(&k) {
            let d = any.with_c(c).unwrap();
            let scan = zero_divisor_search(&d, None).map_err(|e| e.to_string())?.is_some();
            let critical = crit.contains(&c);
            let square = k.is_square(&c).unwrap();
            ensure(scan == critical && critical == square, || {
                format!("GF({p}^{n}) c={}: scan {scan}, critical {critical}, square {square}", k.format_elem(&c))
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} constants agree"))
}

fn check_critical_pair<A: CoeffAlgebra>(k: &A, sigma: &A::Aut, v: Variant, r: &A::Elem, s: &A::Elem, t: &A::Elem) -> Result<(), String> {
    let c = critical_value(k, sigma, v, r, s, t).map_err(|e| e.to_string())?;
    let d = DicksonAlgebra::new(k.clone(), sigma.clone(), c, v, false).map_err(|e| e.to_string())?;
    let w = theorem_pair(k, v, r, s, t).map_err(|e| e.to_string())?;
    let prod = d.mul(&w.left, &w.right);
    ensure(!d.is_zero(&w.left) && !d.is_zero(&w.right) && d.is_zero(&prod), || {
        format!("{v} pair for r={} s={} t={} gives {}", k.format_elem(r), k.format_elem(s), k.format_elem(t), d.format_pair(&prod))
    })
}

fn converse_witnesses() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let k = gf(5, 2);
    let sigma = k.frobenius(1);
    let unit = |rng: &mut ChaCha8Rng| loop {
        let x = CoeffAlgebra::random_elem(&k, rng);
        if !k.is_zero(&x) {
            break x;
        }
    };
    for _ in 0..1000 {
        let [r, s, t] = [0, 1, 2].map(|_| unit(&mut rng));
        for v in Variant::all() {
            check_critical_pair(&k, &sigma, v, &r, &s, &t)?;
        }
    }
    let b = QuaternionAlgebra::rational(2, 3).unwrap();
    let sigma = b.inner(b.i()).unwrap();
    let quat_unit = |rng: &mut ChaCha8Rng| loop {
        let x = b.random_elem(rng);
        if b.inv(&x).is_some() {
            break x;
        }
    };
    for _ in 0..200 {
        let [r, s, t] = [0, 1, 2].map(|_| quat_unit(&mut rng));
        for v in [Variant::Left, Variant::Middle, Variant::Right] {
            check_critical_pair(&b, &sigma, v, &r, &s, &t)?;
        }
    }
    Ok("1000 GF(25) triples x 4 variants, 200 quaternion triples x 3 variants".into())
}

fn nuclei() -> Outcome {
    let mut failures = Vec::new();
    let mut finite_cases = 0;
    for (p, n) in [(3, 2), (3, 3)] {
        let k = gf(p, n);
        for sigma in 1..n {
            let fix_dim = k.fixed_field(&k.frobenius(sigma)).unwrap().basis.len();
            for c in non_squares(&k) {
                let d = finite(&k, sigma, &c, Variant::Commutative, false);
                let r = d.nuclei();
                let fixed = |basis: &[dickson_core::Pair<FieldElement>]| {
                    basis.iter().all(|e| k.is_zero(&e.v) && d.sigma_apply(&e.u) == e.u)
                };
                let in_k = r.middle.iter().all(|e| k.is_zero(&e.v));
                let ok = r.left.len() == fix_dim
                    && r.right.len() == fix_dim
                    && r.middle.len() == n as usize
                    && fixed(&r.left)
                    && fixed(&r.right)
                    && in_k;
                if !ok {
                    failures.push(format!("{}: dims {:?}", d.describe(), r.dims()));
                }
                finite_cases += 1;
            }
        }
    }

    let b = QuaternionAlgebra::rational(2, 3).unwrap();
    let sigma = b.inner(b.i()).unwrap();
    let sg = |x: &_| b.apply(&sigma, x);
    let cs = [("i", b.i()), ("j", b.j()), ("1+k", b.from_ints(1, 0, 0, 1))];
    for (name, c) in &cs {
        // k-part conditions, one per nucleus slot.
        let fix = |u: &_| b.eq_elem(&sg(u), u);
        let c_left = |u: &_| b.eq_elem(&b.mul(c, &sg(u)), &b.mul(u, c));
        let c_mid = |u: &_| b.eq_elem(&b.mul(&sg(u), c), &b.mul(c, &sg(u)));
        let anything = |_: &_| true;
        let rows: [(Variant, [&dyn Fn(&_) -> bool; 3]); 3] = [
            (Variant::Left, [&c_left, &anything, &fix]),
            (Variant::Right, [&fix, &anything, &c_left]),
            (Variant::Middle, [&fix, &c_mid, &fix]),
        ];
        for (v, eqs) in rows {
            let d = DicksonAlgebra::new(b.clone(), sigma.clone(), c.clone(), v, false).unwrap();
            let r = d.nuclei();
            for ((slot, basis), eq) in ["left", "middle", "right"].iter().zip([&r.left, &r.middle, &r.right]).zip(eqs) {
                for e in basis {
                    if !(b.is_zero(&e.v) && eq(&e.u)) {
                        failures.push(format!("c={name} {v}: {slot} nucleus contains {} (dim {})", d.format_pair(e), basis.len()));
                    }
                }
            }
            let mid = r.middle.len();
            let want_mid = match v {
                Variant::Middle => mid < 4,
                _ => mid == 4,
            };
            if !want_mid {
                failures.push(format!("c={name} {v}: dim Nuc_m = {mid}"));
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("{finite_cases} finite cases, 9 quaternion cases"))
    } else {
        Err(failures.join("; "))
    }
}

fn automorphism_counts() -> Outcome {
    let mut counted = 0;
    for (p, n, want) in [(3, 2, 4), (3, 3, 6)] {
        let k = gf(p, n);
        for sigma in 1..n {
            for c in non_squares(&k) {
                let d = finite(&k, sigma, &c, Variant::Commutative, false);
                let order = enumerate_automorphisms(&d, None).map_err(|e| e.to_string())?.order();
                ensure(order == want, || format!("{}: |Aut| = {order}", d.describe()))?;
                counted += 1;
            }
        }
    }
    let mut oracled = 0;
    for (p, n) in [(3, 2), (5, 2)] {
        let k = gf(p, n);
        for sigma in 1..n {
            for c in non_squares(&k) {
                let d = finite(&k, sigma, &c, Variant::Commutative, false);
                let r = enumerate_automorphisms(&d, None).map_err(|e| e.to_string())?;
                let oracle = oracle_automorphisms(&d).map_err(|e| e.to_string())?;
                ensure(enumeration_matches_oracle(&d, &r, &oracle), || {
                    format!("{}: enumeration {} vs oracle {}", d.describe(), r.order(), oracle.len())
                })?;
                oracled += 1;
            }
        }
    }
    Ok(format!("{counted} orders, {oracled} oracle comparisons"))
}

fn group_structure_labels() -> Outcome {
    let mut labeled = 0;
    let mut products = 0;
    for (p, n) in [(3, 2), (5, 2), (3, 3), (5, 3)] {
        let k = gf(p, n);
        for sigma in 1..n {
            for c in non_squares(&k) {
                let d = finite(&k, sigma, &c, Variant::Commutative, false);
                let r = enumerate_automorphisms(&d, None).map_err(|e| e.to_string())?;
                let s = group_structure(&d, &r);
                ensure(s.orbit_products_pm_one, || format!("{}: orbit product not ±1", d.describe()))?;
                products += r.order();
                let m = subgroups(&d, None).expect("finite").intersection.len();
                if m % 2 == 1 {
                    ensure(s.labeling == LabelingVerdict::Yes, || {
                        format!("{}: |C∩J| = {m}, labeling {}", d.describe(), s.labeling.label())
                    })?;
                    labeled += 1;
                }
            }
        }
    }
    ensure(labeled > 0, || "no odd instance tested".into())?;
    Ok(format!("{labeled} labelings, {products} orbit products"))
}

fn census_counts() -> Outcome {
    let mut parts = Vec::new();
    for (p, n, excl, incl) in [(3, 2, 1, 2), (3, 3, 2, 3)] {
        let r = census(p, n).map_err(|e| e.to_string())?;
        ensure(r.classes_excluding_id == excl && r.classes_including_id == incl, || {
            format!("GF({p}^{n}): {} / {}", r.classes_excluding_id, r.classes_including_id)
        })?;
        ensure(r.unknown_pairs == 0, || format!("GF({p}^{n}): {} unknown pairs", r.unknown_pairs))?;
        parts.push(format!("GF({p}^{n}) {excl}(+{})", incl - excl));
    }
    Ok(parts.join(", "))
}

fn square_not_division<A: DivisionDecide>(d: &DicksonAlgebra<A>) -> Result<(), String> {
    let v = division_decide(d);
    let w = v.witness().ok_or_else(|| format!("{}: {}, no witness", d.describe(), v.label()))?;
    ensure(
        v.is_not_division() && !d.is_zero(&w.left) && !d.is_zero(&w.right) && d.is_zero(&d.mul(&w.left, &w.right)),
        || format!("{}: witness does not vanish", d.describe()),
    )
}

fn rational_examples() -> Outcome {
    let q = QuadField::from_int(2).unwrap();
    let d = DicksonAlgebra::new(q.clone(), QuadAut::Conjugation, q.sqrt_a(), Variant::Commutative, false).unwrap();
    let v = division_decide(&d);
    ensure(v.is_division(), || format!("quad(2), c = √2: {}", v.label()))?;
    let b = QuaternionAlgebra::rational(2, 3).unwrap();
    let sigma = b.inner(b.i()).unwrap();
    let ij = b.quat_add(&b.i(), &b.j());
    for variant in [Variant::Left, Variant::Middle, Variant::Right] {
        let d = DicksonAlgebra::new(b.clone(), sigma.clone(), ij.clone(), variant, false).unwrap();
        let v = division_decide(&d);
        ensure(v.is_division(), || format!("quat(2,3) {variant}, c = i+j: {}", v.label()))?;
    }
    for variant in Variant::all() {
        let r = q.from_ints(1, 1);
        let d = DicksonAlgebra::new(q.clone(), QuadAut::Conjugation, q.quad_mul(&r, &r), variant, false).unwrap();
        square_not_division(&d)?;
    }
    for variant in [Variant::Left, Variant::Middle, Variant::Right] {
        for r in [b.from_ints(1, 1, 0, 0), b.from_ints(2, 0, 1, 1), b.from_ints(2, 0, 0, 0)] {
            let d = DicksonAlgebra::new(b.clone(), sigma.clone(), b.mul(&r, &r), variant, false).unwrap();
            square_not_division(&d)?;
        }
    }
    Ok("√2 and i+j division; squares give vanishing witnesses in every variant".into())
}

fn padic() -> Outcome {
    let base = PadicField::new(5, 32).map_err(|e| e.to_string())?;
    let k = PadicQuadExt::new(&base, ExtKind::SqrtP);
    let d = DicksonAlgebra::new(k.clone(), QuadAut::Conjugation, k.alpha(), Variant::Commutative, false).unwrap();
    let v = division_decide(&d);
    ensure(v.is_division(), || format!("Q5(√5), c = √5: {}", v.label()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    for kind in ExtKind::all() {
        let k = PadicQuadExt::new(&base, kind);
        let mut seen = BTreeSet::new();
        for class in SquareClass::all() {
            let got = k.square_class(&k.class_representative(class)).map_err(|e| e.to_string())?;
            ensure(got == class, || format!("{}: representative of {} has class {}", kind.name(), class.label(), got.label()))?;
        }
        let mut tested = 0;
        while tested < 100 {
            let c = k.random_elem(&mut rng);
            if k.ext_is_zero(&c) {
                continue;
            }
            seen.insert(k.square_class(&c).map_err(|e| e.to_string())?.label());
            let d = DicksonAlgebra::new(k.clone(), QuadAut::Conjugation, c, Variant::Commutative, false).unwrap();
            let sub = subgroups(&d, None).expect("finite");
            ensure(sub.j_c.len() == sub.aut.len(), || format!("{}: J(c) = {} of {}", d.describe(), sub.j_c.len(), sub.aut.len()))?;
            for tau in &sub.aut {
                let roots = b_roots(&d, tau).len();
                ensure(roots == 2, || format!("{}: {roots} roots for {}", d.describe(), k.format_aut(tau)))?;
            }
            let order = enumerate_automorphisms(&d, None).map_err(|e| e.to_string())?.order();
            ensure(order == 2 * sub.c_sigma.len(), || format!("{}: |Aut| = {order}", d.describe()))?;
            tested += 1;
            checked += 1;
        }
        ensure(seen.len() == 4, || format!("{}: random classes {seen:?}", kind.name()))?;
    }
    Ok(format!("√5 division; {checked} random constants with J(c) = Aut"))
}

fn wene() -> Outcome {
    let k = gf(3, 2);
    let fixed = k.element(&[2]).unwrap();
    let d = finite(&k, 1, &fixed, Variant::Commutative, false);
    let r = wene_inner_check(&d).map_err(|e| e.to_string())?;
    ensure(r.sigma_fixes_c && r.phi_is_sigma_sigma && r.phi_in_enumerated == Some(true) && r.consistent, || {
        format!("c = 2: {r:?}")
    })?;
    let mut moved = 0;
    for c in units(&k) {
        let d = finite(&k, 1, &c, Variant::Commutative, false);
        let r = wene_inner_check(&d).map_err(|e| e.to_string())?;
        if r.sigma_fixes_c {
            continue;
        }
        ensure(!r.phi_is_automorphism && !r.alt_is_sigma_sigma && r.phi_in_enumerated == Some(false), || {
            format!("c = {}: {r:?}", k.format_elem(&c))
        })?;
        moved += 1;
    }
    Ok(format!("σ(c) = c inner and enumerated; {moved} constants with σ(c) ≠ c rejected"))
}

fn characteristic_two() -> Outcome {
    let k = gf(2, 2);
    for c in units(&k) {
        let d = finite(&k, 1, &c, Variant::Commutative, false);
        let w = zero_divisor_search(&d, None).map_err(|e| e.to_string())?;
        let w = w.ok_or_else(|| format!("c = {}: no zero divisor", k.format_elem(&c)))?;
        ensure(d.is_zero(&d.mul(&w.left, &w.right)), || "witness does not vanish".into())?;
    }
    Ok("3 constants, all with zero divisors".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("division equivalence (finite)", 30, division_equivalence),
        ("converse witnesses", 10, converse_witnesses),
        ("nuclei", 10, nuclei),
        ("automorphism counts", 60, automorphism_counts),
        ("group structure", 10, group_structure_labels),
        ("census", 300, census_counts),
        ("rational examples", 1, rational_examples),
        ("p-adic", 5, padic),
        ("wene", 1, wene),
        ("characteristic 2", 1, characteristic_two),
    ];
    let mut failed = Vec::new();
    for (i, (name, budget, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = f();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > Duration::from_secs(*budget) {
            outcome = Err(format!("took {:.2}s, budget {budget}s", elapsed.as_secs_f64()));
        }
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(d) => ("FAIL", d.clone()),
        };
        println!("{tag} {:>2} {name:<30} {:>7.2}s  {detail}", i + 1, elapsed.as_secs_f64());
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
