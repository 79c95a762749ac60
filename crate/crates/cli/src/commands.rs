//! Command implementations, generic over the coefficient algebra.

use anyhow::{anyhow, bail, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use dickson_core::analysis::automorphisms::enumeration_matches_oracle;
use dickson_core::analysis::{
    aut_bounds_check, census_with_limit, division_decide, enumerate_automorphisms, group_structure,
    iso_test, oracle_automorphisms, subgroups, verify_iso_witness, wene_inner_check, DivisionDecide,
    IsoVerdict,
};
use dickson_core::dickson::{critical_value, theorem_zero_divisor_witness};
use dickson_core::number::QuadAut;
use dickson_core::report::{self, ConstructView, WitnessView};
use dickson_core::{
    CoeffAlgebra, DicksonAlgebra, FiniteField, PadicField, PadicQuadExt, QuadField, QuaternionAlgebra,
    RationalField, Variant,
};

use crate::spec::AlgebraSpec;

/// What the CLI needs beyond the library trait: σ syntax, default witness
/// lists, and optional extra checks.
pub trait CliCoeff: DivisionDecide {
    fn parse_sigma(&self, s: &str) -> Result<Self::Aut>;

    /// τ candidates when the automorphism group cannot be listed.
    fn default_taus(&self, _d: &DicksonAlgebra<Self>) -> Option<Vec<Self::Aut>> {
        None
    }

    /// Enumeration against the generator-image oracle, when it applies.
    fn oracle_check(
        _d: &DicksonAlgebra<Self>,
        _r: &dickson_core::AutGroupReport<Self::Aut, Self::Elem>,
    ) -> Option<bool> {
        None
    }
}

fn is_identity_word(s: &str) -> bool {
    matches!(s.trim(), "id" | "identity")
}

impl CliCoeff for FiniteField {
    fn parse_sigma(&self, s: &str) -> Result<Self::Aut> {
        if is_identity_word(s) {
            return Ok(self.frobenius(0));
        }
        if s.trim() == "conjugate" && self.degree() == 2 {
            return Ok(self.frobenius(1));
        }
        let k = s
            .trim()
            .strip_prefix("frobenius:")
            .ok_or_else(|| anyhow!("expected frobenius:k for {}, got {s:?}", self.describe()))?;
        Ok(self.frobenius(k.trim().parse()?))
    }

    fn oracle_check(
        d: &DicksonAlgebra<Self>,
        r: &dickson_core::AutGroupReport<Self::Aut, Self::Elem>,
    ) -> Option<bool> {
        let oracle = oracle_automorphisms(d).ok()?;
        Some(enumeration_matches_oracle(d, r, &oracle))
    }
}

fn parse_quad_aut(s: &str) -> Result<QuadAut> {
    match s.trim() {
        "conjugate" | "conj" | "conjugation" => Ok(QuadAut::Conjugation),
        w if is_identity_word(w) => Ok(QuadAut::Identity),
        other => bail!("expected conjugate or id, got {other:?}"),
    }
}

impl CliCoeff for QuadField {
    fn parse_sigma(&self, s: &str) -> Result<QuadAut> {
        parse_quad_aut(s)
    }
}

impl CliCoeff for PadicQuadExt {
    fn parse_sigma(&self, s: &str) -> Result<QuadAut> {
        parse_quad_aut(s)
    }
}

impl CliCoeff for PadicField {
    fn parse_sigma(&self, s: &str) -> Result<QuadAut> {
        if is_identity_word(s) {
            Ok(self.identity_aut())
        } else {
            bail!("Q_p has only the identity automorphism, got {s:?}")
        }
    }
}

impl CliCoeff for QuaternionAlgebra<RationalField> {
    fn parse_sigma(&self, s: &str) -> Result<Self::Aut> {
        if is_identity_word(s) {
            return Ok(self.identity_aut());
        }
        let m = s
            .trim()
            .strip_prefix("conjugation:")
            .ok_or_else(|| anyhow!("expected conjugation:x,y,z,w, got {s:?}"))?;
        Ok(self.inner(self.parse_elem(m)?)?)
    }

    fn default_taus(&self, d: &DicksonAlgebra<Self>) -> Option<Vec<Self::Aut>> {
        Some(vec![self.identity_aut(), d.sigma().clone()])
    }
}

/// Options shared by every command.
#[derive(Debug, Clone)]
pub struct Options {
    pub seed: u64,
    pub allow_identity: bool,
    pub trials: usize,
}

pub fn build<A: CliCoeff>(coeff: A, spec: &AlgebraSpec, opts: &Options) -> Result<DicksonAlgebra<A>> {
    let sigma = coeff.parse_sigma(&spec.sigma)?;
    let variant: Variant = spec.variant.parse()?;
    let c = match &spec.c {
        Some(text) => coeff.parse_elem(text)?,
        None => bail!("missing constant c (--c or the spec document)"),
    };
    Ok(DicksonAlgebra::new(coeff, sigma, c, variant, opts.allow_identity)?)
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    Ok(serde_json::to_value(v)?)
}

#[derive(Serialize)]
struct ConstructOutput {
    #[serde(flatten)]
    view: ConstructView,
    trials: usize,
    unit_law: bool,
    distributive: bool,
    commutative_law: Option<bool>,
}

pub fn construct<A: CliCoeff>(d: &DicksonAlgebra<A>, opts: &Options) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (mut unit_law, mut distributive, mut commutative) = (true, true, true);
    for _ in 0..opts.trials {
        let [x, y, z] = [0, 1, 2].map(|_| d.random_pair(&mut rng));
        unit_law &= d.eq(&d.mul(&d.one(), &x), &x) && d.eq(&d.mul(&x, &d.one()), &x);
        let lhs = d.mul(&x, &d.add(&y, &z));
        distributive &= d.eq(&lhs, &d.add(&d.mul(&x, &y), &d.mul(&x, &z)));
        commutative &= d.eq(&d.mul(&x, &y), &d.mul(&y, &x));
    }
    let commutative_law =
        (d.variant() == Variant::Commutative || d.coeff().is_commutative()).then_some(commutative);
    to_value(&ConstructOutput {
        view: report::construct_view(d),
        trials: opts.trials,
        unit_law,
        distributive,
        commutative_law,
    })
}

pub fn nuclei<A: CliCoeff>(d: &DicksonAlgebra<A>) -> Result<Value> {
    to_value(&report::nuclei_view(d, &d.nuclei()))
}

pub fn division<A: CliCoeff>(d: &DicksonAlgebra<A>) -> Result<Value> {
    to_value(&report::division_view(d, &division_decide(d)))
}

#[derive(Serialize)]
struct AutGroupOutput {
    #[serde(flatten)]
    view: report::AutGroupView,
    oracle_agrees: Option<bool>,
}

fn taus_for<A: CliCoeff>(d: &DicksonAlgebra<A>, taus: &[String]) -> Result<Option<Vec<A::Aut>>> {
    let k = d.coeff();
    if !taus.is_empty() {
        return Ok(Some(taus.iter().map(|t| k.parse_sigma(t)).collect::<Result<_>>()?));
    }
    Ok(k.default_taus(d))
}

pub fn autgroup<A: CliCoeff>(d: &DicksonAlgebra<A>, taus: &[String]) -> Result<Value> {
    let taus = taus_for(d, taus)?;
    let r = enumerate_automorphisms(d, taus.as_deref())?;
    let s = group_structure(d, &r);
    let sub = subgroups(d, taus.as_deref());
    let bounds = if taus.is_none() { aut_bounds_check(d).ok() } else { None };
    let oracle_agrees = A::oracle_check(d, &r);
    to_value(&AutGroupOutput {
        view: report::autgroup_view(d, &r, &s, sub.as_ref(), bounds),
        oracle_agrees,
    })
}

#[derive(Serialize)]
struct IsoOutput {
    #[serde(flatten)]
    view: report::IsoView,
    witness_verified: Option<bool>,
    first: String,
    second: String,
}

pub fn iso<A: CliCoeff>(d1: &DicksonAlgebra<A>, d2: &DicksonAlgebra<A>, taus: &[String]) -> Result<Value> {
    let taus = taus_for(d1, taus)?;
    let v = iso_test(d1, d2, taus.as_deref());
    let witness_verified = match &v {
        IsoVerdict::Isomorphic { witness } => Some(verify_iso_witness(d1, d2, witness)),
        _ => None,
    };
    to_value(&IsoOutput {
        view: report::iso_view(d1.coeff(), &v),
        witness_verified,
        first: d1.describe(),
        second: d2.describe(),
    })
}

pub fn census(p: u64, n: u32, max_order: u64) -> Result<Value> {
    to_value(&report::census_view(&census_with_limit(p, n, max_order)?))
}

pub fn wene<A: CliCoeff>(d: &DicksonAlgebra<A>) -> Result<Value> {
    to_value(&report::wene_view(d, &wene_inner_check(d)?))
}

/// Critical pair for given or seeded (r, s, t), with c reset to the
/// matching critical value.
pub fn witness<A: CliCoeff>(
    coeff: A,
    spec: &AlgebraSpec,
    rst: [Option<&String>; 3],
    opts: &Options,
) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut pick = |given: Option<&String>| -> Result<A::Elem> {
        if let Some(text) = given {
            return Ok(coeff.parse_elem(text)?);
        }
        for _ in 0..1000 {
            let x = coeff.random_elem(&mut rng);
            if coeff.inv(&x).is_some() {
                return Ok(x);
            }
        }
        bail!("no invertible element found")
    };
    let [r, s, t] = [pick(rst[0])?, pick(rst[1])?, pick(rst[2])?];
    let sigma = coeff.parse_sigma(&spec.sigma)?;
    let variant: Variant = spec.variant.parse()?;
    let c = critical_value(&coeff, &sigma, variant, &r, &s, &t)?;
    let k = coeff.clone();
    let d = DicksonAlgebra::new(coeff, sigma, c.clone(), variant, opts.allow_identity)?;
    let w = theorem_zero_divisor_witness(&d, &r, &s, &t)?;
    to_value(&WitnessView {
        r: k.format_elem(&r),
        s: k.format_elem(&s),
        t: k.format_elem(&t),
        critical_value: k.format_elem(&c),
        check: report::product_check(&d, &w),
    })
}
