//! Serializable views of the analysis results with stable field names.
//! Elements appear in their literal syntax, pairs as `(u | v)`.

use serde::Serialize;

use crate::algebra::CoeffAlgebra;
use crate::analysis::{
    AutBounds, AutGroupReport, CensusReport, IsoVerdict, StructureReport, SubgroupReport,
    WeneReport,
};
use crate::analysis::automorphisms::AutomorphismDescriptor;
use crate::dickson::{DicksonAlgebra, NucleusReport};
use crate::verdict::{DivisionVerdict, Pair, ZeroDivisorWitness};

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConstructView {
    pub algebra: String,
    pub coeff: String,
    pub variant: String,
    pub sigma: String,
    pub c: String,
    pub dim: usize,
    pub sigma_identity: bool,
    pub unit: String,
    pub lambda_squared: String,
    pub commutative: bool,
    pub note: Option<String>,
}

pub fn construct_view<A: CoeffAlgebra>(d: &DicksonAlgebra<A>) -> ConstructView {
    let k = d.coeff();
    let lambda = d.lambda();
    let basis = d.basis();
    let commutative = basis
        .iter()
        .all(|x| basis.iter().all(|y| d.is_zero(&d.commutator(x, y))));
    let note = d.sigma_is_identity().then(|| {
        "σ = id: the double is K[√c] for c not a square and K × K for c a square (not verified)".to_string()
    });
    ConstructView {
        algebra: d.describe(),
        coeff: k.describe(),
        variant: d.variant().name().to_string(),
        sigma: k.format_aut(d.sigma()),
        c: k.format_elem(d.c()),
        dim: d.dim(),
        sigma_identity: d.sigma_is_identity(),
        unit: d.format_pair(&d.one()),
        lambda_squared: d.format_pair(&d.mul(&lambda, &lambda)),
        commutative,
        note,
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SpanView {
    pub dim: usize,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct NucleiView {
    pub left: SpanView,
    pub middle: SpanView,
    pub right: SpanView,
    pub nucleus: SpanView,
    pub commuter: SpanView,
    pub center: SpanView,
}

pub fn nuclei_view<A: CoeffAlgebra>(d: &DicksonAlgebra<A>, r: &NucleusReport<A::Elem>) -> NucleiView {
    let span = |b: &[Pair<A::Elem>]| SpanView {
        dim: b.len(),
        basis: b.iter().map(|p| d.format_pair(p)).collect(),
    };
    NucleiView {
        left: span(&r.left),
        middle: span(&r.middle),
        right: span(&r.right),
        nucleus: span(&r.nucleus),
        commuter: span(&r.commuter),
        center: span(&r.center),
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ProductCheck {
    pub left: String,
    pub right: String,
    pub product: String,
    pub vanishes: bool,
}

pub fn product_check<A: CoeffAlgebra>(d: &DicksonAlgebra<A>, w: &ZeroDivisorWitness<A::Elem>) -> ProductCheck {
    let prod = d.mul(&w.left, &w.right);
    ProductCheck {
        left: d.format_pair(&w.left),
        right: d.format_pair(&w.right),
        product: d.format_pair(&prod),
        vanishes: d.is_zero(&prod),
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DivisionView {
    pub verdict: String,
    pub reason: String,
    /// `[left, right]`, empty when no explicit witness is known.
    pub witness: Vec<String>,
    pub witness_product_vanishes: Option<bool>,
}

pub fn division_view<A: CoeffAlgebra>(d: &DicksonAlgebra<A>, v: &DivisionVerdict<A::Elem>) -> DivisionView {
    let check = v.witness().map(|w| product_check(d, w));
    DivisionView {
        verdict: v.label().to_string(),
        reason: v.reason().to_string(),
        witness: check.as_ref().map(|c| vec![c.left.clone(), c.right.clone()]).unwrap_or_default(),
        witness_product_vanishes: check.map(|c| c.vanishes),
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DescriptorView {
    pub tau: String,
    pub b: String,
}

pub fn descriptor_view<A: CoeffAlgebra>(k: &A, g: &AutomorphismDescriptor<A::Aut, A::Elem>) -> DescriptorView {
    DescriptorView { tau: k.format_aut(&g.tau), b: k.format_elem(&g.b) }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SubgroupView {
    pub aut: Vec<String>,
    pub j_c: Vec<String>,
    pub c_sigma: Vec<String>,
    pub intersection: Vec<String>,
    pub isotropy: Vec<String>,
    pub closed: bool,
    pub complete: bool,
}

pub fn subgroup_view<A: CoeffAlgebra>(k: &A, s: &SubgroupReport<A::Aut>) -> SubgroupView {
    let list = |v: &[A::Aut]| v.iter().map(|t| k.format_aut(t)).collect();
    SubgroupView {
        aut: list(&s.aut),
        j_c: list(&s.j_c),
        c_sigma: list(&s.c_sigma),
        intersection: list(&s.intersection),
        isotropy: list(&s.isotropy),
        closed: s.closed.iter().all(|x| *x),
        complete: s.complete,
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AutGroupView {
    pub order: usize,
    pub expected_order: usize,
    pub complete: bool,
    pub elements: Vec<DescriptorView>,
    /// Φ-labeling verdict: yes, no or undetermined.
    pub structure: String,
    pub structure_reason: Option<String>,
    pub table_shape: Option<String>,
    pub expected_shape: Option<String>,
    pub table_matches_expected: bool,
    pub table_is_group: bool,
    pub orbit_products: Vec<String>,
    pub orbit_products_pm_one: bool,
    pub phi: Option<Vec<(usize, i8)>>,
    pub table: Option<Vec<Vec<usize>>>,
    pub subgroups: Option<SubgroupView>,
    pub bounds: Option<AutBounds>,
}

pub fn autgroup_view<A: CoeffAlgebra>(
    d: &DicksonAlgebra<A>,
    r: &AutGroupReport<A::Aut, A::Elem>,
    s: &StructureReport<A::Elem>,
    sub: Option<&SubgroupReport<A::Aut>>,
    bounds: Option<AutBounds>,
) -> AutGroupView {
    use crate::analysis::LabelingVerdict;
    let k = d.coeff();
    let structure_reason = match &s.labeling {
        LabelingVerdict::Yes => None,
        LabelingVerdict::No(r) | LabelingVerdict::Undetermined(r) => Some(r.clone()),
    };
    AutGroupView {
        order: r.order(),
        expected_order: r.expected_order,
        complete: r.complete,
        elements: r.elements.iter().map(|g| descriptor_view(k, g)).collect(),
        structure: s.labeling.label().to_string(),
        structure_reason,
        table_shape: s.table_shape.as_ref().map(|x| x.to_string()),
        expected_shape: s.expected_shape.as_ref().map(|x| x.to_string()),
        table_matches_expected: s.table_matches,
        table_is_group: r.table_is_group,
        orbit_products: s.orbit_products.iter().map(|x| k.format_elem(x)).collect(),
        orbit_products_pm_one: s.orbit_products_pm_one,
        phi: s.phi.clone(),
        table: r.table.clone(),
        subgroups: sub.map(|x| subgroup_view(k, x)),
        bounds,
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IsoView {
    pub verdict: String,
    pub reason: String,
    pub witness: Option<DescriptorView>,
}

pub fn iso_view<A: CoeffAlgebra>(k: &A, v: &IsoVerdict<A::Aut, A::Elem>) -> IsoView {
    IsoView {
        verdict: v.label().to_string(),
        reason: v.reason(),
        witness: match v {
            IsoVerdict::Isomorphic { witness } => Some(descriptor_view(k, witness)),
            _ => None,
        },
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CensusEntryView {
    pub sigma: u32,
    pub c: String,
    pub verdict: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CensusClassView {
    pub sigma: u32,
    pub c: String,
    pub size: usize,
    pub sigma_identity: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CensusView {
    pub p: u64,
    pub n: u32,
    pub field: String,
    pub classes_excluding_id: usize,
    pub classes_including_id: usize,
    pub division_count: usize,
    pub entry_count: usize,
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub unknown_pairs: usize,
    pub classes: Vec<CensusClassView>,
    pub entries: Vec<CensusEntryView>,
}

pub fn census_view(r: &CensusReport) -> CensusView {
    CensusView {
        p: r.p,
        n: r.n,
        field: r.field.clone(),
        classes_excluding_id: r.classes_excluding_id,
        classes_including_id: r.classes_including_id,
        division_count: r.division_count(),
        entry_count: r.entries.len(),
        reflexive: r.reflexive,
        symmetric: r.symmetric,
        transitive: r.transitive,
        unknown_pairs: r.unknown_pairs,
        classes: r
            .classes
            .iter()
            .map(|c| CensusClassView {
                sigma: c.representative.0,
                c: c.representative.1.to_string(),
                size: c.members.len(),
                sigma_identity: c.sigma_identity,
            })
            .collect(),
        entries: r
            .entries
            .iter()
            .map(|e| CensusEntryView { sigma: e.sigma, c: e.c.to_string(), verdict: e.verdict.label().to_string() })
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WeneView {
    pub sigma_fixes_c: bool,
    pub left_inverse: String,
    pub phi_is_sigma_sigma: bool,
    pub phi_is_automorphism: bool,
    pub phi_in_enumerated: Option<bool>,
    pub alt_is_sigma_sigma: bool,
    pub consistent: bool,
}

pub fn wene_view<A: CoeffAlgebra>(d: &DicksonAlgebra<A>, r: &WeneReport<A::Elem>) -> WeneView {
    WeneView {
        sigma_fixes_c: r.sigma_fixes_c,
        left_inverse: d.format_pair(&r.left_inverse),
        phi_is_sigma_sigma: r.phi_is_sigma_sigma,
        phi_is_automorphism: r.phi_is_automorphism,
        phi_in_enumerated: r.phi_in_enumerated,
        alt_is_sigma_sigma: r.alt_is_sigma_sigma,
        consistent: r.consistent,
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WitnessView {
    pub r: String,
    pub s: String,
    pub t: String,
    pub critical_value: String,
    #[serde(flatten)]
    pub check: ProductCheck,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::division_decide;
    use crate::dickson::Variant;
    use crate::finite_field::FiniteField;

    #[test]
    fn division_json_shape() {
        let k = FiniteField::new(3, 2, None).unwrap();
        let d = DicksonAlgebra::new(k.clone(), k.frobenius(1), k.element(&[1]).unwrap(), Variant::Commutative, false).unwrap();
        let v = division_view(&d, &division_decide(&d));
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["verdict"], "proved-not-division");
        assert_eq!(json["witness"].as_array().unwrap().len(), 2);
        assert_eq!(json["witness_product_vanishes"], true);
        let c = construct_view(&d);
        assert_eq!(c.dim, 4);
        assert!(c.commutative);
        assert_eq!(c.lambda_squared, d.format_pair(&d.pair(k.element(&[1]).unwrap(), k.element(&[0]).unwrap())));
    }
}
