//! Exhaustive census of commutative doubles over GF(p^n): division verdicts
//! for every (σ, c) and the isomorphism classes of the division algebras.

use rayon::prelude::*;

use super::division::division_decide;
use super::iso::{iso_test_with_dims, IsoVerdict};
use crate::algebra::{CoeffAlgebra, FiniteCoeffAlgebra};
use crate::dickson::{DicksonAlgebra, Variant};
use crate::error::{Error, Result};
use crate::finite_field::{FieldElement, FiniteField};
use crate::verdict::DivisionVerdict;

/// Largest p^n accepted by default.
pub const CENSUS_MAX_ORDER: u64 = 27;

#[derive(Debug, Clone)]
pub struct CensusEntry {
    /// σ = Frobenius^sigma.
    pub sigma: u32,
    pub c: FieldElement,
    pub verdict: DivisionVerdict<FieldElement>,
}

#[derive(Debug, Clone)]
pub struct CensusClass {
    /// Lexicographically first (σ, c) of the class.
    pub representative: (u32, FieldElement),
    /// Indices into `CensusReport::entries`.
    pub members: Vec<usize>,
    pub sigma_identity: bool,
}

#[derive(Debug, Clone)]
pub struct CensusReport {
    pub p: u64,
    pub n: u32,
    pub field: String,
    pub entries: Vec<CensusEntry>,
    pub classes: Vec<CensusClass>,
    pub classes_excluding_id: usize,
    pub classes_including_id: usize,
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    /// Pairs of division entries with an unknown isomorphism verdict.
    pub unknown_pairs: usize,
}

impl CensusReport {
    pub fn division_count(&self) -> usize {
        self.entries.iter().filter(|e| e.verdict.is_division()).count()
    }
}

/// Runs the census with the default size limit.
pub fn census(p: u64, n: u32) -> Result<CensusReport> {
    census_with_limit(p, n, CENSUS_MAX_ORDER)
}

pub fn census_with_limit(p: u64, n: u32, max_order: u64) -> Result<CensusReport> {
    if p == 2 {
        return Err(Error::Unsupported("the census needs odd characteristic".into()));
    }
    let q = p.checked_pow(n).filter(|q| *q <= max_order).ok_or_else(|| {
        Error::Unsupported(format!("p^n = {p}^{n} exceeds the census limit {max_order}"))
    })?;
    let k = FiniteField::new(p, n, None)?;
    let non_squares: Vec<FieldElement> = k
        .elements()
        .into_iter()
        .filter(|c| !k.is_zero(c) && k.is_square(c).map(|s| !s).unwrap_or(false))
        .collect();
    debug_assert_eq!(non_squares.len() as u64, (q - 1) / 2);

    let grid: Vec<(u32, FieldElement)> =
        (0..n).flat_map(|s| non_squares.iter().map(move |c| (s, *c))).collect();
    let algebras: Vec<DicksonAlgebra<FiniteField>> = grid
        .iter()
        .map(|(s, c)| DicksonAlgebra::new(k.clone(), k.frobenius(*s), *c, Variant::Commutative, true))
        .collect::<Result<_>>()?;
    let entries: Vec<CensusEntry> = grid
        .par_iter()
        .zip(algebras.par_iter())
        .map(|((s, c), d)| CensusEntry { sigma: *s, c: *c, verdict: division_decide(d) })
        .collect();

    let div: Vec<usize> = (0..entries.len()).filter(|i| entries[*i].verdict.is_division()).collect();
    let dims: Vec<[usize; 6]> = div.par_iter().map(|i| algebras[*i].nuclei().dims()).collect();
    let m = div.len();
    // relation[a][b]: Some(true) isomorphic, Some(false) not, None unknown.
    let relation: Vec<Vec<Option<bool>>> = (0..m)
        .into_par_iter()
        .map(|a| {
            (0..m)
                .map(|b| {
                    match iso_test_with_dims(&algebras[div[a]], &algebras[div[b]], dims[a], dims[b], None) {
                        IsoVerdict::Isomorphic { .. } => Some(true),
                        IsoVerdict::NotIsomorphic { .. } => Some(false),
                        IsoVerdict::Unknown { .. } => None,
                    }
                })
                .collect()
        })
        .collect();
    let iso = |a: usize, b: usize| relation[a][b] == Some(true);
    let reflexive = (0..m).all(|a| iso(a, a));
    let symmetric = (0..m).all(|a| (0..m).all(|b| relation[a][b] == relation[b][a]));
    let transitive = (0..m).all(|a| {
        (0..m).all(|b| !iso(a, b) || (0..m).all(|c| !iso(b, c) || iso(a, c)))
    });
    let unknown_pairs = relation.iter().flatten().filter(|r| r.is_none()).count();

    // Classes: connected components of the isomorphism graph, in grid order so
    // the first member is the lexicographic representative.
    let mut class_of = vec![usize::MAX; m];
    let mut classes: Vec<CensusClass> = Vec::new();
    for a in 0..m {
        if class_of[a] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut stack = vec![a];
        let mut members = Vec::new();
        class_of[a] = id;
        while let Some(x) = stack.pop() {
            members.push(div[x]);
            for y in 0..m {
                if class_of[y] == usize::MAX && (iso(x, y) || iso(y, x)) {
                    class_of[y] = id;
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        let first = &entries[members[0]];
        classes.push(CensusClass {
            representative: (first.sigma, first.c),
            sigma_identity: first.sigma == 0,
            members,
        });
    }
    let classes_excluding_id = classes.iter().filter(|c| !c.sigma_identity).count();
    Ok(CensusReport {
        p,
        n,
        field: k.describe(),
        entries,
        classes_including_id: classes.len(),
        classes_excluding_id,
        classes,
        reflexive,
        symmetric,
        transitive,
        unknown_pairs,
    })
}
