//! Dickson doubling algebras over finite fields, quadratic number fields,
//! p-adic fields and quaternion algebras, with decision procedures for
//! division, nuclei, isomorphisms and automorphisms.

pub mod algebra;
pub mod analysis;
pub mod dickson;
pub mod error;
pub mod field;
pub mod finite_field;
pub mod linalg;
pub mod number;
pub mod padic;
pub mod quaternion;
pub mod report;
pub mod verdict;

pub use algebra::{BaseElem, CoeffAlgebra, FiniteCoeffAlgebra, SquareRoot};
pub use analysis::{
    census, division_decide, enumerate_automorphisms, group_structure, iso_test, oracle_automorphisms,
    subgroups, wene_inner_check, AutGroupReport, AutomorphismDescriptor, CensusReport, DivisionDecide,
    IsoVerdict, LabelingVerdict,
};
pub use dickson::{DicksonAlgebra, NucleusReport, Variant};
pub use error::{Error, Result};
pub use field::Field;
pub use finite_field::{FieldElement, FiniteField, Frobenius};
pub use number::{QuadAut, QuadElement, QuadField, Rational, RationalField};
pub use padic::{ExtKind, PadicField, PadicNumber, PadicQuadElem, PadicQuadExt, SquareClass};
pub use quaternion::{InnerAut, Quaternion, QuaternionAlgebra};
pub use verdict::{DivisionVerdict, Pair, ZeroDivisorWitness};
