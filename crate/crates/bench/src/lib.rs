//! Fixtures shared by the benchmarks.

use dickson_core::{CoeffAlgebra, DicksonAlgebra, FiniteField, QuaternionAlgebra, RationalField, Variant};

/// D(GF(p^n), Frobenius, c) for the first non-square c.
pub fn finite_division(p: u64, n: u32) -> DicksonAlgebra<FiniteField> {
    let k = FiniteField::new(p, n, None).expect("field");
    let c = (1..k.size())
        .map(|v| k.from_value(v).expect("element"))
        .find(|c| !k.is_square(c).expect("square test"))
        .expect("odd q has non-squares");
    DicksonAlgebra::new(k.clone(), k.frobenius(1), c, Variant::Commutative, false).expect("algebra")
}

/// The (2,3) quaternion double with σ = conjugation by i and c = i + j.
pub fn quaternion_division(variant: Variant) -> DicksonAlgebra<QuaternionAlgebra<RationalField>> {
    let b = QuaternionAlgebra::rational(2, 3).expect("quaternions");
    let sigma = b.inner(b.i()).expect("invertible");
    let c = b.add(&b.i(), &b.j());
    DicksonAlgebra::new(b, sigma, c, variant, false).expect("algebra")
}
