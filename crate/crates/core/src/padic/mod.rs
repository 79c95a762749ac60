//! Bounded-precision p-adic numbers (p odd) and quadratic extensions of Q_p.

pub mod division;
pub mod ext;
pub mod number;

pub use division::{is_norm_from_ext, padic_division_decision, padic_example_division_check};
pub use ext::{parse_qp_spec, square_class_qp, ExtKind, PadicQuadElem, PadicQuadExt, SquareClass};
pub use number::{PadicField, PadicNumber, DEFAULT_PRECISION};
