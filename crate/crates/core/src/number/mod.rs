//! Exact arithmetic over Q and quadratic fields Q(√a).

pub mod hilbert;
pub mod quadratic;
pub mod rational;

pub use hilbert::{
    cyclic_division_decision_quad, find_norm_solution, hilbert_symbol, is_norm_from_quadfield,
    Place,
};
pub use quadratic::{QuadAut, QuadElement, QuadField};
pub use rational::{rational_is_square, Rational, RationalField};
