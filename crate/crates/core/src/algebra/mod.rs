//! Exact arithmetic: rationals, prime fields, binomial and Gaussian
//! coefficients, and rational linear algebra.

pub mod combinatorics;
pub mod gf;
pub mod linalg;
pub mod rational;

pub use combinatorics::{binom, q_binom, q_int, q_pow};
pub use gf::{is_prime, GFElement, GFMatrix};
pub use linalg::{
    bareiss_rank, nullspace_basis, project_onto_span, rational_rank, BasisLabel, FunctionVector, RationalMatrix,
    SubspaceBasis,
};
pub use rational::Rational;
pub(crate) use linalg::clear_denominators_with;
