//! Scalar types: exact rationals, multiprecision reals and complexes, and the
//! Pochhammer / q-Pochhammer / Gamma building blocks used everywhere else.

mod bigfloat;
mod complex;
mod context;
mod gamma;
mod pochhammer;
mod rational;
mod traits;

pub use bigfloat::{BigFloat, rel_diff};
pub use complex::BigComplex;
pub use context::{GUARD_BITS, PrecisionContext};
pub use gamma::{bernoulli, gamma, gamma_exact, recip_gamma};
pub use pochhammer::{
    pochhammer, pochhammer_table, q_binomial, q_binomial_row, q_factorial, q_pochhammer, q_pochhammer_inf,
    q_pochhammer_multi, q_power, tri,
};
pub use rational::ExactRational;
pub use traits::Scalar;

/// Shorthand for small rational literals.
pub fn rat(p: i64, q: i64) -> ExactRational {
    ExactRational::frac(p, q)
}
