//! Stieltjes tableaux, J-fractions and the addition formulas they generate.

pub mod error;
pub mod scalar;

pub use error::{Error, Result};
pub mod jfraction;
pub mod series;
pub mod motzkin;
pub mod translation;
pub mod families;
pub mod theorems;
pub mod cli;
