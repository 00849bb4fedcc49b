//! Hypergeometric and basic hypergeometric sums, Bessel functions, and
//! truncated power series.

mod bessel;
mod hypergeometric;
mod power;

pub use bessel::{bessel_i, bessel_j};
pub use hypergeometric::{SeriesValue, Step, Summation, eval_pfq, eval_rphis};
pub use power::{
    PowerSeries, RationalSeries, SeriesOp, bessel_i_int_series, divide_by_t, euler_inv_series, euler_series,
    exp_series, monomial, pfq_series, rphis_series, series_arith,
};
