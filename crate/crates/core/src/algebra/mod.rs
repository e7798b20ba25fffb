//! Exact integer polynomials and truncated rational power series.

mod poly;
mod series;

pub use poly::{poly_add, poly_eval_at_one, poly_mul, BivarPolynomial, IntPolynomial};
pub use series::{
    exponential_ode_exponent, ode_residual_exponential, ode_residual_quadratic, series_add,
    series_derive, series_exp, series_mul, RationalSeries,
};
