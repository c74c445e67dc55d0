//! Exact-integer truncated q-series: ring arithmetic, q-Pochhammer
//! products, and the identity checkers used to verify the counting
//! theorems coefficientwise.

mod identities;
mod pochhammer;
mod series;

pub use identities::{
    class_gf_from_enumeration, gen_a, gen_a_product, gen_b_signed, is_pentagonal4, lebesgue_lhs,
    lebesgue_rhs, partition_series, slater_check, slater_rhs, theta_4nn, SlaterReport,
};
pub use pochhammer::{poch, poch_inf};
pub use series::{Monomial, QSeries, SeriesError, SeriesResult};
