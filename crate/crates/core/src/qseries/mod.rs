//! Exact polynomial and truncated series arithmetic over the integers.

mod format;
pub mod laurent;
pub mod pochhammer;
pub mod power;
pub mod series;

pub use laurent::{LaurentPoly, Substitution};
pub use pochhammer::{inv_pochhammer, qbinom, qbinom_coeffs, qbinom_invert_check, PochLen, QFactorialTable};
pub use power::PowerSeries;
pub use series::{CoeffMismatch, QSeries, ZWindow};
