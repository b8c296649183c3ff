//! Measurements used to compare graph models.

mod degeneracy;
mod histogram;
mod powerlaw;

pub use degeneracy::{degeneracy, min_degree, DegeneracyResult};
pub use histogram::{degree_histogram, DegreeHistogram};
pub use powerlaw::{fit_power_law, FitMode, PowerLawFit};
