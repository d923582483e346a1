//! Exact arithmetic shared by every layer: big rationals, truncated q-series,
//! Hermite polynomials, Dedekind sums and elementary number theory.

pub mod dedekind;
pub mod hermite;
pub mod numtheory;
pub mod qseries;
pub mod rational;

pub use dedekind::{dedekind_sum, rademacher_phi};
pub use hermite::HermitePoly;
pub use numtheory::{continued_fraction, divisors, is_prime, sigma1_p};
pub use qseries::QSeries;
pub use rational::{rat, rat_i, Rat};
