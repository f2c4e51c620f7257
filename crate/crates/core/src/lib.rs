//! Certified analysis of entire functions with positive Taylor coefficients
//! through their second quotients `q_n = a_{n-1}^2 / (a_{n-2} a_n)`.
//!
//! The crate is organized around five concerns:
//!
//! * [`series`] — coefficient series, quotient profiles, and the rules that
//!   generate them; conversion and normalization to `a_0 = a_1 = 1`.
//! * [`poly`] + [`engine`] — exact rational polynomials, Sturm chains,
//!   square-free decomposition, hyperbolicity reports, and CZDS checks.
//! * [`winding`] — argument-principle winding numbers on circles, used as an
//!   independent zero-counting oracle.
//! * [`theta`] — the partial theta function `g_a(z) = Σ z^j a^{-j²}`: section
//!   constants `c_n`, the threshold `q_∞`, membership tests, and the spectrum
//!   of double-root parameters.
//! * [`certifier`] — the non-membership pipeline: given increasing quotients
//!   with limit below `q_∞`, it assembles a machine-checkable certificate
//!   that the function is not in the Laguerre-Pólya class.
//!
//! All certification paths use exact rational arithmetic or outward-rounded
//! `f64` intervals; no bare floating point feeds a certified conclusion.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod certifier;
pub mod engine;
pub mod error;
pub mod interval;
pub mod poly;
pub mod rat;
pub mod series;
pub mod theta;
pub mod winding;

pub use error::Error;
pub use rat::Rat;
