//! Closed-form evaluation of the non-elementary integrals
//!
//! ```text
//! ∫ x^α e^(η x^β) dx,  ∫ x^α cosh(η x^β) dx,  ∫ x^α sinh(η x^β) dx,
//! ∫ x^α cos(η x^β) dx, ∫ x^α sin(η x^β) dx
//! ```
//!
//! through the hypergeometric functions 1F1 and 1F2, together with the
//! hypergeometric identities that follow from them and the generalized
//! gamma-type and Gaussian-type probability distributions built on
//! `∫₀^∞ x^α e^(-η x^β) dx`.
//!
//! Every closed form has an independent check in [`oracle`] (adaptive
//! Gauss–Kronrod quadrature and Monte-Carlo moments) that shares no code
//! with the series kernels.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod dd;
pub mod distributions;
pub mod errata;
pub mod error;
pub mod identities;
pub mod integrals;
pub mod oracle;
pub mod specfun;
pub mod sum;

pub use error::{Error, Result};
pub use specfun::{SeriesConfig, SeriesValue};
