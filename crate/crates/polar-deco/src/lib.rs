//! Collisional decoherence of polar molecules in a thermal gas.
//!
//! The crate computes, from a homogeneous anisotropic interaction potential
//! `V(r, cosΘ) = -C/r^s (1 + a cos²Θ)`:
//!
//! * orientation-averaged total and differential scattering cross sections in
//!   the eikonal approximation ([`scattering`]),
//! * the collisional scattering rate and the decoherence function of the
//!   molecular center of mass, together with the momentum-kick distribution
//!   ([`decoherence`]),
//! * far-field interference patterns behind a phase grating when a collision
//!   chamber sits between grating and detector ([`interferometry`]).
//!
//! All closed-form results are paired with independent quadrature oracles in
//! [`numerics`]; [`validation`] bundles the cross checks into a reportable
//! suite. Everything works in SI units internally; [`units`] holds the
//! constant table and the fixed set of input conversions.

pub mod config;
pub mod decoherence;
pub mod interferometry;
pub mod numerics;
pub mod scattering;
pub mod units;
pub mod validation;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {message}")]
    InvalidParameter { name: &'static str, message: String },

    #[error("domain error in {operation}: {message}")]
    Domain {
        operation: &'static str,
        message: String,
    },

    #[error("{operation} did not converge: error estimate {estimate:.3e} exceeds tolerance {tolerance:.3e}")]
    Unconverged {
        operation: &'static str,
        estimate: f64,
        tolerance: f64,
    },

    #[error("unknown unit tag `{0}`")]
    UnknownUnit(String),

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            message: message.into(),
        }
    }

    pub(crate) fn domain(operation: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            operation,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
