//! Measurement-induced nonlocality (MIN), geometric discord and the maximal
//! Bell-CHSH expectation for Bell-diagonal two-qubit states shared between an
//! inertial observer and a uniformly accelerated one.
//!
//! The accelerated partner's qubit is a fermionic mode seen through the
//! Unruh channel: region I (accessible, "Rob") and region II (causally
//! disconnected, "Anti-Rob"). Every closed form here has an independent
//! numerical route:
//!
//! - [`unruh::closed_form_ai`] / [`unruh::closed_form_aii`] against
//!   [`unruh::build_tripartite`] followed by [`qmat::partial_trace`] and
//!   [`states::bloch_decompose`];
//! - [`correlations::min_closed`] against the measurement search in
//!   [`correlations::min_variational`];
//! - [`dynamics::t_sc_ai`] / [`dynamics::t_sc_aii`] against the bisection in
//!   [`dynamics::t_sc_oracle`];
//! - [`qmat::eig_sym3`] (trigonometric) against [`qmat::jacobi_eigenvalues`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod correlations;
pub mod dynamics;
mod error;
pub mod qmat;
pub mod states;
pub mod unruh;

pub use error::{Error, Result};
