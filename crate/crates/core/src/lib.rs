//! Simplicial convolutional filters for edge flows.
//!
//! A simplicial convolutional filter is a pair of matrix polynomials in the lower and upper Hodge
//! Laplacians of a simplicial complex,
//!
//! ```text
//! H = h0 I + sum_{l=1}^{L1} alpha_l L_{1,l}^l + sum_{l=1}^{L2} beta_l L_{1,u}^l,
//! ```
//!
//! applied to an edge flow by repeated one-hop shifting. The crate covers
//!
//! - [`complex`]: order-2 complexes, incidence matrices, neighbourhoods, relabelling;
//! - [`spectral`]: Hodge Laplacians, the harmonic/gradient/curl eigenbasis, Fourier transform and
//!   Hodge decomposition;
//! - [`filter`]: shift-and-sum application, a round-based distributed simulation and frequency
//!   responses;
//! - [`design`]: least-squares (joint, decoupled, tied), grid-based and shifted-Chebyshev design;
//! - [`apps`]: component extraction, denoising, arbitrage-free exchange rates and edge PageRank.
//!
//! The crate is `no_std` with `alloc`; file formats and the command-line tool live in
//! `scfilter-cli`.

#![no_std]

extern crate alloc;
#[cfg(any(feature = "std", test))]
extern crate std;

pub mod apps;
pub mod complex;
pub mod design;
pub mod error;
pub mod filter;
pub mod fixtures;
pub mod linalg;
pub mod spectral;

pub use complex::{OrientationPlan, PermutationPlan, SignedIncidence, SimplicialComplex};
pub use design::{ChebyshevFilter, ResponseFn, ResponseSpec};
pub use error::{Error, Result};
pub use filter::{FilterCoefficients, ShiftOperators};
pub use spectral::HodgeSpectrum;
