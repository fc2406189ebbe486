//! Analysis and simulation of one-step majority-logic (OS-MAJ) and parallel
//! bit-flipping decoders for regular LDPC codes whose check-side XOR logic is
//! itself unreliable.
//!
//! A `(γ, ρ)`-regular LDPC code is decoded by giving every variable node `γ`
//! parity estimates, each computed by a `(ρ-1)`-input XOR gate over the other
//! bits of one adjacent check, and taking a majority vote. This crate models
//! what happens when those XOR gates fail — either uniformly at random (the
//! classic von Neumann wiring-error model) or only when a gate's output
//! switches between consecutive evaluations (a data-dependent model, `gos`,
//! that captures timing faults in sequential logic).
//!
//! The crate is organized by question:
//!
//! - [`codes`]: construction of projective- and affine-geometry LDPC codes
//!   over `GF(2^s)`, alist I/O, girth computation, exhaustive vertex-expansion
//!   checking, and a `GF(2)` encoder.
//! - [`fault`]: gate failure models and sampling of noisy gate outputs.
//! - [`analytic`]: closed-form bit-error-rate expressions for a single
//!   decoding round — exact for independent gate failures, exact-by-window
//!   enumeration or two-sided bounds for data-dependent failures.
//! - [`sim`]: Monte Carlo decoding experiments with deterministic,
//!   thread-count-independent random streams, plus an exhaustive adversarial
//!   verifier for guaranteed correction claims.
//! - [`bounds`]: deterministic guaranteed-error-correction bounds from graph
//!   expansion and from girth (via the Moore bound), including the optimal
//!   expansion operating point for a given check-degree.
//!
//! Bit words are plain `Vec<u8>`/`&[u8]` with entries in `{0, 1}`; the crate
//! validates this at public entry points.

pub mod analytic;
pub mod bounds;
pub mod codes;
pub mod fault;
pub mod sim;
pub mod util;

mod error;

pub use error::{Error, Result};
