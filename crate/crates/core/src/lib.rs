//! Exact workbench for the finite-dimensional representation theory of
//! quantum su(2) at a root of unity.
//!
//! Fix an integer m >= 3 and let q be a primitive m-th root of unity. The
//! algebra is generated by K = q^(H/2), its inverse, and the ladder
//! operators E = J^+ and F = J^- subject to
//!
//! ```text
//! K K^-1 = K^-1 K = 1,
//! K E K^-1 = q E,      K F K^-1 = q^-1 F,
//! [E, F]  = (K^2 - K^-2) / (q - q^-1).
//! ```
//!
//! Everything here is computed exactly over the cyclotomic field
//! Q(zeta_L) with L = lcm(4, 2m), so q, q^(1/2) and i all live in one
//! field and every decision (relation checks, irreducibility, isomorphism)
//! is zero-tolerance. The crate provides:
//!
//! - [`scalar`]: the exact field, quantum integers (n)_q, an expression
//!   grammar for entering and serializing scalars;
//! - [`repcore`]: the representation type, the defining-relation verifier,
//!   weight decomposition and central-element evaluation;
//! - [`families`]: constructors for every irreducible family in a
//!   square-root-free triangular normal form, the Sklyanin generator
//!   transform, and floating-point symmetric forms;
//! - [`analysis`]: decision procedures (Burnside closure, invariant
//!   subspace search, intertwiner spaces, the isomorphism criterion for
//!   cyclic modules, complement tests, the classification scan);
//! - [`cli`]: the command line, with exact JSON serialization.
//!
//! Start with the runnable examples (`cargo run --example classification`)
//! or the `qsu2` binary (`cargo run --bin qsu2 -- classify --m 5`).
//!
//! ```
//! use qsu2::{analysis, families, QContext};
//!
//! // q a primitive 5th root of unity; the session field is Q(zeta_20).
//! let ctx = QContext::new(5)?;
//!
//! // A 5-dimensional cyclic module with wrap-around boundaries: it has no
//! // highest-weight vector, yet is irreducible.
//! let rep = families::cyclic_module(&ctx, ctx.one(), ctx.one(), ctx.integer(2))?;
//! assert!(rep.verify_relations().all_pass());
//! assert!(analysis::is_irreducible(&rep)?.is_irreducible());
//!
//! // Its central elements act by exact scalars.
//! assert!(rep.central_scalars().all_scalar());
//! # Ok::<(), qsu2::Error>(())
//! ```

pub mod analysis;
pub mod cli;
pub mod error;
pub mod families;
mod matrix;
pub mod repcore;
pub mod scalar;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{Cyclotomic, QContext, Rational};
