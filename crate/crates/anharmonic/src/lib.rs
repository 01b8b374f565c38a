//! Quantum dynamics of the harmonic oscillator with an inverse-square core,
//! `H(t) = p^2/2 + omega^2(t) q^2/2 + c/q^2`, in units with hbar = m = 1.
//!
//! The library builds the machinery around the su(1,1) spectrum-generating
//! algebra of this Hamiltonian:
//!
//! - [`algebra`]: finite matrix representations, both the discrete series
//!   `|n, k0>` and a radial-grid realization, with structure-relation and
//!   Casimir diagnostics.
//! - [`invariant`]: the quadratic dynamical invariant `I(t) = g_- L_- + g_0
//!   L_0 + g_+ L_+` computed by four independent routes (coefficient ODE,
//!   auxiliary-pair substitution, classical propagation, and a closed Bessel
//!   form for power-law frequencies).
//! - [`evolution`]: the evolution operator as an ordered product of
//!   exponentials in either basis, squeeze parameters extracted from the
//!   invariant, and a unitarity-preserving direct integrator used as oracle.
//! - [`states`]: number-type, lowering-eigenstate and squeezed coherent
//!   states, Laguerre eigenfunctions on the half-line, and the exact-state
//!   phase factors.
//! - [`oracle`]: brute-force references (classical trajectories and
//!   Crank-Nicolson grid evolution) against which the algebraic shortcuts are
//!   validated.
//!
//! The `parallel` feature (on by default) routes the dense linear algebra and
//! the embarrassingly parallel sweeps through rayon; disabling it yields a
//! fully sequential build with identical results.

pub mod algebra;
pub mod error;
pub mod evolution;
pub mod invariant;
pub mod linalg;
pub mod ode;
pub mod oracle;
pub mod special;
pub mod states;
pub mod tridiag;

pub use error::{Error, Result};
pub use linalg::{CMat, C64};
