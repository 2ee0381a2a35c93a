//! Construction and certification of entanglement witnesses built from
//! positive maps on matrix algebras.
//!
//! The library constructs the reduction map, the Breuer–Hall maps, and the
//! 2×2-block map Ψ⁰₂ₖ on B(C^{2k}), derives their Choi-matrix witnesses,
//! builds the state families they detect (a PPT entangled state ρ₂ₖ, a
//! Schmidt-number-2 state D₂ₖ, isotropic mixtures, a symmetric-projector
//! λ-family), and certifies the claimed properties: block positivity,
//! indecomposability, atomicity, optimality, negative-spectrum profiles,
//! circulant structure, and structural-physical-approximation thresholds.
//!
//! Two arithmetic regimes coexist deliberately: all constructions and
//! linear identities are exact over the Gaussian rationals, so regression
//! tests assert equality rather than closeness; only eigenvalue extraction
//! runs in floating point, through a deterministic cyclic Jacobi kernel.

pub mod eig;
pub mod error;
pub mod json;
pub mod maps;
pub mod matrix;
pub mod psd;
pub mod rank;
pub mod sample;
pub mod scalar;
pub mod spa;
pub mod states;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{BipartiteDims, Matrix, Subsystem, Vector};
pub use scalar::{rational, Rational, Scalar};
