//! Identification of low-dimensional linear port-Hamiltonian (pH) systems from
//! trajectory data.
//!
//! The library discovers LTI pH systems `ż = (J − R)Q z + B u`, `y = BᵀQ z`
//! whose matrices are skew-symmetric (`J`), symmetric positive semidefinite
//! (`R`) and symmetric positive definite (`Q`) *by construction*: the matrices
//! are assembled from (strict) lower-triangular weight factors, so every
//! gradient step stays inside the pH class. For data that is high-dimensional
//! or visibly nonlinear, the identification is wrapped in an autoencoder
//! (optionally with a PCA outer layer) which is trained jointly with the
//! latent dynamics via a reconstruction, a latent-dynamics and a consistency
//! loss. Rollouts use the implicit midpoint rule so the discrete energy
//! balance mirrors the continuous dissipation inequality.
//!
//! Module map:
//! - [`diffkit`]: minimal reverse-mode engine, dense-layer primitives, ADAM.
//! - [`ph`]: pH matrix assembly, normalization, property verification, and
//!   the transfer of the latent pH structure to the physical space.
//! - [`phin`]: identification networks (direct weights or hypernetwork) and
//!   the training losses.
//! - [`autoencoder`]: identity / PCA / nonlinear encoder-decoder stacks.
//! - [`integrate`]: implicit midpoint rule and classical RK4.
//! - [`datasets`]: reference systems, trajectory generation, preprocessing.
//! - [`metrics`]: relative state/latent errors and projection diagnostics.
//! - [`experiment`]: config-driven orchestration (train, evaluate, export).

pub mod autoencoder;
pub mod datasets;
pub mod diffkit;
pub mod error;
pub mod experiment;
pub mod integrate;
pub mod metrics;
pub mod ph;
pub mod phin;

pub use error::{Error, Result};
