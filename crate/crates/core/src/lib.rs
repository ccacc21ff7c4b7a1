//! Clifford-steerable and conditional Clifford-steerable convolutions over
//! pseudo-Euclidean grids, together with numerical audit tooling.
//!
//! The crate is organized around a small set of building blocks:
//!
//! - [`algebra`]: the Clifford algebra Cl(p,q) itself. Blades, the Cayley
//!   table of the geometric product, grade projection, the grade-interaction
//!   tensor, and the induced action of the pseudo-orthogonal group O(p,q)
//!   on multivectors.
//! - [`field`]: multivector feature fields on regular grids, scalar/vector
//!   embeddings, circular masking, masked mean pooling and exact
//!   grid-symmetry actions.
//! - [`kernel`]: O(p,q)-equivariant implicit kernel networks (unconditional
//!   and conditional) and the kernel head that turns network outputs into
//!   steerable kernel matrices.
//! - [`conv`]: discretized steerable convolution and its conditional,
//!   template-matching variant.
//! - [`audit`]: executable verification of the steerability constraints,
//!   pooling equivariance, and ring-spectrum frequency analysis.
//! - [`fit`]: gradient-based fitting of implicit kernels to analytical
//!   targets, plus a small synthetic PDE forecasting demo.
//!
//! All numerics are `f64`. Constructions are deterministic given a seed.

pub mod algebra;
pub mod audit;
pub mod conv;
pub mod error;
pub mod field;
pub mod fit;
pub mod kernel;

pub use algebra::{Algebra, CayleyTable, GroupElement, LambdaTensor, Multivector, MultivectorStack, Signature};
pub use error::{Error, Result};
