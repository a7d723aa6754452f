//! Exact-arithmetic computer algebra for the Hopf algebra of rooted trees,
//! the induced linear maps on words in two letters, harmonic-type products,
//! and relations among multiple zeta values.
//!
//! The crate is organised bottom-up:
//!
//! - [`rational`]: arbitrary-precision rational scalars.
//! - [`forest`]: rooted trees and forests with a canonical bracket encoding.
//! - [`hopf`]: coproduct, counit and antipode on forests.
//! - [`word`]: words and polynomials in the letters `x`, `y`, plus the
//!   letter-substitution maps used throughout.
//! - [`harmonic`]: the three harmonic-type products and the tensor-space
//!   machinery (`u`, `p`, `q`, contraction, membership tests).
//! - [`rtm`]: the linear maps on words attached to forests, and the
//!   associated `F`/`G` polynomials.
//! - [`linalg`]: exact Gaussian elimination used for rank and span tests.
//! - [`mzv`]: multiple zeta value indices, relation generation, and
//!   high-precision numeric evaluation.
//! - [`verify`]: mechanical re-verification of every identity the crate
//!   relies on, over bounded exhaustive grids.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod forest;
pub mod harmonic;
pub mod hopf;
pub mod linalg;
pub mod mzv;
pub mod rational;
pub mod rtm;
pub mod verify;
pub mod word;

pub use forest::{enumerate_forests, Forest, Tree};
pub use hopf::{antipode, coproduct, ForestSum, ForestTensorSum};
pub use rational::Q;
pub use rtm::{f_poly, g_poly, rtm_apply};
pub use verify::{verify_all, verify_identity, Bounds, IdentityName, VerificationReport};
pub use word::{Word, WordSum};
