//! Quandle-theoretic invariants of knots and surface-knots.
//!
//! The crate is organised bottom-up:
//!
//! * [`quandle`]: finite quandles, presented knot quandles and colorings.
//! * [`chain`], [`snf`], [`homology`], [`cohomology`]: the quandle chain
//!   complex, integer homology through Smith normal form, cohomology with
//!   `Z_q` coefficients and the Kronecker pairing.
//! * [`diagram`]: combinatorial surface-knot diagrams and their fundamental
//!   cycles.
//! * [`state_sum`]: the cocycle invariant as a sum over colorings.
//! * [`closed_forms`], [`gauss_sum`]: exact computations in
//!   `Z[t, t^-1]/(t^p - 1)` and the multiplicative Gauss-sum invariant.
//! * [`cli`]: the `quandle-lab` command-line front end.

pub mod chain;
pub mod cli;
pub mod closed_forms;
pub mod cohomology;
pub mod diagram;
mod error;
pub mod gauss_sum;
pub mod homology;
pub mod modp;
pub mod quandle;
pub mod snf;
pub mod state_sum;

pub use error::{Error, Result};

pub use chain::{IntChain, IntMatrix, Theory};
pub use cohomology::Cochain;
pub use diagram::{DiagramDatum, FundamentalCycle, TriplePoint};
pub use homology::{AbelianGroupInvariants, BasisLimit};
pub use quandle::{Coloring, FiniteQuandle, QuandlePresentation};
pub use state_sum::GroupRingElement;
