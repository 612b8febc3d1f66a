//! Pseudo-boolean optimization through generalized roof duality.
//!
//! The crate builds roof-duality relaxations of quadratic pseudo-boolean
//! functions and minimizes them by max-flow, checks and manipulates
//! bisubmodular functions on `{0, 1/2, 1}^n` together with their Lovász
//! extensions, computes tightest bisubmodular and submodular relaxations with an
//! exact rational simplex, and certifies persistency. All arithmetic is exact.
//!
//! Module map:
//!
//! - [`pbf`], [`poly`], [`enumerate`]: functions on `{0,1}^n`, multilinear and
//!   posiform forms, exhaustive minimization.
//! - [`bisub`]: half-integral and doubled labelings, the four bisubmodularity
//!   checks, autarky and persistency.
//! - [`lovasz`]: signed orderings, the Lovász extension and total integrality.
//! - [`roof`]: roof duality, symmetric submodular relaxations, max-flow.
//! - [`lp`]: exact simplex and the relaxation linear programs.
//! - [`card`]: cardinality-dependent functions and the bundled fixtures.
//! - [`io`], [`cli`]: text formats and the command-line surface.

pub mod bisub;
pub mod card;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod lovasz;
pub mod lp;
pub mod pbf;
pub mod poly;
pub mod rational;
pub mod roof;

pub use error::{Error, Result};
pub use rational::Rational;
