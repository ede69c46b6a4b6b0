//! Interchange near rings on finite groups.
//!
//! A product `x . y = e(x) + h(y)` built from an image-commuting pair of
//! endomorphisms `(e, h)` satisfies the interchange law
//! `(w + x) . (y + z) = (w . y) + (x . z)`, and every such product arises
//! this way. The crate enumerates those pairs, classifies the resulting
//! rings up to isomorphism, and checks the counting results for abelian groups.

pub mod arith;
pub mod canonical;
pub mod cli;
pub mod classify;
pub mod endo;
pub mod error;
pub mod group;
pub mod interchange;
pub mod structures;
pub mod verify;

pub use error::{Error, Result};
