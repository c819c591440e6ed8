//! Exact arithmetic for once-punctured-torus knots in lens spaces.
//!
//! Lens spaces and slopes ([`lensspace`]), surgery homology on framed links
//! ([`linkcalc`]), the mapping class group of the once-punctured torus
//! ([`ptbundle`]), grid number one knots ([`gridknots`]), the family atlas
//! with its verification battery ([`families`]) and the arc-system graphs on
//! the punctured torus ([`fatgraph`]).

pub mod error;
pub mod families;
pub mod fatgraph;
pub mod gridknots;
pub mod lensspace;
pub mod linkcalc;
pub mod ptbundle;

pub use error::{Error, Result};
pub use lensspace::{LensSpace, Slope};
