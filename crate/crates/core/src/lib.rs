//! Exact tools for almost-bipartite distance-regular graphs: family
//! constructions, spectra of intersection arrays, Q-polynomial detection,
//! and the (q, s) parameter analysis of the diameter-3 case.

pub mod classify;
pub mod error;
pub mod exactnum;
pub mod graphs;
pub mod spectral;

pub use error::{Error, ParseError, Result};
