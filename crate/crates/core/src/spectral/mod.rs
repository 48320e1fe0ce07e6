//! Spectra of intersection arrays and Q-polynomial orderings.

mod array;
mod data;
mod qpoly;

pub use array::IntersectionArray;
pub use data::{spectrum, SpectralData};
pub use qpoly::{
    is_almost_bipartite, permutations, q_polynomial_orderings, OrderingCheck, QPolyOrdering,
};
