pub mod analysis;
pub mod arith;
pub mod array;
pub mod bipartite;
pub mod certificate;
pub mod classify;
pub mod error;
pub mod graphs;
pub mod pipeline;
pub mod spectral;

pub use array::{IntersectionArray, ParityClass};
pub use certificate::{Evidence, RefutationCertificate, Stage};
pub use error::{Error, Result};
