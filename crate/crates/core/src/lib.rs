//! Exact chromatic symmetric functions for sun, dumbbell, tadpole and
//! lollipop graphs, with basis conversion, positivity checks and
//! instance-level verification of their recursions and closed forms.

pub mod cli;
pub mod csf;
pub mod error;
pub mod graphs;
pub mod guards;
pub mod identities;
pub mod partitions;
pub mod positivity;
pub mod symfunc;

pub use error::{Error, Result};
pub use graphs::{Graph, GraphSpec};
pub use guards::Guards;
pub use partitions::Partition;
pub use symfunc::{Basis, Rational, SymFunc};
