pub mod algebra;
pub mod check;
pub mod circulation;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod flow_lattice;
pub mod graph;
pub mod io;
pub mod kirchhoff;
pub mod report;
pub mod tutte;

pub use error::{Error, Result};
