//! Homological shift ideals of cover ideals of clique-whiskered graphs.

pub mod config;
pub mod corpus;
pub mod covers;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod linear_quotients;
pub mod monomial;
pub mod pipelines;
pub mod resolution;

pub use config::{Caps, Config, Exec};
pub use error::{Error, Result};
pub use graph::{CliquePartition, CliqueWhiskeredGraph, Graph, Role};
pub use monomial::{Monomial, MonomialIdeal, Ring, VarOrder};
