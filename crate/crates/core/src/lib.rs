//! Component graphs of finite vector spaces, the lattice of their
//! skeleton classes, zero-divisor graphs of posets, and the graph
//! properties that connect them.

pub mod field;
pub mod graph;
pub mod index_set;
pub mod io;
pub mod order;
pub mod props;
pub mod quotient;
pub mod verify;
pub mod vspace;
pub mod zdg;

pub use field::{Elem, Field, FieldError};
pub use graph::{Graph, GraphError};
pub use index_set::IndexSet;
