//! Finite posets and lattices.

mod compress;
mod construct;
mod lattice;
mod poset;

use thiserror::Error;

pub use compress::{annihilator_class_order, atom_partition, compress, AtomClass, CompressedPoset};
pub use construct::{
    all_lattices, boolean_lattice, build_boolean_vlattice, build_l, build_l_by_chain_replacement, chain, TOP_LABEL,
};
pub use lattice::Lattice;
pub use poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("relation is not reflexive at {0:?}")]
    NotReflexive(String),
    #[error("relation is not antisymmetric: {0:?} and {1:?}")]
    NotAntisymmetric(String, String),
    #[error("relation is not transitive: {0:?} <= {1:?} <= {2:?}")]
    NotTransitive(String, String, String),
    #[error("element index {index} out of range for poset of size {len}")]
    OutOfRange { index: usize, len: usize },
    #[error("cone of an empty set")]
    EmptyInput,
    #[error("poset has no least element")]
    NoZero,
    #[error("poset has no greatest element")]
    NoOne,
    #[error("{0:?} and {1:?} have no meet")]
    NoMeet(String, String),
    #[error("{0:?} and {1:?} have no join")]
    NoJoin(String, String),
    #[error("empty poset is not a lattice")]
    EmptyPoset,
    #[error("no element with index {0}")]
    InvalidElement(usize),
    #[error("replacement chain must have at least one element")]
    EmptyChain,
    #[error("{0} atoms exceed the supported 64")]
    TooManyAtoms(usize),
}
