//! Structural graph properties with checkable certificates.

mod chordal;
mod coloring;
mod distance;
mod equal;
mod iso;
mod perfect;

use thiserror::Error;

use crate::graph::Graph;

pub use chordal::{
    find_chordless_cycle, is_chordal, is_perfect_elimination_ordering, maximum_cardinality_search, ChordalCertificate,
    Chordality,
};
pub use coloring::{chromatic_number, clique_number, is_weakly_perfect, max_clique, optimal_coloring};
pub use distance::{diameter, distances_from, is_connected};
pub use equal::{graphs_equal_labeled, LabeledEquality};
pub use iso::{are_isomorphic, is_isomorphism};
pub use perfect::{find_odd_hole, is_perfect, twin_kernel, PerfectCertificate, Perfection};

pub const DEFAULT_PERFECT_CAP: usize = 64;
pub const DEFAULT_COLOR_CAP: usize = 128;
pub const DEFAULT_ISO_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropsError {
    #[error("graph of order {order} exceeds the cap of {cap}")]
    TooLarge { order: usize, cap: usize },
}

/// True if `cycle` lists distinct vertices, at least 3, whose induced subgraph
/// is exactly the cycle through them in the given order.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 || cycle.iter().any(|&v| v >= g.order()) {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}
