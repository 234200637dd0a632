//! Zero-divisor graphs of posets and of the product rings `GF(q)^n`.

use crate::field::Field;
use crate::graph::Graph;
use crate::order::{OrderError, Poset};
use crate::vspace::{VectorSpace, VspaceError};

pub use crate::graph::{complete, join, join_recorded, Relabel};

/// `G(P)` plus a flag for the degenerate case `Z(P) = {0}`.
#[derive(Debug, Clone)]
pub struct ZeroDivisorGraph {
    pub graph: Graph,
    /// Set when `P` has no nonzero zero-divisors; `graph` is then empty.
    pub trivial: bool,
}

/// `G(P)`: vertices `Z(P) \ {0}`, `a - b` iff `{a, b}^ℓ = {0}`.
pub fn zdg_poset(poset: &Poset) -> Result<ZeroDivisorGraph, OrderError> {
    let vertices = poset.zdg_vertex_set()?;
    let mut graph = Graph::new(vertices.iter().map(|&v| poset.label(v).to_owned())).expect("poset labels are unique");
    for (i, &a) in vertices.iter().enumerate() {
        for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
            if poset.meets_in_zero(a, b) {
                graph.add_edge(i, j);
            }
        }
    }
    let trivial = vertices.is_empty();
    Ok(ZeroDivisorGraph { graph, trivial })
}

/// `G^c(P)`.
pub fn zdg_poset_complement(poset: &Poset) -> Result<Graph, OrderError> {
    Ok(zdg_poset(poset)?.graph.complement())
}

/// `Γ(GF(q)^n)`: nonzero zero-divisors of the product ring, adjacent when
/// their coordinatewise product is zero. Labels match [`crate::vspace::Vector::label`].
pub fn ring_zdg(q: usize, n: usize) -> Result<Graph, VspaceError> {
    let space = VectorSpace::new(q, n)?;
    let field: &Field = space.field();
    let vertices: Vec<_> = space.nonzero_vectors().filter(|v| v.coeffs().contains(&0)).collect();
    let mut g = Graph::new(vertices.iter().map(|v| v.label())).expect("distinct tuples");
    for (i, x) in vertices.iter().enumerate() {
        for (j, y) in vertices.iter().enumerate().skip(i + 1) {
            let annihilate = x.coeffs().iter().zip(y.coeffs()).all(|(&a, &b)| field.mul(a, b) == 0);
            if annihilate {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}
