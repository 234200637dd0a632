//! The coordinate space `F^n` over a small finite field with its standard
//! basis, the skeleton partition `V = ⋃ V_I`, and the two component graphs.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::field::{Elem, Field, FieldError};
use crate::graph::Graph;
use crate::index_set::IndexSet;

/// Upper bound on `q^n` accepted by [`VectorSpace::new`].
pub const MAX_VECTORS: usize = 1 << 13;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VspaceError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("q^n = {q}^{n} exceeds the supported {MAX_VECTORS} vectors")]
    TooLarge { q: usize, n: usize },
}

const DIGITS: &[u8; 27] = b"0123456789abcdefghijklmnopq";

/// Coefficient tuple with respect to the standard basis `v_1, ..., v_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    coeffs: Vec<Elem>,
}

impl Vector {
    pub fn new(coeffs: Vec<Elem>) -> Self {
        Vector { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Vector { coeffs: vec![0; n] }
    }

    /// The basis vector `v_i` (1-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut coeffs = vec![0; n];
        coeffs[i - 1] = 1;
        Vector { coeffs }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// One character per coordinate (`0-9`, then `a-q`), so string order on
    /// labels is lexicographic order on coefficient tuples.
    pub fn label(&self) -> String {
        self.coeffs.iter().map(|&c| DIGITS[c as usize] as char).collect()
    }

    pub fn from_label(label: &str) -> Option<Vector> {
        label
            .bytes()
            .map(|b| DIGITS.iter().position(|&d| d == b).map(|p| p as Elem))
            .collect::<Option<Vec<_>>>()
            .map(Vector::new)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// `S_B(a)`: the basis indices carrying a nonzero coefficient.
pub fn skeleton(a: &Vector) -> IndexSet {
    IndexSet::from_members(a.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i + 1))
}

#[derive(Debug, Clone)]
pub struct VectorSpace {
    field: Field,
    dim: usize,
}

impl VectorSpace {
    pub fn new(q: usize, n: usize) -> Result<Self, VspaceError> {
        let field = Field::new(q)?;
        if n == 0 {
            return Err(VspaceError::ZeroDimension);
        }
        if q.checked_pow(n as u32).is_none_or(|s| s > MAX_VECTORS) {
            return Err(VspaceError::TooLarge { q, n });
        }
        Ok(VectorSpace { field, dim: n })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cardinality(&self) -> usize {
        self.field.order().pow(self.dim as u32)
    }

    /// `t = |V_{1...n}| = (q - 1)^n`.
    pub fn unit_count(&self) -> usize {
        (self.field.order() - 1).pow(self.dim as u32)
    }

    /// Every vector, lexicographically by coefficient tuple.
    pub fn vectors(&self) -> impl Iterator<Item = Vector> + '_ {
        let q = self.field.order();
        (0..self.cardinality()).map(move |mut x| {
            let mut coeffs = vec![0; self.dim];
            for c in coeffs.iter_mut().rev() {
                *c = (x % q) as Elem;
                x /= q;
            }
            Vector { coeffs }
        })
    }

    pub fn nonzero_vectors(&self) -> impl Iterator<Item = Vector> + '_ {
        self.vectors().skip(1)
    }

    /// `V_I` for every `I ⊆ {1..n}`, members in lexicographic order.
    pub fn partition_classes(&self) -> BTreeMap<IndexSet, Vec<Vector>> {
        let mut classes: BTreeMap<IndexSet, Vec<Vector>> =
            IndexSet::all_subsets(self.dim).map(|i| (i, Vec::new())).collect();
        for v in self.vectors() {
            classes.get_mut(&skeleton(&v)).expect("all subsets present").push(v);
        }
        classes
    }

    fn component_graph(&self, adjacent: impl Fn(IndexSet, IndexSet) -> bool) -> Graph {
        let vs: Vec<Vector> = self.nonzero_vectors().collect();
        let sk: Vec<IndexSet> = vs.iter().map(skeleton).collect();
        let mut g = Graph::new(vs.iter().map(Vector::label)).expect("vector labels are distinct");
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                if adjacent(sk[a], sk[b]) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Nonzero component graph: skeletons intersect.
    pub fn intersection_graph(&self) -> Graph {
        self.component_graph(|a, b| !a.is_disjoint(b))
    }

    /// Nonzero component union graph: skeletons cover the basis.
    pub fn union_graph(&self) -> Graph {
        let full = IndexSet::full(self.dim);
        self.component_graph(move |a, b| a.union(b) == full)
    }
}

pub fn partition_classes(q: usize, n: usize) -> Result<BTreeMap<IndexSet, Vec<Vector>>, VspaceError> {
    Ok(VectorSpace::new(q, n)?.partition_classes())
}

/// `IG(V)` for `V = GF(q)^n`.
pub fn build_ig(q: usize, n: usize) -> Result<Graph, VspaceError> {
    Ok(VectorSpace::new(q, n)?.intersection_graph())
}

/// `UG(V)` for `V = GF(q)^n`.
pub fn build_ug(q: usize, n: usize) -> Result<Graph, VspaceError> {
    Ok(VectorSpace::new(q, n)?.union_graph())
}
