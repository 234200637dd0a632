//! Perfection through odd holes and odd antiholes.
//!
//! Before searching, true twins (`N[u] = N[v]`) and false twins
//! (`N(u) = N(v)`) are pruned down to one representative each, repeatedly.
//! An induced cycle of length at least 5 never contains two twins, and a twin
//! can always stand in for its partner, so the pruned kernel has an odd
//! hole (antihole) iff the input does. The vertex cap applies to the kernel.

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

use super::PropsError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerfectCertificate {
    /// Induced odd cycle of length >= 5, in cyclic order.
    OddHole(Vec<usize>),
    /// Vertices whose induced subgraph is the complement of an odd cycle of
    /// length >= 5; consecutive entries are non-adjacent.
    OddAntihole(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perfection {
    pub perfect: bool,
    pub certificate: Option<PerfectCertificate>,
    /// Order of the twin-free kernel that was searched.
    pub kernel_order: usize,
}

pub fn is_perfect(g: &Graph, cap: usize) -> Result<Perfection, PropsError> {
    let kernel = twin_kernel(g);
    if kernel.len() > cap {
        return Err(PropsError::TooLarge { order: kernel.len(), cap });
    }
    let k = g.induced(&kernel);
    let lift = |c: Vec<usize>| c.into_iter().map(|i| kernel[i]).collect::<Vec<_>>();
    let certificate = if let Some(hole) = find_odd_hole(&k) {
        Some(PerfectCertificate::OddHole(lift(hole)))
    } else {
        find_odd_hole(&k.complement()).map(|c| PerfectCertificate::OddAntihole(lift(c)))
    };
    Ok(Perfection { perfect: certificate.is_none(), certificate, kernel_order: kernel.len() })
}

/// Vertices surviving repeated removal of true and false twins, ascending.
/// The lowest-indexed member of each twin class is kept.
pub fn twin_kernel(g: &Graph) -> Vec<usize> {
    let mut kept: Vec<usize> = (0..g.order()).collect();
    loop {
        let h = g.induced(&kept);
        let n = h.order();
        let mut drop = FixedBitSet::with_capacity(n);
        let closed = |v: usize| {
            let mut s = h.neighborhood(v).clone();
            s.insert(v);
            s
        };
        for u in 0..n {
            if drop.contains(u) {
                continue;
            }
            let (open_u, closed_u) = (h.neighborhood(u), closed(u));
            for v in u + 1..n {
                if !drop.contains(v) && (h.neighborhood(v) == open_u || closed(v) == closed_u) {
                    drop.insert(v);
                }
            }
        }
        if drop.count_ones(..) == 0 {
            return kept;
        }
        kept = kept.into_iter().enumerate().filter(|(i, _)| !drop.contains(*i)).map(|(_, v)| v).collect();
    }
}

/// An induced odd cycle of length >= 5, if one exists.
///
/// Enumerates chordless paths whose vertices all exceed the start vertex, so
/// every hole is found from its smallest vertex.
pub fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        let mut allowed = FixedBitSet::with_capacity(n);
        allowed.insert_range(s + 1..);
        path.clear();
        path.push(s);
        if extend(g, &mut path, &allowed, &FixedBitSet::with_capacity(n)) {
            return Some(path);
        }
    }
    None
}

/// `blocked` holds the closed neighbourhoods of the interior path vertices
/// (all but the start and the current end).
fn extend(g: &Graph, path: &mut Vec<usize>, allowed: &FixedBitSet, blocked: &FixedBitSet) -> bool {
    let start = path[0];
    let last = *path.last().unwrap();
    let mut next_blocked = blocked.clone();
    if path.len() >= 2 {
        next_blocked.union_with(g.neighborhood(last));
        next_blocked.insert(last);
    }
    let mut candidates = g.neighborhood(last).clone();
    candidates.intersect_with(allowed);
    candidates.difference_with(blocked);
    for v in candidates.ones() {
        if path.len() >= 2 && g.has_edge(v, start) {
            let len = path.len() + 1;
            if len >= 5 && len % 2 == 1 {
                path.push(v);
                return true;
            }
            continue;
        }
        path.push(v);
        if extend(g, path, allowed, &next_blocked) {
            return true;
        }
        path.pop();
    }
    false
}
