use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalCertificate {
    /// Vertices in elimination order: each vertex's neighbours later in the
    /// list form a clique.
    EliminationOrder(Vec<usize>),
    /// An induced cycle of length at least 4, in cyclic order.
    ChordlessCycle(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chordality {
    pub chordal: bool,
    pub certificate: ChordalCertificate,
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    if is_perfect_elimination_ordering(g, &order) {
        return Chordality { chordal: true, certificate: ChordalCertificate::EliminationOrder(order) };
    }
    let cycle = find_chordless_cycle(g).expect("graph without a perfect elimination ordering has a hole");
    Chordality { chordal: false, certificate: ChordalCertificate::ChordlessCycle(cycle) }
}

/// Visit order of maximum cardinality search; ties go to the lowest index.
/// Its reverse is a perfect elimination ordering iff the graph is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !done[v]).max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a))).unwrap();
        done[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !done[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.order();
    if order.len() != n {
        return false;
    }
    let mut later = FixedBitSet::with_capacity(n);
    later.insert_range(..);
    for &v in order {
        later.set(v, false);
        let mut nbrs = g.neighborhood(v).clone();
        nbrs.intersect_with(&later);
        for u in nbrs.ones() {
            let mut rest = nbrs.clone();
            rest.set(u, false);
            if !rest.is_subset(g.neighborhood(u)) {
                return false;
            }
        }
    }
    true
}

/// Some induced cycle of length >= 4, or `None` if the graph is chordal.
///
/// For each vertex `v` and pair of nonadjacent neighbours `x, y`, a shortest
/// `x`-`y` path avoiding the rest of `N[v]` closes a chordless cycle through `v`.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let mut blocked = g.neighborhood(v).clone();
                blocked.insert(v);
                blocked.set(x, false);
                blocked.set(y, false);
                if let Some(path) = shortest_path_avoiding(g, x, y, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path_avoiding(g: &Graph, from: usize, to: usize, blocked: &FixedBitSet) -> Option<Vec<usize>> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut w = to;
            while w != from {
                w = parent[w];
                path.push(w);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u) {
            if parent[w] == usize::MAX && !blocked.contains(w) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}
