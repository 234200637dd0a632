//! Exact clique number and chromatic number by branch and bound.

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

use super::PropsError;

fn check_cap(g: &Graph, cap: usize) -> Result<(), PropsError> {
    if g.order() > cap {
        Err(PropsError::TooLarge { order: g.order(), cap })
    } else {
        Ok(())
    }
}

/// A maximum clique (vertex indices, ascending).
pub fn max_clique(g: &Graph, cap: usize) -> Result<Vec<usize>, PropsError> {
    check_cap(g, cap)?;
    let mut cand = FixedBitSet::with_capacity(g.order());
    cand.insert_range(..);
    let mut best = Vec::new();
    let mut current = Vec::new();
    if g.order() > 0 {
        expand(g, &mut current, cand, &mut best);
    }
    best.sort_unstable();
    Ok(best)
}

pub fn clique_number(g: &Graph, cap: usize) -> Result<usize, PropsError> {
    Ok(max_clique(g, cap)?.len())
}

/// Greedy colouring of `cand`: vertices grouped by colour class, paired with
/// the class number (1-based), which bounds the clique size among the prefix.
fn color_sort(g: &Graph, cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = cand.clone();
    let mut order = Vec::with_capacity(cand.count_ones(..));
    let mut bound = Vec::with_capacity(order.capacity());
    let mut color = 0;
    while !uncolored.is_clear() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.minimum() {
            avail.set(v, false);
            avail.difference_with(g.neighborhood(v));
            uncolored.set(v, false);
            order.push(v);
            bound.push(color);
        }
    }
    (order, bound)
}

fn expand(g: &Graph, current: &mut Vec<usize>, mut cand: FixedBitSet, best: &mut Vec<usize>) {
    let (order, bound) = color_sort(g, &cand);
    for idx in (0..order.len()).rev() {
        if current.len() + bound[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(g.neighborhood(v));
        if next.is_clear() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, current, next, best);
        }
        current.pop();
        cand.set(v, false);
    }
}

/// A proper colouring with the minimum number of colours; entry `v` is the
/// colour (0-based) of vertex `v`.
pub fn optimal_coloring(g: &Graph, cap: usize) -> Result<Vec<usize>, PropsError> {
    check_cap(g, cap)?;
    let n = g.order();
    if n == 0 {
        return Ok(Vec::new());
    }
    let lower = clique_number(g, cap)?;
    let mut search = Dsatur::new(g);
    let mut best = search.greedy();
    let mut best_count = best.iter().max().unwrap() + 1;
    if best_count > lower {
        search.branch(0, &mut best, &mut best_count, lower);
    }
    Ok(best)
}

pub fn chromatic_number(g: &Graph, cap: usize) -> Result<usize, PropsError> {
    Ok(optimal_coloring(g, cap)?.iter().max().map_or(0, |c| c + 1))
}

/// `χ(G) = ω(G)` for the graph itself.
pub fn is_weakly_perfect(g: &Graph, cap: usize) -> Result<bool, PropsError> {
    Ok(chromatic_number(g, cap)? == clique_number(g, cap)?)
}

/// DSATUR state: picks the uncoloured vertex of highest saturation, ties to
/// the lowest index.
struct Dsatur<'a> {
    g: &'a Graph,
    color: Vec<Option<usize>>,
    /// `seen[v][c]`: neighbours of `v` currently coloured `c`.
    seen: Vec<Vec<u32>>,
    saturation: Vec<usize>,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Dsatur { g, color: vec![None; n], seen: vec![vec![0; n + 1]; n], saturation: vec![0; n] }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.order())
            .filter(|&v| self.color[v].is_none())
            .max_by(|&a, &b| self.saturation[a].cmp(&self.saturation[b]).then(b.cmp(&a)))
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        for u in self.g.neighbors(v) {
            if self.seen[u][c] == 0 {
                self.saturation[u] += 1;
            }
            self.seen[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v].take().unwrap();
        for u in self.g.neighbors(v) {
            self.seen[u][c] -= 1;
            if self.seen[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn greedy(&mut self) -> Vec<usize> {
        let mut assigned = Vec::new();
        while let Some(v) = self.pick() {
            let c = (0..).find(|&c| self.seen[v][c] == 0).unwrap();
            self.assign(v, c);
            assigned.push(v);
        }
        let out = self.color.iter().map(|c| c.unwrap()).collect();
        for v in assigned.into_iter().rev() {
            self.unassign(v);
        }
        out
    }

    fn branch(&mut self, used: usize, best: &mut Vec<usize>, best_count: &mut usize, lower: usize) {
        if used >= *best_count {
            return;
        }
        let Some(v) = self.pick() else {
            *best = self.color.iter().map(|c| c.unwrap()).collect();
            *best_count = used;
            return;
        };
        let limit = (used + 1).min(*best_count - 1);
        for c in 0..limit {
            if self.seen[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            self.branch(used.max(c + 1), best, best_count, lower);
            self.unassign(v);
            if *best_count == lower {
                return;
            }
        }
    }
}
