//! Graph isomorphism by colour refinement with individualisation and
//! backtracking.

use std::collections::BTreeMap;

use crate::graph::Graph;

use super::PropsError;

/// Finds a bijection `m` from `g` to `h` (vertex `v` of `g` maps to `m[v]`)
/// preserving adjacency both ways, or `None` when the graphs are not isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph, cap: usize) -> Result<Option<Vec<usize>>, PropsError> {
    let n = g.order();
    if n > cap || h.order() > cap {
        return Err(PropsError::TooLarge { order: n.max(h.order()), cap });
    }
    if n != h.order() || g.size() != h.size() {
        return Ok(None);
    }
    Ok(search(g, h, vec![0; n], vec![0; n]))
}

/// True if `mapping` is an isomorphism from `g` onto `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, mapping: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || mapping.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in mapping {
        if m >= n || std::mem::replace(&mut hit[m], true) {
            return false;
        }
    }
    (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(mapping[u], mapping[v])))
}

fn search(g: &Graph, h: &Graph, mut cg: Vec<usize>, mut ch: Vec<usize>) -> Option<Vec<usize>> {
    if !refine(g, h, &mut cg, &mut ch) {
        return None;
    }
    let n = g.order();
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &cg {
        *class_size.entry(c).or_default() += 1;
    }
    let target = class_size.iter().filter(|(_, &s)| s > 1).min_by_key(|(_, &s)| s).map(|(&c, _)| c);
    let Some(target) = target else {
        let mut in_h = vec![0; n];
        for (v, &c) in ch.iter().enumerate() {
            in_h[c] = v;
        }
        let mapping: Vec<usize> = cg.iter().map(|&c| in_h[c]).collect();
        return is_isomorphism(g, h, &mapping).then_some(mapping);
    };

    let fresh = cg.iter().max().unwrap() + 1;
    let u = cg.iter().position(|&c| c == target).unwrap();
    for v in (0..n).filter(|&v| ch[v] == target) {
        let mut cg2 = cg.clone();
        let mut ch2 = ch.clone();
        cg2[u] = fresh;
        ch2[v] = fresh;
        if let Some(m) = search(g, h, cg2, ch2) {
            return Some(m);
        }
    }
    None
}

/// Joint 1-dimensional Weisfeiler-Leman refinement. Colour ids are assigned
/// from the sorted union of signatures, so equal ids mean the same thing in
/// both graphs. Returns false as soon as the colour histograms diverge.
fn refine(g: &Graph, h: &Graph, cg: &mut [usize], ch: &mut [usize]) -> bool {
    let mut classes = distinct(cg);
    loop {
        let sig = |graph: &Graph, colors: &[usize], v: usize| {
            let mut nb: Vec<usize> = graph.neighbors(v).map(|u| colors[u]).collect();
            nb.sort_unstable();
            (colors[v], nb)
        };
        let sg: Vec<_> = (0..g.order()).map(|v| sig(g, cg, v)).collect();
        let sh: Vec<_> = (0..h.order()).map(|v| sig(h, ch, v)).collect();
        let mut ids: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            ids.insert(s, 0);
        }
        for (i, id) in ids.values_mut().enumerate() {
            *id = i;
        }
        let mut hist = vec![0isize; ids.len()];
        for (v, s) in sg.iter().enumerate() {
            cg[v] = ids[s];
            hist[cg[v]] += 1;
        }
        for (v, s) in sh.iter().enumerate() {
            ch[v] = ids[s];
            hist[ch[v]] -= 1;
        }
        if hist.iter().any(|&x| x != 0) {
            return false;
        }
        let now = ids.len();
        if now == classes {
            return true;
        }
        classes = now;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}
