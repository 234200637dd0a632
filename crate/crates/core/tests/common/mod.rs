//! Brute-force oracles and witness validation shared by the integration tests.
//! Nothing here calls the library's own decision procedures.

#![allow(dead_code)]

use std::collections::VecDeque;

use component_graphs::verify::{GraphName, Instance, Status, Witness};
use component_graphs::Graph;
use rand::Rng;

/// Adjacency matrix copy, so oracles do not lean on the bitset rows.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn random_graph<R: Rng>(rng: &mut R, max_order: usize) -> Graph {
    let n = rng.gen_range(0..=max_order);
    let density: f64 = rng.gen_range(0.1..0.9);
    let mut g = Graph::edgeless(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Every vertex subset, as bit masks, of a graph with few vertices.
fn subsets(n: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << n)
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// True if the subgraph induced on `vs` is a single cycle through all of them.
pub fn induces_cycle(adj: &[Vec<bool>], vs: &[usize]) -> bool {
    let k = vs.len();
    if k < 3 {
        return false;
    }
    if vs.iter().any(|&v| vs.iter().filter(|&&w| adj[v][w]).count() != 2) {
        return false;
    }
    // 2-regular: connected iff a walk from vs[0] visits everything
    let mut seen = vec![vs[0]];
    let mut prev = usize::MAX;
    let mut cur = vs[0];
    loop {
        let next = *vs.iter().find(|&&w| adj[cur][w] && w != prev).unwrap();
        if next == vs[0] {
            break;
        }
        seen.push(next);
        prev = cur;
        cur = next;
        if seen.len() > k {
            return false;
        }
    }
    seen.len() == k
}

/// Chordal by definition: no induced cycle on 4 or more vertices.
pub fn brute_chordal(g: &Graph) -> bool {
    let adj = matrix(g);
    let n = g.order();
    subsets(n).all(|m| m.count_ones() < 4 || !induces_cycle(&adj, &members(m, n)))
}

pub fn brute_clique_number(adj: &[Vec<bool>], vs: &[usize]) -> usize {
    let k = vs.len();
    (0u32..1 << k)
        .filter(|&m| {
            let s = members(m, k);
            s.iter().all(|&i| s.iter().all(|&j| i == j || adj[vs[i]][vs[j]]))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn colorable(adj: &[Vec<bool>], vs: &[usize], colors: usize, assigned: &mut Vec<usize>) -> bool {
    let i = assigned.len();
    if i == vs.len() {
        return true;
    }
    for c in 0..colors {
        if (0..i).all(|j| !adj[vs[i]][vs[j]] || assigned[j] != c) {
            assigned.push(c);
            if colorable(adj, vs, colors, assigned) {
                return true;
            }
            assigned.pop();
        }
    }
    false
}

pub fn brute_chromatic_number(adj: &[Vec<bool>], vs: &[usize]) -> usize {
    (0..=vs.len()).find(|&k| colorable(adj, vs, k, &mut Vec::new())).unwrap()
}

/// Perfect by definition: χ = ω on every induced subgraph.
pub fn brute_perfect(g: &Graph) -> bool {
    let adj = matrix(g);
    let n = g.order();
    subsets(n).all(|m| {
        let vs = members(m, n);
        brute_chromatic_number(&adj, &vs) == brute_clique_number(&adj, &vs)
    })
}

pub fn bfs(adj: &[Vec<bool>], s: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; adj.len()];
    d[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in 0..adj.len() {
            if adj[u][v] && d[v].is_none() {
                d[v] = Some(d[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    d
}

fn idx(g: &Graph, label: &str) -> Result<usize, String> {
    g.index_of(label).ok_or_else(|| format!("{label:?} is not a vertex"))
}

fn indices(g: &Graph, labels: &[String]) -> Result<Vec<usize>, String> {
    labels.iter().map(|l| idx(g, l)).collect()
}

fn is_peo(adj: &[Vec<bool>], order: &[usize]) -> bool {
    let mut pos = vec![usize::MAX; adj.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    if order.len() != adj.len() || pos.contains(&usize::MAX) {
        return false;
    }
    order.iter().enumerate().all(|(i, &v)| {
        let later: Vec<usize> = order[i + 1..].iter().copied().filter(|&w| adj[v][w]).collect();
        later.iter().all(|&a| later.iter().all(|&b| a == b || adj[a][b]))
    })
}

fn twins(adj: &[Vec<bool>], u: usize, v: usize) -> bool {
    u == v || (adj[u][v] && (0..adj.len()).all(|w| w == u || w == v || adj[u][w] == adj[v][w]))
}

/// Re-checks a witness against the graphs of `inst` using only the oracles
/// above. `odd_only` requires holes to be odd with at least 5 vertices.
pub fn validate(inst: &Instance, status: Status, w: &Witness, odd_only: bool) -> Result<(), String> {
    let graph = |name: GraphName| inst.graph(name).map_err(|e| e.to_string());
    match w {
        Witness::EdgeMismatch { left, right, a, b } => {
            let (g, h) = (graph(*left)?, graph(*right)?);
            let eg = g.has_edge(idx(&g, a)?, idx(&g, b)?);
            let eh = h.has_edge(idx(&h, a)?, idx(&h, b)?);
            (eg != eh).then_some(()).ok_or_else(|| "adjacency agrees".into())
        }
        Witness::VertexMismatch { left, right, label } => {
            let (g, h) = (graph(*left)?, graph(*right)?);
            (g.index_of(label).is_some() != h.index_of(label).is_some())
                .then_some(())
                .ok_or_else(|| "vertex sets agree on the label".into())
        }
        Witness::Adjacency { graph: name, a, b, expected_adjacent } => {
            let g = graph(*name)?;
            (g.has_edge(idx(&g, a)?, idx(&g, b)?) != *expected_adjacent)
                .then_some(())
                .ok_or_else(|| "adjacency as expected".into())
        }
        Witness::Degrees { graph: name, a, b } => {
            let g = graph(*name)?;
            (g.degree(idx(&g, a)?) != g.degree(idx(&g, b)?)).then_some(()).ok_or_else(|| "equal degrees".into())
        }
        Witness::Distance { graph: name, a, b, bound } => {
            let g = graph(*name)?;
            let d = bfs(&matrix(&g), idx(&g, a)?)[idx(&g, b)?];
            d.is_none_or(|d| d > *bound).then_some(()).ok_or_else(|| format!("distance {d:?}"))
        }
        Witness::Hole { graph: name, vertices } => {
            let g = graph(*name)?;
            let vs = indices(&g, vertices)?;
            let adj = matrix(&g);
            let consecutive = (0..vs.len()).all(|i| adj[vs[i]][vs[(i + 1) % vs.len()]]);
            let min = if odd_only { 5 } else { 4 };
            let ok = consecutive && induces_cycle(&adj, &vs) && vs.len() >= min && (!odd_only || vs.len() % 2 == 1);
            ok.then_some(()).ok_or_else(|| "not an induced cycle of the required length".into())
        }
        Witness::Antihole { graph: name, vertices } => {
            let g = graph(*name)?.complement();
            let vs = indices(&g, vertices)?;
            let adj = matrix(&g);
            let consecutive = (0..vs.len()).all(|i| adj[vs[i]][vs[(i + 1) % vs.len()]]);
            let ok = consecutive && induces_cycle(&adj, &vs) && vs.len() >= 5 && vs.len() % 2 == 1;
            ok.then_some(()).ok_or_else(|| "not an odd antihole".into())
        }
        Witness::EliminationOrder { graph: name, order } => {
            let g = graph(*name)?;
            is_peo(&matrix(&g), &indices(&g, order)?).then_some(()).ok_or_else(|| "not a PEO".into())
        }
        Witness::Isomorphism { from, to, pairs } => {
            let (g, h) = (graph(*from)?, graph(*to)?);
            if pairs.len() != g.order() || g.order() != h.order() {
                return Err("mapping does not cover the vertices".into());
            }
            let mut image = vec![usize::MAX; g.order()];
            let mut hit = vec![false; h.order()];
            for (a, b) in pairs {
                let (u, v) = (idx(&g, a)?, idx(&h, b)?);
                if image[u] != usize::MAX || hit[v] {
                    return Err("mapping is not a bijection".into());
                }
                image[u] = v;
                hit[v] = true;
            }
            let (ag, ah) = (matrix(&g), matrix(&h));
            let ok = (0..g.order()).all(|u| (0..g.order()).all(|v| ag[u][v] == ah[image[u]][image[v]]));
            ok.then_some(()).ok_or_else(|| "mapping does not preserve adjacency".into())
        }
        Witness::NotIsomorphic { left, right } => {
            let (g, h) = (graph(*left)?, graph(*right)?);
            let degrees = |x: &Graph| {
                let mut d: Vec<usize> = (0..x.order()).map(|v| x.degree(v)).collect();
                d.sort_unstable();
                d
            };
            (degrees(&g) != degrees(&h))
                .then_some(())
                .ok_or_else(|| "degree sequences agree; non-isomorphism not confirmed".into())
        }
        Witness::CliqueAndColoring { graph: name, clique, coloring } => {
            let g = graph(*name)?;
            let adj = matrix(&g);
            let c = indices(&g, clique)?;
            if !c.iter().all(|&u| c.iter().all(|&v| u == v || adj[u][v])) {
                return Err("clique is not a clique".into());
            }
            let mut color = vec![usize::MAX; g.order()];
            for (l, k) in coloring {
                color[idx(&g, l)?] = *k;
            }
            if color.contains(&usize::MAX) || (0..g.order()).any(|u| (0..u).any(|v| adj[u][v] && color[u] == color[v]))
            {
                return Err("colouring is not proper".into());
            }
            let used = color.iter().collect::<std::collections::BTreeSet<_>>().len();
            match status {
                Status::Pass => (used == c.len()).then_some(()).ok_or_else(|| "sizes differ on PASS".into()),
                _ => (used != c.len()).then_some(()).ok_or_else(|| "sizes agree on FAIL".into()),
            }
        }
        Witness::NonTransitive { graph: name, a, b, c } => {
            let g = graph(*name)?;
            let adj = matrix(&g);
            let (a, b, c) = (idx(&g, a)?, idx(&g, b)?, idx(&g, c)?);
            (twins(&adj, a, b) && twins(&adj, b, c) && !twins(&adj, a, c))
                .then_some(())
                .ok_or_else(|| "relation is transitive here".into())
        }
        Witness::Distributivity { structure, dual, a, b, c } => {
            if structure != "L" {
                return Ok(());
            }
            let l = if *dual { inst.l.dual() } else { inst.l.clone() };
            let e = |x: &str| l.index_of(x).ok_or_else(|| format!("{x:?} not in L"));
            let (a, b, c) = (e(a)?, e(b)?, e(c)?);
            let z = l.zero();
            let ok = l.meet(a, b) == z && l.meet(a, c) == z && l.meet(a, l.join(b, c)) != z;
            ok.then_some(()).ok_or_else(|| "triple is not a violation".into())
        }
        Witness::OrderMismatch { .. } => Ok(()),
        Witness::Value { expected, actual, .. } => {
            (expected != actual).then_some(()).ok_or_else(|| "values agree".into())
        }
    }
}
