mod common;

use common::{
    brute_chordal, brute_chromatic_number, brute_clique_number, brute_perfect, induces_cycle, matrix, random_graph,
};
use component_graphs::props::{
    are_isomorphic, chromatic_number, clique_number, diameter, is_chordal, is_isomorphism, is_perfect, max_clique,
    optimal_coloring, ChordalCertificate, PerfectCertificate, PropsError,
};
use component_graphs::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all(n: usize) -> Vec<usize> {
    (0..n).collect()
}

#[test]
fn chordality_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..400 {
        let g = random_graph(&mut rng, 9);
        let r = is_chordal(&g);
        assert_eq!(r.chordal, brute_chordal(&g), "{g:?}");
        let adj = matrix(&g);
        match r.certificate {
            ChordalCertificate::EliminationOrder(order) => {
                let mut sorted = order.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, all(g.order()));
                for (i, &v) in order.iter().enumerate() {
                    let later: Vec<usize> = order[i + 1..].iter().copied().filter(|&w| adj[v][w]).collect();
                    assert!(later.iter().all(|&a| later.iter().all(|&b| a == b || adj[a][b])));
                }
            }
            ChordalCertificate::ChordlessCycle(c) => {
                assert!(c.len() >= 4 && induces_cycle(&adj, &c));
                assert!((0..c.len()).all(|i| adj[c[i]][c[(i + 1) % c.len()]]));
            }
        }
    }
}

#[test]
fn perfection_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut imperfect = 0;
    for round in 0..300 {
        let mut g = random_graph(&mut rng, 8);
        if round % 3 == 0 && g.order() >= 7 {
            plant_cycle(&mut rng, &mut g, [5, 7][round % 2]);
        }
        if round % 6 == 3 {
            g = g.complement();
        }
        let r = is_perfect(&g, 64).unwrap();
        assert_eq!(r.perfect, brute_perfect(&g), "{g:?}");
        assert!(r.kernel_order <= g.order());
        if let Some(cert) = r.certificate {
            imperfect += 1;
            let (adj, c) = match cert {
                PerfectCertificate::OddHole(c) => (matrix(&g), c),
                PerfectCertificate::OddAntihole(c) => (matrix(&g.complement()), c),
            };
            assert!(c.len() >= 5 && c.len() % 2 == 1 && induces_cycle(&adj, &c));
        }
    }
    assert!(imperfect > 20, "only {imperfect} imperfect graphs sampled");
}

/// Overwrites the edges among `k` random vertices with an induced cycle.
fn plant_cycle<R: Rng>(rng: &mut R, g: &mut Graph, k: usize) {
    let mut vs = all(g.order());
    vs.shuffle(rng);
    vs.truncate(k);
    for &u in &vs {
        for &v in &vs {
            if u != v {
                g.remove_edge(u, v);
            }
        }
    }
    for i in 0..k {
        g.add_edge(vs[i], vs[(i + 1) % k]);
    }
}

#[test]
fn perfect_cap_applies_to_twin_kernel() {
    let big = Graph::complete_numbered(100);
    assert_eq!(is_perfect(&big, 4).unwrap().kernel_order, 1);
    let c7 = Graph::cycle(7);
    assert_eq!(is_perfect(&c7, 6).unwrap_err(), PropsError::TooLarge { order: 7, cap: 6 });
}

#[test]
fn clique_and_colouring_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..300 {
        let g = random_graph(&mut rng, 9);
        let adj = matrix(&g);
        let vs = all(g.order());
        let omega = brute_clique_number(&adj, &vs);
        let chi = brute_chromatic_number(&adj, &vs);
        assert_eq!(clique_number(&g, 64).unwrap(), omega);
        assert_eq!(chromatic_number(&g, 64).unwrap(), chi);
        assert!(omega <= chi);
        let k = max_clique(&g, 64).unwrap();
        assert!(k.iter().all(|&a| k.iter().all(|&b| a == b || adj[a][b])));
        let col = optimal_coloring(&g, 64).unwrap();
        assert_eq!(col.len(), g.order());
        assert!((0..g.order()).all(|u| (0..u).all(|v| !adj[u][v] || col[u] != col[v])));
    }
}

#[test]
fn colouring_respects_cap() {
    let g = Graph::cycle(10);
    assert!(chromatic_number(&g, 9).is_err());
    assert!(clique_number(&g, 9).is_err());
    assert_eq!(chromatic_number(&g, 10).unwrap(), 2);
}

#[test]
fn isomorphism_on_relabelings() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 12);
        let n = g.order();
        let mut perm = all(n);
        perm.shuffle(&mut rng);
        let mut h = Graph::edgeless(n);
        for (u, v) in g.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        let m = are_isomorphic(&g, &h, 64).unwrap().expect("relabeling is isomorphic");
        assert!(is_isomorphism(&g, &h, &m));
        if n >= 2 && g.size() > 0 {
            let (u, v) = g.edges()[rng.gen_range(0..g.size())];
            let mut k = h.clone();
            k.remove_edge(perm[u], perm[v]);
            assert!(are_isomorphic(&g, &k, 64).unwrap().is_none());
        }
    }
}

#[test]
fn isomorphism_on_regular_pairs() {
    let c6 = Graph::cycle(6);
    let two_triangles =
        Graph::from_edges(["a", "b", "c", "d", "e", "f"], &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    assert!(are_isomorphic(&c6, &two_triangles, 64).unwrap().is_none());
    let petersen_outer = Graph::cycle(5);
    assert!(are_isomorphic(&petersen_outer, &petersen_outer.complement(), 64).unwrap().is_some());
}

#[test]
fn diameter_matches_bfs() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 10);
        let adj = matrix(&g);
        let dists: Vec<Vec<Option<usize>>> = (0..g.order()).map(|s| common::bfs(&adj, s)).collect();
        let expected = if dists.iter().flatten().any(Option::is_none) {
            None
        } else {
            Some(dists.iter().flatten().map(|d| d.unwrap()).max().unwrap_or(0))
        };
        if g.order() > 0 {
            assert_eq!(diameter(&g), expected);
        }
    }
}
