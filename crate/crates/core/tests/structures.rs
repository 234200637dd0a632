use component_graphs::order::{
    all_lattices, atom_partition, boolean_lattice, build_boolean_vlattice, build_l, chain, compress, Lattice,
    OrderError, Poset, TOP_LABEL,
};
use component_graphs::props::{are_isomorphic, graphs_equal_labeled};
use component_graphs::quotient::{neighborhood_quotient, reduce};
use component_graphs::vspace::{build_ig, build_ug};
use component_graphs::zdg::{complete, join, join_recorded, ring_zdg, zdg_poset};
use component_graphs::Graph;

fn labels_of(p: &Poset, set: impl IntoIterator<Item = usize>) -> Vec<String> {
    let mut v: Vec<String> = set.into_iter().map(|i| p.label(i).to_owned()).collect();
    v.sort();
    v
}

fn by_label(p: &Poset, l: &str) -> usize {
    p.index_of(l).unwrap()
}

#[test]
fn cones() {
    let c = chain(3);
    assert_eq!(labels_of(&c, c.lower_cone(&[1]).unwrap().ones()), ["c0", "c1"]);
    let b = boolean_lattice(2);
    let atoms = [by_label(&b, "{1}"), by_label(&b, "{2}")];
    assert_eq!(labels_of(&b, b.lower_cone(&atoms).unwrap().ones()), ["{}"]);
    let all: Vec<usize> = (0..b.len()).collect();
    assert_eq!(labels_of(&b, b.lower_cone(&all).unwrap().ones()), ["{}"]);
    assert_eq!(b.upper_cone(&[]).unwrap_err(), OrderError::EmptyInput);
}

#[test]
fn zero_divisors_and_atoms() {
    assert_eq!(labels_of(&chain(3), chain(3).zero_divisors().unwrap()), ["c0"]);
    let b = boolean_lattice(2);
    assert_eq!(labels_of(&b, b.zero_divisors().unwrap()), ["{1}", "{2}", "{}"]);
    let l = build_l(3, 3).unwrap();
    assert_eq!(l.zero_divisors().unwrap().len(), 19);
    assert_eq!(l.zdg_vertex_set().unwrap().len(), 18);
    assert_eq!(l.dense_elements().unwrap(), vec![l.top().unwrap()]);
    assert_eq!(boolean_lattice(3).atoms().unwrap().len(), 3);
    assert_eq!(chain(4).atoms().unwrap().len(), 1);
    assert_eq!(labels_of(&l, l.atoms().unwrap()), ["001", "010", "100"]);
    let no_zero = Poset::from_fn(vec!["a".into(), "b".into()], |i, j| i == j).unwrap();
    assert_eq!(no_zero.zero_divisors().unwrap_err(), OrderError::NoZero);
}

#[test]
fn distributivity() {
    for n in 1..4 {
        let b = Lattice::from_poset(boolean_lattice(n)).unwrap();
        assert!(b.is_0_distributive() && b.is_1_distributive());
    }
    let m3 = Poset::from_covers(
        ["0", "a", "b", "c", "1"].map(String::from).to_vec(),
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )
    .unwrap();
    assert_eq!(m3.is_0_distributive(), Ok(false));
    let m3 = Lattice::from_poset(m3).unwrap();
    let (a, b, c) = m3.find_0_distributivity_violation().unwrap();
    assert_eq!(m3.meet(a, b), m3.zero());
    assert_eq!(m3.meet(a, c), m3.zero());
    assert_ne!(m3.meet(a, m3.join(b, c)), m3.zero());
    assert_eq!(chain(4).is_0_distributive(), Ok(true));
}

#[test]
fn atom_partition_examples() {
    let b = boolean_lattice(2);
    assert!(atom_partition(&b).unwrap().iter().all(|c| c.members.len() == 1));
    let l = build_l(3, 3).unwrap();
    let parts = atom_partition(&l).unwrap();
    let one = parts.iter().find(|c| c.key.to_string() == "{1}").unwrap();
    assert_eq!(labels_of(&l, one.members.iter().copied()), ["100", "200"]);
    let c = atom_partition(&chain(3)).unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].members.len(), 2);
}

#[test]
fn compress_examples() {
    let c = compress(&chain(3)).unwrap();
    assert_eq!(c.len(), 2);
    assert!(c.poset.leq(0, 1));
    let b = boolean_lattice(3);
    assert!(compress(&b).unwrap().poset.same_labeled_order(&b));
    for (q, n) in [(2, 3), (3, 2), (3, 3), (4, 2)] {
        let c = compress(&build_l(q, n).unwrap()).unwrap();
        assert_eq!(c.len(), 1 << n);
        assert!(Lattice::from_poset(c.poset).unwrap().is_boolean());
    }
}

#[test]
fn annihilators() {
    let b = boolean_lattice(2);
    let a1 = by_label(&b, "{1}");
    assert_eq!(labels_of(&b, b.annihilator(a1).unwrap().ones()), ["{2}", "{}"]);
    assert_eq!(b.annihilator(b.bottom().unwrap()).unwrap().count_ones(..), 4);
    let l = build_l(2, 2).unwrap();
    assert_eq!(labels_of(&l, l.annihilator(by_label(&l, "10")).unwrap().ones()), ["00", "01"]);
}

#[test]
fn duals() {
    let l = build_l(3, 2).unwrap();
    let dd = l.dual().dual();
    assert!(dd.same_labeled_order(&l));
    assert_eq!(l.dual().zero(), l.one());
    let d = Lattice::from_poset(chain(4)).unwrap().dual();
    assert!((0..4).all(|i| (0..4).all(|j| d.leq(i, j) || d.leq(j, i))));
    let b = Lattice::from_poset(boolean_lattice(3)).unwrap();
    assert!(b.dual().is_boolean());
}

#[test]
fn chain_replacement_examples() {
    let c3 = Lattice::from_poset(chain(3)).unwrap();
    assert!(c3.chain_replace(1, 1).unwrap().same_labeled_order(&c3));
    let c4 = c3.chain_replace(1, 2).unwrap();
    assert_eq!(c4.len(), 4);
    assert!((0..4).all(|i| (0..4).all(|j| c4.leq(i, j) || c4.leq(j, i))));

    let b = Lattice::from_poset(boolean_lattice(2)).unwrap();
    let r = b.chain_replace(by_label(&b, "{1}"), 2).unwrap();
    assert_eq!(r.len(), 5);
    assert!(r.is_0_distributive() && r.is_1_distributive());
    assert_eq!(b.chain_replace(9, 2).unwrap_err(), OrderError::InvalidElement(9));
    assert_eq!(b.chain_replace(0, 0).unwrap_err(), OrderError::EmptyChain);
}

#[test]
fn lattice_corpus_counts() {
    let counts: Vec<usize> = (1..=6).map(|k| all_lattices(6).iter().filter(|l| l.len() == k).count()).collect();
    assert_eq!(counts, [1, 1, 1, 2, 5, 15]);
}

#[test]
fn vector_lattices() {
    let v = build_boolean_vlattice(3, 3).unwrap();
    assert_eq!(v.len(), 8);
    assert_eq!(v.atoms().unwrap().len(), 3);
    assert!(v.is_boolean());
    let v1 = build_boolean_vlattice(5, 1).unwrap();
    assert_eq!(v1.len(), 2);

    let l = build_l(3, 3).unwrap();
    assert_eq!(l.len(), 20);
    assert_eq!(l.label(l.one()), TOP_LABEL);
    assert!(l.is_0_distributive() && l.is_1_distributive());
    let covers = l.covers();
    let chain_len = |lo: &str| {
        let mut len = 1;
        let mut x = by_label(&l, lo);
        while let Some(&(_, y)) = covers.iter().find(|&&(a, b)| {
            a == x && atom_partition(&l).unwrap().iter().any(|c| c.members.contains(&a) && c.members.contains(&b))
        }) {
            x = y;
            len += 1;
        }
        len
    };
    assert_eq!(chain_len("001"), 2);
    assert_eq!(chain_len("011"), 4);
    assert!(Lattice::from_poset(build_l(2, 2).unwrap().into_poset()).unwrap().is_boolean());
    assert_eq!(build_l(3, 2).unwrap().len(), 6);
}

#[test]
fn meet_and_join_follow_keys() {
    for (q, n) in [(2, 3), (3, 3), (4, 2)] {
        let l = build_l(q, n).unwrap();
        let c = compress(&l).unwrap();
        let key = |x: usize| c.classes[c.class_of(x)].key;
        let full = component_graphs::IndexSet::full(n);
        for x in 0..l.len() {
            for y in 0..l.len() {
                if x == l.zero() || y == l.zero() {
                    continue;
                }
                assert_eq!(l.meet(x, y) == l.zero(), key(x).is_disjoint(key(y)));
                assert_eq!(l.join(x, y) == l.one(), key(x).union(key(y)) == full);
            }
        }
    }
}

#[test]
fn zero_divisor_graph_examples() {
    let k2 = zdg_poset(&boolean_lattice(2)).unwrap();
    assert!(graphs_equal_labeled(&k2.graph, &Graph::from_edges(["{1}", "{2}"], &[(0, 1)]).unwrap()).is_equal());

    let g = zdg_poset(&boolean_lattice(3)).unwrap().graph;
    assert_eq!(g.order(), 6);
    for u in 0..6 {
        for v in u + 1..6 {
            let parse = |l: &str| -> Vec<char> { l.chars().filter(char::is_ascii_digit).collect() };
            let (a, b) = (parse(g.label(u)), parse(g.label(v)));
            assert_eq!(g.has_edge(u, v), a.iter().all(|x| !b.contains(x)));
        }
    }
    assert_eq!(g.size(), 6);

    let c = zdg_poset(&chain(3)).unwrap();
    assert!(c.trivial && c.graph.is_empty());
}

#[test]
fn graph_algebra() {
    let k1 = Graph::complete_numbered(1);
    assert!(are_isomorphic(&join(&k1, &k1), &Graph::complete_numbered(2), 8).unwrap().is_some());
    assert!(are_isomorphic(&join(&Graph::edgeless(2), &k1), &Graph::path(3), 8).unwrap().is_some());
    let wheel = join(&Graph::cycle(4), &k1);
    assert_eq!((wheel.order(), wheel.size()), (5, 8));
    let (_, relabels) = join_recorded(&k1, &k1);
    assert_eq!(relabels.len(), 1);

    assert_eq!(Graph::complete_numbered(5).complement().size(), 0);
    let c5 = Graph::cycle(5);
    assert_eq!(c5.complement().complement(), c5);
    assert!(are_isomorphic(&c5, &c5.complement(), 8).unwrap().is_some());

    assert_eq!(complete(["a"]).unwrap().order(), 1);
    let units = ["111", "112", "121", "122", "211", "212", "221", "222"];
    assert_eq!(complete(units).unwrap().size(), 28);
}

#[test]
fn quotient_examples() {
    assert_eq!(reduce(&Graph::complete_numbered(6)).unwrap().order(), 1);
    let c4 = Graph::cycle(4);
    assert_eq!(reduce(&c4).unwrap(), c4);

    let mut k23 = Graph::edgeless(5);
    for a in 0..2 {
        for b in 2..5 {
            k23.add_edge(a, b);
        }
    }
    let q = neighborhood_quotient(&k23);
    assert_eq!((q.order(), q.size()), (2, 1));
    let e = neighborhood_quotient(&Graph::edgeless(4));
    assert_eq!((e.order(), e.size()), (1, 0));

    let red = reduce(&build_ig(3, 2).unwrap()).unwrap();
    let target = join(&ring_zdg(2, 2).unwrap().complement(), &complete(["k"]).unwrap());
    assert!(are_isomorphic(&red, &target, 16).unwrap().is_some());
    assert!(are_isomorphic(&red, &Graph::path(3), 16).unwrap().is_some());

    let quot = neighborhood_quotient(&build_ug(3, 2).unwrap());
    let k4 = complete(["11", "12", "21", "22"]).unwrap();
    assert!(are_isomorphic(&quot, &join(&ring_zdg(2, 2).unwrap(), &k4), 16).unwrap().is_some());
}

#[test]
fn labeled_identities_for_q3_n2() {
    let (q, n) = (3, 2);
    let l = build_l(q, n).unwrap();
    let units = complete(["11", "12", "21", "22"]).unwrap();
    let ig_rhs = join(&zdg_poset(&l).unwrap().graph.complement(), &units);
    assert!(graphs_equal_labeled(&build_ig(q, n).unwrap(), &ig_rhs).is_equal());
    let ug_rhs = join(&zdg_poset(&l.dual()).unwrap().graph, &units);
    assert!(graphs_equal_labeled(&build_ug(q, n).unwrap(), &ug_rhs).is_equal());
}
