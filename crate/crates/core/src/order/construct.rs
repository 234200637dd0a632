//! Concrete posets and lattices: chains, Boolean lattices, the lattice of
//! skeleton classes `[V]`, the chain-inflated lattice built from it, and an
//! exhaustive generator of small lattices.

use std::collections::HashSet;

use crate::index_set::IndexSet;
use crate::vspace::{VectorSpace, VspaceError};

use super::{Lattice, Poset};

/// Label of the greatest element of [`build_l`] (the image of `V_{1...n}`).
pub const TOP_LABEL: &str = "top";

/// The chain `c0 < c1 < ... < c(n-1)`.
pub fn chain(n: usize) -> Poset {
    Poset::from_fn((0..n).map(|i| format!("c{i}")).collect(), |i, j| i <= j).unwrap()
}

/// Power set of `{1..n}` under inclusion, labelled like `{1,3}`, in bit-mask order.
pub fn boolean_lattice(n: usize) -> Poset {
    let sets: Vec<IndexSet> = IndexSet::all_subsets(n).collect();
    Poset::from_fn(sets.iter().map(|s| s.to_string()).collect(), |i, j| sets[i].is_subset(sets[j])).unwrap()
}

/// `[V]`: the classes `V_I` ordered by inclusion of `I`, labelled `V{..}`.
pub fn build_boolean_vlattice(q: usize, n: usize) -> Result<Lattice, VspaceError> {
    VectorSpace::new(q, n)?;
    let sets: Vec<IndexSet> = IndexSet::all_subsets(n).collect();
    let poset =
        Poset::from_fn(sets.iter().map(|s| format!("V{s}")).collect(), |i, j| sets[i].is_subset(sets[j])).unwrap();
    Ok(Lattice::from_poset(poset).expect("power sets are lattices"))
}

/// The lattice obtained from `[V]` by replacing `V_∅` with 0, `V_{1..n}` with
/// 1 ([`TOP_LABEL`]), and every other `V_I` with the chain of its vectors in
/// lexicographic order.
///
/// Elements are numbered 0 first, then class by class in bit-mask order of
/// `I`, then the top; so the atoms come out as `V_1, V_2, ..., V_n`.
pub fn build_l(q: usize, n: usize) -> Result<Lattice, VspaceError> {
    let space = VectorSpace::new(q, n)?;
    let full = IndexSet::full(n);
    let mut labels = Vec::new();
    // (class key, rank inside the chain)
    let mut place: Vec<(IndexSet, usize)> = Vec::new();
    for (key, members) in space.partition_classes() {
        if key.is_empty() {
            labels.push(members[0].label());
            place.push((key, 0));
        } else if key != full {
            for (rank, v) in members.iter().enumerate() {
                labels.push(v.label());
                place.push((key, rank));
            }
        }
    }
    labels.push(TOP_LABEL.to_owned());
    place.push((full, 0));

    let poset = Poset::from_fn(labels, |i, j| {
        let ((ki, ri), (kj, rj)) = (place[i], place[j]);
        if ki == kj {
            ri <= rj
        } else {
            ki.is_subset(kj)
        }
    })
    .expect("inflated Boolean order is a partial order");
    Ok(Lattice::from_poset(poset).expect("chain replacement preserves lattices"))
}

/// Same lattice as [`build_l`], produced by repeated [`Lattice::chain_replace_labeled`]
/// on [`build_boolean_vlattice`].
pub fn build_l_by_chain_replacement(q: usize, n: usize) -> Result<Lattice, VspaceError> {
    let space = VectorSpace::new(q, n)?;
    let full = IndexSet::full(n);
    let mut lattice = build_boolean_vlattice(q, n)?;
    for (key, members) in space.partition_classes() {
        let x = lattice.index_of(&format!("V{key}")).expect("class present");
        let chain: Vec<String> =
            if key == full { vec![TOP_LABEL.to_owned()] } else { members.iter().map(|v| v.label()).collect() };
        lattice = lattice.chain_replace_labeled(x, chain).expect("chain replacement yields a lattice");
    }
    Ok(lattice)
}

/// Every lattice with at most `max_size` elements, one per isomorphism type,
/// ordered by size.
///
/// Elements are `0`, interior elements `a`, `b`, ..., and `1`; the natural
/// numbering is a linear extension.
pub fn all_lattices(max_size: usize) -> Vec<Lattice> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        out.extend(lattices_of_size(size));
    }
    out
}

fn lattices_of_size(size: usize) -> Vec<Lattice> {
    if size == 1 {
        let p = Poset::from_fn(vec!["0".into()], |_, _| true).unwrap();
        return vec![Lattice::from_poset(p).unwrap()];
    }
    let interior = size - 2;
    let labels: Vec<String> = std::iter::once("0".to_owned())
        .chain((0..interior).map(|i| ((b'a' + i as u8) as char).to_string()))
        .chain(std::iter::once("1".to_owned()))
        .collect();
    let pairs: Vec<(usize, usize)> = (1..=interior).flat_map(|i| (i + 1..=interior).map(move |j| (i, j))).collect();

    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let rel = |i: usize, j: usize| -> bool {
            if i == j || i == 0 || j == size - 1 {
                return true;
            }
            if j == 0 || i == size - 1 || i > j {
                return false;
            }
            let k = pairs.iter().position(|&p| p == (i, j)).unwrap();
            mask >> k & 1 == 1
        };
        let Ok(poset) = Poset::from_fn(labels.clone(), rel) else { continue };
        let Ok(lattice) = Lattice::from_poset(poset) else { continue };
        if seen.insert(canonical_form(&lattice, interior)) {
            out.push(lattice);
        }
    }
    out
}

/// Lexicographically least relation matrix over all permutations of the
/// interior elements.
fn canonical_form(l: &Lattice, interior: usize) -> Vec<bool> {
    let n = l.len();
    let mut perm: Vec<usize> = (1..=interior).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let mut map = vec![0];
        map.extend(&perm);
        map.push(n - 1);
        let form: Vec<bool> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| l.leq(map[i], map[j])).collect();
        if best.as_ref().is_none_or(|b| form < *b) {
            best = Some(form);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_counts_match_known_sequence() {
        // unlabeled lattices on 1..=6 elements: 1, 1, 1, 2, 5, 15
        let counts: Vec<usize> = (1..=6).map(|s| lattices_of_size(s).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn vlattice_shapes() {
        let v3 = build_boolean_vlattice(3, 3).unwrap();
        assert_eq!(v3.len(), 8);
        assert_eq!(v3.atoms().unwrap().len(), 3);
        let v1 = build_boolean_vlattice(2, 1).unwrap();
        assert_eq!(v1.len(), 2);
        for a in 0..v3.len() {
            for b in 0..v3.len() {
                let key = |x: usize| v3.label(x).trim_start_matches('V').to_owned();
                let sa = parse_set(&key(a));
                let sb = parse_set(&key(b));
                assert_eq!(parse_set(&key(v3.meet(a, b))), sa.intersection(sb));
                assert_eq!(parse_set(&key(v3.join(a, b))), sa.union(sb));
            }
        }
    }

    fn parse_set(s: &str) -> IndexSet {
        IndexSet::from_members(
            s.trim_matches(|c| c == '{' || c == '}').split(',').filter(|t| !t.is_empty()).map(|t| t.parse().unwrap()),
        )
    }

    #[test]
    fn figure_lattice_shape() {
        let l = build_l(3, 3).unwrap();
        assert_eq!(l.len(), 20);
        assert_eq!(l.label(l.zero()), "000");
        assert_eq!(l.label(l.one()), TOP_LABEL);
        let atoms: Vec<&str> = l.atoms().unwrap().into_iter().map(|a| l.label(a)).collect();
        assert_eq!(atoms, ["100", "010", "001"]);
        // v1 < 2v1 < every vector of V_12
        let idx = |s: &str| l.index_of(s).unwrap();
        assert!(l.lt(idx("100"), idx("200")));
        assert!(l.lt(idx("200"), idx("110")));
        assert!(!l.leq(idx("200"), idx("011")));
        assert_eq!(l.covers().iter().filter(|&&(a, _)| a == l.zero()).count(), 3);
    }

    #[test]
    fn small_instances_of_l() {
        let l = build_l(2, 2).unwrap();
        assert_eq!(l.len(), 4);
        assert!(l.is_boolean());
        let l = build_l(3, 2).unwrap();
        assert_eq!(l.len(), 6);
        let l1 = build_l(5, 1).unwrap();
        assert_eq!(l1.len(), 2);
    }

    #[test]
    fn chain_replacement_route_agrees() {
        for (q, n) in [(2, 1), (2, 3), (3, 2), (3, 3), (4, 2)] {
            let direct = build_l(q, n).unwrap();
            let iterated = build_l_by_chain_replacement(q, n).unwrap();
            assert!(direct.same_labeled_order(&iterated), "q={q} n={n}");
        }
    }
}
