use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use super::OrderError;

/// A finite partially ordered set stored as its full order relation.
///
/// `up[i]` holds every `j` with `i <= j`, `down[i]` every `j` with `j <= i`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    bottom: Option<usize>,
    top: Option<usize>,
}

impl Poset {
    /// Builds a poset from a relation predicate and validates the axioms.
    pub fn from_fn<F>(labels: Vec<String>, leq: F) -> Result<Self, OrderError>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..n {
                if leq(i, j) {
                    row.insert(j);
                }
            }
        }
        Self::from_up_sets(labels, up)
    }

    /// Builds a poset from an explicit list of related pairs `(i, j)` meaning
    /// `i <= j`. The list must already be reflexive and transitive.
    pub fn from_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, OrderError> {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &(i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(OrderError::OutOfRange { index, len: n });
                }
            }
            up[i].insert(j);
        }
        Self::from_up_sets(labels, up)
    }

    /// Reflexive-transitive closure of a cover list `(lower, upper)`.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, OrderError> {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            row.insert(i);
        }
        for &(i, j) in covers {
            for index in [i, j] {
                if index >= n {
                    return Err(OrderError::OutOfRange { index, len: n });
                }
            }
            up[i].insert(j);
        }
        // Warshall on bit rows
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        Self::from_up_sets(labels, up)
    }

    fn from_up_sets(labels: Vec<String>, up: Vec<FixedBitSet>) -> Result<Self, OrderError> {
        let n = labels.len();
        let mut seen = HashMap::with_capacity(n);
        for l in &labels {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(OrderError::DuplicateLabel(l.clone()));
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].insert(i);
            }
        }
        for i in 0..n {
            if !up[i].contains(i) {
                return Err(OrderError::NotReflexive(labels[i].clone()));
            }
            for j in up[i].ones() {
                if j != i && up[j].contains(i) {
                    return Err(OrderError::NotAntisymmetric(labels[i].clone(), labels[j].clone()));
                }
                // i <= j implies up(j) ⊆ up(i)
                if !up[j].is_subset(&up[i]) {
                    let k = up[j].difference(&up[i]).next().unwrap();
                    return Err(OrderError::NotTransitive(labels[i].clone(), labels[j].clone(), labels[k].clone()));
                }
            }
        }
        let bottom = (0..n).find(|&i| up[i].count_ones(..) == n);
        let top = (0..n).find(|&i| down[i].count_ones(..) == n);
        Ok(Poset { labels, up, down, bottom, top })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// `a^u` as a bitset.
    pub fn up_set(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    /// `a^ℓ` as a bitset.
    pub fn down_set(&self, a: usize) -> &FixedBitSet {
        &self.down[a]
    }

    /// Least element, if any.
    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    /// Greatest element, if any.
    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub(crate) fn require_bottom(&self) -> Result<usize, OrderError> {
        self.bottom.ok_or(OrderError::NoZero)
    }

    pub(crate) fn require_top(&self) -> Result<usize, OrderError> {
        self.top.ok_or(OrderError::NoOne)
    }

    fn check_index(&self, a: usize) -> Result<(), OrderError> {
        if a < self.len() {
            Ok(())
        } else {
            Err(OrderError::OutOfRange { index: a, len: self.len() })
        }
    }

    /// `A^ℓ = { b : b <= a for all a in A }`.
    pub fn lower_cone(&self, set: &[usize]) -> Result<FixedBitSet, OrderError> {
        self.cone(set, &self.down)
    }

    /// `A^u = { b : b >= a for all a in A }`.
    pub fn upper_cone(&self, set: &[usize]) -> Result<FixedBitSet, OrderError> {
        self.cone(set, &self.up)
    }

    fn cone(&self, set: &[usize], rows: &[FixedBitSet]) -> Result<FixedBitSet, OrderError> {
        let (&first, rest) = set.split_first().ok_or(OrderError::EmptyInput)?;
        self.check_index(first)?;
        let mut acc = rows[first].clone();
        for &a in rest {
            self.check_index(a)?;
            acc.intersect_with(&rows[a]);
        }
        Ok(acc)
    }

    /// `{a, b}^ℓ = {0}`. Only meaningful when the poset has a least element.
    pub(crate) fn meets_in_zero(&self, a: usize, b: usize) -> bool {
        self.down[a].intersection_count(&self.down[b]) == 1
    }

    /// `Z(P)`: elements `a` with some `b != 0` such that `{a, b}^ℓ = {0}`.
    pub fn zero_divisors(&self) -> Result<Vec<usize>, OrderError> {
        let zero = self.require_bottom()?;
        Ok((0..self.len()).filter(|&a| (0..self.len()).any(|b| b != zero && self.meets_in_zero(a, b))).collect())
    }

    /// Dense elements `P \ Z(P)`.
    pub fn dense_elements(&self) -> Result<Vec<usize>, OrderError> {
        let z = self.zero_divisors()?;
        Ok((0..self.len()).filter(|a| !z.contains(a)).collect())
    }

    /// `Z(P) \ {0}`, the vertex set of the zero-divisor graph.
    pub fn zdg_vertex_set(&self) -> Result<Vec<usize>, OrderError> {
        let zero = self.require_bottom()?;
        Ok(self.zero_divisors()?.into_iter().filter(|&a| a != zero).collect())
    }

    /// `a^⊥ = { x : {a, x}^ℓ = {0} }`.
    pub fn annihilator(&self, a: usize) -> Result<FixedBitSet, OrderError> {
        self.require_bottom()?;
        self.check_index(a)?;
        let mut out = FixedBitSet::with_capacity(self.len());
        for x in 0..self.len() {
            if self.meets_in_zero(a, x) {
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// Elements covering the least element.
    pub fn atoms(&self) -> Result<Vec<usize>, OrderError> {
        let zero = self.require_bottom()?;
        Ok((0..self.len()).filter(|&x| x != zero && self.down[x].count_ones(..) == 2).collect())
    }

    /// Elements covered by the greatest element.
    pub fn coatoms(&self) -> Result<Vec<usize>, OrderError> {
        let one = self.require_top()?;
        Ok((0..self.len()).filter(|&x| x != one && self.up[x].count_ones(..) == 2).collect())
    }

    /// Poset form: `{a,b}^ℓ = {0} = {a,c}^ℓ` implies `{a, {b,c}^u}^ℓ = {0}`.
    pub fn is_0_distributive(&self) -> Result<bool, OrderError> {
        let zero = self.require_bottom()?;
        Ok(Self::cone_distributive(zero, &self.down, &self.up))
    }

    /// Dual of [`Poset::is_0_distributive`].
    pub fn is_1_distributive(&self) -> Result<bool, OrderError> {
        let one = self.require_top()?;
        Ok(Self::cone_distributive(one, &self.up, &self.down))
    }

    fn cone_distributive(bound: usize, below: &[FixedBitSet], above: &[FixedBitSet]) -> bool {
        let n = below.len();
        let trivial = |a: usize, b: usize| below[a].intersection_count(&below[b]) == 1;
        for a in 0..n {
            let perp: Vec<usize> = (0..n).filter(|&b| trivial(a, b)).collect();
            for (i, &b) in perp.iter().enumerate() {
                for &c in &perp[i..] {
                    let mut common_above = above[b].clone();
                    common_above.intersect_with(&above[c]);
                    let mut cone = below[a].clone();
                    for u in common_above.ones() {
                        cone.intersect_with(&below[u]);
                    }
                    debug_assert!(cone.contains(bound));
                    if cone.count_ones(..) != 1 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The order reversed, labels unchanged.
    pub fn dual(&self) -> Poset {
        Poset {
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Cover (Hasse) pairs `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.up[a].ones() {
                if b == a {
                    continue;
                }
                let mut between = self.up[a].clone();
                between.intersect_with(&self.down[b]);
                if between.count_ones(..) == 2 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Every related pair `(i, j)` with `i <= j`, reflexive pairs included.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|i| self.up[i].ones().map(move |j| (i, j))).collect()
    }

    pub fn is_lattice(&self) -> bool {
        super::Lattice::from_poset(self.clone()).is_ok()
    }

    /// Sub-poset induced on `elements`, keeping their order and labels.
    pub fn restrict(&self, elements: &[usize]) -> Poset {
        Poset::from_fn(elements.iter().map(|&e| self.labels[e].clone()).collect(), |i, j| {
            self.leq(elements[i], elements[j])
        })
        .expect("restriction of a poset is a poset")
    }

    /// Same elements and relation, ignoring element order.
    pub fn same_labeled_order(&self, other: &Poset) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let map: Option<Vec<usize>> = self.labels.iter().map(|l| other.index_of(l)).collect();
        let Some(map) = map else { return false };
        (0..self.len()).all(|i| (0..self.len()).all(|j| self.leq(i, j) == other.leq(map[i], map[j])))
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<(&str, &str)> =
            self.covers().into_iter().map(|(a, b)| (self.label(a), self.label(b))).collect();
        f.debug_struct("Poset").field("elements", &self.labels).field("covers", &covers).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::construct::{boolean_lattice, chain};

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn axioms_are_checked() {
        assert!(matches!(Poset::from_pairs(labels(2), &[(0, 1)]), Err(OrderError::NotReflexive(_))));
        assert!(matches!(
            Poset::from_pairs(labels(2), &[(0, 0), (1, 1), (0, 1), (1, 0)]),
            Err(OrderError::NotAntisymmetric(..))
        ));
        assert!(matches!(
            Poset::from_pairs(labels(3), &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]),
            Err(OrderError::NotTransitive(..))
        ));
        assert!(matches!(Poset::from_covers(labels(2), &[(0, 1), (1, 0)]), Err(OrderError::NotAntisymmetric(..))));
        assert!(matches!(Poset::from_covers(vec!["x".into(), "x".into()], &[]), Err(OrderError::DuplicateLabel(_))));
    }

    #[test]
    fn cones_on_chain_and_boolean() {
        let c = chain(3);
        assert_eq!(c.lower_cone(&[1]).unwrap().ones().collect::<Vec<_>>(), vec![0, 1]);
        let all: Vec<usize> = (0..c.len()).collect();
        assert_eq!(c.lower_cone(&all).unwrap().ones().collect::<Vec<_>>(), vec![0]);
        assert_eq!(c.upper_cone(&[1]).unwrap().ones().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(c.lower_cone(&[]), Err(OrderError::EmptyInput));

        let b = boolean_lattice(2);
        let atoms = b.atoms().unwrap();
        assert_eq!(b.lower_cone(&atoms).unwrap().ones().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn zero_divisors_small_cases() {
        assert_eq!(chain(4).zero_divisors().unwrap(), vec![0]);
        let b = boolean_lattice(2);
        assert_eq!(b.zero_divisors().unwrap(), vec![0, 1, 2]);
        assert_eq!(b.zdg_vertex_set().unwrap(), vec![1, 2]);
        assert_eq!(b.dense_elements().unwrap(), vec![3]);

        let antichain = Poset::from_covers(labels(2), &[]).unwrap();
        assert_eq!(antichain.zero_divisors(), Err(OrderError::NoZero));
    }

    #[test]
    fn annihilators() {
        let b = boolean_lattice(2);
        assert_eq!(b.annihilator(1).unwrap().ones().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(b.annihilator(0).unwrap().count_ones(..), 4);
    }

    #[test]
    fn atoms_and_covers() {
        assert_eq!(boolean_lattice(3).atoms().unwrap().len(), 3);
        assert_eq!(chain(4).atoms().unwrap(), vec![1]);
        assert_eq!(chain(3).covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(boolean_lattice(2).coatoms().unwrap(), vec![1, 2]);
    }

    #[test]
    fn diamond_is_not_0_distributive() {
        // 0 < a, b, c < 1
        let m3 = Poset::from_covers(labels(5), &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(m3.is_0_distributive(), Ok(false));
        assert_eq!(m3.is_1_distributive(), Ok(false));
        assert_eq!(chain(3).is_0_distributive(), Ok(true));
        assert_eq!(boolean_lattice(3).is_1_distributive(), Ok(true));
    }

    #[test]
    fn dual_swaps_bounds() {
        let b = boolean_lattice(2);
        let d = b.dual();
        assert_eq!(d.bottom(), b.top());
        assert_eq!(d.dual(), b);
        assert!(d.leq(3, 1));
    }
}
