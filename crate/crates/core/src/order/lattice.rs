use std::ops::Deref;

use super::{OrderError, Poset};

/// A finite (hence bounded) lattice: a poset with precomputed meet and join
/// tables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
}

impl Deref for Lattice {
    type Target = Poset;

    fn deref(&self) -> &Poset {
        &self.poset
    }
}

impl Lattice {
    /// Computes meets and joins, failing on the first pair without one.
    pub fn from_poset(poset: Poset) -> Result<Self, OrderError> {
        let n = poset.len();
        if n == 0 {
            return Err(OrderError::EmptyPoset);
        }
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let m = extremum(a, b, |x| poset.down_set(x))
                    .ok_or_else(|| OrderError::NoMeet(poset.label(a).into(), poset.label(b).into()))?;
                let j = extremum(a, b, |x| poset.up_set(x))
                    .ok_or_else(|| OrderError::NoJoin(poset.label(a).into(), poset.label(b).into()))?;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        Ok(Lattice { poset, meet, join })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn zero(&self) -> usize {
        self.poset.bottom().expect("finite lattices are bounded")
    }

    pub fn one(&self) -> usize {
        self.poset.top().expect("finite lattices are bounded")
    }

    /// Lattice form: `a ∧ b = 0` and `a ∧ c = 0` imply `a ∧ (b ∨ c) = 0`.
    pub fn is_0_distributive(&self) -> bool {
        self.find_0_distributivity_violation().is_none()
    }

    /// Lattice form: `a ∨ b = 1` and `a ∨ c = 1` imply `a ∨ (b ∧ c) = 1`.
    pub fn is_1_distributive(&self) -> bool {
        self.find_1_distributivity_violation().is_none()
    }

    /// A triple `(a, b, c)` breaking 0-distributivity.
    pub fn find_0_distributivity_violation(&self) -> Option<(usize, usize, usize)> {
        let zero = self.zero();
        triple_violation(self.len(), |x, y| self.meet(x, y), |x, y| self.join(x, y), zero)
    }

    pub fn find_1_distributivity_violation(&self) -> Option<(usize, usize, usize)> {
        let one = self.one();
        triple_violation(self.len(), |x, y| self.join(x, y), |x, y| self.meet(x, y), one)
    }

    /// `L^∂`: order reversed, meet and join swapped.
    pub fn dual(&self) -> Lattice {
        Lattice { poset: self.poset.dual(), meet: self.join.clone(), join: self.meet.clone() }
    }

    /// Replaces element `x` by a chain of `m` elements labelled `x_1 < ... < x_m`
    /// (the label is kept unchanged when `m == 1`).
    pub fn chain_replace(&self, x: usize, m: usize) -> Result<Lattice, OrderError> {
        if x >= self.len() {
            return Err(OrderError::InvalidElement(x));
        }
        let base = self.label(x);
        let labels = if m == 1 { vec![base.to_owned()] } else { (1..=m).map(|i| format!("{base}_{i}")).collect() };
        self.chain_replace_labeled(x, labels)
    }

    /// Chain replacement with caller-chosen labels, listed bottom to top.
    ///
    /// The chain minimum sits above everything strictly below `x`, the
    /// maximum below everything strictly above `x`, and the chain elements
    /// are incomparable with whatever `x` was incomparable with.
    pub fn chain_replace_labeled(&self, x: usize, chain: Vec<String>) -> Result<Lattice, OrderError> {
        if x >= self.len() {
            return Err(OrderError::InvalidElement(x));
        }
        if chain.is_empty() {
            return Err(OrderError::EmptyChain);
        }
        let m = chain.len();
        // new index -> (old element, position in chain)
        let mut origin: Vec<(usize, usize)> = Vec::with_capacity(self.len() + m - 1);
        let mut labels = Vec::with_capacity(self.len() + m - 1);
        for old in 0..self.len() {
            if old == x {
                for (pos, l) in chain.iter().enumerate() {
                    origin.push((x, pos));
                    labels.push(l.clone());
                }
            } else {
                origin.push((old, 0));
                labels.push(self.label(old).to_owned());
            }
        }
        let poset = Poset::from_fn(labels, |i, j| {
            let ((a, pa), (b, pb)) = (origin[i], origin[j]);
            if a == x && b == x {
                pa <= pb
            } else {
                self.poset.leq(a, b)
            }
        })?;
        Lattice::from_poset(poset)
    }

    /// True when the lattice is isomorphic to the power set of its atoms:
    /// exactly `2^k` elements for `k` atoms and `x <= y` iff the atoms below
    /// `x` are among those below `y`.
    pub fn is_boolean(&self) -> bool {
        let atoms = self.atoms().expect("lattices have a least element");
        if atoms.len() >= 63 || self.len() != 1usize << atoms.len() {
            return false;
        }
        let keys: Vec<u64> = (0..self.len())
            .map(|e| atoms.iter().enumerate().filter(|&(_, &a)| self.leq(a, e)).fold(0u64, |k, (i, _)| k | 1 << i))
            .collect();
        let mut seen = vec![false; self.len()];
        for &k in &keys {
            if std::mem::replace(&mut seen[k as usize], true) {
                return false;
            }
        }
        (0..self.len()).all(|a| (0..self.len()).all(|b| self.leq(a, b) == (keys[a] & !keys[b] == 0)))
    }
}

/// Greatest element of `cone(a) ∩ cone(b)` with respect to containment of
/// cones, if it exists.
fn extremum<'a, F>(a: usize, b: usize, cone: F) -> Option<usize>
where
    F: Fn(usize) -> &'a fixedbitset::FixedBitSet,
{
    let mut common = cone(a).clone();
    common.intersect_with(cone(b));
    common.ones().find(|&m| common.is_subset(cone(m)))
}

fn triple_violation(
    n: usize,
    meet: impl Fn(usize, usize) -> usize,
    join: impl Fn(usize, usize) -> usize,
    bound: usize,
) -> Option<(usize, usize, usize)> {
    for a in 0..n {
        let perp: Vec<usize> = (0..n).filter(|&b| meet(a, b) == bound).collect();
        for (i, &b) in perp.iter().enumerate() {
            for &c in &perp[i + 1..] {
                if meet(a, join(b, c)) != bound {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}
