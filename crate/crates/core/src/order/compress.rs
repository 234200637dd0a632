//! The atom partition of a poset with 0 and the compressed poset `[P]`.

use crate::index_set::IndexSet;

use super::{OrderError, Poset};

/// One class `P_I`: the nonzero elements whose atoms below are exactly `q_i`, `i ∈ I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomClass {
    pub key: IndexSet,
    /// Element indices of the source poset, ascending.
    pub members: Vec<usize>,
}

/// `[P] = [P]' ∪ {P_0}` together with the class bookkeeping.
#[derive(Debug, Clone)]
pub struct CompressedPoset {
    /// Order on the classes; element `i` of this poset is `classes[i]`.
    pub poset: Poset,
    /// `classes[0]` is `P_0 = {0}`; the rest are sorted by key.
    pub classes: Vec<AtomClass>,
    class_of: Vec<usize>,
}

impl CompressedPoset {
    /// Index of the class containing element `x` of the source poset.
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_with_key(&self, key: IndexSet) -> Option<usize> {
        self.classes.iter().position(|c| c.key == key)
    }
}

/// Atoms below `x`, numbered `1..=n` in element order.
fn atom_key(poset: &Poset, atoms: &[usize], x: usize) -> IndexSet {
    IndexSet::from_members(atoms.iter().enumerate().filter(|&(_, &a)| poset.leq(a, x)).map(|(i, _)| i + 1))
}

/// Partition of `P \ {0}` by the set of atoms below each element.
pub fn atom_partition(poset: &Poset) -> Result<Vec<AtomClass>, OrderError> {
    let zero = poset.require_bottom()?;
    let atoms = poset.atoms()?;
    if atoms.len() > IndexSet::MAX_MEMBER {
        return Err(OrderError::TooManyAtoms(atoms.len()));
    }
    let mut classes: std::collections::BTreeMap<IndexSet, Vec<usize>> = Default::default();
    for x in (0..poset.len()).filter(|&x| x != zero) {
        let key = atom_key(poset, &atoms, x);
        // in a finite poset every nonzero element dominates an atom
        assert!(!key.is_empty(), "nonzero element {:?} above no atom", poset.label(x));
        classes.entry(key).or_default().push(x);
    }
    Ok(classes.into_iter().map(|(key, members)| AtomClass { key, members }).collect())
}

/// `[P]`, ordered by inclusion of atom keys.
///
/// Each class is labelled by the smallest label among its members.
pub fn compress(poset: &Poset) -> Result<CompressedPoset, OrderError> {
    let zero = poset.require_bottom()?;
    let mut classes = vec![AtomClass { key: IndexSet::empty(), members: vec![zero] }];
    classes.extend(atom_partition(poset)?);

    let mut class_of = vec![0; poset.len()];
    for (c, class) in classes.iter().enumerate() {
        for &x in &class.members {
            class_of[x] = c;
        }
    }
    let labels = classes.iter().map(|c| c.members.iter().map(|&m| poset.label(m)).min().unwrap().to_owned()).collect();
    let order = Poset::from_fn(labels, |i, j| classes[i].key.is_subset(classes[j].key))?;
    Ok(CompressedPoset { poset: order, classes, class_of })
}

/// Class order read off annihilators: `P_I <= P_J` iff `b^⊥ ⊆ a^⊥` for some
/// `a ∈ P_I`, `b ∈ P_J`; `P_0` sits below everything. Entry `[i][j]` refers
/// to `compressed.classes`.
pub fn annihilator_class_order(poset: &Poset, compressed: &CompressedPoset) -> Result<Vec<Vec<bool>>, OrderError> {
    let perps = (0..poset.len()).map(|x| poset.annihilator(x)).collect::<Result<Vec<_>, _>>()?;
    let classes = &compressed.classes;
    Ok((0..classes.len())
        .map(|i| {
            (0..classes.len())
                .map(|j| {
                    i == 0
                        || (j != 0
                            && classes[i]
                                .members
                                .iter()
                                .any(|&a| classes[j].members.iter().any(|&b| perps[b].is_subset(&perps[a]))))
                })
                .collect()
        })
        .collect())
}
