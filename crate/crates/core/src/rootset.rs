use std::cmp::Ordering;
use std::fmt;

/// Set of positive-root indices, stored as a fixed-width bitset.
///
/// Indices refer to [`RootSystem::positive_roots`](crate::RootSystem::positive_roots),
/// so iteration yields members in canonical root order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RootSet {
    words: Vec<u64>,
}

impl RootSet {
    pub fn empty(universe: usize) -> Self {
        RootSet {
            words: vec![0; universe.div_ceil(64).max(1)],
        }
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        RootSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        RootSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        RootSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical comparison: cardinality first, then the sorted member lists
    /// lexicographically.
    pub fn canonical_cmp(&self, other: &RootSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn behaves_like_btreeset(xs in proptest::collection::vec(0usize..150, 0..40),
                                 ys in proptest::collection::vec(0usize..150, 0..40)) {
            use std::collections::BTreeSet;
            let a = RootSet::from_indices(150, xs.iter().copied());
            let b = RootSet::from_indices(150, ys.iter().copied());
            let sa: BTreeSet<usize> = xs.into_iter().collect();
            let sb: BTreeSet<usize> = ys.into_iter().collect();
            prop_assert_eq!(a.to_vec(), sa.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(a.len(), sa.len());
            prop_assert_eq!(a.union(&b).to_vec(), sa.union(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersection(&b).to_vec(), sa.intersection(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.difference(&b).to_vec(), sa.difference(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.is_subset(&b), sa.is_subset(&sb));
        }
    }
}
