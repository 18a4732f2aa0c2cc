//! Fixed-width index sets.
//!
//! Every universe in this crate is small: edges of a complete geometric graph
//! on at most 16 points (120 edges), ground sets of desk-scale matroids,
//! vertices of a hypergraph.  A single `u128` word covers all of them, keeps
//! set algebra branch-free, and makes sets `Copy`.

/// Largest universe a [`BitSet`] can represent.
pub const MAX_UNIVERSE: usize = 128;

/// A set of indices in `0..128`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BitSet(u128);

impl BitSet {
    pub const EMPTY: BitSet = BitSet(0);

    /// The set `{0, 1, ..., n-1}`.
    pub fn all_below(n: usize) -> BitSet {
        assert!(n <= MAX_UNIVERSE, "universe too large for BitSet");
        if n == MAX_UNIVERSE {
            BitSet(u128::MAX)
        } else {
            BitSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> BitSet {
        assert!(i < MAX_UNIVERSE);
        BitSet(1u128 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_UNIVERSE && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_UNIVERSE);
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < MAX_UNIVERSE);
        self.0 &= !(1u128 << i);
    }

    pub fn with(self, i: usize) -> BitSet {
        let mut s = self;
        s.insert(i);
        s
    }

    pub fn without(self, i: usize) -> BitSet {
        let mut s = self;
        s.remove(i);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: BitSet) -> BitSet {
        BitSet(self.0 | other.0)
    }

    pub fn intersection(self, other: BitSet) -> BitSet {
        BitSet(self.0 & other.0)
    }

    pub fn difference(self, other: BitSet) -> BitSet {
        BitSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: BitSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: BitSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> BitSet {
        let mut s = BitSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
