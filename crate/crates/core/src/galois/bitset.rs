use std::fmt;
use std::ops::{BitAnd, BitOr};

/// A subset of `0..64` packed into one word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrickSet(u64);

impl BrickSet {
    pub const EMPTY: BrickSet = BrickSet(0);

    pub fn from_bits(bits: u64) -> Self {
        BrickSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn full(m: usize) -> Self {
        if m >= 64 {
            BrickSet(u64::MAX)
        } else {
            BrickSet((1u64 << m) - 1)
        }
    }

    pub fn singleton(b: usize) -> Self {
        BrickSet(1u64 << b)
    }

    #[inline]
    pub fn contains(self, b: usize) -> bool {
        self.0 >> b & 1 == 1
    }

    pub fn insert(&mut self, b: usize) {
        self.0 |= 1u64 << b;
    }

    pub fn remove(&mut self, b: usize) {
        self.0 &= !(1u64 << b);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: BrickSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn minus(self, other: BrickSet) -> BrickSet {
        BrickSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(b)
            }
        })
    }
}

impl BitAnd for BrickSet {
    type Output = BrickSet;
    fn bitand(self, rhs: BrickSet) -> BrickSet {
        BrickSet(self.0 & rhs.0)
    }
}

impl BitOr for BrickSet {
    type Output = BrickSet;
    fn bitor(self, rhs: BrickSet) -> BrickSet {
        BrickSet(self.0 | rhs.0)
    }
}

impl FromIterator<usize> for BrickSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = BrickSet::EMPTY;
        for b in iter {
            s.insert(b);
        }
        s
    }
}

impl fmt::Debug for BrickSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
