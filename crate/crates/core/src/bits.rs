//! Fixed-width bitsets over the weights of a cominuscule space.

use serde::{Serialize, Serializer};
use std::fmt;

/// Maximum number of weights supported by [`Bits`].
pub const MAX_BITS: usize = 128;

/// A set of weight indices, stored as a 128-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits(pub u128);

impl Bits {
    pub const EMPTY: Bits = Bits(0);

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Bits {
        debug_assert!(n <= MAX_BITS);
        if n == MAX_BITS {
            Bits(u128::MAX)
        } else {
            Bits((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Bits {
        Bits(1u128 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Bits {
        it.into_iter().fold(Bits::EMPTY, |b, i| b.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Bits {
        Bits(self.0 | 1u128 << i)
    }

    pub fn without(self, i: usize) -> Bits {
        Bits(self.0 & !(1u128 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Bits) -> Bits {
        Bits(self.0 | o.0)
    }

    pub fn intersect(self, o: Bits) -> Bits {
        Bits(self.0 & o.0)
    }

    pub fn minus(self, o: Bits) -> Bits {
        Bits(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Bits) -> bool {
        self.0 & !o.0 == 0
    }

    /// Complement inside `{0, ..., n-1}`.
    pub fn complement(self, n: usize) -> Bits {
        Bits::full(n).minus(self)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for Bits {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_algebra() {
        let a = Bits::from_indices([0, 3, 127]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(127) && !a.contains(1));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 3, 127]);
        assert_eq!(Bits::full(128).len(), 128);
        assert_eq!(a.complement(4), Bits::from_indices([1, 2]));
        assert!(Bits::from_indices([3]).is_subset(a));
        assert_eq!(a.without(3).with(5), Bits::from_indices([0, 5, 127]));
    }
}
