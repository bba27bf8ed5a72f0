//! Fixed-capacity subsets of a carrier `{0, .., n-1}` with `n <= 64`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest carrier a [`Subset`] can index.
pub const MAX_CARRIER: usize = 64;

/// A subset of the carrier stored as a bitmask; bit `i` set means element `i` is present.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The whole carrier of size `n`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_CARRIER);
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        let mut s = 0u64;
        for i in it {
            s |= 1u64 << i;
        }
        Subset(s)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn union(self, o: Subset) -> Subset {
        Subset(self.0 | o.0)
    }

    #[inline]
    pub fn inter(self, o: Subset) -> Subset {
        Subset(self.0 & o.0)
    }

    #[inline]
    pub fn minus(self, o: Subset) -> Subset {
        Subset(self.0 & !o.0)
    }

    /// Complement relative to a carrier of size `n`.
    #[inline]
    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n).minus(self)
    }

    #[inline]
    pub fn is_subset(self, o: Subset) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn intersects(self, o: Subset) -> bool {
        self.0 & o.0 != 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest member, if any.
    pub fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Members in increasing order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, starting from the empty set, in increasing bitmask order.
    pub fn submasks(self) -> Submasks {
        Submasks {
            set: self.0,
            next: Some(0),
        }
    }

    /// Every subset of a carrier of size `n`, in bitmask order. Requires `n < 64`.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n < 64, "cannot enumerate all subsets of a 64-element carrier");
        (0u64..(1u64 << n)).map(Subset)
    }
}

/// Iterator over the members of a subset.
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// Iterator over the subsets of a fixed set (carry-rippler enumeration).
#[derive(Clone)]
pub struct Submasks {
    set: u64,
    next: Option<u64>,
}

impl Iterator for Submasks {
    type Item = Subset;

    #[inline]
    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        let nxt = cur.wrapping_sub(self.set) & self.set;
        self.next = if nxt == 0 { None } else { Some(nxt) };
        Some(Subset(cur))
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}
