use std::fmt;

macro_rules! bitset {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(u64);

        impl $name {
            pub const fn empty() -> Self {
                Self(0)
            }

            pub fn full(n: usize) -> Self {
                assert!(n <= 64);
                if n == 64 { Self(u64::MAX) } else { Self((1u64 << n) - 1) }
            }

            pub fn singleton(i: usize) -> Self {
                Self(1 << i)
            }

            pub fn from_bits(bits: u64) -> Self {
                Self(bits)
            }

            pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> Self {
                let mut s = Self::empty();
                for i in items {
                    s.insert(i);
                }
                s
            }

            pub fn bits(self) -> u64 {
                self.0
            }

            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            pub fn contains(self, i: usize) -> bool {
                self.0 >> i & 1 == 1
            }

            pub fn insert(&mut self, i: usize) {
                self.0 |= 1 << i;
            }

            pub fn remove(&mut self, i: usize) {
                self.0 &= !(1 << i);
            }

            pub fn with(self, i: usize) -> Self {
                Self(self.0 | 1 << i)
            }

            pub fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            pub fn intersection(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            pub fn difference(self, other: Self) -> Self {
                Self(self.0 & !other.0)
            }

            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            pub fn is_disjoint(self, other: Self) -> bool {
                self.0 & other.0 == 0
            }

            pub fn min(self) -> Option<usize> {
                (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
            }

            pub fn iter(self) -> impl Iterator<Item = usize> {
                let mut bits = self.0;
                std::iter::from_fn(move || {
                    if bits == 0 {
                        return None;
                    }
                    let i = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i)
                })
            }

            /// All subsets of `self`, in increasing bit order.
            pub fn subsets(self) -> impl Iterator<Item = Self> {
                let full = self.0;
                let mut next = Some(0u64);
                std::iter::from_fn(move || {
                    let cur = next?;
                    next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
                    Some(Self(cur))
                })
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }
    };
}

bitset!(
    /// Subset of the edges of a host graph (bit `i` = edge `i`).
    EdgeSet
);
bitset!(
    /// Subset of the vertices of a host graph; a subcurve.
    VertexSet
);
