//! Subsets of a small indexed universe, stored as bitmasks.
//!
//! All powerset enumeration runs in increasing numeric order of the mask,
//! which fixes one deterministic order everywhere in the crate.

use std::fmt;

/// Hard cap on point universes (tables have `2^n` entries).
pub const MAX_UNIVERSE: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= 31);
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        let mut mask = 0u32;
        for i in it {
            mask |= 1 << i;
        }
        Subset(mask)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32u32).filter(move |i| self.0 >> i & 1 == 1).map(|i| i as usize)
    }
}

/// All subsets of `{0, .., n-1}` in mask order.
pub fn powerset(n: usize) -> impl Iterator<Item = Subset> {
    debug_assert!(n <= MAX_UNIVERSE);
    (0..(1u64 << n)).map(|m| Subset(m as u32))
}

/// `{a,b}`-style rendering against a universe of names, in universe order.
pub fn render(names: &[String], s: Subset) -> String {
    let parts: Vec<&str> = s
        .iter()
        .filter(|&i| i < names.len())
        .map(|i| names[i].as_str())
        .collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powerset_is_mask_ordered() {
        let all: Vec<Subset> = powerset(3).collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], Subset::EMPTY);
        assert_eq!(all[7], Subset::full(3));
        assert!(all.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn set_algebra() {
        let a = Subset::from_indices([0, 2]);
        let b = Subset::from_indices([1, 2]);
        assert_eq!(a.union(b), Subset::from_indices([0, 1, 2]));
        assert_eq!(a.intersection(b), Subset::singleton(2));
        assert_eq!(a.difference(b), Subset::singleton(0));
        assert!(a.is_subset_of(Subset::full(3)));
        assert!(!a.is_subset_of(b));
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn rendering() {
        let names: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        assert_eq!(render(&names, Subset::EMPTY), "{}");
        assert_eq!(render(&names, Subset::full(2)), "{x,y}");
    }
}
