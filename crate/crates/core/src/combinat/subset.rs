use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::MAX_GROUND;

/// A subset of the ground set `[m] = {1, ..., m}` stored as a bit vector.
///
/// Element `i` lives in bit `i - 1`. The ordering is by cardinality first and
/// numeric bit value second, which is a linear extension of inclusion; every
/// sorted collection of masks in this crate uses it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// The whole ground set `[m]`.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_GROUND);
        SubsetMask(((1u64 << m) - 1) as u32)
    }

    /// `{i}` for a 1-based element `i`.
    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=MAX_GROUND).contains(&i));
        SubsetMask(1 << (i - 1))
    }

    /// Builds a mask from 1-based elements, checking them against `m`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(m: usize, elements: I) -> Result<Self> {
        let mut bits = 0u32;
        for e in elements {
            if e == 0 || e > m {
                return Err(Error::ElementOutOfRange { element: e, m });
            }
            bits |= 1 << (e - 1);
        }
        Ok(SubsetMask(bits))
    }

    /// Parses the comma-separated form `"1,3,4"`; the empty string is `∅`.
    pub fn parse_list(s: &str, m: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SubsetMask::EMPTY);
        }
        let mut elements = Vec::new();
        for part in s.split(',') {
            let e: usize = part.trim().parse().map_err(|_| Error::Parse {
                field: format!("set \"{s}\""),
                message: format!("\"{}\" is not an element index", part.trim()),
            })?;
            elements.push(e);
        }
        let mask = SubsetMask::from_elements(m, elements.iter().copied())?;
        if mask.len() != elements.len() {
            return Err(Error::Parse {
                field: format!("set \"{s}\""),
                message: "repeated element".into(),
            });
        }
        Ok(mask)
    }

    /// Comma-separated ascending elements, the inverse of [`parse_list`](Self::parse_list).
    pub fn to_list_string(self) -> String {
        let parts: Vec<String> = self.elements().map(|e| e.to_string()).collect();
        parts.join(",")
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=32).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: SubsetMask) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    /// True if one of the two sets contains the other.
    pub fn comparable(self, other: SubsetMask) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }

    pub fn union(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub fn difference(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    pub fn with(self, i: usize) -> Self {
        self.union(SubsetMask::singleton(i))
    }

    pub fn without(self, i: usize) -> Self {
        self.difference(SubsetMask::singleton(i))
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Ascending 1-based elements.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, in (cardinality, bits) order.
    pub fn subsets(self) -> Vec<SubsetMask> {
        let mut out = Vec::with_capacity(1 << self.len());
        // standard submask walk, descending, then sorted
        let mut sub = self.0;
        loop {
            out.push(SubsetMask(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & self.0;
        }
        out.sort();
        out
    }

    /// All subsets of `[m]` in (cardinality, bits) order.
    pub fn all_subsets(m: usize) -> Vec<SubsetMask> {
        SubsetMask::full(m).subsets()
    }

    /// Lexicographic comparison of the ascending element lists.
    pub fn lex_cmp(self, other: SubsetMask) -> Ordering {
        self.elements().cmp(other.elements())
    }

    /// True if every element is at most `m`.
    pub fn within(self, m: usize) -> bool {
        self.is_subset(SubsetMask::full(m))
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Iterator over the elements of a [`SubsetMask`].
#[derive(Clone)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i as usize + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Shorthand display: `∅`, `134`, or `1,10,12` once two-digit elements appear.
impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        if self.elements().all(|e| e < 10) {
            for e in self.elements() {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_list_string())
        }
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_list_string())
    }
}

impl Serialize for SubsetMask {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_list_string())
    }
}

impl<'de> Deserialize<'de> for SubsetMask {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        SubsetMask::parse_list(&s, MAX_GROUND).map_err(serde::de::Error::custom)
    }
}

/// Builds a mask from literal 1-based elements. Panics on out-of-range input.
///
/// ```
/// use hclattice::{mask, SubsetMask};
/// assert_eq!(mask![1, 3].to_string(), "13");
/// assert_eq!(mask![], SubsetMask::EMPTY);
/// ```
#[macro_export]
macro_rules! mask {
    () => { $crate::SubsetMask::EMPTY };
    ($($e:expr),+ $(,)?) => {
        $crate::SubsetMask::from_elements($crate::MAX_GROUND, [$($e),+]).expect("element in range")
    };
}
