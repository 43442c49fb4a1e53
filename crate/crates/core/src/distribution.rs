use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::combinat::{check_ground, DistributiveLattice, SubsetMask};
use crate::error::{Error, Result};
use crate::Rational;

/// A nonnegative exact vector indexed by subsets of `[m]`.
///
/// `p_S` is the probability that exactly the variables in `S` take value 1.
/// Only positive entries are stored; a missing key is `0`. The vector need
/// not sum to one: every check in this crate is scale invariant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Distribution {
    m: usize,
    values: BTreeMap<SubsetMask, Rational>,
}

impl Distribution {
    pub fn new<I>(m: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetMask, Rational)>,
    {
        check_ground(m)?;
        let mut values = BTreeMap::new();
        for (s, v) in entries {
            if !s.within(m) {
                let element = s.elements().find(|&e| e > m).unwrap_or(0);
                return Err(Error::ElementOutOfRange { element, m });
            }
            if v < Rational::zero() {
                return Err(Error::NegativeValue {
                    set: s,
                    value: v.to_string(),
                });
            }
            if v.is_zero() {
                values.remove(&s);
            } else {
                values.insert(s, v);
            }
        }
        Ok(Distribution { m, values })
    }

    /// The all-zero vector on `2^[m]`.
    pub fn zero(m: usize) -> Result<Self> {
        Distribution::new(m, [])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `p_S`, zero when absent.
    pub fn get(&self, s: SubsetMask) -> Rational {
        self.values.get(&s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn value(&self, s: SubsetMask) -> Option<&Rational> {
        self.values.get(&s)
    }

    /// Positive entries in (cardinality, bits) order.
    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, &Rational)> {
        self.values.iter().map(|(s, v)| (*s, v))
    }

    /// `{S : p_S > 0}`.
    pub fn support(&self) -> Vec<SubsetMask> {
        self.values.keys().copied().collect()
    }

    /// The support as a lattice, if it is closed under union and intersection.
    pub fn support_lattice(&self) -> Result<DistributiveLattice> {
        DistributiveLattice::new(self.m, self.values.keys().copied())
    }

    pub fn total(&self) -> Rational {
        self.values
            .values()
            .fold(Rational::zero(), |acc, v| acc + v)
    }

    pub fn is_normalized(&self) -> bool {
        self.total().is_one()
    }

    /// Divides by the total mass. The zero vector is returned unchanged.
    pub fn normalized(&self) -> Self {
        let z = self.total();
        if z.is_zero() {
            return self.clone();
        }
        Distribution {
            m: self.m,
            values: self.values.iter().map(|(s, v)| (*s, v / &z)).collect(),
        }
    }

    /// Multiplies every entry by a positive constant.
    pub fn scaled(&self, factor: &Rational) -> Self {
        Distribution {
            m: self.m,
            values: self.values.iter().map(|(s, v)| (*s, v * factor)).collect(),
        }
    }

    /// Replaces one entry, keeping the rest.
    pub fn with_value(&self, s: SubsetMask, v: Rational) -> Result<Self> {
        let mut entries: Vec<_> = self.values.clone().into_iter().collect();
        entries.push((s, v));
        Distribution::new(self.m, entries)
    }
}
