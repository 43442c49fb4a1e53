use std::collections::BTreeSet;

use crate::combinat::{check_ground, Graph, Poset, SubsetMask};
use crate::error::{Error, Result};

/// A sublattice of the Boolean lattice `2^[m]`: a family of subsets closed
/// under pairwise union and intersection.
///
/// Elements are kept sorted by (cardinality, bits), which is a linear
/// extension of inclusion.
#[derive(Clone, Debug)]
pub struct DistributiveLattice {
    m: usize,
    elements: Vec<SubsetMask>,
    member: Vec<bool>,
    natural: bool,
}

impl PartialEq for DistributiveLattice {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.elements == other.elements
    }
}

impl Eq for DistributiveLattice {}

impl DistributiveLattice {
    /// Wraps a family that must already be closed under union and intersection.
    pub fn new<I: IntoIterator<Item = SubsetMask>>(m: usize, sets: I) -> Result<Self> {
        check_ground(m)?;
        let family: BTreeSet<SubsetMask> = sets.into_iter().collect();
        if family.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if let Some(&bad) = family.iter().find(|s| !s.within(m)) {
            let element = bad.elements().find(|&e| e > m).unwrap_or(0);
            return Err(Error::ElementOutOfRange { element, m });
        }
        let lattice = Self::from_sorted(m, family.into_iter().collect());
        for (k, &s) in lattice.elements.iter().enumerate() {
            for &t in &lattice.elements[k + 1..] {
                if !lattice.contains(s.union(t)) || !lattice.contains(s.intersection(t)) {
                    return Err(Error::NotLattice { left: s, right: t });
                }
            }
        }
        Ok(lattice)
    }

    fn from_sorted(m: usize, elements: Vec<SubsetMask>) -> Self {
        let mut member = vec![false; 1 << m];
        for s in &elements {
            member[s.bits() as usize] = true;
        }
        let mut lattice = DistributiveLattice {
            m,
            elements,
            member,
            natural: false,
        };
        lattice.natural = lattice.compute_natural();
        lattice
    }

    /// The full Boolean lattice `2^[m]`.
    pub fn boolean(m: usize) -> Result<Self> {
        check_ground(m)?;
        Ok(Self::from_sorted(m, SubsetMask::all_subsets(m)))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Elements in (cardinality, bits) order.
    pub fn elements(&self) -> &[SubsetMask] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, s: SubsetMask) -> bool {
        s.within(self.m) && self.member[s.bits() as usize]
    }

    /// Position of `s` in the linear extension.
    pub fn index_of(&self, s: SubsetMask) -> Option<usize> {
        self.elements.binary_search(&s).ok()
    }

    /// Contains `∅` and `[m]`, and every cover step adds exactly one element.
    ///
    /// Finite distributive lattices are graded, so it is enough that each
    /// nonempty element can drop a single element and stay in the lattice:
    /// descending that way builds a maximal chain of length `#S`.
    pub fn is_natural(&self) -> bool {
        self.natural
    }

    fn compute_natural(&self) -> bool {
        self.contains(SubsetMask::EMPTY)
            && self.contains(SubsetMask::full(self.m))
            && self
                .elements
                .iter()
                .filter(|s| !s.is_empty())
                .all(|&s| s.elements().any(|i| self.contains(s.without(i))))
    }

    /// The elements of `L` covered by `s`.
    ///
    /// Any lower cover `T` of `s` equals the largest lattice element inside
    /// `s \ {i}` for each `i` in `s \ T`, so the covers are the maximal ones
    /// among those candidates.
    pub fn lower_covers(&self, s: SubsetMask) -> Vec<SubsetMask> {
        if self.natural {
            return s
                .elements()
                .map(|i| s.without(i))
                .filter(|&t| self.contains(t))
                .collect();
        }
        let mut candidates = BTreeSet::new();
        for i in s.elements() {
            let target = s.without(i);
            let mut below: Option<SubsetMask> = None;
            for &t in &self.elements {
                if t.is_subset(target) {
                    below = Some(below.map_or(t, |b| b.union(t)));
                }
            }
            if let Some(b) = below {
                candidates.insert(b);
            }
        }
        let candidates: Vec<_> = candidates.into_iter().collect();
        candidates
            .iter()
            .copied()
            .filter(|&c| !candidates.iter().any(|&d| c.is_proper_subset(d)))
            .collect()
    }

    /// Elements covering exactly one other element, in lattice order.
    pub fn join_irreducibles(&self) -> Vec<SubsetMask> {
        self.elements
            .iter()
            .copied()
            .filter(|&s| self.lower_covers(s).len() == 1)
            .collect()
    }

    /// The poset `P` on `[m]` with `J(P) = L`.
    ///
    /// Each join-irreducible `S` with lower cover `T` contributes the single
    /// element of `S \ T`, and `S` itself is the principal ideal of that
    /// element; the order is inclusion of these ideals.
    pub fn underlying_poset(&self) -> Result<Poset> {
        if !self.natural {
            return Err(Error::NotNatural);
        }
        let mut down = vec![SubsetMask::EMPTY; self.m];
        for s in self.join_irreducibles() {
            let t = self.lower_covers(s)[0];
            let i = s
                .difference(t)
                .min_element()
                .expect("natural cover adds one element");
            down[i - 1] = s;
        }
        Poset::from_downsets(self.m, down)
    }

    /// The Hasse diagram of the underlying poset, as an undirected graph.
    pub fn minimal_graph(&self) -> Result<Graph> {
        let p = self.underlying_poset()?;
        Graph::from_edges(self.m, p.covers())
    }
}

/// All order ideals of `p`, as a natural distributive lattice.
pub fn order_ideals(p: &Poset) -> DistributiveLattice {
    let ideals = SubsetMask::all_subsets(p.m())
        .into_iter()
        .filter(|&s| p.is_order_ideal(s))
        .collect();
    DistributiveLattice::from_sorted(p.m(), ideals)
}

/// The smallest sublattice of `2^[m]` containing `family`.
///
/// Intersections are closed first, then unions of those; by distributivity
/// of set operations the result is closed under both.
pub fn lattice_close<I: IntoIterator<Item = SubsetMask>>(
    m: usize,
    family: I,
) -> Result<DistributiveLattice> {
    check_ground(m)?;
    let family: BTreeSet<SubsetMask> = family.into_iter().collect();
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if let Some(&bad) = family.iter().find(|s| !s.within(m)) {
        let element = bad.elements().find(|&e| e > m).unwrap_or(0);
        return Err(Error::ElementOutOfRange { element, m });
    }
    let meets = close_under(family, SubsetMask::intersection);
    let lattice = close_under(meets, SubsetMask::union);
    Ok(DistributiveLattice::from_sorted(
        m,
        lattice.into_iter().collect(),
    ))
}

fn close_under(
    start: BTreeSet<SubsetMask>,
    op: fn(SubsetMask, SubsetMask) -> SubsetMask,
) -> BTreeSet<SubsetMask> {
    let mut closed: Vec<SubsetMask> = Vec::new();
    let mut seen = start.clone();
    let mut queue: Vec<SubsetMask> = start.into_iter().collect();
    while let Some(s) = queue.pop() {
        for &t in &closed {
            let u = op(s, t);
            if seen.insert(u) {
                queue.push(u);
            }
        }
        closed.push(s);
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask;

    fn fig1_lattice() -> DistributiveLattice {
        order_ideals(&Poset::from_covers(4, &[(2, 1), (2, 3), (4, 3)]).unwrap())
    }

    fn fig2_sets() -> Vec<SubsetMask> {
        vec![
            SubsetMask::EMPTY,
            mask![1, 2],
            mask![3],
            mask![4],
            mask![3, 4],
            mask![1, 2, 3],
            mask![1, 2, 4],
            mask![1, 2, 3, 4],
        ]
    }

    #[test]
    fn order_ideals_of_examples() {
        let chain = order_ideals(&Poset::chain(3).unwrap());
        assert_eq!(
            chain.elements(),
            &[SubsetMask::EMPTY, mask![1], mask![1, 2], mask![1, 2, 3]]
        );
        let anti = order_ideals(&Poset::antichain(2).unwrap());
        assert_eq!(anti.len(), 4);
        let fig1 = fig1_lattice();
        let expected: BTreeSet<_> = [
            SubsetMask::EMPTY,
            mask![1],
            mask![3],
            mask![1, 3],
            mask![3, 4],
            mask![1, 2, 3],
            mask![1, 3, 4],
            mask![1, 2, 3, 4],
        ]
        .into_iter()
        .collect();
        assert_eq!(
            fig1.elements().iter().copied().collect::<BTreeSet<_>>(),
            expected
        );
        assert!(fig1.is_natural());
    }

    #[test]
    fn closure_examples() {
        let l = lattice_close(2, [SubsetMask::EMPTY, mask![1, 2]]).unwrap();
        assert_eq!(l.elements(), &[SubsetMask::EMPTY, mask![1, 2]]);
        let l = lattice_close(2, [mask![1], mask![2]]).unwrap();
        assert_eq!(l.len(), 4);
        let l = lattice_close(4, fig2_sets()).unwrap();
        assert_eq!(l.len(), 8);
        assert!(lattice_close(2, []).is_err());
    }

    #[test]
    fn naturality() {
        let two = DistributiveLattice::new(2, [SubsetMask::EMPTY, mask![1, 2]]).unwrap();
        assert!(!two.is_natural());
        assert!(DistributiveLattice::boolean(5).unwrap().is_natural());
        let fig2 = DistributiveLattice::new(4, fig2_sets()).unwrap();
        assert!(!fig2.is_natural());
        assert_eq!(fig2.underlying_poset(), Err(Error::NotNatural));
        assert_eq!(fig2.minimal_graph().unwrap_err(), Error::NotNatural);
        // a chain missing [m]
        let short = DistributiveLattice::new(2, [SubsetMask::EMPTY, mask![1]]).unwrap();
        assert!(!short.is_natural());
    }

    #[test]
    fn new_rejects_unclosed_families() {
        let err = DistributiveLattice::new(2, [mask![1], mask![2]]).unwrap_err();
        assert!(matches!(err, Error::NotLattice { .. }));
    }

    #[test]
    fn join_irreducibles_examples() {
        assert_eq!(
            fig1_lattice().join_irreducibles(),
            vec![mask![1], mask![3], mask![3, 4], mask![1, 2, 3]]
        );
        assert_eq!(
            DistributiveLattice::boolean(2).unwrap().join_irreducibles(),
            vec![mask![1], mask![2]]
        );
        let chain = order_ideals(&Poset::chain(3).unwrap());
        assert_eq!(
            chain.join_irreducibles(),
            vec![mask![1], mask![1, 2], mask![1, 2, 3]]
        );
        // unnatural lattice: poset elements 12, 3, 4
        let fig2 = DistributiveLattice::new(4, fig2_sets()).unwrap();
        assert_eq!(
            fig2.join_irreducibles(),
            vec![mask![3], mask![4], mask![1, 2]]
        );
        assert_eq!(fig2.lower_covers(mask![1, 2, 3, 4]).len(), 3);
    }

    #[test]
    fn underlying_poset_examples() {
        let p = fig1_lattice().underlying_poset().unwrap();
        assert_eq!(p.covers(), &[(2, 1), (2, 3), (4, 3)]);
        let anti = DistributiveLattice::boolean(3)
            .unwrap()
            .underlying_poset()
            .unwrap();
        assert!(anti.covers().is_empty());
        let chain = Poset::chain(3).unwrap();
        assert_eq!(order_ideals(&chain).underlying_poset().unwrap(), chain);
    }

    #[test]
    fn minimal_graph_examples() {
        let g = fig1_lattice().minimal_graph().unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (2, 3), (3, 4)]);
        let g = DistributiveLattice::boolean(4)
            .unwrap()
            .minimal_graph()
            .unwrap();
        assert!(g.edges().is_empty());
        let g = order_ideals(&Poset::chain(3).unwrap())
            .minimal_graph()
            .unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
    }
}
