use std::collections::BTreeSet;

use crate::combinat::{check_ground, Poset, SubsetMask};
use crate::error::{Error, Result};

/// A simple undirected graph on `[m]`, stored as neighbourhood masks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    m: usize,
    adj: Vec<SubsetMask>,
}

/// All cliques of a graph (including `∅` and the singletons) and the
/// inclusion-maximal ones, both in (cardinality, bits) order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cliques {
    pub all: Vec<SubsetMask>,
    pub maximal: Vec<SubsetMask>,
}

impl Graph {
    /// Builds a graph from unordered edges; loops and repeated edges are errors.
    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_ground(m)?;
        let mut adj = vec![SubsetMask::EMPTY; m];
        for &(i, j) in edges {
            for e in [i, j] {
                if e == 0 || e > m {
                    return Err(Error::ElementOutOfRange { element: e, m });
                }
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            if adj[i - 1].contains(j) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{i},{j}}}")));
            }
            adj[i - 1] = adj[i - 1].with(j);
            adj[j - 1] = adj[j - 1].with(i);
        }
        Ok(Graph { m, adj })
    }

    pub fn empty(m: usize) -> Result<Self> {
        Graph::from_edges(m, &[])
    }

    pub fn complete(m: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 1..=m {
            for j in i + 1..=m {
                edges.push((i, j));
            }
        }
        Graph::from_edges(m, &edges)
    }

    /// The path `1 - 2 - ... - m`.
    pub fn path(m: usize) -> Result<Self> {
        let edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
        Graph::from_edges(m, &edges)
    }

    /// The cycle `1 - 2 - ... - m - 1`; needs `m >= 3`.
    pub fn cycle(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidGraph(
                "a cycle needs at least 3 vertices".into(),
            ));
        }
        let mut edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
        edges.push((1, m));
        Graph::from_edges(m, &edges)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbours(&self, i: usize) -> SubsetMask {
        self.adj[i - 1]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i - 1].contains(j)
    }

    /// Edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.m {
            for j in self.adj[i - 1].elements().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    /// Pairs `(i, j)`, `i < j`, that are not edges.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.m {
            for j in i + 1..=self.m {
                if !self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.m == other.m
            && self
                .adj
                .iter()
                .zip(&other.adj)
                .all(|(a, b)| a.is_subset(*b))
    }

    pub fn is_clique(&self, s: SubsetMask) -> bool {
        s.elements()
            .all(|i| s.without(i).is_subset(self.adj[i - 1]))
    }

    /// Adds an edge, returning a new graph. Existing edges are left alone.
    pub fn with_edge(&self, i: usize, j: usize) -> Result<Self> {
        if self.has_edge(i, j) {
            return Ok(self.clone());
        }
        let mut edges = self.edges();
        edges.push((i, j));
        Graph::from_edges(self.m, &edges)
    }

    /// Maximal cliques by Bron–Kerbosch with pivoting on bitmasks; all cliques
    /// as the downward closure of the maximal ones.
    pub fn cliques(&self) -> Cliques {
        let mut maximal = Vec::new();
        self.bron_kerbosch(
            SubsetMask::EMPTY,
            SubsetMask::full(self.m),
            SubsetMask::EMPTY,
            &mut maximal,
        );
        maximal.sort();
        let mut all = BTreeSet::new();
        for &c in &maximal {
            all.extend(c.subsets());
        }
        Cliques {
            all: all.into_iter().collect(),
            maximal,
        }
    }

    fn bron_kerbosch(
        &self,
        r: SubsetMask,
        mut p: SubsetMask,
        mut x: SubsetMask,
        out: &mut Vec<SubsetMask>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        // pivot with the most neighbours in p
        let pivot = p
            .union(x)
            .elements()
            .max_by_key(|&u| self.adj[u - 1].intersection(p).len())
            .expect("p is nonempty");
        for v in p.difference(self.adj[pivot - 1]).elements() {
            let nv = self.adj[v - 1];
            self.bron_kerbosch(r.with(v), p.intersection(nv), x.intersection(nv), out);
            p = p.without(v);
            x = x.with(v);
        }
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn reachable(&self, start: SubsetMask, blocked: SubsetMask) -> SubsetMask {
        let mut seen = start.difference(blocked);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = SubsetMask::EMPTY;
            for v in frontier.elements() {
                next = next.union(self.adj[v - 1]);
            }
            next = next.difference(blocked).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Connected components of the graph with `removed` deleted, each as a
    /// mask, ordered by smallest vertex.
    pub fn components_without(&self, removed: SubsetMask) -> Vec<SubsetMask> {
        let mut rest = SubsetMask::full(self.m).difference(removed);
        let mut out = Vec::new();
        while let Some(v) = rest.min_element() {
            let comp = self.reachable(SubsetMask::singleton(v), removed);
            out.push(comp);
            rest = rest.difference(comp);
        }
        out
    }

    /// True if every path from `a` to `b` passes through `c`.
    pub fn separates(&self, a: SubsetMask, b: SubsetMask, c: SubsetMask) -> Result<bool> {
        let full = SubsetMask::full(self.m);
        if !a.is_subset(full) || !b.is_subset(full) || !c.is_subset(full) {
            return Err(Error::InvalidTriple("sets exceed the vertex set".into()));
        }
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidTriple("A and B must be nonempty".into()));
        }
        if !a.is_disjoint(b) || !a.is_disjoint(c) || !b.is_disjoint(c) {
            return Err(Error::InvalidTriple(
                "A, B, C must be pairwise disjoint".into(),
            ));
        }
        Ok(self.reachable(a, c).is_disjoint(b))
    }
}

/// Edge `{i, j}` whenever `i < j` or `j < i` in `p`.
pub fn comparability_graph(p: &Poset) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=p.m() {
        for j in i + 1..=p.m() {
            if p.comparable(i, j) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(p.m(), &edges).expect("comparability pairs are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask;

    #[test]
    fn four_cycle_cliques() {
        let g = Graph::cycle(4).unwrap();
        let c = g.cliques();
        assert_eq!(
            c.all,
            vec![
                SubsetMask::EMPTY,
                mask![1],
                mask![2],
                mask![3],
                mask![4],
                mask![1, 2],
                mask![2, 3],
                mask![1, 4],
                mask![3, 4]
            ]
        );
        assert_eq!(
            c.maximal,
            vec![mask![1, 2], mask![2, 3], mask![1, 4], mask![3, 4]]
        );
    }

    #[test]
    fn small_clique_cases() {
        let c = Graph::empty(2).unwrap().cliques();
        assert_eq!(c.all, vec![SubsetMask::EMPTY, mask![1], mask![2]]);
        assert_eq!(c.maximal, vec![mask![1], mask![2]]);
        let c = Graph::complete(3).unwrap().cliques();
        assert_eq!(c.all.len(), 8);
        assert_eq!(c.maximal, vec![mask![1, 2, 3]]);
    }

    #[test]
    fn separation() {
        let g = Graph::cycle(4).unwrap();
        assert!(g.separates(mask![1], mask![3], mask![2, 4]).unwrap());
        assert!(!g.separates(mask![1], mask![2], SubsetMask::EMPTY).unwrap());
        assert!(!g.separates(mask![1], mask![3], mask![2]).unwrap());
        let p = Graph::path(3).unwrap();
        assert!(p.separates(mask![1], mask![3], mask![2]).unwrap());
        assert!(matches!(
            g.separates(mask![1], mask![1, 3], SubsetMask::EMPTY),
            Err(Error::InvalidTriple(_))
        ));
        assert!(matches!(
            g.separates(SubsetMask::EMPTY, mask![3], SubsetMask::EMPTY),
            Err(Error::InvalidTriple(_))
        ));
    }

    #[test]
    fn comparability_examples() {
        let g = comparability_graph(&Poset::chain(3).unwrap());
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (2, 3)]);
        assert!(comparability_graph(&Poset::antichain(3).unwrap())
            .edges()
            .is_empty());
        let fig1 = Poset::from_covers(4, &[(2, 1), (2, 3), (4, 3)]).unwrap();
        assert_eq!(
            comparability_graph(&fig1).edges(),
            vec![(1, 2), (2, 3), (3, 4)]
        );
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 2), (2, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 4)]).is_err());
    }

    #[test]
    fn components() {
        let g = Graph::cycle(4).unwrap();
        assert_eq!(g.components_without(mask![2, 4]), vec![mask![1], mask![3]]);
        assert_eq!(
            g.components_without(SubsetMask::EMPTY),
            vec![mask![1, 2, 3, 4]]
        );
    }
}
