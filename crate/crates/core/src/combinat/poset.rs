use crate::combinat::{check_ground, SubsetMask};
use crate::error::{Error, Result};

/// A partial order on `[m]`, stored by its cover relations (the Hasse diagram).
///
/// `covers` holds pairs `(upper, lower)` meaning `upper` covers `lower`. The
/// principal down-sets `{j : j <= i}` are derived once at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    m: usize,
    covers: Vec<(usize, usize)>,
    down: Vec<SubsetMask>,
}

impl Poset {
    /// Builds a poset from its cover pairs.
    ///
    /// Rejects out-of-range elements, loops, duplicate pairs, cycles, and
    /// pairs implied transitively by other pairs; a Hasse diagram has none of
    /// these.
    pub fn from_covers(m: usize, covers: &[(usize, usize)]) -> Result<Self> {
        check_ground(m)?;
        let mut sorted = Vec::with_capacity(covers.len());
        for &(upper, lower) in covers {
            for e in [upper, lower] {
                if e == 0 || e > m {
                    return Err(Error::ElementOutOfRange { element: e, m });
                }
            }
            if upper == lower {
                return Err(Error::InvalidPoset(format!("{upper} cannot cover itself")));
            }
            sorted.push((upper, lower));
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidPoset(format!(
                "duplicate cover {} > {}",
                w[0].0, w[0].1
            )));
        }

        let down = downsets_from_covers(m, &sorted)?;

        // a pair (i, j) is redundant if j sits below some other lower cover of i
        for &(upper, lower) in &sorted {
            let implied = sorted
                .iter()
                .filter(|&&(u, l)| u == upper && l != lower)
                .any(|&(_, l)| down[l - 1].contains(lower));
            if implied {
                return Err(Error::InvalidPoset(format!(
                    "cover {upper} > {lower} is implied by transitivity"
                )));
            }
        }

        Ok(Poset {
            m,
            covers: sorted,
            down,
        })
    }

    /// Builds a poset from principal down-sets, `down[i-1] = {j : j <= i}`.
    ///
    /// The relation must be reflexive, antisymmetric and transitive; covers
    /// are recovered by transitive reduction.
    pub fn from_downsets(m: usize, down: Vec<SubsetMask>) -> Result<Self> {
        check_ground(m)?;
        if down.len() != m {
            return Err(Error::InvalidPoset(format!(
                "expected {m} down-sets, got {}",
                down.len()
            )));
        }
        for i in 1..=m {
            let d = down[i - 1];
            if !d.within(m) || !d.contains(i) {
                return Err(Error::InvalidPoset(format!("down-set of {i} is malformed")));
            }
            for j in d.elements() {
                if j != i && down[j - 1].contains(i) {
                    return Err(Error::InvalidPoset(format!("{i} and {j} form a cycle")));
                }
                if !down[j - 1].is_subset(d) {
                    return Err(Error::InvalidPoset(format!(
                        "order is not transitive at {i}"
                    )));
                }
            }
        }
        let mut covers = Vec::new();
        for i in 1..=m {
            let strictly_below = down[i - 1].without(i);
            for j in strictly_below.elements() {
                let intermediate = strictly_below
                    .elements()
                    .any(|k| k != j && down[k - 1].contains(j));
                if !intermediate {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();
        Ok(Poset { m, covers, down })
    }

    /// The poset on `[m]` with no relations.
    pub fn antichain(m: usize) -> Result<Self> {
        Poset::from_covers(m, &[])
    }

    /// The chain `m > m-1 > ... > 1`.
    pub fn chain(m: usize) -> Result<Self> {
        let covers: Vec<_> = (2..=m).map(|i| (i, i - 1)).collect();
        Poset::from_covers(m, &covers)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Cover pairs `(upper, lower)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, upper: usize, lower: usize) -> bool {
        self.covers.binary_search(&(upper, lower)).is_ok()
    }

    /// `{j : j <= i}`, including `i`.
    pub fn down(&self, i: usize) -> SubsetMask {
        self.down[i - 1]
    }

    /// `j <= i` in the order.
    pub fn leq(&self, j: usize, i: usize) -> bool {
        self.down[i - 1].contains(j)
    }

    pub fn lt(&self, j: usize, i: usize) -> bool {
        j != i && self.leq(j, i)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// True if `s` is downward closed.
    pub fn is_order_ideal(&self, s: SubsetMask) -> bool {
        s.elements().all(|i| self.down[i - 1].is_subset(s))
    }

    /// The order ideal generated by `s`: everything below some element of `s`.
    pub fn ideal_closure(&self, s: SubsetMask) -> SubsetMask {
        s.elements()
            .fold(SubsetMask::EMPTY, |acc, i| acc.union(self.down[i - 1]))
    }

    /// Elements of `s` with nothing of `s` strictly above them.
    pub fn maximal_elements(&self, s: SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::EMPTY;
        for i in s.elements() {
            if !s.elements().any(|j| self.lt(i, j)) {
                out = out.with(i);
            }
        }
        out
    }

    /// The maximum of `s` if one element of `s` dominates all the others.
    pub fn maximum(&self, s: SubsetMask) -> Option<usize> {
        s.elements().find(|&i| s.is_subset(self.down[i - 1]))
    }
}

fn downsets_from_covers(m: usize, covers: &[(usize, usize)]) -> Result<Vec<SubsetMask>> {
    // Kahn's algorithm on lower -> upper edges, accumulating down-sets in
    // topological order.
    let mut indegree = vec![0usize; m + 1];
    for &(upper, _) in covers {
        indegree[upper] += 1;
    }
    let mut down: Vec<SubsetMask> = (1..=m).map(SubsetMask::singleton).collect();
    let mut ready: Vec<usize> = (1..=m).filter(|&i| indegree[i] == 0).collect();
    let mut seen = 0;
    while let Some(j) = ready.pop() {
        seen += 1;
        for &(upper, lower) in covers {
            if lower == j {
                down[upper - 1] = down[upper - 1].union(down[j - 1]);
                indegree[upper] -= 1;
                if indegree[upper] == 0 {
                    ready.push(upper);
                }
            }
        }
    }
    if seen != m {
        return Err(Error::InvalidPoset(
            "cover relations contain a cycle".into(),
        ));
    }
    Ok(down)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask;

    fn fig1() -> Poset {
        Poset::from_covers(4, &[(2, 1), (2, 3), (4, 3)]).unwrap()
    }

    #[test]
    fn downsets_and_closure() {
        let p = fig1();
        assert_eq!(p.down(2), mask![1, 2, 3]);
        assert_eq!(p.down(4), mask![3, 4]);
        assert_eq!(p.ideal_closure(mask![4]), mask![3, 4]);
        assert_eq!(p.ideal_closure(mask![2]), mask![1, 2, 3]);
        assert_eq!(p.ideal_closure(mask![1, 2]), mask![1, 2, 3]);
        assert_eq!(p.ideal_closure(mask![2, 3]), mask![1, 2, 3]);
        assert_eq!(p.ideal_closure(SubsetMask::EMPTY), SubsetMask::EMPTY);
    }

    #[test]
    fn rejects_malformed_covers() {
        assert!(matches!(
            Poset::from_covers(3, &[(2, 1), (2, 1)]),
            Err(Error::InvalidPoset(_))
        ));
        assert!(matches!(
            Poset::from_covers(3, &[(2, 1), (1, 2)]),
            Err(Error::InvalidPoset(_))
        ));
        // 3 > 1 is implied by 3 > 2 > 1
        assert!(matches!(
            Poset::from_covers(3, &[(3, 2), (2, 1), (3, 1)]),
            Err(Error::InvalidPoset(_))
        ));
        assert!(matches!(
            Poset::from_covers(3, &[(1, 1)]),
            Err(Error::InvalidPoset(_))
        ));
        assert!(matches!(
            Poset::from_covers(3, &[(4, 1)]),
            Err(Error::ElementOutOfRange { element: 4, m: 3 })
        ));
        assert!(Poset::from_covers(0, &[]).is_err());
        assert!(Poset::from_covers(17, &[]).is_err());
    }

    #[test]
    fn from_downsets_recovers_covers() {
        let p = Poset::chain(3).unwrap();
        let q = Poset::from_downsets(3, vec![p.down(1), p.down(2), p.down(3)]).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.covers(), &[(2, 1), (3, 2)]);
        let bad = Poset::from_downsets(2, vec![mask![1, 2], mask![1, 2]]);
        assert!(bad.is_err());
    }

    #[test]
    fn maxima() {
        let p = fig1();
        assert_eq!(p.maximal_elements(mask![1, 2, 3, 4]), mask![2, 4]);
        assert_eq!(p.maximal_elements(mask![1, 3]), mask![1, 3]);
        assert_eq!(p.maximum(mask![1, 2]), Some(2));
        assert_eq!(p.maximum(mask![1, 4]), None);
        assert!(p.lt(3, 4));
        assert!(!p.comparable(1, 4));
    }
}
