//! Conditional independence statements for binary variables and the
//! binomials they impose on joint probabilities.
//!
//! A saturated statement `A ⊥ B | C` (with `A ∪ B ∪ C = [m]`) holds for a
//! distribution exactly when every binomial
//!
//! ```text
//! p[A1 ∪ B1 ∪ C1] p[A2 ∪ B2 ∪ C1] - p[A1 ∪ B2 ∪ C1] p[A2 ∪ B1 ∪ C1]
//! ```
//!
//! vanishes, for `A1, A2 ⊆ A`, `B1, B2 ⊆ B` and `C1 ⊆ C`.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{Graph, SubsetMask};
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::Rational;

/// The statement `A ⊥ B | C`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CIStatement {
    pub a: SubsetMask,
    pub b: SubsetMask,
    pub c: SubsetMask,
}

impl CIStatement {
    pub fn new(a: SubsetMask, b: SubsetMask, c: SubsetMask) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidTriple("A and B must be nonempty".into()));
        }
        if !a.is_disjoint(b) || !a.is_disjoint(c) || !b.is_disjoint(c) {
            return Err(Error::InvalidTriple(
                "A, B, C must be pairwise disjoint".into(),
            ));
        }
        Ok(CIStatement { a, b, c })
    }

    pub fn is_saturated(&self, m: usize) -> bool {
        self.a.union(self.b).union(self.c) == SubsetMask::full(m)
    }

    /// Same statement with `A` and `B` swapped so that `min(A) < min(B)`.
    pub fn oriented(self) -> Self {
        if self.a.min_element() < self.b.min_element() {
            self
        } else {
            CIStatement {
                a: self.b,
                b: self.a,
                c: self.c,
            }
        }
    }
}

impl fmt::Display for CIStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊥ {} | {}", self.a, self.b, self.c)
    }
}

/// A pure difference of two monomials in the variables `p_S`.
///
/// Factors inside each monomial are sorted; the orientation (which monomial
/// comes first) is kept as constructed. Use [`canonical`](Self::canonical)
/// to compare binomials up to sign.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    pub plus: Vec<SubsetMask>,
    pub minus: Vec<SubsetMask>,
}

impl Binomial {
    pub fn new(mut plus: Vec<SubsetMask>, mut minus: Vec<SubsetMask>) -> Self {
        plus.sort();
        minus.sort();
        Binomial { plus, minus }
    }

    /// `p_a p_b - p_c p_d`.
    pub fn quadric(a: SubsetMask, b: SubsetMask, c: SubsetMask, d: SubsetMask) -> Self {
        Binomial::new(vec![a, b], vec![c, d])
    }

    /// Representative of `{b, -b}`: the monomial with the larger sorted factor
    /// list goes first.
    pub fn canonical(&self) -> Self {
        if self.plus >= self.minus {
            self.clone()
        } else {
            self.negated()
        }
    }

    pub fn negated(&self) -> Self {
        Binomial {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        self.canonical() == other.canonical()
    }

    /// Both monomials coincide, so the polynomial is zero.
    pub fn is_zero(&self) -> bool {
        self.plus == self.minus
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus.len() == self.minus.len()
    }

    pub fn degree(&self) -> usize {
        self.plus.len().max(self.minus.len())
    }

    /// Every variable appearing in either monomial.
    pub fn variables(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.plus.iter().chain(&self.minus).copied()
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = |ms: &[SubsetMask]| -> String {
            if ms.is_empty() {
                return "1".into();
            }
            ms.iter()
                .map(|s| format!("p_{s}"))
                .collect::<Vec<_>>()
                .join("*")
        };
        write!(f, "{} - {}", mono(&self.plus), mono(&self.minus))
    }
}

/// `i ⊥ j | [m] \ {i, j}` for every non-edge `{i, j}`, `i < j`.
pub fn pairwise_statements(g: &Graph) -> Vec<CIStatement> {
    let full = SubsetMask::full(g.m());
    g.non_edges()
        .into_iter()
        .map(|(i, j)| CIStatement {
            a: SubsetMask::singleton(i),
            b: SubsetMask::singleton(j),
            c: full.without(i).without(j),
        })
        .collect()
}

/// All saturated statements `A ⊥ B | C` with `C` separating `A` from `B`,
/// one per unordered `{A, B}` (oriented so that `min(A) < min(B)`), sorted
/// by `(C, A, B)`.
///
/// With `A ∪ B = [m] \ C`, `C` separates `A` and `B` exactly when every
/// connected component of `G - C` lies inside `A` or inside `B`, so the
/// statements for a given `C` are the two-block groupings of those
/// components.
pub fn saturated_global_statements(g: &Graph) -> Vec<CIStatement> {
    let mut out = Vec::new();
    for c in SubsetMask::all_subsets(g.m()) {
        let comps = g.components_without(c);
        if comps.len() < 2 {
            continue;
        }
        // comps[0] holds the smallest free vertex and always goes to A
        let rest = &comps[1..];
        for choice in 0u32..(1 << rest.len()) {
            // the all-ones choice would leave B empty
            if choice == (1 << rest.len()) - 1 {
                continue;
            }
            let mut a = comps[0];
            let mut b = SubsetMask::EMPTY;
            for (k, &comp) in rest.iter().enumerate() {
                if choice & (1 << k) != 0 {
                    a = a.union(comp);
                } else {
                    b = b.union(comp);
                }
            }
            out.push(CIStatement { a, b, c });
        }
    }
    out.sort_by_key(|x| (x.c, x.a, x.b));
    out
}

/// Generators of the ideal of a saturated statement, canonicalized and
/// deduplicated, in enumeration order (`C1`, then `{A1, A2}`, then `{B1, B2}`).
pub fn ci_binomials(stmt: &CIStatement, m: usize) -> Result<Vec<Binomial>> {
    if !stmt.is_saturated(m) {
        return Err(Error::Unsaturated);
    }
    let a_subs = stmt.a.subsets();
    let b_subs = stmt.b.subsets();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for c1 in stmt.c.subsets() {
        for (ka, &a1) in a_subs.iter().enumerate() {
            for &a2 in &a_subs[ka + 1..] {
                for (kb, &b1) in b_subs.iter().enumerate() {
                    for &b2 in &b_subs[kb + 1..] {
                        let bin = Binomial::quadric(
                            a1.union(b1).union(c1),
                            a2.union(b2).union(c1),
                            a1.union(b2).union(c1),
                            a2.union(b1).union(c1),
                        )
                        .canonical();
                        if !bin.is_zero() && seen.insert(bin.clone()) {
                            out.push(bin);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn binomials_of(statements: &[CIStatement], m: usize) -> Vec<Binomial> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for stmt in statements {
        for bin in ci_binomials(stmt, m).expect("statements are saturated") {
            if seen.insert(bin.clone()) {
                out.push(bin);
            }
        }
    }
    out
}

/// `p_C p_{C ∪ ij} - p_{C ∪ i} p_{C ∪ j}` for every non-edge `{i, j}` and
/// every `C ⊆ [m] \ {i, j}`.
pub fn pairwise_binomials(g: &Graph) -> Vec<Binomial> {
    binomials_of(&pairwise_statements(g), g.m())
}

/// Generators for all saturated global Markov statements of `g`.
pub fn global_binomials(g: &Graph) -> Vec<Binomial> {
    binomials_of(&saturated_global_statements(g), g.m())
}

fn monomial_value(factors: &[SubsetMask], p: &Distribution) -> Rational {
    let mut acc = Rational::one();
    for &s in factors {
        match p.value(s) {
            Some(v) => acc *= v,
            None => return Rational::zero(),
        }
    }
    acc
}

/// Exact value of the binomial at `p` (absent coordinates are zero).
pub fn eval_binomial(b: &Binomial, p: &Distribution) -> Rational {
    monomial_value(&b.plus, p) - monomial_value(&b.minus, p)
}

/// A binomial that does not vanish at the distribution under test.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub index: usize,
    pub binomial: Binomial,
    #[serde(serialize_with = "crate::io::ser_rational")]
    pub value: Rational,
}

/// Outcome of evaluating a list of binomials at one point.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct CheckReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    /// True when every binomial vanished.
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates every binomial and reports the ones that do not vanish.
pub fn satisfies_all(bs: &[Binomial], p: &Distribution) -> CheckReport {
    let violations = bs
        .iter()
        .enumerate()
        .filter_map(|(index, b)| {
            let value = eval_binomial(b, p);
            (!value.is_zero()).then(|| Violation {
                index,
                binomial: b.clone(),
                value,
            })
        })
        .collect();
    CheckReport {
        checked: bs.len(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn statement_validation() {
        assert!(CIStatement::new(mask![1], mask![1, 2], SubsetMask::EMPTY).is_err());
        assert!(CIStatement::new(SubsetMask::EMPTY, mask![2], SubsetMask::EMPTY).is_err());
        let s = CIStatement::new(mask![3], mask![1], mask![2]).unwrap();
        assert!(s.is_saturated(3));
        assert!(!s.is_saturated(4));
        assert_eq!(s.oriented().a, mask![1]);
        assert_eq!(s.to_string(), "3 ⊥ 1 | 2");
    }

    #[test]
    fn pairwise_statement_examples() {
        let st = pairwise_statements(&Graph::cycle(4).unwrap());
        assert_eq!(
            st,
            vec![
                CIStatement::new(mask![1], mask![3], mask![2, 4]).unwrap(),
                CIStatement::new(mask![2], mask![4], mask![1, 3]).unwrap(),
            ]
        );
        assert!(pairwise_statements(&Graph::complete(4).unwrap()).is_empty());
        assert_eq!(pairwise_statements(&Graph::empty(3).unwrap()).len(), 3);
    }

    #[test]
    fn global_statement_examples() {
        let st = saturated_global_statements(&Graph::path(3).unwrap());
        assert_eq!(
            st,
            vec![CIStatement::new(mask![1], mask![3], mask![2]).unwrap()]
        );
        assert!(saturated_global_statements(&Graph::complete(4).unwrap()).is_empty());
        // empty graph on [2]: only 1 ⊥ 2 | ∅
        let st = saturated_global_statements(&Graph::empty(2).unwrap());
        assert_eq!(st.len(), 1);
    }

    #[test]
    fn ci_binomial_examples() {
        let s = CIStatement::new(mask![1], mask![3], mask![2, 4]).unwrap();
        let bs = ci_binomials(&s, 4).unwrap();
        assert_eq!(bs.len(), 4);
        let own = Binomial::quadric(
            mask![2, 4],
            mask![1, 2, 3, 4],
            mask![1, 2, 4],
            mask![2, 3, 4],
        );
        assert!(bs.iter().any(|b| b.same_up_to_sign(&own)));
        // fixes 1 and 3, so it comes from 2 ⊥ 4 | 13
        let target = Binomial::quadric(
            mask![1, 3, 4],
            mask![1, 2, 3],
            mask![1, 3],
            mask![1, 2, 3, 4],
        );
        assert!(!bs.iter().any(|b| b.same_up_to_sign(&target)));
        let other = CIStatement::new(mask![2], mask![4], mask![1, 3]).unwrap();
        assert!(ci_binomials(&other, 4)
            .unwrap()
            .iter()
            .any(|b| b.same_up_to_sign(&target)));

        let s = CIStatement::new(mask![1], mask![2], SubsetMask::EMPTY).unwrap();
        let bs = ci_binomials(&s, 2).unwrap();
        assert_eq!(bs.len(), 1);
        assert!(bs[0].same_up_to_sign(&Binomial::quadric(
            SubsetMask::EMPTY,
            mask![1, 2],
            mask![1],
            mask![2]
        )));

        let s = CIStatement::new(mask![1], mask![3], mask![2]).unwrap();
        let bs = ci_binomials(&s, 3).unwrap();
        let expected = [
            Binomial::quadric(SubsetMask::EMPTY, mask![1, 3], mask![1], mask![3]),
            Binomial::quadric(mask![2], mask![1, 2, 3], mask![1, 2], mask![2, 3]),
        ];
        assert_eq!(bs.len(), 2);
        for e in &expected {
            assert!(bs.iter().any(|b| b.same_up_to_sign(e)));
        }
        assert_eq!(ci_binomials(&s, 4), Err(Error::Unsaturated));
    }

    #[test]
    fn pairwise_binomial_examples() {
        assert!(pairwise_binomials(&Graph::complete(3).unwrap()).is_empty());
        let bs = pairwise_binomials(&Graph::empty(2).unwrap());
        assert_eq!(bs.len(), 1);
        assert_eq!(pairwise_binomials(&Graph::empty(4).unwrap()).len(), 6 * 4);
    }

    #[test]
    fn evaluation() {
        let uniform = Distribution::new(
            2,
            SubsetMask::all_subsets(2).into_iter().map(|s| (s, r(1, 4))),
        )
        .unwrap();
        let b = Binomial::quadric(SubsetMask::EMPTY, mask![1, 2], mask![1], mask![2]);
        assert_eq!(eval_binomial(&b, &uniform), r(0, 1));
        assert_eq!(eval_binomial(&b, &Distribution::zero(2).unwrap()), r(0, 1));

        let half = r(1, 2);
        let t = r(1, 14);
        let p = Distribution::new(
            4,
            [
                (SubsetMask::EMPTY, half),
                (mask![1, 2], t.clone()),
                (mask![3], t.clone()),
                (mask![4], t.clone()),
                (mask![3, 4], t.clone()),
                (mask![1, 2, 3], t.clone()),
                (mask![1, 2, 4], t.clone()),
                (mask![1, 2, 3, 4], t.clone()),
            ],
        )
        .unwrap();
        let quartic = Binomial::new(
            vec![
                SubsetMask::EMPTY,
                mask![3, 4],
                mask![1, 2, 4],
                mask![1, 2, 3],
            ],
            vec![mask![4], mask![3], mask![1, 2], mask![1, 2, 3, 4]],
        );
        // (1/2)(1/14)^3 - (1/14)^4 = (3/7)(1/14)^3
        let cube = &t * &t * &t;
        assert_eq!(eval_binomial(&quartic, &p), r(3, 7) * cube);
        let report = satisfies_all(&[quartic], &p);
        assert_eq!(report.violations.len(), 1);
    }

    #[test]
    fn canonical_form_is_sign_invariant() {
        let b = Binomial::quadric(mask![1], mask![2], SubsetMask::EMPTY, mask![1, 2]);
        assert_eq!(b.canonical(), b.negated().canonical());
        assert_eq!(b.to_string(), "p_1*p_2 - p_∅*p_12");
    }
}
