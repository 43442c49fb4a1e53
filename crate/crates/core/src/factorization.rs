//! Constructive factorization for distributions with natural lattice support.
//!
//! Let `L = J(P)` be the support and `G` a graph containing every cover pair
//! of `P`. Order-ideal closures of the cliques of `G` index coordinates that
//! can be chosen freely; every other `S ∈ L` has two incomparable maximal
//! elements `i, j` that are not adjacent in `G`, and its value is forced by
//!
//! ```text
//! p[S] p[S ∖ ij] = p[S ∖ i] p[S ∖ j].
//! ```
//!
//! [`factorize`] solves the clique parameters `c_C` on the free coordinates
//! and checks the forced ones; the parametrization
//! `p_U = ∏_{C ⊆ U, C clique} c_C` then reproduces `p` on every subset.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{DistributiveLattice, Graph, Poset, SubsetMask};
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::io::{de_rational_map, ser_rational_map, SCHEMA_VERSION};
use crate::toric::{apply_param, is_feasible, matrix_ag, matrix_bg, Feasibility, ParamPoint};
use crate::Rational;

/// Closures of the cliques of `G` in `L`, with one representative clique each.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliqueClosureSet {
    /// In the lattice's (cardinality, bits) order.
    pub closures: Vec<SubsetMask>,
    pub reps: BTreeMap<SubsetMask, SubsetMask>,
}

impl CliqueClosureSet {
    pub fn contains(&self, s: SubsetMask) -> bool {
        self.reps.contains_key(&s)
    }
}

/// One forced coordinate: `p[set] p[set∖ij] = p[set∖i] p[set∖j]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DependentStep {
    pub set: SubsetMask,
    pub i: usize,
    pub j: usize,
}

/// Clique parameters reproducing a distribution, and the checks that made
/// them sufficient.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationCertificate {
    pub schema_version: u32,
    pub m: usize,
    pub support: Vec<SubsetMask>,
    #[serde(
        serialize_with = "ser_rational_map",
        deserialize_with = "de_rational_map"
    )]
    pub clique_params: BTreeMap<SubsetMask, Rational>,
    pub dependent_trace: Vec<DependentStep>,
}

fn check_same_ground(m: usize, g: &Graph) -> Result<()> {
    if g.m() != m {
        return Err(Error::InvalidGraph(format!(
            "graph has {} vertices, expected {m}",
            g.m()
        )));
    }
    Ok(())
}

/// The first cover pair of `P` missing from `G`, if any.
pub fn missing_cover_edge(p: &Poset, g: &Graph) -> Option<(usize, usize)> {
    p.covers().iter().copied().find(|&(u, l)| !g.has_edge(u, l))
}

/// Order-ideal closures of all cliques of `G` inside the natural lattice `L`.
///
/// The representative of a closure is, among the cliques generating it, one
/// of largest size, ties broken by the lexicographic order of element lists.
pub fn clique_closures(l: &DistributiveLattice, g: &Graph) -> Result<CliqueClosureSet> {
    check_same_ground(l.m(), g)?;
    let poset = l.underlying_poset()?;
    if let Some((upper, lower)) = missing_cover_edge(&poset, g) {
        return Err(Error::MissingCoverEdge { upper, lower });
    }
    let mut reps: BTreeMap<SubsetMask, SubsetMask> = BTreeMap::new();
    for c in g.cliques().all {
        let closure = poset.ideal_closure(c);
        reps.entry(closure)
            .and_modify(|r| {
                if c.len() > r.len() || (c.len() == r.len() && c.lex_cmp(*r).is_lt()) {
                    *r = c;
                }
            })
            .or_insert(c);
    }
    Ok(CliqueClosureSet {
        closures: reps.keys().copied().collect(),
        reps,
    })
}

/// `(number of clique closures, |L| - that number)`.
pub fn dimension_counts(l: &DistributiveLattice, g: &Graph) -> Result<(usize, usize)> {
    let closures = clique_closures(l, g)?;
    let n = closures.closures.len();
    Ok((n, l.len() - n))
}

/// Non-adjacent pairs `i < j` among the maximal elements of `S`, in
/// lexicographic order.
pub fn dependent_pairs(poset: &Poset, g: &Graph, s: SubsetMask) -> Vec<(usize, usize)> {
    let top: Vec<usize> = poset.maximal_elements(s).elements().collect();
    let mut pairs = Vec::new();
    for (a, &i) in top.iter().enumerate() {
        for &j in &top[a + 1..] {
            if !g.has_edge(i, j) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Fills in the forced coordinates of `L` from values on the clique closures.
///
/// `free` must hold a positive value for every closure. Each forced value is
/// computed from the lexicographically smallest non-adjacent pair of
/// maximal elements.
pub fn extend_by_recursion(
    l: &DistributiveLattice,
    g: &Graph,
    free: &BTreeMap<SubsetMask, Rational>,
) -> Result<Distribution> {
    let closures = clique_closures(l, g)?;
    let poset = l.underlying_poset()?;
    let mut values: BTreeMap<SubsetMask, Rational> = BTreeMap::new();
    for &s in l.elements() {
        let v = if closures.contains(s) {
            match free.get(&s) {
                Some(v) if v > &Rational::zero() => v.clone(),
                _ => {
                    return Err(Error::NonPositiveParameter(format!(
                        "no positive value for closure {s}"
                    )))
                }
            }
        } else {
            let (i, j) = dependent_pairs(&poset, g, s)[0];
            &values[&s.without(i)] * &values[&s.without(j)] / &values[&s.without(i).without(j)]
        };
        values.insert(s, v);
    }
    Distribution::new(l.m(), values)
}

/// Factors `p` according to `G`, choosing the lexicographically smallest
/// non-adjacent pair at every forced coordinate.
pub fn factorize(p: &Distribution, g: &Graph) -> Result<FactorizationCertificate> {
    factorize_with_pair_choice(p, g, |_, pairs| pairs[0])
}

/// As [`factorize`], with the non-adjacent pair chosen by `choose` from the
/// nonempty list of candidates.
pub fn factorize_with_pair_choice<F>(
    p: &Distribution,
    g: &Graph,
    mut choose: F,
) -> Result<FactorizationCertificate>
where
    F: FnMut(SubsetMask, &[(usize, usize)]) -> (usize, usize),
{
    check_same_ground(p.m(), g)?;
    let l = p.support_lattice().map_err(|_| Error::NotNaturalSupport)?;
    if !l.is_natural() {
        return Err(Error::NotNaturalSupport);
    }
    let closures = clique_closures(&l, g)?;
    let poset = l.underlying_poset()?;
    let cliques = g.cliques().all;

    let mut params: BTreeMap<SubsetMask, Rational> = BTreeMap::new();
    for &s in &closures.closures {
        let rep = closures.reps[&s];
        let mut known = Rational::one();
        for &t in cliques.iter().filter(|t| t.is_subset(s) && **t != rep) {
            known *= &*params.entry(t).or_insert_with(Rational::one);
        }
        debug_assert!(!params.contains_key(&rep));
        params.insert(rep, p.get(s) / known);
    }

    let mut trace = Vec::new();
    for &s in l.elements().iter().filter(|s| !closures.contains(**s)) {
        let pairs = dependent_pairs(&poset, g, s);
        debug_assert!(!pairs.is_empty());
        let (i, j) = choose(s, &pairs);
        let lhs = p.get(s) * p.get(s.without(i).without(j));
        let rhs = p.get(s.without(i)) * p.get(s.without(j));
        if lhs != rhs {
            return Err(Error::PairwiseViolation { set: s, i, j });
        }
        trace.push(DependentStep { set: s, i, j });
    }

    Ok(FactorizationCertificate {
        schema_version: SCHEMA_VERSION,
        m: p.m(),
        support: l.elements().to_vec(),
        clique_params: params,
        dependent_trace: trace,
    })
}

/// Clique parameters in the row order of [`matrix_bg`].
fn clique_point(cert: &FactorizationCertificate, g: &Graph) -> Result<ParamPoint> {
    let cliques = g.cliques().all;
    if cert.clique_params.len() != cliques.len() {
        return Err(Error::InvalidGraph(format!(
            "certificate has {} clique parameters, graph has {} cliques",
            cert.clique_params.len(),
            cliques.len()
        )));
    }
    cliques
        .iter()
        .map(|c| {
            cert.clique_params.get(c).cloned().ok_or_else(|| {
                Error::InvalidGraph(format!("{c} is not a clique of the certificate"))
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(ParamPoint)
}

/// Recomputes `p_U = ∏_{C ⊆ U} c_C` on the support and compares with `p`
/// on every subset (zero off the support).
pub fn verify_certificate(cert: &FactorizationCertificate, p: &Distribution, g: &Graph) -> bool {
    if cert.m != p.m() || g.m() != p.m() {
        return false;
    }
    let Ok(theta) = clique_point(cert, g) else {
        return false;
    };
    let Ok(restricted) = matrix_bg(g).restrict_columns(&cert.support) else {
        return false;
    };
    match apply_param(&restricted, &theta) {
        Ok(q) => &q == p,
        Err(_) => false,
    }
}

/// Maximal-clique potentials `a^S_T = ∏_{C ⊆ T, host(C) = S} c_C`, in the
/// row order of [`matrix_ag`], where `host(C)` is the first maximal clique
/// containing `C`.
///
/// With these, the clique-potential parametrization equals the all-cliques
/// one on every column of `2^[m]`.
pub fn to_standard_params(cert: &FactorizationCertificate, g: &Graph) -> Result<ParamPoint> {
    check_same_ground(cert.m, g)?;
    let cliques = g.cliques();
    let theta = clique_point(cert, g)?;
    let host = |c: SubsetMask| {
        *cliques
            .maximal
            .iter()
            .find(|s| c.is_subset(**s))
            .expect("every clique lies in a maximal clique")
    };
    let a = matrix_ag(g);
    let values = a
        .rows()
        .iter()
        .map(|row| match *row {
            crate::toric::RowLabel::Factor { clique, state } => cliques
                .all
                .iter()
                .zip(&theta.0)
                .filter(|(c, _)| c.is_subset(state) && host(**c) == clique)
                .fold(Rational::one(), |acc, (_, v)| acc * v),
            _ => unreachable!("clique-potential rows"),
        })
        .collect();
    Ok(ParamPoint(values))
}

/// Standard parameters with the rows that vanish on the support set to
/// zero, so that the clique-potential map reproduces `p` on all of `2^[m]`,
/// zeros included.
pub fn to_support_params(cert: &FactorizationCertificate, g: &Graph) -> Result<ParamPoint> {
    let mut theta = to_standard_params(cert, g)?;
    match is_feasible(&matrix_ag(g), &cert.support)? {
        Feasibility::Feasible { hidden_rows } => {
            for r in hidden_rows {
                theta.0[r] = Rational::zero();
            }
            Ok(theta)
        }
        Feasibility::Infeasible { column } => Err(Error::NotFeasible(column)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::order_ideals;
    use crate::mask;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn fig1() -> DistributiveLattice {
        order_ideals(&Poset::from_covers(4, &[(2, 1), (2, 3), (4, 3)]).unwrap())
    }

    #[test]
    fn closures_of_the_four_cycle() {
        let c = clique_closures(&fig1(), &Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(
            c.closures,
            vec![
                SubsetMask::EMPTY,
                mask![1],
                mask![3],
                mask![3, 4],
                mask![1, 2, 3],
                mask![1, 3, 4]
            ]
        );
        // 123 is generated by 2, 12 and 23
        assert_eq!(c.reps[&mask![1, 2, 3]], mask![1, 2]);
        assert_eq!(c.reps[&mask![1, 3, 4]], mask![1, 4]);
    }

    #[test]
    fn missing_cover_edge_is_named() {
        let g = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(
            clique_closures(&fig1(), &g),
            Err(Error::MissingCoverEdge { upper: 2, lower: 3 })
        );
    }

    #[test]
    fn independence_on_two_bits() {
        let p = Distribution::new(
            2,
            [
                (SubsetMask::EMPTY, q(1, 6)),
                (mask![1], q(1, 3)),
                (mask![2], q(1, 6)),
                (mask![1, 2], q(1, 3)),
            ],
        )
        .unwrap();
        let g = Graph::empty(2).unwrap();
        let cert = factorize(&p, &g).unwrap();
        assert_eq!(cert.clique_params[&SubsetMask::EMPTY], q(1, 6));
        assert_eq!(cert.clique_params[&mask![1]], q(2, 1));
        assert_eq!(cert.clique_params[&mask![2]], q(1, 1));
        assert_eq!(
            cert.dependent_trace,
            vec![DependentStep {
                set: mask![1, 2],
                i: 1,
                j: 2
            }]
        );
        assert!(verify_certificate(&cert, &p, &g));
    }

    #[test]
    fn unnatural_support_is_rejected() {
        let p =
            Distribution::new(2, [(SubsetMask::EMPTY, q(1, 2)), (mask![1, 2], q(1, 2))]).unwrap();
        assert_eq!(
            factorize(&p, &Graph::empty(2).unwrap()),
            Err(Error::NotNaturalSupport)
        );
    }

    #[test]
    fn standard_params_single_edge() {
        let g = Graph::complete(2).unwrap();
        let cert = FactorizationCertificate {
            schema_version: SCHEMA_VERSION,
            m: 2,
            support: SubsetMask::all_subsets(2),
            clique_params: [
                (SubsetMask::EMPTY, q(2, 1)),
                (mask![1], q(3, 1)),
                (mask![2], q(5, 1)),
                (mask![1, 2], q(7, 1)),
            ]
            .into_iter()
            .collect(),
            dependent_trace: vec![],
        };
        let a = to_standard_params(&cert, &g).unwrap();
        // rows (12,∅), (12,1), (12,2), (12,12): products of the cliques inside each state
        assert_eq!(a.0, vec![q(2, 1), q(6, 1), q(10, 1), q(210, 1)]);
    }
}
