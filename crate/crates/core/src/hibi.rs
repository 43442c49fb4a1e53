//! Hibi ideals of natural lattices and their relation to lattice-supported
//! graphical models.
//!
//! For `L = J(P)` the Hibi ideal is the kernel of `p_S ↦ t ∏_{i ∈ S} b_i`
//! and is generated by `p_S p_T - p_{S∩T} p_{S∪T}` over incomparable pairs.
//! Restricting the all-cliques parametrization of `G` to the columns of `L`
//! gives the same kernel whenever the Hasse diagram of `P` is a subgraph of
//! `G` and `G` is a subgraph of the comparability graph of `P`.

use crate::ci::Binomial;
use crate::combinat::{DistributiveLattice, Graph, SubsetMask};
use crate::error::{Error, Result};
use crate::factorization::missing_cover_edge;
use crate::toric::{matrix_bg, same_row_space, ParamMatrix, RowLabel};

/// `p_S p_T - p_{S∩T} p_{S∪T}` for every incomparable pair `S, T` of `L`,
/// pairs taken in the lattice order. The `p_S p_T` side is the leading term.
pub fn hibi_generators(l: &DistributiveLattice) -> Vec<Binomial> {
    let el = l.elements();
    let mut out = Vec::new();
    for (a, &s) in el.iter().enumerate() {
        for &t in &el[a + 1..] {
            if !s.comparable(t) {
                out.push(Binomial::new(
                    vec![s, t],
                    vec![s.intersection(t), s.union(t)],
                ));
            }
        }
    }
    out
}

/// Rows `t, b_1, …, b_m`, one column per element of `L`.
pub fn hibi_matrix(l: &DistributiveLattice) -> Result<ParamMatrix> {
    if !l.is_natural() {
        return Err(Error::NotNatural);
    }
    let rows = std::iter::once(RowLabel::HibiT)
        .chain((1..=l.m()).map(RowLabel::HibiB))
        .collect();
    Ok(ParamMatrix::from_fn(
        l.m(),
        rows,
        l.elements().to_vec(),
        |r, s| match *r {
            RowLabel::HibiT => true,
            RowLabel::HibiB(i) => s.contains(i),
            _ => unreachable!(),
        },
    ))
}

/// The all-cliques matrix of `G` restricted to the columns of `L`.
pub fn lattice_model_matrix(l: &DistributiveLattice, g: &Graph) -> Result<ParamMatrix> {
    if g.m() != l.m() {
        return Err(Error::InvalidGraph(format!(
            "graph has {} vertices, expected {}",
            g.m(),
            l.m()
        )));
    }
    let poset = l.underlying_poset()?;
    if let Some((upper, lower)) = missing_cover_edge(&poset, g) {
        return Err(Error::MissingCoverEdge { upper, lower });
    }
    matrix_bg(g).restrict_columns(l.elements())
}

/// Whether the lattice-supported model of `G` has the Hibi ideal of `L`,
/// decided by comparing rational row spaces.
pub fn check_hibi_equality(l: &DistributiveLattice, g: &Graph) -> Result<bool> {
    same_row_space(&lattice_model_matrix(l, g)?, &hibi_matrix(l)?)
}

/// How clique parameters group into Hibi parameters: `t` collects `c_∅`
/// and `b_i` collects every `c_S` whose maximum element in `P` is `i`.
///
/// Fails on the first clique without a maximum, which shows `G` is not a
/// subgraph of the comparability graph.
pub fn substitution_witness(
    l: &DistributiveLattice,
    g: &Graph,
) -> Result<Vec<(RowLabel, Vec<SubsetMask>)>> {
    let poset = l.underlying_poset()?;
    let mut groups: Vec<(RowLabel, Vec<SubsetMask>)> = std::iter::once(RowLabel::HibiT)
        .chain((1..=l.m()).map(RowLabel::HibiB))
        .map(|r| (r, Vec::new()))
        .collect();
    for s in g.cliques().all {
        if s.is_empty() {
            groups[0].1.push(s);
            continue;
        }
        let i = poset.maximum(s).ok_or(Error::NotComparabilitySubgraph(s))?;
        groups[i].1.push(s);
    }
    Ok(groups)
}
