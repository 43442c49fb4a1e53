//! Monomial parametrizations of graphical models and the combinatorics of
//! their supports.
//!
//! A 0/1 matrix `A` with rows indexed by parameters and columns by subsets
//! `U ⊆ [m]` defines the monomial map `p_U = ∏_i θ_i^{a_iU}`. Two such
//! matrices describe every binary graphical model here:
//!
//! * [`matrix_ag`]: one row per maximal clique `S` and state `T ⊆ S`, with
//!   entry 1 when `U ∩ S = T`;
//! * [`matrix_bg`]: one row per clique `S` (including `∅`), with entry 1 when
//!   `S ⊆ U`.
//!
//! They share a row space, hence a kernel, hence a toric ideal.

pub mod fourier_motzkin;
pub mod linalg;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ci::Binomial;
use crate::combinat::{Graph, SubsetMask};
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::rng::random_rational;
use crate::Rational;

use fourier_motzkin::FmOutcome;
use linalg::{bareiss_rank, nullspace, primitive_integer, rref};

/// Name of one parameter (matrix row).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowLabel {
    /// `a^S_T`: potential of maximal clique `S` in state `T ⊆ S`.
    Factor {
        clique: SubsetMask,
        state: SubsetMask,
    },
    /// `c_S` for a clique `S`.
    Clique(SubsetMask),
    /// The Hibi parameter `t`.
    HibiT,
    /// The Hibi parameter `b_i`.
    HibiB(usize),
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::Factor { clique, state } => write!(f, "({clique},{state})"),
            RowLabel::Clique(s) => write!(f, "{s}"),
            RowLabel::HibiT => f.write_str("t"),
            RowLabel::HibiB(i) => write!(f, "b_{i}"),
        }
    }
}

/// A 0/1 matrix with labelled rows and subset-labelled columns.
///
/// Columns are always kept in (cardinality, bits) order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamMatrix {
    m: usize,
    rows: Vec<RowLabel>,
    cols: Vec<SubsetMask>,
    entries: Vec<Vec<u8>>,
}

/// One value per matrix row: a point in parameter space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamPoint(pub Vec<Rational>);

/// One coefficient per matrix row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearFunctional(pub Vec<Rational>);

impl ParamMatrix {
    /// Builds a matrix from a membership predicate.
    pub fn from_fn<F>(m: usize, rows: Vec<RowLabel>, mut cols: Vec<SubsetMask>, entry: F) -> Self
    where
        F: Fn(&RowLabel, SubsetMask) -> bool,
    {
        cols.sort();
        cols.dedup();
        let entries = rows
            .iter()
            .map(|r| cols.iter().map(|&c| u8::from(entry(r, c))).collect())
            .collect();
        ParamMatrix {
            m,
            rows,
            cols,
            entries,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[RowLabel] {
        &self.rows
    }

    pub fn cols(&self) -> &[SubsetMask] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.entries[row][col]
    }

    pub fn column_index(&self, s: SubsetMask) -> Option<usize> {
        self.cols.binary_search(&s).ok()
    }

    pub fn row_index(&self, label: &RowLabel) -> Option<usize> {
        self.rows.iter().position(|r| r == label)
    }

    /// Rows with a 1 in column `col`.
    pub fn column_support(&self, col: usize) -> Vec<usize> {
        (0..self.nrows())
            .filter(|&r| self.entries[r][col] == 1)
            .collect()
    }

    pub fn column(&self, col: usize) -> Vec<u8> {
        self.entries.iter().map(|r| r[col]).collect()
    }

    /// Keeps only the given columns.
    pub fn restrict_columns(&self, keep: &[SubsetMask]) -> Result<Self> {
        let mut idx = Vec::with_capacity(keep.len());
        for &s in keep {
            idx.push(self.column_index(s).ok_or(Error::UnknownColumn(s))?);
        }
        idx.sort_unstable();
        idx.dedup();
        Ok(ParamMatrix {
            m: self.m,
            rows: self.rows.clone(),
            cols: idx.iter().map(|&j| self.cols[j]).collect(),
            entries: self
                .entries
                .iter()
                .map(|r| idx.iter().map(|&j| r[j]).collect())
                .collect(),
        })
    }

    pub fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    pub fn rational_rows(&self) -> Vec<Vec<Rational>> {
        self.entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| Rational::from_integer(x.into()))
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        bareiss_rank(&self.integer_rows())
    }

    /// `c · a^j` for every column `j`.
    pub fn functional_values(&self, c: &LinearFunctional) -> Vec<Rational> {
        (0..self.ncols())
            .map(|j| {
                (0..self.nrows())
                    .filter(|&r| self.entries[r][j] == 1)
                    .fold(Rational::zero(), |acc, r| acc + &c.0[r])
            })
            .collect()
    }

    fn column_indices(&self, set: &[SubsetMask]) -> Result<Vec<bool>> {
        let mut inside = vec![false; self.ncols()];
        for &s in set {
            inside[self.column_index(s).ok_or(Error::UnknownColumn(s))?] = true;
        }
        Ok(inside)
    }

    /// A basis of the integer kernel directions, each scaled to a primitive
    /// integer vector indexed by columns.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        nullspace(&self.rational_rows(), self.ncols())
            .iter()
            .map(|v| primitive_integer(v))
            .collect()
    }

    /// The binomial `p^{u+} - p^{u-}` of an integer kernel vector `u`.
    pub fn kernel_vector_binomial(&self, u: &[BigInt]) -> Binomial {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (j, x) in u.iter().enumerate() {
            let k: usize = x.abs().try_into().expect("small exponent");
            let target = if x.is_positive() {
                &mut plus
            } else {
                &mut minus
            };
            target.extend(std::iter::repeat_n(self.cols[j], k));
        }
        Binomial::new(plus, minus)
    }

    /// Plain-text grid with a header row of column labels.
    pub fn to_text(&self) -> String {
        let row_labels: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        let col_labels: Vec<String> = self.cols.iter().map(|c| c.to_string()).collect();
        let lw = row_labels
            .iter()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(0);
        let cw = col_labels
            .iter()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        out.push_str(&" ".repeat(lw));
        for c in &col_labels {
            out.push_str(&format!(" {c:>cw$}"));
        }
        out.push('\n');
        for (label, row) in row_labels.iter().zip(&self.entries) {
            let pad = lw - label.chars().count();
            out.push_str(label);
            out.push_str(&" ".repeat(pad));
            for x in row {
                out.push_str(&format!(" {x:>cw$}"));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ParamMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Matrix of the clique-potential parametrization: rows `(S, T)` for each
/// maximal clique `S` and `T ⊆ S`, columns all of `2^[m]`.
pub fn matrix_ag(g: &Graph) -> ParamMatrix {
    let rows = g
        .cliques()
        .maximal
        .iter()
        .flat_map(|&s| {
            s.subsets().into_iter().map(move |t| RowLabel::Factor {
                clique: s,
                state: t,
            })
        })
        .collect();
    ParamMatrix::from_fn(
        g.m(),
        rows,
        SubsetMask::all_subsets(g.m()),
        |r, u| match *r {
            RowLabel::Factor { clique, state } => u.intersection(clique) == state,
            _ => unreachable!(),
        },
    )
}

/// Matrix of the all-cliques parametrization: one row per clique `S`,
/// entry 1 iff `S ⊆ U`.
pub fn matrix_bg(g: &Graph) -> ParamMatrix {
    let rows = g.cliques().all.into_iter().map(RowLabel::Clique).collect();
    ParamMatrix::from_fn(
        g.m(),
        rows,
        SubsetMask::all_subsets(g.m()),
        |r, u| match *r {
            RowLabel::Clique(s) => s.is_subset(u),
            _ => unreachable!(),
        },
    )
}

/// `p_U = ∏_i θ_i^{a_iU}`, with `0^0 = 1`. Columns outside the matrix are 0.
pub fn apply_param(mat: &ParamMatrix, theta: &ParamPoint) -> Result<Distribution> {
    if theta.0.len() != mat.nrows() {
        return Err(Error::ParamLength {
            expected: mat.nrows(),
            got: theta.0.len(),
        });
    }
    if let Some(bad) = theta.0.iter().find(|t| t.is_negative()) {
        return Err(Error::NonPositiveParameter(format!(
            "negative parameter {bad}"
        )));
    }
    let values = (0..mat.ncols()).map(|j| {
        let v = mat
            .column_support(j)
            .into_iter()
            .fold(Rational::one(), |acc, r| acc * &theta.0[r]);
        (mat.cols[j], v)
    });
    Distribution::new(mat.m, values.collect::<Vec<_>>())
}

/// Verdict of [`is_feasible`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Feasibility {
    /// Rows `H` outside the union of the supports of the set's columns; the
    /// set is exactly the set of columns vanishing on `H`.
    Feasible { hidden_rows: Vec<usize> },
    /// A column outside the set whose support is covered by the set.
    Infeasible { column: SubsetMask },
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible { .. })
    }
}

fn check_nonzero_columns(mat: &ParamMatrix) -> Result<()> {
    for j in 0..mat.ncols() {
        if mat.entries.iter().all(|r| r[j] == 0) {
            return Err(Error::EmptyColumn(mat.cols[j]));
        }
    }
    Ok(())
}

fn support_union(mat: &ParamMatrix, inside: &[bool]) -> Vec<bool> {
    (0..mat.nrows())
        .map(|r| (0..mat.ncols()).any(|j| inside[j] && mat.entries[r][j] == 1))
        .collect()
}

/// A column set `F` is feasible when no column outside `F` has its support
/// inside the union of the supports of the columns in `F`.
pub fn is_feasible(mat: &ParamMatrix, set: &[SubsetMask]) -> Result<Feasibility> {
    check_nonzero_columns(mat)?;
    let inside = mat.column_indices(set)?;
    let covered = support_union(mat, &inside);
    for j in (0..mat.ncols()).filter(|&j| !inside[j]) {
        if (0..mat.nrows()).all(|r| mat.entries[r][j] == 0 || covered[r]) {
            return Ok(Feasibility::Infeasible {
                column: mat.cols[j],
            });
        }
    }
    Ok(Feasibility::Feasible {
        hidden_rows: (0..mat.nrows()).filter(|&r| !covered[r]).collect(),
    })
}

/// Columns with zeros in every row of `rows`.
pub fn zero_set(mat: &ParamMatrix, rows: &[usize]) -> Vec<SubsetMask> {
    (0..mat.ncols())
        .filter(|&j| rows.iter().all(|&r| mat.entries[r][j] == 0))
        .map(|j| mat.cols[j])
        .collect()
}

/// Feasibility through the row-set characterization: `F` is feasible iff it
/// is the zero set of the rows missed by its own supports.
pub fn is_feasible_by_rows(mat: &ParamMatrix, set: &[SubsetMask]) -> Result<bool> {
    check_nonzero_columns(mat)?;
    let inside = mat.column_indices(set)?;
    let covered = support_union(mat, &inside);
    let hidden: Vec<usize> = (0..mat.nrows()).filter(|&r| !covered[r]).collect();
    let mut expected: Vec<SubsetMask> = set.to_vec();
    expected.sort();
    expected.dedup();
    Ok(zero_set(mat, &hidden) == expected)
}

/// The indicator of a row set, as a functional.
pub fn indicator(mat: &ParamMatrix, rows: &[usize]) -> LinearFunctional {
    let mut c = vec![Rational::zero(); mat.nrows()];
    for &r in rows {
        c[r] = Rational::one();
    }
    LinearFunctional(c)
}

/// Verdict of [`is_facial`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Faciality {
    /// An integer functional vanishing on the set's columns and at least 1 on
    /// every other column.
    Facial(LinearFunctional),
    /// Nonnegative weights on columns outside the set whose weighted sum
    /// lies in the linear span of the set's columns.
    NotFacial {
        multipliers: Vec<(SubsetMask, Rational)>,
    },
}

impl Faciality {
    pub fn is_facial(&self) -> bool {
        matches!(self, Faciality::Facial(_))
    }
}

/// Decides whether `F` is cut out by a face of the cone over the columns:
/// is there `c` with `c·a^j = 0` on `F` and `c·a^j >= 1` off `F`?
///
/// A feasible set needs no search: the indicator of its hidden rows
/// vanishes on the set and counts at least one hidden row elsewhere. Other
/// sets go to [`facial_by_elimination`].
pub fn is_facial(mat: &ParamMatrix, set: &[SubsetMask]) -> Result<Faciality> {
    mat.column_indices(set)?;
    if let Ok(Feasibility::Feasible { hidden_rows }) = is_feasible(mat, set) {
        return Ok(Faciality::Facial(indicator(mat, &hidden_rows)));
    }
    facial_by_elimination(mat, set)
}

/// The faciality decision by exact elimination alone.
///
/// The search runs in the row space. A basis of independent rows `B` is
/// chosen, the equalities are solved exactly by a nullspace `N` of the
/// columns of `B` in `F`, and the remaining strict inequalities in the
/// coordinates of `N` go to Fourier–Motzkin.
pub fn facial_by_elimination(mat: &ParamMatrix, set: &[SubsetMask]) -> Result<Faciality> {
    let inside = mat.column_indices(set)?;
    let rows = mat.rational_rows();
    let n = mat.ncols();

    // independent rows = pivot columns of the transpose
    let transpose: Vec<Vec<Rational>> = (0..n)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect();
    let basis_rows = if n == 0 {
        Vec::new()
    } else {
        rref(&transpose).1
    };
    let r = basis_rows.len();

    let eq: Vec<Vec<Rational>> = (0..n)
        .filter(|&j| inside[j])
        .map(|j| basis_rows.iter().map(|&i| rows[i][j].clone()).collect())
        .collect();
    let null = if eq.is_empty() {
        (0..r)
            .map(|k| {
                let mut e = vec![Rational::zero(); r];
                e[k] = Rational::one();
                e
            })
            .collect()
    } else {
        nullspace(&eq, r)
    };

    let outside: Vec<usize> = (0..n).filter(|&j| !inside[j]).collect();
    let coef: Vec<Vec<Rational>> = outside
        .iter()
        .map(|&j| {
            null.iter()
                .map(|v| {
                    basis_rows
                        .iter()
                        .zip(v)
                        .fold(Rational::zero(), |acc, (&i, y)| acc + &rows[i][j] * y)
                })
                .collect()
        })
        .collect();
    let rhs = vec![Rational::one(); outside.len()];

    match fourier_motzkin::solve(&coef, &rhs, null.len()) {
        FmOutcome::Feasible(z) => {
            let mut c = vec![Rational::zero(); mat.nrows()];
            for (k, &i) in basis_rows.iter().enumerate() {
                c[i] = null
                    .iter()
                    .zip(&z)
                    .fold(Rational::zero(), |acc, (v, zt)| acc + &v[k] * zt);
            }
            let c: Vec<Rational> = primitive_integer(&c)
                .into_iter()
                .map(Rational::from)
                .collect();
            let functional = LinearFunctional(c);
            check_facial_certificate(mat, set, &functional)?;
            Ok(Faciality::Facial(functional))
        }
        FmOutcome::Infeasible(lambda) => Ok(Faciality::NotFacial {
            multipliers: outside
                .iter()
                .zip(lambda)
                .filter(|(_, l)| !l.is_zero())
                .map(|(&j, l)| (mat.cols[j], l))
                .collect(),
        }),
    }
}

/// Checks that `c` vanishes on the columns of `set` and is positive elsewhere.
pub fn check_facial_certificate(
    mat: &ParamMatrix,
    set: &[SubsetMask],
    c: &LinearFunctional,
) -> Result<()> {
    if c.0.len() != mat.nrows() {
        return Err(Error::ParamLength {
            expected: mat.nrows(),
            got: c.0.len(),
        });
    }
    let inside = mat.column_indices(set)?;
    for (j, v) in mat.functional_values(c).into_iter().enumerate() {
        if inside[j] && !v.is_zero() {
            return Err(Error::BadCertificate {
                column: mat.cols[j],
                reason: format!("value {v} on a column of the set"),
            });
        }
        if !inside[j] && !v.is_positive() {
            return Err(Error::BadCertificate {
                column: mat.cols[j],
                reason: format!("value {v} off the set"),
            });
        }
    }
    Ok(())
}

/// Checks a non-faciality certificate: weights are nonnegative and not all
/// zero, live off the set, and their weighted column sum lies in the span of
/// the set's columns.
pub fn check_nonfacial_certificate(
    mat: &ParamMatrix,
    set: &[SubsetMask],
    multipliers: &[(SubsetMask, Rational)],
) -> Result<bool> {
    let inside = mat.column_indices(set)?;
    if multipliers.is_empty() || multipliers.iter().any(|(_, l)| l.is_negative()) {
        return Ok(false);
    }
    if multipliers.iter().all(|(_, l)| l.is_zero()) {
        return Ok(false);
    }
    let mut combo = vec![Rational::zero(); mat.nrows()];
    for (s, l) in multipliers {
        let j = mat.column_index(*s).ok_or(Error::UnknownColumn(*s))?;
        if inside[j] {
            return Ok(false);
        }
        for (r, slot) in combo.iter_mut().enumerate() {
            if mat.entries[r][j] == 1 {
                *slot += l;
            }
        }
    }
    let span: Vec<Vec<Rational>> = (0..mat.ncols())
        .filter(|&j| inside[j])
        .map(|j| {
            mat.column(j)
                .into_iter()
                .map(|x| Rational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let base = linalg::rational_rank(&span);
    let mut extended = span;
    extended.push(combo);
    Ok(linalg::rational_rank(&extended) == base)
}

/// Parameters realizing `set` as an exact support: zero on the hidden rows
/// of the feasibility witness, seeded positive rationals elsewhere.
pub fn feasible_point(mat: &ParamMatrix, set: &[SubsetMask], seed: u64) -> Result<ParamPoint> {
    let hidden = match is_feasible(mat, set)? {
        Feasibility::Feasible { hidden_rows } => hidden_rows,
        Feasibility::Infeasible { column } => return Err(Error::NotFeasible(column)),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut theta: Vec<Rational> = (0..mat.nrows())
        .map(|_| random_rational(&mut rng))
        .collect();
    for r in hidden {
        theta[r] = Rational::zero();
    }
    Ok(ParamPoint(theta))
}

/// A point in the image of the parametrization whose support is exactly `set`.
pub fn realize_support(mat: &ParamMatrix, set: &[SubsetMask], seed: u64) -> Result<Distribution> {
    apply_param(mat, &feasible_point(mat, set, seed)?)
}

/// The deformation `p_j(ε) = ε^{c·a^j} ∏_i θ_i^{a_ij}`.
///
/// On the set the exponent is 0 and the value does not depend on `ε`; off
/// the set it is a positive integer, so the coordinate tends to 0 with `ε`.
pub fn facial_limit_witness(
    mat: &ParamMatrix,
    set: &[SubsetMask],
    c: &LinearFunctional,
    theta: &ParamPoint,
    eps: &Rational,
) -> Result<Distribution> {
    if !eps.is_positive() {
        return Err(Error::NonPositiveParameter(format!("epsilon {eps}")));
    }
    if let Some(bad) = theta.0.iter().find(|t| !t.is_positive()) {
        return Err(Error::NonPositiveParameter(format!("parameter {bad}")));
    }
    check_facial_certificate(mat, set, c)?;
    let base = apply_param(mat, theta)?;
    let values = mat.functional_values(c);
    let mut entries = Vec::with_capacity(mat.ncols());
    for (j, e) in values.iter().enumerate() {
        if !e.is_integer() {
            return Err(Error::NonIntegerExponent(mat.cols[j]));
        }
        let k: i32 = e
            .to_integer()
            .try_into()
            .map_err(|_| Error::NonIntegerExponent(mat.cols[j]))?;
        entries.push((
            mat.cols[j],
            base.get(mat.cols[j]) * num_traits::pow(eps.clone(), k as usize),
        ));
    }
    Distribution::new(mat.m, entries)
}

/// `p^u - p^v` lies in the toric ideal iff the matrix maps `u` and `v` to the
/// same vector.
pub fn in_toric_kernel(mat: &ParamMatrix, b: &Binomial) -> Result<bool> {
    let idx = |s: &SubsetMask| mat.column_index(*s).ok_or(Error::UnknownColumn(*s));
    let plus = b.plus.iter().map(idx).collect::<Result<Vec<_>>>()?;
    let minus = b.minus.iter().map(idx).collect::<Result<Vec<_>>>()?;
    Ok((0..mat.nrows()).all(|r| {
        let lhs: u32 = plus.iter().map(|&j| u32::from(mat.entries[r][j])).sum();
        let rhs: u32 = minus.iter().map(|&j| u32::from(mat.entries[r][j])).sum();
        lhs == rhs
    }))
}

/// Equal rational row spaces (hence equal kernels and toric ideals), decided
/// by `rank M1 = rank M2 = rank [M1; M2]`.
pub fn same_row_space(m1: &ParamMatrix, m2: &ParamMatrix) -> Result<bool> {
    if m1.cols != m2.cols {
        return Err(Error::ColumnMismatch);
    }
    let a = m1.integer_rows();
    let b = m2.integer_rows();
    let ra = bareiss_rank(&a);
    let rb = bareiss_rank(&b);
    if ra != rb {
        return Ok(false);
    }
    let stacked: Vec<Vec<BigInt>> = a.into_iter().chain(b).collect();
    Ok(bareiss_rank(&stacked) == ra)
}
