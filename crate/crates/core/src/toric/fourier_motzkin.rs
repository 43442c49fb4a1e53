//! Exact Fourier–Motzkin elimination for systems `G z >= h`.
//!
//! Every derived inequality remembers the nonnegative combination of the
//! input rows that produced it, so an infeasible system comes back with a
//! Farkas certificate: multipliers `λ >= 0` with `λᵀG = 0` and `λᵀh > 0`.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use crate::Rational;

/// Outcome of [`solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FmOutcome {
    /// A point satisfying every inequality.
    Feasible(Vec<Rational>),
    /// Nonnegative multipliers, one per input row, proving infeasibility.
    Infeasible(Vec<Rational>),
}

#[derive(Clone, Debug)]
struct Row {
    coef: Vec<Rational>,
    rhs: Rational,
    mult: Vec<Rational>,
}

impl Row {
    fn scale(&mut self, s: &Rational) {
        for c in self.coef.iter_mut() {
            *c *= s;
        }
        self.rhs *= s;
        for c in self.mult.iter_mut() {
            *c *= s;
        }
    }

    /// Divides by the magnitude of the first nonzero coefficient.
    fn normalize(&mut self) {
        if let Some(lead) = self.coef.iter().find(|c| !c.is_zero()) {
            let s = lead.abs().recip();
            self.scale(&s);
        }
    }

    fn is_trivial(&self) -> bool {
        self.coef.iter().all(Zero::is_zero)
    }
}

/// Decides `coef[k] · z >= rhs[k]` for all `k`.
pub fn solve(coef: &[Vec<Rational>], rhs: &[Rational], nvars: usize) -> FmOutcome {
    let k = coef.len();
    let mut system: Vec<Row> = coef
        .iter()
        .zip(rhs)
        .enumerate()
        .map(|(idx, (c, h))| {
            let mut mult = vec![Rational::zero(); k];
            mult[idx] = Rational::from_integer(1.into());
            Row {
                coef: c.clone(),
                rhs: h.clone(),
                mult,
            }
        })
        .collect();

    // levels[v] is the system in variables 0..=v, before v is eliminated
    let mut levels: Vec<Vec<Row>> = vec![Vec::new(); nvars];
    for var in (0..nvars).rev() {
        if let Some(bad) = contradiction(&system) {
            return FmOutcome::Infeasible(bad);
        }
        let mut zero = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for row in &system {
            if row.coef[var].is_positive() {
                pos.push(row);
            } else if row.coef[var].is_negative() {
                neg.push(row);
            } else {
                zero.push(row.clone());
            }
        }
        let mut next = zero;
        for p in &pos {
            for q in &neg {
                let a = -q.coef[var].clone();
                let b = p.coef[var].clone();
                let mut row = Row {
                    coef: p
                        .coef
                        .iter()
                        .zip(&q.coef)
                        .map(|(x, y)| x * &a + y * &b)
                        .collect(),
                    rhs: &p.rhs * &a + &q.rhs * &b,
                    mult: p
                        .mult
                        .iter()
                        .zip(&q.mult)
                        .map(|(x, y)| x * &a + y * &b)
                        .collect(),
                };
                row.coef[var] = Rational::zero();
                row.normalize();
                next.push(row);
            }
        }
        levels[var] = std::mem::replace(&mut system, prune(next));
    }
    if let Some(bad) = contradiction(&system) {
        return FmOutcome::Infeasible(bad);
    }

    let mut z = vec![Rational::zero(); nvars];
    for var in 0..nvars {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for row in &levels[var] {
            let a = &row.coef[var];
            if a.is_zero() {
                continue;
            }
            let rest = row.coef[..var]
                .iter()
                .zip(&z[..var])
                .fold(Rational::zero(), |acc, (c, x)| acc + c * x);
            let bound = (&row.rhs - rest) / a;
            if a.is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            }
        }
        z[var] = pick(lo, hi);
    }
    debug_assert!(coef.iter().zip(rhs).all(|(c, h)| c
        .iter()
        .zip(&z)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
        >= *h));
    FmOutcome::Feasible(z)
}

fn contradiction(system: &[Row]) -> Option<Vec<Rational>> {
    system
        .iter()
        .find(|r| r.is_trivial() && r.rhs.is_positive())
        .map(|r| r.mult.clone())
}

/// Drops satisfied trivial rows and keeps the tightest of parallel rows.
fn prune(rows: Vec<Row>) -> Vec<Row> {
    let mut best: HashMap<Vec<Rational>, Row> = HashMap::new();
    let mut order = Vec::new();
    for row in rows {
        if row.is_trivial() && !row.rhs.is_positive() {
            continue;
        }
        match best.get_mut(&row.coef) {
            Some(existing) => {
                if row.rhs > existing.rhs {
                    *existing = row;
                }
            }
            None => {
                order.push(row.coef.clone());
                best.insert(row.coef.clone(), row);
            }
        }
    }
    order
        .into_iter()
        .map(|c| best.remove(&c).unwrap())
        .collect()
}

/// A value in `[lo, hi]`, preferring 0 and then integers.
fn pick(lo: Option<Rational>, hi: Option<Rational>) -> Rational {
    let zero = Rational::zero();
    let inside =
        |x: &Rational| lo.as_ref().is_none_or(|l| x >= l) && hi.as_ref().is_none_or(|h| x <= h);
    if inside(&zero) {
        return zero;
    }
    match (&lo, &hi) {
        (Some(l), _) if inside(&l.ceil()) => l.ceil(),
        (Some(l), _) => l.clone(),
        (None, Some(h)) => h.floor(),
        (None, None) => zero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn rows(r: &[&[i64]]) -> Vec<Vec<Rational>> {
        r.iter()
            .map(|x| x.iter().map(|&v| q(v)).collect())
            .collect()
    }

    fn check_farkas(g: &[Vec<Rational>], h: &[Rational], lambda: &[Rational]) {
        assert!(lambda.iter().all(|l| !l.is_negative()));
        let nvars = g[0].len();
        for v in 0..nvars {
            let s = g
                .iter()
                .zip(lambda)
                .fold(q(0), |acc, (row, l)| acc + &row[v] * l);
            assert!(s.is_zero());
        }
        let s = h.iter().zip(lambda).fold(q(0), |acc, (x, l)| acc + x * l);
        assert!(s.is_positive());
    }

    #[test]
    fn feasible_box() {
        // x >= 1, y >= 2, -x - y >= -5
        let g = rows(&[&[1, 0], &[0, 1], &[-1, -1]]);
        let h = vec![q(1), q(2), q(-5)];
        match solve(&g, &h, 2) {
            FmOutcome::Feasible(z) => {
                assert!(z[0] >= q(1) && z[1] >= q(2) && &z[0] + &z[1] <= q(5));
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_with_certificate() {
        // x >= 1 and -x >= 0
        let g = rows(&[&[1], &[-1]]);
        let h = vec![q(1), q(0)];
        match solve(&g, &h, 1) {
            FmOutcome::Infeasible(l) => check_farkas(&g, &h, &l),
            other => panic!("expected infeasible, got {other:?}"),
        }
        // x + y >= 1, -x >= 0, -y >= 0, x - y >= -3
        let g = rows(&[&[1, 1], &[-1, 0], &[0, -1], &[1, -1]]);
        let h = vec![q(1), q(0), q(0), q(-3)];
        match solve(&g, &h, 2) {
            FmOutcome::Infeasible(l) => check_farkas(&g, &h, &l),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn zero_variable_systems() {
        assert_eq!(solve(&[], &[], 0), FmOutcome::Feasible(vec![]));
        assert_eq!(solve(&[vec![]], &[q(-1)], 0), FmOutcome::Feasible(vec![]));
        assert!(matches!(
            solve(&[vec![]], &[q(1)], 0),
            FmOutcome::Infeasible(_)
        ));
    }
}
