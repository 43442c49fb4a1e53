//! Seeded random instances and end-to-end verifiers.
//!
//! Each verifier returns a [`Report`] whose `failures` list is expected to
//! be empty; [`sweep`] runs them over many random posets and graphs.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::ci::{eval_binomial, global_binomials, pairwise_binomials, satisfies_all, Binomial};
use crate::combinat::{lattice_close, order_ideals, DistributiveLattice, Graph, Poset, SubsetMask};
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::factorization::{
    clique_closures, dimension_counts, extend_by_recursion, factorize, to_standard_params,
    to_support_params, verify_certificate,
};
use crate::io::SCHEMA_VERSION;
use crate::rng::random_rational;
use crate::toric::{
    apply_param, check_facial_certificate, check_nonfacial_certificate, facial_by_elimination,
    in_toric_kernel, is_facial, is_feasible, is_feasible_by_rows, matrix_ag, matrix_bg,
    realize_support, Faciality, Feasibility,
};
use crate::Rational;

/// Outcome of one verifier run.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Report {
    pub verifier: String,
    pub instance: String,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(verifier: &str, instance: String) -> Self {
        Report {
            verifier: verifier.to_string(),
            instance,
            checks: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.checks += 1;
        self.failures.push(what);
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.is_ok() { "ok" } else { "FAIL" };
        writeln!(
            f,
            "{} [{}]: {verdict} ({} checks)",
            self.verifier, self.instance, self.checks
        )?;
        for line in &self.failures {
            writeln!(f, "  failure: {line}")?;
        }
        for line in &self.notes {
            writeln!(f, "  note: {line}")?;
        }
        Ok(())
    }
}

fn describe(p: &Poset, g: &Graph) -> String {
    let covers: Vec<String> = p.covers().iter().map(|(u, l)| format!("{u}>{l}")).collect();
    let edges: Vec<String> = g.edges().iter().map(|(i, j)| format!("{i}{j}")).collect();
    format!(
        "m={} covers=[{}] edges=[{}]",
        p.m(),
        covers.join(","),
        edges.join(",")
    )
}

/// A random poset: a shuffled order of `[m]`, each earlier element placed
/// below each later one with a per-poset density from `{0, 1/4, …, 1}`,
/// then transitively closed.
pub fn random_poset(m: usize, seed: u64) -> Result<Poset> {
    crate::combinat::check_ground(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = f64::from(rng.gen_range(0..=4u8)) / 4.0;
    let mut order: Vec<usize> = (1..=m).collect();
    order.shuffle(&mut rng);
    let mut down = vec![SubsetMask::EMPTY; m];
    for (k, &x) in order.iter().enumerate() {
        let mut d = SubsetMask::singleton(x);
        for &y in &order[..k] {
            if rng.gen_bool(density) {
                d = d.union(down[y - 1]);
            }
        }
        down[x - 1] = d;
    }
    Poset::from_downsets(m, down)
}

/// `g0` plus each missing pair with a per-call density from `{0, 1/4, …, 1}`.
pub fn random_supergraph(g0: &Graph, m: usize, seed: u64) -> Result<Graph> {
    if g0.m() != m {
        return Err(Error::InvalidGraph(format!(
            "graph has {} vertices, expected {m}",
            g0.m()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = f64::from(rng.gen_range(0..=4u8)) / 4.0;
    let mut edges = g0.edges();
    for pair in g0.non_edges() {
        if rng.gen_bool(density) {
            edges.push(pair);
        }
    }
    Graph::from_edges(m, &edges)
}

/// Random positive values on the clique closures of `L`, extended to all of
/// `L` by the forced-coordinate recursion.
pub fn lattice_distribution(l: &DistributiveLattice, g: &Graph, seed: u64) -> Result<Distribution> {
    let closures = clique_closures(l, g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let free: BTreeMap<SubsetMask, Rational> = closures
        .closures
        .iter()
        .map(|&s| (s, random_rational(&mut rng)))
        .collect();
    extend_by_recursion(l, g, &free)
}

/// Random positive values on every element of `L`.
pub fn random_lattice_supported(l: &DistributiveLattice, seed: u64) -> Result<Distribution> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Distribution::new(
        l.m(),
        l.elements()
            .iter()
            .map(|&s| (s, random_rational(&mut rng)))
            .collect::<Vec<_>>(),
    )
}

/// Builds a lattice-supported distribution from random free coordinates and
/// checks every consequence: Markov binomials vanish, factorization
/// succeeds and reproduces `p`, and both parametrizations agree.
pub fn verify_hc_roundtrip(poset: &Poset, g: &Graph, seed: u64) -> Report {
    let mut report = Report::new(
        "hc-roundtrip",
        format!("{} seed={seed}", describe(poset, g)),
    );
    let l = order_ideals(poset);
    let (n_free, n_forced) = match dimension_counts(&l, g) {
        Ok(c) => c,
        Err(e) => {
            report.fail(format!("dimension counts: {e}"));
            return report;
        }
    };
    let p = match lattice_distribution(&l, g, seed) {
        Ok(p) => p,
        Err(e) => {
            report.fail(format!("building p: {e}"));
            return report;
        }
    };
    report.check(p.support() == l.elements(), || {
        "support of p is not L".into()
    });
    report.check(n_free + n_forced == l.len(), || {
        "dimension counts do not add up".into()
    });

    let pairwise = pairwise_binomials(g);
    let pw = satisfies_all(&pairwise, &p);
    report.check(pw.is_empty(), || {
        format!(
            "{} pairwise binomials do not vanish, first {}",
            pw.violations.len(),
            pw.violations[0].binomial
        )
    });
    let global = global_binomials(g);
    let gl = satisfies_all(&global, &p);
    report.check(gl.is_empty(), || {
        format!(
            "{} global binomials do not vanish, first {}",
            gl.violations.len(),
            gl.violations[0].binomial
        )
    });

    let a = matrix_ag(g);
    let mut toric = 0usize;
    for b in pairwise.iter().chain(&global) {
        if in_toric_kernel(&a, b).unwrap_or(false) {
            toric += 1;
            report.check(
                eval_binomial(b, &p) == Rational::from_integer(0.into()),
                || format!("toric generator {b} does not vanish"),
            );
        }
    }
    report.check(toric == pairwise.len() + global.len(), || {
        "some Markov binomial is outside the toric ideal".into()
    });

    match factorize(&p, g) {
        Ok(cert) => {
            report.check(cert.dependent_trace.len() == n_forced, || {
                format!(
                    "trace has {} steps, expected {n_forced}",
                    cert.dependent_trace.len()
                )
            });
            report.check(verify_certificate(&cert, &p, g), || {
                "certificate does not reproduce p".into()
            });
            let b = matrix_bg(g);
            let lhs = to_standard_params(&cert, g).and_then(|t| apply_param(&a, &t));
            let full_c = crate::toric::ParamPoint(
                g.cliques()
                    .all
                    .iter()
                    .map(|c| cert.clique_params[c].clone())
                    .collect(),
            );
            let rhs = apply_param(&b, &full_c);
            report.check(matches!((&lhs, &rhs), (Ok(x), Ok(y)) if x == y), || {
                "standard parameters disagree with clique parameters".into()
            });
            let exact = to_support_params(&cert, g).and_then(|t| apply_param(&a, &t));
            report.check(matches!(&exact, Ok(x) if *x == p), || {
                "support parameters do not reproduce p on every subset".into()
            });
        }
        Err(e) => report.fail(format!("factorize: {e}")),
    }
    report
}

/// For every cover `i > j` of `P`, checks the four sets of the forcing
/// argument and that the pairwise binomial of the non-edge `{i, j}` cannot
/// vanish on a distribution supported on `J(P)`.
pub fn verify_cover_forcing(poset: &Poset, seed: u64) -> Report {
    let mut report = Report::new(
        "cover-forcing",
        format!(
            "{} seed={seed}",
            describe(poset, &Graph::empty(poset.m()).expect("valid m"))
        ),
    );
    let l = order_ideals(poset);
    let p = match random_lattice_supported(&l, seed) {
        Ok(p) => p,
        Err(e) => {
            report.fail(format!("building p: {e}"));
            return report;
        }
    };
    if poset.covers().is_empty() {
        report.notes.push("no cover pairs".into());
    }
    for &(i, j) in poset.covers() {
        let c = poset.down(i).without(i).without(j);
        let (cj, cij, ci) = (c.with(j), c.with(i).with(j), c.with(i));
        report.check(l.contains(c) && l.contains(cj) && l.contains(cij), || {
            format!("cover {i}>{j}: {c}, {cj} or {cij} is not an order ideal")
        });
        report.check(!l.contains(ci), || {
            format!("cover {i}>{j}: {ci} is an order ideal")
        });
        let b = Binomial::quadric(c, cij, ci, cj);
        report.check(
            eval_binomial(&b, &p) != Rational::from_integer(0.into()),
            || format!("cover {i}>{j}: {b} vanishes"),
        );
        let g = Graph::complete(poset.m())
            .and_then(|k| {
                let edges: Vec<_> = k
                    .edges()
                    .into_iter()
                    .filter(|&e| e != (j.min(i), j.max(i)))
                    .collect();
                Graph::from_edges(poset.m(), &edges)
            })
            .expect("valid graph");
        report.check(
            pairwise_binomials(&g).iter().any(|x| x.same_up_to_sign(&b)),
            || format!("cover {i}>{j}: {b} is not a pairwise binomial"),
        );
        report.check(
            factorize(&p, &g) == Err(Error::MissingCoverEdge { upper: i, lower: j }),
            || format!("cover {i}>{j}: factorize does not report the missing edge"),
        );
    }
    report
}

/// The lattice `{∅, 12, 3, 4, 34, 123, 124, 1234}` of the four-cycle
/// counterexample.
pub fn unnatural_lattice() -> DistributiveLattice {
    let sets = ["", "1,2", "3", "4", "3,4", "1,2,3", "1,2,4", "1,2,3,4"];
    DistributiveLattice::new(
        4,
        sets.iter()
            .map(|s| SubsetMask::parse_list(s, 4).expect("valid set")),
    )
    .expect("closed family")
}

/// `p_∅ p_34 p_124 p_123 - p_4 p_3 p_12 p_1234`.
pub fn separating_quartic() -> Binomial {
    let s = |t: &str| SubsetMask::parse_list(t, 4).expect("valid set");
    Binomial::new(
        vec![s(""), s("3,4"), s("1,2,4"), s("1,2,3")],
        vec![s("4"), s("3"), s("1,2"), s("1,2,3,4")],
    )
}

/// The counterexample with `p_∅ = 1/2` and `1/14` elsewhere on the lattice.
pub fn verify_unnatural_counterexample() -> Report {
    verify_unnatural_counterexample_with(Rational::new(1.into(), 2.into()))
}

/// The counterexample distribution with a chosen `p_∅` and `1/14` on the
/// other seven sets.
///
/// A failure is recorded unless `p` satisfies every Markov binomial of the
/// four-cycle and misses the quartic; with `p_∅ = 1/14` the quartic
/// vanishes and the report says so.
pub fn verify_unnatural_counterexample_with(p_empty: Rational) -> Report {
    let mut report = Report::new("unnatural-counterexample", format!("p_∅={p_empty}"));
    let l = unnatural_lattice();
    let g = Graph::cycle(4).expect("four-cycle");
    let closed = lattice_close(4, l.elements().iter().copied());
    report.check(closed.as_ref() == Ok(&l), || "lattice is not closed".into());
    report.check(!l.is_natural(), || "lattice is natural".into());

    let fourteenth = Rational::new(1.into(), 14.into());
    let p = Distribution::new(
        4,
        l.elements().iter().map(|&s| {
            (
                s,
                if s.is_empty() {
                    p_empty.clone()
                } else {
                    fourteenth.clone()
                },
            )
        }),
    )
    .expect("nonnegative values");

    let pw = satisfies_all(&pairwise_binomials(&g), &p);
    report.check(pw.is_empty() && pw.checked == 8, || {
        "a quadric does not vanish".into()
    });
    report.check(satisfies_all(&global_binomials(&g), &p).is_empty(), || {
        "a global Markov binomial does not vanish".into()
    });
    let quartic = separating_quartic();
    report.check(
        in_toric_kernel(&matrix_ag(&g), &quartic) == Ok(true),
        || "quartic is not in the toric ideal".into(),
    );
    let value = eval_binomial(&quartic, &p);
    if value == Rational::from_integer(0.into()) {
        report.fail(format!("quartic vanishes at p_∅={p_empty}"));
        report
            .notes
            .push("the witness no longer separates the Markov and toric ideals".into());
    } else {
        report.notes.push(format!("quartic value {value}"));
    }
    report.check(factorize(&p, &g) == Err(Error::NotNaturalSupport), || {
        "factorize accepted an unnatural support".into()
    });
    report
}

fn random_column_set(cols: &[SubsetMask], rng: &mut ChaCha8Rng) -> Vec<SubsetMask> {
    cols.iter().copied().filter(|_| rng.gen_bool(0.5)).collect()
}

/// Feasibility and faciality on one instance: `L` is feasible for the
/// clique-potential matrix and realizable, feasible sets are facial with
/// the hidden-row indicator as certificate, and the two feasibility tests
/// agree on random column sets.
///
/// With `elimination` set, faciality is also decided by Fourier–Motzkin
/// alone and its certificates are checked.
pub fn verify_feasibility(poset: &Poset, g: &Graph, seed: u64, elimination: bool) -> Report {
    let mut report = Report::new("feasibility", format!("{} seed={seed}", describe(poset, g)));
    let l = order_ideals(poset);
    let a = matrix_ag(g);
    let b = matrix_bg(g);
    match is_feasible(&a, l.elements()) {
        Ok(Feasibility::Feasible { .. }) => {}
        other => report.fail(format!(
            "L is not feasible for the clique-potential matrix: {other:?}"
        )),
    }
    match realize_support(&a, l.elements(), seed) {
        Ok(p) => {
            report.check(p.support() == l.elements(), || {
                "realized support differs from L".into()
            });
            report.check(satisfies_all(&pairwise_binomials(g), &p).is_empty(), || {
                "realized point violates a pairwise binomial".into()
            });
        }
        Err(e) => report.fail(format!("realize_support: {e}")),
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut sets = vec![l.elements().to_vec()];
    for _ in 0..4 {
        sets.push(random_column_set(a.cols(), &mut rng));
    }
    for (name, mat) in [("A", &a), ("B", &b)] {
        for f in &sets {
            let direct = is_feasible(mat, f).map(|v| v.is_feasible());
            let by_rows = is_feasible_by_rows(mat, f);
            report.check(direct == by_rows, || {
                format!("{name}: feasibility tests disagree on {f:?}")
            });
            if direct != Ok(true) {
                continue;
            }
            match is_facial(mat, f) {
                Ok(Faciality::Facial(c)) => {
                    report.check(check_facial_certificate(mat, f, &c).is_ok(), || {
                        format!("{name}: bad facial certificate for feasible {f:?}")
                    });
                }
                other => report.fail(format!("{name}: feasible {f:?} not facial: {other:?}")),
            }
        }
    }
    if elimination {
        for f in &sets {
            match facial_by_elimination(&a, f) {
                Ok(Faciality::Facial(c)) => report
                    .check(check_facial_certificate(&a, f, &c).is_ok(), || {
                        format!("elimination certificate rejected for {f:?}")
                    }),
                Ok(Faciality::NotFacial { multipliers }) => {
                    report.check(
                        is_feasible(&a, f).map(|v| v.is_feasible()) == Ok(false),
                        || format!("feasible {f:?} reported non-facial"),
                    );
                    report.check(
                        check_nonfacial_certificate(&a, f, &multipliers) == Ok(true),
                        || format!("non-facial certificate rejected for {f:?}"),
                    )
                }
                Err(e) => report.fail(format!("elimination: {e}")),
            }
        }
    }
    report
}

/// Parameters of [`sweep`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SweepConfig {
    pub trials: usize,
    pub seed: u64,
    pub min_m: usize,
    pub max_m: usize,
    /// Largest `m` on which faciality is also decided by elimination.
    pub elimination_max_m: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            trials: 200,
            seed: 0,
            min_m: 2,
            max_m: 6,
            elimination_max_m: 3,
        }
    }
}

/// All reports of one random trial.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Trial {
    pub index: usize,
    pub seed: u64,
    pub reports: Vec<Report>,
}

/// Result of [`sweep`], in trial order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub config: SweepConfig,
    pub trials: Vec<Trial>,
    pub counterexample: Report,
}

impl SweepReport {
    pub fn failures(&self) -> usize {
        self.trials
            .iter()
            .flat_map(|t| &t.reports)
            .chain(std::iter::once(&self.counterexample))
            .map(|r| r.failures.len())
            .sum()
    }

    pub fn checks(&self) -> usize {
        self.trials
            .iter()
            .flat_map(|t| &t.reports)
            .chain(std::iter::once(&self.counterexample))
            .map(|r| r.checks)
            .sum()
    }

    /// Failing reports only, then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in self.trials.iter().flat_map(|t| &t.reports) {
            if !r.is_ok() {
                out.push_str(&r.to_string());
            }
        }
        out.push_str(&self.counterexample.to_string());
        out.push_str(&format!(
            "sweep: {} trials, {} checks, {} failures\n",
            self.trials.len(),
            self.checks(),
            self.failures()
        ));
        out
    }
}

fn run_trial(index: usize, config: &SweepConfig) -> Trial {
    let seed = config
        .seed
        .wrapping_mul(0x2545_f491_4f6c_dd1d)
        .wrapping_add(index as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(config.min_m..=config.max_m);
    let poset_seed: u64 = rng.gen();
    let graph_seed: u64 = rng.gen();
    let value_seed: u64 = rng.gen();
    let mut reports = Vec::new();
    let built = random_poset(m, poset_seed).and_then(|p| {
        let g0 = order_ideals(&p).minimal_graph()?;
        Ok((random_supergraph(&g0, m, graph_seed)?, p))
    });
    match built {
        Ok((g, p)) => {
            reports.push(verify_hc_roundtrip(&p, &g, value_seed));
            reports.push(verify_cover_forcing(&p, value_seed));
            reports.push(verify_feasibility(
                &p,
                &g,
                value_seed,
                m <= config.elimination_max_m,
            ));
        }
        Err(e) => {
            let mut r = Report::new("instance", format!("m={m}"));
            r.fail(e.to_string());
            reports.push(r);
        }
    }
    Trial {
        index,
        seed,
        reports,
    }
}

/// Runs every verifier on `config.trials` random instances in parallel;
/// the result depends only on `config`.
pub fn sweep(config: &SweepConfig) -> SweepReport {
    let trials = (0..config.trials)
        .into_par_iter()
        .map(|i| run_trial(i, config))
        .collect();
    SweepReport {
        schema_version: SCHEMA_VERSION,
        config: *config,
        trials,
        counterexample: verify_unnatural_counterexample(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_poset(5, 7).unwrap(), random_poset(5, 7).unwrap());
        assert_eq!(random_poset(1, 3).unwrap(), Poset::antichain(1).unwrap());
        let path = Graph::path(4).unwrap();
        let g = random_supergraph(&path, 4, 3).unwrap();
        assert!(path.is_subgraph_of(&g));
        assert_eq!(g, random_supergraph(&path, 4, 3).unwrap());
    }

    #[test]
    fn generators_reach_the_extremes() {
        let empty = Graph::empty(4).unwrap();
        let outcomes: Vec<Graph> = (0..40)
            .map(|s| random_supergraph(&empty, 4, s).unwrap())
            .collect();
        assert!(outcomes.contains(&empty));
        assert!(outcomes.contains(&Graph::complete(4).unwrap()));
        let posets: Vec<Poset> = (0..40).map(|s| random_poset(3, s).unwrap()).collect();
        assert!(posets.contains(&Poset::antichain(3).unwrap()));
    }

    #[test]
    fn counterexample_variants() {
        let r = verify_unnatural_counterexample();
        assert!(r.is_ok(), "{r}");
        let r = verify_unnatural_counterexample_with(Rational::new(1.into(), 14.into()));
        assert_eq!(r.failures.len(), 1);
        assert!(r.notes[0].contains("no longer separates"));
    }
}
