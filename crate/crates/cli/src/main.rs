//! `hclattice` command-line front end.
//!
//! Exit status: 0 on success or a true verdict, 1 on a false verdict (the
//! certificate goes to stdout), 2 on unreadable or invalid input.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hclattice::factorization::FactorizationCertificate;
use hclattice::io::{self, DistributionDoc, GraphDoc, PosetDoc, SetsDoc, SCHEMA_VERSION};
use hclattice::oracle::{self, SweepConfig};
use hclattice::toric::{LinearFunctional, ParamMatrix};
use hclattice::{
    ci_binomials, comparability_graph, factorize, global_binomials, hibi_generators, hibi_matrix,
    is_facial, is_feasible, lattice_close, lattice_model_matrix, matrix_ag, matrix_bg,
    order_ideals, pairwise_binomials, pairwise_statements, realize_support, same_row_space,
    satisfies_all, saturated_global_statements, verify_certificate, Binomial, Distribution,
    DistributiveLattice, Error, Faciality, Feasibility, Graph, Poset, SubsetMask,
};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "hclattice",
    version,
    about = "Exact factorization checks for lattice-supported graphical models"
)]
struct Cli {
    /// Machine-readable output with a schema_version field.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distributive lattices and their posets.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Graphs: cliques and comparability graphs.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Conditional independence statements and binomials.
    #[command(subcommand)]
    Ci(CiCmd),
    /// Parametrization matrices, feasibility and faciality.
    #[command(subcommand)]
    Param(ParamCmd),
    /// Factor a distribution over the cliques of a graph.
    Factorize { dist: PathBuf, graph: PathBuf },
    /// Check a factorization certificate against a distribution.
    Verify {
        cert: PathBuf,
        dist: PathBuf,
        graph: PathBuf,
    },
    /// Hibi ideals of natural lattices.
    #[command(subcommand)]
    Hibi(HibiCmd),
    /// Randomized and fixed verification runs.
    #[command(subcommand)]
    Oracle(OracleCmd),
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Order ideals of a poset.
    FromPoset { poset: PathBuf },
    /// Whether a lattice contains ∅ and [m] and is graded by cardinality.
    CheckNatural { lattice: PathBuf },
    /// Hasse diagram of the underlying poset, as a graph.
    MinimalGraph { lattice: PathBuf },
    /// Lattice generated by a family, or with --of the ideal closure of one set.
    Closure {
        sets: PathBuf,
        /// Comma-separated set, e.g. "2,4".
        #[arg(long)]
        of: Option<String>,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// All cliques and the maximal ones.
    Cliques { graph: PathBuf },
    /// Comparability graph of a poset.
    Comparability { poset: PathBuf },
}

#[derive(Subcommand)]
enum CiCmd {
    /// Pairwise Markov statements and their binomials.
    Pairwise { graph: PathBuf },
    /// Saturated global Markov statements and their binomials.
    Global { graph: PathBuf },
    /// Evaluate the binomials of a graph on a distribution.
    Check {
        dist: PathBuf,
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Model::Global)]
        model: Model,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Pairwise,
    Global,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    #[value(name = "AG")]
    Ag,
    #[value(name = "BG")]
    Bg,
}

#[derive(Args)]
struct MatrixArg {
    #[arg(long, value_enum, default_value_t = MatrixKind::Ag)]
    matrix: MatrixKind,
    graph: PathBuf,
}

#[derive(Args)]
struct SupportArg {
    #[command(flatten)]
    matrix: MatrixArg,
    /// Column set as a sets document.
    #[arg(long)]
    support: PathBuf,
}

#[derive(Subcommand)]
enum ParamCmd {
    /// Print the matrix with row and column labels.
    Matrix(MatrixArg),
    /// Feasibility of a column set, with hidden rows or a covered column.
    Feasible(SupportArg),
    /// Faciality of a column set, with a functional or Farkas multipliers.
    Facial(SupportArg),
    /// A distribution with exactly the given support in the model.
    Realize {
        #[command(flatten)]
        support: SupportArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Scale the result to total mass 1.
        #[arg(long)]
        normalize: bool,
    },
}

#[derive(Subcommand)]
enum HibiCmd {
    /// Join-meet binomials of incomparable pairs.
    Gens { lattice: PathBuf },
    /// Whether the lattice-supported model of the graph has the Hibi ideal.
    CheckEquality { lattice: PathBuf, graph: PathBuf },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Seeded sweep over random posets and supergraphs.
    Sweep {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        min_m: usize,
        #[arg(long, default_value_t = 6)]
        max_m: usize,
    },
    /// The unnatural-lattice witness that satisfies every quadric but not the quartics.
    Counterexample,
}

/// Result of a command that ran to completion.
struct Outcome {
    verdict: bool,
    text: String,
    json: Value,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            verdict: true,
            text,
            json,
        }
    }

    fn verdict(verdict: bool, text: String, json: Value) -> Self {
        Outcome {
            verdict,
            text,
            json,
        }
    }
}

type CliResult<T> = Result<T, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                let mut v = out.json;
                if let Value::Object(map) = &mut v {
                    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
                }
                println!(
                    "{}",
                    serde_json::to_string_pretty(&v).expect("serializable")
                );
            } else {
                print!("{}", out.text);
            }
            if out.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult<Outcome> {
    match command {
        Command::Lattice(c) => lattice(c),
        Command::Graph(c) => graph(c),
        Command::Ci(c) => ci(c),
        Command::Param(c) => param(c),
        Command::Factorize { dist, graph } => factorize_cmd(&dist, &graph),
        Command::Verify { cert, dist, graph } => verify_cmd(&cert, &dist, &graph),
        Command::Hibi(c) => hibi(c),
        Command::Oracle(c) => oracle_cmd(c),
    }
}

// ---- input ----

fn at(path: &Path) -> impl Fn(Error) -> String + '_ {
    move |e| format!("{}: {e}", path.display())
}

fn read_doc<T: serde::de::DeserializeOwned>(path: &Path, what: &str) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    io::from_json(&text, what).map_err(at(path))
}

fn load_poset(path: &Path) -> CliResult<Poset> {
    read_doc::<PosetDoc>(path, "poset")?
        .to_poset()
        .map_err(at(path))
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    read_doc::<GraphDoc>(path, "graph")?
        .to_graph()
        .map_err(at(path))
}

fn load_sets(path: &Path) -> CliResult<(usize, Vec<SubsetMask>)> {
    let doc: SetsDoc = read_doc(path, "sets")?;
    let sets = doc.to_sets().map_err(at(path))?;
    Ok((doc.m, sets))
}

fn load_lattice(path: &Path) -> CliResult<DistributiveLattice> {
    read_doc::<SetsDoc>(path, "sets")?
        .to_lattice()
        .map_err(at(path))
}

fn load_distribution(path: &Path) -> CliResult<Distribution> {
    read_doc::<DistributionDoc>(path, "distribution")?
        .to_distribution()
        .map_err(at(path))
}

fn same_m(what: &str, m: usize, graph: &Path, g: &Graph) -> CliResult<()> {
    if m == g.m() {
        Ok(())
    } else {
        Err(format!(
            "{}: field m is {}, but the {what} has m = {m}",
            graph.display(),
            g.m()
        ))
    }
}

fn load_matrix(arg: &MatrixArg) -> CliResult<ParamMatrix> {
    let g = load_graph(&arg.graph)?;
    Ok(match arg.matrix {
        MatrixKind::Ag => matrix_ag(&g),
        MatrixKind::Bg => matrix_bg(&g),
    })
}

fn load_support(arg: &SupportArg) -> CliResult<(ParamMatrix, Vec<SubsetMask>)> {
    let mat = load_matrix(&arg.matrix)?;
    let (m, sets) = load_sets(&arg.support)?;
    if m != mat.m() {
        return Err(format!(
            "{}: field m is {m}, but the graph has m = {}",
            arg.support.display(),
            mat.m()
        ));
    }
    Ok((mat, sets))
}

// ---- output helpers ----

fn braces(sets: &[SubsetMask]) -> String {
    let parts: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn set_strings(sets: &[SubsetMask]) -> Vec<String> {
    sets.iter().map(|s| s.to_list_string()).collect()
}

fn sets_json(m: usize, sets: &[SubsetMask]) -> Value {
    let mut doc = SetsDoc::from_sets(m, sets);
    doc.schema_version = Some(SCHEMA_VERSION);
    serde_json::to_value(doc).expect("serializable")
}

fn graph_json(g: &Graph) -> Value {
    let mut doc = GraphDoc::from_graph(g);
    doc.schema_version = Some(SCHEMA_VERSION);
    serde_json::to_value(doc).expect("serializable")
}

fn graph_text(g: &Graph) -> String {
    let mut out = format!("m = {}\n", g.m());
    for (i, j) in g.edges() {
        writeln!(out, "{i}-{j}").unwrap();
    }
    out
}

fn binomial_lines(bs: &[Binomial]) -> String {
    bs.iter().map(|b| format!("{b}\n")).collect()
}

fn binomial_strings(bs: &[Binomial]) -> Vec<String> {
    bs.iter().map(|b| b.to_string()).collect()
}

fn functional_text(mat: &ParamMatrix, c: &LinearFunctional) -> String {
    let mut out = String::new();
    for (r, v) in mat.rows().iter().zip(&c.0).filter(|(_, v)| !v.is_zero()) {
        let sign = if v.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if v.is_negative() {
                out.push('-');
            }
        } else {
            write!(out, " {sign} ").unwrap();
        }
        let a = v.abs();
        if a.is_one() {
            write!(out, "{r}").unwrap();
        } else {
            write!(out, "{a}*{r}").unwrap();
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

// ---- commands ----

fn lattice(cmd: LatticeCmd) -> CliResult<Outcome> {
    match cmd {
        LatticeCmd::FromPoset { poset } => {
            let l = order_ideals(&load_poset(&poset)?);
            let text = l.elements().iter().map(|s| format!("{s}\n")).collect();
            Ok(Outcome::ok(text, sets_json(l.m(), l.elements())))
        }
        LatticeCmd::CheckNatural { lattice } => {
            let l = load_lattice(&lattice)?;
            let reason = unnatural_reason(&l);
            let text = match &reason {
                None => "natural\n".to_string(),
                Some(r) => format!("not natural: {r}\n"),
            };
            Ok(Outcome::verdict(
                reason.is_none(),
                text,
                json!({ "natural": reason.is_none(), "reason": reason }),
            ))
        }
        LatticeCmd::MinimalGraph { lattice } => {
            let g = load_lattice(&lattice)?
                .minimal_graph()
                .map_err(at(&lattice))?;
            Ok(Outcome::ok(graph_text(&g), graph_json(&g)))
        }
        LatticeCmd::Closure { sets, of } => match of {
            None => {
                let (m, family) = load_sets(&sets)?;
                let l = lattice_close(m, family).map_err(at(&sets))?;
                let text = l.elements().iter().map(|s| format!("{s}\n")).collect();
                Ok(Outcome::ok(text, sets_json(m, l.elements())))
            }
            Some(of) => {
                let l = load_lattice(&sets)?;
                let poset = l.underlying_poset().map_err(at(&sets))?;
                let s = SubsetMask::parse_list(&of, l.m()).map_err(|e| format!("--of: {e}"))?;
                let c = poset.ideal_closure(s);
                Ok(Outcome::ok(
                    format!("{c}\n"),
                    json!({ "set": s, "closure": c }),
                ))
            }
        },
    }
}

/// Why `l` fails to be natural, or `None` when it is.
fn unnatural_reason(l: &DistributiveLattice) -> Option<String> {
    if !l.contains(SubsetMask::EMPTY) {
        return Some("∅ is missing".into());
    }
    let full = SubsetMask::full(l.m());
    if !l.contains(full) {
        return Some(format!("{full} is missing"));
    }
    for &x in l.elements() {
        for y in l.lower_covers(x) {
            if x.len() != y.len() + 1 {
                return Some(format!(
                    "{x} covers {y} but differs by {} elements",
                    x.len() - y.len()
                ));
            }
        }
    }
    None
}

fn graph(cmd: GraphCmd) -> CliResult<Outcome> {
    match cmd {
        GraphCmd::Cliques { graph } => {
            let c = load_graph(&graph)?.cliques();
            let text = format!(
                "cliques: {}\nmaximal: {}\n",
                braces(&c.all),
                braces(&c.maximal)
            );
            Ok(Outcome::ok(
                text,
                json!({ "cliques": set_strings(&c.all), "maximal": set_strings(&c.maximal) }),
            ))
        }
        GraphCmd::Comparability { poset } => {
            let g = comparability_graph(&load_poset(&poset)?);
            Ok(Outcome::ok(graph_text(&g), graph_json(&g)))
        }
    }
}

fn ci(cmd: CiCmd) -> CliResult<Outcome> {
    match cmd {
        CiCmd::Pairwise { graph } => {
            let g = load_graph(&graph)?;
            statements_outcome(&pairwise_statements(&g), g.m())
        }
        CiCmd::Global { graph } => {
            let g = load_graph(&graph)?;
            statements_outcome(&saturated_global_statements(&g), g.m())
        }
        CiCmd::Check { dist, graph, model } => {
            let p = load_distribution(&dist)?;
            let g = load_graph(&graph)?;
            same_m("distribution", p.m(), &graph, &g)?;
            let bs = match model {
                Model::Pairwise => pairwise_binomials(&g),
                Model::Global => global_binomials(&g),
            };
            let report = satisfies_all(&bs, &p);
            let mut text = if report.is_empty() {
                format!("all {} binomials vanish\n", bs.len())
            } else {
                format!(
                    "{} of {} binomials do not vanish\n",
                    report.violations.len(),
                    bs.len()
                )
            };
            for v in &report.violations {
                writeln!(text, "{} = {}", bs[v.index], v.value).unwrap();
            }
            let violations: Vec<Value> = report
                .violations
                .iter()
                .map(|v| json!({ "binomial": bs[v.index].to_string(), "value": v.value.to_string() }))
                .collect();
            Ok(Outcome::verdict(
                report.is_empty(),
                text,
                json!({ "binomials": bs.len(), "holds": report.is_empty(), "violations": violations }),
            ))
        }
    }
}

fn statements_outcome(stmts: &[hclattice::CIStatement], m: usize) -> CliResult<Outcome> {
    let mut text = String::new();
    let mut items = Vec::new();
    for st in stmts {
        let bs = ci_binomials(st, m).map_err(|e| e.to_string())?;
        writeln!(text, "{st}").unwrap();
        for b in &bs {
            writeln!(text, "  {b}").unwrap();
        }
        items.push(json!({ "statement": st.to_string(), "binomials": binomial_strings(&bs) }));
    }
    Ok(Outcome::ok(text, json!({ "statements": items })))
}

fn param(cmd: ParamCmd) -> CliResult<Outcome> {
    match cmd {
        ParamCmd::Matrix(arg) => {
            let mat = load_matrix(&arg)?;
            let rows: Vec<String> = mat.rows().iter().map(|r| r.to_string()).collect();
            let entries: Vec<Vec<u8>> = (0..mat.nrows())
                .map(|r| (0..mat.ncols()).map(|j| mat.entry(r, j)).collect())
                .collect();
            Ok(Outcome::ok(
                mat.to_text(),
                json!({ "rows": rows, "cols": set_strings(mat.cols()), "entries": entries }),
            ))
        }
        ParamCmd::Feasible(arg) => {
            let (mat, set) = load_support(&arg)?;
            let verdict = is_feasible(&mat, &set).map_err(at(&arg.support))?;
            Ok(match verdict {
                Feasibility::Feasible { hidden_rows } => {
                    let labels: Vec<String> =
                        hidden_rows.iter().map(|&r| mat.rows()[r].to_string()).collect();
                    Outcome::verdict(
                        true,
                        format!("feasible\nH = {{{}}}\n", labels.join(",")),
                        json!({ "feasible": true, "hidden_rows": labels }),
                    )
                }
                Feasibility::Infeasible { column } => Outcome::verdict(
                    false,
                    format!("not feasible\ncolumn {column} has its support inside the support of the set\n"),
                    json!({ "feasible": false, "covered_column": column }),
                ),
            })
        }
        ParamCmd::Facial(arg) => {
            let (mat, set) = load_support(&arg)?;
            let verdict = is_facial(&mat, &set).map_err(at(&arg.support))?;
            Ok(match verdict {
                Faciality::Facial(c) => {
                    let values: Vec<String> = c.0.iter().map(|v| v.to_string()).collect();
                    Outcome::verdict(
                        true,
                        format!("facial\nc = {}\n", functional_text(&mat, &c)),
                        json!({ "facial": true, "functional": values }),
                    )
                }
                Faciality::NotFacial { multipliers } => {
                    let mut text = "not facial\nmultipliers:\n".to_string();
                    for (s, l) in &multipliers {
                        writeln!(text, "  {s}: {l}").unwrap();
                    }
                    let ms: Vec<Value> = multipliers
                        .iter()
                        .map(|(s, l)| json!({ "column": s, "weight": l.to_string() }))
                        .collect();
                    Outcome::verdict(false, text, json!({ "facial": false, "multipliers": ms }))
                }
            })
        }
        ParamCmd::Realize {
            support,
            seed,
            normalize,
        } => {
            let (mat, set) = load_support(&support)?;
            match realize_support(&mat, &set, seed) {
                Ok(p) => {
                    let p = if normalize { p.normalized() } else { p };
                    Ok(Outcome::ok(distribution_text(&p), distribution_json(&p)))
                }
                Err(Error::NotFeasible(column)) => Ok(Outcome::verdict(
                    false,
                    format!("not feasible\ncolumn {column} has its support inside the support of the set\n"),
                    json!({ "feasible": false, "covered_column": column }),
                )),
                Err(e) => Err(at(&support.support)(e)),
            }
        }
    }
}

fn distribution_text(p: &Distribution) -> String {
    p.iter().map(|(s, v)| format!("p_{s} = {v}\n")).collect()
}

fn distribution_json(p: &Distribution) -> Value {
    let mut doc = DistributionDoc::from_distribution(p);
    doc.schema_version = Some(SCHEMA_VERSION);
    serde_json::to_value(doc).expect("serializable")
}

fn factorize_cmd(dist: &Path, graph: &Path) -> CliResult<Outcome> {
    let p = load_distribution(dist)?;
    let g = load_graph(graph)?;
    same_m("distribution", p.m(), graph, &g)?;
    match factorize(&p, &g) {
        Ok(cert) => {
            let mut text = "factorizes\nclique parameters:\n".to_string();
            for (s, v) in &cert.clique_params {
                writeln!(text, "  c_{s} = {v}").unwrap();
            }
            text.push_str("dependent trace:\n");
            for step in &cert.dependent_trace {
                writeln!(text, "  {} via ({},{})", step.set, step.i, step.j).unwrap();
            }
            let json = serde_json::to_value(&cert).expect("serializable");
            Ok(Outcome::ok(text, json))
        }
        Err(e @ Error::MissingCoverEdge { upper, lower }) => Ok(Outcome::verdict(
            false,
            format!("does not factorize: {e}\n"),
            json!({ "factorizes": false, "missing_cover_edge": [upper, lower] }),
        )),
        Err(e @ Error::PairwiseViolation { set, i, j }) => Ok(Outcome::verdict(
            false,
            format!("does not factorize: {e}\n"),
            json!({ "factorizes": false, "pairwise_violation": { "set": set, "i": i, "j": j } }),
        )),
        Err(e) => Err(at(dist)(e)),
    }
}

fn verify_cmd(cert: &Path, dist: &Path, graph: &Path) -> CliResult<Outcome> {
    let c: FactorizationCertificate = read_doc(cert, "certificate")?;
    let p = load_distribution(dist)?;
    let g = load_graph(graph)?;
    same_m("distribution", p.m(), graph, &g)?;
    let ok = verify_certificate(&c, &p, &g);
    let text = if ok {
        "certificate reproduces the distribution\n"
    } else {
        "certificate does not reproduce the distribution\n"
    };
    Ok(Outcome::verdict(ok, text.into(), json!({ "valid": ok })))
}

fn hibi(cmd: HibiCmd) -> CliResult<Outcome> {
    match cmd {
        HibiCmd::Gens { lattice } => {
            let l = load_lattice(&lattice)?;
            hibi_matrix(&l).map_err(at(&lattice))?;
            let gens = hibi_generators(&l);
            Ok(Outcome::ok(
                binomial_lines(&gens),
                json!({ "generators": binomial_strings(&gens) }),
            ))
        }
        HibiCmd::CheckEquality { lattice, graph } => {
            let l = load_lattice(&lattice)?;
            let g = load_graph(&graph)?;
            same_m("lattice", l.m(), &graph, &g)?;
            let h = hibi_matrix(&l).map_err(at(&lattice))?;
            let model = match lattice_model_matrix(&l, &g) {
                Ok(mat) => mat,
                Err(e @ Error::MissingCoverEdge { .. }) => {
                    return Ok(Outcome::verdict(
                        false,
                        format!("not comparable: {e}\n"),
                        json!({ "equal": false, "reason": e.to_string() }),
                    ))
                }
                Err(e) => return Err(at(&graph)(e)),
            };
            if same_row_space(&model, &h).map_err(|e| e.to_string())? {
                return Ok(Outcome::verdict(
                    true,
                    "equal\n".into(),
                    json!({ "equal": true }),
                ));
            }
            // some kernel basis vector of one matrix is not killed by the other
            let witness = kernel_gap(&model, &h)
                .map(|b| ("lattice model", b))
                .or_else(|| kernel_gap(&h, &model).map(|b| ("Hibi", b)));
            let (side, b) = witness.expect("row spaces differ, so kernels differ");
            Ok(Outcome::verdict(
                false,
                format!("not equal\n{b} lies in the {side} ideal only\n"),
                json!({ "equal": false, "witness": b.to_string(), "witness_in": side }),
            ))
        }
    }
}

/// A kernel vector of `a`, as a binomial, that `b` does not kill.
fn kernel_gap(a: &ParamMatrix, b: &ParamMatrix) -> Option<Binomial> {
    a.kernel_basis()
        .into_iter()
        .map(|u| a.kernel_vector_binomial(&u))
        .find(|bin| hclattice::in_toric_kernel(b, bin) == Ok(false))
}

fn oracle_cmd(cmd: OracleCmd) -> CliResult<Outcome> {
    match cmd {
        OracleCmd::Sweep {
            trials,
            seed,
            min_m,
            max_m,
        } => {
            if min_m == 0 || min_m > max_m || max_m > hclattice::MAX_GROUND {
                return Err(format!(
                    "--min-m/--max-m: need 1 <= min-m <= max-m <= {}",
                    hclattice::MAX_GROUND
                ));
            }
            let config = SweepConfig {
                trials,
                seed,
                min_m,
                max_m,
                ..SweepConfig::default()
            };
            let report = oracle::sweep(&config);
            let ok = report.failures() == 0;
            let json = serde_json::to_value(&report).expect("serializable");
            Ok(Outcome::verdict(ok, report.to_text(), json))
        }
        OracleCmd::Counterexample => {
            let report = oracle::verify_unnatural_counterexample();
            let json = serde_json::to_value(&report).expect("serializable");
            Ok(Outcome::verdict(report.is_ok(), report.to_string(), json))
        }
    }
}
