//! The `lghd` command line.
//!
//! Exit codes: 0 on success, a found witness or a passed check; 1 on a
//! failed check or a search that produced no witness; 2 on usage errors and
//! unreadable inputs.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cert::{outcome_text, witness_body, CertBody, Certificate};
use crate::dot::{decomposition_dot, graph_dot};
use crate::families::{
    build_theorem4, build_x, build_y, bridged_cubic_example, complete_graph, complete_minus_edge, insert, k33,
    parse_graph_or_family, petersen, prism, theorem1_ring_length, FamilyKind, LabeledFamily,
};
use crate::graph::{min_edge_cut, EdgeId, MultiGraph};
use crate::line::{all_transitions, line_graph, separating_transitions};
use crate::solvers::{
    audit_theorem1, certify_theorem4_nonhamiltonian, find_hamilton_cycle, find_hamilton_cycle_with_cuts,
    find_hamilton_decomposition, find_perfect_euler_set, SearchBudget, SearchOutcome, SearchStatus, Witness,
};
use crate::tours::{splice, tour_to_cycle, validate_decomposition, Decomposition};

#[derive(Parser, Debug)]
#[command(name = "lghd", version, about = "Hamilton decompositions of line graphs: constructions, search and certificates")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph or labeled family.
    Construct(ConstructArgs),
    /// Print the line graph, or its minimum edge cut.
    Linegraph(LinegraphArgs),
    /// List the transitions of a graph.
    Transitions(TransitionsArgs),
    /// Run an exact search.
    #[command(subcommand)]
    Solve(SolveCmd),
    /// Join two decompositions across an insertion.
    Splice(SpliceArgs),
    /// Check the cut structure of a constructed family.
    #[command(subcommand)]
    Audit(AuditCmd),
    /// Check a certificate against a graph.
    Verify(VerifyArgs),
    /// Write a Graphviz rendering.
    Export(ExportArgs),
    /// Run a construction end to end, writing every artifact.
    #[command(subcommand)]
    Pipeline(PipelineCmd),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Complete,
    CompleteMinusEdge,
    Ykt,
    Xkt,
    Theorem4,
    Petersen,
    K33,
    Prism,
    Bridged,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    family: Family,
    /// Order of a complete graph.
    #[arg(long)]
    n: Option<usize>,
    /// Degree parameter.
    #[arg(long)]
    k: Option<usize>,
    /// Ring length; defaults to the smallest even t >= max(4, k).
    #[arg(long)]
    t: Option<usize>,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct LinegraphArgs {
    graph: PathBuf,
    /// Print the minimum edge cut instead of the graph.
    #[arg(long)]
    cut: bool,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TransitionsArgs {
    graph: PathBuf,
    /// Only those whose split disconnects the graph.
    #[arg(long)]
    separating: bool,
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<u64>,
}

#[derive(Args, Debug)]
struct SolveCommon {
    graph: PathBuf,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Certificate file for a found witness.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum SolveCmd {
    /// Hamilton cycle of the graph.
    Hamilton {
        #[command(flatten)]
        common: SolveCommon,
        /// Treat the labeled 2-edge cuts of a family file as required edges.
        #[arg(long)]
        use_cuts: bool,
    },
    /// Hamilton decomposition of the line graph.
    Decomposition {
        #[command(flatten)]
        common: SolveCommon,
        /// Require Euler tour compatibility at every line-graph vertex.
        #[arg(long, conflicts_with_all = ["etc_at", "etc_off"])]
        etc_everywhere: bool,
        /// Require compatibility at these line-graph vertices (edge ids).
        #[arg(long, value_delimiter = ',', conflicts_with = "etc_off")]
        etc_at: Vec<EdgeId>,
        /// Require compatibility everywhere except at these edge ids.
        #[arg(long, value_delimiter = ',')]
        etc_off: Vec<EdgeId>,
    },
    /// Perfect set of Euler tours.
    PerfectEuler {
        #[command(flatten)]
        common: SolveCommon,
    },
}

#[derive(Args, Debug)]
struct SpliceArgs {
    host: PathBuf,
    host_cert: PathBuf,
    piece: PathBuf,
    piece_cert: PathBuf,
    /// Host edge `uv` that receives the piece.
    #[arg(long)]
    uv: EdgeId,
    /// Piece edge `u'v'` that is removed.
    #[arg(long)]
    upvp: EdgeId,
    /// Decomposition certificate of the result.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    /// Graph file of the result.
    #[arg(long)]
    graph_out: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FamilySource {
    #[arg(long, conflicts_with = "family")]
    k: Option<usize>,
    #[arg(long, conflicts_with = "family")]
    t: Option<usize>,
    /// Labeled family file instead of building one.
    #[arg(long)]
    family: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum AuditCmd {
    /// Vertex cuts, attachments and edge cuts of X(k,t).
    Theorem1(FamilySource),
    /// The 2-edge cuts that rule out a Hamilton cycle of the three-piece graph.
    Theorem4(FamilySource),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    graph: PathBuf,
    cert: PathBuf,
}

#[derive(Args, Debug)]
struct ExportArgs {
    graph: PathBuf,
    /// Decomposition or tour certificate to colour the line graph with.
    #[arg(long)]
    cert: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum PipelineCmd {
    /// Non-Hamiltonian k-regular graph whose line graph decomposes.
    Theorem4 {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "theorem4_out")]
        dir: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// k-regular graph without separating transitions that is not Hamiltonian.
    Theorem1 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value = "theorem1_out")]
        dir: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Also search for a decomposition of the line graph.
        #[arg(long)]
        decomposition: bool,
    },
}

enum CliError {
    Usage(String),
    Failed(String),
}

type CliResult = Result<i32, CliError>;

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let res = match cli.cmd {
        Command::Construct(a) => construct(a, out),
        Command::Linegraph(a) => linegraph(a, out),
        Command::Transitions(a) => transitions(a, out),
        Command::Solve(s) => solve(s, out),
        Command::Splice(a) => splice_cmd(a, out),
        Command::Audit(a) => audit(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Export(a) => export(a, out),
        Command::Pipeline(PipelineCmd::Theorem4 { k, dir, budget }) => pipeline_theorem4(k, &dir, budget, out),
        Command::Pipeline(PipelineCmd::Theorem1 { k, t, dir, budget, decomposition }) => {
            pipeline_theorem1(k, t, &dir, budget, decomposition, out)
        }
    };
    match res {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(CliError::Failed(m)) => {
            let _ = writeln!(out, "fail: {m}");
            1
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<(MultiGraph, Option<LabeledFamily>), CliError> {
    parse_graph_or_family(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_cert(path: &Path) -> Result<Certificate, CliError> {
    Certificate::parse(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str, summary: &str) -> Result<(), CliError> {
    match path {
        Some(p) => {
            write_file(p, text)?;
            writeln!(out, "wrote {}: {summary}", p.display()).map_err(usage)
        }
        None => out.write_all(text.as_bytes()).map_err(usage),
    }
}

fn line(out: &mut dyn Write, s: impl std::fmt::Display) -> Result<(), CliError> {
    writeln!(out, "{s}").map_err(usage)
}

fn budget_of(b: BudgetArgs) -> Result<SearchBudget, CliError> {
    let d = SearchBudget::default();
    SearchBudget::new(
        b.budget_nodes.unwrap_or(d.node_limit),
        b.budget_seconds.map_or(d.wall_limit, Duration::from_secs),
    )
    .map_err(usage)
}

fn describe(g: &MultiGraph) -> String {
    let reg = g.is_regular().map_or(String::new(), |d| format!(", {d}-regular"));
    format!("graph {} with {} vertices, {} edges{reg}", g.name(), g.num_vertices(), g.num_edges())
}

/// Base-graph edges worth highlighting: labeled 2-edge cuts, or the edges
/// whose line-graph vertices form the labeled vertex cuts.
fn marked_edges(f: Option<&LabeledFamily>) -> BTreeSet<EdgeId> {
    let Some(f) = f else { return BTreeSet::new() };
    let mut s: BTreeSet<EdgeId> = f.edge_cuts.values().flat_map(|&(a, b)| [a, b]).collect();
    s.extend(f.e_labels.values());
    s
}

fn construct(a: ConstructArgs, out: &mut dyn Write) -> CliResult {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| usage(format!("--{name} is required for this family")));
    let (g, fam) = match a.family {
        Family::Complete => (complete_graph(need(a.n, "n")?).map_err(usage)?, None),
        Family::CompleteMinusEdge => (complete_minus_edge(need(a.n, "n")?).map_err(usage)?.0, None),
        Family::Ykt | Family::Xkt => {
            let k = need(a.k, "k")?;
            let t = a.t.unwrap_or_else(|| theorem1_ring_length(k));
            let f = if matches!(a.family, Family::Ykt) { build_y(k, t) } else { build_x(k, t) }.map_err(usage)?;
            (f.graph.clone(), Some(f))
        }
        Family::Theorem4 => {
            let f = build_theorem4(need(a.k, "k")?).map_err(usage)?;
            (f.graph.clone(), Some(f))
        }
        Family::Petersen => (petersen(), None),
        Family::K33 => (k33(), None),
        Family::Prism => (prism(), None),
        Family::Bridged => (bridged_cubic_example(), None),
    };
    let text = match &fam {
        Some(f) => f.to_text(),
        None => g.to_text(),
    }
    .map_err(usage)?;
    if let Some(p) = &a.dot {
        write_file(p, &graph_dot(&g, &marked_edges(fam.as_ref())))?;
    }
    emit(out, a.output.as_deref(), &text, &describe(&g))?;
    Ok(0)
}

fn linegraph(a: LinegraphArgs, out: &mut dyn Write) -> CliResult {
    let (x, _) = load(&a.graph)?;
    let l = line_graph(&x).map_err(usage)?;
    if let Some(p) = &a.dot {
        write_file(p, &decomposition_dot(&l, None))?;
    }
    if a.cut {
        let c = min_edge_cut(&l.to_multigraph()).map_err(usage)?;
        let pairs: Vec<String> = c
            .cut
            .iter()
            .map(|&k| {
                let e = &l.edges()[k];
                format!("{}-{}", e.a, e.b)
            })
            .collect();
        line(out, format_args!("min edge cut {}: {}", c.size, pairs.join(" ")))?;
        return Ok(0);
    }
    let lg = l.to_multigraph();
    emit(out, a.output.as_deref(), &lg.to_text().map_err(usage)?, &describe(&lg))?;
    Ok(0)
}

fn transitions(a: TransitionsArgs, out: &mut dyn Write) -> CliResult {
    let (x, _) = load(&a.graph)?;
    let (ts, what) = if a.separating {
        (separating_transitions(&x), "separating transitions")
    } else {
        (all_transitions(&x), "transitions")
    };
    for t in &ts {
        line(out, t)?;
    }
    line(out, format_args!("{} {what}", ts.len()))?;
    Ok(0)
}

fn report_outcome(
    out: &mut dyn Write,
    x: &MultiGraph,
    o: &SearchOutcome,
    output: Option<&Path>,
) -> CliResult {
    out.write_all(outcome_text(x.name(), o).as_bytes()).map_err(usage)?;
    match &o.witness {
        Some(w) => {
            if let Some(p) = output {
                write_file(p, &Certificate::new(x.name(), witness_body(w)).to_text())?;
            }
            Ok(0)
        }
        None => Ok(1),
    }
}

fn solve(s: SolveCmd, out: &mut dyn Write) -> CliResult {
    match s {
        SolveCmd::Hamilton { common, use_cuts } => {
            let (x, fam) = load(&common.graph)?;
            let b = budget_of(common.budget)?;
            let o = if use_cuts {
                let f = fam.as_ref().ok_or_else(|| usage("--use-cuts needs a labeled family file"))?;
                let cuts: Vec<_> = f.edge_cuts.values().copied().collect();
                find_hamilton_cycle_with_cuts(&x, &cuts, b)
            } else {
                find_hamilton_cycle(&x, b)
            };
            if let Some(p) = &common.dot {
                let mut marked = marked_edges(fam.as_ref());
                if let Some(Witness::Cycle(c)) = &o.witness {
                    marked = cycle_edges(&x, c);
                }
                write_file(p, &graph_dot(&x, &marked))?;
            }
            report_outcome(out, &x, &o, common.output.as_deref())
        }
        SolveCmd::Decomposition { common, etc_everywhere, etc_at, etc_off } => {
            let (x, _) = load(&common.graph)?;
            let l = line_graph(&x).map_err(usage)?;
            for &v in etc_at.iter().chain(&etc_off) {
                if !l.has_vertex(v) {
                    return Err(usage(format!("edge {v} is not in {}", x.name())));
                }
            }
            let required: Option<Vec<EdgeId>> = if etc_everywhere {
                Some(l.vertices().to_vec())
            } else if !etc_off.is_empty() {
                Some(l.vertices().iter().copied().filter(|v| !etc_off.contains(v)).collect())
            } else if !etc_at.is_empty() {
                Some(etc_at)
            } else {
                None
            };
            let o = find_hamilton_decomposition(&l, required.as_deref(), budget_of(common.budget)?).map_err(usage)?;
            if let Some(p) = &common.dot {
                let d = match &o.witness {
                    Some(Witness::Decomposition(d)) => Some(d),
                    _ => None,
                };
                write_file(p, &decomposition_dot(&l, d))?;
            }
            report_outcome(out, &x, &o, common.output.as_deref())
        }
        SolveCmd::PerfectEuler { common } => {
            let (x, _) = load(&common.graph)?;
            let o = find_perfect_euler_set(&x, budget_of(common.budget)?).map_err(usage)?;
            if let Some(p) = &common.dot {
                let l = line_graph(&x).map_err(usage)?;
                let d = match &o.witness {
                    Some(Witness::Tours(t)) => Some(tours_to_decomposition(&x, t)?),
                    _ => None,
                };
                write_file(p, &decomposition_dot(&l, d.as_ref()))?;
            }
            report_outcome(out, &x, &o, common.output.as_deref())
        }
    }
}

fn cycle_edges(x: &MultiGraph, c: &[usize]) -> BTreeSet<EdgeId> {
    (0..c.len())
        .filter_map(|i| {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            x.edges().iter().find(|e| e.key() == (a.min(b), a.max(b))).map(|e| e.id)
        })
        .collect()
}

fn tours_to_decomposition(x: &MultiGraph, tours: &[crate::tours::EulerTour]) -> Result<Decomposition, CliError> {
    let cycles = tours
        .iter()
        .map(|t| tour_to_cycle(x, t))
        .collect::<crate::Result<Vec<_>>>()
        .map_err(|e| CliError::Failed(e.to_string()))?;
    Ok(Decomposition::new(cycles))
}

/// The decomposition carried by a certificate for `x`, verified first.
fn cert_decomposition(x: &MultiGraph, c: &Certificate) -> Result<Decomposition, CliError> {
    c.verify(x).map_err(|e| CliError::Failed(e.to_string()))?;
    match &c.body {
        CertBody::Decomposition(d) => Ok(d.clone()),
        CertBody::Tours(t) => tours_to_decomposition(x, t),
        CertBody::HamiltonCycle(_) => Err(usage("expected a decomposition or tour certificate")),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn splice_cmd(a: SpliceArgs, out: &mut dyn Write) -> CliResult {
    let (x, _) = load(&a.host)?;
    let (xp, _) = load(&a.piece)?;
    let dx = cert_decomposition(&x, &load_cert(&a.host_cert)?)?;
    let dxp = cert_decomposition(&xp, &load_cert(&a.piece_cert)?)?;
    let (y, map) = insert(&x, a.uv, &xp, a.upvp).map_err(usage)?;
    let (lx, lxp) = (line_graph(&x).map_err(usage)?, line_graph(&xp).map_err(usage)?);
    let s = splice(&lx, &dx, &lxp, &dxp, &y, &map).map_err(|e| CliError::Failed(e.to_string()))?;
    let ly = line_graph(&y).map_err(usage)?;
    validate_decomposition(&ly, &s.decomposition).map_err(|v| CliError::Failed(v.to_string()))?;
    line(
        out,
        format_args!(
            "spliced {} into edge {} of {}: {} Hamilton cycles of L({}) on {} vertices",
            xp.name(),
            a.uv,
            x.name(),
            s.decomposition.len(),
            y.name(),
            ly.num_vertices()
        ),
    )?;
    line(
        out,
        format_args!(
            "compatible at uu' = {}: {}; at vv' = {}: {}",
            s.new_vertices[0],
            yes(s.etc_at_new[0]),
            s.new_vertices[1],
            yes(s.etc_at_new[1])
        ),
    )?;
    if let Some(p) = &a.graph_out {
        write_file(p, &y.to_text().map_err(usage)?)?;
    }
    if let Some(p) = &a.dot {
        write_file(p, &decomposition_dot(&ly, Some(&s.decomposition)))?;
    }
    let text = Certificate::new(y.name(), CertBody::Decomposition(s.decomposition)).to_text();
    emit(out, a.output.as_deref(), &text, "decomposition certificate")?;
    Ok(0)
}

fn family_from(src: &FamilySource, theorem4: bool) -> Result<LabeledFamily, CliError> {
    if let Some(p) = &src.family {
        return LabeledFamily::parse(&read(p)?).map_err(|e| usage(format!("{}: {e}", p.display())));
    }
    let k = src.k.ok_or_else(|| usage("give --k or --family"))?;
    if theorem4 {
        build_theorem4(k).map_err(usage)
    } else {
        build_x(k, src.t.unwrap_or_else(|| theorem1_ring_length(k))).map_err(usage)
    }
}

fn audit(a: AuditCmd, out: &mut dyn Write) -> CliResult {
    match a {
        AuditCmd::Theorem1(src) => {
            let f = family_from(&src, false)?;
            let r = audit_theorem1(&f).map_err(|e| CliError::Failed(e.to_string()))?;
            out.write_all(r.to_string().as_bytes()).map_err(usage)?;
            let passed = r.claims.iter().filter(|c| c.passed).count();
            line(out, format_args!("{passed}/{} claims pass", r.claims.len()))?;
            Ok(if r.all_passed() { 0 } else { 1 })
        }
        AuditCmd::Theorem4(src) => {
            let f = family_from(&src, true)?;
            match certify_theorem4_nonhamiltonian(&f) {
                Ok(()) => {
                    line(out, "ok: each {vv'_i, u_iu'_i} is a 2-edge cut and the three vv'_i meet at v")?;
                    Ok(0)
                }
                Err(e) => Err(CliError::Failed(e.to_string())),
            }
        }
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> CliResult {
    let (x, _) = load(&a.graph)?;
    let text = read(&a.cert)?;
    let c = Certificate::parse(&text).map_err(|e| CliError::Failed(format!("{}: {e}", a.cert.display())))?;
    let v = c.verify(&x).map_err(|e| CliError::Failed(format!("{}: {e}", a.cert.display())))?;
    line(out, v)?;
    Ok(0)
}

fn export(a: ExportArgs, out: &mut dyn Write) -> CliResult {
    let (x, fam) = load(&a.graph)?;
    let text = match &a.cert {
        Some(p) => {
            let c = load_cert(p)?;
            if let CertBody::HamiltonCycle(cyc) = &c.body {
                c.verify(&x).map_err(|e| CliError::Failed(e.to_string()))?;
                graph_dot(&x, &cycle_edges(&x, cyc))
            } else {
                let d = cert_decomposition(&x, &c)?;
                decomposition_dot(&line_graph(&x).map_err(usage)?, Some(&d))
            }
        }
        None => graph_dot(&x, &marked_edges(fam.as_ref())),
    };
    emit(out, a.dot.as_deref(), &text, "graphviz rendering")?;
    Ok(0)
}

/// A perfect matching of `K_n`, `n` even, avoiding every edge at vertex 0
/// except `{0, n-1}`.
fn matching_edges(kn: &MultiGraph) -> Vec<EdgeId> {
    let n = kn.num_vertices();
    let mut pairs = vec![(0, n - 1)];
    pairs.extend((1..n - 1).step_by(2).map(|a| (a, a + 1)));
    pairs
        .into_iter()
        .map(|p| kn.edges().iter().find(|e| e.key() == p).unwrap().id)
        .collect()
}

fn pipeline_theorem4(k: usize, dir: &Path, b: BudgetArgs, out: &mut dyn Write) -> CliResult {
    let budget = budget_of(b)?;
    let fam = build_theorem4(k).map_err(usage)?;
    fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    let stem = format!("theorem4_k{k}");
    let y_path = dir.join(format!("{stem}.g"));
    write_file(&y_path, &fam.to_text().map_err(usage)?)?;
    line(out, format_args!("construct: {} -> {}", describe(&fam.graph), y_path.display()))?;

    let certified = certify_theorem4_nonhamiltonian(&fam);
    match &certified {
        Ok(()) => line(out, "certify: ok, three 2-edge cuts force three edges at v")?,
        Err(e) => line(out, format_args!("certify: FAIL {e}"))?,
    }

    let ham = find_hamilton_cycle(&fam.graph, budget);
    write_file(&dir.join(format!("{stem}.hamilton")), &outcome_text(fam.graph.name(), &ham))?;
    line(out, format_args!("hamilton search: {} after {} nodes", ham.status, ham.nodes_explored))?;

    let kn = complete_graph(k + 1).map_err(usage)?;
    let ln = line_graph(&kn).map_err(usage)?;
    let piece_stem = dir.join(kn.name());
    let (d0, how) = if k.is_multiple_of(2) {
        let o = find_perfect_euler_set(&kn, budget).map_err(usage)?;
        let Some(Witness::Tours(t)) = &o.witness else {
            line(out, format_args!("perfect-euler {}: {}", kn.name(), o.status))?;
            return Ok(1);
        };
        let path = piece_stem.with_extension("tours");
        write_file(&path, &Certificate::new(kn.name(), CertBody::Tours(t.clone())).to_text())?;
        (tours_to_decomposition(&kn, t)?, format!("perfect set of {} Euler tours -> {}", t.len(), path.display()))
    } else {
        let off = matching_edges(&kn);
        let rest: Vec<EdgeId> = ln.vertices().iter().copied().filter(|v| !off.contains(v)).collect();
        let o = find_hamilton_decomposition(&ln, Some(&rest), budget).map_err(usage)?;
        let Some(Witness::Decomposition(d)) = &o.witness else {
            line(out, format_args!("decomposition of L({}): {}", kn.name(), o.status))?;
            return Ok(1);
        };
        let path = piece_stem.with_extension("dec");
        write_file(&path, &Certificate::new(kn.name(), CertBody::Decomposition(d.clone())).to_text())?;
        (d.clone(), format!("decomposition compatible off the matching {off:?} -> {}", path.display()))
    };
    line(out, format_args!("piece {}: {how}", kn.name()))?;

    let (mut g, mut d) = (kn.clone(), d0.clone());
    for (i, expected) in fam.insertions.iter().enumerate() {
        let (y, m) = insert(&g, expected.host_edge, &kn, expected.piece_edge).map_err(usage)?;
        if m != *expected {
            return Err(CliError::Failed(format!("insertion {} does not reproduce the family labels", i + 1)));
        }
        let s = splice(&line_graph(&g).map_err(usage)?, &d, &ln, &d0, &y, &m)
            .map_err(|e| CliError::Failed(e.to_string()))?;
        let stem_i = dir.join(format!("{stem}_splice{}", i + 1));
        write_file(&stem_i.with_extension("g"), &y.to_text().map_err(usage)?)?;
        let text = Certificate::new(y.name(), CertBody::Decomposition(s.decomposition.clone())).to_text();
        write_file(&stem_i.with_extension("dec"), &text)?;
        line(
            out,
            format_args!(
                "splice {}: edge {} of the host, {} cycles on {} line-graph vertices; compatible at uu' {}, vv' {}",
                i + 1,
                m.host_edge,
                s.decomposition.len(),
                y.num_edges(),
                yes(s.etc_at_new[0]),
                yes(s.etc_at_new[1])
            ),
        )?;
        g = y;
        d = s.decomposition;
    }
    if g.edges() != fam.graph.edges() {
        return Err(CliError::Failed("spliced graph differs from the constructed family".into()));
    }
    let cert = Certificate::new(fam.graph.name(), CertBody::Decomposition(d));
    let dec_path = dir.join(format!("{stem}.dec"));
    write_file(&dec_path, &cert.to_text())?;
    let verdict = cert.verify(&fam.graph);
    match &verdict {
        Ok(v) => line(out, format_args!("verify {}: {v}", dec_path.display()))?,
        Err(e) => line(out, format_args!("verify {}: FAIL {e}", dec_path.display()))?,
    }
    let ok = certified.is_ok() && ham.status == SearchStatus::Exhausted && verdict.is_ok();
    line(out, if ok { "pipeline: pass" } else { "pipeline: FAIL" })?;
    Ok(if ok { 0 } else { 1 })
}

fn pipeline_theorem1(
    k: usize,
    t: Option<usize>,
    dir: &Path,
    b: BudgetArgs,
    decomposition: bool,
    out: &mut dyn Write,
) -> CliResult {
    let budget = budget_of(b)?;
    let t = t.unwrap_or_else(|| theorem1_ring_length(k));
    let fam = build_x(k, t).map_err(usage)?;
    debug_assert!(matches!(fam.kind, FamilyKind::Gadget { .. }));
    fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    let stem = format!("x_k{k}_t{t}");
    let path = dir.join(format!("{stem}.g"));
    write_file(&path, &fam.to_text().map_err(usage)?)?;
    let x = &fam.graph;
    line(out, format_args!("construct: {} -> {}", describe(x), path.display()))?;

    let sep = separating_transitions(x).len();
    let total = all_transitions(x).len();
    line(out, format_args!("transitions: {sep} of {total} separating"))?;

    let l = line_graph(x).map_err(usage)?;
    let cut = min_edge_cut(&l.to_multigraph()).map_err(usage)?;
    let want = 2 * k - 2;
    line(out, format_args!("line graph edge connectivity: {} (2k-2 = {want})", cut.size))?;

    let r = audit_theorem1(&fam).map_err(|e| CliError::Failed(e.to_string()))?;
    let audit_path = dir.join(format!("{stem}.audit"));
    write_file(&audit_path, &r.to_string())?;
    let passed = r.claims.iter().filter(|c| c.passed).count();
    line(out, format_args!("audit: {passed}/{} claims pass -> {}", r.claims.len(), audit_path.display()))?;

    let ham = find_hamilton_cycle(x, budget);
    write_file(&dir.join(format!("{stem}.hamilton")), &outcome_text(x.name(), &ham))?;
    let note = if ham.status == SearchStatus::BudgetExceeded { " (inconclusive)" } else { "" };
    line(out, format_args!("hamilton search: {} after {} nodes{note}", ham.status, ham.nodes_explored))?;

    let mut ok = sep == 0 && cut.size == want && r.all_passed() && ham.status != SearchStatus::Found;
    if decomposition {
        let o = find_hamilton_decomposition(&l, None, budget).map_err(usage)?;
        write_file(&dir.join(format!("{stem}.decomposition")), &outcome_text(x.name(), &o))?;
        line(out, format_args!("decomposition search: {} after {} nodes", o.status, o.nodes_explored))?;
        ok &= o.status != SearchStatus::Found;
    }
    line(out, if ok { "pipeline: pass" } else { "pipeline: FAIL" })?;
    Ok(if ok { 0 } else { 1 })
}
