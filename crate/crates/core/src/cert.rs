//! Certificate files: Hamilton decompositions of line graphs, sets of Euler
//! tours and Hamilton cycles, optionally preceded by a solver outcome line.
//!
//! ```text
//! decomposition <graph-name> <num-cycles>
//! cycle 0: <edge-id> <edge-id> ...
//! eulertours <graph-name> <num-tours>
//! tour 0: <v0> <e1> <v1> ... <e_t>
//! hamiltoncycle <graph-name> 1
//! cycle 0: <vertex> <vertex> ...
//! ```

use std::collections::BTreeSet;
use std::fmt::{self, Write};

use crate::graph::{EdgeId, MultiGraph, VertexId};
use crate::line::line_graph;
use crate::solvers::{SearchOutcome, SearchStatus, Witness};
use crate::tours::{
    etc_everywhere, perfect_set_check, validate_decomposition, Decomposition, EulerTour, HamCycle,
    PerfectSetViolation, Violation,
};

/// A parse or verification failure at a line (1-based) and optionally a
/// token (1-based, whitespace separated) of the certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertError {
    pub line: usize,
    pub token: Option<usize>,
    pub msg: String,
}

impl fmt::Display for CertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertError { line, token: Some(t), msg } => write!(f, "line {line}, token {t}: {msg}"),
            CertError { line, token: None, msg } => write!(f, "line {line}: {msg}"),
        }
    }
}

impl std::error::Error for CertError {}

fn err(line: usize, token: Option<usize>, msg: impl Into<String>) -> CertError {
    CertError { line, token, msg: msg.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertBody {
    Decomposition(Decomposition),
    Tours(Vec<EulerTour>),
    HamiltonCycle(Vec<VertexId>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub graph_name: String,
    pub body: CertBody,
    /// Status and node count of a leading `outcome` line, if any.
    pub outcome: Option<(SearchStatus, u64)>,
    header_line: usize,
    item_lines: Vec<usize>,
}

impl Certificate {
    pub fn new(graph_name: impl Into<String>, body: CertBody) -> Self {
        Certificate {
            graph_name: graph_name.into(),
            body,
            outcome: None,
            header_line: 1,
            item_lines: Vec::new(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some((s, n)) = self.outcome {
            writeln!(out, "outcome {s} nodes {n}").unwrap();
        }
        write_body(&mut out, &self.graph_name, &self.body);
        out
    }

    pub fn parse(text: &str) -> Result<Self, CertError> {
        parse_certificate(text)
    }

    /// Checks the witness against `x`, the base graph. Decompositions are
    /// checked in `L(x)`.
    pub fn verify(&self, x: &MultiGraph) -> Result<Verified, CertError> {
        let h = self.header_line;
        if self.graph_name != x.name() {
            return Err(err(
                h,
                Some(2),
                format!("certificate is for `{}`, graph is `{}`", self.graph_name, x.name()),
            ));
        }
        let item = |i: usize| self.item_lines.get(i).copied().unwrap_or(h);
        match &self.body {
            CertBody::Decomposition(d) => {
                let l = line_graph(x).map_err(|e| err(h, None, e.to_string()))?;
                validate_decomposition(&l, d).map_err(|v| {
                    let line = match v {
                        Violation::UnknownVertex { cycle, .. }
                        | Violation::NotACycle { cycle, .. }
                        | Violation::RepeatedVertex { cycle, .. }
                        | Violation::NotSpanning { cycle, .. } => item(cycle),
                        Violation::EdgeReused { second, .. } => item(second),
                        Violation::EdgeUncovered { .. } => h,
                    };
                    err(line, None, v.to_string())
                })?;
                let etc = etc_everywhere(&l, d).map_err(|e| err(h, None, e.to_string()))?;
                Ok(Verified::Decomposition { cycles: d.len(), vertices: l.num_vertices(), etc_everywhere: etc })
            }
            CertBody::Tours(tours) => {
                perfect_set_check(x, tours).map_err(|v| {
                    let line = match &v {
                        PerfectSetViolation::NotATour { tour, .. } => item(*tour),
                        PerfectSetViolation::CoveredTwice { second, .. } => item(*second),
                        _ => h,
                    };
                    err(line, None, v.to_string())
                })?;
                Ok(Verified::PerfectSet { tours: tours.len(), transitions: tours.iter().map(EulerTour::len).sum() })
            }
            CertBody::HamiltonCycle(c) => {
                check_hamilton_cycle(x, c).map_err(|(tok, msg)| err(item(0), tok.map(|t| t + 3), msg))?;
                Ok(Verified::HamiltonCycle { len: c.len() })
            }
        }
    }
}

/// Summary of a successful verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verified {
    Decomposition { cycles: usize, vertices: usize, etc_everywhere: bool },
    PerfectSet { tours: usize, transitions: usize },
    HamiltonCycle { len: usize },
}

impl fmt::Display for Verified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verified::Decomposition { cycles, vertices, etc_everywhere } => write!(
                f,
                "pass: {cycles} edge-disjoint Hamilton cycles covering the line graph on {vertices} vertices; \
                 euler tour compatible everywhere: {}",
                if *etc_everywhere { "yes" } else { "no" }
            ),
            Verified::PerfectSet { tours, transitions } => {
                write!(f, "pass: perfect set of {tours} Euler tours, {transitions} transitions each covered once")
            }
            Verified::HamiltonCycle { len } => write!(f, "pass: Hamilton cycle through {len} vertices"),
        }
    }
}

/// Position of the first offending vertex (if any) and a message.
fn check_hamilton_cycle(x: &MultiGraph, c: &[VertexId]) -> Result<(), (Option<usize>, String)> {
    let mut seen = BTreeSet::new();
    for (i, &v) in c.iter().enumerate() {
        if !x.has_vertex(v) {
            return Err((Some(i), format!("unknown vertex {v}")));
        }
        if !seen.insert(v) {
            return Err((Some(i), format!("vertex {v} repeated")));
        }
    }
    if c.len() != x.num_vertices() || c.len() < 3 {
        return Err((None, format!("{} vertices, graph has {}", c.len(), x.num_vertices())));
    }
    for i in 0..c.len() {
        let (a, b) = (c[i], c[(i + 1) % c.len()]);
        if !x.neighbors(a).any(|w| w == b) {
            return Err((Some((i + 1) % c.len()), format!("{a} and {b} are not adjacent")));
        }
    }
    Ok(())
}

fn write_body(out: &mut String, name: &str, body: &CertBody) {
    match body {
        CertBody::Decomposition(d) => {
            writeln!(out, "decomposition {name} {}", d.len()).unwrap();
            for (i, h) in d.cycles.iter().enumerate() {
                write!(out, "cycle {i}:").unwrap();
                for v in &h.cycle {
                    write!(out, " {v}").unwrap();
                }
                out.push('\n');
            }
        }
        CertBody::Tours(tours) => {
            writeln!(out, "eulertours {name} {}", tours.len()).unwrap();
            for (i, t) in tours.iter().enumerate() {
                write!(out, "tour {i}:").unwrap();
                for (v, e) in t.vertices.iter().zip(&t.edges) {
                    write!(out, " {v} {e}").unwrap();
                }
                out.push('\n');
            }
        }
        CertBody::HamiltonCycle(c) => {
            writeln!(out, "hamiltoncycle {name} 1").unwrap();
            out.push_str("cycle 0:");
            for v in c {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
    }
}

/// Text form of a solver outcome: the `outcome` line, then the witness.
pub fn outcome_text(graph_name: &str, o: &SearchOutcome) -> String {
    let mut out = format!("outcome {} nodes {}\n", o.status, o.nodes_explored);
    if let Some(w) = &o.witness {
        write_body(&mut out, graph_name, &witness_body(w));
    }
    out
}

pub fn witness_body(w: &Witness) -> CertBody {
    match w {
        Witness::Cycle(c) => CertBody::HamiltonCycle(c.clone()),
        Witness::Decomposition(d) => CertBody::Decomposition(d.clone()),
        Witness::Tours(t) => CertBody::Tours(t.clone()),
    }
}

fn parse_usize(line: usize, token: usize, s: &str) -> Result<usize, CertError> {
    s.parse()
        .map_err(|_| err(line, Some(token), format!("expected a non-negative integer, found `{s}`")))
}

fn parse_certificate(text: &str) -> Result<Certificate, CertError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty())
        .peekable();
    let mut outcome = None;
    let last = text.lines().count().max(1);
    if lines.peek().is_some_and(|(_, t)| t[0] == "outcome") {
        let (ln, t) = lines.next().unwrap();
        if t.len() != 4 || t[2] != "nodes" {
            return Err(err(ln, None, "expected `outcome <status> nodes <n>`"));
        }
        let status = match t[1] {
            "found" => SearchStatus::Found,
            "exhausted" => SearchStatus::Exhausted,
            "budget_exceeded" => SearchStatus::BudgetExceeded,
            s => return Err(err(ln, Some(2), format!("unknown status `{s}`"))),
        };
        let nodes = parse_usize(ln, 4, t[3])? as u64;
        outcome = Some((status, nodes));
        if status != SearchStatus::Found {
            if let Some((l2, _)) = lines.next() {
                return Err(err(l2, None, format!("witness after status `{status}`")));
            }
            return Err(err(ln, Some(2), format!("status `{status}` carries no certificate")));
        }
    }
    let (hl, header) = lines.next().ok_or_else(|| err(last, None, "missing certificate header"))?;
    let (item_kw, kind) = match header[0] {
        "decomposition" => ("cycle", 0),
        "eulertours" => ("tour", 1),
        "hamiltoncycle" => ("cycle", 2),
        kw => return Err(err(hl, Some(1), format!("unknown certificate kind `{kw}`"))),
    };
    if header.len() != 3 {
        return Err(err(hl, None, format!("expected `{} <graph-name> <count>`", header[0])));
    }
    let count = parse_usize(hl, 3, header[2])?;
    if kind == 2 && count != 1 {
        return Err(err(hl, Some(3), "a Hamilton cycle certificate holds exactly 1 cycle"));
    }
    let mut items: Vec<Vec<usize>> = Vec::with_capacity(count);
    let mut item_lines = Vec::with_capacity(count);
    for (ln, t) in lines {
        let i = items.len();
        if t[0] != item_kw {
            return Err(err(ln, Some(1), format!("expected `{item_kw}`, found `{}`", t[0])));
        }
        if i == count {
            return Err(err(ln, None, format!("more than the declared {count} entries")));
        }
        let expected = format!("{i}:");
        if t.get(1) != Some(&expected.as_str()) {
            return Err(err(ln, Some(2), format!("expected `{expected}`")));
        }
        let nums = t[2..]
            .iter()
            .enumerate()
            .map(|(k, s)| parse_usize(ln, k + 3, s))
            .collect::<Result<Vec<_>, _>>()?;
        if nums.is_empty() {
            return Err(err(ln, None, "empty entry"));
        }
        if kind == 1 && nums.len() % 2 == 1 {
            return Err(err(ln, None, "tour must alternate vertices and edges, ending with an edge"));
        }
        items.push(nums);
        item_lines.push(ln);
    }
    if items.len() != count {
        return Err(err(hl, Some(3), format!("declared {count} entries, found {}", items.len())));
    }
    let body = match kind {
        0 => CertBody::Decomposition(Decomposition::new(items.into_iter().map(HamCycle::new).collect())),
        1 => CertBody::Tours(
            items
                .into_iter()
                .map(|n| {
                    let vertices = n.iter().step_by(2).copied().collect();
                    let edges: Vec<EdgeId> = n.iter().skip(1).step_by(2).copied().collect();
                    EulerTour::new(vertices, edges)
                })
                .collect(),
        ),
        _ => CertBody::HamiltonCycle(items.pop().unwrap()),
    };
    Ok(Certificate {
        graph_name: header[1].to_string(),
        body,
        outcome,
        header_line: hl,
        item_lines,
    })
}
