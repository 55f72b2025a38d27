//! Proof checkers for the two constructions: the cut structure that rules
//! out Hamilton decompositions of `L(X(k,t))`, and the 2-edge cuts that
//! make the three-piece graph non-Hamiltonian.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::families::{FamilyKind, LabeledFamily};
use crate::graph::{components, EdgeId};
use crate::line::{line_components_without, line_graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    /// Removing line-graph vertices `e_i^j` and `e_{i+1}^j` (odd `i`)
    /// separates the interior of gadget `X_i^j`.
    VertexCut { i: usize, j: usize },
    /// In that separated interior, `e_i^j` has exactly the neighbours
    /// `f_{i,1}^j, ..., f_{i,k-1}^j`.
    Attachment { i: usize, j: usize },
    /// Removing `E_a` and `E_b` disconnects the line graph.
    EdgeCut { a: usize, b: usize },
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimKind::VertexCut { i, j } => write!(f, "vertex-cut i={i} j={j}"),
            ClaimKind::Attachment { i, j } => write!(f, "attachment i={i} j={j}"),
            ClaimKind::EdgeCut { a, b } => write!(f, "edge-cut a={a} b={b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub kind: ClaimKind,
    pub passed: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub claims: Vec<Claim>,
}

impl AuditReport {
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn count(&self, pred: impl Fn(&ClaimKind) -> bool) -> usize {
        self.claims.iter().filter(|c| pred(&c.kind)).count()
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.claims {
            let verdict = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "{verdict} {}: {}", c.kind, c.witness)?;
        }
        Ok(())
    }
}

/// Checks the vertex-cut, attachment and edge-cut claims on a labeled
/// `X(k,t)` directly on its line graph.
pub fn audit_theorem1(f: &LabeledFamily) -> Result<AuditReport> {
    let FamilyKind::Gadget { k, t } = f.kind else {
        return Err(Error::Mislabeled("not a gadget-ring family".into()));
    };
    check_labels(f, k, t)?;
    let l = line_graph(&f.graph)?;
    let none_e = BTreeSet::new();
    let mut claims = Vec::new();

    for i in (1..t).step_by(2) {
        for j in 1..=2 {
            let (ea, eb) = (f.e_labels[&(i, j)], f.e_labels[&(i + 1, j)]);
            let cut: BTreeSet<EdgeId> = [ea, eb].into();
            let blocks = line_components_without(&l, &cut, &none_e);
            let gadget = &f.gadgets[&(i, j)];
            let interior: BTreeSet<EdgeId> = f
                .graph
                .edges()
                .iter()
                .filter(|e| gadget.contains(&e.a) && gadget.contains(&e.b))
                .map(|e| e.id)
                .collect();
            let inner_block = blocks.iter().find(|b| b.iter().any(|x| interior.contains(x)));
            let separated = blocks.len() > 1
                && inner_block.is_some_and(|b| b.iter().all(|x| interior.contains(x)) && b.len() == interior.len());
            claims.push(Claim {
                kind: ClaimKind::VertexCut { i, j },
                passed: separated,
                witness: format!(
                    "{} components; interior block of {} line-graph vertices",
                    blocks.len(),
                    inner_block.map_or(0, Vec::len)
                ),
            });
            for (side, e) in [(i, ea), (i + 1, eb)] {
                let expected: BTreeSet<EdgeId> = (1..k).map(|l| f.f_labels[&(side, l, j)]).collect();
                let seen: BTreeSet<EdgeId> = l
                    .neighbors(e)
                    .map(|(w, _)| w)
                    .filter(|w| inner_block.is_some_and(|b| b.contains(w)))
                    .collect();
                claims.push(Claim {
                    kind: ClaimKind::Attachment { i: side, j },
                    passed: separated && seen == expected && expected.len() == k - 1,
                    witness: format!("{} attachment edges {:?}", seen.len(), seen),
                });
            }
        }
    }

    for a in 1..=t {
        for b in a + 1..=t {
            let removed: BTreeSet<(EdgeId, EdgeId)> =
                f.line_cuts[&a].iter().chain(&f.line_cuts[&b]).copied().collect();
            let blocks = line_components_without(&l, &BTreeSet::new(), &removed);
            let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
            claims.push(Claim {
                kind: ClaimKind::EdgeCut { a, b },
                passed: blocks.len() > 1,
                witness: format!("{} line-graph edges removed; sides {:?}", removed.len(), sizes),
            });
        }
    }
    Ok(AuditReport { claims })
}

fn check_labels(f: &LabeledFamily, k: usize, t: usize) -> Result<()> {
    let missing = |what: String| Error::Mislabeled(format!("missing {what}"));
    for i in 1..=t {
        let hub = *f.hubs.get(&i).ok_or_else(|| missing(format!("v_{i}")))?;
        for j in 1..=k {
            let id = *f.e_labels.get(&(i, j)).ok_or_else(|| missing(format!("e_{i}^{j}")))?;
            let e = f.graph.edge(id).ok_or_else(|| missing(format!("edge {id} (e_{i}^{j})")))?;
            if !e.is_incident(hub) {
                return Err(Error::Mislabeled(format!("e_{i}^{j} = {id} does not touch v_{i}")));
            }
        }
        for j in 1..=2 {
            for l in 1..k {
                let id = *f.f_labels.get(&(i, l, j)).ok_or_else(|| missing(format!("f_{i},{l}^{j}")))?;
                f.graph.edge(id).ok_or_else(|| missing(format!("edge {id}")))?;
            }
        }
        if !f.line_cuts.contains_key(&i) {
            return Err(missing(format!("E_{i}")));
        }
    }
    for i in (1..t).step_by(2) {
        for j in 1..=2 {
            if !f.gadgets.contains_key(&(i, j)) {
                return Err(missing(format!("X_{i}^{j}")));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("missing labels: {0}")]
    MissingLabels(String),
    #[error("not an edge cut: pair {0}")]
    NotAnEdgeCut(usize),
    #[error("forced edges do not share a vertex")]
    NoCommonVertex,
}

/// Proof check of non-Hamiltonicity: every labeled pair `{vv'_i, u_iu'_i}`
/// is an edge cut, so a Hamilton cycle would use all three `vv'_i`, which
/// meet at `v`.
pub fn certify_theorem4_nonhamiltonian(f: &LabeledFamily) -> std::result::Result<(), CertifyError> {
    let g = &f.graph;
    let mut forced = Vec::new();
    for i in 1..=3 {
        let &(vv, uu) = f
            .edge_cuts
            .get(&i)
            .ok_or_else(|| CertifyError::MissingLabels(format!("cut pair {i}")))?;
        if g.edge(vv).is_none() || g.edge(uu).is_none() {
            return Err(CertifyError::NotAnEdgeCut(i));
        }
        let removed = [vv, uu].into();
        if components(&g.without_edges(&removed)).len() <= components(g).len() {
            return Err(CertifyError::NotAnEdgeCut(i));
        }
        forced.push(*g.edge(vv).unwrap());
    }
    let v = *f.hubs.get(&0).ok_or_else(|| CertifyError::MissingLabels("centre v".into()))?;
    if forced.iter().all(|e| e.is_incident(v)) {
        Ok(())
    } else {
        Err(CertifyError::NoCommonVertex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_theorem4, build_x};
    use crate::graph::MultiGraph;
    use crate::graph::Edge;

    #[test]
    fn audit_small_ring() {
        let f = build_x(3, 4).unwrap();
        let r = audit_theorem1(&f).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.count(|k| matches!(k, ClaimKind::VertexCut { .. })), 4);
        assert_eq!(r.count(|k| matches!(k, ClaimKind::Attachment { .. })), 8);
        assert_eq!(r.count(|k| matches!(k, ClaimKind::EdgeCut { .. })), 6);
    }

    #[test]
    fn dropped_cutset_edge_fails() {
        let mut f = build_x(3, 4).unwrap();
        f.line_cuts.get_mut(&1).unwrap().pop();
        let r = audit_theorem1(&f).unwrap();
        for c in &r.claims {
            if let ClaimKind::EdgeCut { a, b } = c.kind {
                assert_eq!(c.passed, a != 1 && b != 1, "{c:?}");
            }
        }
    }

    #[test]
    fn mislabeled_family_errors() {
        let mut f = build_x(3, 4).unwrap();
        f.e_labels.remove(&(2, 3));
        assert!(matches!(audit_theorem1(&f), Err(Error::Mislabeled(_))));
        let g = build_theorem4(4).unwrap();
        assert!(matches!(audit_theorem1(&g), Err(Error::Mislabeled(_))));
    }

    #[test]
    fn three_piece_certificate() {
        assert_eq!(certify_theorem4_nonhamiltonian(&build_theorem4(4).unwrap()), Ok(()));
        assert_eq!(certify_theorem4_nonhamiltonian(&build_theorem4(7).unwrap()), Ok(()));
    }

    #[test]
    fn extra_edge_across_a_cut_fails() {
        let mut f = build_theorem4(4).unwrap();
        let g = &f.graph;
        let (vv, _) = f.edge_cuts[&1];
        let far = g.edge(vv).unwrap().other(0).unwrap();
        let id = g.max_edge_id().unwrap() + 1;
        let edges = g.edges().iter().copied().chain([Edge::new(id, 4, far)]);
        f.graph = MultiGraph::new("extra", g.vertices().iter().copied(), edges).unwrap();
        assert_eq!(certify_theorem4_nonhamiltonian(&f), Err(CertifyError::NotAnEdgeCut(1)));

        let mut f = build_theorem4(4).unwrap();
        f.edge_cuts.remove(&2);
        assert!(matches!(certify_theorem4_nonhamiltonian(&f), Err(CertifyError::MissingLabels(_))));
    }
}
