//! Exact backtracking search and proof checkers.
//!
//! Every search is single-threaded and deterministic: branching always takes
//! the smallest identifier first. `Exhausted` is only reported after the
//! whole tree was explored; a run cut short by its budget reports
//! `BudgetExceeded` and proves nothing.

mod audit;
mod decomp;
mod hamilton;
mod slots;

use std::fmt;
use std::time::{Duration, Instant};

pub use audit::{audit_theorem1, certify_theorem4_nonhamiltonian, AuditReport, Claim, ClaimKind, CertifyError};
pub use decomp::{find_hamilton_decomposition, find_perfect_euler_set};
pub use hamilton::{find_hamilton_cycle, find_hamilton_cycle_with_cuts};

use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::tours::{Decomposition, EulerTour};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub wall_limit: Duration,
}

impl SearchBudget {
    pub fn new(node_limit: u64, wall_limit: Duration) -> Result<Self> {
        if node_limit == 0 || wall_limit.is_zero() {
            return Err(Error::InvalidParameter("search budget must be positive".into()));
        }
        Ok(SearchBudget { node_limit, wall_limit })
    }

    pub fn seconds(secs: u64) -> Self {
        SearchBudget {
            node_limit: u64::MAX,
            wall_limit: Duration::from_secs(secs.max(1)),
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: 1_000_000_000,
            wall_limit: Duration::from_secs(3600),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    Exhausted,
    BudgetExceeded,
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchStatus::Found => "found",
            SearchStatus::Exhausted => "exhausted",
            SearchStatus::BudgetExceeded => "budget_exceeded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Hamilton cycle of a graph as a vertex sequence.
    Cycle(Vec<VertexId>),
    Decomposition(Decomposition),
    Tours(Vec<EulerTour>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witness: Option<Witness>,
    pub nodes_explored: u64,
}

impl SearchOutcome {
    fn new(status: SearchStatus, witness: Option<Witness>, nodes_explored: u64) -> Self {
        debug_assert_eq!(witness.is_some(), status == SearchStatus::Found);
        SearchOutcome { status, witness, nodes_explored }
    }

    pub fn is_found(&self) -> bool {
        self.status == SearchStatus::Found
    }
}

/// Counts search nodes against a budget.
struct Meter {
    nodes: u64,
    budget: SearchBudget,
    start: Instant,
    exceeded: bool,
}

impl Meter {
    fn new(budget: SearchBudget) -> Self {
        Meter {
            nodes: 0,
            budget,
            start: Instant::now(),
            exceeded: false,
        }
    }

    /// Registers a node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        if self.exceeded {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.budget.node_limit
            || (self.nodes.is_multiple_of(1024) && self.start.elapsed() > self.budget.wall_limit)
        {
            self.exceeded = true;
        }
        !self.exceeded
    }

    fn outcome(&self, witness: Option<Witness>) -> SearchOutcome {
        let status = match (&witness, self.exceeded) {
            (Some(_), _) => SearchStatus::Found,
            (None, true) => SearchStatus::BudgetExceeded,
            (None, false) => SearchStatus::Exhausted,
        };
        SearchOutcome::new(status, witness, self.nodes)
    }
}
