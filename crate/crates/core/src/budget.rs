//! Explicit work limits for the exponential searches.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("budget exceeded after {nodes} search nodes")]
pub struct BudgetExceeded {
    pub nodes: u64,
}

/// Node and wall-clock limits. The default is unlimited.
#[derive(Debug, Clone)]
pub struct Budget {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_nodes: None, deadline: None, nodes: 0 }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes: Some(max_nodes), ..Budget::unlimited() }
    }

    pub fn with_max_nodes(mut self, max_nodes: Option<u64>) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    pub fn with_time_limit(mut self, limit: Option<Duration>) -> Self {
        self.deadline = limit.map(|d| Instant::now() + d);
        self
    }

    pub fn spent(&self) -> u64 {
        self.nodes
    }

    /// Charges one node.
    #[inline]
    pub fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.nodes += 1;
        if let Some(max) = self.max_nodes {
            if self.nodes > max {
                return Err(BudgetExceeded { nodes: self.nodes });
            }
        }
        // checking the clock on every node is measurable; sample it
        if self.nodes & 0x3ff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(BudgetExceeded { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }

    /// A thread-safe view of the remaining allowance, for parallel searches.
    pub fn share(&self) -> SharedBudget {
        SharedBudget {
            max_nodes: self.max_nodes,
            deadline: self.deadline,
            nodes: AtomicU64::new(self.nodes),
        }
    }

    /// Takes back the nodes spent through [`Budget::share`].
    pub fn absorb(&mut self, shared: &SharedBudget) {
        self.nodes = self.nodes.max(shared.spent());
    }
}

/// Node and deadline limits shared between worker threads.
#[derive(Debug)]
pub struct SharedBudget {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    nodes: AtomicU64,
}

impl SharedBudget {
    pub fn spent(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    /// Charges `count` nodes and checks both limits.
    pub fn charge(&self, count: u64) -> Result<(), BudgetExceeded> {
        let nodes = self.nodes.fetch_add(count, Ordering::Relaxed) + count;
        if self.max_nodes.is_some_and(|max| nodes > max)
            || self.deadline.is_some_and(|d| Instant::now() >= d)
        {
            return Err(BudgetExceeded { nodes });
        }
        Ok(())
    }
}
