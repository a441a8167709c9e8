use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};

/// Counters shared by one solver invocation, plus its cooperative deadline.
#[derive(Debug, Clone)]
pub(crate) struct Search {
    pub nodes: u64,
    pub uvc_calls: u64,
    started: Instant,
    deadline: Option<Instant>,
}

impl Search {
    pub fn new(time_limit: Option<Duration>) -> Self {
        let started = Instant::now();
        Search { nodes: 0, uvc_calls: 0, started, deadline: time_limit.map(|d| started + d) }
    }

    /// Deadline check, called from the branching loops.
    #[inline]
    pub fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::TimeLimit { nodes: self.nodes }),
            _ => Ok(()),
        }
    }

    pub fn stats(&self) -> Stats {
        Stats {
            nodes_explored: self.nodes,
            uvc_calls: self.uvc_calls,
            elapsed_ms: self.started.elapsed().as_secs_f64() * 1e3,
        }
    }
}

/// Work counters reported with every solver result.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct Stats {
    pub nodes_explored: u64,
    pub uvc_calls: u64,
    pub elapsed_ms: f64,
}

impl Stats {
    pub fn absorb(&mut self, other: &Stats) {
        self.nodes_explored += other.nodes_explored;
        self.uvc_calls += other.uvc_calls;
        self.elapsed_ms += other.elapsed_ms;
    }
}
