//! Wall-clock-aware drivers over the core solver: per-threshold timeouts
//! and optional realizer-level parallelism (one thread per open
//! threshold). Results are deterministic regardless of the job count.

use std::time::{Duration, Instant};

use pcomp_core::solver::{self, AbortCheck, SearchBudget, SolverOptions, Verdict};
use pcomp_core::{Graph, RealizerReport};

struct Deadline {
    at: Option<Instant>,
}

impl Deadline {
    fn from_budget(budget: &SearchBudget) -> Self {
        Deadline {
            at: budget
                .time_limit_ms
                .map(|ms| Instant::now() + Duration::from_millis(ms)),
        }
    }
}

impl AbortCheck for Deadline {
    fn should_abort(&self) -> bool {
        self.at.is_some_and(|at| Instant::now() >= at)
    }
}

/// Single decision with the wall clock enforced (the time budget applies
/// to this one graph/threshold pair).
pub fn decide(g: &Graph, p: usize, budget: &SearchBudget, opts: &SolverOptions) -> Verdict {
    let deadline = Deadline::from_budget(budget);
    solver::decide_with(g, p, budget, opts, &deadline)
}

/// Full realizer: filters run once; open thresholds are searched either
/// sequentially or on `budget.jobs` threads. Per-threshold results do not
/// depend on scheduling, so parallel runs reproduce sequential output.
pub fn realizer(g: &Graph, budget: &SearchBudget, opts: &SolverOptions) -> RealizerReport {
    let n = g.n();
    let slots: Vec<Option<Verdict>> = if opts.use_filters {
        solver::apply_filters_with(g, opts)
    } else {
        vec![None; n]
    };
    let open: Vec<usize> = (1..=n).filter(|&p| slots[p - 1].is_none()).collect();
    let searched: Vec<Verdict> = if budget.jobs <= 1 || open.len() <= 1 {
        open.iter().map(|&p| search_one(g, p, budget)).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = open
                .iter()
                .map(|&p| scope.spawn(move || search_one(g, p, budget)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search thread"))
                .collect()
        })
    };
    let mut searched_iter = searched.into_iter();
    let verdicts = slots
        .into_iter()
        .map(|slot| slot.unwrap_or_else(|| searched_iter.next().expect("one verdict per open p")))
        .collect();
    RealizerReport {
        graph: g.clone(),
        verdicts,
    }
}

fn search_one(g: &Graph, p: usize, budget: &SearchBudget) -> Verdict {
    let deadline = Deadline::from_budget(budget);
    let opts = SolverOptions {
        use_filters: false,
        ..SolverOptions::default()
    };
    solver::decide_with(g, p, budget, &opts, &deadline)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pcomp_core::family;
    use pcomp_core::solver::Status;

    #[test]
    fn parallel_matches_sequential() {
        let g = family::complete_bipartite(3, 3);
        let seq = realizer(&g, &SearchBudget::default(), &SolverOptions::default());
        let par_budget = SearchBudget {
            jobs: 4,
            ..SearchBudget::default()
        };
        let par = realizer(&g, &par_budget, &SolverOptions::default());
        for (a, b) in seq.verdicts.iter().zip(&par.verdicts) {
            assert_eq!(a.status, b.status);
            assert_eq!(a.nodes, b.nodes);
        }
        assert!(seq.yes_set().is_empty());
    }

    #[test]
    fn deadline_aborts_search() {
        let g = family::complete_bipartite(3, 3);
        let budget = SearchBudget {
            time_limit_ms: Some(0),
            ..SearchBudget::default()
        };
        let opts = SolverOptions {
            use_filters: false,
            ..SolverOptions::default()
        };
        let v = decide(&g, 3, &budget, &opts);
        assert_eq!(v.status, Status::Unknown);
    }
}
