//! Cross-validation of the decision procedure: the filtered pipeline, the
//! symmetry-reduced search, and a naive per-vertex search with no
//! reductions must all agree wherever they are all defined.

use pcomp_core::enumerate;
use pcomp_core::solver::{self, NoAbort, SearchBudget, SolverOptions, Status};
use pcomp_core::{cert, Graph};

/// Reduction-free oracle: one row per vertex, every mask allowed, no
/// column ordering, no weight bounds, no class merging. `None` = node cap.
fn naive_decide(g: &Graph, p: usize, cap: u64) -> Option<bool> {
    fn rec(
        g: &Graph,
        p: usize,
        idx: usize,
        rows: &mut Vec<u32>,
        nodes: &mut u64,
        cap: u64,
    ) -> Option<bool> {
        let n = g.n();
        if idx == n {
            return Some(true);
        }
        for mask in 0..(1u32 << n) {
            *nodes += 1;
            if *nodes > cap {
                return None;
            }
            let consistent = (0..idx).all(|j| {
                let shared = (mask & rows[j]).count_ones() as usize;
                g.has_edge(idx, j) == (shared >= p)
            });
            if !consistent {
                continue;
            }
            rows[idx] = mask;
            match rec(g, p, idx + 1, rows, nodes, cap) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
        }
        Some(false)
    }
    let mut rows = vec![0u32; g.n()];
    let mut nodes = 0;
    rec(g, p, 0, &mut rows, &mut nodes, cap)
}

fn pure_search(g: &Graph, p: usize) -> Status {
    let opts = SolverOptions {
        use_filters: false,
        ..SolverOptions::default()
    };
    solver::decide_with(g, p, &SearchBudget::default(), &opts, &NoAbort).status
}

#[test]
fn reduced_search_matches_naive_search_up_to_4() {
    for n in 1..=4 {
        for g in enumerate::all_graphs(n) {
            for p in 1..=n {
                let naive = naive_decide(&g, p, 50_000_000).expect("cap generous at n <= 4");
                let reduced = pure_search(&g, p);
                assert_ne!(reduced, Status::Unknown);
                assert_eq!(
                    reduced == Status::Yes,
                    naive,
                    "disagreement on {} at p={p}",
                    g.describe()
                );
            }
        }
    }
}

#[test]
fn reduced_search_matches_naive_search_on_all_5s() {
    for g in enumerate::all_graphs(5) {
        for p in 1..=5 {
            let naive = naive_decide(&g, p, 2_000_000_000).expect("naive prunes well at n = 5");
            let reduced = pure_search(&g, p);
            assert_eq!(
                reduced == Status::Yes,
                naive,
                "disagreement on {} at p={p}",
                g.describe()
            );
        }
    }
}

/// Wherever a filter fires, its verdict must equal the search verdict.
/// (Required through order 5; order 6 is cheap enough to sweep too.)
#[test]
fn filters_agree_with_search_up_to_6() {
    for n in 1..=6 {
        for g in enumerate::all_graphs(n) {
            let slots = solver::apply_filters(&g);
            for p in 1..=n {
                let Some(filtered) = &slots[p - 1] else {
                    continue;
                };
                let searched = pure_search(&g, p);
                assert_eq!(
                    filtered.status,
                    searched,
                    "filter {} disagrees with search on {} at p={p}",
                    filtered.reason,
                    g.describe()
                );
                if filtered.status == Status::Yes {
                    let cert = filtered
                        .certificate
                        .as_ref()
                        .expect("YES carries certificate");
                    assert!(cert::check(cert), "certificate fails recheck at p={p}");
                }
            }
        }
    }
}

/// Desk-scale completeness: with the default budget nothing comes back
/// UNKNOWN through order 6.
#[test]
fn decide_is_complete_up_to_6() {
    let budget = SearchBudget::default();
    for n in 1..=6 {
        for g in enumerate::all_graphs(n) {
            for p in 1..=n {
                let v = solver::decide(&g, p, &budget);
                assert_ne!(
                    v.status,
                    Status::Unknown,
                    "UNKNOWN on {} at p={p}",
                    g.describe()
                );
                if v.status == Status::Yes {
                    assert!(v.certificate.as_ref().is_some_and(cert::check));
                }
            }
        }
    }
}

/// The sorted-column restriction does not change any search status:
/// compare against the same engine fed through relabeled inputs, which
/// exercises different block refinements on the same decision problem.
#[test]
fn search_status_is_relabeling_invariant() {
    for n in [4usize, 5] {
        for (i, g) in enumerate::all_graphs(n).into_iter().enumerate() {
            let perm: Vec<usize> = (0..n).map(|v| (v + 1 + i) % n).collect();
            let h = g.relabel(&perm);
            for p in 1..=n {
                assert_eq!(
                    pure_search(&g, p),
                    pure_search(&h, p),
                    "relabeling changed the verdict on {} at p={p}",
                    g.describe()
                );
            }
        }
    }
}
