//! Exhaustive search for small planar Turán numbers.
//!
//! Connected planar graphs on `n` vertices are generated level by level in
//! the number of edges, starting from the trees. A child `G + x` is kept only
//! when `x` has the largest edge invariant among the non-bridge edges of the
//! child (a necessary condition for `x` being the canonical deletion), and
//! children are then deduplicated by canonical code. Every connected graph
//! with a cycle has a non-bridge edge whose deletion leaves a connected
//! graph, so each level is complete. For a subgraph-monotone forbidden
//! pattern the same holds after discarding pattern-containing graphs, which
//! is how [`ex_p`] prunes.
//!
//! Within a level the parents are processed in parallel and the children are
//! merged by sorting, so results do not depend on the worker count.

mod bounds;
pub mod canon;
mod planarity;
mod report;

pub mod oracle;
#[cfg(test)]
mod tests;

use rayon::prelude::*;
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded, SharedBudget};
use crate::embed::PlaneGraph;
use crate::pattern::{matches_within, BitGraph, Pattern, PatternError};

pub use bounds::{bound_rows, deficiency_bound, BoundRow, BoundStatus, Family};
pub use canon::{canonical_code, canonical_form, graph_from_code, Canon, MAX_CANON_VERTICES};
pub use planarity::{embed_masks, is_planar, planar_rotation};
pub use report::{read_report_csv, report_rows, write_report_csv, ReportError, ReportRow, REPORT_HEADER};

/// Largest `n` accepted by the exhaustive searches.
pub const MAX_SEARCH_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TuranError {
    #[error("n = {n} is outside the supported range 3..={max}", max = MAX_SEARCH_VERTICES)]
    OutOfRange { n: usize },
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("pattern detection failed: {0}")]
    Detect(String),
    #[error("failed to build a pool of {0} worker threads")]
    Pool(usize),
}

/// Worker pool size; `None` uses the global pool.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Distinct graphs examined (children after deduplication, plus trees).
    pub visited: u64,
    /// Examined graphs discarded because they contain the pattern; none of
    /// their supergraphs is generated.
    pub pruned: u64,
    /// Number of kept classes at each edge count, from `n - 1` upwards.
    pub level_sizes: Vec<usize>,
}

/// Canonical codes of the kept classes, grouped by edge count.
#[derive(Debug, Clone)]
pub struct Levels {
    pub n: usize,
    /// `levels[i]` holds graphs with `n - 1 + i` edges, sorted by code.
    pub levels: Vec<Vec<u64>>,
    pub stats: SearchStats,
}

impl Levels {
    pub fn total(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn codes(&self) -> impl Iterator<Item = u64> + '_ {
        self.levels.iter().flatten().copied()
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub n: usize,
    pub pattern: Pattern,
    pub max_edges: usize,
    pub witness: PlaneGraph,
    pub rows: Vec<BoundRow>,
    pub stats: SearchStats,
}

impl SearchReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundRow> {
        self.rows.iter().filter(|r| r.status == BoundStatus::Violated)
    }

    pub fn all_satisfied(&self) -> bool {
        self.violations().next().is_none()
    }
}

fn check_n(n: usize) -> Result<(), TuranError> {
    if (3..=MAX_SEARCH_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(TuranError::OutOfRange { n })
    }
}

fn with_pool<T: Send>(opts: &SearchOptions, f: impl FnOnce() -> T + Send) -> Result<T, TuranError> {
    match opts.jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(j).build().map_err(|_| TuranError::Pool(j))?;
            Ok(pool.install(f))
        }
    }
}

/// Edge invariant used by the canonical-deletion filter.
fn edge_invariant(adj: &[u64], a: usize, b: usize) -> u32 {
    let (da, db) = (adj[a].count_ones(), adj[b].count_ones());
    (da.max(db) << 16) | (da.min(db) << 8) | (adj[a] & adj[b]).count_ones()
}

fn is_bridge(adj: &[u64], a: usize, b: usize) -> bool {
    let mut seen = 1u64 << a;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in crate::pattern::bits(frontier) {
            let mut nb = adj[v];
            if v == a {
                nb &= !(1 << b);
            }
            if v == b {
                nb &= !(1 << a);
            }
            next |= nb;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen >> b & 1 == 0
}

/// Canonical codes of the children of `code` that pass the
/// canonical-deletion filter.
fn children(n: usize, code: u64, budget: &SharedBudget) -> Result<Vec<u64>, BudgetExceeded> {
    let mut adj = graph_from_code(n, code);
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if adj[a] >> b & 1 == 1 {
                continue;
            }
            budget.charge(1)?;
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            let inv = edge_invariant(&adj, a, b);
            let beaten = (0..n).any(|c| {
                crate::pattern::bits(adj[c] & !((2u64 << c) - 1))
                    .any(|d| edge_invariant(&adj, c, d) > inv && !is_bridge(&adj, c, d))
            });
            if !beaten {
                out.push(canonical_code(&adj));
            }
            adj[a] &= !(1 << b);
            adj[b] &= !(1 << a);
        }
    }
    Ok(out)
}

/// Non-isomorphic trees on `n` vertices, by leaf addition.
fn trees(n: usize) -> Vec<u64> {
    let mut level = vec![0u64];
    for m in 1..n {
        let mut next: Vec<u64> = level
            .iter()
            .flat_map(|&code| {
                let base = graph_from_code(m, code);
                (0..m).map(move |v| {
                    let mut adj = base.clone();
                    adj.push(1 << v);
                    adj[v] |= 1 << m;
                    canonical_code(&adj)
                })
            })
            .collect();
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    level
}

enum Verdict {
    Keep,
    NotPlanar,
    Pruned,
}

/// Runs the level-by-level generation, keeping graphs accepted by `keep`
/// (which must be closed under taking connected spanning subgraphs).
fn generate(
    n: usize,
    keep: &(dyn Fn(&[u64]) -> Result<bool, TuranError> + Sync),
    opts: &SearchOptions,
    budget: &mut Budget,
) -> Result<Levels, TuranError> {
    check_n(n)?;
    let shared = budget.share();
    let result = with_pool(opts, || {
        let mut stats = SearchStats::default();
        let classify = |code: u64| -> Result<Verdict, TuranError> {
            let adj = graph_from_code(n, code);
            let lists: Vec<Vec<usize>> = adj.iter().map(|&m| crate::pattern::bits(m).collect()).collect();
            if !is_planar(&lists) {
                return Ok(Verdict::NotPlanar);
            }
            Ok(if keep(&adj)? { Verdict::Keep } else { Verdict::Pruned })
        };
        let filter = |codes: Vec<u64>, stats: &mut SearchStats| -> Result<Vec<u64>, TuranError> {
            let verdicts: Vec<Verdict> = codes.par_iter().map(|&c| classify(c)).collect::<Result<_, _>>()?;
            stats.visited += codes.len() as u64;
            let mut kept = Vec::new();
            for (c, v) in codes.into_iter().zip(verdicts) {
                match v {
                    Verdict::Keep => kept.push(c),
                    Verdict::Pruned => stats.pruned += 1,
                    Verdict::NotPlanar => {}
                }
            }
            Ok(kept)
        };
        let mut levels = vec![filter(trees(n), &mut stats)?];
        for _ in n - 1..3 * n - 6 {
            let last = levels.last().expect("tree level");
            if last.is_empty() {
                break;
            }
            let batches: Vec<Vec<u64>> =
                last.par_iter().map(|&c| children(n, c, &shared)).collect::<Result<_, _>>()?;
            let mut next: Vec<u64> = batches.into_iter().flatten().collect();
            next.sort_unstable();
            next.dedup();
            levels.push(filter(next, &mut stats)?);
        }
        while levels.len() > 1 && levels.last().is_some_and(Vec::is_empty) {
            levels.pop();
        }
        stats.level_sizes = levels.iter().map(Vec::len).collect();
        Ok(Levels { n, levels, stats })
    });
    budget.absorb(&shared);
    result?
}

/// Canonical codes of all connected planar graphs on `n` vertices.
pub fn planar_levels(n: usize, opts: &SearchOptions, budget: &mut Budget) -> Result<Levels, TuranError> {
    generate(n, &|_| Ok(true), opts, budget)
}

/// One embedded representative per isomorphism class of connected planar
/// graphs on `n` vertices, in order of edge count and then code.
pub fn enumerate_planar(n: usize) -> Result<impl Iterator<Item = PlaneGraph>, TuranError> {
    enumerate_planar_with(n, &SearchOptions::default(), &mut Budget::unlimited())
}

pub fn enumerate_planar_with(
    n: usize,
    opts: &SearchOptions,
    budget: &mut Budget,
) -> Result<impl Iterator<Item = PlaneGraph>, TuranError> {
    let levels = planar_levels(n, opts, budget)?;
    Ok(levels
        .levels
        .into_iter()
        .flatten()
        .map(move |code| embed_masks(&graph_from_code(n, code)).expect("generated graphs are planar and connected")))
}

/// Whether `adj` contains the forbidden structure: the pattern itself, or a
/// cycle of length at least `k` for `CircumferenceLess(k)`.
pub fn contains_forbidden(adj: &[u64], pattern: Pattern) -> Result<bool, TuranError> {
    let g = BitGraph::from_masks(adj.to_vec());
    let m = matches_within(&g, pattern, &mut Budget::unlimited()).map_err(|e| TuranError::Detect(e.to_string()))?;
    Ok(match pattern {
        Pattern::CircumferenceLess(_) => !m.present,
        _ => m.present,
    })
}

/// The largest edge count of a connected planar graph on `n` vertices free
/// of `pattern`, with a witness and the applicable bound rows.
pub fn ex_p(n: usize, pattern: Pattern) -> Result<SearchReport, TuranError> {
    ex_p_with(n, pattern, &SearchOptions::default(), &mut Budget::unlimited())
}

pub fn ex_p_with(
    n: usize,
    pattern: Pattern,
    opts: &SearchOptions,
    budget: &mut Budget,
) -> Result<SearchReport, TuranError> {
    pattern.validate()?;
    let pattern = pattern.normalized();
    let levels = generate(n, &|adj| Ok(!contains_forbidden(adj, pattern)?), opts, budget)?;
    let top = levels.levels.len() - 1;
    let code = *levels.levels[top].first().expect("trees are pattern-free");
    let max_edges = n - 1 + top;
    let witness = embed_masks(&graph_from_code(n, code)).expect("kept graphs are planar and connected");
    Ok(SearchReport {
        n,
        pattern,
        max_edges,
        witness,
        rows: bound_rows(n, pattern, max_edges),
        stats: levels.stats,
    })
}

/// Computes `ex_p` for the family member of length `k` and returns its
/// bound rows.
pub fn check_bound(n: usize, k: usize, family: Family) -> Result<SearchReport, TuranError> {
    ex_p(n, family.pattern(k))
}
