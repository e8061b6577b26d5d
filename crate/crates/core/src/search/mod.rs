//! Exact computation of `m_k(n)`: the least size of a placement with no `k`
//! queens in a line that cannot be extended without creating `k` in a line.
//!
//! [`exists_good_of_size`] is exhaustive: `Ok(None)` is a proof that no good
//! placement of that size exists, and running out of node budget is reported
//! as [`Error::Inconclusive`], never as absence.
//!
//! Under symmetry reduction only placements in a normal form are visited.
//! Let `d` be the least distance (1-based) from a queen to an edge. Some
//! dihedral image puts that queen on the left edge, so its lexicographically
//! first queen is `(d, y)` with every queen inside `[d, n+1-d]^2`; a further
//! vertical flip brings `y <= ceil(n/2)`. The search therefore only places
//! the first queen in `x <= y <= ceil(n/2)` and confines the rest to that
//! inner square.

mod engine;

use std::thread;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::board::Placement;
use crate::error::{Error, Result};
use crate::verify::LineCounts;

use engine::{Control, Geometry, LocalStats, Options, Searcher, Task};

pub use engine::MAX_SIDE;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Line threshold: placements may not hold `k` queens on a line.
    pub k: u32,
    pub workers: usize,
    /// Cap on expanded nodes per fixed-size search.
    pub node_budget: Option<u64>,
    pub symmetry_reduction: bool,
    /// Discard nodes where a skipped square can no longer be saturated.
    pub prune: bool,
    /// Number of leading queens fixed per parallel task.
    pub split_depth: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            k: 3,
            workers: 1,
            node_budget: None,
            symmetry_reduction: true,
            prune: true,
            split_depth: 2,
        }
    }
}

impl SearchConfig {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 2 || self.k > 255 {
            return Err(Error::InvalidConfig(format!(
                "k must be in 2..=255, got {}",
                self.k
            )));
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig(
                "worker count must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub symmetry_prunes: u64,
    #[serde(with = "secs")]
    pub elapsed: Duration,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        self.symmetry_prunes += other.symmetry_prunes;
        self.elapsed += other.elapsed;
    }
}

mod secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let secs = f64::deserialize(d)?;
        Duration::try_from_secs_f64(secs).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: i32,
    pub k: u32,
    pub minimum: usize,
    pub witness: Placement,
    pub stats: SearchStats,
}

/// Outcome of one fixed-size search.
#[derive(Debug, Clone, PartialEq)]
pub struct SizeSearch {
    pub witness: Option<Placement>,
    pub stats: SearchStats,
}

/// Least possible size of a good placement on `B_n`: `n`, or `n - 1` when
/// `n = 3 mod 4`.
pub fn lower_bound(n: i32) -> Result<usize> {
    if n < 1 {
        return Err(Error::InvalidBoardSide(n));
    }
    Ok(if n % 4 == 3 { n - 1 } else { n } as usize)
}

/// The covering bound `ceil(n/2)`: a queen covers at most `4n-4` squares and
/// every square needs two coverers or an occupant.
pub fn naive_lower_bound(n: i32) -> usize {
    ((n.max(0) + 1) / 2) as usize
}

fn check_board(n: i32) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidBoardSide(n));
    }
    if n > MAX_SIDE {
        return Err(Error::UnsupportedBoard { n, max: MAX_SIDE });
    }
    Ok(())
}

/// Exhaustive search for a good placement of exactly `q` queens on `B_n`.
pub fn search_size(n: i32, q: usize, config: &SearchConfig) -> Result<SizeSearch> {
    check_board(n)?;
    config.validate()?;
    let start = Instant::now();
    let geometry = Geometry::new(n);
    let nsq = geometry.nsq;
    if q > nsq {
        return Ok(SizeSearch {
            witness: None,
            stats: SearchStats {
                elapsed: start.elapsed(),
                ..Default::default()
            },
        });
    }
    let opts = Options {
        limit: (config.k - 1) as u8,
        symmetry: config.symmetry_reduction,
        prune: config.prune,
    };
    let ctl = Control::new(config.node_budget);

    let mut stats = LocalStats::default();
    let depth = config.split_depth;
    if config.workers == 1 || depth == 0 || q <= depth {
        let mut searcher = Searcher::new(&geometry, &ctl, opts);
        searcher.run(q);
        stats.merge(&searcher.stats);
    } else {
        let mut splitter = Searcher::new(&geometry, &ctl, opts);
        let tasks = splitter.collect_tasks(q, depth);
        stats.merge(&splitter.stats);
        if let Some(tasks) = tasks {
            stats.merge(&run_parallel(
                &geometry,
                &ctl,
                opts,
                &tasks,
                q - depth,
                config.workers,
            ));
        }
    }

    let witness = ctl.take_witness();
    if witness.is_none() && ctl.exhausted() {
        return Err(Error::Inconclusive {
            n,
            q,
            budget: config.node_budget.unwrap_or(u64::MAX),
        });
    }
    let witness = witness.map(|w| Placement::new(n, w)).transpose()?;
    Ok(SizeSearch {
        witness,
        stats: SearchStats {
            nodes: stats.nodes,
            leaves: stats.leaves,
            symmetry_prunes: stats.symmetry_prunes,
            elapsed: start.elapsed(),
        },
    })
}

/// Workers pull subtree tasks off a shared queue until it drains or a
/// witness turns up.
fn run_parallel(
    geometry: &Geometry,
    ctl: &Control,
    opts: Options,
    tasks: &[Task],
    remaining: usize,
    workers: usize,
) -> LocalStats {
    let queue = std::sync::Mutex::new(tasks.iter());
    let workers = workers.min(tasks.len()).max(1);
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut searcher = Searcher::new(geometry, ctl, opts);
                    loop {
                        let next = queue.lock().expect("task queue poisoned").next();
                        let Some(task) = next else { break };
                        if searcher.run_task(task, remaining) || ctl.stopped() {
                            break;
                        }
                    }
                    searcher.stats
                })
            })
            .collect();
        handles
            .into_iter()
            .fold(LocalStats::default(), |mut acc, h| {
                acc.merge(&h.join().expect("search worker panicked"));
                acc
            })
    })
}

pub fn exists_good_of_size(n: i32, q: usize, config: &SearchConfig) -> Result<Option<Placement>> {
    search_size(n, q, config).map(|r| r.witness)
}

/// Computes `m_k(n)` by trying sizes upward. For `k = 3` the scan starts at
/// [`lower_bound`]; otherwise at 1.
///
/// When a size cannot be settled within the node budget, the error carries
/// the bracket: every smaller size was refuted, and a greedy maximal
/// placement supplies the upper end.
pub fn solve_min_good(n: i32, config: &SearchConfig) -> Result<SearchResult> {
    check_board(n)?;
    config.validate()?;
    let start = if config.k == 3 { lower_bound(n)? } else { 1 };
    let mut stats = SearchStats::default();
    for q in start..=(n * n) as usize {
        match search_size(n, q, config) {
            Ok(found) => {
                stats.absorb(&found.stats);
                if let Some(witness) = found.witness {
                    return Ok(SearchResult {
                        n,
                        k: config.k,
                        minimum: q,
                        witness,
                        stats,
                    });
                }
            }
            Err(Error::Inconclusive { .. }) => {
                let upper = greedy_good(n, config.k)?.len();
                return Err(Error::Unresolved {
                    n,
                    lower: q,
                    upper: Some(upper.max(q)),
                });
            }
            Err(e) => return Err(e),
        }
    }
    unreachable!("the greedy maximal placement bounds the minimum by n^2")
}

/// Lexicographic greedy: add every square that keeps the placement free of
/// `k` in a line. The result is maximal, hence saturated.
pub fn greedy_good(n: i32, k: u32) -> Result<Placement> {
    let mut counts = LineCounts::new(n);
    let mut queens = Vec::new();
    for s in Placement::empty(n)?.squares() {
        if counts.through(s).iter().all(|&c| c + 1 < k) {
            counts.add(s);
            queens.push(s);
        }
    }
    Placement::new(n, queens)
}

/// Whether `p` has fewer than `k` queens on every line and no square can be
/// added without reaching `k`.
pub fn is_saturated(p: &Placement, k: u32) -> bool {
    let counts = LineCounts::of(p);
    if counts.lines_with_at_least(k).next().is_some() {
        return false;
    }
    p.squares()
        .filter(|&s| !p.contains(s))
        .all(|s| counts.through(s).iter().any(|&c| c + 1 >= k))
}
