//! Bitboard backtracking over squares in `(x, y)` order.
//!
//! Each node decides one square: place a queen there or skip it. Squares are
//! indexed `(x - 1) * n + (y - 1)`, so bit order equals lexicographic order
//! and a whole board fits in a `u128` for `n <= 11`.
//!
//! `full` holds every square lying on a line that already carries `k - 1`
//! queens. Such a square can never take a queen, and an empty square in
//! `full` is saturated. A placement of the target size is good exactly when
//! `occ | full` covers the board.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use crate::board::Square;

pub const MAX_SIDE: i32 = 11;

const SYNC_INTERVAL: u64 = 1 << 12;

pub(crate) struct Geometry {
    pub n: i32,
    pub nsq: usize,
    sq_lines: Vec<[u8; 4]>,
    line_mask: Vec<u128>,
    board: u128,
    /// `future[i]`: squares with index `>= i`.
    future: Vec<u128>,
    /// Where the lexicographically first queen may sit under symmetry
    /// reduction: `x <= y <= ceil(n/2)`.
    first_domain: u128,
}

impl Geometry {
    pub fn new(n: i32) -> Self {
        debug_assert!((1..=MAX_SIDE).contains(&n));
        let nsq = (n * n) as usize;
        let mut line_mask = vec![0u128; crate::board::line_count(n)];
        let mut sq_lines = Vec::with_capacity(nsq);
        let mut first_domain = 0u128;
        let half = (n + 1) / 2;
        for i in 0..nsq {
            let s = Self::square_of(n, i);
            let idx = s.lines().map(|l| l.index(n) as u8);
            for &l in &idx {
                line_mask[l as usize] |= 1 << i;
            }
            sq_lines.push(idx);
            if s.x <= s.y && s.y <= half {
                first_domain |= 1 << i;
            }
        }
        let board = if nsq == 128 {
            u128::MAX
        } else {
            (1u128 << nsq) - 1
        };
        let future = (0..=nsq)
            .map(|i| {
                if i >= 128 {
                    0
                } else {
                    board & !((1u128 << i) - 1)
                }
            })
            .collect();
        Self {
            n,
            nsq,
            sq_lines,
            line_mask,
            board,
            future,
            first_domain,
        }
    }

    pub fn square_of(n: i32, i: usize) -> Square {
        let i = i as i32;
        Square::new(i / n + 1, i % n + 1)
    }

    #[cfg(test)]
    pub fn index_of(&self, s: Square) -> usize {
        ((s.x - 1) * self.n + (s.y - 1)) as usize
    }

    /// Squares a placement may use once its first queen is at index `first`:
    /// nothing closer to an edge than the first queen, and in the first
    /// queen's column nothing beyond the mirror image of that queen.
    fn region_after(&self, first: usize) -> u128 {
        let n = self.n;
        let s = Self::square_of(n, first);
        let (lo, hi) = (s.x, n + 1 - s.x);
        let mut region = 0u128;
        for i in 0..self.nsq {
            let t = Self::square_of(n, i);
            let inner = (lo..=hi).contains(&t.x) && (lo..=hi).contains(&t.y);
            let column_ok = t.x != s.x || (t.y > s.y && t.y <= n + 1 - s.y);
            if inner && column_ok {
                region |= 1 << i;
            }
        }
        region
    }
}

/// State shared by all workers of one search.
pub(crate) struct Control {
    stop: AtomicBool,
    exhausted: AtomicBool,
    nodes: AtomicU64,
    budget: Option<u64>,
    witness: Mutex<Option<Vec<Square>>>,
}

impl Control {
    pub fn new(budget: Option<u64>) -> Self {
        Self {
            stop: AtomicBool::new(false),
            exhausted: AtomicBool::new(false),
            nodes: AtomicU64::new(0),
            budget,
            witness: Mutex::new(None),
        }
    }

    fn add_nodes(&self, count: u64) -> bool {
        let total = self.nodes.fetch_add(count, Ordering::Relaxed) + count;
        if self.budget.is_some_and(|b| total > b) {
            self.exhausted.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
        }
        !self.stop.load(Ordering::Relaxed)
    }

    fn offer(&self, witness: Vec<Square>) {
        let mut slot = self.witness.lock().expect("witness lock poisoned");
        if slot.is_none() {
            *slot = Some(witness);
        }
        self.stop.store(true, Ordering::Relaxed);
    }

    pub fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }

    pub fn take_witness(&self) -> Option<Vec<Square>> {
        self.witness.lock().expect("witness lock poisoned").take()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Found,
    Abort,
}

#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct LocalStats {
    pub nodes: u64,
    pub leaves: u64,
    pub symmetry_prunes: u64,
}

impl LocalStats {
    pub fn merge(&mut self, other: &LocalStats) {
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        self.symmetry_prunes += other.symmetry_prunes;
    }
}

/// A subtree: the first queens (square indices) and the next square to decide.
#[derive(Debug, Clone)]
pub(crate) struct Task {
    pub queens: Vec<u8>,
    pub next: usize,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Options {
    /// `k - 1`: a line holding this many queens is full.
    pub limit: u8,
    pub symmetry: bool,
    pub prune: bool,
}

pub(crate) struct Searcher<'a> {
    g: &'a Geometry,
    ctl: &'a Control,
    opts: Options,
    counts: [u8; 64],
    occ: u128,
    full: u128,
    region: u128,
    queens: Vec<u8>,
    unsynced: u64,
    pub stats: LocalStats,
    split: Option<(usize, Vec<Task>)>,
}

impl<'a> Searcher<'a> {
    pub fn new(g: &'a Geometry, ctl: &'a Control, opts: Options) -> Self {
        Self {
            g,
            ctl,
            opts,
            counts: [0; 64],
            occ: 0,
            full: 0,
            region: g.board,
            queens: Vec::with_capacity(g.nsq),
            unsynced: 0,
            stats: LocalStats::default(),
            split: None,
        }
    }

    /// Enumerates the subtrees rooted `depth` queens deep instead of
    /// searching below them.
    pub fn collect_tasks(&mut self, q: usize, depth: usize) -> Option<Vec<Task>> {
        self.split = Some((depth, Vec::new()));
        let flow = self.dfs(0, q as u32);
        let (_, tasks) = self.split.take().expect("split collector present");
        self.flush();
        (flow == Flow::Continue).then_some(tasks)
    }

    /// Searches below `task` for `remaining` more queens. Returns `true` if a
    /// witness was found by this searcher.
    pub fn run_task(&mut self, task: &Task, remaining: usize) -> bool {
        self.reset();
        for &i in &task.queens {
            self.place(i as usize);
        }
        let flow = self.dfs(task.next, remaining as u32);
        self.flush();
        flow == Flow::Found
    }

    pub fn run(&mut self, q: usize) -> bool {
        let flow = self.dfs(0, q as u32);
        self.flush();
        flow == Flow::Found
    }

    fn reset(&mut self) {
        self.counts = [0; 64];
        self.occ = 0;
        self.full = 0;
        self.region = self.g.board;
        self.queens.clear();
    }

    fn flush(&mut self) {
        if self.unsynced > 0 {
            self.ctl.add_nodes(self.unsynced);
            self.unsynced = 0;
        }
    }

    fn place(&mut self, i: usize) -> (u128, u128) {
        let saved = (self.full, self.region);
        for &l in &self.g.sq_lines[i] {
            let c = &mut self.counts[l as usize];
            *c += 1;
            if *c == self.opts.limit {
                self.full |= self.g.line_mask[l as usize];
            }
        }
        self.occ |= 1 << i;
        if self.queens.is_empty() && self.opts.symmetry {
            self.region = self.g.region_after(i);
        }
        self.queens.push(i as u8);
        saved
    }

    fn unplace(&mut self, i: usize, saved: (u128, u128)) {
        for &l in &self.g.sq_lines[i] {
            self.counts[l as usize] -= 1;
        }
        self.occ &= !(1 << i);
        (self.full, self.region) = saved;
        self.queens.pop();
    }

    /// Whether some line through square `i` can still reach `k - 1` queens
    /// using at most `remaining` queens drawn from `open`.
    #[inline]
    fn coverable(&self, i: usize, remaining: u32, open: u128) -> bool {
        let limit = self.opts.limit as u32;
        self.g.sq_lines[i].iter().any(|&l| {
            let c = self.counts[l as usize] as u32;
            if c >= limit {
                return true;
            }
            let need = limit - c;
            need <= remaining && (self.g.line_mask[l as usize] & open).count_ones() >= need
        })
    }

    /// Every skipped, still unsaturated square before `next` must remain
    /// coverable.
    fn pending_ok(&self, next: usize, remaining: u32) -> bool {
        let free = !self.occ & !self.full;
        let open = self.g.future[next] & self.region & free;
        let mut pending = self.g.board & !self.g.future[next] & free;
        while pending != 0 {
            let i = pending.trailing_zeros() as usize;
            if !self.coverable(i, remaining, open) {
                return false;
            }
            pending &= pending - 1;
        }
        true
    }

    fn dfs(&mut self, pos: usize, remaining: u32) -> Flow {
        self.stats.nodes += 1;
        self.unsynced += 1;
        if self.unsynced >= SYNC_INTERVAL {
            let go = self.ctl.add_nodes(self.unsynced);
            self.unsynced = 0;
            if !go {
                return Flow::Abort;
            }
        }

        let g = self.g;
        if remaining == 0 {
            self.stats.leaves += 1;
            if g.board & !(self.occ | self.full) == 0 {
                let witness = self
                    .queens
                    .iter()
                    .map(|&i| Geometry::square_of(g.n, i as usize))
                    .collect();
                self.ctl.offer(witness);
                return Flow::Found;
            }
            return Flow::Continue;
        }
        if pos >= g.nsq {
            return Flow::Continue;
        }

        let first = self.queens.is_empty();
        let symmetric_first = first && self.opts.symmetry;
        if symmetric_first && g.first_domain & g.future[pos] == 0 {
            return Flow::Continue;
        }
        let free = !self.occ & !self.full;
        if (g.future[pos] & self.region & free).count_ones() < remaining {
            return Flow::Continue;
        }

        let bit = 1u128 << pos;
        if self.full & bit == 0 {
            let allowed = if symmetric_first {
                g.first_domain
            } else {
                self.region
            };
            if allowed & bit != 0 {
                let saved = self.place(pos);
                let viable = !self.opts.prune || self.pending_ok(pos + 1, remaining - 1);
                let flow = if !viable {
                    Flow::Continue
                } else if let Some((depth, tasks)) =
                    self.split.as_mut().filter(|(d, _)| self.queens.len() == *d)
                {
                    debug_assert_eq!(*depth, self.queens.len());
                    tasks.push(Task {
                        queens: self.queens.clone(),
                        next: pos + 1,
                    });
                    Flow::Continue
                } else {
                    self.dfs(pos + 1, remaining - 1)
                };
                self.unplace(pos, saved);
                if flow != Flow::Continue {
                    return flow;
                }
            } else if self.opts.symmetry {
                self.stats.symmetry_prunes += 1;
            }

            if self.opts.prune {
                let open = g.future[pos + 1] & self.region & free;
                if !self.coverable(pos, remaining, open) {
                    return Flow::Continue;
                }
            }
        }
        self.dfs(pos + 1, remaining)
    }
}
