//! Exhaustive search for contact representations of small graphs, used to
//! certify the recognizers from first principles. The search knows nothing
//! about forbidden subgraphs or graph classes: it enumerates grid paths
//! inside a bounded box and checks the contact conditions directly.
//!
//! All candidate segments live in a finite universe (every horizontal and
//! vertical path inside the box), and the pairwise contact / disjointness
//! relation over that universe is precomputed as bitsets. The backtracker
//! then intersects masks instead of re-running geometry.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::graph::Graph;
use crate::rep::{relate, GridRepresentation, Orientation, PathSeg, Relation};

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Row coordinates range over 0..=max_rows.
    pub max_rows: i64,
    /// Column coordinates range over 0..=max_cols.
    pub max_cols: i64,
    pub time_budget: Option<Duration>,
    /// Canonicalizes the first placed path (horizontal, lower half of the
    /// box, span no further right than its mirror image). Every
    /// representation inside the box has an image satisfying this under
    /// transposition and the two axis flips, so exhaustiveness is kept.
    pub symmetry_breaking: bool,
}

impl SearchConfig {
    /// Default bounds for an n-vertex graph: a 2n x 2n box (at least 2x2).
    pub fn for_size(n: usize) -> SearchConfig {
        let side = (2 * n as i64).max(2);
        SearchConfig {
            max_rows: side,
            max_cols: side,
            time_budget: Some(default_budget()),
            symmetry_breaking: true,
        }
    }
}

/// Reads the time budget from VPG_TIME_BUDGET_MS, defaulting to a minute.
pub fn default_budget() -> Duration {
    std::env::var("VPG_TIME_BUDGET_MS")
        .ok()
        .and_then(|s| s.parse::<u64>().ok())
        .map(Duration::from_millis)
        .unwrap_or(Duration::from_secs(60))
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    Found(GridRepresentation),
    /// The whole space within the configured bounds was exhausted.
    NotFound,
    /// The time budget ran out first; never conflated with NotFound.
    OutOfTime,
}

#[derive(Debug, Clone, PartialEq)]
pub enum OracleVerdict {
    Yes(GridRepresentation),
    No,
    Unknown,
}

/// All paths inside the box, with the pairwise relation packed as bitsets.
struct Universe {
    segs: Vec<PathSeg>,
    words: usize,
    /// contact[i] and disjoint[i] are bit rows over all segment indices.
    contact: Vec<u64>,
    disjoint: Vec<u64>,
}

impl Universe {
    fn build(max_rows: i64, max_cols: i64) -> Universe {
        let mut segs = Vec::new();
        for row in 0..=max_rows {
            for lo in 0..max_cols {
                for hi in lo + 1..=max_cols {
                    segs.push(PathSeg::h(row, lo, hi));
                }
            }
        }
        for col in 0..=max_cols {
            for lo in 0..max_rows {
                for hi in lo + 1..=max_rows {
                    segs.push(PathSeg::v(col, lo, hi));
                }
            }
        }
        let m = segs.len();
        let words = m.div_ceil(64);
        let mut contact = vec![0u64; m * words];
        let mut disjoint = vec![0u64; m * words];
        for i in 0..m {
            for j in 0..m {
                match relate(&segs[i], &segs[j]) {
                    Relation::Contact(..) => contact[i * words + j / 64] |= 1 << (j % 64),
                    Relation::Disjoint => disjoint[i * words + j / 64] |= 1 << (j % 64),
                    _ => {}
                }
            }
        }
        Universe {
            segs,
            words,
            contact,
            disjoint,
        }
    }

    fn contact_row(&self, i: usize) -> &[u64] {
        &self.contact[i * self.words..(i + 1) * self.words]
    }

    fn disjoint_row(&self, i: usize) -> &[u64] {
        &self.disjoint[i * self.words..(i + 1) * self.words]
    }
}

/// Vertices whose paths can be swapped in any representation: u and v are
/// twins when their neighborhoods outside the pair coincide. Returns a
/// greedy matching of disjoint twin pairs avoiding `skip`, each ordered
/// (u, v) with u < v; forcing seg(u) < seg(v) is then a pure symmetry cut.
fn twin_pairs(g: &Graph, skip: usize) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut taken = vec![false; n];
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if u == skip || v == skip || taken[u] || taken[v] {
                continue;
            }
            let nu: Vec<usize> = g.neighbors(u).filter(|&x| x != v).collect();
            let nv: Vec<usize> = g.neighbors(v).filter(|&x| x != u).collect();
            if nu == nv {
                taken[u] = true;
                taken[v] = true;
                pairs.push((u, v));
            }
        }
    }
    pairs
}

/// The vertex placed first: maximum degree, preferring vertices outside
/// every twin pair so the pair cuts stay compatible with the first-path
/// canonicalization.
fn first_vertex(g: &Graph) -> usize {
    let n = g.vertex_count();
    let all_pairs = twin_pairs(g, usize::MAX);
    let in_pair = |v: usize| all_pairs.iter().any(|&(a, b)| a == v || b == v);
    (0..n)
        .max_by_key(|&v| (g.degree(v), !in_pair(v), std::cmp::Reverse(v)))
        .unwrap()
}

struct Searcher<'a> {
    g: &'a Graph,
    uni: &'a Universe,
    /// twin[v] is v's partner in the symmetry matching, if any.
    twin: &'a [Option<usize>],
    deadline: Option<Instant>,
    stop: &'a AtomicBool,
    nodes: u64,
    /// masks[d] holds, per vertex, the candidate bitset after d placements.
    masks: Vec<Vec<u64>>,
    chosen: Vec<usize>,
}

enum Dfs {
    Found(Vec<usize>),
    Exhausted,
    Interrupted,
}

impl<'a> Searcher<'a> {
    fn new(
        g: &'a Graph,
        uni: &'a Universe,
        twin: &'a [Option<usize>],
        deadline: Option<Instant>,
        stop: &'a AtomicBool,
    ) -> Searcher<'a> {
        let n = g.vertex_count();
        Searcher {
            g,
            uni,
            twin,
            deadline,
            stop,
            nodes: 0,
            masks: vec![vec![0u64; n * uni.words]; n + 1],
            chosen: vec![usize::MAX; n],
        }
    }

    fn mask_of(&self, depth: usize, v: usize) -> &[u64] {
        &self.masks[depth][v * self.uni.words..(v + 1) * self.uni.words]
    }

    fn interrupted(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes % 4096 == 0 {
            if self.stop.load(Ordering::Relaxed) {
                return true;
            }
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return true;
                }
            }
        }
        false
    }

    /// Records `s` for `v` and narrows every unplaced vertex's candidates
    /// into level `depth + 1`. Returns false if some vertex runs dry.
    fn place(&mut self, v: usize, s: usize, depth: usize) -> bool {
        self.chosen[v] = s;
        let words = self.uni.words;
        let (lower, upper) = self.masks.split_at_mut(depth + 1);
        let cur = &lower[depth];
        let next = &mut upper[0];
        for u in 0..self.g.vertex_count() {
            if self.chosen[u] != usize::MAX {
                continue;
            }
            let row = if self.g.has_edge(u, v) {
                self.uni.contact_row(s)
            } else {
                self.uni.disjoint_row(s)
            };
            let mut any = 0u64;
            if depth == 0 {
                for k in 0..words {
                    let m = row[k];
                    next[u * words + k] = m;
                    any |= m;
                }
            } else {
                for k in 0..words {
                    let m = cur[u * words + k] & row[k];
                    next[u * words + k] = m;
                    any |= m;
                }
            }
            // Symmetry cut: the lower-id twin takes the lower segment index.
            if self.twin[u] == Some(v) {
                let slot = &mut next[u * words..(u + 1) * words];
                if u < v {
                    clear_from(slot, s);
                } else {
                    clear_through(slot, s);
                }
                any = slot.iter().fold(0, |a, &m| a | m);
            }
            if any == 0 {
                return false;
            }
        }
        true
    }

    fn unplace(&mut self, v: usize) {
        self.chosen[v] = usize::MAX;
    }

    fn dfs(&mut self, depth: usize) -> Dfs {
        let n = self.g.vertex_count();
        if depth == n {
            return Dfs::Found(self.chosen.clone());
        }
        if self.interrupted() {
            return Dfs::Interrupted;
        }
        // Branch on the most anchored vertex (most placed neighbors), then
        // fail-first among those (fewest remaining candidates).
        let v = (0..n)
            .filter(|&u| self.chosen[u] == usize::MAX)
            .min_by_key(|&u| {
                let anchors = self
                    .g
                    .neighbors(u)
                    .filter(|&w| self.chosen[w] != usize::MAX)
                    .count();
                let cands = self
                    .mask_of(depth, u)
                    .iter()
                    .map(|m| m.count_ones() as usize)
                    .sum::<usize>();
                (std::cmp::Reverse(anchors), cands)
            })
            .unwrap();
        let cand: Vec<u64> = self.mask_of(depth, v).to_vec();
        for (w, word) in cand.iter().enumerate() {
            let mut bits = *word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let s = w * 64 + b;
                if self.place(v, s, depth) {
                    match self.dfs(depth + 1) {
                        Dfs::Found(c) => return Dfs::Found(c),
                        Dfs::Interrupted => return Dfs::Interrupted,
                        Dfs::Exhausted => {}
                    }
                }
            }
        }
        self.unplace(v);
        Dfs::Exhausted
    }
}

/// Zeroes bits s.. (used against the lower twin once the upper twin took s).
fn clear_from(mask: &mut [u64], s: usize) {
    let w = s / 64;
    mask[w] &= (1u64 << (s % 64)) - 1;
    for m in mask[w + 1..].iter_mut() {
        *m = 0;
    }
}

/// Zeroes bits ..=s (used against the upper twin).
fn clear_through(mask: &mut [u64], s: usize) {
    let w = s / 64;
    for m in mask[..w].iter_mut() {
        *m = 0;
    }
    let b = s % 64;
    mask[w] &= if b == 63 { 0 } else { !((1u64 << (b + 1)) - 1) };
}

/// Candidates for the first placed vertex under canonicalization: the path
/// is horizontal, in the lower half of the box, and its span starts no
/// later than the mirrored span would.
fn first_candidates(uni: &Universe, cfg: &SearchConfig) -> Vec<usize> {
    (0..uni.segs.len())
        .filter(|&i| {
            let s = &uni.segs[i];
            if !cfg.symmetry_breaking {
                return true;
            }
            s.orient == Orientation::Horizontal
                && 2 * s.line <= cfg.max_rows
                && s.lo <= cfg.max_cols - s.hi
        })
        .collect()
}

/// Backtracking search for a representation of a connected graph within the
/// configured box.
pub fn search_representation(g: &Graph, cfg: &SearchConfig) -> SearchOutcome {
    let n = g.vertex_count();
    if n == 0 {
        return SearchOutcome::Found(GridRepresentation::new(Vec::new()));
    }
    if cfg.max_rows < 2 || cfg.max_cols < 2 {
        return SearchOutcome::NotFound;
    }
    let deadline = cfg.time_budget.map(|b| Instant::now() + b);
    let uni = Universe::build(cfg.max_rows, cfg.max_cols);
    let v0 = first_vertex(g);
    let mut twin: Vec<Option<usize>> = vec![None; n];
    if cfg.symmetry_breaking {
        for (a, b) in twin_pairs(g, v0) {
            twin[a] = Some(b);
            twin[b] = Some(a);
        }
    }
    let twin = &twin;
    let firsts = first_candidates(&uni, cfg);

    let stop = AtomicBool::new(false);
    let found: Mutex<Option<Vec<usize>>> = Mutex::new(None);
    let timed_out = AtomicBool::new(false);
    let threads = std::thread::available_parallelism()
        .map(|t| t.get())
        .unwrap_or(1)
        .min(firsts.len().max(1));

    // The branches under each first-vertex placement are independent;
    // workers pull them from a shared cursor and race to a solution.
    let cursor = std::sync::atomic::AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| {
                loop {
                    if stop.load(Ordering::Relaxed) {
                        return;
                    }
                    let idx = cursor.fetch_add(1, Ordering::Relaxed);
                    if idx >= firsts.len() {
                        return;
                    }
                    let s = firsts[idx];
                    let mut searcher = Searcher::new(g, &uni, twin, deadline, &stop);
                    if !searcher.place(v0, s, 0) {
                        continue;
                    }
                    match searcher.dfs(1) {
                        Dfs::Found(chosen) => {
                            *found.lock().unwrap() = Some(chosen);
                            stop.store(true, Ordering::Relaxed);
                            return;
                        }
                        Dfs::Interrupted => {
                            if let Some(dl) = deadline {
                                if Instant::now() >= dl {
                                    timed_out.store(true, Ordering::Relaxed);
                                    stop.store(true, Ordering::Relaxed);
                                }
                            }
                            return;
                        }
                        Dfs::Exhausted => {}
                    }
                }
            });
        }
    });

    if let Some(chosen) = found.into_inner().unwrap() {
        let paths: Vec<PathSeg> = chosen.iter().map(|&s| uni.segs[s]).collect();
        let rep = GridRepresentation::new(paths);
        debug_assert!(rep.is_valid(g));
        return SearchOutcome::Found(rep);
    }
    if timed_out.load(Ordering::Relaxed) {
        SearchOutcome::OutOfTime
    } else {
        SearchOutcome::NotFound
    }
}

/// Component-wise oracle with default 2n x 2n bounds. NO means every
/// placement within the bounds was ruled out for some component; UNKNOWN
/// means the time budget expired first.
pub fn is_contact_b0vpg_small(g: &Graph) -> OracleVerdict {
    oracle_with(g, None)
}

/// Searches a family of compacted boxes that together cover everything the
/// single 2n x 2n box does. In a representation with h horizontal and v
/// vertical paths, every grid row either carries a horizontal path or a
/// vertical path's endpoint — otherwise the row can be deleted — so at most
/// h + 2v = 2n - h rows and, symmetrically, 2h + v = n + h columns are in
/// use. With the first path pinned horizontal (h >= 1; transposition covers
/// the rest), the boxes (2n-h) x (n+h) for h = 1..n exhaust the space far
/// faster than the full square.
fn search_compacted(g: &Graph, deadline_budget: Option<Duration>) -> SearchOutcome {
    let n = g.vertex_count() as i64;
    let start = Instant::now();
    for h in 1..=n {
        let budget = deadline_budget.map(|b| b.saturating_sub(start.elapsed()));
        if budget == Some(Duration::ZERO) {
            return SearchOutcome::OutOfTime;
        }
        let cfg = SearchConfig {
            max_rows: (2 * n - h - 1).max(2),
            max_cols: (n + h - 1).max(2),
            time_budget: budget,
            symmetry_breaking: true,
        };
        match search_representation(g, &cfg) {
            SearchOutcome::Found(rep) => return SearchOutcome::Found(rep),
            SearchOutcome::OutOfTime => return SearchOutcome::OutOfTime,
            SearchOutcome::NotFound => {}
        }
    }
    SearchOutcome::NotFound
}

/// Same, with an explicit budget override.
pub fn oracle_with(g: &Graph, budget: Option<Duration>) -> OracleVerdict {
    let mut placed: Vec<Option<PathSeg>> = vec![None; g.vertex_count()];
    let mut next_col = 0i64;
    let mut unknown = false;
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp).unwrap();
        let comp_budget = Some(budget.unwrap_or_else(default_budget));
        match search_compacted(&sub, comp_budget) {
            SearchOutcome::NotFound => return OracleVerdict::No,
            SearchOutcome::OutOfTime => unknown = true,
            SearchOutcome::Found(mut rep) => {
                rep.normalize();
                let (_, w) = rep.bounding_box();
                rep.translate(0, next_col);
                next_col += w + 2;
                for (i, s) in rep.paths.into_iter().enumerate() {
                    placed[map[i]] = Some(s);
                }
            }
        }
    }
    if unknown {
        return OracleVerdict::Unknown;
    }
    let rep = GridRepresentation::new(placed.into_iter().map(|s| s.unwrap()).collect());
    debug_assert!(rep.is_valid(g));
    OracleVerdict::Yes(rep)
}

/// Canonical code of a graph on at most eight vertices: the minimum
/// upper-triangle bit pattern over all vertex permutations, prefixed by n.
/// Equal codes mean isomorphic graphs; used to cache oracle verdicts during
/// exhaustive enumeration.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 8, "canonical codes cover at most eight vertices");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(p[i], p[j]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
    });
    (n as u64) << 56 | best
}

fn permute(xs: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, f);
        xs.swap(k, i);
    }
}
