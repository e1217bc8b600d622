//! Exact oracles: maximum strong matching by exhaustive pairing, and the
//! perfect-matching decision.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use super::{Matching, Mode};
use crate::error::{Error, Result};
use crate::geometry::{empty_pairs_ranked, Bx, Color, PointSet, Ranks};

/// Default size guard for [`brute_force_max_matching`] and [`decide_perfect`].
pub const MATCHING_GUARD: usize = 16;

fn compatible(s: &PointSet, mode: Mode, i: usize, j: usize) -> bool {
    (s[i].color == s[j].color) == (mode == Mode::Mono)
}

/// Candidate pairs of the mode and their rank-space boxes.
fn candidates(s: &PointSet, mode: Mode) -> (Vec<(usize, usize)>, Vec<Bx<u32>>) {
    let r = Ranks::new(s);
    let pairs: Vec<_> = empty_pairs_ranked(&r)
        .into_iter()
        .filter(|&(i, j)| compatible(s, mode, i, j))
        .collect();
    let boxes = pairs
        .iter()
        .map(|&(i, j)| Bx {
            x0: r.xr[i].min(r.xr[j]),
            x1: r.xr[i].max(r.xr[j]),
            y0: r.yr[i].min(r.yr[j]),
            y1: r.yr[i].max(r.yr[j]),
        })
        .collect();
    (pairs, boxes)
}

/// Exact maximum strong matching. Takes the lowest unprocessed point and
/// branches on pairing it with each compatible partner (ascending), then on
/// leaving it unmatched; the first maximum found in this order is the
/// lexicographically least optimal pair list.
pub fn brute_force_max_matching(s: &PointSet, mode: Mode) -> Result<Matching> {
    brute_force_max_matching_guarded(s, mode, MATCHING_GUARD)
}

pub fn brute_force_max_matching_guarded(
    s: &PointSet,
    mode: Mode,
    guard: usize,
) -> Result<Matching> {
    if s.len() > guard {
        return Err(Error::Guard {
            oracle: "brute_force_max_matching",
            size: s.len(),
            guard,
        });
    }
    let n = s.len();
    let (pairs, boxes) = candidates(s, mode);
    let m = pairs.len();
    let mut conflict = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            conflict[i][j] = boxes[i].meets(&boxes[j]);
        }
    }
    let mut by_point: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        by_point[i].push((j, k));
    }
    for v in &mut by_point {
        v.sort_unstable();
    }

    struct Dfs<'a> {
        n: usize,
        pairs: &'a [(usize, usize)],
        conflict: &'a [Vec<bool>],
        by_point: &'a [Vec<(usize, usize)>],
        used: Vec<bool>,
        chosen: Vec<usize>,
        best: Vec<usize>,
    }
    impl Dfs<'_> {
        fn run(&mut self, from: usize) {
            let Some(p) = (from..self.n).find(|&p| !self.used[p]) else {
                if self.chosen.len() > self.best.len() {
                    self.best = self.chosen.clone();
                }
                return;
            };
            let free = (p..self.n).filter(|&q| !self.used[q]).count();
            if self.chosen.len() + free / 2 <= self.best.len() {
                return;
            }
            self.used[p] = true;
            let by_point = self.by_point;
            for &(q, k) in &by_point[p] {
                if self.used[q] || self.chosen.iter().any(|&c| self.conflict[c][k]) {
                    continue;
                }
                self.used[q] = true;
                self.chosen.push(k);
                self.run(p + 1);
                self.chosen.pop();
                self.used[q] = false;
            }
            self.run(p + 1);
            self.used[p] = false;
        }
    }
    let mut dfs = Dfs {
        n,
        pairs: &pairs,
        conflict: &conflict,
        by_point: &by_point,
        used: vec![false; n],
        chosen: Vec::new(),
        best: Vec::new(),
    };
    dfs.run(0);
    Ok(Matching::new(dfs.best.iter().map(|&k| dfs.pairs[k]), mode))
}

/// Whether `s` has a perfect strong matching in the given mode.
pub fn decide_perfect(s: &PointSet, mode: Mode) -> Result<bool> {
    decide_perfect_guarded(s, mode, MATCHING_GUARD)
}

pub fn decide_perfect_guarded(s: &PointSet, mode: Mode, guard: usize) -> Result<bool> {
    Ok(perfect_matching(s, mode, &[], guard)?.is_some())
}

/// A perfect strong matching containing all of `forced`, if one exists.
///
/// The search is an exact cover over the candidate rectangles: repeatedly
/// match the point with the fewest remaining options (forced moves first),
/// trying smaller rectangles first. On a dead end it backjumps to the most
/// recent decision that actually contributed to the failure, so
/// independent regions of a large instance do not multiply each other's
/// search effort.
pub fn perfect_matching(
    s: &PointSet,
    mode: Mode,
    forced: &[(usize, usize)],
    guard: usize,
) -> Result<Option<Matching>> {
    let n = s.len();
    if n > guard {
        return Err(Error::Guard {
            oracle: "decide_perfect",
            size: n,
            guard,
        });
    }
    if n % 2 == 1 || (mode == Mode::Bi && s.count(Color::Red) != s.count(Color::Blue)) {
        return Ok(None);
    }
    let (pairs, boxes) = candidates(s, mode);
    let mut search = Cover::new(s, &pairs, &boxes);
    for &(i, j) in forced {
        let key = (i.min(j), i.max(j));
        let k = pairs.binary_search(&key).map_err(|_| {
            Error::Argument(format!(
                "forced pair ({i}, {j}) is not a candidate of the mode"
            ))
        })?;
        if !search.alive(k) {
            return Ok(None);
        }
        search.choose(k as u32, 0, None);
    }
    Ok(search
        .run()
        .map(|ks| Matching::new(ks.into_iter().map(|k| pairs[k]), mode)))
}

/// Decisions a probe may spend before giving up on an option.
const PROBE_BUDGET: u64 = 16;

const NONE: u32 = u32::MAX;
/// Killer of options refuted at the root.
const BANNED: u32 = u32::MAX - 1;

enum Outcome {
    Found(Vec<usize>),
    Refuted,
    GaveUp,
}

struct Step {
    rect: u32,
    level: u32,
    /// The point whose last option this was; `None` for decisions.
    forced_by: Option<u32>,
    trail_len: usize,
}

struct Frame {
    options: Vec<u32>,
    next: usize,
    blame: BTreeSet<u32>,
}

struct Cover {
    ends: Vec<[u32; 2]>,
    incident: Vec<Vec<u32>>,
    conflicts: Vec<Vec<u32>>,
    kills: Vec<u32>,
    killer: Vec<u32>,
    matched: Vec<u32>,
    opts: Vec<u32>,
    /// Unmatched points by (options, most recently narrowed first, index).
    queue: BTreeSet<(u32, Reverse<u32>, u32)>,
    stamp: Vec<u32>,
    clock: u32,
    recency: bool,
    steps: Vec<Step>,
    trail: Vec<u32>,
}

impl Cover {
    fn new(s: &PointSet, pairs: &[(usize, usize)], boxes: &[Bx<u32>]) -> Self {
        let n = s.len();
        let ends: Vec<[u32; 2]> = pairs.iter().map(|&(i, j)| [i as u32, j as u32]).collect();
        let size = |k: usize| {
            let (i, j) = pairs[k];
            (s[i].x.to_f64() - s[j].x.to_f64()).abs() + (s[i].y.to_f64() - s[j].y.to_f64()).abs()
        };
        let sizes: Vec<f64> = (0..pairs.len()).map(size).collect();
        let mut incident: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            incident[i].push(k as u32);
            incident[j].push(k as u32);
        }
        for (p, list) in incident.iter_mut().enumerate() {
            let other = |k: u32| {
                if ends[k as usize][0] as usize == p {
                    ends[k as usize][1]
                } else {
                    ends[k as usize][0]
                }
            };
            list.sort_by(|&a, &b| {
                sizes[a as usize]
                    .total_cmp(&sizes[b as usize])
                    .then(other(a).cmp(&other(b)))
            });
        }
        let opts: Vec<u32> = incident.iter().map(|v| v.len() as u32).collect();
        let queue = (0..n as u32)
            .map(|p| (opts[p as usize], Reverse(0), p))
            .collect();
        Cover {
            ends,
            incident,
            conflicts: conflict_lists(boxes),
            kills: vec![0; pairs.len()],
            killer: vec![NONE; pairs.len()],
            matched: vec![NONE; n],
            opts,
            queue,
            stamp: vec![0; n],
            clock: 0,
            recency: false,
            steps: Vec::new(),
            trail: Vec::new(),
        }
    }

    fn key(&self, p: u32) -> (u32, Reverse<u32>, u32) {
        let stamp = if self.recency {
            self.stamp[p as usize]
        } else {
            0
        };
        (self.opts[p as usize], Reverse(stamp), p)
    }

    /// One option of `p` died.
    fn narrow(&mut self, p: u32) {
        if self.matched[p as usize] == NONE {
            self.queue.remove(&self.key(p));
            self.opts[p as usize] -= 1;
            self.clock += 1;
            self.stamp[p as usize] = self.clock;
            self.queue.insert(self.key(p));
        }
    }

    fn alive(&self, k: usize) -> bool {
        self.kills[k] == 0
    }

    fn choose(&mut self, k: u32, level: u32, forced_by: Option<u32>) {
        let id = self.steps.len() as u32;
        self.steps.push(Step {
            rect: k,
            level,
            forced_by,
            trail_len: self.trail.len(),
        });
        for p in self.ends[k as usize] {
            self.queue.remove(&self.key(p));
            self.matched[p as usize] = id;
        }
        let [a, b] = self.ends[k as usize];
        let victims: Vec<u32> = self.incident[a as usize]
            .iter()
            .chain(&self.incident[b as usize])
            .chain(&self.conflicts[k as usize])
            .copied()
            .collect();
        for t in victims {
            self.trail.push(t);
            self.kills[t as usize] += 1;
            if self.kills[t as usize] == 1 {
                self.killer[t as usize] = id;
                for q in self.ends[t as usize] {
                    self.narrow(q);
                }
            }
        }
    }

    fn undo(&mut self) {
        let step = self.steps.pop().expect("step to undo");
        while self.trail.len() > step.trail_len {
            let t = self.trail.pop().unwrap();
            self.kills[t as usize] -= 1;
            if self.kills[t as usize] == 0 {
                self.killer[t as usize] = NONE;
                for q in self.ends[t as usize] {
                    if self.matched[q as usize] == NONE {
                        self.queue.remove(&self.key(q));
                        self.opts[q as usize] += 1;
                        self.queue.insert(self.key(q));
                    }
                }
            }
        }
        for p in self.ends[step.rect as usize] {
            self.matched[p as usize] = NONE;
            self.queue.insert(self.key(p));
        }
    }

    /// Decision levels responsible for the given killed rects.
    fn blame(&self, dead: impl IntoIterator<Item = u32>) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        let mut seen = vec![false; self.steps.len()];
        let mut stack: Vec<u32> = dead.into_iter().map(|t| self.killer[t as usize]).collect();
        while let Some(id) = stack.pop() {
            if id == BANNED || std::mem::replace(&mut seen[id as usize], true) {
                continue;
            }
            let st = &self.steps[id as usize];
            match st.forced_by {
                None => {
                    out.insert(st.level);
                }
                Some(q) => {
                    stack.extend(
                        self.incident[q as usize]
                            .iter()
                            .filter(|&&t| t != st.rect)
                            .map(|&t| self.killer[t as usize]),
                    );
                }
            }
        }
        out.remove(&0);
        out
    }

    /// Takes every forced move at `level`; the point left without options,
    /// if any.
    fn propagate(&mut self, level: u32) -> Option<u32> {
        loop {
            match self.queue.first().copied() {
                Some((0, _, p)) => return Some(p),
                Some((1, _, p)) => {
                    let k = *self.incident[p as usize]
                        .iter()
                        .find(|&&k| self.kills[k as usize] == 0)
                        .unwrap();
                    self.choose(k, level, Some(p));
                }
                _ => return None,
            }
        }
    }

    /// Kills `k` for good. Only valid with no decision on the stack.
    fn ban(&mut self, k: u32) {
        self.kills[k as usize] += 1;
        self.killer[k as usize] = BANNED;
        for q in self.ends[k as usize] {
            self.narrow(q);
        }
    }

    fn undo_decisions(&mut self) {
        while self.steps.last().is_some_and(|s| s.level > 0) {
            self.undo();
        }
    }

    /// Searches in rounds with doubling budgets, alternating the two
    /// tie-breaks for equally constrained points: lowest index, and most
    /// recently narrowed. Neither order is good on every instance; taking
    /// turns costs at most a constant factor over the better one. After the
    /// first round comes probing: each live option is tried with a small
    /// budget, and options refuted that way are banned, which keeps them out
    /// of later conflict explanations.
    fn run(&mut self) -> Option<Vec<usize>> {
        if self.propagate(0).is_some() {
            return None;
        }
        let mut budget = self.matched.len() as u64;
        for round in 0.. {
            for recency in [false, true] {
                self.set_recency(recency);
                let outcome = self.solve(Vec::new(), budget);
                self.undo_decisions();
                match outcome {
                    Outcome::Found(ks) => return Some(ks),
                    Outcome::Refuted => return None,
                    Outcome::GaveUp => {}
                }
            }
            if round == 0 {
                match self.probe() {
                    Some(Outcome::Found(ks)) => return Some(ks),
                    Some(_) => return None,
                    None => {}
                }
            }
            budget = budget.saturating_mul(2);
        }
        unreachable!()
    }

    fn set_recency(&mut self, on: bool) {
        self.recency = on;
        self.queue = (0..self.matched.len() as u32)
            .filter(|&p| self.matched[p as usize] == NONE)
            .map(|p| self.key(p))
            .collect();
    }

    /// Probing to a fixpoint; `Some` if it settled the instance.
    fn probe(&mut self) -> Option<Outcome> {
        loop {
            let mut banned = false;
            for k in 0..self.ends.len() as u32 {
                if self.kills[k as usize] != 0 {
                    continue;
                }
                let frame = Frame {
                    options: vec![k],
                    next: 1,
                    blame: BTreeSet::new(),
                };
                self.choose(k, 1, None);
                let outcome = self.solve(vec![frame], PROBE_BUDGET);
                self.undo_decisions();
                match outcome {
                    Outcome::Found(ks) => return Some(Outcome::Found(ks)),
                    Outcome::GaveUp => {}
                    Outcome::Refuted => {
                        self.ban(k);
                        banned = true;
                        if self.propagate(0).is_some() {
                            return Some(Outcome::Refuted);
                        }
                    }
                }
            }
            if !banned {
                return None;
            }
        }
    }

    fn solve(&mut self, mut frames: Vec<Frame>, mut budget: u64) -> Outcome {
        loop {
            let level = frames.len() as u32;
            let mut blame = match self.propagate(level) {
                Some(p) => self.blame(self.incident[p as usize].clone()),
                None => {
                    let Some(&(_, _, p)) = self.queue.first() else {
                        return Outcome::Found(
                            self.steps.iter().map(|s| s.rect as usize).collect(),
                        );
                    };
                    if budget == 0 {
                        return Outcome::GaveUp;
                    }
                    budget -= 1;
                    let (options, dead): (Vec<u32>, Vec<u32>) = self.incident[p as usize]
                        .iter()
                        .partition(|&&k| self.kills[k as usize] == 0);
                    let blame = self.blame(dead);
                    let first = options[0];
                    frames.push(Frame {
                        options,
                        next: 1,
                        blame,
                    });
                    self.choose(first, frames.len() as u32, None);
                    continue;
                }
            };
            // Backjump.
            loop {
                if frames.is_empty() {
                    return Outcome::Refuted;
                }
                let lvl = frames.len() as u32;
                while self.steps.last().is_some_and(|s| s.level >= lvl) {
                    self.undo();
                }
                if !blame.remove(&lvl) {
                    frames.pop();
                    if blame.is_empty() {
                        return Outcome::Refuted;
                    }
                    continue;
                }
                let frame = frames.last_mut().unwrap();
                frame.blame.append(&mut blame);
                if frame.next < frame.options.len() {
                    if budget == 0 {
                        return Outcome::GaveUp;
                    }
                    budget -= 1;
                    let k = frame.options[frame.next];
                    frame.next += 1;
                    self.choose(k, lvl, None);
                    break;
                }
                blame = std::mem::take(&mut frame.blame);
                frames.pop();
                if blame.is_empty() {
                    return Outcome::Refuted;
                }
            }
        }
    }
}

/// For every box, the other boxes it meets. Boxes are bucketed on a grid
/// and each meeting pair is reported once, in the cell holding the
/// lower-left corner of the overlap.
fn conflict_lists(boxes: &[Bx<u32>]) -> Vec<Vec<u32>> {
    let m = boxes.len();
    let mut out = vec![Vec::new(); m];
    if m == 0 {
        return out;
    }
    let span = boxes.iter().map(|b| b.x1.max(b.y1)).max().unwrap() as usize + 1;
    let cells = ((m as f64).sqrt().ceil() as usize).clamp(1, span);
    let cell = span.div_ceil(cells);
    let idx = |v: u32| v as usize / cell;
    let mut grid: Vec<Vec<u32>> = vec![Vec::new(); cells * cells];
    for (k, b) in boxes.iter().enumerate() {
        for cx in idx(b.x0)..=idx(b.x1) {
            for cy in idx(b.y0)..=idx(b.y1) {
                grid[cx * cells + cy].push(k as u32);
            }
        }
    }
    for (c, bucket) in grid.iter().enumerate() {
        for (u, &i) in bucket.iter().enumerate() {
            for &j in &bucket[u + 1..] {
                let (a, b) = (&boxes[i as usize], &boxes[j as usize]);
                if a.meets(b) && idx(a.x0.max(b.x0)) * cells + idx(a.y0.max(b.y0)) == c {
                    out[i as usize].push(j);
                    out[j as usize].push(i);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Color::*;

    #[test]
    fn spec_examples() {
        let s = PointSet::from_ints(&[(0, 0, Blue), (1, 1, Blue)]).unwrap();
        assert_eq!(
            brute_force_max_matching(&s, Mode::Mono).unwrap().pairs,
            vec![(0, 1)]
        );
        assert!(brute_force_max_matching(&s, Mode::Bi).unwrap().is_empty());
        let odd = PointSet::from_ints(&[(0, 0, Blue), (1, 1, Blue), (2, 2, Blue)]).unwrap();
        assert!(!decide_perfect(&odd, Mode::Mono).unwrap());
        let unbalanced =
            PointSet::from_ints(&[(0, 0, Blue), (1, 1, Blue), (2, 2, Blue), (3, 3, Red)]).unwrap();
        assert!(!decide_perfect(&unbalanced, Mode::Bi).unwrap());
    }

    #[test]
    fn canonical_optimum_is_lexicographically_least() {
        // Four collinear points: {01, 23} beats {12} and is least.
        let s = PointSet::from_ints(&[(0, 0, Red), (1, 0, Red), (2, 0, Red), (3, 0, Red)]).unwrap();
        assert_eq!(
            brute_force_max_matching(&s, Mode::Mono).unwrap().pairs,
            vec![(0, 1), (2, 3)]
        );
    }

    #[test]
    fn guard_refuses() {
        let pts: Vec<_> = (0..17).map(|i| (i, i, Red)).collect();
        let s = PointSet::from_ints(&pts).unwrap();
        assert!(matches!(
            brute_force_max_matching(&s, Mode::Mono),
            Err(Error::Guard { .. })
        ));
        assert!(brute_force_max_matching_guarded(&s, Mode::Mono, 20).is_ok());
    }

    #[test]
    fn conflict_lists_match_pairwise_check() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let boxes: Vec<Bx<u32>> = (0..300)
            .map(|_| {
                let (x, y) = (rng.gen_range(0..60), rng.gen_range(0..60));
                Bx {
                    x0: x,
                    x1: x + rng.gen_range(0..8),
                    y0: y,
                    y1: y + rng.gen_range(0..8),
                }
            })
            .collect();
        let got = conflict_lists(&boxes);
        for i in 0..boxes.len() {
            let mut want: Vec<u32> = (0..boxes.len())
                .filter(|&j| j != i && boxes[i].meets(&boxes[j]))
                .map(|j| j as u32)
                .collect();
            let mut have = got[i].clone();
            want.sort();
            have.sort();
            assert_eq!(have, want);
        }
    }

    #[test]
    fn perfect_search_agrees_with_exhaustive_pairing() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let (mut yes, mut no) = (0, 0);
        for _ in 0..1500 {
            let n = 2 * rng.gen_range(1..=7);
            let side = rng.gen_range(2..7);
            let mut seen = std::collections::BTreeSet::new();
            while seen.len() < n.min(side * side) {
                seen.insert((rng.gen_range(0..side as i64), rng.gen_range(0..side as i64)));
            }
            let pts: Vec<_> = seen
                .into_iter()
                .map(|(x, y)| (x, y, if rng.gen_bool(0.5) { Red } else { Blue }))
                .collect();
            let s = PointSet::from_ints(&pts).unwrap();
            for mode in [Mode::Mono, Mode::Bi] {
                let best = brute_force_max_matching(&s, mode).unwrap();
                let want = 2 * best.len() == s.len();
                let got = perfect_matching(&s, mode, &[], MATCHING_GUARD).unwrap();
                assert_eq!(got.is_some(), want, "{pts:?} {mode:?}");
                if let Some(m) = got {
                    assert!(crate::matchers::verify_matching(&s, &m)
                        .checks()
                        .iter()
                        .all(|c| c.passed));
                    yes += 1;
                    // Forcing one of its pairs keeps it feasible.
                    assert!(perfect_matching(&s, mode, &m.pairs[..1], MATCHING_GUARD)
                        .unwrap()
                        .is_some());
                } else {
                    no += 1;
                }
            }
        }
        assert!(yes > 100 && no > 100, "{yes} {no}");
    }
}
