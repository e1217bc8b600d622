use super::{build_graph, IndependentSet, IntersectionGraph, RectFamily};
use crate::error::{Error, Result};

/// Default size guard for [`brute_force_mis`].
pub const MIS_GUARD: usize = 32;

/// Exact maximum independent set of `G(f)`; every intersection counts as a
/// conflict. Refuses families larger than [`MIS_GUARD`].
pub fn brute_force_mis(f: &RectFamily<'_>) -> Result<IndependentSet> {
    brute_force_mis_guarded(f, MIS_GUARD)
}

pub fn brute_force_mis_guarded(f: &RectFamily<'_>, guard: usize) -> Result<IndependentSet> {
    if f.len() > guard {
        return Err(Error::Guard {
            oracle: "brute_force_mis",
            size: f.len(),
            guard,
        });
    }
    brute_force_mis_graph(&build_graph(f), guard)
}

/// Exact maximum independent set of an arbitrary graph, by branch and bound.
pub fn brute_force_mis_graph(g: &IntersectionGraph, guard: usize) -> Result<IndependentSet> {
    if g.n > guard {
        return Err(Error::Guard {
            oracle: "brute_force_mis",
            size: g.n,
            guard,
        });
    }
    let words = g.n.div_ceil(64).max(1);
    let mut adj = vec![vec![0u64; words]; g.n];
    for &(i, j, _) in &g.edges {
        adj[i][j / 64] |= 1 << (j % 64);
        adj[j][i / 64] |= 1 << (i % 64);
    }
    let mut s = Search {
        adj: &adj,
        best: greedy(&adj, g.n),
        cur: Vec::new(),
    };
    let all = full(g.n, words);
    s.run(all);
    let mut members = s.best;
    members.sort_unstable();
    Ok(IndependentSet {
        certificate_size: members.len(),
        members,
    })
}

type Bits = Vec<u64>;

fn full(n: usize, words: usize) -> Bits {
    let mut b = vec![0u64; words];
    for v in 0..n {
        b[v / 64] |= 1 << (v % 64);
    }
    b
}

fn ones(b: &Bits) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(w, &word)| {
        let mut x = word;
        std::iter::from_fn(move || {
            if x == 0 {
                return None;
            }
            let t = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(w * 64 + t)
        })
    })
}

fn first(b: &Bits) -> Option<usize> {
    b.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

fn count_and(a: &Bits, b: &Bits) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

fn is_empty(b: &Bits) -> bool {
    b.iter().all(|&w| w == 0)
}

fn greedy(adj: &[Bits], n: usize) -> Vec<usize> {
    let mut cand = full(n, adj.first().map_or(1, Vec::len));
    let mut out = Vec::new();
    while !is_empty(&cand) {
        let v = ones(&cand)
            .min_by_key(|&v| count_and(&adj[v], &cand))
            .unwrap();
        out.push(v);
        cand[v / 64] &= !(1 << (v % 64));
        for (c, a) in cand.iter_mut().zip(&adj[v]) {
            *c &= !a;
        }
    }
    out
}

struct Search<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
    cur: Vec<usize>,
}

impl Search<'_> {
    fn take(&mut self, v: usize, cand: &mut Bits) {
        self.cur.push(v);
        cand[v / 64] &= !(1 << (v % 64));
        for (c, a) in cand.iter_mut().zip(&self.adj[v]) {
            *c &= !a;
        }
    }

    /// Greedy clique cover of `cand`: an upper bound on its independence number.
    fn cover_bound(&self, cand: &Bits) -> usize {
        let mut rest = cand.clone();
        let mut k = 0;
        while let Some(v) = first(&rest) {
            k += 1;
            rest[v / 64] &= !(1 << (v % 64));
            let mut common: Bits = rest.iter().zip(&self.adj[v]).map(|(r, a)| r & a).collect();
            while let Some(u) = first(&common) {
                rest[u / 64] &= !(1 << (u % 64));
                for (c, a) in common.iter_mut().zip(&self.adj[u]) {
                    *c &= a;
                }
                common[u / 64] &= !(1 << (u % 64));
            }
        }
        k
    }

    fn run(&mut self, mut cand: Bits) {
        let depth = self.cur.len();
        // Vertices with at most one neighbor left belong to some optimum.
        loop {
            let low = ones(&cand).find(|&v| count_and(&self.adj[v], &cand) <= 1);
            match low {
                Some(v) => self.take(v, &mut cand),
                None => break,
            }
        }
        if is_empty(&cand) {
            if self.cur.len() > self.best.len() {
                self.best = self.cur.clone();
            }
        } else if self.cur.len() + self.cover_bound(&cand) > self.best.len() {
            let v = ones(&cand)
                .max_by_key(|&v| (count_and(&self.adj[v], &cand), std::cmp::Reverse(v)))
                .unwrap();
            let mut with = cand.clone();
            self.take(v, &mut with);
            self.run(with);
            self.cur.pop();
            cand[v / 64] &= !(1 << (v % 64));
            self.run(cand);
        }
        self.cur.truncate(depth);
    }
}
