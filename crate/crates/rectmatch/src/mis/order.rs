use std::collections::VecDeque;

use super::{build_graph, IndependentSet, RectFamily};
use crate::error::{Error, Result, Violation};
use crate::geometry::{IntersectionKind, Rect};

/// The piercing relation as a strict order: arc `u -> v` when rect `v`
/// pierces rect `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiercingDag {
    pub n: usize,
    /// Sorted.
    pub arcs: Vec<(usize, usize)>,
}

/// Orient the piercing edges of a corner-free family and check that the
/// result is a transitive, acyclic order.
pub fn piercing_order(f: &RectFamily<'_>) -> Result<PiercingDag> {
    let g = build_graph(f);
    let (boxes, _) = f.ranked();
    let id = |i: usize| f.rects[i].pair();
    let mut arcs = Vec::new();
    for &(i, j, kind) in &g.edges {
        match kind {
            IntersectionKind::Corner => {
                return Err(Error::Contract(Violation::CornerEdge {
                    first: id(i),
                    second: id(j),
                }));
            }
            IntersectionKind::Piercing => {
                let (ij, ji) = (
                    boxes[i].pierced_by(&boxes[j]),
                    boxes[j].pierced_by(&boxes[i]),
                );
                match (ij, ji) {
                    (true, false) => arcs.push((i, j)),
                    (false, true) => arcs.push((j, i)),
                    _ => {
                        return Err(Error::Contract(Violation::MutualPiercing {
                            first: id(i),
                            second: id(j),
                        }))
                    }
                }
            }
            _ => {}
        }
    }
    arcs.sort_unstable();
    let dag = PiercingDag { n: f.len(), arcs };
    check_order(&dag, &f.rects)?;
    Ok(dag)
}

fn check_order(d: &PiercingDag, rects: &[Rect]) -> Result<()> {
    let id = |i: usize| rects[i].pair();
    let words = d.n.div_ceil(64);
    let mut bits = vec![vec![0u64; words]; d.n];
    let mut succ = vec![Vec::new(); d.n];
    for &(u, v) in &d.arcs {
        bits[u][v / 64] |= 1 << (v % 64);
        succ[u].push(v);
    }
    for &(u, v) in &d.arcs {
        for &w in &succ[v] {
            if bits[u][w / 64] >> (w % 64) & 1 == 0 {
                return Err(Error::Contract(Violation::Intransitive {
                    u: id(u),
                    v: id(v),
                    w: id(w),
                }));
            }
        }
    }
    let mut indeg = vec![0usize; d.n];
    for &(_, v) in &d.arcs {
        indeg[v] += 1;
    }
    let mut queue: VecDeque<usize> = (0..d.n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = queue.pop_front() {
        seen += 1;
        for &v in &succ[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                queue.push_back(v);
            }
        }
    }
    if seen < d.n {
        // Walk successors among the leftover vertices until one repeats.
        let mut path = Vec::new();
        let mut u = (0..d.n).find(|&v| indeg[v] > 0).expect("leftover vertex");
        while !path.contains(&u) {
            path.push(u);
            u = *succ[u]
                .iter()
                .find(|&&v| indeg[v] > 0)
                .expect("leftover successor");
        }
        let start = path.iter().position(|&x| x == u).unwrap();
        return Err(Error::Contract(Violation::Cyclic(
            path[start..].iter().map(|&x| id(x)).collect(),
        )));
    }
    Ok(())
}

/// A maximum antichain, read off a minimum vertex cover of the split graph
/// (König) after a maximum matching (Hopcroft–Karp). By Dilworth its size
/// is `n - |matching|`.
pub fn max_antichain(d: &PiercingDag) -> IndependentSet {
    let mut adj = vec![Vec::new(); d.n];
    for &(u, v) in &d.arcs {
        adj[u].push(v);
    }
    let m = hopcroft_karp(d.n, d.n, &adj);

    // Alternating reachability from free left vertices.
    let mut left_seen = vec![false; d.n];
    let mut right_seen = vec![false; d.n];
    let mut queue: VecDeque<usize> = (0..d.n).filter(|&u| m.left[u].is_none()).collect();
    for &u in &queue {
        left_seen[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if right_seen[v] || m.left[u] == Some(v) {
                continue;
            }
            right_seen[v] = true;
            if let Some(w) = m.right[v] {
                if !left_seen[w] {
                    left_seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    // Cover = unreached left ∪ reached right; the antichain avoids it on both sides.
    let members: Vec<usize> = (0..d.n)
        .filter(|&v| left_seen[v] && !right_seen[v])
        .collect();
    let certificate_size = d.n - m.size;
    assert_eq!(members.len(), certificate_size, "Dilworth identity");
    IndependentSet {
        members,
        certificate_size,
    }
}

pub(crate) struct BipartiteMatching {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
    pub size: usize,
}

/// Maximum matching in a bipartite graph given by left adjacency lists.
pub(crate) fn hopcroft_karp(nl: usize, nr: usize, adj: &[Vec<usize>]) -> BipartiteMatching {
    const INF: usize = usize::MAX;
    let mut ml: Vec<Option<usize>> = vec![None; nl];
    let mut mr: Vec<Option<usize>> = vec![None; nr];
    let mut dist = vec![INF; nl];
    let mut size = 0;
    loop {
        let mut queue = VecDeque::new();
        for u in 0..nl {
            if ml[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match mr[v] {
                    None => found = true,
                    Some(w) if dist[w] == INF => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        for u in 0..nl {
            if ml[u].is_none() && augment(u, adj, &mut ml, &mut mr, &mut dist) {
                size += 1;
            }
        }
    }
    BipartiteMatching {
        left: ml,
        right: mr,
        size,
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    ml: &mut [Option<usize>],
    mr: &mut [Option<usize>],
    dist: &mut [usize],
) -> bool {
    for &v in &adj[u] {
        let ok = match mr[v] {
            None => true,
            Some(w) => dist[w] == dist[u] + 1 && augment(w, adj, ml, mr, dist),
        };
        if ok {
            ml[u] = Some(v);
            mr[v] = Some(u);
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dag(n: usize, arcs: &[(usize, usize)]) -> PiercingDag {
        PiercingDag {
            n,
            arcs: arcs.to_vec(),
        }
    }

    #[test]
    fn antichain_examples() {
        assert_eq!(max_antichain(&dag(3, &[(0, 1), (0, 2), (1, 2)])).len(), 1);
        assert_eq!(max_antichain(&dag(4, &[])).members, vec![0, 1, 2, 3]);
        // two chains 0<1<2 and 3<4, with 0<4
        let a = max_antichain(&dag(5, &[(0, 1), (0, 2), (1, 2), (3, 4), (0, 4)]));
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn hopcroft_karp_small() {
        let adj = vec![vec![0, 1], vec![0], vec![1, 2]];
        assert_eq!(hopcroft_karp(3, 3, &adj).size, 3);
        let adj = vec![vec![0], vec![0], vec![0]];
        assert_eq!(hopcroft_karp(3, 1, &adj).size, 1);
    }
}
