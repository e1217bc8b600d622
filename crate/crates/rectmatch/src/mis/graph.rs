use std::collections::VecDeque;
use std::fmt::Write;

use super::RectFamily;
use crate::error::{Error, Result, Violation};
use crate::geometry::{classify_bx, IntersectionKind};

/// Intersection graph of a family; vertices are family indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntersectionGraph {
    pub n: usize,
    /// `(i, j, kind)` with `i < j` and `kind != Disjoint`, sorted.
    pub edges: Vec<(usize, usize, IntersectionKind)>,
}

impl IntersectionGraph {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j, _) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn kind(&self, i: usize, j: usize) -> IntersectionKind {
        let key = if i < j { (i, j) } else { (j, i) };
        match self.edges.binary_search_by(|e| (e.0, e.1).cmp(&key)) {
            Ok(k) => self.edges[k].2,
            Err(_) => IntersectionKind::Disjoint,
        }
    }

    /// Restrict to the vertices in `keep`, renumbered in the given order.
    pub fn induced(&self, keep: &[usize]) -> IntersectionGraph {
        let mut pos = vec![usize::MAX; self.n];
        for (k, &v) in keep.iter().enumerate() {
            pos[v] = k;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|e| pos[e.0] != usize::MAX && pos[e.1] != usize::MAX)
            .map(|&(i, j, k)| (pos[i].min(pos[j]), pos[i].max(pos[j]), k))
            .collect();
        edges.sort_unstable();
        IntersectionGraph {
            n: keep.len(),
            edges,
        }
    }

    /// Debug dump, one `i j KIND` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (i, j, k) in &self.edges {
            let _ = writeln!(s, "{i} {j} {k}");
        }
        s
    }
}

/// Classify every intersecting pair of the family.
pub fn build_graph(f: &RectFamily<'_>) -> IntersectionGraph {
    let (boxes, sites) = f.ranked();
    let mut order: Vec<usize> = (0..boxes.len()).collect();
    order.sort_by_key(|&i| boxes[i].x0);
    let mut edges = Vec::new();
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if boxes[j].x0 > boxes[i].x1 {
                break;
            }
            let kind = classify_bx(&boxes[i], &boxes[j], |x, y| sites.contains(&(x, y)));
            if kind != IntersectionKind::Disjoint {
                edges.push((i.min(j), i.max(j), kind));
            }
        }
    }
    edges.sort_unstable();
    IntersectionGraph {
        n: boxes.len(),
        edges,
    }
}

/// Keep only piercing and corner edges.
pub fn gpc_subgraph(g: &IntersectionGraph) -> IntersectionGraph {
    IntersectionGraph {
        n: g.n,
        edges: g
            .edges
            .iter()
            .copied()
            .filter(|e| matches!(e.2, IntersectionKind::Piercing | IntersectionKind::Corner))
            .collect(),
    }
}

/// Proper 2-coloring of a forest by breadth-first traversal. Each
/// component's smallest vertex goes to the first class.
///
/// Any cycle, even or odd, is reported: the caller relies on acyclicity,
/// not just bipartiteness.
pub fn forest_two_color(g: &IntersectionGraph) -> Result<(Vec<usize>, Vec<usize>)> {
    let adj = g.adjacency();
    let mut color = vec![u8::MAX; g.n];
    let mut parent = vec![usize::MAX; g.n];
    for root in 0..g.n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if v == parent[u] {
                    continue;
                }
                if color[v] != u8::MAX {
                    return Err(Error::Contract(Violation::NotAForest(cycle_through(
                        &parent, u, v,
                    ))));
                }
                color[v] = 1 - color[u];
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    let a = (0..g.n).filter(|&v| color[v] == 0).collect();
    let b = (0..g.n).filter(|&v| color[v] == 1).collect();
    Ok((a, b))
}

/// The cycle closed by the non-tree edge `u - v`, via parent pointers.
fn cycle_through(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let (pu, pv) = (path(u), path(v));
    let lca = *pu.iter().find(|x| pv.contains(x)).expect("same component");
    let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != lca).collect();
    cycle.push(lca);
    let back: Vec<usize> = pv.iter().copied().take_while(|&x| x != lca).collect();
    cycle.extend(back.into_iter().rev());
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;
    use IntersectionKind::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> IntersectionGraph {
        IntersectionGraph {
            n,
            edges: edges.iter().map(|&(i, j)| (i, j, Point)).collect(),
        }
    }

    #[test]
    fn two_coloring_examples() {
        let (a, b) = forest_two_color(&graph(4, &[])).unwrap();
        assert_eq!((a.len(), b.len()), (4, 0));
        let (a, b) = forest_two_color(&graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])).unwrap();
        assert_eq!((a.len(), b.len()), (3, 2));
        let (a, b) = forest_two_color(&graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])).unwrap();
        assert_eq!((a.len(), b.len()), (1, 4));
    }

    #[test]
    fn cycles_are_reported() {
        match forest_two_color(&graph(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (3, 4)])) {
            Err(Error::Contract(Violation::NotAForest(c))) => {
                let mut c = c;
                c.sort();
                assert_eq!(c, vec![0, 1, 2, 3]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn gpc_filters_and_is_idempotent() {
        let g = IntersectionGraph {
            n: 4,
            edges: vec![
                (0, 1, Piercing),
                (1, 2, Side),
                (2, 3, Corner),
                (0, 3, Point),
            ],
        };
        let h = gpc_subgraph(&g);
        assert_eq!(h.edges, vec![(0, 1, Piercing), (2, 3, Corner)]);
        assert_eq!(gpc_subgraph(&h), h);
        assert_eq!(h.to_edge_list(), "0 1 PIERCING\n2 3 CORNER\n");
    }
}
