//! The all-blue and the bichromatic versions of a compiled instance.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet, VecDeque};

use super::fill::integer_points;
use super::{blocking::M1, blocking::M2, GadgetInstance};
use crate::error::{Error, Result};
use crate::geometry::{perturb, Color, ColoredPoint, Coord, PointSet};

/// The eight-point bichromatic blocker, as `(x, y, color)` on an 8×8
/// grid: a permutation pattern with its four reds on the diagonal and its
/// four blues around them, so every red has cluster points in all four
/// quadrants and can only be matched inside the cluster. It has exactly two
/// perfect bichromatic strong matchings.
pub const BI_CLUSTER: [(i64, i64, Color); 8] = [
    (0, 0, Color::Blue),
    (1, 6, Color::Blue),
    (2, 2, Color::Red),
    (3, 3, Color::Red),
    (4, 4, Color::Red),
    (5, 5, Color::Red),
    (6, 1, Color::Blue),
    (7, 7, Color::Blue),
];

/// The compiled instance with every red point dropped and replaced, where
/// needed, by a shrunken blue copy of the blocking cluster.
///
/// Blocker positions are chosen greedily among the red points so that
/// every blue pair that is not an allowed segment still contains a
/// blocker: one strictly inside the segment for collinear pairs, one in
/// the open interior for the others. Interior and on-segment blocking is
/// what survives the perturbation into general position that follows.
/// Each blocker then becomes a cluster small enough to sit between the
/// neighbouring coordinates in both axes. The original blue points keep
/// their indices, so assignment pairs of the input apply unchanged.
pub fn monochromatize(g: &GadgetInstance) -> Result<PointSet> {
    let pts = integer_points(&g.points)?;
    let blues: Vec<usize> = (0..pts.len())
        .filter(|&i| g.points[i].color == Color::Blue)
        .collect();
    check_blues_first(g, blues.len())?;
    let reds: Vec<(i64, i64)> = (blues.len()..pts.len()).map(|i| pts[i]).collect();
    let allowed: HashSet<(usize, usize)> = g
        .allowed_segments
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    let mut pairs = Vec::new();
    for i in 0..blues.len() {
        for j in i + 1..blues.len() {
            if !allowed.contains(&(i, j)) {
                pairs.push((i, j));
            }
        }
    }
    let blue_pts: Vec<(i64, i64)> = pts[..blues.len()].to_vec();
    let greens = choose_blockers(&blue_pts, &pairs, &reds)?;
    let cluster: Vec<(i64, i64, Color)> = M1
        .iter()
        .chain(&M2)
        .map(|&(x, y)| (x, y, Color::Blue))
        .collect();
    substitute(
        &blue_pts,
        vec![Color::Blue; blue_pts.len()],
        &greens,
        &cluster,
        g.grid_bound,
    )
}

/// The compiled instance recolored for bichromatic matchings.
///
/// The allowed segments form a bipartite graph on the blue points; one
/// side is turned red, so every allowed segment becomes bichromatic. Red
/// fill points are dropped, blockers for the remaining red–blue pairs are
/// chosen as in [`monochromatize`], and each becomes a copy of
/// [`BI_CLUSTER`].
pub fn bichromatize(g: &GadgetInstance) -> Result<PointSet> {
    let pts = integer_points(&g.points)?;
    let nb = (0..pts.len())
        .filter(|&i| g.points[i].color == Color::Blue)
        .count();
    check_blues_first(g, nb)?;
    let colors = two_color(nb, &g.allowed_segments)?;
    let allowed: HashSet<(usize, usize)> = g
        .allowed_segments
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    let mut pairs = Vec::new();
    for i in 0..nb {
        for j in i + 1..nb {
            if colors[i] != colors[j] && !allowed.contains(&(i, j)) {
                pairs.push((i, j));
            }
        }
    }
    let blue_pts = pts[..nb].to_vec();
    let reds: Vec<(i64, i64)> = pts[nb..].to_vec();
    let greens = choose_blockers(&blue_pts, &pairs, &reds)?;
    substitute(&blue_pts, colors, &greens, &BI_CLUSTER, g.grid_bound)
}

fn check_blues_first(g: &GadgetInstance, nb: usize) -> Result<()> {
    if g.points.iter().take(nb).any(|p| p.color != Color::Blue) {
        return Err(Error::Argument(
            "instance must list its blue points first".into(),
        ));
    }
    if g.allowed_segments.iter().any(|&(a, b)| a >= nb || b >= nb) {
        return Err(Error::Argument(
            "allowed segments must join blue points".into(),
        ));
    }
    Ok(())
}

/// Proper 2-coloring of the allowed-segment graph: `Blue` on the side of
/// each component's smallest index, `Red` on the other.
fn two_color(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Color>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut color: Vec<Option<Color>> = vec![None; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(Color::Blue);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &v in &adj[u] {
                match color[v] {
                    None => {
                        color[v] = Some(cu.other());
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        return Err(Error::Argument(format!(
                            "allowed segments are not bipartite at ({u}, {v})"
                        )));
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(Option::unwrap).collect())
}

/// Whether `c` blocks the pair `(p, q)` in a way the perturbation keeps:
/// strictly between them on a segment, or in the open interior of a box.
fn robustly_inside(p: (i64, i64), q: (i64, i64), c: (i64, i64)) -> bool {
    let (x0, x1) = (p.0.min(q.0), p.0.max(q.0));
    let (y0, y1) = (p.1.min(q.1), p.1.max(q.1));
    if x0 == x1 {
        c.0 == x0 && y0 < c.1 && c.1 < y1
    } else if y0 == y1 {
        c.1 == y0 && x0 < c.0 && c.0 < x1
    } else {
        x0 < c.0 && c.0 < x1 && y0 < c.1 && c.1 < y1
    }
}

/// Greedy hitting set: positions from `candidates` until every pair not
/// already blocked by one of `points` is blocked. Sorted output.
fn choose_blockers(
    points: &[(i64, i64)],
    pairs: &[(usize, usize)],
    candidates: &[(i64, i64)],
) -> Result<Vec<(i64, i64)>> {
    let open: Vec<(usize, usize)> = pairs
        .iter()
        .copied()
        .filter(|&(a, b)| {
            !points
                .iter()
                .any(|&c| robustly_inside(points[a], points[b], c))
        })
        .collect();
    let mut candidates = candidates.to_vec();
    candidates.sort_unstable();
    candidates.dedup();
    let hits: Vec<Vec<u32>> = candidates
        .iter()
        .map(|&c| {
            (0..open.len() as u32)
                .filter(|&k| {
                    let (a, b) = open[k as usize];
                    robustly_inside(points[a], points[b], c)
                })
                .collect()
        })
        .collect();
    if let Some(&(a, b)) = (0..open.len())
        .find(|&k| !hits.iter().any(|h| h.contains(&(k as u32))))
        .map(|k| &open[k])
    {
        return Err(Error::Argument(format!(
            "no blocker position for pair ({a}, {b})"
        )));
    }
    let mut hit = vec![false; open.len()];
    let mut left = open.len();
    // Lazy greedy: stale counts only shrink, so a popped entry whose fresh
    // count still tops the heap is a true maximum. Ties go to the smaller
    // position.
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = hits
        .iter()
        .enumerate()
        .map(|(i, h)| (h.len(), Reverse(i)))
        .collect();
    let mut chosen = Vec::new();
    while left > 0 {
        let (_, Reverse(i)) = heap.pop().expect("every open pair has a blocker");
        let fresh = hits[i].iter().filter(|&&k| !hit[k as usize]).count();
        if heap
            .peek()
            .is_some_and(|&(top, Reverse(j))| (fresh, Reverse(i)) < (top, Reverse(j)))
        {
            heap.push((fresh, Reverse(i)));
            continue;
        }
        if fresh == 0 {
            continue;
        }
        for &k in &hits[i] {
            if !std::mem::replace(&mut hit[k as usize], true) {
                left -= 1;
            }
        }
        chosen.push(candidates[i]);
    }
    chosen.sort_unstable();
    Ok(chosen)
}

/// Perturb `points ∪ greens` into general position, then replace each
/// green by `cluster`, scaled to fit strictly between the neighbouring
/// coordinates around it. The points keep their indices; clusters follow
/// in green order.
fn substitute(
    points: &[(i64, i64)],
    colors: Vec<Color>,
    greens: &[(i64, i64)],
    cluster: &[(i64, i64, Color)],
    grid: u64,
) -> Result<PointSet> {
    let mut all: Vec<(i64, i64, Color)> = points
        .iter()
        .zip(&colors)
        .map(|(&(x, y), &c)| (x, y, c))
        .collect();
    all.extend(greens.iter().map(|&(x, y)| (x, y, Color::Red)));
    let moved = perturb(&PointSet::from_ints(&all)?, grid)?;
    let gap = |coords: Vec<Coord>| {
        let mut v = coords;
        v.sort();
        v.windows(2).map(|w| &w[1] - &w[0]).min()
    };
    let dx = gap(moved.iter().map(|p| p.x.clone()).collect());
    let dy = gap(moved.iter().map(|p| p.y.clone()).collect());
    let delta = match (dx, dy) {
        (Some(a), Some(b)) => a.min(b),
        _ => Coord::one(),
    };
    let span = cluster.iter().map(|p| p.0.max(p.1)).max().unwrap_or(0);
    // Cluster extent is `span * scale`, centred: under half a gap each way.
    let scale = delta / (2 * span + 2);
    let half = Coord::ratio(span, 2)?;
    let mut out: Vec<ColoredPoint> = moved.points()[..points.len()].to_vec();
    for g in &moved.points()[points.len()..] {
        for &(x, y, c) in cluster {
            let ox = (Coord::int(x) - &half) * &scale + &g.x;
            let oy = (Coord::int(y) - &half) * &scale + &g.y;
            out.push(ColoredPoint::new(ox, oy, c));
        }
    }
    PointSet::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{empty_pairs, is_general_position};
    use crate::matchers::{decide_perfect_guarded, perfect_matching, Mode};
    use crate::reductions::{compile_planar_1in3, Clause, CombLayout, Formula, Literal, Side};
    use crate::testutil::perfect_matchings;

    fn one_clause(signs: u32, side: Side) -> (Formula, GadgetInstance) {
        let lit = |v: &str, k: u32| Literal {
            var: v.into(),
            neg: signs >> k & 1 == 1,
        };
        let f = Formula {
            variables: vec!["u".into(), "v".into(), "w".into()],
            clauses: vec![Clause {
                literals: [lit("u", 0), lit("v", 1), lit("w", 2)],
                side,
            }],
        };
        let g = compile_planar_1in3(&f, &CombLayout::for_formula(&f).unwrap()).unwrap();
        (f, g)
    }

    fn blue_count(g: &GadgetInstance) -> usize {
        g.points.count(Color::Blue)
    }

    #[test]
    fn bichromatic_cluster_has_two_matchings() {
        let s = PointSet::from_ints(&BI_CLUSTER).unwrap();
        assert!(is_general_position(&s));
        assert_eq!(perfect_matchings(&s, Mode::Bi).len(), 2);
    }

    #[test]
    fn monochromatic_truth_table() {
        for (signs, side) in [(0, Side::Above), (6, Side::Below)] {
            let (f, g) = one_clause(signs, side);
            let s = monochromatize(&g).unwrap();
            let nb = blue_count(&g);
            assert_eq!((s.len() - nb) % 12, 0);
            assert!(s.iter().all(|p| p.color == Color::Blue));
            for a in f.assignments() {
                let forced = g.assignment_pairs(&a).unwrap();
                let m = perfect_matching(&s, Mode::Mono, &forced, usize::MAX).unwrap();
                assert_eq!(m.is_some(), f.one_in_three(&a), "{a:?}");
            }
        }
    }

    #[test]
    fn bichromatic_truth_table() {
        for (signs, side) in [(0, Side::Below), (3, Side::Above)] {
            let (f, g) = one_clause(signs, side);
            let s = bichromatize(&g).unwrap();
            assert!(is_general_position(&s));
            assert_eq!(s.count(Color::Red), s.count(Color::Blue));
            assert!(decide_perfect_guarded(&s, Mode::Bi, usize::MAX).unwrap());
            for a in f.assignments() {
                let forced = g.assignment_pairs(&a).unwrap();
                let m = perfect_matching(&s, Mode::Bi, &forced, usize::MAX).unwrap();
                assert_eq!(m.is_some(), f.one_in_three(&a), "{a:?}");
            }
        }
    }

    /// Inner cluster points only see their own cluster. Corners do see
    /// outside points, but a cluster missing any corner has no perfect
    /// matching, so no perfect matching uses those pairs.
    #[test]
    fn clusters_are_sealed() {
        let (_, g) = one_clause(1, Side::Above);
        let nb = blue_count(&g);
        let s = monochromatize(&g).unwrap();
        let cluster_of = |i: usize| (i >= nb).then(|| (i - nb) / 12);
        let mut corner_exits = 0;
        for (i, j) in empty_pairs(&s) {
            if cluster_of(i) != cluster_of(j) {
                for k in [i, j] {
                    if k >= nb {
                        assert!(
                            (k - nb) % 12 < 4,
                            "inner point {k} pairs with {}",
                            i + j - k
                        );
                        corner_exits += 1;
                    }
                }
            }
        }
        assert!(corner_exits > 0);
        for c in 0..(s.len() - nb) / 12 {
            let part = PointSet::new(s.points()[nb + 12 * c..nb + 12 * c + 12].to_vec()).unwrap();
            assert!(decide_perfect_guarded(&part, Mode::Mono, 12).unwrap());
        }

        let s = bichromatize(&g).unwrap();
        let cluster_of = |i: usize| (i >= nb).then(|| (i - nb) / 8);
        for (i, j) in empty_pairs(&s) {
            if s[i].color != s[j].color && cluster_of(i) != cluster_of(j) {
                for k in [i, j] {
                    assert!(
                        k < nb || s[k].color == Color::Blue,
                        "cluster red {k} pairs outside"
                    );
                }
            }
        }
    }

    #[test]
    fn recoloring_errors() {
        let blues = PointSet::from_ints(&[
            (0, 0, Color::Blue),
            (2, 0, Color::Blue),
            (4, 0, Color::Blue),
        ])
        .unwrap();
        let g = GadgetInstance {
            points: blues,
            allowed_segments: vec![(0, 1), (1, 2), (0, 2)],
            provenance: String::new(),
            grid_bound: 4,
            variables: Vec::new(),
        };
        assert!(matches!(bichromatize(&g), Err(Error::Argument(m)) if m.contains("bipartite")));
        let mixed = GadgetInstance {
            points: PointSet::from_ints(&[(0, 0, Color::Red), (2, 0, Color::Blue)]).unwrap(),
            allowed_segments: Vec::new(),
            provenance: String::new(),
            grid_bound: 2,
            variables: Vec::new(),
        };
        assert!(monochromatize(&mixed).is_err());
    }
}
