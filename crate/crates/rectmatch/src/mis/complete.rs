use std::collections::HashSet;

use super::{build_graph, RectFamily};
use crate::error::{Error, Result, Violation};
use crate::geometry::{pierces, rect_unchecked, IntersectionKind, Rect};

/// The two crossing rectangles of a corner pair: the re-pairing of the four
/// defining points, one from each rectangle, whose rectangles pierce each
/// other. `None` if no re-pairing pierces.
pub fn crossing_pair(
    f: &RectFamily<'_>,
    r: &Rect,
    s: &Rect,
) -> Option<((usize, usize), (usize, usize))> {
    let norm = |p: usize, q: usize| if p < q { (p, q) } else { (q, p) };
    for (p1, p2) in [((r.a, s.a), (r.b, s.b)), ((r.a, s.b), (r.b, s.a))] {
        if p1.0 == p1.1 || p2.0 == p2.1 {
            continue;
        }
        let (u, v) = (norm(p1.0, p1.1), norm(p2.0, p2.1));
        let (ru, rv) = (
            rect_unchecked(f.base, u.0, u.1),
            rect_unchecked(f.base, v.0, v.1),
        );
        if pierces(&ru, &rv) || pierces(&rv, &ru) {
            return Some((u, v));
        }
    }
    None
}

/// First corner pair (by family index) that lacks one of its crossing
/// rectangles.
pub(crate) fn incomplete_witness(f: &RectFamily<'_>) -> Option<(usize, usize)> {
    let members: HashSet<(usize, usize)> = f.pairs().into_iter().collect();
    build_graph(f)
        .edges
        .iter()
        .filter(|e| e.2 == IntersectionKind::Corner)
        .find(
            |&&(i, j, _)| match crossing_pair(f, &f.rects[i], &f.rects[j]) {
                Some((u, v)) => !(members.contains(&u) && members.contains(&v)),
                None => true,
            },
        )
        .map(|&(i, j, _)| (i, j))
}

/// Whether every corner pair's two crossing rectangles are in the family.
pub fn verify_complete(f: &RectFamily<'_>) -> bool {
    incomplete_witness(f).is_none()
}

/// Remove rectangles until no corner intersections remain, keeping the
/// independence number of the piercing/corner graph.
///
/// Corner pairs are visited in lexicographic order of their defining index
/// pairs; of each pair still intact, the rectangle with the larger index
/// pair goes.
pub fn corner_elimination<'a>(f: &RectFamily<'a>) -> Result<RectFamily<'a>> {
    if let Some((i, j)) = incomplete_witness(f) {
        return Err(Error::Contract(Violation::Incomplete {
            first: f.rects[i].pair(),
            second: f.rects[j].pair(),
        }));
    }
    let g = build_graph(f);
    let mut corners: Vec<(usize, usize)> = g
        .edges
        .iter()
        .filter(|e| e.2 == IntersectionKind::Corner)
        .map(|&(i, j, _)| {
            if f.rects[i].pair() < f.rects[j].pair() {
                (i, j)
            } else {
                (j, i)
            }
        })
        .collect();
    corners.sort_by_key(|&(i, j)| (f.rects[i].pair(), f.rects[j].pair()));

    let mut removed = vec![false; f.len()];
    for (i, j) in corners {
        if removed[i] || removed[j] {
            continue;
        }
        #[cfg(debug_assertions)]
        let before = step_check::alpha(f, &removed);
        removed[j] = true;
        #[cfg(debug_assertions)]
        if let Some(a) = before {
            let after = step_check::alpha(f, &removed).expect("same size bound");
            assert_eq!(
                a, after,
                "corner elimination lost independence removing {}",
                f.rects[j]
            );
        }
    }
    let keep: Vec<usize> = (0..f.len()).filter(|&k| !removed[k]).collect();
    Ok(f.subfamily(&keep))
}

#[cfg(debug_assertions)]
mod step_check {
    use super::super::{brute_force_mis_graph, build_graph, gpc_subgraph, RectFamily};

    const LIMIT: usize = 16;

    pub fn alpha(f: &RectFamily<'_>, removed: &[bool]) -> Option<usize> {
        let keep: Vec<usize> = (0..f.len()).filter(|&k| !removed[k]).collect();
        if keep.len() > LIMIT {
            return None;
        }
        let g = gpc_subgraph(&build_graph(&f.subfamily(&keep)));
        Some(
            brute_force_mis_graph(&g, LIMIT)
                .expect("within limit")
                .len(),
        )
    }
}
