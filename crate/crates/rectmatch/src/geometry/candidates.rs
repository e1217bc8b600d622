//! Enumeration of the candidate families: all `D(p, q)` whose closed box
//! contains no third point.

use super::{rect_unchecked, Color, PointSet, Ranks, Rect};

/// All unordered index pairs `(i, j)`, `i < j`, such that `D(p_i, p_j)`
/// contains no other point of `s`, regardless of color. Sorted.
///
/// For each point we walk the points to its right in x order and keep the
/// staircase of the nearest blockers above and below, so the cost is the
/// number of points visited before the staircase closes — near linear on
/// dense grids, quadratic in the worst case.
pub fn empty_pairs(s: &PointSet) -> Vec<(usize, usize)> {
    empty_pairs_ranked(&Ranks::new(s))
}

pub(crate) fn empty_pairs_ranked(r: &Ranks) -> Vec<(usize, usize)> {
    let n = r.len();
    let mut out = Vec::new();
    let (xr, yr) = (&r.xr, &r.yr);

    // Upper sweep: q with x >= x_p, y >= y_p.
    let mut up: Vec<usize> = (0..n).collect();
    up.sort_by_key(|&i| (xr[i], yr[i]));
    for (k, &p) in up.iter().enumerate() {
        let py = yr[p];
        let mut ceiling = u32::MAX;
        for &q in &up[k + 1..] {
            let qy = yr[q];
            if qy < py {
                continue;
            }
            if qy < ceiling {
                out.push(ordered(p, q));
            }
            ceiling = ceiling.min(qy);
            if ceiling == py {
                break;
            }
        }
    }

    // Lower sweep: q with x > x_p and y < y_p. Horizontal and vertical
    // pairs were already found above.
    let mut down: Vec<usize> = (0..n).collect();
    down.sort_by_key(|&i| (xr[i], std::cmp::Reverse(yr[i])));
    for (k, &p) in down.iter().enumerate() {
        let py = yr[p];
        let mut floor: i64 = -1;
        for &q in &down[k + 1..] {
            let qy = yr[q];
            if qy > py {
                continue;
            }
            if qy < py && xr[q] > xr[p] && (qy as i64) > floor {
                out.push(ordered(p, q));
            }
            floor = floor.max(qy as i64);
            if floor == py as i64 {
                break;
            }
        }
    }
    out.sort_unstable();
    out
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn build(s: &PointSet, keep: impl Fn(Color, Color) -> bool) -> Vec<Rect> {
    empty_pairs(s)
        .into_iter()
        .filter(|&(i, j)| keep(s[i].color, s[j].color))
        .map(|(i, j)| rect_unchecked(s, i, j))
        .collect()
}

/// `R(S)`: empty rectangles spanned by two points of the same color.
pub fn candidate_monochromatic(s: &PointSet) -> Vec<Rect> {
    build(s, |a, b| a == b)
}

/// `R̄(S)`: empty rectangles spanned by a red and a blue point.
pub fn candidate_bichromatic(s: &PointSet) -> Vec<Rect> {
    build(s, |a, b| a != b)
}
