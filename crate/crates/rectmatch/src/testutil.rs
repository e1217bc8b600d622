//! Plain enumerators that unit tests check the real code against.

use crate::geometry::{empty_pairs, rect_unchecked, PointSet, Rect};
use crate::matchers::Mode;

fn meet(a: &Rect, b: &Rect) -> bool {
    a.xmin <= b.xmax && b.xmin <= a.xmax && a.ymin <= b.ymax && b.ymin <= a.ymax
}

/// Every perfect strong matching of `s` in the mode, each as a sorted pair
/// list: the lowest free point goes with each compatible partner whose
/// empty box misses every box taken so far.
pub(crate) fn perfect_matchings(s: &PointSet, mode: Mode) -> Vec<Vec<(usize, usize)>> {
    let n = s.len();
    let mut partners = vec![Vec::new(); n];
    for (i, j) in empty_pairs(s) {
        if (s[i].color == s[j].color) == (mode == Mode::Mono) {
            partners[i].push(j);
            partners[j].push(i);
        }
    }
    fn go(
        s: &PointSet,
        partners: &[Vec<usize>],
        used: &mut Vec<bool>,
        taken: &mut Vec<Rect>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let Some(p) = used.iter().position(|&u| !u) else {
            let mut m: Vec<_> = taken.iter().map(|r| r.pair()).collect();
            m.sort();
            out.push(m);
            return;
        };
        used[p] = true;
        for &q in &partners[p] {
            if used[q] {
                continue;
            }
            let r = rect_unchecked(s, p, q);
            if taken.iter().any(|t| meet(t, &r)) {
                continue;
            }
            used[q] = true;
            taken.push(r);
            go(s, partners, used, taken, out);
            taken.pop();
            used[q] = false;
        }
        used[p] = false;
    }
    let mut out = Vec::new();
    go(s, &partners, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}
