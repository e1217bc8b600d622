use crate::geometry::{Color, ColoredPoint, PointSet, Rect};
use crate::mis::{Diagonal, Orientation, RectFamily};

/// Which defining points sit at the bottom-left and bottom-right corners.
///
/// For a segment both exist: the endpoint with smaller `(x, y)` is the
/// bottom-left one; the bottom-right one is the right endpoint of a
/// horizontal segment and the lower endpoint of a vertical one.
pub(crate) fn corner_points(s: &PointSet, r: &Rect) -> (Option<usize>, Option<usize>) {
    let key = |p: &ColoredPoint| (p.x.clone(), p.y.clone());
    let (lo, hi) = if key(&s[r.a]) <= key(&s[r.b]) {
        (r.a, r.b)
    } else {
        (r.b, r.a)
    };
    if r.is_segment() {
        let br = if s[lo].x == s[hi].x { lo } else { hi };
        return (Some(lo), Some(br));
    }
    // `lo` has the smaller x. Rising diagonal: lo is bottom-left.
    if s[lo].y < s[hi].y {
        (Some(lo), None)
    } else {
        (None, Some(hi))
    }
}

/// `R1`: blue rects with a point at the bottom-left corner and red rects
/// with a point at the bottom-right corner. `R2`: the mirror image.
/// Segments land in both.
pub fn split_families_mono<'a>(f: &RectFamily<'a>) -> (RectFamily<'a>, RectFamily<'a>) {
    let (mut r1, mut r2) = (Vec::new(), Vec::new());
    for r in &f.rects {
        let (bl, br) = corner_points(f.base, r);
        let color = f.base[r.a].color;
        let (first, second) = match color {
            Color::Blue => (bl.is_some(), br.is_some()),
            Color::Red => (br.is_some(), bl.is_some()),
        };
        if first {
            r1.push(r.clone());
        }
        if second {
            r2.push(r.clone());
        }
    }
    let o1 = Orientation {
        blue: Diagonal::Rising,
        red: Diagonal::Falling,
    };
    let o2 = Orientation {
        blue: Diagonal::Falling,
        red: Diagonal::Rising,
    };
    (
        RectFamily::trusted(f.base, r1).with_orientation(o1),
        RectFamily::trusted(f.base, r2).with_orientation(o2),
    )
}

/// The four bichromatic families, by the color of the point at the
/// bottom-left (F1 blue, F2 red) or bottom-right (F3 blue, F4 red) corner.
pub fn split_families_bi<'a>(f: &RectFamily<'a>) -> [RectFamily<'a>; 4] {
    let mut fam: [Vec<Rect>; 4] = Default::default();
    for r in &f.rects {
        let (bl, br) = corner_points(f.base, r);
        if let Some(p) = bl {
            fam[if f.base[p].color == Color::Blue { 0 } else { 1 }].push(r.clone());
        }
        if let Some(p) = br {
            fam[if f.base[p].color == Color::Blue { 2 } else { 3 }].push(r.clone());
        }
    }
    let mut k = 0;
    fam.map(|rects| {
        let d = if k < 2 {
            Diagonal::Rising
        } else {
            Diagonal::Falling
        };
        k += 1;
        RectFamily::trusted(f.base, rects).with_orientation(Orientation { blue: d, red: d })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{candidate_bichromatic, candidate_monochromatic, Color::*};

    fn mono(pts: &[(i64, i64, Color)]) -> (usize, usize) {
        let s = PointSet::from_ints(pts).unwrap();
        let f = RectFamily::new(&s, candidate_monochromatic(&s)).unwrap();
        let (a, b) = split_families_mono(&f);
        (a.len(), b.len())
    }

    fn bi(pts: &[(i64, i64, Color)]) -> [usize; 4] {
        let s = PointSet::from_ints(pts).unwrap();
        let f = RectFamily::new(&s, candidate_bichromatic(&s)).unwrap();
        split_families_bi(&f).map(|g| g.len())
    }

    #[test]
    fn mono_examples() {
        assert_eq!(mono(&[(0, 0, Blue), (1, 1, Blue)]), (1, 0));
        assert_eq!(mono(&[(0, 1, Red), (1, 0, Red)]), (1, 0));
        assert_eq!(mono(&[(0, 0, Blue), (3, 0, Blue)]), (1, 1));
        assert_eq!(mono(&[(0, 1, Blue), (1, 0, Blue)]), (0, 1));
    }

    #[test]
    fn bi_examples() {
        assert_eq!(bi(&[(0, 0, Blue), (1, 1, Red)]), [1, 0, 0, 0]);
        assert_eq!(bi(&[(0, 1, Red), (1, 0, Blue)]), [0, 0, 1, 0]);
        let v = bi(&[(0, 0, Red), (0, 3, Blue)]);
        assert_eq!(v, [0, 1, 0, 1]);
        assert_eq!(bi(&[(0, 0, Red), (3, 0, Blue)]), [0, 1, 1, 0]);
    }
}
