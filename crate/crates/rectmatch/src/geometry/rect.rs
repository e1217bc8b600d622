use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Color, ColoredPoint, Coord, PointSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum RectKind {
    Segment,
    Box,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum ColorClass {
    RedRed,
    BlueBlue,
    Mixed,
}

impl ColorClass {
    pub fn of(a: Color, b: Color) -> Self {
        match (a, b) {
            (Color::Red, Color::Red) => ColorClass::RedRed,
            (Color::Blue, Color::Blue) => ColorClass::BlueBlue,
            _ => ColorClass::Mixed,
        }
    }
}

/// `D(a, b)`: the closed bounding box of two points of a [`PointSet`].
///
/// `a < b` always; the pair `(a, b)` is the rectangle's identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rect {
    pub a: usize,
    pub b: usize,
    pub xmin: Coord,
    pub xmax: Coord,
    pub ymin: Coord,
    pub ymax: Coord,
    pub kind: RectKind,
    pub color_class: ColorClass,
}

impl Rect {
    pub fn pair(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn is_segment(&self) -> bool {
        self.kind == RectKind::Segment
    }

    pub(crate) fn bx(&self) -> Bx<&Coord> {
        Bx {
            x0: &self.xmin,
            x1: &self.xmax,
            y0: &self.ymin,
            y1: &self.ymax,
        }
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "D({},{})=[{},{}]x[{},{}]",
            self.a, self.b, self.xmin, self.xmax, self.ymin, self.ymax
        )
    }
}

/// Build `D(p_i, p_j)`.
pub fn rect_from_pair(s: &PointSet, i: usize, j: usize) -> Result<Rect> {
    if i == j {
        return Err(Error::Argument(format!(
            "rectangle needs two distinct points, got {i} twice"
        )));
    }
    if i >= s.len() || j >= s.len() {
        return Err(Error::Argument(format!(
            "point index out of range: ({i}, {j}) with {} points",
            s.len()
        )));
    }
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    Ok(rect_unchecked(s, a, b))
}

pub(crate) fn rect_unchecked(s: &PointSet, a: usize, b: usize) -> Rect {
    let (p, q) = (&s[a], &s[b]);
    let (xmin, xmax) = if p.x <= q.x {
        (&p.x, &q.x)
    } else {
        (&q.x, &p.x)
    };
    let (ymin, ymax) = if p.y <= q.y {
        (&p.y, &q.y)
    } else {
        (&q.y, &p.y)
    };
    let kind = if xmin == xmax || ymin == ymax {
        RectKind::Segment
    } else {
        RectKind::Box
    };
    Rect {
        a,
        b,
        xmin: xmin.clone(),
        xmax: xmax.clone(),
        ymin: ymin.clone(),
        ymax: ymax.clone(),
        kind,
        color_class: ColorClass::of(p.color, q.color),
    }
}

/// Closed containment, boundary inclusive.
pub fn contains_point(r: &Rect, p: &ColoredPoint) -> bool {
    r.xmin <= p.x && p.x <= r.xmax && r.ymin <= p.y && p.y <= r.ymax
}

/// True iff `r2` pierces `r1`: the x-projection of `r1` contains that of
/// `r2` and the y-projection of `r2` contains that of `r1`.
pub fn pierces(r1: &Rect, r2: &Rect) -> bool {
    r1.bx().pierced_by(&r2.bx())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IntersectionKind {
    Disjoint,
    Piercing,
    Corner,
    Point,
    Side,
}

impl fmt::Display for IntersectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IntersectionKind::Disjoint => "DISJOINT",
            IntersectionKind::Piercing => "PIERCING",
            IntersectionKind::Corner => "CORNER",
            IntersectionKind::Point => "POINT",
            IntersectionKind::Side => "SIDE",
        })
    }
}

/// Classify how two rectangles over `s` meet. Priority when several
/// descriptions apply: Point, Piercing, Corner, Side.
pub fn classify_intersection(s: &PointSet, r1: &Rect, r2: &Rect) -> IntersectionKind {
    let defining = [r1.a, r1.b, r2.a, r2.b];
    classify_bx(&r1.bx(), &r2.bx(), |x, y| {
        defining.iter().any(|&i| &s[i].x == x && &s[i].y == y) || s.contains_site(x, y)
    })
}

/// Axis-aligned closed box over any totally ordered coordinate type. Used
/// with `&Coord` for the public API and with integer ranks internally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bx<T> {
    pub x0: T,
    pub x1: T,
    pub y0: T,
    pub y1: T,
}

impl<T: Ord + Copy> Bx<T> {
    pub fn meets(&self, o: &Bx<T>) -> bool {
        !(self.x1 < o.x0 || o.x1 < self.x0 || self.y1 < o.y0 || o.y1 < self.y0)
    }

    /// `o` pierces `self`.
    pub fn pierced_by(&self, o: &Bx<T>) -> bool {
        self.x0 <= o.x0 && o.x1 <= self.x1 && o.y0 <= self.y0 && self.y1 <= o.y1
    }

    fn strictly_inside(&self, x: T, y: T) -> bool {
        self.x0 < x && x < self.x1 && self.y0 < y && y < self.y1
    }

    fn corners(&self) -> [(T, T); 4] {
        [
            (self.x0, self.y0),
            (self.x0, self.y1),
            (self.x1, self.y0),
            (self.x1, self.y1),
        ]
    }

    /// Distinct corners of `o` strictly inside `self`.
    fn inner_corners(&self, o: &Bx<T>) -> Vec<(T, T)> {
        let mut v: Vec<(T, T)> = o
            .corners()
            .into_iter()
            .filter(|&(x, y)| self.strictly_inside(x, y))
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

pub(crate) fn classify_bx<T: Ord + Copy>(
    r: &Bx<T>,
    s: &Bx<T>,
    is_site: impl Fn(T, T) -> bool,
) -> IntersectionKind {
    if !r.meets(s) {
        return IntersectionKind::Disjoint;
    }
    let (ix0, ix1) = (r.x0.max(s.x0), r.x1.min(s.x1));
    let (iy0, iy1) = (r.y0.max(s.y0), r.y1.min(s.y1));
    if ix0 == ix1 && iy0 == iy1 && is_site(ix0, iy0) {
        return IntersectionKind::Point;
    }
    if r.pierced_by(s) || s.pierced_by(r) {
        return IntersectionKind::Piercing;
    }
    let (in_r, in_s) = (r.inner_corners(s), s.inner_corners(r));
    if in_r.len() == 1
        && in_s.len() == 1
        && !is_site(in_r[0].0, in_r[0].1)
        && !is_site(in_s[0].0, in_s[0].1)
    {
        return IntersectionKind::Corner;
    }
    IntersectionKind::Side
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Color::*;

    fn bx(x0: i64, x1: i64, y0: i64, y1: i64) -> Bx<i64> {
        Bx { x0, x1, y0, y1 }
    }

    fn none(_: i64, _: i64) -> bool {
        false
    }

    #[test]
    fn rect_from_pair_examples() {
        let s = PointSet::from_ints(&[
            (0, 0, Red),
            (5, 5, Red),
            (3, 0, Blue),
            (5, 0, Blue),
            (0, 5, Red),
        ])
        .unwrap();
        let r = rect_from_pair(&s, 0, 1).unwrap();
        assert_eq!(
            (
                r.xmin.to_i64(),
                r.xmax.to_i64(),
                r.ymin.to_i64(),
                r.ymax.to_i64()
            ),
            (Some(0), Some(5), Some(0), Some(5))
        );
        assert_eq!(r.kind, RectKind::Box);
        assert_eq!(r.color_class, ColorClass::RedRed);
        let seg = rect_from_pair(&s, 2, 0).unwrap();
        assert_eq!(seg.kind, RectKind::Segment);
        assert_eq!(seg.pair(), (0, 2));
        assert_eq!(seg.color_class, ColorClass::Mixed);
        let diag = rect_from_pair(&s, 3, 4).unwrap();
        assert_eq!(diag.bx(), r.bx());
        assert!(rect_from_pair(&s, 1, 1).is_err());
        assert!(rect_from_pair(&s, 1, 9).is_err());
    }

    #[test]
    fn containment_is_closed() {
        let s = PointSet::from_ints(&[(0, 0, Red), (5, 5, Red), (3, 0, Red)]).unwrap();
        let r = rect_from_pair(&s, 0, 1).unwrap();
        assert!(contains_point(&r, &ColoredPoint::red(5, 3)));
        assert!(!contains_point(&r, &ColoredPoint::red(6, 3)));
        let seg = rect_from_pair(&s, 0, 2).unwrap();
        assert!(contains_point(&seg, &ColoredPoint::blue(2, 0)));
    }

    #[test]
    fn piercing_is_directional() {
        let (r1, r2) = (bx(0, 4, 0, 2), bx(1, 3, -1, 3));
        assert!(r1.pierced_by(&r2));
        assert!(!r2.pierced_by(&r1));
        assert!(!r1.pierced_by(&bx(5, 6, 0, 2)));
        assert!(r1.pierced_by(&r1));
    }

    #[test]
    fn classification_examples() {
        use IntersectionKind::*;
        assert_eq!(
            classify_bx(&bx(0, 4, 0, 2), &bx(1, 3, -1, 3), none),
            Piercing
        );
        assert_eq!(
            classify_bx(&bx(0, 2, 0, 2), &bx(2, 4, 2, 4), |x, y| (x, y) == (2, 2)),
            Point
        );
        assert_eq!(classify_bx(&bx(0, 3, 1, 4), &bx(2, 5, 0, 3), none), Corner);
        assert_eq!(
            classify_bx(&bx(0, 1, 0, 1), &bx(2, 3, 0, 1), none),
            Disjoint
        );
        // touching corners away from the point set
        assert_eq!(classify_bx(&bx(0, 2, 0, 2), &bx(-2, 0, 2, 4), none), Side);
        // overlapping side by side
        assert_eq!(classify_bx(&bx(0, 2, 0, 2), &bx(1, 3, 1, 2), none), Side);
        // the corner that would make it a Corner is a site
        assert_eq!(
            classify_bx(&bx(0, 3, 1, 4), &bx(2, 5, 0, 3), |x, y| (x, y) == (2, 3)),
            Side
        );
    }

    #[test]
    fn classify_on_point_sets() {
        let s = PointSet::from_ints(&[(0, 0, Red), (2, 2, Red), (4, 4, Red)]).unwrap();
        let a = rect_from_pair(&s, 0, 1).unwrap();
        let b = rect_from_pair(&s, 1, 2).unwrap();
        assert_eq!(classify_intersection(&s, &a, &b), IntersectionKind::Point);
        assert_eq!(classify_intersection(&s, &b, &a), IntersectionKind::Point);
    }
}
