use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Coord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredPoint {
    pub x: Coord,
    pub y: Coord,
    pub color: Color,
}

impl ColoredPoint {
    pub fn new(x: impl Into<Coord>, y: impl Into<Coord>, color: Color) -> Self {
        ColoredPoint {
            x: x.into(),
            y: y.into(),
            color,
        }
    }

    pub fn red(x: i64, y: i64) -> Self {
        Self::new(x, y, Color::Red)
    }

    pub fn blue(x: i64, y: i64) -> Self {
        Self::new(x, y, Color::Blue)
    }
}

impl fmt::Display for ColoredPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.x, self.y, self.color.letter())
    }
}

/// An ordered list of distinct colored points. Indices are identities:
/// rectangles and matchings refer to points by position.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PointSet {
    points: Vec<ColoredPoint>,
}

impl PointSet {
    /// Rejects coincident points.
    pub fn new(points: Vec<ColoredPoint>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if !seen.insert((&p.x, &p.y)) {
                return Err(Error::Argument(format!(
                    "point {i} at ({}, {}) coincides with an earlier point",
                    p.x, p.y
                )));
            }
        }
        Ok(PointSet { points })
    }

    /// Convenience for tests and examples: integer points.
    pub fn from_ints(pts: &[(i64, i64, Color)]) -> Result<Self> {
        Self::new(
            pts.iter()
                .map(|&(x, y, c)| ColoredPoint::new(x, y, c))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ColoredPoint] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ColoredPoint> {
        self.points.iter()
    }

    pub fn into_points(self) -> Vec<ColoredPoint> {
        self.points
    }

    pub fn count(&self, c: Color) -> usize {
        self.points.iter().filter(|p| p.color == c).count()
    }

    /// Linear scan; see [`SiteIndex`] for repeated lookups.
    pub fn contains_site(&self, x: &Coord, y: &Coord) -> bool {
        self.points.iter().any(|p| &p.x == x && &p.y == y)
    }

    /// Serialize to the point file format: one `x y C` line per point.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for p in &self.points {
            s.push_str(&p.to_string());
            s.push('\n');
        }
        s
    }

    /// Parse the point file format. Blank lines and lines starting with `#`
    /// are skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut pts = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: no + 1, msg };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(err(format!("expected `x y color`, got {line:?}")));
            }
            let x = fields[0].parse::<Coord>().map_err(|e| err(e.to_string()))?;
            let y = fields[1].parse::<Coord>().map_err(|e| err(e.to_string()))?;
            let color = match fields[2] {
                "R" => Color::Red,
                "B" => Color::Blue,
                other => return Err(err(format!("color must be R or B, got {other:?}"))),
            };
            pts.push(ColoredPoint { x, y, color });
        }
        PointSet::new(pts).map_err(|e| match e {
            Error::Argument(m) => Error::Parse { line: 0, msg: m },
            e => e,
        })
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a ColoredPoint;
    type IntoIter = std::slice::Iter<'a, ColoredPoint>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

impl std::ops::Index<usize> for PointSet {
    type Output = ColoredPoint;
    fn index(&self, i: usize) -> &ColoredPoint {
        &self.points[i]
    }
}

/// True iff no two points share an x or a y coordinate.
pub fn is_general_position(s: &PointSet) -> bool {
    let mut xs = HashSet::with_capacity(s.len());
    let mut ys = HashSet::with_capacity(s.len());
    s.iter().all(|p| xs.insert(&p.x) && ys.insert(&p.y))
}

/// Hash lookup of point locations.
#[derive(Debug)]
pub struct SiteIndex<'a> {
    sites: HashSet<(&'a Coord, &'a Coord)>,
}

impl<'a> SiteIndex<'a> {
    pub fn new(s: &'a PointSet) -> Self {
        SiteIndex {
            sites: s.iter().map(|p| (&p.x, &p.y)).collect(),
        }
    }

    pub fn contains(&self, x: &Coord, y: &Coord) -> bool {
        self.sites.contains(&(x, y))
    }
}

/// Order-isomorphic integer coordinates: `xr[i]` is the rank of `x(p_i)`
/// among the distinct x values (ties share a rank), likewise `yr`.
///
/// Every predicate in this crate depends only on comparisons between
/// coordinates, so it can be evaluated on ranks exactly.
#[derive(Clone, Debug)]
pub struct Ranks {
    pub xr: Vec<u32>,
    pub yr: Vec<u32>,
}

impl Ranks {
    pub fn new(s: &PointSet) -> Self {
        fn rank(vals: Vec<&Coord>) -> Vec<u32> {
            let mut order: Vec<usize> = (0..vals.len()).collect();
            order.sort_by(|&a, &b| vals[a].cmp(vals[b]));
            let mut out = vec![0u32; vals.len()];
            let mut r = 0u32;
            for k in 0..order.len() {
                if k > 0 && vals[order[k]] != vals[order[k - 1]] {
                    r += 1;
                }
                out[order[k]] = r;
            }
            out
        }
        Ranks {
            xr: rank(s.iter().map(|p| &p.x).collect()),
            yr: rank(s.iter().map(|p| &p.y).collect()),
        }
    }

    pub fn len(&self) -> usize {
        self.xr.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xr.is_empty()
    }
}
