use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::{contains_point, Bx, Color, PointSet, Ranks, Rect};

/// Which diagonal of its box a rect's two defining points occupy.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Diagonal {
    /// Bottom-left and top-right.
    Rising,
    /// Top-left and bottom-right.
    Falling,
}

impl Diagonal {
    pub fn flip(self) -> Diagonal {
        match self {
            Diagonal::Rising => Diagonal::Falling,
            Diagonal::Falling => Diagonal::Rising,
        }
    }
}

/// The diagonal shared by all rects of each color in a family. Segments
/// lie on both diagonals, so for them this is what decides how ties are
/// broken.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Orientation {
    pub blue: Diagonal,
    pub red: Diagonal,
}

impl Orientation {
    pub fn of(&self, c: Color) -> Diagonal {
        match c {
            Color::Blue => self.blue,
            Color::Red => self.red,
        }
    }
}

/// A set of rectangles over a point set.
#[derive(Clone, Debug)]
pub struct RectFamily<'a> {
    pub base: &'a PointSet,
    pub rects: Vec<Rect>,
    /// Set by the family splits; see [`Orientation`].
    pub orientation: Option<Orientation>,
}

impl<'a> RectFamily<'a> {
    /// Checks that every rect is spanned by two points of `base` and
    /// contains no third one.
    pub fn new(base: &'a PointSet, rects: Vec<Rect>) -> Result<Self> {
        for r in &rects {
            if r.a >= base.len() || r.b >= base.len() {
                return Err(Error::Argument(format!(
                    "{r}: defining point outside the base set"
                )));
            }
            if let Some(k) =
                (0..base.len()).find(|&k| k != r.a && k != r.b && contains_point(r, &base[k]))
            {
                return Err(Error::Argument(format!(
                    "{r} is not empty: it contains point {k}"
                )));
            }
        }
        Ok(RectFamily {
            base,
            rects,
            orientation: None,
        })
    }

    /// For rects already known to be candidates.
    pub(crate) fn trusted(base: &'a PointSet, rects: Vec<Rect>) -> Self {
        RectFamily {
            base,
            rects,
            orientation: None,
        }
    }

    pub fn with_orientation(mut self, o: Orientation) -> Self {
        self.orientation = Some(o);
        self
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rects.iter().map(Rect::pair).collect()
    }

    /// Sub-family keeping the given member indices, in order.
    pub fn subfamily(&self, members: &[usize]) -> RectFamily<'a> {
        RectFamily {
            base: self.base,
            rects: members.iter().map(|&i| self.rects[i].clone()).collect(),
            orientation: self.orientation,
        }
    }

    /// Rect boxes in rank space together with the set of occupied rank sites.
    pub(crate) fn ranked(&self) -> (Vec<Bx<u32>>, HashSet<(u32, u32)>) {
        let r = Ranks::new(self.base);
        let boxes = self
            .rects
            .iter()
            .map(|rc| Bx {
                x0: r.xr[rc.a].min(r.xr[rc.b]),
                x1: r.xr[rc.a].max(r.xr[rc.b]),
                y0: r.yr[rc.a].min(r.yr[rc.b]),
                y1: r.yr[rc.a].max(r.yr[rc.b]),
            })
            .collect();
        let sites = (0..r.len()).map(|i| (r.xr[i], r.yr[i])).collect();
        (boxes, sites)
    }
}

/// Member indices into a family, plus the size certificate produced by the
/// algorithm that found them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndependentSet {
    pub members: Vec<usize>,
    pub certificate_size: usize,
}

impl IndependentSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}
