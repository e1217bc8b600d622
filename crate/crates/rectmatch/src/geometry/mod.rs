//! Exact points, rectangles, the intersection taxonomy and candidate
//! families.

mod candidates;
mod coord;
mod perturb;
mod point;
mod rect;

pub use candidates::{candidate_bichromatic, candidate_monochromatic, empty_pairs};
pub use coord::Coord;
pub use perturb::perturb;
pub use point::{is_general_position, Color, ColoredPoint, PointSet, Ranks, SiteIndex};
pub use rect::{
    classify_intersection, contains_point, pierces, rect_from_pair, ColorClass, IntersectionKind,
    Rect, RectKind,
};

pub(crate) use candidates::empty_pairs_ranked;
pub(crate) use rect::{classify_bx, rect_unchecked, Bx};
