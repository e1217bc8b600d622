use crate::error::{Error, Result};

/// Height of a variable gadget.
pub const VARIABLE_HEIGHT: i64 = 4;

/// Boundary points of a variable gadget, in numbering order, and the pairs
/// of consecutive points that may be matched.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VariableGadget {
    pub points: Vec<(i64, i64)>,
    /// Zero-based local indices.
    pub segments: Vec<(usize, usize)>,
}

/// The `4 + 6d` points at spacing 2 on the boundary of the `6d × 4`
/// rectangle with bottom-left corner `origin`, numbered clockwise from the
/// top-left corner. The only perfect matchings along the boundary are the
/// 1-matching and the 0-matching (see
/// [`variable_matching`](super::variable_matching)).
pub fn variable_gadget(d: usize, origin: (i64, i64)) -> Result<VariableGadget> {
    if d == 0 {
        return Err(Error::Argument("variable degree must be at least 1".into()));
    }
    let w = 6 * d as i64;
    let (x0, y0) = origin;
    let mut pts = Vec::with_capacity(4 + 6 * d);
    pts.extend((0..=w).step_by(2).map(|x| (x0 + x, y0 + VARIABLE_HEIGHT)));
    pts.push((x0 + w, y0 + VARIABLE_HEIGHT / 2));
    pts.extend((0..=w).rev().step_by(2).map(|x| (x0 + x, y0)));
    pts.push((x0, y0 + VARIABLE_HEIGHT / 2));
    let n = pts.len();
    let segments = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(VariableGadget {
        points: pts,
        segments,
    })
}

/// The number of the boundary point at horizontal offset `offset` (even)
/// on the top or bottom side of a degree-`d` gadget.
pub(crate) fn boundary_number(d: usize, offset: i64, top: bool) -> usize {
    let half = (offset / 2) as usize;
    if top {
        half + 1
    } else {
        6 * d + 3 - half
    }
}
