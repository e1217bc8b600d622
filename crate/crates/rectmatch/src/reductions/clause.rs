use super::formula::Side;
use crate::error::{Error, Result};

/// Where a clause leg attaches: a boundary point of a variable gadget, its
/// number in that gadget, and the sign of the literal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LegAnchor {
    pub point: (i64, i64),
    pub number: usize,
    pub negated: bool,
}

/// The blue points of a clause comb and its matchable pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClauseGadget {
    pub points: Vec<(i64, i64)>,
    /// Zero-based local indices.
    pub segments: Vec<(usize, usize)>,
}

/// Vertical clearance a comb needs above its anchors, per nesting level.
pub const LEVEL_HEIGHT: i64 = 6;

/// Lane heights above the comb base for the three legs, left and right.
const LANES: [(i64, i64); 3] = [(2, 1), (1, 2), (2, 3)];

/// A three-legged comb over the anchors, on the given side, high enough to
/// clear `level` combs nested below it.
///
/// Each leg is a width-2 box overlapping the variable by one unit, with
/// points `L M R` on its inner side and two lanes rising from `L` and `R`.
/// If the anchor is matched to its left neighbour, the matching segment
/// cuts the left lane, so `L–M` and `R–TR` are forced and `TL` must be
/// matched in the comb; otherwise `TR` is left over. The lane tops and the
/// three points on the spine (`Ec Ea Eb`) admit a perfect matching exactly
/// when one leg leaves its `TL` over, which is the 1-in-3 condition once
/// anchors are placed so that "matched to the left" means "literal true":
/// the anchor's number is even iff the literal is positive.
///
/// Below the line the comb is the same picture turned by 180°.
pub fn clause_gadget(anchors: &[LegAnchor; 3], side: Side, level: usize) -> Result<ClauseGadget> {
    let flip = if side == Side::Above { 1 } else { -1 };
    let frame: Vec<(i64, i64)> = anchors
        .iter()
        .map(|a| (flip * a.point.0, flip * a.point.1))
        .collect();
    for a in anchors {
        if (a.number % 2 == 0) == a.negated {
            let sign = if a.negated { "negative" } else { "positive" };
            return Err(Error::Argument(format!(
                "anchor numbered {} cannot carry a {sign} literal: positive literals attach to even numbers",
                a.number
            )));
        }
    }
    let y = frame[0].1;
    if frame.iter().any(|p| p.1 != y) {
        return Err(Error::Argument(
            "clause anchors must lie on one side of the variable line".into(),
        ));
    }
    let t = [frame[0].0, frame[1].0, frame[2].0];
    if t[1] - t[0] < 6 || t[2] - t[1] < 4 {
        return Err(Error::Argument(format!(
            "clause anchors {t:?} are too close or out of order"
        )));
    }

    let base = y + 1 + LEVEL_HEIGHT * level as i64;
    let mut pts = Vec::with_capacity(18);
    for (k, &tk) in t.iter().enumerate() {
        let (hl, hr) = LANES[k];
        pts.extend([
            (tk - 1, y - 1),
            (tk, y - 1),
            (tk + 1, y - 1),
            (tk - 1, base + hl),
            (tk + 1, base + hr),
        ]);
    }
    pts.extend([
        (t[0] + 1, base + 5),
        (t[0] + 3, base + 5),
        (t[2] + 1, base + 5),
    ]);
    let (l, m, r, tl, tr) = (
        |k: usize| 5 * k,
        |k: usize| 5 * k + 1,
        |k: usize| 5 * k + 2,
        |k: usize| 5 * k + 3,
        |k: usize| 5 * k + 4,
    );
    let (ec, ea, eb) = (15, 16, 17);
    let mut segments = Vec::new();
    for k in 0..3 {
        segments.extend([(l(k), m(k)), (m(k), r(k)), (l(k), tl(k)), (r(k), tr(k))]);
    }
    segments.extend([
        (tr(0), tl(1)),
        (tl(0), tr(1)),
        (tr(1), tl(2)),
        (tr(0), ec),
        (tr(2), eb),
        (ec, ea),
        (ea, eb),
    ]);
    let points = pts.into_iter().map(|(x, y)| (flip * x, flip * y)).collect();
    Ok(ClauseGadget { points, segments })
}
