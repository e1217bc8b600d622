use num_bigint::BigInt;

use super::{is_general_position, ColoredPoint, Coord, PointSet};
use crate::error::{Error, Result};

/// Push an integer grid instance into general position:
/// `λ(x, y) = (x + (x+y)/(2N+1), y + (x+y)/(2N+1))`.
///
/// Requires integer coordinates in `[0, N]`. The map is injective, keeps
/// every strict order between coordinates, and breaks ties in x by y and in
/// y by x, so the output is in general position. What survives: emptiness
/// of every axis-parallel pair, and points in the open interior of a box
/// stay there. A point on the boundary of a box may end up on either side,
/// so a box blocked only by boundary points can become empty — e.g.
/// `(0,1)`, `(1,0)` around the corner `(0,0)`.
pub fn perturb(s: &PointSet, n: u64) -> Result<PointSet> {
    let big_n = BigInt::from(n);
    let den = Coord::int(2 * n as i64 + 1);
    let mut out = Vec::with_capacity(s.len());
    for (i, p) in s.iter().enumerate() {
        for c in [&p.x, &p.y] {
            if !c.is_integer() || c.numer() < &BigInt::from(0) || c.numer() > &big_n {
                return Err(Error::Argument(format!(
                    "point {i}: coordinate {c} is not an integer in [0, {n}]"
                )));
            }
        }
        let shift = (&p.x + &p.y) / &den;
        out.push(ColoredPoint {
            x: &p.x + &shift,
            y: &p.y + &shift,
            color: p.color,
        });
    }
    let out = PointSet::new(out)?;
    debug_assert!(is_general_position(&out));
    Ok(out)
}
