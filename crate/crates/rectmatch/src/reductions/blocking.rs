use crate::error::{Error, Result};
use crate::geometry::{Color, ColoredPoint, Coord, PointSet};

/// The four corners of the blocking cluster.
pub const M1: [(i64, i64); 4] = [(0, 0), (5, 0), (5, 5), (0, 5)];
/// Its eight inner points.
pub const M2: [(i64, i64); 8] = [
    (1, 3),
    (2, 2),
    (2, 3),
    (2, 4),
    (3, 1),
    (3, 2),
    (3, 3),
    (4, 2),
];

/// `M1 ∪ M2` scaled by `scale` and moved to `origin`, all in one color.
/// The cluster has a perfect strong matching, but loses it as soon as any
/// of the corners is taken away, so a cluster acts as a single blocking
/// point in a perfect matching.
pub fn blocking_gadget(origin: (Coord, Coord), scale: Coord, color: Color) -> Result<PointSet> {
    if !scale.is_positive() {
        return Err(Error::Argument(format!("scale {scale} must be positive")));
    }
    let pts = M1
        .iter()
        .chain(&M2)
        .map(|&(x, y)| ColoredPoint::new(&scale * x + &origin.0, &scale * y + &origin.1, color))
        .collect();
    PointSet::new(pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchers::{decide_perfect, Mode};
    use crate::testutil::perfect_matchings;

    #[test]
    fn cluster_coordinates() {
        let g = blocking_gadget((Coord::zero(), Coord::zero()), Coord::one(), Color::Blue).unwrap();
        let want: Vec<_> = M1
            .iter()
            .chain(&M2)
            .map(|&(x, y)| ColoredPoint::blue(x, y))
            .collect();
        assert_eq!(g.points(), &want[..]);
        assert!(
            blocking_gadget((Coord::zero(), Coord::zero()), Coord::zero(), Color::Red).is_err()
        );
    }

    #[test]
    fn perfect_only_with_all_corners() {
        let origin = (Coord::ratio(7, 3).unwrap(), Coord::int(-4));
        let g = blocking_gadget(origin, Coord::ratio(1, 9).unwrap(), Color::Red).unwrap();
        assert!(decide_perfect(&g, Mode::Mono).unwrap());
        assert!(!perfect_matchings(&g, Mode::Mono).is_empty());
        for mask in 1u32..16 {
            let kept: Vec<_> = (0..12)
                .filter(|&i| i >= 4 || mask >> i & 1 == 0)
                .map(|i| g[i].clone())
                .collect();
            let s = PointSet::new(kept).unwrap();
            assert!(
                !decide_perfect(&s, Mode::Mono).unwrap(),
                "corners {mask:04b} removed"
            );
            assert!(perfect_matchings(&s, Mode::Mono).is_empty());
        }
    }
}
