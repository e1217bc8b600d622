use std::collections::HashSet;

use super::GadgetInstance;
use crate::error::{Error, Result};
use crate::geometry::{Color, ColoredPoint, Coord, PointSet};

/// Integer coordinates of every point, or an argument error.
pub(crate) fn integer_points(s: &PointSet) -> Result<Vec<(i64, i64)>> {
    s.iter()
        .map(|p| match (p.x.to_i64(), p.y.to_i64()) {
            (Some(x), Some(y)) => Ok((x, y)),
            _ => Err(Error::Argument(format!(
                "point ({}, {}) is not on the integer grid",
                p.x, p.y
            ))),
        })
        .collect()
}

/// Surround the gadget's points (taken as blue) with red points so that
/// two blue points span an empty rectangle exactly when they form an
/// allowed segment.
///
/// Coordinates are doubled, a red point goes on every lattice point of the
/// blue bounding box with an odd coordinate that is not on an allowed
/// segment, everything is doubled again and every red point gets a twin
/// one unit below it. The twins pair up into unit vertical segments,
/// which is a perfect matching of the reds that touches no allowed
/// segment. Blue points come first in the output, in their input order;
/// the result is translated to non-negative coordinates.
pub fn red_fill(g: &GadgetInstance) -> Result<PointSet> {
    let blues = integer_points(&g.points)?;
    if blues.is_empty() {
        return PointSet::new(Vec::new());
    }
    let doubled: Vec<(i64, i64)> = blues.iter().map(|&(x, y)| (2 * x, 2 * y)).collect();
    let mut on_segment = HashSet::new();
    for &(a, b) in &g.allowed_segments {
        let (p, q) = (doubled[a], doubled[b]);
        if p.0 != q.0 && p.1 != q.1 {
            return Err(Error::Argument(format!(
                "allowed pair ({a}, {b}) is not axis-aligned"
            )));
        }
        let (dx, dy) = ((q.0 - p.0).signum(), (q.1 - p.1).signum());
        let mut c = p;
        while c != q {
            on_segment.insert(c);
            c = (c.0 + dx, c.1 + dy);
        }
        on_segment.insert(q);
    }
    let (x0, x1) = (
        doubled.iter().map(|p| p.0).min().unwrap(),
        doubled.iter().map(|p| p.0).max().unwrap(),
    );
    let (y0, y1) = (
        doubled.iter().map(|p| p.1).min().unwrap(),
        doubled.iter().map(|p| p.1).max().unwrap(),
    );
    let mut pts: Vec<(i64, i64, Color)> = doubled
        .iter()
        .map(|&(x, y)| (2 * x, 2 * y, Color::Blue))
        .collect();
    for y in y0..=y1 {
        for x in x0..=x1 {
            if (x % 2 != 0 || y % 2 != 0) && !on_segment.contains(&(x, y)) {
                pts.push((2 * x, 2 * y, Color::Red));
                pts.push((2 * x, 2 * y - 1, Color::Red));
            }
        }
    }
    let (mx, my) = (
        pts.iter().map(|p| p.0).min().unwrap(),
        pts.iter().map(|p| p.1).min().unwrap(),
    );
    PointSet::new(
        pts.into_iter()
            .map(|(x, y, c)| ColoredPoint::new(Coord::int(x - mx), Coord::int(y - my), c))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{candidate_monochromatic, empty_pairs};
    use crate::matchers::{decide_perfect_guarded, verify_matching, Matching, Mode};

    fn instance(blues: &[(i64, i64)], allowed: &[(usize, usize)]) -> GadgetInstance {
        GadgetInstance {
            points: PointSet::from_ints(
                &blues
                    .iter()
                    .map(|&(x, y)| (x, y, Color::Blue))
                    .collect::<Vec<_>>(),
            )
            .unwrap(),
            allowed_segments: allowed.to_vec(),
            provenance: String::new(),
            grid_bound: 0,
            variables: Vec::new(),
        }
    }

    fn blue_candidates(s: &PointSet) -> Vec<(usize, usize)> {
        candidate_monochromatic(s)
            .iter()
            .filter(|r| s[r.a].color == Color::Blue)
            .map(|r| r.pair())
            .collect()
    }

    #[test]
    fn allowed_pair_is_the_only_blue_candidate() {
        let s = red_fill(&instance(&[(0, 0), (2, 0), (0, 2), (2, 2)], &[(0, 1)])).unwrap();
        assert_eq!(blue_candidates(&s), vec![(0, 1)]);
        assert_eq!(
            (s[0].color, s[3].color, s[4].color),
            (Color::Blue, Color::Blue, Color::Red)
        );
        assert!(s
            .iter()
            .all(|p| p.x >= Coord::zero() && p.y >= Coord::zero()));
    }

    #[test]
    fn non_allowed_pairs_are_blocked() {
        let blues = [(0, 0), (2, 0), (4, 2), (0, 4), (4, 4), (2, 4)];
        let allowed = [(0, 1), (3, 5), (5, 4)];
        let s = red_fill(&instance(&blues, &allowed)).unwrap();
        assert_eq!(blue_candidates(&s), vec![(0, 1), (3, 5), (4, 5)]);
    }

    #[test]
    fn reds_match_with_twins() {
        let s = red_fill(&instance(&[(0, 0), (2, 0), (0, 2)], &[(0, 1)])).unwrap();
        let nb = 3;
        let twins = Matching::new((nb..s.len()).step_by(2).map(|i| (i, i + 1)), Mode::Mono);
        assert!(verify_matching(&s, &twins).is_strong_matching());
        let reds = PointSet::new(s.points()[nb..].to_vec()).unwrap();
        assert!(decide_perfect_guarded(&reds, Mode::Mono, usize::MAX).unwrap());
        // The twin segments are candidates of the whole set.
        let pairs = empty_pairs(&s);
        assert!(twins.pairs.iter().all(|p| pairs.contains(p)));
    }

    #[test]
    fn errors() {
        let mut g = instance(&[(0, 0), (2, 2)], &[(0, 1)]);
        assert!(red_fill(&g).is_err());
        g.allowed_segments.clear();
        g.points = PointSet::new(vec![ColoredPoint::new(
            Coord::ratio(1, 2).unwrap(),
            0,
            Color::Blue,
        )])
        .unwrap();
        assert!(red_fill(&g).is_err());
    }
}
