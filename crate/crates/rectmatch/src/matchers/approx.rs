use super::split::{split_families_bi, split_families_mono};
use super::{Matching, Mode, SolveReport};
use crate::error::Result;
use crate::geometry::{
    candidate_bichromatic, candidate_monochromatic, rect_unchecked, Color, ColoredPoint, Coord,
    IntersectionKind, PointSet, Ranks,
};
use crate::mis::{
    build_graph, corner_elimination, forest_two_color, max_antichain, piercing_order, Diagonal,
    IndependentSet, Orientation, RectFamily,
};

/// The point set in rank coordinates, with ties broken along each point's
/// diagonal in the family: rising points move by `(+εy, +εx)`, falling ones by `(-εy, -εx)`,
/// `ε = 1/(2N+1)` for ranks below `N` (scaled to integers).
///
/// Inside a family the rects of one color all share a diagonal, so two boxes
/// that touch along an edge still touch afterwards and disjoint boxes stay
/// disjoint: the intersection graph is unchanged. What changes is the
/// classification, which now behaves as in general position, where the
/// family structure (piercing is an order, only shared points remain
/// after the antichain) holds.
pub fn tilted_frame(s: &PointSet, o: Orientation) -> PointSet {
    let r = Ranks::new(s);
    let n = r.xr.iter().chain(&r.yr).max().map_or(0, |&m| m as i64 + 1);
    let scale = 2 * n + 1;
    let pts = s
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let (x, y) = (r.xr[i] as i64, r.yr[i] as i64);
            let sign = if o.of(p.color) == Diagonal::Rising {
                1
            } else {
                -1
            };
            ColoredPoint::new(
                Coord::int(x * scale + sign * y),
                Coord::int(y * scale + sign * x),
                p.color,
            )
        })
        .collect();
    PointSet::new(pts).expect("the tilt is injective")
}

fn in_frame<'a>(frame: &'a PointSet, f: &RectFamily<'_>) -> RectFamily<'a> {
    RectFamily::trusted(
        frame,
        f.rects
            .iter()
            .map(|r| rect_unchecked(frame, r.a, r.b))
            .collect(),
    )
}

/// The family's orientation, or a guess from its first proper box. In the
/// monochromatic families the two colors have opposite diagonals, in the
/// bichromatic ones the same. Families of segments only default to blue
/// rising.
fn orientation_of(f: &RectFamily<'_>, opposite: bool) -> Orientation {
    if let Some(o) = f.orientation {
        return o;
    }
    let s = f.base;
    let probe = f.rects.iter().find(|r| !r.is_segment()).map(|r| {
        let (p, q) = (&s[r.a], &s[r.b]);
        let d = if (p.x < q.x) == (p.y < q.y) {
            Diagonal::Rising
        } else {
            Diagonal::Falling
        };
        (p.color, d)
    });
    let (color, d) = probe.unwrap_or((Color::Blue, Diagonal::Rising));
    let other = if opposite { d.flip() } else { d };
    match color {
        Color::Blue => Orientation {
            blue: d,
            red: other,
        },
        Color::Red => Orientation {
            blue: other,
            red: d,
        },
    }
}

/// Maximum independent set of the corner-eliminated family with respect to
/// piercing and corner intersections. Member indices refer to `f`.
fn antichain_of(f: &RectFamily<'_>) -> Result<Vec<usize>> {
    let reduced = corner_elimination(f)?;
    // corner_elimination keeps order, so survivors map back by pair.
    let mut kept = Vec::with_capacity(reduced.len());
    let mut k = 0;
    for r in &reduced.rects {
        while f.rects[k].pair() != r.pair() {
            k += 1;
        }
        kept.push(k);
        k += 1;
    }
    let h = max_antichain(&piercing_order(&reduced)?);
    Ok(h.members.iter().map(|&i| kept[i]).collect())
}

/// Half-approximate maximum independent set of one of the monochromatic
/// families: the antichain `H` avoids piercing and corner intersections;
/// what remains are shared defining points, which form a forest on `H`, so
/// the larger color class of that forest is independent.
///
/// Coordinate ties are broken first, along the family's orientation, so
/// the result does not depend on general position.
pub fn half_approx_family(f: &RectFamily<'_>) -> Result<IndependentSet> {
    let frame = tilted_frame(f.base, orientation_of(f, true));
    let f = &in_frame(&frame, f);
    let h = antichain_of(f)?;
    let sub = f.subfamily(&h);
    let g = build_graph(&sub);
    let (a, b) = forest_two_color(&g)?;
    let class = if b.len() > a.len() { b } else { a };
    debug_assert!(g.edges.iter().all(|e| e.2 == IntersectionKind::Point));
    Ok(IndependentSet {
        members: class.iter().map(|&i| h[i]).collect(),
        certificate_size: h.len(),
    })
}

/// Exact maximum independent set of a bichromatic family, where only
/// piercing and corner intersections occur.
pub fn exact_family_bi(f: &RectFamily<'_>) -> Result<IndependentSet> {
    let frame = tilted_frame(f.base, orientation_of(f, false));
    let f = &in_frame(&frame, f);
    let h = antichain_of(f)?;
    let size = h.len();
    Ok(IndependentSet {
        members: h,
        certificate_size: size,
    })
}

/// 1/4-approximate maximum monochromatic strong matching.
pub fn approx_mmrm(s: &PointSet) -> Result<SolveReport> {
    let all = RectFamily::trusted(s, candidate_monochromatic(s));
    let (r1, r2) = split_families_mono(&all);
    let i1 = half_approx_family(&r1)?;
    let i2 = half_approx_family(&r2)?;
    let (fam, best) = if i2.len() > i1.len() {
        (&r2, i2)
    } else {
        (&r1, i1)
    };
    Ok(SolveReport {
        matching: Matching::new(
            best.members.iter().map(|&k| fam.rects[k].pair()),
            Mode::Mono,
        ),
        algorithm: "approx-mmrm".into(),
        candidate_count: all.len(),
        family_sizes: vec![r1.len(), r2.len()],
        optimal_size: None,
    })
}

/// 1/4-approximate maximum bichromatic strong matching.
pub fn approx_mbrm(s: &PointSet) -> Result<SolveReport> {
    let all = RectFamily::trusted(s, candidate_bichromatic(s));
    let fams = split_families_bi(&all);
    let mut best: Option<(usize, IndependentSet)> = None;
    for (k, f) in fams.iter().enumerate() {
        let i = exact_family_bi(f)?;
        if best.as_ref().is_none_or(|(_, b)| i.len() > b.len()) {
            best = Some((k, i));
        }
    }
    let (k, i) = best.expect("four families");
    Ok(SolveReport {
        matching: Matching::new(i.members.iter().map(|&m| fams[k].rects[m].pair()), Mode::Bi),
        algorithm: "approx-mbrm".into(),
        candidate_count: all.len(),
        family_sizes: fams.iter().map(RectFamily::len).collect(),
        optimal_size: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Color::*;
    use crate::mis::brute_force_mis_guarded;
    use rand::{Rng, SeedableRng};

    fn random_set(rng: &mut impl Rng, n: usize, side: i64) -> PointSet {
        let mut seen = std::collections::BTreeSet::new();
        while seen.len() < n {
            seen.insert((rng.gen_range(0..side), rng.gen_range(0..side)));
        }
        let pts: Vec<_> = seen
            .into_iter()
            .map(|(x, y)| (x, y, if rng.gen_bool(0.5) { Red } else { Blue }))
            .collect();
        PointSet::from_ints(&pts).unwrap()
    }

    fn touching(f: &RectFamily<'_>) -> Vec<(usize, usize)> {
        build_graph(f).edges.iter().map(|e| (e.0, e.1)).collect()
    }

    fn independent(f: &RectFamily<'_>, members: &[usize]) -> bool {
        let g = build_graph(f);
        g.edges
            .iter()
            .all(|e| !(members.contains(&e.0) && members.contains(&e.1)))
    }

    #[test]
    fn spec_examples() {
        let s = PointSet::from_ints(&[(0, 0, Red), (1, 1, Red)]).unwrap();
        assert_eq!(approx_mmrm(&s).unwrap().matching.len(), 1);
        let s =
            PointSet::from_ints(&[(0, 0, Blue), (1, 0, Blue), (2, 0, Blue), (3, 0, Blue)]).unwrap();
        assert_eq!(
            approx_mmrm(&s).unwrap().matching.pairs,
            vec![(0, 1), (2, 3)]
        );
        let s =
            PointSet::from_ints(&[(0, 0, Red), (1, 1, Blue), (2, 2, Red), (3, 3, Blue)]).unwrap();
        assert_eq!(approx_mbrm(&s).unwrap().matching.len(), 2);
        assert!(approx_mmrm(&PointSet::new(vec![]).unwrap())
            .unwrap()
            .matching
            .is_empty());

        // Two blue rects sharing the point (1, 1): only one survives.
        let s = PointSet::from_ints(&[(0, 0, Blue), (1, 1, Blue), (2, 2, Blue)]).unwrap();
        let f = RectFamily::new(&s, candidate_monochromatic(&s)).unwrap();
        assert_eq!(
            half_approx_family(&split_families_mono(&f).0)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn tilting_keeps_the_intersection_graph() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..400 {
            let n = rng.gen_range(2..20);
            let side = rng.gen_range(3..10);
            let s = random_set(&mut rng, n.min((side * side) as usize), side);
            let mono = RectFamily::trusted(&s, candidate_monochromatic(&s));
            let bi = RectFamily::trusted(&s, candidate_bichromatic(&s));
            let (r1, r2) = split_families_mono(&mono);
            let mut fams: Vec<(RectFamily<'_>, bool)> = vec![(r1, true), (r2, true)];
            fams.extend(split_families_bi(&bi).into_iter().map(|f| (f, false)));
            for (f, opposite) in fams {
                // Sub-families too, so that segment-only families occur.
                let keep: Vec<usize> = (0..f.len()).filter(|_| rng.gen_bool(0.3)).collect();
                for g in [f.clone(), f.subfamily(&keep)] {
                    let frame = tilted_frame(&s, orientation_of(&g, opposite));
                    assert_eq!(touching(&g), touching(&in_frame(&frame, &g)));
                }
            }
        }
    }

    #[test]
    fn half_bound_and_exactness_on_degenerate_inputs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for _ in 0..300 {
            let n = rng.gen_range(2..=14);
            let s = random_set(&mut rng, n, 8);
            let mono = RectFamily::trusted(&s, candidate_monochromatic(&s));
            let (r1, r2) = split_families_mono(&mono);
            for f in [r1, r2] {
                let i = half_approx_family(&f).unwrap();
                assert!(independent(&f, &i.members));
                let opt = brute_force_mis_guarded(&f, 64).unwrap().len();
                assert!(2 * i.len() >= opt, "{} < {opt}/2", i.len());
            }
            let bi = RectFamily::trusted(&s, candidate_bichromatic(&s));
            for f in split_families_bi(&bi) {
                let i = exact_family_bi(&f).unwrap();
                assert!(independent(&f, &i.members));
                assert_eq!(i.len(), brute_force_mis_guarded(&f, 64).unwrap().len());
            }
        }
    }
}
