use std::collections::BTreeMap;

use proptest::prelude::*;

use rectmatch::geometry::{
    empty_pairs, is_general_position, perturb, Color, ColoredPoint, Coord, PointSet,
};
use rectmatch::matchers::{
    approx_mbrm, approx_mmrm, brute_force_max_matching, decide_perfect, verify_matching, Mode,
};

/// Up to `max` distinct points on a small grid, so ties are common.
fn grid_set(max: usize, side: i64) -> impl Strategy<Value = PointSet> {
    prop::collection::vec((0..side, 0..side, any::<bool>()), 0..=max).prop_map(|v| {
        let cells: BTreeMap<(i64, i64), bool> =
            v.into_iter().map(|(x, y, r)| ((x, y), r)).collect();
        let pts: Vec<_> = cells
            .into_iter()
            .map(|((x, y), r)| (x, y, if r { Color::Red } else { Color::Blue }))
            .collect();
        PointSet::from_ints(&pts).unwrap()
    })
}

fn coord() -> impl Strategy<Value = Coord> {
    (-50i64..50, 1i64..9).prop_map(|(n, d)| Coord::ratio(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn point_file_round_trip(pts in prop::collection::vec((coord(), coord(), any::<bool>()), 0..20)) {
        let mut seen = BTreeMap::new();
        for (x, y, r) in pts {
            seen.entry((x, y)).or_insert(r);
        }
        let s = PointSet::new(
            seen.into_iter()
                .map(|((x, y), r)| ColoredPoint::new(x, y, if r { Color::Red } else { Color::Blue }))
                .collect(),
        ).unwrap();
        let text = s.to_text();
        let back = PointSet::from_text(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(back.to_text(), text);
    }

    #[test]
    fn approximations_are_valid_and_within_a_quarter(s in grid_set(12, 7)) {
        for mode in [Mode::Mono, Mode::Bi] {
            let report = match mode {
                Mode::Mono => approx_mmrm(&s),
                Mode::Bi => approx_mbrm(&s),
            }.unwrap();
            prop_assert!(verify_matching(&s, &report.matching).is_strong_matching());
            let opt = brute_force_max_matching(&s, mode).unwrap();
            prop_assert!(verify_matching(&s, &opt).is_strong_matching());
            prop_assert!(4 * report.matching.len() >= opt.len());
            prop_assert!(report.matching.len() <= opt.len());
        }
    }

    #[test]
    fn perfect_decision_agrees_with_the_maximum(s in grid_set(12, 6)) {
        for mode in [Mode::Mono, Mode::Bi] {
            let max = brute_force_max_matching(&s, mode).unwrap().len();
            prop_assert_eq!(decide_perfect(&s, mode).unwrap(), 2 * max == s.len());
        }
    }

    #[test]
    fn perturbation_keeps_what_it_promises(s in grid_set(16, 6)) {
        let t = perturb(&s, 5).unwrap();
        prop_assert!(is_general_position(&t));
        let (before, after) = (empty_pairs(&s), empty_pairs(&t));
        // Pairs that become empty were blocked only by boundary points;
        // axis-parallel pairs never change.
        for &(i, j) in before.iter().chain(&after) {
            if s[i].x == s[j].x || s[i].y == s[j].y {
                prop_assert_eq!(before.contains(&(i, j)), after.contains(&(i, j)));
            }
        }
        // An interior point stays interior, so nothing empty gets blocked.
        for p in &before {
            prop_assert!(after.contains(p), "{:?} became blocked", p);
        }
    }
}
