use std::collections::HashMap;

use super::clause::{clause_gadget, LegAnchor};
use super::formula::{clause_spans, CombLayout, Formula, Side};
use super::variable::{boundary_number, variable_gadget, VARIABLE_HEIGHT};
use super::{red_fill, GadgetInstance, VariableRecord};
use crate::error::{Error, Result};
use crate::geometry::{Color, Coord, PointSet};

/// Horizontal gap between consecutive variable gadgets.
const VARIABLE_GAP: i64 = 2;

/// The blue skeleton of the construction: variable gadgets side by side,
/// clause combs attached above and below, translated to non-negative
/// coordinates. No red points yet.
pub fn layout_blues(f: &Formula, layout: &CombLayout) -> Result<GadgetInstance> {
    layout.validate(f)?;
    let degrees: Vec<usize> = f.degrees().into_iter().map(|d| d.max(1)).collect();
    let mut origin_x = Vec::with_capacity(degrees.len());
    let mut x = 0;
    for &d in &degrees {
        origin_x.push(x);
        x += 6 * d as i64 + VARIABLE_GAP;
    }

    let mut points: Vec<(i64, i64)> = Vec::new();
    let mut segments: Vec<(usize, usize)> = Vec::new();
    let mut variables = Vec::new();
    for (v, name) in f.variables.iter().enumerate() {
        let g = variable_gadget(degrees[v], (origin_x[v], 0))?;
        let off = points.len();
        variables.push(VariableRecord {
            name: name.clone(),
            boundary: (off..off + g.points.len()).collect(),
        });
        segments.extend(g.segments.iter().map(|&(a, b)| (a + off, b + off)));
        points.extend(g.points);
    }

    let anchors = place_anchors(f, &degrees, &origin_x)?;
    for (c, clause) in f.clauses.iter().enumerate() {
        let g = clause_gadget(&anchors[c], clause.side, layout.level[c])
            .map_err(|e| Error::Layout(format!("clause {c}: {e}")))?;
        let off = points.len();
        segments.extend(g.segments.iter().map(|&(a, b)| (a + off, b + off)));
        points.extend(g.points);
    }

    let (mx, my) = (
        points.iter().map(|p| p.0).min().unwrap_or(0),
        points.iter().map(|p| p.1).min().unwrap_or(0),
    );
    let pts: Vec<_> = points
        .iter()
        .map(|&(x, y)| (x - mx, y - my, Color::Blue))
        .collect();
    let bound = pts.iter().map(|p| p.0.max(p.1)).max().unwrap_or(0) as u64;
    Ok(GadgetInstance {
        points: PointSet::from_ints(&pts)?,
        allowed_segments: segments,
        provenance: format!(
            "planar 1-in-3 SAT skeleton: {} variables, {} clauses ({} above, {} below)",
            f.variables.len(),
            f.clauses.len(),
            layout.above.len(),
            layout.below.len()
        ),
        grid_bound: bound,
        variables,
    })
}

/// Anchors of every clause, ordered along the clause's own frame (left to
/// right above the line, right to left below it).
///
/// On each side of a variable the legs are placed, in frame order: legs
/// of clauses ending at this variable (shorter first), then the middle leg
/// of at most one clause, then legs of clauses starting here (longer
/// first). With the layout's nesting this keeps combs from crossing. Each
/// leg gets its own width-6 slot and attaches at offset 2 or 4 in it,
/// whichever has the parity its literal needs.
fn place_anchors(f: &Formula, degrees: &[usize], origin_x: &[i64]) -> Result<Vec<[LegAnchor; 3]>> {
    let pos = f.positions();
    let spans = clause_spans(f);
    // (variable, side) -> [(group, key, clause, literal, frame rank)]
    type Leg = (u8, i64, usize, usize, usize);
    let mut legs: HashMap<(usize, Side), Vec<Leg>> = HashMap::new();
    for (c, clause) in f.clauses.iter().enumerate() {
        let span = (spans[c][2] - spans[c][0]) as i64;
        for (li, lit) in clause.literals.iter().enumerate() {
            let v = pos[lit.var.as_str()];
            let rank = spans[c].iter().position(|&p| p == v).unwrap();
            // Frame rank: below the line the frame runs right to left.
            let rank = if clause.side == Side::Above {
                rank
            } else {
                2 - rank
            };
            let (group, key) = match rank {
                2 => (0, span),
                1 => (1, 0),
                _ => (2, -span),
            };
            legs.entry((v, clause.side))
                .or_default()
                .push((group, key, c, li, rank));
        }
    }
    let mut anchors: Vec<[Option<LegAnchor>; 3]> = vec![[None; 3]; f.clauses.len()];
    for ((v, side), mut list) in legs {
        list.sort_unstable();
        if list.iter().filter(|l| l.0 == 1).count() > 1 {
            return Err(Error::Layout(format!(
                "two clauses use variable {:?} as their middle leg on one side",
                f.variables[v]
            )));
        }
        let d = degrees[v];
        for (k, &(_, _, c, li, rank)) in list.iter().enumerate() {
            let lit = &f.clauses[c].literals[li];
            let top = side == Side::Above;
            let slot = if top { k } else { d - 1 - k } as i64;
            let offset = [6 * slot + 2, 6 * slot + 4]
                .into_iter()
                .find(|&o| boundary_number(d, o, top).is_multiple_of(2) != lit.neg)
                .unwrap();
            let anchor = LegAnchor {
                point: (origin_x[v] + offset, if top { VARIABLE_HEIGHT } else { 0 }),
                number: boundary_number(d, offset, top),
                negated: lit.neg,
            };
            anchors[c][rank] = Some(anchor);
        }
    }
    Ok(anchors
        .into_iter()
        .map(|a| a.map(|x| x.expect("every leg placed")))
        .collect())
}

/// The full construction: a point set with a perfect monochromatic strong
/// matching (by segments) exactly when the formula has a 1-in-3 satisfying
/// assignment. Blue points come first and keep the indices of
/// [`layout_blues`].
pub fn compile_planar_1in3(f: &Formula, layout: &CombLayout) -> Result<GadgetInstance> {
    let blues = layout_blues(f, layout)?;
    let points = red_fill(&blues)?;
    let bound = points
        .iter()
        .map(|p| p.x.clone().max(p.y.clone()))
        .max()
        .unwrap_or_else(Coord::zero);
    Ok(GadgetInstance {
        grid_bound: bound.to_i64().expect("integer grid") as u64,
        provenance: format!("{}; red fill", blues.provenance),
        points,
        allowed_segments: blues.allowed_segments,
        variables: blues.variables,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{candidate_monochromatic, Color};
    use crate::matchers::{decide_perfect_guarded, perfect_matching, Mode};
    use crate::reductions::{Clause, Literal};

    fn clause(lits: [(&str, bool); 3], side: Side) -> Clause {
        Clause {
            literals: lits.map(|(v, neg)| Literal { var: v.into(), neg }),
            side,
        }
    }

    fn formula(vars: &[&str], clauses: Vec<Clause>) -> Formula {
        Formula {
            variables: vars.iter().map(|v| v.to_string()).collect(),
            clauses,
        }
    }

    fn blue_candidates(g: &GadgetInstance) -> Vec<(usize, usize)> {
        let s = &g.points;
        let mut v: Vec<_> = candidate_monochromatic(s)
            .iter()
            .filter(|r| s[r.a].color == Color::Blue)
            .map(|r| r.pair())
            .collect();
        v.sort();
        v
    }

    fn allowed(g: &GadgetInstance) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = g
            .allowed_segments
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn candidates_are_the_allowed_segments() {
        let nested = formula(
            &["a", "b", "c", "d", "e", "f"],
            vec![
                clause([("a", false), ("e", true), ("f", false)], Side::Above),
                clause([("b", false), ("c", false), ("d", true)], Side::Above),
                clause([("a", true), ("b", false), ("d", false)], Side::Below),
            ],
        );
        let mut cases = vec![nested];
        for signs in 0..8u32 {
            for side in [Side::Above, Side::Below] {
                cases.push(formula(
                    &["u", "v", "w"],
                    vec![clause(
                        [
                            ("u", signs & 1 == 1),
                            ("v", signs & 2 == 2),
                            ("w", signs & 4 == 4),
                        ],
                        side,
                    )],
                ));
            }
        }
        for f in &cases {
            let g = compile_planar_1in3(f, &CombLayout::for_formula(f).unwrap()).unwrap();
            assert_eq!(blue_candidates(&g), allowed(&g), "{}", f.to_json());
            let max = g
                .points
                .iter()
                .map(|p| p.x.clone().max(p.y.clone()))
                .max()
                .unwrap();
            assert_eq!(Coord::int(g.grid_bound as i64), max);
            let size = (f.variables.len() + f.clauses.len()) as u64;
            assert!(
                g.grid_bound <= 64 * size * size,
                "grid {} for size {size}",
                g.grid_bound
            );
        }
    }

    #[test]
    fn single_clause_truth_table() {
        for signs in [0u32, 5] {
            let f = formula(
                &["u", "v", "w"],
                vec![clause(
                    [
                        ("u", signs & 1 == 1),
                        ("v", signs & 2 == 2),
                        ("w", signs & 4 == 4),
                    ],
                    Side::Above,
                )],
            );
            let g = compile_planar_1in3(&f, &CombLayout::for_formula(&f).unwrap()).unwrap();
            assert!(decide_perfect_guarded(&g.points, Mode::Mono, usize::MAX).unwrap());
            for a in f.assignments() {
                let forced = g.assignment_pairs(&a).unwrap();
                let m = perfect_matching(&g.points, Mode::Mono, &forced, usize::MAX).unwrap();
                assert_eq!(m.is_some(), f.one_in_three(&a), "{a:?}");
            }
        }
    }

    #[test]
    fn sidecar_round_trip() {
        let f = formula(
            &["u", "v", "w"],
            vec![clause(
                [("u", false), ("v", true), ("w", false)],
                Side::Below,
            )],
        );
        let g = compile_planar_1in3(&f, &CombLayout::for_formula(&f).unwrap()).unwrap();
        let back = GadgetInstance::from_parts(
            PointSet::from_text(&g.points.to_text()).unwrap(),
            &g.sidecar_json(),
        )
        .unwrap();
        assert_eq!(back.points, g.points);
        assert_eq!(back.allowed_segments, g.allowed_segments);
        assert_eq!(back.variables, g.variables);
        assert_eq!(back.grid_bound, g.grid_bound);
        let short = PointSet::new(g.points.points()[1..].to_vec()).unwrap();
        assert!(GadgetInstance::from_parts(short, &g.sidecar_json()).is_err());
    }

    #[test]
    fn layout_errors() {
        let f = formula(
            &["a", "b", "c", "d"],
            vec![clause(
                [("a", false), ("b", false), ("c", false)],
                Side::Above,
            )],
        );
        let other = formula(
            &["a", "b", "c", "d"],
            vec![clause(
                [("a", false), ("b", false), ("c", false)],
                Side::Below,
            )],
        );
        let wrong = CombLayout::for_formula(&other).unwrap();
        assert!(matches!(
            compile_planar_1in3(&f, &wrong),
            Err(Error::Layout(_))
        ));
    }
}
