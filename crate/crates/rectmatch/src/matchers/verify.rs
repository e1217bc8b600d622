use std::fmt;

use super::{Matching, Mode};
use crate::geometry::{contains_point, rect_from_pair, Bx, PointSet, Ranks};

/// One line of a verification report.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Why it failed, naming the offending pairs or points.
    pub witness: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub candidacy: Check,
    pub color: Check,
    pub disjointness: Check,
    pub perfect: Check,
}

impl VerifyReport {
    pub fn checks(&self) -> [&Check; 4] {
        [
            &self.candidacy,
            &self.color,
            &self.disjointness,
            &self.perfect,
        ]
    }

    /// Checks (1)–(3): the matching is a valid strong matching.
    pub fn is_strong_matching(&self) -> bool {
        self.candidacy.passed && self.color.passed && self.disjointness.passed
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.checks() {
            write!(
                f,
                "{:<13} {}",
                c.name,
                if c.passed { "PASS" } else { "FAIL" }
            )?;
            if let Some(w) = &c.witness {
                write!(f, "  {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check(name: &'static str, witness: Option<String>) -> Check {
    Check {
        name,
        passed: witness.is_none(),
        witness,
    }
}

/// Check a claimed matching against the point set. Never fails: problems
/// become report entries.
pub fn verify_matching(s: &PointSet, m: &Matching) -> VerifyReport {
    let n = s.len();
    let mut used = vec![None; n];
    let mut candidacy = None;
    for &(i, j) in &m.pairs {
        let why = match rect_from_pair(s, i, j) {
            Err(e) => Some(format!("pair ({i}, {j}): {e}")),
            Ok(r) => (0..n)
                .find(|&k| k != i && k != j && contains_point(&r, &s[k]))
                .map(|k| format!("pair ({i}, {j}) contains point {k}"))
                .or_else(|| {
                    [i, j].into_iter().find_map(|p| {
                        used[p].replace((i, j)).map(|q: (usize, usize)| {
                            format!("point {p} is in pairs {q:?} and ({i}, {j})")
                        })
                    })
                }),
        };
        if candidacy.is_none() {
            candidacy = why;
        }
    }
    let valid: Vec<(usize, usize)> = m
        .pairs
        .iter()
        .copied()
        .filter(|&(i, j)| i < n && j < n && i != j)
        .collect();

    let color = valid
        .iter()
        .find(|&&(i, j)| (s[i].color == s[j].color) != (m.mode == Mode::Mono))
        .map(|&(i, j)| {
            let want = if m.mode == Mode::Mono {
                "same"
            } else {
                "different"
            };
            format!(
                "pair ({i}, {j}) is {}{}, {want} colors required",
                s[i].color.letter(),
                s[j].color.letter()
            )
        });

    let r = Ranks::new(s);
    let boxes: Vec<Bx<u32>> = valid
        .iter()
        .map(|&(i, j)| Bx {
            x0: r.xr[i].min(r.xr[j]),
            x1: r.xr[i].max(r.xr[j]),
            y0: r.yr[i].min(r.yr[j]),
            y1: r.yr[i].max(r.yr[j]),
        })
        .collect();
    let mut order: Vec<usize> = (0..boxes.len()).collect();
    order.sort_by_key(|&k| boxes[k].x0);
    let mut disjoint = None;
    'outer: for (a, &k) in order.iter().enumerate() {
        for &l in &order[a + 1..] {
            if boxes[l].x0 > boxes[k].x1 {
                break;
            }
            if boxes[k].meets(&boxes[l]) {
                let (p, q) = (valid[k].min(valid[l]), valid[k].max(valid[l]));
                disjoint = Some(format!("rects of pairs {p:?} and {q:?} intersect"));
                break 'outer;
            }
        }
    }

    let covered = used.iter().filter(|u| u.is_some()).count();
    let perfect = (covered < n).then(|| {
        let p = used.iter().position(Option::is_none).unwrap();
        format!("{} of {n} points unmatched, first is {p}", n - covered)
    });

    VerifyReport {
        candidacy: check("candidacy", candidacy),
        color: check("color", color),
        disjointness: check("disjointness", disjoint),
        perfect: check("perfect", perfect),
    }
}
