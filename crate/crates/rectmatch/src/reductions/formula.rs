//! Planar 1-in-3 SAT formulas and their comb layouts.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Literal {
    pub var: String,
    #[serde(default)]
    pub neg: bool,
}

impl Literal {
    pub fn pos(var: &str) -> Self {
        Literal {
            var: var.into(),
            neg: false,
        }
    }

    pub fn neg(var: &str) -> Self {
        Literal {
            var: var.into(),
            neg: true,
        }
    }

    pub fn value(&self, assignment: &HashMap<String, bool>) -> bool {
        assignment[&self.var] != self.neg
    }
}

/// Which side of the variable line a clause's comb is drawn on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Above,
    Below,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Clause {
    pub literals: [Literal; 3],
    pub side: Side,
}

/// A 3-CNF formula with its variables in left-to-right order on the
/// variable line.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Formula {
    pub variables: Vec<String>,
    pub clauses: Vec<Clause>,
}

impl Formula {
    pub fn from_json(text: &str) -> Result<Self> {
        let f: Formula = serde_json::from_str(text)?;
        f.validate()?;
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("formula serializes")
    }

    /// Names are unique; each clause has three distinct known variables.
    pub fn validate(&self) -> Result<()> {
        let pos = self.positions();
        if pos.len() != self.variables.len() {
            return Err(Error::Argument("duplicate variable name".into()));
        }
        for (k, c) in self.clauses.iter().enumerate() {
            for l in &c.literals {
                if !pos.contains_key(l.var.as_str()) {
                    return Err(Error::Argument(format!(
                        "clause {k}: unknown variable {:?}",
                        l.var
                    )));
                }
            }
            let [a, b, d] = &c.literals;
            if a.var == b.var || a.var == d.var || b.var == d.var {
                return Err(Error::Argument(format!(
                    "clause {k}: a variable appears twice"
                )));
            }
        }
        Ok(())
    }

    pub(crate) fn positions(&self) -> HashMap<&str, usize> {
        self.variables
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect()
    }

    /// Number of clauses each variable appears in.
    pub fn degrees(&self) -> Vec<usize> {
        let pos = self.positions();
        let mut d = vec![0; self.variables.len()];
        for c in &self.clauses {
            for l in &c.literals {
                d[pos[l.var.as_str()]] += 1;
            }
        }
        d
    }

    /// Whether exactly one literal of every clause is true.
    pub fn one_in_three(&self, assignment: &HashMap<String, bool>) -> bool {
        self.clauses
            .iter()
            .all(|c| c.literals.iter().filter(|l| l.value(assignment)).count() == 1)
    }

    /// All assignments, in binary counting order over `variables` (first
    /// variable is the most significant bit).
    pub fn assignments(&self) -> impl Iterator<Item = HashMap<String, bool>> + '_ {
        let n = self.variables.len();
        (0..1u64 << n).map(move |bits| {
            self.variables
                .iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), bits >> (n - 1 - i) & 1 == 1))
                .collect()
        })
    }

    /// A satisfying 1-in-3 assignment by exhaustive search.
    pub fn solve_one_in_three(&self) -> Option<HashMap<String, bool>> {
        self.assignments().find(|a| self.one_in_three(a))
    }
}

/// The side-by-side nesting structure of the clause combs. For each side,
/// clause indices ordered by (left end, outer first); `level[c]` is how
/// many combs are stacked inside clause `c`'s comb.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CombLayout {
    pub above: Vec<usize>,
    pub below: Vec<usize>,
    pub level: Vec<usize>,
}

impl CombLayout {
    /// Derive and validate the layout implied by the clause sides.
    ///
    /// Two combs on the same side must either be disjoint (they may share
    /// an end variable) or one must fit between two consecutive legs of
    /// the other.
    pub fn for_formula(f: &Formula) -> Result<Self> {
        f.validate()?;
        let spans = clause_spans(f);
        let mut level = vec![0; f.clauses.len()];
        let mut sides: BTreeMap<bool, Vec<usize>> = BTreeMap::new();
        for (k, c) in f.clauses.iter().enumerate() {
            sides.entry(c.side == Side::Above).or_default().push(k);
        }
        for members in sides.values_mut() {
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    let (sa, sb) = (spans[a], spans[b]);
                    let ok = sa[2] <= sb[0]
                        || sb[2] <= sa[0]
                        || inside_gap(sb, sa)
                        || inside_gap(sa, sb);
                    if !ok {
                        return Err(Error::Layout(format!(
                            "clauses {a} and {b} cross on the same side"
                        )));
                    }
                }
            }
            // Inner combs have smaller spans, so settle levels by span.
            members.sort_by_key(|&k| spans[k][2] - spans[k][0]);
            for (i, &a) in members.iter().enumerate() {
                level[a] = members[..i]
                    .iter()
                    .filter(|&&b| inside_gap(spans[b], spans[a]))
                    .map(|&b| level[b] + 1)
                    .max()
                    .unwrap_or(0);
            }
            members.sort_by_key(|&k| (spans[k][0], std::cmp::Reverse(spans[k][2])));
        }
        Ok(CombLayout {
            above: sides.remove(&true).unwrap_or_default(),
            below: sides.remove(&false).unwrap_or_default(),
            level,
        })
    }

    /// Check a supplied layout against the one the formula implies.
    pub fn validate(&self, f: &Formula) -> Result<()> {
        let derived = CombLayout::for_formula(f)?;
        if *self != derived {
            return Err(Error::Layout(
                "layout does not match the formula's clause sides and nesting".into(),
            ));
        }
        Ok(())
    }
}

/// Sorted variable positions of each clause.
pub(crate) fn clause_spans(f: &Formula) -> Vec<[usize; 3]> {
    let pos = f.positions();
    f.clauses
        .iter()
        .map(|c| {
            let mut s = c.literals.clone().map(|l| pos[l.var.as_str()]);
            s.sort_unstable();
            s
        })
        .collect()
}

/// Whether span `inner` lies between two consecutive legs of `outer`.
fn inside_gap(inner: [usize; 3], outer: [usize; 3]) -> bool {
    (0..2).any(|i| outer[i] <= inner[0] && inner[2] <= outer[i + 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clause(vars: [&str; 3], side: Side) -> Clause {
        Clause {
            literals: vars.map(Literal::pos),
            side,
        }
    }

    #[test]
    fn json_round_trip_and_validation() {
        let text = r#"{"variables": ["u", "v", "w"],
            "clauses": [{"literals": [{"var": "u"}, {"var": "v", "neg": true}, {"var": "w"}], "side": "above"}]}"#;
        let f = Formula::from_json(text).unwrap();
        assert!(f.clauses[0].literals[1].neg);
        assert_eq!(Formula::from_json(&f.to_json()).unwrap(), f);
        let bad = text.replace(r#"{"var": "w"}"#, r#"{"var": "u"}"#);
        assert!(Formula::from_json(&bad).is_err());
    }

    #[test]
    fn one_in_three_examples() {
        let f = Formula {
            variables: vec!["u".into(), "v".into(), "w".into()],
            clauses: vec![clause(["u", "v", "w"], Side::Above)],
        };
        assert_eq!(f.assignments().filter(|a| f.one_in_three(a)).count(), 3);
        assert!(f.solve_one_in_three().is_some());
    }

    #[test]
    fn layout_nesting_and_crossing() {
        let vars: Vec<String> = ["a", "b", "c", "d", "e"].map(String::from).to_vec();
        let nested = Formula {
            variables: vars.clone(),
            clauses: vec![
                clause(["a", "c", "e"], Side::Above),
                clause(["a", "b", "c"], Side::Above),
            ],
        };
        let l = CombLayout::for_formula(&nested).unwrap();
        assert_eq!(l.above, vec![0, 1]);
        assert_eq!(l.level, vec![1, 0]);
        l.validate(&nested).unwrap();

        let crossing = Formula {
            variables: vars.clone(),
            clauses: vec![
                clause(["a", "c", "e"], Side::Above),
                clause(["b", "c", "d"], Side::Above),
            ],
        };
        assert!(matches!(
            CombLayout::for_formula(&crossing),
            Err(Error::Layout(_))
        ));
        let split = Formula {
            variables: vars,
            clauses: vec![
                clause(["a", "c", "e"], Side::Above),
                clause(["b", "c", "d"], Side::Below),
            ],
        };
        assert!(CombLayout::for_formula(&split).is_ok());
    }
}
