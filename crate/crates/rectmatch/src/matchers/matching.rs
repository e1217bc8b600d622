use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Mono,
    Bi,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Mono => "mono",
            Mode::Bi => "bi",
        }
    }
}

/// A set of point-index pairs, read as a strong matching.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matching {
    /// Each pair `(i, j)` has `i < j`; the list is sorted.
    pub pairs: Vec<(usize, usize)>,
    pub mode: Mode,
}

impl Matching {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>, mode: Mode) -> Self {
        let mut pairs: Vec<_> = pairs
            .into_iter()
            .map(|(i, j)| if i < j { (i, j) } else { (j, i) })
            .collect();
        pairs.sort_unstable();
        Matching { pairs, mode }
    }

    pub fn empty(mode: Mode) -> Self {
        Matching {
            pairs: Vec::new(),
            mode,
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Output of a solver run.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolveReport {
    pub matching: Matching,
    pub algorithm: String,
    pub candidate_count: usize,
    pub family_sizes: Vec<usize>,
    /// Set when an exact oracle also ran.
    pub optimal_size: Option<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct ReportJson {
    mode: Mode,
    algorithm: String,
    pairs: Vec<[usize; 2]>,
    size: usize,
    optimal: Option<usize>,
    candidate_count: usize,
    family_sizes: Vec<usize>,
}

impl SolveReport {
    /// `|matching| / optimal`, when the optimum is known and nonzero.
    pub fn ratio(&self) -> Option<Ratio<usize>> {
        match self.optimal_size {
            Some(0) | None => None,
            Some(o) => Some(Ratio::new(self.matching.len(), o)),
        }
    }

    pub fn to_json(&self) -> String {
        let j = ReportJson {
            mode: self.matching.mode,
            algorithm: self.algorithm.clone(),
            pairs: self.matching.pairs.iter().map(|&(a, b)| [a, b]).collect(),
            size: self.matching.len(),
            optimal: self.optimal_size,
            candidate_count: self.candidate_count,
            family_sizes: self.family_sizes.clone(),
        };
        serde_json::to_string_pretty(&j).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: ReportJson = serde_json::from_str(text)?;
        Ok(SolveReport {
            matching: Matching::new(j.pairs.into_iter().map(|[a, b]| (a, b)), j.mode),
            algorithm: j.algorithm,
            candidate_count: j.candidate_count,
            family_sizes: j.family_sizes,
            optimal_size: j.optimal,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_with_stable_keys() {
        let r = SolveReport {
            matching: Matching::new([(3, 1), (0, 2)], Mode::Bi),
            algorithm: "approx-mbrm".into(),
            candidate_count: 5,
            family_sizes: vec![1, 2, 3, 4],
            optimal_size: Some(2),
        };
        let text = r.to_json();
        let keys: Vec<usize> = [
            "\"mode\"",
            "\"algorithm\"",
            "\"pairs\"",
            "\"size\"",
            "\"optimal\"",
            "\"candidateCount\"",
            "\"familySizes\"",
        ]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "{text}");
        assert_eq!(SolveReport::from_json(&text).unwrap(), r);
        assert_eq!(r.ratio(), Some(Ratio::new(1, 1)));
    }
}
