use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::PointSet;

/// Where a variable gadget's boundary points ended up in an instance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VariableRecord {
    pub name: String,
    /// `boundary[k]` is the point numbered `k + 1` (clockwise from the
    /// top-left corner).
    pub boundary: Vec<usize>,
}

/// A generated instance: its points, the blue pairs that are meant to be
/// matchable (the "dotted lines"), and how it was made.
#[derive(Clone, Debug)]
pub struct GadgetInstance {
    pub points: PointSet,
    pub allowed_segments: Vec<(usize, usize)>,
    pub provenance: String,
    /// All coordinates lie in `[0..grid_bound]²`.
    pub grid_bound: u64,
    pub variables: Vec<VariableRecord>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct Sidecar {
    provenance: String,
    grid_bound: u64,
    point_count: usize,
    allowed_segments: Vec<[usize; 2]>,
    variables: Vec<VariableRecord>,
}

impl GadgetInstance {
    /// The pairs that a variable gadget's boundary is matched with under an
    /// assignment: the 1-matching (point `i` with `i + 1` for odd `i`) when
    /// true, the 0-matching (even `i`, cyclically) when false.
    pub fn assignment_pairs(
        &self,
        assignment: &HashMap<String, bool>,
    ) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for v in &self.variables {
            let value = *assignment
                .get(&v.name)
                .ok_or_else(|| Error::Argument(format!("no value for variable {:?}", v.name)))?;
            out.extend(
                variable_matching(v.boundary.len(), value)
                    .into_iter()
                    .map(|(a, b)| (v.boundary[a], v.boundary[b])),
            );
        }
        Ok(out)
    }

    /// Allowed segments, provenance and variable numbering as JSON; the
    /// points themselves go to a point file.
    pub fn sidecar_json(&self) -> String {
        let s = Sidecar {
            provenance: self.provenance.clone(),
            grid_bound: self.grid_bound,
            point_count: self.points.len(),
            allowed_segments: self.allowed_segments.iter().map(|&(a, b)| [a, b]).collect(),
            variables: self.variables.clone(),
        };
        serde_json::to_string_pretty(&s).expect("sidecar serializes")
    }

    /// Reassemble an instance from a point file and its sidecar.
    pub fn from_parts(points: PointSet, sidecar: &str) -> Result<Self> {
        let s: Sidecar = serde_json::from_str(sidecar)?;
        if s.point_count != points.len() {
            return Err(Error::Argument(format!(
                "sidecar is for {} points, file has {}",
                s.point_count,
                points.len()
            )));
        }
        let n = points.len();
        let bad = s
            .allowed_segments
            .iter()
            .flatten()
            .chain(s.variables.iter().flat_map(|v| &v.boundary))
            .any(|&i| i >= n);
        if bad {
            return Err(Error::Argument(
                "sidecar refers to a point index out of range".into(),
            ));
        }
        Ok(GadgetInstance {
            points,
            allowed_segments: s
                .allowed_segments
                .into_iter()
                .map(|[a, b]| (a, b))
                .collect(),
            provenance: s.provenance,
            grid_bound: s.grid_bound,
            variables: s.variables,
        })
    }
}

/// Zero-based local pairs of the 1-matching (`true`) or 0-matching of a
/// cycle of `len` boundary points.
pub fn variable_matching(len: usize, value: bool) -> Vec<(usize, usize)> {
    let start = if value { 0 } else { 1 };
    (0..len / 2)
        .map(|k| (start + 2 * k, (start + 2 * k + 1) % len))
        .collect()
}
