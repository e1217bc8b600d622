use std::fmt;

/// Everything that can go wrong in this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A structural claim the algorithms rely on did not hold.
    #[error("contract violated: {0}")]
    Contract(Violation),

    /// An exponential oracle refused to run on an input above its size guard.
    #[error("{oracle} refused: input size {size} exceeds guard {guard}")]
    Guard {
        oracle: &'static str,
        size: usize,
        guard: usize,
    },

    #[error("layout error: {0}")]
    Layout(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Witness attached to a contract error. Rect ids are the defining point
/// index pairs, which stay meaningful across sub-families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A corner pair whose crossing rectangles are not both in the family.
    Incomplete {
        first: (usize, usize),
        second: (usize, usize),
    },
    /// Piercing order requested on a family that still has corner edges.
    CornerEdge {
        first: (usize, usize),
        second: (usize, usize),
    },
    /// Two rectangles pierce each other in both directions.
    MutualPiercing {
        first: (usize, usize),
        second: (usize, usize),
    },
    /// u -> v -> w without u -> w.
    Intransitive {
        u: (usize, usize),
        v: (usize, usize),
        w: (usize, usize),
    },
    Cyclic(Vec<(usize, usize)>),
    /// Vertex ids (graph-local) of a cycle found by the forest 2-coloring.
    NotAForest(Vec<usize>),
    Other(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = |p: &(usize, usize)| format!("D({},{})", p.0, p.1);
        match self {
            Violation::Incomplete { first, second } => write!(
                f,
                "family is not complete: corner pair {} / {} lacks its crossing rectangles",
                r(first),
                r(second)
            ),
            Violation::CornerEdge { first, second } => {
                write!(
                    f,
                    "corner intersection left between {} and {}",
                    r(first),
                    r(second)
                )
            }
            Violation::MutualPiercing { first, second } => {
                write!(
                    f,
                    "{} and {} pierce each other both ways",
                    r(first),
                    r(second)
                )
            }
            Violation::Intransitive { u, v, w } => write!(
                f,
                "piercing order not transitive: {} -> {} -> {} but not {} -> {}",
                r(u),
                r(v),
                r(w),
                r(u),
                r(w)
            ),
            Violation::Cyclic(c) => {
                let s: Vec<String> = c.iter().map(r).collect();
                write!(f, "piercing order has a cycle: {}", s.join(" -> "))
            }
            Violation::NotAForest(c) => {
                write!(f, "graph is not a forest, cycle through vertices {c:?}")
            }
            Violation::Other(s) => f.write_str(s),
        }
    }
}
