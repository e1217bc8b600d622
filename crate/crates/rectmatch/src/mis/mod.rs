//! Independent sets of rectangles: intersection graphs, corner elimination,
//! the piercing order and its maximum antichain, and an exact oracle.

mod complete;
mod family;
mod graph;
mod oracle;
mod order;

pub use complete::{corner_elimination, crossing_pair, verify_complete};
pub use family::{Diagonal, IndependentSet, Orientation, RectFamily};
pub use graph::{build_graph, forest_two_color, gpc_subgraph, IntersectionGraph};
pub use oracle::{brute_force_mis, brute_force_mis_graph, brute_force_mis_guarded, MIS_GUARD};
pub use order::{max_antichain, piercing_order, PiercingDag};
