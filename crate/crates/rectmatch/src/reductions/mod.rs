//! Instance generators: random point sets, the blocking cluster, the
//! variable and clause gadgets, the planar 1-in-3 SAT compiler and its
//! all-blue and bichromatic variants.

mod blocking;
mod clause;
mod compile;
mod fill;
mod formula;
mod gadget;
mod random;
mod recolor;
mod variable;

pub use blocking::{blocking_gadget, M1, M2};
pub use clause::{clause_gadget, ClauseGadget, LegAnchor, LEVEL_HEIGHT};
pub use compile::{compile_planar_1in3, layout_blues};
pub use fill::red_fill;
pub use formula::{Clause, CombLayout, Formula, Literal, Side};
pub use gadget::{variable_matching, GadgetInstance, VariableRecord};
pub use random::random_instance;
pub use recolor::{bichromatize, monochromatize, BI_CLUSTER};
pub use variable::{variable_gadget, VariableGadget, VARIABLE_HEIGHT};
