//! The approximation algorithms, exact matching oracles and a verifier.

mod approx;
mod matching;
mod oracle;
mod split;
mod verify;

pub use approx::{approx_mbrm, approx_mmrm, exact_family_bi, half_approx_family, tilted_frame};
pub use matching::{Matching, Mode, SolveReport};
pub use oracle::{
    brute_force_max_matching, brute_force_max_matching_guarded, decide_perfect,
    decide_perfect_guarded, perfect_matching, MATCHING_GUARD,
};
pub use split::{split_families_bi, split_families_mono};
pub use verify::{verify_matching, Check, VerifyReport};
