//! Strong matchings of two-colored point sets with axis-aligned rectangles.
//!
//! A *strong matching* pairs points with pairwise-disjoint closed
//! rectangles `D(p, q)`, each containing exactly its two points. This crate
//! provides:
//!
//! - [`geometry`]: exact rational points, rectangles, the
//!   disjoint/piercing/corner/point/side intersection taxonomy and the
//!   candidate rectangle families;
//! - [`mis`]: independent sets of rectangles — corner elimination, the
//!   piercing order and its maximum antichain, a branch-and-bound oracle;
//! - [`matchers`]: the 1/4-approximations for the monochromatic and
//!   bichromatic problems, exact oracles and a matching verifier;
//! - [`reductions`]: generators for the hardness gadgets (blocking clusters,
//!   variable and clause gadgets, the 1-in-3 SAT compiler, recolorings).
//!
//! ```
//! use rectmatch::geometry::{Color, PointSet};
//! use rectmatch::matchers::approx_mbrm;
//!
//! let s = PointSet::from_ints(&[(0, 0, Color::Red), (1, 1, Color::Blue)]).unwrap();
//! let report = approx_mbrm(&s).unwrap();
//! assert_eq!(report.matching.pairs, vec![(0, 1)]);
//! ```

pub mod error;
pub mod geometry;
pub mod matchers;
pub mod mis;
pub mod reductions;
#[cfg(test)]
mod testutil;

pub use error::{Error, Result};

/// The guide's code listings, compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/approximation.md")]
    mod approximation {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/reductions.md")]
    mod reductions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
