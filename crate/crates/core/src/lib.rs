//! Finite combinatorics around weak Ramsey ultrafilters on the plane.
//!
//! The crate covers n-types and their realizations by finite point sets
//! ([`typecalc`], [`pointsets`]), per-type homogeneity of colorings
//! ([`homogeneity`]), a deterministic random-graph construction
//! ([`randomgraph`]), a decidable algebra of planar sets and filter sums
//! ([`setalgebra`]) and finite prefixes of omega-types ([`omegatypes`]).

pub mod typecalc;
pub mod pointsets;
pub mod homogeneity;
pub mod randomgraph;
pub mod setalgebra;
pub mod omegatypes;
pub mod limits;
pub mod gen;
