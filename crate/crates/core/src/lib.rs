//! Extremal edge counts of K4-minor-free graphs under a girth constraint.
//!
//! * [`graph`]: bit-set graphs, traversal, cycle listing, graph6 and DOT.
//! * [`invariants`]: girth, series-parallel recognition, K4-minor
//!   certificates and canonical forms.
//! * [`structure`]: bridges of a cycle and the cutvertex rewrite.
//! * [`construct`]: closed-form bounds, theta graphs, the girth-5 family and
//!   the catalog of extremal graphs on 10 vertices.
//! * [`enumerate`]: exhaustive extremal search by orderly generation.
//! * [`oracle`], [`sample`], [`suite`]: brute-force reference search,
//!   random graph generators and the built-in verification suite.

pub mod construct;
pub mod enumerate;
pub mod graph;
pub mod invariants;
pub mod oracle;
pub mod sample;
pub mod structure;
pub mod suite;
