//! Exact subgraph statistics for simple directed graphs.
//!
//! The crate revolves around counting short walks and paths in digraphs
//! without short directed cycles:
//!
//! - [`digraph`]: the immutable [`Digraph`](digraph::Digraph) value type with
//!   degree/adjacency queries, k-freeness detection and walk/path/induced-path
//!   counting oracles.
//! - [`census`]: the seven-type triad census of digon-free digraphs, derived
//!   from degree identities plus word-parallel triangle counting, and the
//!   2n³/25 bound machinery.
//! - [`cig`]: circular interval digraphs — lengths, α/β/ξ/γ slack data,
//!   uniform families G_β and H_β, edge toggles and augmenting-sequence
//!   transforms.
//! - [`families`]: extremal generator constructions with known exact counts.
//! - [`path4`]: 4-vertex path statistics (squares, R/S/N/T) for 3-free
//!   digraphs and their exact identities and bounds.
//! - [`search`]: exhaustive small-n enumeration, conjecture verification and
//!   stochastic local search.
//!
//! All bound verdicts use exact integer or rational arithmetic; floating
//! point never decides an inequality.

pub mod bits;
pub mod census;
pub mod cig;
pub mod digraph;
pub mod families;
pub mod parallel;
pub mod path4;
pub mod rational;
pub mod search;

pub use census::{census, census_bruteforce, TriadCensus};
pub use cig::CircularIntervalDigraph;
pub use digraph::{Digraph, PathKind};
pub use rational::{BoundReport, Exact};
