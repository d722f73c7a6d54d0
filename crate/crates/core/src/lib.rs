//! Hamiltonian path solver for directed graphs based on a dynamic program
//! over colored path-class hierarchies, plus the machinery needed to check
//! it: exact oracles (bitmask DP and exhaustive backtracking), a planted
//! instance generator, and a campaign harness that classifies solver
//! outcomes against ground truth and measures empirical scaling.
//!
//! Module map:
//!
//! - [`graph`] — directed graphs, problem instances, path validation,
//!   instance generation and text I/O.
//! - [`chroma`] — path-class colors, the color-hierarchy DAG, the
//!   constrained `sucoDFS` traversal and the dependent-color computation.
//! - [`pagra`] — per-(node, slack) path graphs: `add_slack`/`paint`,
//!   `reno`/`bleach`, `merge`, and the per-node slack sets.
//! - [`botmarch`] — the lockstep traversal workflow (bots, dock
//!   exclusivity, `add_delete`) and the top-level [`botmarch::solve`].
//! - [`oracles`] — independent exact deciders used as ground truth.
//! - [`harness`] — campaign runner, verdict classification, scaling study.
//! - [`fixture`] — text fixtures for reconstructing solver state in tests.

pub mod botmarch;
pub mod chroma;
pub mod fixture;
pub mod graph;
pub mod harness;
pub mod oracles;
pub mod pagra;
