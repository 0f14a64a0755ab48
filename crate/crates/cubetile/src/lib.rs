//! Discrete extremal length on triangulated topological cubes.
//!
//! A triangulated 3-ball whose boundary sphere is partitioned into six labeled
//! patches (three opposite pairs) carries a natural extremal-length problem:
//! over all nonnegative vertex weights `m`, maximize the cubed distance between
//! the first patch pair divided by the total cubed volume. The optimizer `m0`
//! is unique and induces a packing of axis-aligned boxes, one per vertex, that
//! tiles a rectangular container exactly when a combinatorial
//! triple-intersection condition holds.
//!
//! The crate is organized bottom-up:
//!
//! * [`mesh`]: triangulations, boundary labels, validity checks, 1-skeleton.
//! * [`metric`]: vertex metrics, weighted path lengths, shortest paths.
//! * [`solver`]: the extremal metric, a brute-force oracle, stationarity.
//! * [`triple`]: shortest-path DAGs and the triple-intersection decision.
//! * [`tiling`]: box construction and export.
//! * [`verify`]: geometric verification of a tiling against its mesh.
//! * [`spine`]: detection of one-vertex pinch columns in the interior.
//! * [`fixtures`]: built-in meshes used by tests and the CLI.

pub mod fixtures;
pub mod mesh;
pub mod metric;
pub mod solver;
pub mod spine;
pub mod tiling;
pub mod triple;
pub mod verify;

pub use mesh::{BoundaryLabel, Triangulation, ValidationReport, VertexId};
pub use metric::{Metric, PathSeq, WeightAssignment};
pub use solver::{ExtremalResult, SolverOptions};
pub use tiling::CubeTiling;
pub use triple::{TripleDecision, TripleOptions, TripleVerdict};
pub use verify::{VerificationReport, VerifyOptions};
