//! Exact decision toolkit for intrinsic linkedness of finite graphs.
//!
//! A graph is *intrinsically linked* (IL) when every embedding of it in
//! 3-space contains a pair of disjoint cycles forming a nontrivial link.
//! This crate decides that property two independent ways and cross-checks
//! them:
//!
//! * [`z2`] sets up a linear system over GF(2) whose solvability is
//!   equivalent to the existence of an embedding with all mod-2 linking
//!   numbers zero, and extracts machine-checkable certificates either way.
//! * [`minors`] searches for minors from the seven-member obstruction
//!   family (the Petersen family); containment of any member is equivalent
//!   to intrinsic linkedness.
//!
//! Supporting modules: [`graph`] (multigraph core and local moves),
//! [`formats`] (graph6 and edge-list text), [`catalog`] (named graphs),
//! [`iso`] (canonical labeling), [`cycles`] (cycle and pair enumeration),
//! [`embedding`] (a twist-vector embedding model with exact linking
//! numbers), [`gf2`] (bit-packed linear algebra), [`families`] (∇Y/Y∇ move
//! closures), and [`d4`] (double-linked doubled-4-cycle minors inside a
//! fixed embedding).
//!
//! Everything is exact integer/bit arithmetic; no floating point is used
//! anywhere in a decision path. All searches that can grow beyond desk
//! scale take explicit budgets and report exhaustion as a distinct
//! outcome rather than guessing.

pub mod catalog;
pub mod cycles;
pub mod d4;
pub mod embedding;
pub mod families;
pub mod formats;
pub mod gf2;
pub mod graph;
pub mod iso;
pub mod minors;
pub mod z2;

pub use graph::{EdgeId, Graph, GraphError, VertexId};
