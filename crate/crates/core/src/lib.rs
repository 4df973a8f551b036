//! Maze solving with the Grover walk and a sink.
//!
//! A maze is a finite connected graph with a start `s` and a goal `g`. The
//! walk runs on arcs; self-loops are added at `s` and `g`, and a sink vertex
//! hangs off one of them. Repeatedly applying the Grover step and deleting
//! the amplitude on the sink arcs leaves, up to a sign, a state localized on
//! short routes. Its shape is the normalized projection of the initial state
//! onto the `−1` eigenspace of the Grover operator.
//!
//! * [`graph`]: digraphs, decoration, maze parsing, generators, BFS.
//! * [`walk`]: the sparse dynamics and the power iteration.
//! * [`spectral`]: `V(−1)`, the navigation vector, limit distribution and
//!   non-convergence diagnostics.
//! * [`ladder`]: the closed-form navigation vector on ladder graphs.

pub mod graph;
pub mod ladder;
pub mod linalg;
pub mod spectral;
pub mod walk;
