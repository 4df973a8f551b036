//! Limit analysis through the `−1` eigenspace of `U`.
//!
//! Every vector of `V(−1)` orthogonal to the navigation vector vanishes on
//! the start self-loop, so projecting `ζ` onto `V(−1)` gives `φ(s)̄ φ`
//! directly and `(−1)^n (PU)^n ζ → φ(s)̄ φ` when nothing else survives.

mod construct;
mod obstruction;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{bfs_path_within, path_vertices, ArcId, DecoratedGraph, VertexId};
use crate::linalg::qrcp_nullspace;
use crate::walk::{dense_grover, ArcVector};

pub use construct::{cycle_eigenvector, path_eigenvector};
pub use obstruction::{eigenspaces, unimodular_obstruction, Eigenspace, Obstruction, SpectralReport};

/// Pivot threshold, relative to the largest pivot, for the rank of `U + I`.
pub const RANK_TOL: f64 = 1e-9;

/// Arcs below this fraction of the largest amplitude count as zero.
pub const SUPPORT_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("the start self-loop is orthogonal to V(-1)")]
    StartOrthogonal,
    #[error("no arc amplitude exceeds the threshold")]
    EmptySupport,
    #[error("invalid arc path: {0}")]
    InvalidPath(String),
    #[error("cycle has odd length {0}")]
    OddCycle(usize),
}

/// Orthonormal basis of `V(−1) = ker(U + I)`.
pub fn minus_one_eigenspace(g: &DecoratedGraph) -> Vec<ArcVector> {
    let n = g.arc_count();
    let shifted = dense_grover(g) + DMatrix::<f64>::identity(n, n);
    let ns = qrcp_nullspace(&shifted, RANK_TOL);
    ns.basis.column_iter().map(|c| ArcVector::from_real(c.as_slice())).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct NavigationVector {
    pub vector: ArcVector,
    /// `φ(s)`, real and positive.
    pub start_amplitude: f64,
}

/// Projection of `ζ` onto `V(−1)`, i.e. `φ(s)̄ φ`.
pub fn project_start(g: &DecoratedGraph, basis: &[ArcVector]) -> ArcVector {
    let s = g.start_loop();
    let mut p = ArcVector::zeros(g.arc_count());
    for b in basis {
        let coeff = b[s].conj();
        for (out, x) in p.as_mut_slice().iter_mut().zip(b.iter()) {
            *out += coeff * x;
        }
    }
    p
}

pub fn navigation_vector(g: &DecoratedGraph) -> Result<NavigationVector, SpectralError> {
    navigation_from_basis(g, &minus_one_eigenspace(g))
}

/// The navigation vector from a given orthonormal basis of `V(−1)`.
pub fn navigation_from_basis(g: &DecoratedGraph, basis: &[ArcVector]) -> Result<NavigationVector, SpectralError> {
    let p = project_start(g, basis);
    let norm = p.norm();
    if norm < 1e-12 {
        return Err(SpectralError::StartOrthogonal);
    }
    // ⟨e_s, Πζ⟩ = ‖Πζ‖², so p(s) is already real and positive.
    let vector = &p * (1.0 / norm);
    let start_amplitude = vector[g.start_loop()].re;
    Ok(NavigationVector { vector, start_amplitude })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitDistribution {
    /// `lim μ_n(v)` for each maze vertex.
    pub probabilities: Vec<f64>,
    /// `|φ(s)|²`.
    pub survival: f64,
}

/// `lim μ_n(v) = |φ(s)|² Σ_{t(a)=v} |φ(a)|²`.
pub fn limit_distribution(g: &DecoratedGraph, nav: &NavigationVector) -> LimitDistribution {
    let survival = nav.start_amplitude * nav.start_amplitude;
    let mut probabilities = vec![0.0; g.base().vertex_count()];
    for (arc, z) in g.arcs().iter().zip(nav.vector.iter()) {
        if arc.terminal != g.sink_vertex() {
            probabilities[arc.terminal] += survival * z.norm_sqr();
        }
    }
    LimitDistribution { probabilities, survival }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtractedPath {
    /// Every arc with `|φ(a)| > threshold · max |φ|`, in id order.
    pub arcs: Vec<ArcId>,
    /// Start-to-goal route through the selected maze arcs, if one exists.
    pub route_arcs: Option<Vec<ArcId>>,
    pub route: Option<Vec<VertexId>>,
}

/// Reads a route off the support of `φ`.
pub fn extract_path(g: &DecoratedGraph, phi: &ArcVector, threshold: f64) -> Result<ExtractedPath, SpectralError> {
    let top = phi.max_abs();
    let cut = threshold.max(SUPPORT_FLOOR) * top;
    let selected: Vec<bool> = phi.iter().map(|z| z.norm() > cut).collect();
    let arcs: Vec<ArcId> = (0..phi.len()).filter(|&a| selected[a]).collect();
    if top == 0.0 || arcs.is_empty() {
        return Err(SpectralError::EmptySupport);
    }
    let route_arcs = bfs_path_within(g.base(), g.start(), g.goal(), |a| selected[a]);
    let route = route_arcs.as_ref().map(|r| path_vertices(g.base(), g.start(), r));
    Ok(ExtractedPath { arcs, route_arcs, route })
}

/// `‖(U + I) ξ‖`.
pub fn minus_one_residual(g: &DecoratedGraph, xi: &ArcVector) -> f64 {
    let u = crate::walk::grover_step(g, xi).expect("vector belongs to the graph");
    (&u + xi).norm()
}

/// Unit complex number with the same phase as `z`.
pub(crate) fn phase(z: Complex64) -> Complex64 {
    z / z.norm()
}
