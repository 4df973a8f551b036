//! Unimodular eigenvectors that keep `(−1)^n (PU)^n ζ` from converging.
//!
//! An eigenvector of `U` that vanishes on `d` and `d̄` is also an
//! eigenvector of `PU` with the same eigenvalue, so the part of `ζ` along
//! such vectors never leaks into the sink. For `λ ≠ −1` it keeps rotating
//! by `−λ` after the sign correction.
//!
//! `U` is real orthogonal, so `H = (U + Uᵀ)/2` is symmetric and its
//! eigenspace for `c` is the real span of `V(λ) ⊕ V(λ̄)`, `λ = c ± i√(1−c²)`.
//! Each such shell is searched separately in a small compressed problem.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::{minus_one_eigenspace, phase};
use crate::graph::DecoratedGraph;
use crate::linalg::complex_nullspace;
use crate::walk::dense_grover;

const CLUSTER_TOL: f64 = 1e-8;
const NULL_TOL: f64 = 1e-7;
const OVERLAP_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Obstruction {
    /// `(re, im)` of the eigenvalue, on the unit circle.
    pub eigenvalue: (f64, f64),
    /// `‖Π ζ‖` for `Π` the projection onto the eigenvectors of this
    /// eigenvalue that vanish on `d` and `d̄`.
    pub overlap: f64,
}

impl Obstruction {
    pub fn lambda(&self) -> Complex64 {
        Complex64::new(self.eigenvalue.0, self.eigenvalue.1)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralReport {
    pub minus_one_dim: usize,
    pub unimodular_obstructions: Vec<Obstruction>,
}

impl SpectralReport {
    pub fn is_clear(&self) -> bool {
        self.unimodular_obstructions.is_empty()
    }
}

/// One eigenspace `V(λ)` of `U`.
#[derive(Debug, Clone)]
pub struct Eigenspace {
    pub lambda: Complex64,
    /// Orthonormal basis as columns.
    pub basis: DMatrix<Complex64>,
}

/// Every eigenspace of `U`, found shell by shell.
pub fn eigenspaces(g: &DecoratedGraph) -> Vec<Eigenspace> {
    let u = dense_grover(g);
    let n = u.nrows();
    let h = (&u + u.transpose()) * 0.5;
    let eig = h.symmetric_eigen();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for i in order {
        match clusters.last_mut() {
            Some(c) if (eig.eigenvalues[i] - eig.eigenvalues[*c.last().unwrap()]).abs() < CLUSTER_TOL => c.push(i),
            _ => clusters.push(vec![i]),
        }
    }

    let uc = u.map(|x| Complex64::new(x, 0.0));
    let mut spaces = Vec::new();
    for cluster in clusters {
        let size = cluster.len();
        let c = cluster.iter().map(|&i| eig.eigenvalues[i]).sum::<f64>() / size as f64;
        let c = c.clamp(-1.0, 1.0);
        let w = DMatrix::from_fn(n, size, |r, j| Complex64::new(eig.eigenvectors[(r, cluster[j])], 0.0));
        let compressed = w.adjoint() * &uc * &w;
        let im = (1.0 - c * c).sqrt();
        let lambdas = if 1.0 - c.abs() < CLUSTER_TOL {
            vec![Complex64::new(c.signum(), 0.0)]
        } else {
            vec![Complex64::new(c, im), Complex64::new(c, -im)]
        };
        for lambda in lambdas {
            let shifted = &compressed - DMatrix::<Complex64>::identity(size, size) * lambda;
            let y = complex_nullspace(&shifted, NULL_TOL);
            if y.ncols() > 0 {
                spaces.push(Eigenspace { lambda: phase(lambda), basis: &w * y });
            }
        }
    }
    spaces
}

pub fn unimodular_obstruction(g: &DecoratedGraph) -> SpectralReport {
    let s = g.start_loop();
    let (d, dbar) = (g.sink_arc(), g.sink_return());
    let mut found = Vec::new();
    for space in eigenspaces(g) {
        if (space.lambda + 1.0).norm() < CLUSTER_TOL {
            continue;
        }
        let v = &space.basis;
        let sink_rows = DMatrix::from_fn(2, v.ncols(), |r, j| v[(if r == 0 { d } else { dbar }, j)]);
        let z = complex_nullspace(&sink_rows, NULL_TOL);
        if z.ncols() == 0 {
            continue;
        }
        let vanishing = v * &z;
        let overlap = vanishing.row(s).iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if overlap > OVERLAP_TOL {
            found.push(Obstruction { eigenvalue: (space.lambda.re, space.lambda.im), overlap });
        }
    }
    found.sort_by(|a, b| a.eigenvalue.1.total_cmp(&b.eigenvalue.1).then(a.eigenvalue.0.total_cmp(&b.eigenvalue.0)));

    SpectralReport { minus_one_dim: minus_one_eigenspace(g).len(), unimodular_obstructions: found }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{decorate, make_random_tree, path_graph, route_with_cycle, SinkPlacement};

    fn route_with_nine_cycle(placement: SinkPlacement) -> DecoratedGraph {
        route_with_cycle(9).decorate(placement).unwrap()
    }

    #[test]
    fn sink_at_start_is_clear() {
        let g = decorate(path_graph(4), 0, 3, SinkPlacement::AtStart).unwrap();
        let rep = unimodular_obstruction(&g);
        assert_eq!(rep.minus_one_dim, 1);
        assert!(rep.is_clear(), "{rep:?}");
        assert!(unimodular_obstruction(&route_with_nine_cycle(SinkPlacement::AtStart)).is_clear());
    }

    #[test]
    fn tree_with_sink_at_goal_is_clear() {
        let g = decorate(make_random_tree(9, 2).unwrap(), 0, 8, SinkPlacement::AtGoal).unwrap();
        assert!(unimodular_obstruction(&g).is_clear());
    }

    #[test]
    fn nine_cycle_with_sink_at_goal_obstructs() {
        let rep = unimodular_obstruction(&route_with_nine_cycle(SinkPlacement::AtGoal));
        assert!(!rep.is_clear());
        let third = std::f64::consts::PI / 3.0;
        for target in [Complex64::from_polar(1.0, third), Complex64::from_polar(1.0, -third)] {
            let hit = rep.unimodular_obstructions.iter().find(|o| (o.lambda() - target).norm() < 1e-8);
            assert!(hit.is_some(), "no obstruction at {target}: {rep:?}");
        }
        for o in &rep.unimodular_obstructions {
            assert!((o.lambda().norm() - 1.0).abs() < 1e-12);
            assert!((o.lambda() + 1.0).norm() > 1e-8);
        }
    }
}
