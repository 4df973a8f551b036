//! Arc-space dynamics of the Grover walk with a sink.
//!
//! One step of `U` costs `O(|A|)`: accumulate `S(v) = Σ_{t(b)=v} ξ(b)` per
//! vertex, then `(Uξ)(a) = 2 S(o(a)) / deg(o(a)) − ξ(ā)`. The sink
//! projection `P` zeroes the entries on `d` and `d̄`.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::graph::{ArcId, DecoratedGraph, VertexId};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_STEPS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("vector has {found} entries but the graph has {expected} arcs")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} is out of range for {count} vertices")]
    VertexOutOfRange { vertex: VertexId, count: usize },
    #[error("the finding probability is not defined on the sink vertex")]
    SinkVertex,
}

/// A complex amplitude per arc.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcVector(Vec<Complex64>);

impl ArcVector {
    pub fn zeros(len: usize) -> Self {
        ArcVector(vec![Complex64::new(0.0, 0.0); len])
    }

    pub fn from_complex(values: Vec<Complex64>) -> Self {
        ArcVector(values)
    }

    pub fn from_real(values: &[f64]) -> Self {
        ArcVector(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.0
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Complex64> {
        self.0.iter()
    }

    /// `⟨self, other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &ArcVector) -> Complex64 {
        assert_eq!(self.len(), other.len(), "inner product of vectors of different length");
        self.0.iter().zip(&other.0).map(|(x, y)| x.conj() * y).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(&self, factor: Complex64) -> ArcVector {
        ArcVector(self.0.iter().map(|&z| z * factor).collect())
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &ArcVector) -> f64 {
        assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(|z| z.im == 0.0)
    }

    pub fn re(&self) -> Vec<f64> {
        self.0.iter().map(|z| z.re).collect()
    }
}

impl Index<ArcId> for ArcVector {
    type Output = Complex64;
    fn index(&self, a: ArcId) -> &Complex64 {
        &self.0[a]
    }
}

impl IndexMut<ArcId> for ArcVector {
    fn index_mut(&mut self, a: ArcId) -> &mut Complex64 {
        &mut self.0[a]
    }
}

impl Add for &ArcVector {
    type Output = ArcVector;
    fn add(self, rhs: &ArcVector) -> ArcVector {
        assert_eq!(self.len(), rhs.len());
        ArcVector(self.0.iter().zip(&rhs.0).map(|(x, y)| x + y).collect())
    }
}

impl Sub for &ArcVector {
    type Output = ArcVector;
    fn sub(self, rhs: &ArcVector) -> ArcVector {
        assert_eq!(self.len(), rhs.len());
        ArcVector(self.0.iter().zip(&rhs.0).map(|(x, y)| x - y).collect())
    }
}

impl Mul<f64> for &ArcVector {
    type Output = ArcVector;
    fn mul(self, rhs: f64) -> ArcVector {
        ArcVector(self.0.iter().map(|z| z * rhs).collect())
    }
}

fn check_len(g: &DecoratedGraph, found: usize) -> Result<(), WalkError> {
    if found != g.arc_count() {
        return Err(WalkError::DimensionMismatch { expected: g.arc_count(), found });
    }
    Ok(())
}

/// Amplitude types the kernel runs on: `f64` for the real power iteration,
/// `Complex64` for general states.
trait Amplitude: Copy + Default + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {}
impl Amplitude for f64 {}
impl Amplitude for Complex64 {}

/// `dst = U src`, with `sums` as per-vertex scratch.
fn grover_into<T: Amplitude>(g: &DecoratedGraph, src: &[T], dst: &mut [T], sums: &mut [T]) {
    sums.fill(T::default());
    for (arc, &x) in g.arcs().iter().zip(src) {
        sums[arc.terminal] = sums[arc.terminal] + x;
    }
    for (v, s) in sums.iter_mut().enumerate() {
        *s = *s * (2.0 / g.degree(v) as f64);
    }
    for (arc, out) in g.arcs().iter().zip(dst.iter_mut()) {
        *out = sums[arc.origin] - src[arc.inverse];
    }
}

fn project_in_place<T: Amplitude>(g: &DecoratedGraph, v: &mut [T]) {
    v[g.sink_arc()] = T::default();
    v[g.sink_return()] = T::default();
}

/// `ζ`: amplitude 1 on the start self-loop.
pub fn initial_state(g: &DecoratedGraph) -> ArcVector {
    let mut z = ArcVector::zeros(g.arc_count());
    z[g.start_loop()] = Complex64::new(1.0, 0.0);
    z
}

pub fn grover_step(g: &DecoratedGraph, xi: &ArcVector) -> Result<ArcVector, WalkError> {
    check_len(g, xi.len())?;
    let mut out = ArcVector::zeros(xi.len());
    let mut sums = vec![Complex64::default(); g.vertex_count()];
    grover_into(g, xi.as_slice(), out.as_mut_slice(), &mut sums);
    Ok(out)
}

pub fn project_sink(g: &DecoratedGraph, xi: &ArcVector) -> Result<ArcVector, WalkError> {
    check_len(g, xi.len())?;
    let mut out = xi.clone();
    project_in_place(g, out.as_mut_slice());
    Ok(out)
}

/// `(PU)^n ξ`.
pub fn iterate(g: &DecoratedGraph, xi: &ArcVector, n: usize) -> Result<ArcVector, WalkError> {
    check_len(g, xi.len())?;
    let mut cur = xi.clone().into_vec();
    let mut next = vec![Complex64::default(); cur.len()];
    let mut sums = vec![Complex64::default(); g.vertex_count()];
    for _ in 0..n {
        grover_into(g, &cur, &mut next, &mut sums);
        project_in_place(g, &mut next);
        std::mem::swap(&mut cur, &mut next);
    }
    Ok(ArcVector(cur))
}

/// `μ(v) = Σ_{t(a)=v} |ξ(a)|²`.
pub fn finding_probability(g: &DecoratedGraph, xi: &ArcVector, v: VertexId) -> Result<f64, WalkError> {
    check_len(g, xi.len())?;
    if v == g.sink_vertex() {
        return Err(WalkError::SinkVertex);
    }
    if v >= g.vertex_count() {
        return Err(WalkError::VertexOutOfRange { vertex: v, count: g.vertex_count() });
    }
    Ok(g.arcs().iter().zip(xi.iter()).filter(|(arc, _)| arc.terminal == v).map(|(_, z)| z.norm_sqr()).sum())
}

/// `μ` on every maze vertex (the sink is left out), in one pass.
pub fn vertex_probabilities(g: &DecoratedGraph, xi: &ArcVector) -> Result<Vec<f64>, WalkError> {
    check_len(g, xi.len())?;
    let mut mu = vec![0.0; g.base().vertex_count()];
    for (arc, z) in g.arcs().iter().zip(xi.iter()) {
        if arc.terminal != g.sink_vertex() {
            mu[arc.terminal] += z.norm_sqr();
        }
    }
    Ok(mu)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PowerResult {
    /// `χ_n = (−1)^n (PU)^n ζ` at the last step taken.
    pub limit: ArcVector,
    pub steps: usize,
    pub converged: bool,
    /// `‖χ_n − χ_{n−2}‖` at the last step.
    pub last_delta: f64,
}

/// The `50·|A|` step cap.
pub fn arc_scaled_cap(g: &DecoratedGraph) -> usize {
    50 * g.arc_count()
}

/// Iterates `χ_n = (−1)^n (PU)^n ζ` until both `‖χ_n − χ_{n−1}‖` and
/// `‖χ_n − χ_{n−2}‖` drop below `tol`, or `max_steps` is reached.
///
/// The stride-2 difference absorbs parity transients; the stride-1 one
/// catches a surviving `λ = +1` component, which the sign correction turns
/// into a period-2 oscillation that stride 2 alone cannot see.
pub fn converge_power(g: &DecoratedGraph, tol: f64, max_steps: usize) -> PowerResult {
    let n_arcs = g.arc_count();
    let mut back2 = vec![0.0; n_arcs];
    let mut back1 = vec![0.0; n_arcs];
    back1[g.start_loop()] = 1.0;
    let mut cur = vec![0.0; n_arcs];
    let mut sums = vec![0.0; g.vertex_count()];
    let dist = |x: &[f64], y: &[f64]| x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();

    // Working with χ directly: χ_{n+1} = −PU χ_n.
    let mut last_delta = f64::INFINITY;
    let mut steps = 0;
    let mut converged = false;
    while steps < max_steps {
        grover_into(g, &back1, &mut cur, &mut sums);
        project_in_place(g, &mut cur);
        cur.iter_mut().for_each(|x| *x = -*x);
        steps += 1;
        if steps >= 2 {
            last_delta = dist(&cur, &back2);
            if last_delta < tol && dist(&cur, &back1) < tol {
                converged = true;
            }
        }
        std::mem::swap(&mut back2, &mut back1);
        std::mem::swap(&mut back1, &mut cur);
        if converged {
            break;
        }
    }
    PowerResult { limit: ArcVector::from_real(&back1), steps, converged, last_delta }
}

/// The `|A| × |A|` matrix of `U`.
pub fn dense_grover(g: &DecoratedGraph) -> DMatrix<f64> {
    let n = g.arc_count();
    let mut u = DMatrix::zeros(n, n);
    for (a, arc) in g.arcs().iter().enumerate() {
        let w = 2.0 / g.degree(arc.origin) as f64;
        for (b, other) in g.arcs().iter().enumerate() {
            if other.terminal == arc.origin {
                u[(a, b)] += w;
            }
        }
        u[(a, arc.inverse)] -= 1.0;
    }
    u
}
