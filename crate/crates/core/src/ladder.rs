//! Closed-form navigation vector on ladders.
//!
//! With `κ = m / (2(l+m))` the overlap of consecutive cycle vectors and
//! `u_n = U_n(1/(2κ))` the second-kind Chebyshev values, Gram–Schmidt on the
//! cycle vectors gives `ψ_n = Σ_s (−1)^{n−s} u_s γ_s / √(κ u_n u_{n+1})` and
//!
//! ```text
//! ‖(I−Π_k)ξ‖ φ = ξ − √(2(l+m))/√(m+3) · Σ_s (−1)^s u_s T_s γ_s,
//! T_i = Σ_{n=i}^{k} 1 / (u_n u_{n+1}).
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{make_ladder, DecoratedGraph, Ladder, LadderArc, SinkPlacement};
use crate::walk::ArcVector;

/// Largest supported cycle index.
pub const MAX_K: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LadderError {
    #[error("ladder length m must be at least 1")]
    ZeroLength,
    #[error("ladder width l must be at least 1")]
    ZeroWidth,
    #[error("k = {0} exceeds the supported maximum {MAX_K}")]
    TooManyCycles(usize),
    #[error("Chebyshev value u_{0} is not a finite float")]
    Overflow(usize),
    #[error("need u_0..u_{needed}, cache holds {held} values")]
    CacheTooShort { needed: usize, held: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LadderParams {
    pub m: usize,
    pub l: usize,
    pub k: usize,
}

impl LadderParams {
    pub fn new(m: usize, l: usize, k: usize) -> Result<Self, LadderError> {
        if m == 0 {
            return Err(LadderError::ZeroLength);
        }
        if l == 0 {
            return Err(LadderError::ZeroWidth);
        }
        if k > MAX_K {
            return Err(LadderError::TooManyCycles(k));
        }
        Ok(LadderParams { m, l, k })
    }

    pub fn kappa(&self) -> f64 {
        kappa(self.m, self.l)
    }

    /// Chebyshev argument `1/(2κ) = (l+m)/m`.
    pub fn x(&self) -> f64 {
        (self.l + self.m) as f64 / self.m as f64
    }
}

pub fn kappa(m: usize, l: usize) -> f64 {
    m as f64 / (2.0 * (l + m) as f64)
}

/// `u_0, ..., u_N` with the convention `u_{−1} = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevCache {
    u: Vec<f64>,
}

impl ChebyshevCache {
    /// `u_n = U_n(x)` for `n = 0..=n_max` by the three-term recurrence.
    pub fn new(x: f64, n_max: usize) -> Result<Self, LadderError> {
        let mut u = Vec::with_capacity(n_max + 1);
        let (mut prev, mut cur) = (0.0, 1.0f64);
        for n in 0..=n_max {
            if !cur.is_finite() {
                return Err(LadderError::Overflow(n));
            }
            u.push(cur);
            (prev, cur) = (cur, 2.0 * x * cur - prev);
        }
        Ok(ChebyshevCache { u })
    }

    /// Values up to `u_{k+2}`, enough for every formula on these parameters.
    pub fn for_params(params: &LadderParams) -> Result<Self, LadderError> {
        let cache = Self::new(params.x(), params.k + 2)?;
        let last = cache.u.len() - 1;
        if !(cache.u[last] * cache.u[last - 1]).is_finite() {
            return Err(LadderError::Overflow(last));
        }
        Ok(cache)
    }

    /// Takes precomputed values as is, without checking the recurrence.
    pub fn from_values(u: Vec<f64>) -> Self {
        ChebyshevCache { u }
    }

    /// `u_n` for `n >= −1`.
    pub fn get(&self, n: isize) -> f64 {
        match n {
            -1 => 0.0,
            n if n >= 0 => self.u[n as usize],
            _ => panic!("u_{n} is not defined"),
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.u
    }
}

pub fn chebyshev_u(params: &LadderParams, n: usize) -> Result<f64, LadderError> {
    Ok(ChebyshevCache::new(params.x(), n)?.u[n])
}

/// Coefficients `c_{n,s}` of `ψ_n = Σ_{s=0}^{n} c_{n,s} γ_s`.
pub fn psi_coefficients(params: &LadderParams, n: usize) -> Result<Vec<f64>, LadderError> {
    let cache = ChebyshevCache::new(params.x(), n + 1)?;
    let u = &cache.u;
    let norm = (params.kappa() * u[n] * u[n + 1]).sqrt();
    Ok((0..=n).map(|s| if (n - s).is_multiple_of(2) { u[s] / norm } else { -u[s] / norm }).collect())
}

/// `‖(I−Π_k)ξ‖² = 1 − m/(m+3) · Σ_{n=0}^{k} 1/(u_n u_{n+1})`.
pub fn residual_norm_sq(params: &LadderParams) -> Result<f64, LadderError> {
    Ok(ClosedForm::new(*params)?.residual_norm_sq())
}

/// The closed-form navigation vector of a ladder.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    params: LadderParams,
    cache: ChebyshevCache,
    /// `T_0, ..., T_k, T_{k+1} = 0`.
    tails: Vec<f64>,
    residual: f64,
}

impl ClosedForm {
    pub fn new(params: LadderParams) -> Result<Self, LadderError> {
        Self::with_cache(params, ChebyshevCache::for_params(&params)?)
    }

    /// Builds the closed form from given Chebyshev values, which are trusted.
    pub fn with_cache(params: LadderParams, cache: ChebyshevCache) -> Result<Self, LadderError> {
        let k = params.k;
        if cache.u.len() < k + 3 {
            return Err(LadderError::CacheTooShort { needed: k + 2, held: cache.u.len() });
        }
        let u = &cache.u;
        let mut tails = vec![0.0; k + 2];
        for i in (0..=k).rev() {
            tails[i] = tails[i + 1] + 1.0 / (u[i] * u[i + 1]);
        }
        let m = params.m as f64;
        let residual = 1.0 - m / (m + 3.0) * tails[0];
        Ok(ClosedForm { params, cache, tails, residual })
    }

    pub fn params(&self) -> LadderParams {
        self.params
    }

    pub fn cache(&self) -> &ChebyshevCache {
        &self.cache
    }

    pub fn residual_norm_sq(&self) -> f64 {
        self.residual
    }

    /// `T_i`, zero for `i = k + 1`.
    pub fn tail(&self, i: usize) -> f64 {
        self.tails[i]
    }

    /// `1/√(2(m+3))`, the magnitude of the normalized route vector.
    fn xi_unit(&self) -> f64 {
        1.0 / (2.0 * (self.params.m as f64 + 3.0)).sqrt()
    }

    /// `φ(s)`, also the amplitude on every tail arc and both loops.
    pub fn start_amplitude(&self) -> f64 {
        self.xi_unit() / self.residual.sqrt()
    }

    /// `‖(I−Π_k)ξ‖ √(2(m+3)) φ(a)` on rung `i` (`0..=k+1`) where `γ_i(a) > 0`
    /// (for `i = k+1`, where `γ_k(a) > 0`).
    pub fn left_unnormalized(&self, i: usize) -> f64 {
        let u = |n: usize| self.cache.u[n];
        match i {
            0 => 1.0 - self.tails[0],
            _ => {
                let v = 1.0 / u(i) + (u(i - 1) - u(i)) * self.tails[i];
                if i.is_multiple_of(2) {
                    v
                } else {
                    -v
                }
            }
        }
    }

    /// `‖(I−Π_k)ξ‖ √(2(m+3)) φ(a)` on the rails of cycle `i` where `γ_i(a) > 0`.
    pub fn top_unnormalized(&self, i: usize) -> f64 {
        let v = self.cache.u[i] * self.tails[i];
        if i.is_multiple_of(2) {
            -v
        } else {
            v
        }
    }

    /// `|φ(a)|` on rung `i`.
    pub fn left(&self, i: usize) -> f64 {
        self.left_unnormalized(i).abs() * self.start_amplitude()
    }

    /// `|φ(a)|` on the top (or bottom) rail of cycle `i`.
    pub fn top(&self, i: usize) -> f64 {
        self.top_unnormalized(i).abs() * self.start_amplitude()
    }

    /// `|φ(a)|` for an arc of the given class.
    pub fn magnitude(&self, role: LadderArc) -> f64 {
        match role {
            LadderArc::Tail => self.start_amplitude(),
            LadderArc::Rung(i) => self.left(i),
            LadderArc::TopRail(i) | LadderArc::BottomRail(i) => self.top(i),
        }
    }

    /// `|φ(a)|` for every arc of the decorated ladder (sink at the start),
    /// read off the per-class formulas.
    pub fn magnitudes(&self, ladder: &Ladder, g: &DecoratedGraph) -> Vec<f64> {
        (0..g.arc_count())
            .map(|a| {
                if g.is_sink_arc(a) {
                    0.0
                } else if g.is_base_arc(a) {
                    self.magnitude(ladder.role(a))
                } else {
                    self.start_amplitude()
                }
            })
            .collect()
    }

    /// The signed vector `φ`, assembled from the route and cycle vectors of
    /// `ladder` rather than from the per-class formulas.
    pub fn assemble(&self, ladder: &Ladder, g: &DecoratedGraph) -> ArcVector {
        let LadderParams { m, l, .. } = self.params;
        let (m, l) = (m as f64, l as f64);
        let mut phi = vec![0.0; g.arc_count()];
        let xi = self.xi_unit();
        phi[g.start_loop()] = xi;
        for (i, &a) in ladder.route.iter().enumerate() {
            let v = if (i + 1) % 2 == 0 { xi } else { -xi };
            phi[a] += v;
            phi[a ^ 1] += v;
        }
        let route_len = ladder.route.len();
        phi[g.goal_loop()] = if (route_len + 1).is_multiple_of(2) { xi } else { -xi };

        let gamma_unit = 1.0 / (2.0 * (l + m).sqrt());
        let c = (2.0 * (l + m)).sqrt() / (m + 3.0).sqrt();
        for (s, cycle) in ladder.cycles.iter().enumerate() {
            let coeff = c * self.cache.u[s] * self.tails[s] * if s % 2 == 0 { 1.0 } else { -1.0 };
            for (i, &a) in cycle.iter().enumerate() {
                let v = if (i + 1) % 2 == 0 { gamma_unit } else { -gamma_unit };
                phi[a] -= coeff * v;
                phi[a ^ 1] -= coeff * v;
            }
        }
        let norm = self.residual.sqrt();
        phi.iter_mut().for_each(|x| *x /= norm);
        ArcVector::from_real(&phi)
    }

    /// `(p_i, q_i)`: limit probability of finding the walker on rung `i` and
    /// on the top rail of cycle `i`, for `i = 0..=k`. Each is `|φ(s)|²` times
    /// the sum of `|φ(a)|²` over both directions of the family's arcs.
    pub fn side_probabilities(&self) -> (Vec<f64>, Vec<f64>) {
        let survival = self.start_amplitude().powi(2);
        let LadderParams { m, l, k } = self.params;
        let p = (0..=k).map(|i| survival * 2.0 * m as f64 * self.left(i).powi(2)).collect();
        let q = (0..=k).map(|i| survival * 2.0 * l as f64 * self.top(i).powi(2)).collect();
        (p, q)
    }
}

/// Builds the ladder with the sink at the start.
pub fn decorated_ladder(params: LadderParams) -> (Ladder, DecoratedGraph) {
    let ladder = make_ladder(params);
    let g = ladder.maze.decorate(SinkPlacement::AtStart).expect("ladder start and goal differ");
    (ladder, g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Monotonicity {
    pub left: bool,
    pub top: bool,
}

/// Strict decrease of `|φ|` along the rungs `0..=k` and along the top rails.
pub fn check_monotone(form: &ClosedForm) -> Monotonicity {
    let k = form.params().k;
    Monotonicity {
        left: (0..k).all(|i| form.left(i) > form.left(i + 1)),
        top: (0..k).all(|i| form.top(i) > form.top(i + 1)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChebyshevInequalities {
    /// `u_{i+1} > u_i + 1`.
    pub growth: bool,
    /// `u_{i+2} − u_{i+1} > u_{i+1} − u_i`.
    pub convexity: bool,
    /// `T_i < 1 / (u_i (u_{i+1} − u_i))`.
    pub tail_bound: bool,
}

impl ChebyshevInequalities {
    pub fn all(&self) -> bool {
        self.growth && self.convexity && self.tail_bound
    }
}

/// The three growth inequalities for `i = 0..=k`.
pub fn chebyshev_inequalities(form: &ClosedForm) -> ChebyshevInequalities {
    let k = form.params().k;
    let u = |n: usize| form.cache().get(n as isize);
    ChebyshevInequalities {
        growth: (0..=k).all(|i| u(i + 1) > u(i) + 1.0),
        convexity: (0..=k).all(|i| u(i + 2) - u(i + 1) > u(i + 1) - u(i)),
        tail_bound: (0..=k).all(|i| form.tail(i) < 1.0 / (u(i) * (u(i + 1) - u(i)))),
    }
}
