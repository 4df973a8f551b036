//! Reports for `solve` and `spectrum`, and their text and heatmap renderings.

use std::fmt::Write as _;

use grovermaze::graph::{DecoratedGraph, GridMaze, Ladder, LadderArc, SinkPlacement};
use grovermaze::ladder::{chebyshev_inequalities, check_monotone, ChebyshevInequalities, ClosedForm, Monotonicity};
use grovermaze::spectral::{
    extract_path, limit_distribution, minus_one_eigenspace, navigation_from_basis, unimodular_obstruction, Obstruction,
};
use grovermaze::walk::{converge_power, vertex_probabilities, ArcVector};
use serde::Serialize;

use crate::input::InputError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Power,
    Spectral,
    Both,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Power => "power",
            Method::Spectral => "spectral",
            Method::Both => "both",
        }
    }
}

pub struct SolveOptions {
    pub method: Method,
    pub tol: f64,
    pub max_steps: usize,
    pub threshold: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub vertices: Vec<usize>,
    pub limit_probability: Vec<f64>,
    /// Start-to-goal route read off the support of `φ`, empty if none.
    pub path: Vec<usize>,
    pub survival: f64,
    pub method: Method,
    pub diagnostics: Diagnostics,
}

#[derive(Debug, Clone, Serialize)]
pub struct Diagnostics {
    pub sink: &'static str,
    pub start: usize,
    pub goal: usize,
    pub arcs: usize,
    pub bipartite: bool,
    pub warnings: Vec<String>,
    pub minus_one_dim: Option<usize>,
    pub steps: Option<usize>,
    pub converged: Option<bool>,
    pub last_delta: Option<f64>,
    pub cross_method_max_deviation: Option<f64>,
    pub support_arcs: usize,
    /// Computed with the sink at the goal or when power iteration stalls.
    pub obstructions: Option<Vec<Obstruction>>,
    pub ladder: Option<LadderTable>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LadderTable {
    pub m: usize,
    pub l: usize,
    pub k: usize,
    pub kappa: f64,
    pub residual_norm_sq: f64,
    pub rows: Vec<LadderRow>,
    pub monotone: Monotonicity,
    pub inequalities: ChebyshevInequalities,
}

#[derive(Debug, Clone, Serialize)]
pub struct LadderRow {
    pub i: usize,
    /// `|φ|` on rung `i` from the closed form.
    pub left: f64,
    /// `|φ|` on the rails of cycle `i`; absent past the last cycle.
    pub top: Option<f64>,
    pub left_measured: Option<f64>,
    pub top_measured: Option<f64>,
    pub p: Option<f64>,
    pub q: Option<f64>,
}

fn placement_name(p: SinkPlacement) -> &'static str {
    match p {
        SinkPlacement::AtStart => "start",
        SinkPlacement::AtGoal => "goal",
    }
}

/// Runs the requested methods. The second value is `true` when the walk
/// does not settle.
pub fn solve(g: &DecoratedGraph, ladder: Option<&Ladder>, opts: &SolveOptions) -> Result<(Report, bool), InputError> {
    let mut warnings = Vec::new();
    if !g.underlying_bipartite() {
        warnings.push(
            "maze graph is not bipartite: the -1 eigenspace may carry more than path and even-cycle vectors".into(),
        );
    }

    let power =
        matches!(opts.method, Method::Power | Method::Both).then(|| converge_power(g, opts.tol, opts.max_steps));
    let spectral = if matches!(opts.method, Method::Spectral | Method::Both) {
        let basis = minus_one_eigenspace(g);
        let nav = navigation_from_basis(g, &basis).map_err(|e| InputError(e.to_string()))?;
        Some((basis.len(), nav))
    } else {
        None
    };

    let power_mu = power.as_ref().map(|r| vertex_probabilities(g, &r.limit).expect("limit lives on g"));
    let (limit_probability, survival, phi) = match (&spectral, &power) {
        (Some((_, nav)), _) => {
            let lim = limit_distribution(g, nav);
            (lim.probabilities, lim.survival, nav.vector.clone())
        }
        (None, Some(run)) => {
            let norm = run.limit.norm();
            let phi = if norm > 0.0 { &run.limit * (1.0 / norm) } else { run.limit.clone() };
            (power_mu.clone().unwrap(), norm * norm, phi)
        }
        (None, None) => unreachable!("at least one method runs"),
    };

    let deviation = power_mu
        .as_ref()
        .filter(|_| spectral.is_some())
        .map(|mu| mu.iter().zip(&limit_probability).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max));
    let stalled = power.as_ref().is_some_and(|r| !r.converged);
    let obstructions =
        (g.placement() == SinkPlacement::AtGoal || stalled).then(|| unimodular_obstruction(g).unimodular_obstructions);
    let not_settled = stalled || obstructions.as_ref().is_some_and(|o| !o.is_empty());
    if not_settled {
        warnings.push("the walk has no limit under these settings".into());
    }

    let extracted = extract_path(g, &phi, opts.threshold).ok();
    let path = extracted.as_ref().and_then(|e| e.route.clone()).unwrap_or_default();
    if path.is_empty() {
        warnings.push(format!("no start-to-goal route above threshold {}", opts.threshold));
    }

    let ladder_table = ladder
        .filter(|_| g.placement() == SinkPlacement::AtStart)
        .map(|ladder| ladder_table(ladder, g, &phi))
        .transpose()?;

    let report = Report {
        vertices: (0..g.base().vertex_count()).collect(),
        limit_probability,
        path,
        survival,
        method: opts.method,
        diagnostics: Diagnostics {
            sink: placement_name(g.placement()),
            start: g.start(),
            goal: g.goal(),
            arcs: g.arc_count(),
            bipartite: g.underlying_bipartite(),
            warnings,
            minus_one_dim: spectral.as_ref().map(|(d, _)| *d),
            steps: power.as_ref().map(|r| r.steps),
            converged: power.as_ref().map(|r| r.converged),
            last_delta: power.as_ref().map(|r| r.last_delta).filter(|d| d.is_finite()),
            cross_method_max_deviation: deviation,
            support_arcs: extracted.map_or(0, |e| e.arcs.len()),
            obstructions,
            ladder: ladder_table,
        },
    };
    Ok((report, not_settled))
}

fn ladder_table(ladder: &Ladder, g: &DecoratedGraph, phi: &ArcVector) -> Result<LadderTable, InputError> {
    let form = ClosedForm::new(ladder.params)?;
    let (p, q) = form.side_probabilities();
    let k = ladder.params.k;
    let measured = |role: LadderArc| (0..g.base().arc_count()).find(|&a| ladder.role(a) == role).map(|a| phi[a].norm());
    let rows = (0..=k + 1)
        .map(|i| LadderRow {
            i,
            left: form.left(i),
            top: (i <= k).then(|| form.top(i)),
            left_measured: measured(LadderArc::Rung(i)),
            top_measured: if i <= k { measured(LadderArc::TopRail(i)) } else { None },
            p: p.get(i).copied(),
            q: q.get(i).copied(),
        })
        .collect();
    Ok(LadderTable {
        m: ladder.params.m,
        l: ladder.params.l,
        k,
        kappa: ladder.params.kappa(),
        residual_norm_sq: form.residual_norm_sq(),
        rows,
        monotone: check_monotone(&form),
        inequalities: chebyshev_inequalities(&form),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub vertices: usize,
    pub arcs: usize,
    pub sink: &'static str,
    pub bipartite: bool,
    pub minus_one_dim: usize,
    pub obstructions: Vec<Obstruction>,
}

pub fn spectrum(g: &DecoratedGraph) -> SpectrumReport {
    let rep = unimodular_obstruction(g);
    SpectrumReport {
        vertices: g.base().vertex_count(),
        arcs: g.arc_count(),
        sink: placement_name(g.placement()),
        bipartite: g.underlying_bipartite(),
        minus_one_dim: rep.minus_one_dim,
        obstructions: rep.unimodular_obstructions,
    }
}

/// Plain decimals in the readable range, scientific notation outside it.
fn num(x: f64) -> String {
    if x == 0.0 || (1e-4..1e6).contains(&x.abs()) {
        format!("{x:.10}").trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        format!("{x:.6e}")
    }
}

fn complex((re, im): (f64, f64)) -> String {
    format!("{} {} {}i", num(re), if im < 0.0 { '-' } else { '+' }, num(im.abs()))
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn solve_text(r: &Report) -> String {
    let d = &r.diagnostics;
    let mut out = String::new();
    let _ = writeln!(out, "method: {}", r.method.name());
    let _ = writeln!(out, "sink: {}  start: {}  goal: {}  arcs: {}", d.sink, d.start, d.goal, d.arcs);
    let _ = writeln!(out, "survival: {}", num(r.survival));
    let _ = writeln!(out, "path: {:?}", r.path);
    let _ = writeln!(out, "minus-one dimension: {}", opt(&d.minus_one_dim));
    let _ = writeln!(out, "steps: {}  converged: {}", opt(&d.steps), opt(&d.converged));
    let _ = writeln!(out, "cross-method deviation: {}", opt(&d.cross_method_max_deviation.map(num)));
    if let Some(obs) = &d.obstructions {
        let _ = writeln!(out, "obstructions: {}", obs.len());
        for o in obs {
            let _ = writeln!(out, "  lambda = {}  overlap {}", complex(o.eigenvalue), num(o.overlap));
        }
    }
    for w in &d.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    let _ = writeln!(out, "vertex  probability");
    for (v, p) in r.vertices.iter().zip(&r.limit_probability) {
        let _ = writeln!(out, "{v:>6}  {}", num(*p));
    }
    if let Some(t) = &d.ladder {
        let _ = writeln!(
            out,
            "ladder m={} l={} k={} kappa={} residual={}",
            t.m,
            t.l,
            t.k,
            num(t.kappa),
            num(t.residual_norm_sq)
        );
        let _ = writeln!(out, "   i  left                    top");
        for row in &t.rows {
            let _ = writeln!(out, "{:>4}  {:<22}  {}", row.i, num(row.left), opt(&row.top.map(num)));
        }
        let _ = writeln!(out, "monotone: left {} top {}", t.monotone.left, t.monotone.top);
    }
    out
}

pub fn spectrum_text(r: &SpectrumReport) -> String {
    let mut out = format!(
        "vertices: {}  arcs: {}  sink: {}  bipartite: {}\nminus-one dimension: {}\nobstructions: {}\n",
        r.vertices,
        r.arcs,
        r.sink,
        r.bipartite,
        r.minus_one_dim,
        r.obstructions.len()
    );
    for o in &r.obstructions {
        let _ = writeln!(out, "  lambda = {}  overlap {}", complex(o.eigenvalue), num(o.overlap));
    }
    out
}

/// Plain PGM with one pixel per cell: `round(255 μ / max μ)`, walls black.
pub fn heatmap(grid: &GridMaze, probabilities: &[f64]) -> String {
    let top = probabilities.iter().copied().fold(0.0, f64::max);
    let ids = grid.cell_vertices();
    let mut out = format!("P2\n{} {}\n255\n", grid.width, grid.height);
    for row in ids.chunks(grid.width) {
        let line: Vec<String> = row
            .iter()
            .map(|id| match id {
                Some(v) if top > 0.0 => ((255.0 * probabilities[*v] / top).round() as u8).to_string(),
                _ => "0".to_string(),
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heatmap_scales_to_the_maximum() {
        let grid = GridMaze::parse("S#\n.G").unwrap();
        let pgm = heatmap(&grid, &[0.5, 0.25, 0.125]);
        assert_eq!(pgm, "P2\n2 2\n255\n255 0\n128 64\n");
    }
}
