//! Invariant suite over a seeded corpus.

use grovermaze::graph::{
    betti_number, bfs_shortest_path, cycle_graph, decorate, make_random_tree, path_graph, path_vertices, SinkPlacement,
};
use grovermaze::ladder::{
    chebyshev_inequalities, check_monotone, decorated_ladder, ChebyshevCache, ClosedForm, LadderParams,
};
use grovermaze::spectral::{
    limit_distribution, minus_one_eigenspace, minus_one_residual, navigation_vector, path_eigenvector,
    unimodular_obstruction,
};
use grovermaze::walk::{converge_power, grover_step, project_sink, vertex_probabilities, ArcVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    /// Flips the sign of the `u_{n−2}` term in the Chebyshev recurrence.
    ChebyshevSign,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

pub fn run(seed: u64, fault: Option<Fault>) -> VerifyReport {
    let checks = vec![
        tree_localization(seed),
        dimension_law(seed),
        ladder_closed_form(fault),
        ladder_monotonicity(fault),
        walk_norms(seed),
        power_matches_spectral(),
        sink_at_start_is_clear(seed),
    ];
    VerifyReport { seed, passed: checks.iter().all(|c| c.passed), checks }
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check { name, passed, detail }
}

fn random_trees(seed: u64, count: usize) -> Vec<(usize, usize, usize, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(5..=40);
            let s = rng.random_range(0..n);
            let g = (s + rng.random_range(1..n)) % n;
            (n, s, g, rng.random())
        })
        .collect()
}

fn tree_localization(seed: u64) -> Check {
    let mut worst = 0.0f64;
    let mut bad = 0;
    for (n, s, goal, tree_seed) in random_trees(seed, 30) {
        let tree = make_random_tree(n, tree_seed).expect("n >= 5");
        let route = path_vertices(&tree, s, &bfs_shortest_path(&tree, s, goal));
        let g = decorate(tree, s, goal, SinkPlacement::AtStart).expect("s != g");
        let lim = limit_distribution(&g, &navigation_vector(&g).expect("trees reach the start"));
        let level = lim.probabilities[s];
        let dev = lim
            .probabilities
            .iter()
            .enumerate()
            .map(|(v, p)| if route.contains(&v) { (p - level).abs() } else { p.abs() })
            .fold(0.0, f64::max);
        worst = worst.max(dev);
        if dev > 1e-10 || level <= 0.0 {
            bad += 1;
        }
    }
    check("tree localization", bad == 0, format!("30 trees, {bad} bad, worst deviation {worst:.1e}"))
}

fn dimension_law(seed: u64) -> Check {
    let mut graphs = Vec::new();
    for (n, s, goal, tree_seed) in random_trees(seed ^ 0x5eed, 10) {
        graphs.push(decorate(make_random_tree(n, tree_seed).unwrap(), s, goal, SinkPlacement::AtStart).unwrap());
    }
    for n in (4..=12).step_by(2) {
        graphs.push(decorate(cycle_graph(n), 0, n / 2, SinkPlacement::AtStart).unwrap());
    }
    for (m, l, k) in [(1, 1, 0), (2, 1, 1), (1, 2, 2), (3, 3, 1)] {
        graphs.push(decorated_ladder(LadderParams::new(m, l, k).unwrap()).1);
    }
    let bad = graphs.iter().filter(|g| minus_one_eigenspace(g).len() != betti_number(g.base()) + 1).count();
    check("minus-one dimension = cycle rank + 1", bad == 0, format!("{} graphs, {bad} bad", graphs.len()))
}

/// Chebyshev values for `x`, with the sign of the `u_{n−2}` term flipped
/// when the fault is injected.
fn cache(params: &LadderParams, fault: Option<Fault>) -> ChebyshevCache {
    match fault {
        None => ChebyshevCache::for_params(params).expect("small ladder"),
        Some(Fault::ChebyshevSign) => {
            let two_x = 2.0 * params.x();
            let mut u = vec![1.0, two_x];
            while u.len() < params.k + 3 {
                let n = u.len();
                u.push(two_x * u[n - 1] + u[n - 2]);
            }
            ChebyshevCache::from_values(u)
        }
    }
}

fn ladder_closed_form(fault: Option<Fault>) -> Check {
    let mut worst = 0.0f64;
    let mut count = 0;
    for m in 1..=3 {
        for l in 1..=3 {
            for k in 0..=3 {
                let params = LadderParams::new(m, l, k).unwrap();
                let form = ClosedForm::with_cache(params, cache(&params, fault)).unwrap();
                let (ladder, g) = decorated_ladder(params);
                let nav = navigation_vector(&g).unwrap();
                worst = worst.max(form.assemble(&ladder, &g).max_abs_diff(&nav.vector));
                worst = worst.max((form.start_amplitude() - nav.start_amplitude).abs());
                count += 1;
            }
        }
    }
    check("ladder closed form", worst < 1e-10, format!("{count} ladders, max deviation {worst:.1e}"))
}

fn ladder_monotonicity(fault: Option<Fault>) -> Check {
    let mut bad = 0;
    let mut count = 0;
    for m in 1..=8 {
        for l in 1..=8 {
            for k in [1, 4, 16, 64] {
                let params = LadderParams::new(m, l, k).unwrap();
                let form = ClosedForm::with_cache(params, cache(&params, fault)).unwrap();
                let mono = check_monotone(&form);
                if !(mono.left && mono.top && chebyshev_inequalities(&form).all()) {
                    bad += 1;
                }
                count += 1;
            }
        }
    }
    check("ladder monotonicity", bad == 0, format!("{count} parameter sets, {bad} bad"))
}

fn walk_norms(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6e6f726d);
    let g = decorate(cycle_graph(8), 0, 5, SinkPlacement::AtStart).unwrap();
    let mut worst = 0.0f64;
    let mut growth = 0.0f64;
    for _ in 0..200 {
        let xi = ArcVector::from_complex(
            (0..g.arc_count())
                .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect(),
        );
        let u = grover_step(&g, &xi).unwrap();
        worst = worst.max((u.norm() - xi.norm()).abs());
        growth = growth.max(project_sink(&g, &u).unwrap().norm() - xi.norm());
    }
    let ok = worst < 1e-12 && growth <= 1e-12;
    check("unitarity and contraction", ok, format!("max norm change {worst:.1e}, max PU growth {growth:.1e}"))
}

fn power_matches_spectral() -> Check {
    let graphs = [
        decorate(path_graph(3), 0, 2, SinkPlacement::AtStart).unwrap(),
        decorate(cycle_graph(4), 0, 2, SinkPlacement::AtStart).unwrap(),
    ];
    let mut worst = 0.0f64;
    let mut stalled = 0;
    for g in &graphs {
        let run = converge_power(g, 1e-12, 100_000);
        if !run.converged {
            stalled += 1;
        }
        let mu = vertex_probabilities(g, &run.limit).unwrap();
        let lim = limit_distribution(g, &navigation_vector(g).unwrap());
        worst = mu.iter().zip(&lim.probabilities).map(|(a, b)| (a - b).abs()).fold(worst, f64::max);
    }
    check(
        "power iteration matches the limit formula",
        stalled == 0 && worst < 1e-8,
        format!("{} graphs, {stalled} stalled, max deviation {worst:.1e}", graphs.len()),
    )
}

fn sink_at_start_is_clear(seed: u64) -> Check {
    let mut bad = 0;
    let mut worst = 0.0f64;
    let trees = random_trees(seed ^ 0x0b57, 5);
    for &(n, s, goal, tree_seed) in &trees {
        let tree = make_random_tree(n, tree_seed).unwrap();
        let path = bfs_shortest_path(&tree, s, goal);
        let g = decorate(tree, s, goal, SinkPlacement::AtStart).unwrap();
        if !unimodular_obstruction(&g).is_clear() {
            bad += 1;
        }
        worst = worst.max(minus_one_residual(&g, &path_eigenvector(&g, &path).unwrap()));
    }
    check(
        "no obstruction with the sink at the start",
        bad == 0 && worst < 1e-12,
        format!("{} trees, {bad} obstructed, path vector residual {worst:.1e}", trees.len()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fault_changes_the_recurrence() {
        let params = LadderParams::new(2, 1, 2).unwrap();
        assert_eq!(cache(&params, None).values()[..4], [1.0, 3.0, 8.0, 21.0]);
        assert_eq!(cache(&params, Some(Fault::ChebyshevSign)).values()[..4], [1.0, 3.0, 10.0, 33.0]);
    }
}
