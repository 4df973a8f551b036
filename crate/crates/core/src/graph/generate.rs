use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ArcId, GraphError, Maze, SymmetricDigraph, VertexId};
use crate::ladder::LadderParams;

/// Path `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> SymmetricDigraph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    SymmetricDigraph::from_edges(n, &edges).expect("paths are simple and connected")
}

/// Cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
pub fn cycle_graph(n: usize) -> SymmetricDigraph {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    SymmetricDigraph::from_edges(n, &edges).expect("cycles are simple and connected")
}

/// Random recursive tree: vertex `i` attaches to a uniformly chosen earlier
/// vertex. Deterministic for a fixed seed.
pub fn make_random_tree(n: usize, seed: u64) -> Result<SymmetricDigraph, GraphError> {
    if n < 2 {
        return Err(GraphError::TreeTooSmall(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    SymmetricDigraph::from_edges(n, &edges)
}

/// Route `s – v – g` (vertices 0, 1, 2) plus a cycle of `cycle_len` edges
/// through the middle vertex `v`.
pub fn route_with_cycle(cycle_len: usize) -> Maze {
    assert!(cycle_len >= 3, "a simple cycle needs at least 3 edges");
    let mut edges = vec![(0, 1), (1, 2)];
    let ring: Vec<VertexId> = std::iter::once(1).chain(3..cycle_len + 2).collect();
    for i in 0..cycle_len {
        edges.push((ring[i], ring[(i + 1) % cycle_len]));
    }
    let graph = SymmetricDigraph::from_edges(cycle_len + 2, &edges).expect("simple and connected");
    Maze::new(graph, 0, 2).expect("start and goal exist")
}

/// Which part of a ladder an underlying arc belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LadderArc {
    /// The two edges joining the start and goal to rung 0.
    Tail,
    /// Rung `i`, shared by cycles `i - 1` and `i` (rung 0 lies on the route,
    /// rung `k + 1` belongs to the last cycle only).
    Rung(usize),
    TopRail(usize),
    BottomRail(usize),
}

/// A chain of `k + 1` rectangular cycles.
///
/// Rungs are vertical paths of `m` edges at horizontal positions
/// `0, l, 2l, ..., (k+1)l`; consecutive rungs are joined at the top and the
/// bottom by rails of `l` edges, so cycle `i` has circumference `2(m + l)`
/// and consecutive cycles share rung `i`. The start hangs below rung 0 and
/// the goal above it, so the unique shortest route climbs rung 0 and has
/// `m + 2` arcs.
#[derive(Debug, Clone, PartialEq)]
pub struct Ladder {
    pub params: LadderParams,
    pub maze: Maze,
    /// Route arcs from start to goal.
    pub route: Vec<ArcId>,
    /// Closed arc sequences of the cycles, each oriented so that the
    /// alternating-sign cycle vectors overlap the route vector (cycle 0) and
    /// their predecessor (cycle `i >= 1`) non-negatively.
    pub cycles: Vec<Vec<ArcId>>,
    /// Upward arcs of each rung, bottom to top.
    pub rungs: Vec<Vec<ArcId>>,
    /// Rightward arcs of each cycle's top rail.
    pub top_rails: Vec<Vec<ArcId>>,
    pub bottom_rails: Vec<Vec<ArcId>>,
    roles: Vec<LadderArc>,
}

impl Ladder {
    pub fn role(&self, arc: ArcId) -> LadderArc {
        self.roles[arc]
    }
}

/// Dense `(-1)^i` pattern of an arc sequence, `i` counted from 1. Both
/// directions of every traversed edge carry the sign.
fn pattern(g: &SymmetricDigraph, arcs: &[ArcId]) -> Vec<f64> {
    let mut v = vec![0.0; g.arc_count()];
    for (i, &a) in arcs.iter().enumerate() {
        let sign = if (i + 1) % 2 == 0 { 1.0 } else { -1.0 };
        v[a] = sign;
        v[g.arc(a).inverse] = sign;
    }
    v
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn make_ladder(params: LadderParams) -> Ladder {
    let LadderParams { m, l, k } = params;
    let width = (k + 1) * l;

    let mut ids: BTreeMap<(usize, usize), VertexId> = BTreeMap::new();
    for y in 0..=m {
        for x in 0..=width {
            if x % l == 0 || y == 0 || y == m {
                let next = ids.len();
                ids.insert((y, x), next);
            }
        }
    }
    let at = |x: usize, y: usize| ids[&(y, x)];
    let start = ids.len();
    let goal = start + 1;

    let mut edges = Vec::new();
    let mut add = |u: VertexId, v: VertexId| {
        edges.push((u, v));
        2 * (edges.len() - 1)
    };
    let mut rungs = Vec::with_capacity(k + 2);
    for i in 0..=k + 1 {
        rungs.push((0..m).map(|y| add(at(i * l, y), at(i * l, y + 1))).collect::<Vec<_>>());
    }
    let mut top_rails = Vec::with_capacity(k + 1);
    let mut bottom_rails = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let xs = i * l..(i + 1) * l;
        bottom_rails.push(xs.clone().map(|x| add(at(x, 0), at(x + 1, 0))).collect::<Vec<_>>());
        top_rails.push(xs.map(|x| add(at(x, m), at(x + 1, m))).collect::<Vec<_>>());
    }
    let tail_in = add(start, at(0, 0));
    let tail_out = add(at(0, m), goal);

    let graph = SymmetricDigraph::from_edges(goal + 1, &edges).expect("ladders are simple and connected");

    let mut roles = vec![LadderArc::Tail; graph.arc_count()];
    let mut mark = |arcs: &[ArcId], role: LadderArc| {
        for &a in arcs {
            roles[a] = role;
            roles[a ^ 1] = role;
        }
    };
    for (i, r) in rungs.iter().enumerate() {
        mark(r, LadderArc::Rung(i));
    }
    for i in 0..=k {
        mark(&top_rails[i], LadderArc::TopRail(i));
        mark(&bottom_rails[i], LadderArc::BottomRail(i));
    }

    let mut route = vec![tail_in];
    route.extend(&rungs[0]);
    route.push(tail_out);

    let reversed = |arcs: &[ArcId]| arcs.iter().rev().map(|&a| a ^ 1).collect::<Vec<_>>();
    let mut cycles: Vec<Vec<ArcId>> = Vec::with_capacity(k + 1);
    let route_pattern = pattern(&graph, &route);
    for i in 0..=k {
        let mut cycle = rungs[i].clone();
        cycle.extend(&top_rails[i]);
        cycle.extend(reversed(&rungs[i + 1]));
        cycle.extend(reversed(&bottom_rails[i]));
        let reference = match i {
            0 => route_pattern.clone(),
            _ => pattern(&graph, &cycles[i - 1]),
        };
        if dot(&pattern(&graph, &cycle), &reference) < 0.0 {
            // shifting the starting arc by one flips every sign
            cycle.rotate_left(1);
        }
        cycles.push(cycle);
    }

    // The closed form is only valid for this geometry; check the two scalars
    // it is built from.
    let (mf, lf) = (m as f64, l as f64);
    let route_norm_sq = 2.0 * route.len() as f64 + 2.0;
    assert_eq!(route_norm_sq, 2.0 * (mf + 3.0));
    let cycle_norm_sq = 4.0 * (mf + lf);
    let gamma0_xi = dot(&pattern(&graph, &cycles[0]), &route_pattern) / (cycle_norm_sq * route_norm_sq).sqrt();
    let expected = mf / (2.0 * (lf + mf) * (mf + 3.0)).sqrt();
    assert!((gamma0_xi - expected).abs() < 1e-12, "<gamma_0, xi> = {gamma0_xi}, expected {expected}");
    for pair in cycles.windows(2) {
        let overlap = dot(&pattern(&graph, &pair[0]), &pattern(&graph, &pair[1])) / cycle_norm_sq;
        assert!((overlap - params.kappa()).abs() < 1e-12);
    }

    Ladder {
        params,
        maze: Maze::new(graph, start, goal).expect("start and goal exist"),
        route,
        cycles,
        rungs,
        top_rails,
        bottom_rails,
        roles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{betti_number, bfs_shortest_path, is_bipartite};

    #[test]
    fn random_trees() {
        assert_eq!(make_random_tree(1, 0), Err(GraphError::TreeTooSmall(1)));
        let single = make_random_tree(2, 9).unwrap();
        assert_eq!(single.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let t = make_random_tree(5, 1).unwrap();
        assert_eq!(t.edge_count(), 4);
        assert_eq!(betti_number(&t), 0);
        assert!(is_bipartite(&make_random_tree(50, 7).unwrap()));
        assert_eq!(make_random_tree(30, 11).unwrap(), make_random_tree(30, 11).unwrap());
    }

    #[test]
    fn route_with_nine_cycle() {
        let maze = route_with_cycle(9);
        assert_eq!(maze.graph.vertex_count(), 11);
        assert_eq!(betti_number(&maze.graph), 1);
        assert!(!is_bipartite(&maze.graph));
        assert_eq!(maze.graph.degree(1), 4);
    }

    #[test]
    fn ladder_shape() {
        for (m, l, k) in [(2, 1, 1), (2, 1, 0), (1, 1, 2), (3, 2, 4)] {
            let lad = make_ladder(LadderParams::new(m, l, k).unwrap());
            let g = &lad.maze.graph;
            g.check_invariants().unwrap();
            assert!(is_bipartite(g));
            assert_eq!(betti_number(g), k + 1);
            assert_eq!(lad.cycles.len(), k + 1);
            for c in &lad.cycles {
                assert_eq!(c.len(), 2 * (m + l));
                for w in c.windows(2) {
                    assert_eq!(g.arc(w[0]).terminal, g.arc(w[1]).origin);
                }
                assert_eq!(g.arc(*c.last().unwrap()).terminal, g.arc(c[0]).origin);
            }
            assert_eq!(lad.route.len(), m + 2);
            assert_eq!(bfs_shortest_path(g, lad.maze.start, lad.maze.goal), lad.route);
        }
    }

    #[test]
    fn ladder_roles_cover_every_arc() {
        let lad = make_ladder(LadderParams::new(2, 3, 2).unwrap());
        let g = &lad.maze.graph;
        let count = |pred: fn(LadderArc) -> bool| (0..g.arc_count()).filter(|&a| pred(lad.role(a))).count();
        assert_eq!(count(|r| r == LadderArc::Tail), 4);
        assert_eq!(count(|r| matches!(r, LadderArc::Rung(_))), 2 * 2 * 4);
        assert_eq!(count(|r| matches!(r, LadderArc::TopRail(_))), 2 * 3 * 3);
        assert_eq!(count(|r| matches!(r, LadderArc::BottomRail(_))), 2 * 3 * 3);
    }
}
