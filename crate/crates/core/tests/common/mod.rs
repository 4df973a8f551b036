#![allow(dead_code)]

use grovermaze::graph::{
    cycle_graph, decorate, make_random_tree, parse_grid_maze, DecoratedGraph, Maze, SinkPlacement,
};
use grovermaze::ladder::{decorated_ladder, LadderParams};

pub struct CorpusGraph {
    pub name: String,
    pub maze: Maze,
    pub graph: DecoratedGraph,
}

/// Grid mazes, even cycles, small random trees and small ladders, all with
/// the sink at the start. Every member is bipartite and converges under
/// power iteration within a million steps.
pub fn corpus() -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    let mut push = |name: String, maze: Maze| {
        let graph = maze.decorate(SinkPlacement::AtStart).unwrap();
        out.push(CorpusGraph { name, maze, graph });
    };
    let grids = [
        ("grid S.G", "S.G"),
        ("grid L", "S#\n.G"),
        ("grid ring", "S..\n.#.\n..G"),
        ("grid 2x3", "S..\n..G"),
        ("grid corridor", "S...G"),
    ];
    for (name, text) in grids {
        push(name.into(), parse_grid_maze(text).unwrap());
    }
    push("cycle 4".into(), Maze::new(cycle_graph(4), 0, 2).unwrap());
    push("cycle 6".into(), Maze::new(cycle_graph(6), 0, 3).unwrap());
    let trees = [
        (5, 0),
        (5, 1),
        (5, 2),
        (5, 3),
        (6, 0),
        (6, 1),
        (6, 2),
        (7, 1),
        (7, 3),
        (8, 1),
        (8, 2),
        (8, 3),
        (9, 1),
        (9, 3),
    ];
    for (n, seed) in trees {
        push(format!("tree {n}/{seed}"), Maze::new(make_random_tree(n, seed).unwrap(), 0, n - 1).unwrap());
    }
    for (m, l, k) in [(1, 1, 0), (2, 1, 0), (1, 1, 1), (2, 1, 1), (1, 2, 0)] {
        let (ladder, _) = decorated_ladder(LadderParams::new(m, l, k).unwrap());
        push(format!("ladder ({m},{l},{k})"), ladder.maze);
    }
    out
}

pub fn decorated_tree(n: usize, seed: u64, s: usize, g: usize) -> DecoratedGraph {
    decorate(make_random_tree(n, seed).unwrap(), s, g, SinkPlacement::AtStart).unwrap()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
