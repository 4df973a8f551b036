//! Symmetric digraphs, their decoration with self-loops and a sink, maze
//! front ends, generators and the classical oracles (BFS, bipartiteness,
//! Betti number) the walk results are checked against.
//!
//! Every undirected edge `{u, v}` becomes two arcs that are each other's
//! inverse. Edge `e` owns arc ids `2e` (in the direction the edge was given)
//! and `2e + 1`, so arc ids are stable and deterministic for a fixed edge list.

mod decorate;
mod generate;
mod parse;
mod search;

use thiserror::Error;

pub use decorate::{decorate, DecoratedGraph, SinkPlacement};
pub use generate::{cycle_graph, make_ladder, make_random_tree, path_graph, route_with_cycle, Ladder, LadderArc};
pub use parse::{parse_edge_list, parse_grid_maze, EdgeList, GridMaze, ParseError};
pub use search::{betti_number, bfs_path_within, bfs_shortest_path, is_bipartite, path_vertices};

pub type VertexId = usize;
pub type ArcId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} is out of range for {count} vertices")]
    VertexOutOfRange { vertex: VertexId, count: usize },
    #[error("self-loop at vertex {0} in the underlying graph")]
    SelfLoop(VertexId),
    #[error("edge {0}-{1} appears more than once")]
    MultipleEdge(VertexId, VertexId),
    #[error("graph is not connected")]
    Disconnected,
    #[error("start and goal are both vertex {0}")]
    StartIsGoal(VertexId),
    #[error("a random tree needs at least 2 vertices, got {0}")]
    TreeTooSmall(usize),
    #[error("inconsistent arc table: {0}")]
    BrokenArcTable(String),
}

/// One directed arc. For self-loops `inverse` is the arc itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub origin: VertexId,
    pub terminal: VertexId,
    pub inverse: ArcId,
}

/// A finite, connected, simple graph stored as paired arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricDigraph {
    vertex_count: usize,
    arcs: Vec<Arc>,
    out: Vec<Vec<ArcId>>,
}

impl SymmetricDigraph {
    /// Builds the graph from an undirected edge list and checks that it is
    /// simple and connected.
    pub fn from_edges(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        let mut arcs = Vec::with_capacity(2 * edges.len());
        let mut out = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: w, count: vertex_count });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::MultipleEdge(u, v));
            }
            let a = arcs.len();
            arcs.push(Arc { origin: u, terminal: v, inverse: a + 1 });
            arcs.push(Arc { origin: v, terminal: u, inverse: a });
            out[u].push(a);
            out[v].push(a + 1);
        }
        let graph = SymmetricDigraph { vertex_count, arcs, out };
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn edge_count(&self) -> usize {
        self.arcs.len() / 2
    }

    pub fn arc(&self, a: ArcId) -> Arc {
        self.arcs[a]
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Arcs leaving `v`, in increasing arc id order.
    pub fn out_arcs(&self, v: VertexId) -> &[ArcId] {
        &self.out[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.out[v].len()
    }

    /// Undirected edges in the order they were given.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.arcs.iter().step_by(2).map(|a| (a.origin, a.terminal))
    }

    pub fn find_arc(&self, from: VertexId, to: VertexId) -> Option<ArcId> {
        self.out.get(from)?.iter().copied().find(|&a| self.arcs[a].terminal == to)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &a in &self.out[v] {
                let w = self.arcs[a].terminal;
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// Exhaustive structural check: inverse is an involution that swaps
    /// origin and terminal, the adjacency lists agree with the arc table, no
    /// loops or parallel arcs, and the graph is connected.
    pub fn check_invariants(&self) -> Result<(), GraphError> {
        let broken = |msg: String| Err(GraphError::BrokenArcTable(msg));
        let mut pairs = std::collections::HashSet::new();
        for (id, arc) in self.arcs.iter().enumerate() {
            let inv = match self.arcs.get(arc.inverse) {
                Some(inv) => inv,
                None => return broken(format!("arc {id} has dangling inverse")),
            };
            if inv.inverse != id {
                return broken(format!("inverse of arc {id} is not an involution"));
            }
            if inv.origin != arc.terminal || inv.terminal != arc.origin {
                return broken(format!("arc {id} and its inverse disagree on endpoints"));
            }
            if arc.origin == arc.terminal {
                return Err(GraphError::SelfLoop(arc.origin));
            }
            if !pairs.insert((arc.origin, arc.terminal)) {
                return Err(GraphError::MultipleEdge(arc.origin, arc.terminal));
            }
            if !self.out[arc.origin].contains(&id) {
                return broken(format!("arc {id} missing from the adjacency of {}", arc.origin));
            }
        }
        if self.out.iter().map(Vec::len).sum::<usize>() != self.arcs.len() {
            return broken("adjacency lists hold extra arcs".into());
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(())
    }
}

/// A maze: the underlying graph together with its start and goal vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Maze {
    pub graph: SymmetricDigraph,
    pub start: VertexId,
    pub goal: VertexId,
}

impl Maze {
    pub fn new(graph: SymmetricDigraph, start: VertexId, goal: VertexId) -> Result<Self, GraphError> {
        let count = graph.vertex_count();
        for v in [start, goal] {
            if v >= count {
                return Err(GraphError::VertexOutOfRange { vertex: v, count });
            }
        }
        Ok(Maze { graph, start, goal })
    }

    pub fn decorate(&self, placement: SinkPlacement) -> Result<DecoratedGraph, GraphError> {
        decorate(self.graph.clone(), self.start, self.goal, placement)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arcs_pair_up() {
        let g = SymmetricDigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.arc_count(), 4);
        assert_eq!(g.arc(0), Arc { origin: 0, terminal: 1, inverse: 1 });
        assert_eq!(g.arc(3), Arc { origin: 2, terminal: 1, inverse: 2 });
        assert_eq!(g.find_arc(2, 1), Some(3));
        assert_eq!(g.find_arc(0, 2), None);
        g.check_invariants().unwrap();
    }

    #[test]
    fn rejects_bad_edge_lists() {
        assert_eq!(SymmetricDigraph::from_edges(0, &[]), Err(GraphError::Empty));
        assert_eq!(SymmetricDigraph::from_edges(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(SymmetricDigraph::from_edges(2, &[(0, 1), (1, 0)]), Err(GraphError::MultipleEdge(1, 0)));
        assert_eq!(SymmetricDigraph::from_edges(3, &[(0, 1)]), Err(GraphError::Disconnected));
        assert_eq!(
            SymmetricDigraph::from_edges(2, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, count: 2 })
        );
    }

    #[test]
    fn single_vertex_is_connected() {
        let g = SymmetricDigraph::from_edges(1, &[]).unwrap();
        assert_eq!(g.arc_count(), 0);
    }
}
