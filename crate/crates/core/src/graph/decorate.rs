use serde::{Deserialize, Serialize};

use super::{is_bipartite, Arc, ArcId, GraphError, SymmetricDigraph, VertexId};

/// Which vertex the sink hangs off.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SinkPlacement {
    #[serde(rename = "start")]
    AtStart,
    #[serde(rename = "goal")]
    AtGoal,
}

/// The graph the walk actually runs on: the maze plus a self-loop at the
/// start and at the goal, and a sink vertex joined to the start (or goal) by
/// the arc pair `d` / `d̄`.
///
/// Arc ids of the underlying graph are kept, and the four new arcs are
/// appended in the order start loop, goal loop, `d`, `d̄`. The sink vertex
/// takes the id `base.vertex_count()`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecoratedGraph {
    base: SymmetricDigraph,
    start: VertexId,
    goal: VertexId,
    placement: SinkPlacement,
    arcs: Vec<Arc>,
    degree: Vec<usize>,
    bipartite: bool,
}

/// Adds the start/goal self-loops and the sink to `base`.
pub fn decorate(
    base: SymmetricDigraph,
    start: VertexId,
    goal: VertexId,
    placement: SinkPlacement,
) -> Result<DecoratedGraph, GraphError> {
    let count = base.vertex_count();
    for v in [start, goal] {
        if v >= count {
            return Err(GraphError::VertexOutOfRange { vertex: v, count });
        }
    }
    if start == goal {
        return Err(GraphError::StartIsGoal(start));
    }

    let mut arcs = base.arcs().to_vec();
    let start_loop = arcs.len();
    arcs.push(Arc { origin: start, terminal: start, inverse: start_loop });
    arcs.push(Arc { origin: goal, terminal: goal, inverse: start_loop + 1 });
    let sink_vertex = count;
    let anchor = match placement {
        SinkPlacement::AtStart => start,
        SinkPlacement::AtGoal => goal,
    };
    let sink_arc = start_loop + 2;
    arcs.push(Arc { origin: anchor, terminal: sink_vertex, inverse: sink_arc + 1 });
    arcs.push(Arc { origin: sink_vertex, terminal: anchor, inverse: sink_arc });

    let mut degree = vec![0; count + 1];
    for arc in &arcs {
        degree[arc.terminal] += 1;
    }
    let bipartite = is_bipartite(&base);

    Ok(DecoratedGraph { base, start, goal, placement, arcs, degree, bipartite })
}

impl DecoratedGraph {
    pub fn base(&self) -> &SymmetricDigraph {
        &self.base
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn goal(&self) -> VertexId {
        self.goal
    }

    pub fn placement(&self) -> SinkPlacement {
        self.placement
    }

    /// Vertex count including the sink.
    pub fn vertex_count(&self) -> usize {
        self.degree.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, a: ArcId) -> Arc {
        self.arcs[a]
    }

    /// Number of arcs ending at `v` (equivalently, starting at `v`).
    pub fn degree(&self, v: VertexId) -> usize {
        self.degree[v]
    }

    pub fn start_loop(&self) -> ArcId {
        self.base.arc_count()
    }

    pub fn goal_loop(&self) -> ArcId {
        self.base.arc_count() + 1
    }

    /// The arc `d` from the anchor vertex into the sink.
    pub fn sink_arc(&self) -> ArcId {
        self.base.arc_count() + 2
    }

    /// The arc `d̄` from the sink back to the anchor vertex.
    pub fn sink_return(&self) -> ArcId {
        self.base.arc_count() + 3
    }

    pub fn sink_vertex(&self) -> VertexId {
        self.base.vertex_count()
    }

    /// The vertex the sink is attached to, `o(d)`.
    pub fn anchor(&self) -> VertexId {
        self.arcs[self.sink_arc()].origin
    }

    pub fn is_sink_arc(&self, a: ArcId) -> bool {
        a == self.sink_arc() || a == self.sink_return()
    }

    pub fn is_base_arc(&self, a: ArcId) -> bool {
        a < self.base.arc_count()
    }

    /// Whether the underlying maze is bipartite. The walk is still
    /// well defined otherwise, but the eigenspace dimension law and the
    /// even-cycle constructions no longer cover every cycle.
    pub fn underlying_bipartite(&self) -> bool {
        self.bipartite
    }
}
