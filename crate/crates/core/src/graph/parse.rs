//! Text front ends for mazes.
//!
//! Grid mazes use `#` for walls, `.` for open cells and `S` / `G` for the
//! start and goal cells. Open cells become vertices numbered row-major and
//! 4-neighbour open cells are joined by an edge.
//!
//! Edge lists are JSON: `{"vertices": N, "edges": [[u, v], ...], "start": s, "goal": g}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{GraphError, Maze, SymmetricDigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("maze is empty")]
    Empty,
    #[error("line {line} has width {found}, expected {expected}")]
    NonRectangular { line: usize, expected: usize, found: usize },
    #[error("unexpected character {ch:?} at line {line}, column {column}")]
    InvalidChar { ch: char, line: usize, column: usize },
    #[error("maze has no start cell")]
    MissingStart,
    #[error("maze has more than one start cell")]
    DuplicateStart,
    #[error("maze has no goal cell")]
    MissingGoal,
    #[error("maze has more than one goal cell")]
    DuplicateGoal,
    #[error("open cells are not connected")]
    Disconnected,
    #[error("invalid edge list: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A rectangular grid maze.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridMaze {
    pub width: usize,
    pub height: usize,
    /// Row-major open flags.
    pub open: Vec<bool>,
    /// `(row, column)` of the start cell.
    pub start_cell: (usize, usize),
    pub goal_cell: (usize, usize),
}

impl GridMaze {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let lines: Vec<&str> = text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l)).collect();
        // trailing blank lines are tolerated, blank lines inside are not
        let used = lines.iter().rposition(|l| !l.is_empty()).map_or(0, |i| i + 1);
        let lines = &lines[..used];
        if lines.is_empty() {
            return Err(ParseError::Empty);
        }
        let width = lines[0].chars().count();
        let mut open = Vec::with_capacity(width * lines.len());
        let (mut start, mut goal) = (None, None);
        for (row, line) in lines.iter().enumerate() {
            let found = line.chars().count();
            if found != width {
                return Err(ParseError::NonRectangular { line: row + 1, expected: width, found });
            }
            for (col, ch) in line.chars().enumerate() {
                match ch {
                    '#' => open.push(false),
                    '.' => open.push(true),
                    'S' => {
                        if start.replace((row, col)).is_some() {
                            return Err(ParseError::DuplicateStart);
                        }
                        open.push(true);
                    }
                    'G' => {
                        if goal.replace((row, col)).is_some() {
                            return Err(ParseError::DuplicateGoal);
                        }
                        open.push(true);
                    }
                    _ => return Err(ParseError::InvalidChar { ch, line: row + 1, column: col + 1 }),
                }
            }
        }
        let start_cell = start.ok_or(ParseError::MissingStart)?;
        let goal_cell = goal.ok_or(ParseError::MissingGoal)?;
        Ok(GridMaze { width, height: lines.len(), open, start_cell, goal_cell })
    }

    /// Vertex id of every cell, `None` for walls.
    pub fn cell_vertices(&self) -> Vec<Option<VertexId>> {
        let mut next = 0;
        self.open
            .iter()
            .map(|&o| {
                o.then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    }

    pub fn to_maze(&self) -> Result<Maze, ParseError> {
        let ids = self.cell_vertices();
        let count = ids.iter().flatten().count();
        let mut edges = Vec::new();
        for r in 0..self.height {
            for c in 0..self.width {
                let Some(v) = ids[r * self.width + c] else { continue };
                if c + 1 < self.width {
                    if let Some(w) = ids[r * self.width + c + 1] {
                        edges.push((v, w));
                    }
                }
                if r + 1 < self.height {
                    if let Some(w) = ids[(r + 1) * self.width + c] {
                        edges.push((v, w));
                    }
                }
            }
        }
        let graph = SymmetricDigraph::from_edges(count, &edges).map_err(|e| match e {
            GraphError::Disconnected => ParseError::Disconnected,
            other => ParseError::Graph(other),
        })?;
        let cell = |(r, c): (usize, usize)| ids[r * self.width + c].expect("start and goal are open");
        Ok(Maze::new(graph, cell(self.start_cell), cell(self.goal_cell))?)
    }
}

/// Parses an ASCII grid maze straight into a [`Maze`].
pub fn parse_grid_maze(text: &str) -> Result<Maze, ParseError> {
    GridMaze::parse(text)?.to_maze()
}

/// On-disk edge-list format, 0-based vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeList {
    pub vertices: usize,
    pub edges: Vec<[VertexId; 2]>,
    pub start: VertexId,
    pub goal: VertexId,
}

impl EdgeList {
    pub fn from_maze(maze: &Maze) -> Self {
        EdgeList {
            vertices: maze.graph.vertex_count(),
            edges: maze.graph.edges().map(|(u, v)| [u, v]).collect(),
            start: maze.start,
            goal: maze.goal,
        }
    }

    pub fn to_maze(&self) -> Result<Maze, ParseError> {
        let edges: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let graph = SymmetricDigraph::from_edges(self.vertices, &edges)?;
        Ok(Maze::new(graph, self.start, self.goal)?)
    }
}

pub fn parse_edge_list(json: &str) -> Result<Maze, ParseError> {
    let list: EdgeList = serde_json::from_str(json).map_err(|e| ParseError::Json(e.to_string()))?;
    list.to_maze()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_maze_is_a_path() {
        let maze = parse_grid_maze("S.G").unwrap();
        assert_eq!(maze.graph.vertex_count(), 3);
        assert_eq!(maze.graph.arc_count(), 4);
        assert_eq!((maze.start, maze.goal), (0, 2));
    }

    #[test]
    fn l_shaped_maze() {
        // cells (0,0)=S, (1,0)=., (1,1)=G; (0,1) is a wall
        let maze = parse_grid_maze("S#\n.G\n").unwrap();
        assert_eq!(maze.graph.vertex_count(), 3);
        let mut edges: Vec<_> = maze.graph.edges().collect();
        edges.sort();
        assert_eq!(edges, vec![(0, 1), (1, 2)]);
        assert_eq!((maze.start, maze.goal), (0, 2));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(parse_grid_maze("SG\n#S"), Err(ParseError::DuplicateStart));
        assert_eq!(parse_grid_maze("SG\nG."), Err(ParseError::DuplicateGoal));
        assert_eq!(parse_grid_maze("..G"), Err(ParseError::MissingStart));
        assert_eq!(parse_grid_maze("S.."), Err(ParseError::MissingGoal));
        assert_eq!(parse_grid_maze("S.G\n.."), Err(ParseError::NonRectangular { line: 2, expected: 3, found: 2 }));
        assert_eq!(parse_grid_maze("S.x\n..G"), Err(ParseError::InvalidChar { ch: 'x', line: 1, column: 3 }));
        assert_eq!(parse_grid_maze("S#G"), Err(ParseError::Disconnected));
        assert_eq!(parse_grid_maze("S.#\n##.\nG.#"), Err(ParseError::Disconnected));
        assert_eq!(parse_grid_maze("\n\n"), Err(ParseError::Empty));
    }

    #[test]
    fn crlf_and_trailing_blank_lines() {
        let maze = parse_grid_maze("S.\r\n.G\r\n\r\n").unwrap();
        assert_eq!(maze.graph.vertex_count(), 4);
        assert_eq!(maze.graph.edge_count(), 4);
    }

    #[test]
    fn edge_list_roundtrip() {
        let json = r#"{"vertices": 4, "edges": [[0,1],[1,2],[2,3],[3,0]], "start": 0, "goal": 2}"#;
        let maze = parse_edge_list(json).unwrap();
        assert_eq!(maze.graph.edge_count(), 4);
        let back = EdgeList::from_maze(&maze);
        assert_eq!(back.to_maze().unwrap(), maze);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("{"), Err(ParseError::Json(_))));
        assert_eq!(
            parse_edge_list(r#"{"vertices": 3, "edges": [[0,1]], "start": 0, "goal": 1}"#),
            Err(ParseError::Graph(GraphError::Disconnected))
        );
        assert_eq!(
            parse_edge_list(r#"{"vertices": 2, "edges": [[0,1]], "start": 0, "goal": 7}"#),
            Err(ParseError::Graph(GraphError::VertexOutOfRange { vertex: 7, count: 2 }))
        );
    }
}
