use std::fmt;
use std::fs;
use std::path::Path;

use grovermaze::graph::{make_ladder, make_random_tree, parse_edge_list, GridMaze, Ladder, Maze};
use grovermaze::ladder::LadderParams;

/// An input failure, reported with exit status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub struct Loaded {
    pub maze: Maze,
    /// Present for grid-maze files, needed by the heatmap.
    pub grid: Option<GridMaze>,
    pub ladder: Option<Ladder>,
}

pub fn load_file(path: &Path) -> Result<Loaded, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let is_json = path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
    if is_json {
        return Ok(Loaded { maze: parse_edge_list(&text)?, grid: None, ladder: None });
    }
    let grid = GridMaze::parse(&text)?;
    Ok(Loaded { maze: grid.to_maze()?, grid: Some(grid), ladder: None })
}

pub fn load_ladder(m: usize, l: usize, k: usize) -> Result<Loaded, InputError> {
    let ladder = make_ladder(LadderParams::new(m, l, k)?);
    Ok(Loaded { maze: ladder.maze.clone(), grid: None, ladder: Some(ladder) })
}

/// Random tree with the start at vertex 0 and the goal at vertex `n − 1`.
pub fn load_tree(n: usize, seed: u64) -> Result<Loaded, InputError> {
    if n < 2 {
        return Err(InputError("a tree maze needs at least 2 vertices".into()));
    }
    let maze = Maze::new(make_random_tree(n, seed)?, 0, n - 1)?;
    Ok(Loaded { maze, grid: None, ladder: None })
}

/// Parses `a,b` or `a,b,c` into exactly `N` integers.
pub fn parse_tuple<const N: usize>(s: &str) -> Result<[u64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated integers, got {s:?}"));
    }
    let mut out = [0; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| format!("{p:?} is not a non-negative integer"))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples() {
        assert_eq!(parse_tuple::<3>("2,1,1"), Ok([2, 1, 1]));
        assert_eq!(parse_tuple::<2>(" 9 , 3"), Ok([9, 3]));
        assert!(parse_tuple::<2>("1,2,3").is_err());
        assert!(parse_tuple::<2>("1,-2").is_err());
    }

    #[test]
    fn trees_need_two_vertices() {
        assert!(load_tree(1, 0).is_err());
        let t = load_tree(6, 2).unwrap();
        assert_eq!((t.maze.start, t.maze.goal), (0, 5));
    }
}
