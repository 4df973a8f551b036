use std::collections::VecDeque;

use super::{ArcId, SymmetricDigraph, VertexId};

/// Shortest path from `from` to `to` as the list of traversed arcs.
///
/// Adjacency is scanned in increasing arc id order, so among all shortest
/// paths the one with the lexicographically smallest arc id sequence is
/// returned. `from == to` gives an empty path.
pub fn bfs_shortest_path(g: &SymmetricDigraph, from: VertexId, to: VertexId) -> Vec<ArcId> {
    bfs_path_within(g, from, to, |_| true).expect("symmetric digraphs are connected")
}

/// Breadth-first search restricted to the arcs accepted by `allow`.
/// Returns `None` when `to` is unreachable through allowed arcs.
pub fn bfs_path_within(
    g: &SymmetricDigraph,
    from: VertexId,
    to: VertexId,
    allow: impl Fn(ArcId) -> bool,
) -> Option<Vec<ArcId>> {
    let n = g.vertex_count();
    let mut parent: Vec<Option<ArcId>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &a in g.out_arcs(v) {
            if !allow(a) {
                continue;
            }
            let w = g.arc(a).terminal;
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(a);
                queue.push_back(w);
            }
        }
    }
    if !seen[to] {
        return None;
    }
    let mut path = Vec::new();
    let mut v = to;
    while let Some(a) = parent[v] {
        path.push(a);
        v = g.arc(a).origin;
    }
    path.reverse();
    Some(path)
}

/// Vertices visited by an arc path starting at `from`.
pub fn path_vertices(g: &SymmetricDigraph, from: VertexId, arcs: &[ArcId]) -> Vec<VertexId> {
    std::iter::once(from).chain(arcs.iter().map(|&a| g.arc(a).terminal)).collect()
}

pub fn is_bipartite(g: &SymmetricDigraph) -> bool {
    let mut colour: Vec<Option<bool>> = vec![None; g.vertex_count()];
    colour[0] = Some(false);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        let c = colour[v].unwrap();
        for &a in g.out_arcs(v) {
            let w = g.arc(a).terminal;
            match colour[w] {
                None => {
                    colour[w] = Some(!c);
                    queue.push_back(w);
                }
                Some(cw) if cw == c => return false,
                Some(_) => {}
            }
        }
    }
    true
}

/// First Betti number `|E| - |V| + 1` of a connected graph.
pub fn betti_number(g: &SymmetricDigraph) -> usize {
    g.edge_count() + 1 - g.vertex_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, make_random_tree, path_graph};
    use proptest::prelude::*;

    #[test]
    fn path_graph_route() {
        let g = path_graph(3);
        assert_eq!(bfs_shortest_path(&g, 0, 2), vec![0, 2]);
        assert_eq!(path_vertices(&g, 0, &[0, 2]), vec![0, 1, 2]);
        assert!(bfs_shortest_path(&g, 1, 1).is_empty());
    }

    #[test]
    fn four_cycle_tie_goes_to_smallest_arc_ids() {
        // Exhaustive: the two length-2 routes 0->2 are [0, 2] (via 1) and
        // [7, 5] (via 3).
        let g = cycle_graph(4);
        assert_eq!(g.arc(7).origin, 0);
        assert_eq!(g.arc(5).terminal, 2);
        assert_eq!(bfs_shortest_path(&g, 0, 2), vec![0, 2]);
    }

    #[test]
    fn bipartite_and_betti() {
        let tree = make_random_tree(12, 3).unwrap();
        assert!(is_bipartite(&tree));
        assert_eq!(betti_number(&tree), 0);
        assert!(is_bipartite(&cycle_graph(6)));
        assert_eq!(betti_number(&cycle_graph(6)), 1);
        assert!(!is_bipartite(&cycle_graph(3)));
        assert_eq!(betti_number(&cycle_graph(3)), 1);
    }

    #[test]
    fn restricted_search_can_fail() {
        let g = path_graph(4);
        assert_eq!(bfs_path_within(&g, 0, 3, |a| a != 2), None);
    }

    /// Brute-force oracle: all simple paths by DFS, keep the shortest, break
    /// ties by lexicographic arc id order.
    fn brute_force_shortest(g: &SymmetricDigraph, from: VertexId, to: VertexId) -> Vec<ArcId> {
        fn dfs(
            g: &SymmetricDigraph,
            v: VertexId,
            to: VertexId,
            on_path: &mut Vec<bool>,
            path: &mut Vec<ArcId>,
            best: &mut Option<Vec<ArcId>>,
        ) {
            if v == to {
                let better = match best {
                    None => true,
                    Some(b) => (path.len(), &path[..]) < (b.len(), &b[..]),
                };
                if better {
                    *best = Some(path.clone());
                }
                return;
            }
            for &a in g.out_arcs(v) {
                let w = g.arc(a).terminal;
                if !on_path[w] {
                    on_path[w] = true;
                    path.push(a);
                    dfs(g, w, to, on_path, path, best);
                    path.pop();
                    on_path[w] = false;
                }
            }
        }
        let mut on_path = vec![false; g.vertex_count()];
        on_path[from] = true;
        let mut best = None;
        dfs(g, from, to, &mut on_path, &mut Vec::new(), &mut best);
        best.unwrap()
    }

    fn small_connected_graph() -> impl Strategy<Value = SymmetricDigraph> {
        (2usize..8, any::<u64>(), proptest::collection::vec((0usize..8, 0usize..8), 0..10)).prop_map(
            |(n, seed, extra)| {
                let tree = make_random_tree(n, seed).unwrap();
                let mut edges: Vec<_> = tree.edges().collect();
                for (u, v) in extra {
                    let (u, v) = (u % n, v % n);
                    if u != v && !edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
                        edges.push((u, v));
                    }
                }
                SymmetricDigraph::from_edges(n, &edges).unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn bfs_matches_exhaustive_search(g in small_connected_graph(), s in 0usize..8, t in 0usize..8) {
            let n = g.vertex_count();
            let (s, t) = (s % n, t % n);
            prop_assert_eq!(bfs_shortest_path(&g, s, t), brute_force_shortest(&g, s, t));
        }

        #[test]
        fn bipartite_iff_no_odd_closed_walk(g in small_connected_graph()) {
            // Oracle: bipartite iff there is no closed walk of odd length <= n,
            // tracked with boolean powers of the adjacency matrix.
            let n = g.vertex_count();
            let mut adj = vec![vec![0u64; n]; n];
            for (u, v) in g.edges() {
                adj[u][v] = 1;
                adj[v][u] = 1;
            }
            let mut power = adj.clone();
            let mut odd_cycle = false;
            for step in 1..=n {
                if step % 2 == 1 && (0..n).any(|i| power[i][i] > 0) {
                    odd_cycle = true;
                }
                let mut next = vec![vec![0u64; n]; n];
                for i in 0..n {
                    for k in 0..n {
                        if power[i][k] == 0 { continue; }
                        for j in 0..n {
                            next[i][j] = (next[i][j] + power[i][k] * adj[k][j]).min(1);
                        }
                    }
                }
                power = next;
            }
            prop_assert_eq!(is_bipartite(&g), !odd_cycle);
        }
    }
}
