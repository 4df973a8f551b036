use std::collections::HashSet;

use super::SpectralError;
use crate::graph::{ArcId, DecoratedGraph};
use crate::walk::ArcVector;

fn check_walk(g: &DecoratedGraph, arcs: &[ArcId]) -> Result<(), SpectralError> {
    for &a in arcs {
        if !g.is_base_arc(a) {
            return Err(SpectralError::InvalidPath(format!("arc {a} is not a maze arc")));
        }
    }
    for w in arcs.windows(2) {
        if g.arc(w[0]).terminal != g.arc(w[1]).origin {
            return Err(SpectralError::InvalidPath(format!("arcs {} and {} are not consecutive", w[0], w[1])));
        }
    }
    let mut seen = HashSet::new();
    for &a in arcs {
        if !seen.insert(g.arc(a).origin) {
            return Err(SpectralError::InvalidPath(format!("vertex {} is visited twice", g.arc(a).origin)));
        }
    }
    Ok(())
}

fn alternate(g: &DecoratedGraph, xi: &mut [f64], arcs: &[ArcId], first: usize) {
    for (i, &a) in arcs.iter().enumerate() {
        let sign = if (i + first).is_multiple_of(2) { 1.0 } else { -1.0 };
        xi[a] = sign;
        xi[g.arc(a).inverse] = sign;
    }
}

/// `ξ(a) = (−1)^i` on `a_i` and `ā_i` along the route
/// `a_0 = s-loop, a_1, ..., a_n, a_{n+1} = g-loop`; unnormalized.
pub fn path_eigenvector(g: &DecoratedGraph, path: &[ArcId]) -> Result<ArcVector, SpectralError> {
    check_walk(g, path)?;
    let (first, last) = match (path.first(), path.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => return Err(SpectralError::InvalidPath("empty path".into())),
    };
    if g.arc(first).origin != g.start() || g.arc(last).terminal != g.goal() {
        return Err(SpectralError::InvalidPath("path must run from start to goal".into()));
    }
    let mut xi = vec![0.0; g.arc_count()];
    xi[g.start_loop()] = 1.0;
    alternate(g, &mut xi, path, 1);
    xi[g.goal_loop()] = if (path.len() + 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(ArcVector::from_real(&xi))
}

/// `ξ(a_i) = (−1)^i` on the arcs `a_1, ..., a_{2n}` of an even cycle and
/// their inverses; unnormalized.
pub fn cycle_eigenvector(g: &DecoratedGraph, cycle: &[ArcId]) -> Result<ArcVector, SpectralError> {
    check_walk(g, cycle)?;
    if cycle.len() < 3 {
        return Err(SpectralError::InvalidPath("a cycle needs at least 3 arcs".into()));
    }
    if g.arc(cycle[cycle.len() - 1]).terminal != g.arc(cycle[0]).origin {
        return Err(SpectralError::InvalidPath("cycle is not closed".into()));
    }
    if cycle.len() % 2 == 1 {
        return Err(SpectralError::OddCycle(cycle.len()));
    }
    let mut xi = vec![0.0; g.arc_count()];
    alternate(g, &mut xi, cycle, 1);
    Ok(ArcVector::from_real(&xi))
}
