use std::collections::HashMap;

use serde::Serialize;

use super::{Face, SimplicialComplex};

/// Combinatorial manifold flags of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ManifoldReport {
    pub dim: isize,
    pub is_pure: bool,
    pub is_connected: bool,
    pub is_pseudomanifold: bool,
    pub is_closed_surface: bool,
    pub is_closed_3manifold: bool,
    pub euler_characteristic: i64,
    /// For closed 3-manifolds: `f_2 = 2 f_3` and `χ = 0`.
    pub dehn_sommerville_ok: Option<bool>,
}

/// Number of facets through each codimension-one face.
pub(crate) fn ridge_degrees(x: &SimplicialComplex) -> HashMap<Face, usize> {
    let mut count: HashMap<Face, usize> = HashMap::new();
    for f in x.facets() {
        for &v in f.vertices() {
            *count.entry(f.without(v)).or_default() += 1;
        }
    }
    count
}

/// Pure, every ridge in at most two facets, and facets connected through
/// ridges.
pub(crate) fn is_pseudomanifold(x: &SimplicialComplex) -> bool {
    if x.is_empty() || !x.is_pure() {
        return false;
    }
    let mut through: HashMap<Face, Vec<usize>> = HashMap::new();
    for (i, f) in x.facets().iter().enumerate() {
        for &v in f.vertices() {
            through.entry(f.without(v)).or_default().push(i);
        }
    }
    if through.values().any(|fs| fs.len() > 2) {
        return false;
    }
    let n = x.facets().len();
    let mut adj = vec![Vec::new(); n];
    for fs in through.values() {
        if let [a, b] = fs[..] {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// A connected 2-regular graph with at least three vertices.
pub(crate) fn is_cycle_graph(x: &SimplicialComplex) -> bool {
    x.dim() == 1
        && x.num_vertices() >= 3
        && x.is_connected()
        && x.graph().values().all(|n| n.len() == 2)
}

pub(crate) fn is_closed_surface(x: &SimplicialComplex) -> bool {
    x.dim() == 2
        && x.is_pure()
        && x.is_connected()
        && ridge_degrees(x).values().all(|&c| c == 2)
        && x.vertices()
            .iter()
            .all(|&v| is_cycle_graph(&x.link(v).expect("vertex of x")))
}

pub(crate) fn is_closed_3manifold(x: &SimplicialComplex) -> bool {
    x.dim() == 3
        && x.is_pure()
        && x.is_connected()
        && ridge_degrees(x).values().all(|&c| c == 2)
        && x.vertices()
            .iter()
            .all(|&v| crate::sphere::is_2sphere(&x.link(v).expect("vertex of x")))
}

pub fn manifold_check(x: &SimplicialComplex) -> ManifoldReport {
    let closed3 = is_closed_3manifold(x);
    let chi = x.euler_characteristic();
    let dehn_sommerville_ok = closed3.then(|| {
        let f = x.f_vector();
        f[2] == 2 * f[3] && chi == 0
    });
    ManifoldReport {
        dim: x.dim(),
        is_pure: x.is_pure(),
        is_connected: x.is_connected(),
        is_pseudomanifold: is_pseudomanifold(x),
        is_closed_surface: is_closed_surface(x),
        is_closed_3manifold: closed3,
        euler_characteristic: chi,
        dehn_sommerville_ok,
    }
}
