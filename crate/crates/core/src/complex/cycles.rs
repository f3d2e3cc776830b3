//! Induced (chordless) cycle enumeration.
//!
//! Backtracking from the smallest vertex of each cycle: a path rooted at `r`
//! only visits vertices larger than `r`, stays induced as it grows, and is
//! closed as soon as its endpoint touches `r` again. Each cycle is produced
//! once by requiring the second vertex to be smaller than the last.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{Face, SimplicialComplex, VertexId};

/// An induced cycle in canonical rotation: starts at its smallest vertex and
/// walks towards the smaller of that vertex's two cycle neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct InducedCycle {
    vertices: Vec<VertexId>,
}

impl InducedCycle {
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> Vec<VertexId> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }

    /// Canonical form of an arbitrary cyclic vertex sequence.
    pub fn canonical(cycle: &[VertexId]) -> InducedCycle {
        let n = cycle.len();
        let start = (0..n).min_by_key(|&i| cycle[i]).unwrap_or(0);
        let fwd: Vec<VertexId> = (0..n).map(|k| cycle[(start + k) % n]).collect();
        let bwd: Vec<VertexId> = (0..n).map(|k| cycle[(start + n - k) % n]).collect();
        InducedCycle {
            vertices: if n < 3 || fwd[1] < bwd[1] { fwd } else { bwd },
        }
    }
}

struct Search<'a> {
    adj: &'a BTreeMap<VertexId, BTreeSet<VertexId>>,
    complex: &'a SimplicialComplex,
    max_len: usize,
    out: Vec<InducedCycle>,
}

impl Search<'_> {
    fn extend(&mut self, path: &mut Vec<VertexId>) {
        let root = path[0];
        let last = *path.last().unwrap();
        if path.len() >= self.max_len {
            return;
        }
        let candidates: Vec<VertexId> = self.adj[&last]
            .iter()
            .copied()
            .filter(|&w| w > root && !path.contains(&w))
            .collect();
        for w in candidates {
            // w may touch only `last` among the interior path vertices
            let interior = &path[1..path.len() - 1];
            if interior.iter().any(|u| self.adj[u].contains(&w)) {
                continue;
            }
            let closes = path.len() >= 2 && self.adj[&root].contains(&w);
            if closes {
                // w closes the cycle; require path[1] < w for uniqueness
                if path[1] < w {
                    path.push(w);
                    if path.len() > 3 || !self.bounds_triangle(path) {
                        self.out.push(InducedCycle {
                            vertices: path.clone(),
                        });
                    }
                    path.pop();
                }
                continue;
            }
            path.push(w);
            self.extend(path);
            path.pop();
        }
    }

    fn bounds_triangle(&self, tri: &[VertexId]) -> bool {
        Face::new(tri.iter().copied())
            .map(|f| self.complex.contains(&f))
            .unwrap_or(false)
    }
}

/// All induced cycles of `x`, optionally restricted to the given lengths.
///
/// Cycles of length at least 4 are the chordless cycles of the 1-skeleton;
/// a 3-cycle counts only if it does not bound a 2-face. Output is sorted by
/// vertex set, then by canonical rotation.
pub fn induced_cycles(
    x: &SimplicialComplex,
    lengths: Option<&BTreeSet<usize>>,
) -> Vec<InducedCycle> {
    let adj = x.graph();
    let max_len = match lengths {
        Some(l) => l.iter().copied().max().unwrap_or(0),
        None => x.num_vertices(),
    };
    let mut search = Search {
        adj: &adj,
        complex: x,
        max_len,
        out: Vec::new(),
    };
    for &r in x.vertices() {
        let firsts: Vec<VertexId> = adj[&r].iter().copied().filter(|&v| v > r).collect();
        for v in firsts {
            let mut path = vec![r, v];
            search.extend(&mut path);
        }
    }
    let mut out: Vec<InducedCycle> = search
        .out
        .into_iter()
        .filter(|c| lengths.is_none_or(|l| l.contains(&c.len())))
        .collect();
    out.sort_by(|a, b| {
        a.vertex_set()
            .cmp(&b.vertex_set())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    out
}
