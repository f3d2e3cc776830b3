//! Connected sums and combinatorial handle additions.

use std::collections::{BTreeMap, BTreeSet};

use super::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

fn pairing(
    sigma: &Face,
    tau: &Face,
    psi: &[(VertexId, VertexId)],
) -> Result<BTreeMap<VertexId, VertexId>> {
    let map: BTreeMap<VertexId, VertexId> = psi.iter().copied().collect();
    let dom: BTreeSet<VertexId> = map.keys().copied().collect();
    let img: BTreeSet<VertexId> = map.values().copied().collect();
    let s: BTreeSet<VertexId> = sigma.vertices().iter().copied().collect();
    let t: BTreeSet<VertexId> = tau.vertices().iter().copied().collect();
    if map.len() != psi.len() || dom != s || img != t {
        return Err(Error::InvalidPairing(format!(
            "{psi:?} is not a bijection from {sigma} onto {tau}"
        )));
    }
    Ok(map)
}

/// Removes the facets `sigma`, `tau` and identifies `v` with `psi[v]`.
/// `tau`'s labels disappear from the result.
fn identify(
    x: &SimplicialComplex,
    sigma: &Face,
    tau: &Face,
    psi: &BTreeMap<VertexId, VertexId>,
) -> Result<SimplicialComplex> {
    for f in [sigma, tau] {
        if !x.is_facet(f) {
            return Err(Error::NotAFacet(f.vertices().to_vec()));
        }
    }
    if sigma.len() != tau.len() {
        return Err(Error::DimensionMismatch(
            sigma.vertices().to_vec(),
            tau.vertices().to_vec(),
        ));
    }
    if !sigma.is_disjoint(tau) {
        return Err(Error::InvalidPairing(format!(
            "{sigma} and {tau} share a vertex"
        )));
    }
    let graph = x.graph();
    for (&v, &w) in psi {
        let lv: BTreeSet<VertexId> = x.link(v)?.vertices().iter().copied().collect();
        let lw = x.link(w)?;
        if graph[&v].contains(&w) || lw.vertices().iter().any(|u| lv.contains(u)) {
            return Err(Error::LinkCondition {
                vertex: v,
                image: w,
            });
        }
    }
    let back: BTreeMap<VertexId, VertexId> = psi.iter().map(|(&v, &w)| (w, v)).collect();
    let lattice = x.lattice();
    let mut out = Vec::new();
    for d in 0..=x.dim().max(0) as usize {
        for f in lattice.faces(d) {
            if f == sigma || f == tau {
                continue;
            }
            out.push(f.map(|v| back.get(&v).copied().unwrap_or(v))?);
        }
    }
    Ok(SimplicialComplex::generated_by(out))
}

/// `X1 #_ψ X2`. `X2` is relabelled automatically: `τ`'s vertices become their
/// partners in `σ`, all other vertices of `X2` get fresh labels above
/// `max V(X1)` in increasing order. `psi` pairs labels of `σ ⊆ X1` with labels
/// of `τ ⊆ X2`.
pub fn connected_sum(
    x1: &SimplicialComplex,
    sigma: &Face,
    x2: &SimplicialComplex,
    tau: &Face,
    psi: &[(VertexId, VertexId)],
) -> Result<SimplicialComplex> {
    if !x1.is_facet(sigma) {
        return Err(Error::NotAFacet(sigma.vertices().to_vec()));
    }
    if !x2.is_facet(tau) {
        return Err(Error::NotAFacet(tau.vertices().to_vec()));
    }
    let map = pairing(sigma, tau, psi)?;
    // place X2 on a disjoint range first, then glue
    let base = x1.vertices().last().copied().unwrap_or(0) + 1;
    let shift = base + x2.num_vertices() as VertexId;
    let pos = |v: VertexId| x2.vertex_position(v).expect("vertex of x2") as VertexId;
    let x2s = x2.relabel(|v| shift + pos(v))?;
    let tau_s = tau.map(|v| shift + pos(v))?;
    let psi_s: BTreeMap<VertexId, VertexId> =
        map.iter().map(|(&v, &w)| (v, shift + pos(w))).collect();
    let glued = identify(&x1.union(&x2s), sigma, &tau_s, &psi_s)?;
    // compact the fresh labels to base, base+1, ...
    let fresh: Vec<VertexId> = glued
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v >= shift)
        .collect();
    let compact: BTreeMap<VertexId, VertexId> = fresh
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, base + i as VertexId))
        .collect();
    glued.relabel(|v| compact.get(&v).copied().unwrap_or(v))
}

/// Combinatorial handle addition `X^ψ` for two disjoint facets of one
/// complex.
pub fn handle_addition(
    x: &SimplicialComplex,
    sigma: &Face,
    tau: &Face,
    psi: &[(VertexId, VertexId)],
) -> Result<SimplicialComplex> {
    let map = pairing(sigma, tau, psi)?;
    identify(x, sigma, tau, &map)
}
