//! Triangulated 2-spheres: recognition, stackedness, and decomposition into
//! primitive connected summands.
//!
//! A 3-set of a 2-sphere whose three edges are present but whose triangle is
//! not is a *missing facet*. Cutting along every missing facet splits the
//! sphere into primitive summands, arranged in a tree whose edges are the
//! missing facets.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Serialize, Serializer};

use crate::complex::manifold::{is_closed_3manifold, is_closed_surface};
use crate::complex::{induced_cycles, Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};

/// Connected closed surface with Euler characteristic 2.
pub fn is_2sphere(s: &SimplicialComplex) -> bool {
    is_closed_surface(s) && s.euler_characteristic() == 2
}

fn require_sphere(s: &SimplicialComplex) -> Result<()> {
    if is_2sphere(s) {
        Ok(())
    } else {
        Err(Error::NotA2Sphere)
    }
}

/// Stacked iff there is no induced cycle of length 4 or 5.
pub fn is_stacked_2sphere(s: &SimplicialComplex) -> Result<bool> {
    require_sphere(s)?;
    let lengths = BTreeSet::from([4, 5]);
    Ok(induced_cycles(s, Some(&lengths)).is_empty())
}

/// All empty triangles of a 2-sphere, in lexicographic order.
pub fn missing_facet_sets(s: &SimplicialComplex) -> Result<Vec<Face>> {
    require_sphere(s)?;
    Ok(empty_triangles(s))
}

fn empty_triangles(s: &SimplicialComplex) -> Vec<Face> {
    let graph = s.graph();
    let mut out = Vec::new();
    for (&a, na) in &graph {
        for &b in na.range(a + 1..) {
            for &c in graph[&b].range(b + 1..) {
                if na.contains(&c) {
                    let t = Face::from_sorted(vec![a, b, c]);
                    if !s.contains(&t) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// Class of a primitive summand, determined by vertex count and degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SummandClass {
    StandardS24,
    Icosahedron,
    Other(SimplicialComplex),
}

impl SummandClass {
    pub fn name(&self) -> &'static str {
        match self {
            SummandClass::StandardS24 => "STANDARD_S24",
            SummandClass::Icosahedron => "ICOSAHEDRON",
            SummandClass::Other(_) => "OTHER",
        }
    }
}

impl Serialize for SummandClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Classifies a primitive 2-sphere. Four vertices means the tetrahedron
/// boundary; twelve vertices of degree five means the icosahedron.
pub fn classify_summand(p: &SimplicialComplex) -> SummandClass {
    let n = p.num_vertices();
    if n == 4 && p.f_vector() == [4, 6, 4] {
        return SummandClass::StandardS24;
    }
    if n == 12 && p.graph().values().all(|nb| nb.len() == 5) {
        return SummandClass::Icosahedron;
    }
    SummandClass::Other(p.clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub label: Face,
}

/// The connected-sum tree: primitive summands joined along missing facets.
#[derive(Clone, Debug, Serialize)]
pub struct ConnectedSumTree {
    #[serde(skip)]
    pub nodes: Vec<SimplicialComplex>,
    pub classes: Vec<SummandClass>,
    pub edges: Vec<TreeEdge>,
    /// Repeatedly removing the lowest-numbered leaf gives this node order.
    pub elimination_order: Vec<usize>,
}

impl ConnectedSumTree {
    pub fn count(&self, class: &str) -> usize {
        self.classes.iter().filter(|c| c.name() == class).count()
    }

    pub fn standard_count(&self) -> usize {
        self.count("STANDARD_S24")
    }

    pub fn icosahedron_count(&self) -> usize {
        self.count("ICOSAHEDRON")
    }

    pub fn other_count(&self) -> usize {
        self.count("OTHER")
    }

    /// Connected with exactly one edge fewer than nodes.
    pub fn is_tree(&self) -> bool {
        let n = self.nodes.len();
        if n == 0 || self.edges.len() + 1 != n {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for e in &self.edges {
            let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, e.b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }
}

/// Splits a 2-sphere along all missing facets, lexicographically smallest
/// first, into its primitive summands.
pub fn primitive_decomposition(s: &SimplicialComplex) -> Result<ConnectedSumTree> {
    require_sphere(s)?;
    let alphas = empty_triangles(s);
    let mut parts: Vec<Vec<Face>> = vec![s.facets().to_vec()];
    for alpha in &alphas {
        let edges: Vec<Face> = (0..3).map(|i| alpha.without(alpha.vertices()[i])).collect();
        let owner = parts
            .iter()
            .position(|p| edges.iter().all(|e| p.iter().any(|f| e.is_subset_of(f))))
            .ok_or_else(|| Error::Corrupt(format!("no summand carries the edges of {alpha}")))?;
        let part = parts.swap_remove(owner);
        let (mut left, mut right) = split(&part, &edges).ok_or_else(|| {
            Error::Corrupt(format!("cutting along {alpha} does not give two pieces"))
        })?;
        left.push(alpha.clone());
        right.push(alpha.clone());
        parts.push(left);
        parts.push(right);
    }
    let mut nodes: Vec<SimplicialComplex> = parts
        .into_iter()
        .map(SimplicialComplex::from_facets)
        .collect::<Result<_>>()?;
    nodes.sort_by(|a, b| {
        a.vertices()
            .cmp(b.vertices())
            .then_with(|| a.facets().cmp(b.facets()))
    });

    let mut holders: BTreeMap<&Face, Vec<usize>> = BTreeMap::new();
    for (i, node) in nodes.iter().enumerate() {
        for f in node.facets() {
            if alphas.binary_search(f).is_ok() {
                holders.entry(f).or_default().push(i);
            }
        }
    }
    let mut edges = Vec::new();
    for alpha in &alphas {
        match holders.get(alpha).map(Vec::as_slice) {
            Some(&[a, b]) => edges.push(TreeEdge {
                a,
                b,
                label: alpha.clone(),
            }),
            _ => {
                return Err(Error::Corrupt(format!(
                    "{alpha} is not shared by exactly two summands"
                )))
            }
        }
    }
    let elimination_order = leaf_elimination(nodes.len(), &edges);
    let classes = nodes.iter().map(classify_summand).collect();
    Ok(ConnectedSumTree {
        nodes,
        classes,
        edges,
        elimination_order,
    })
}

/// Facet components of `part` once adjacency across `cut` edges is removed.
/// `None` unless there are exactly two.
fn split(part: &[Face], cut: &[Face]) -> Option<(Vec<Face>, Vec<Face>)> {
    let mut by_edge: HashMap<Face, Vec<usize>> = HashMap::new();
    for (i, f) in part.iter().enumerate() {
        for &v in f.vertices() {
            by_edge.entry(f.without(v)).or_default().push(i);
        }
    }
    let mut comp = vec![usize::MAX; part.len()];
    let mut ncomp = 0;
    for start in 0..part.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = ncomp;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &v in part[i].vertices() {
                let e = part[i].without(v);
                if cut.contains(&e) {
                    continue;
                }
                for &j in &by_edge[&e] {
                    if comp[j] == usize::MAX {
                        comp[j] = ncomp;
                        stack.push(j);
                    }
                }
            }
        }
        ncomp += 1;
    }
    if ncomp != 2 {
        return None;
    }
    let (l, r): (Vec<_>, Vec<_>) = part.iter().cloned().zip(comp).partition(|(_, c)| *c == 0);
    Some((
        l.into_iter().map(|x| x.0).collect(),
        r.into_iter().map(|x| x.0).collect(),
    ))
}

fn leaf_elimination(n: usize, edges: &[TreeEdge]) -> Vec<usize> {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for e in edges {
        adj[e.a].insert(e.b);
        adj[e.b].insert(e.a);
    }
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(&leaf) = alive.iter().find(|&&i| adj[i].len() <= 1) {
        alive.remove(&leaf);
        for j in std::mem::take(&mut adj[leaf]) {
            adj[j].remove(&leaf);
        }
        order.push(leaf);
    }
    order
}

/// Connected sum of icosahedra (at least one summand).
pub fn is_icosian(s: &SimplicialComplex) -> Result<bool> {
    let tree = primitive_decomposition(s)?;
    Ok(!tree.nodes.is_empty() && tree.icosahedron_count() == tree.nodes.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexLinkProfile {
    pub vertex: VertexId,
    /// Icosahedron summands.
    pub k: usize,
    /// Tetrahedron-boundary summands.
    pub l: usize,
    pub other: usize,
}

/// Summand counts of every vertex link of a closed 3-manifold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkProfile {
    pub vertices: Vec<VertexLinkProfile>,
    pub k_total: usize,
    pub is_locally_stacked: bool,
    pub is_locally_icosian: bool,
    /// No link has an unclassified summand.
    pub link_screen_pass: bool,
}

impl LinkProfile {
    pub fn get(&self, v: VertexId) -> Option<&VertexLinkProfile> {
        self.vertices.iter().find(|p| p.vertex == v)
    }
}

pub fn link_profile(m: &SimplicialComplex) -> Result<LinkProfile> {
    link_profile_with(m, Strategy::default())
}

pub fn link_profile_with(m: &SimplicialComplex, strategy: Strategy) -> Result<LinkProfile> {
    if !is_closed_3manifold(m) {
        return Err(Error::NotClosed3Manifold);
    }
    let rows = exec::map(m.vertices(), strategy, |&v| -> Result<VertexLinkProfile> {
        let tree = primitive_decomposition(&m.link(v)?)?;
        Ok(VertexLinkProfile {
            vertex: v,
            k: tree.icosahedron_count(),
            l: tree.standard_count(),
            other: tree.other_count(),
        })
    });
    let vertices: Vec<VertexLinkProfile> = rows.into_iter().collect::<Result<_>>()?;
    Ok(LinkProfile {
        k_total: vertices.iter().map(|p| p.k).sum(),
        is_locally_stacked: vertices.iter().all(|p| p.k == 0 && p.other == 0),
        is_locally_icosian: vertices.iter().all(|p| p.l == 0 && p.other == 0),
        link_screen_pass: vertices.iter().all(|p| p.other == 0),
        vertices,
    })
}
