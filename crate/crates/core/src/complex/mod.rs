//! Finite abstract simplicial complexes.
//!
//! A [`SimplicialComplex`] is stored canonically as its sorted list of facets
//! (inclusion-maximal faces), so structural equality is label-respecting
//! equality of complexes. The full face lattice is derived on first use and
//! cached; complexes are immutable after construction and can be shared
//! across threads.

mod cycles;
pub(crate) mod manifold;
mod ops;
mod orbit;
mod sum;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::chain::ChainComplex;

pub use cycles::{induced_cycles, InducedCycle};
pub use manifold::{manifold_check, ManifoldReport};
pub use orbit::{
    orbit_complex, orbit_complex_capped, Permutation, PermutationSpec, DEFAULT_ORBIT_CAP,
};
pub use sum::{connected_sum, handle_addition};

pub type VertexId = u32;

/// A face: a strictly increasing list of vertex labels. The empty face has
/// dimension −1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct Face(Vec<VertexId>);

impl Face {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Face> {
        let mut vs: Vec<VertexId> = vertices.into_iter().collect();
        vs.sort_unstable();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex {
                face: vs.clone(),
                vertex: w[0],
            });
        }
        Ok(Face(vs))
    }

    pub fn empty() -> Face {
        Face(Vec::new())
    }

    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Face {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        // both sorted
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    pub fn with(&self, v: VertexId) -> Result<Face> {
        Face::new(self.0.iter().copied().chain(std::iter::once(v)))
    }

    pub fn without(&self, v: VertexId) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// All nonempty subsets, including the face itself.
    pub fn subfaces(&self) -> impl Iterator<Item = Face> + '_ {
        let k = self.0.len();
        (1u64..(1u64 << k)).map(move |bits| {
            Face(
                (0..k)
                    .filter(|i| bits >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    pub(crate) fn map(&self, f: impl Fn(VertexId) -> VertexId) -> Result<Face> {
        Face::new(self.0.iter().map(|&v| f(v)))
    }
}

impl TryFrom<Vec<VertexId>> for Face {
    type Error = Error;

    fn try_from(v: Vec<VertexId>) -> Result<Face> {
        Face::new(v)
    }
}

impl From<Face> for Vec<VertexId> {
    fn from(f: Face) -> Self {
        f.0
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Builds faces from literal vertex lists; panics on duplicates. Meant for
/// fixtures and tests.
pub fn faces(lists: &[&[VertexId]]) -> Vec<Face> {
    lists
        .iter()
        .map(|l| Face::new(l.iter().copied()).expect("literal face"))
        .collect()
}

/// Per-dimension sorted face lists with reverse indices.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl FaceLattice {
    fn build(facets: &[Face]) -> FaceLattice {
        let top = facets.iter().map(Face::len).max().unwrap_or(0);
        let mut sets: Vec<HashSet<Face>> = vec![HashSet::new(); top];
        for facet in facets {
            for f in facet.subfaces() {
                let d = f.len() - 1;
                sets[d].insert(f);
            }
        }
        let faces: Vec<Vec<Face>> = sets
            .into_iter()
            .map(|s| {
                let mut v: Vec<Face> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        let index = faces
            .iter()
            .map(|fs| {
                fs.iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, f)| (f, i))
                    .collect()
            })
            .collect();
        FaceLattice { faces, index }
    }

    /// Faces of dimension `dim`, in lexicographic order.
    pub fn faces(&self, dim: usize) -> &[Face] {
        self.faces.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn index_of(&self, face: &Face) -> Option<usize> {
        if face.is_empty() {
            return None;
        }
        self.index.get(face.len() - 1)?.get(face).copied()
    }

    pub fn top_dim(&self) -> isize {
        self.faces.len() as isize - 1
    }
}

/// A finite abstract simplicial complex.
pub struct SimplicialComplex {
    vertices: Vec<VertexId>,
    facets: Vec<Face>,
    lattice: OnceLock<FaceLattice>,
    chains: OnceLock<ChainComplex>,
}

impl SimplicialComplex {
    /// The complex generated by `facets`. Faces contained in other input
    /// faces are absorbed.
    pub fn from_facets(facets: impl IntoIterator<Item = Face>) -> Result<SimplicialComplex> {
        let c = Self::generated_by(facets);
        if c.facets.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(c)
    }

    /// Like [`from_facets`](Self::from_facets) but accepts an empty input and
    /// returns the empty complex.
    pub fn generated_by(faces: impl IntoIterator<Item = Face>) -> SimplicialComplex {
        let mut all: Vec<Face> = faces.into_iter().filter(|f| !f.is_empty()).collect();
        all.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Face> = Vec::new();
        let mut covered: HashSet<Face> = HashSet::new();
        for f in all {
            if covered.contains(&f) {
                continue;
            }
            if kept.iter().any(|k| k.len() > f.len() && f.is_subset_of(k)) {
                continue;
            }
            // every subface of a kept facet is dominated
            if f.len() <= 8 {
                for s in f.subfaces() {
                    covered.insert(s);
                }
            }
            kept.push(f);
        }
        Self::from_maximal(kept)
    }

    pub(crate) fn from_maximal(mut facets: Vec<Face>) -> SimplicialComplex {
        facets.sort_unstable();
        let vertices: BTreeSet<VertexId> = facets
            .iter()
            .flat_map(|f| f.vertices().iter().copied())
            .collect();
        SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            facets,
            lattice: OnceLock::new(),
            chains: OnceLock::new(),
        }
    }

    /// The void complex (no vertices). Its only face is the empty face.
    pub fn empty() -> SimplicialComplex {
        Self::from_maximal(Vec::new())
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: impl IntoIterator<Item = VertexId>) -> Result<SimplicialComplex> {
        Self::from_facets([Face::new(vertices)?])
    }

    /// Boundary of the simplex on `vertices`: the standard sphere with
    /// `vertices.len()` vertices.
    pub fn simplex_boundary(
        vertices: impl IntoIterator<Item = VertexId>,
    ) -> Result<SimplicialComplex> {
        let f = Face::new(vertices)?;
        if f.len() < 2 {
            return Err(Error::InvalidParameter(
                "a simplex boundary needs at least two vertices".into(),
            ));
        }
        Self::from_facets(f.vertices().iter().map(|&v| f.without(v)))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub(crate) fn vertex_position(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(Face::dim).max().unwrap_or(-1)
    }

    pub fn lattice(&self) -> &FaceLattice {
        self.lattice
            .get_or_init(|| FaceLattice::build(&self.facets))
    }

    pub(crate) fn chains(&self) -> &ChainComplex {
        self.chains.get_or_init(|| ChainComplex::build(self))
    }

    /// Faces of dimension `dim` in lexicographic order.
    pub fn faces(&self, dim: usize) -> &[Face] {
        self.lattice().faces(dim)
    }

    /// `f_i` for `i = 0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let l = self.lattice();
        (0..=l.top_dim().max(-1))
            .map(|d| l.faces(d as usize).len())
            .collect()
    }

    pub fn contains(&self, face: &Face) -> bool {
        face.is_empty() || self.lattice().index_of(face).is_some()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn is_facet(&self, face: &Face) -> bool {
        self.facets.binary_search(face).is_ok()
    }

    /// `f_0 - f_1 + f_2 - ...`
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            vertices: self.vertices.clone(),
            facets: self.facets.clone(),
            lattice: self.lattice.clone(),
            chains: OnceLock::new(),
        }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl std::hash::Hash for SimplicialComplex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.facets.hash(state);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.vertices)
            .field("facets", &self.facets)
            .finish()
    }
}
