use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_integer::binomial;

use super::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

impl SimplicialComplex {
    /// `X[A]`: all faces of `X` whose vertices lie in `subset`.
    pub fn induced_subcomplex(&self, subset: &[VertexId]) -> Result<SimplicialComplex> {
        for &v in subset {
            self.check_vertex(v)?;
        }
        let a: BTreeSet<VertexId> = subset.iter().copied().collect();
        Ok(SimplicialComplex::generated_by(self.facets.iter().map(
            |f| {
                Face::from_sorted(
                    f.vertices()
                        .iter()
                        .copied()
                        .filter(|v| a.contains(v))
                        .collect(),
                )
            },
        )))
    }

    /// Faces `α` with `x ∉ α` and `α ∪ {x}` a face.
    pub fn link(&self, x: VertexId) -> Result<SimplicialComplex> {
        self.check_vertex(x)?;
        Ok(SimplicialComplex::generated_by(
            self.facets
                .iter()
                .filter(|f| f.contains(x))
                .map(|f| f.without(x)),
        ))
    }

    /// Faces not containing `x`; equals `X[V(X) \ {x}]`.
    pub fn antistar(&self, x: VertexId) -> Result<SimplicialComplex> {
        self.check_vertex(x)?;
        Ok(SimplicialComplex::generated_by(
            self.facets.iter().map(|f| f.without(x)),
        ))
    }

    /// Closed star: the cone over the link with apex `x`.
    pub fn star(&self, x: VertexId) -> Result<SimplicialComplex> {
        self.check_vertex(x)?;
        Ok(SimplicialComplex::from_maximal(
            self.facets
                .iter()
                .filter(|f| f.contains(x))
                .cloned()
                .collect(),
        ))
    }

    pub fn skeleton(&self, k: usize) -> Result<SimplicialComplex> {
        let d = self.dim();
        if d < 0 || k as isize > d {
            return Err(Error::DimensionOutOfRange {
                requested: k as i64,
                max: d as i64,
            });
        }
        let lattice = self.lattice();
        let mut out: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| f.dim() <= k as isize)
            .cloned()
            .collect();
        out.extend(lattice.faces(k).iter().cloned());
        Ok(SimplicialComplex::generated_by(out))
    }

    /// `apex ∗ X`. The cone over the empty complex is the single vertex.
    pub fn cone(&self, apex: VertexId) -> Result<SimplicialComplex> {
        if self.has_vertex(apex) {
            return Err(Error::VertexCollision(apex));
        }
        if self.is_empty() {
            return SimplicialComplex::from_facets([Face::from_sorted(vec![apex])]);
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.with(apex))
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex::from_maximal(facets))
    }

    /// Union of two complexes on possibly overlapping vertex sets.
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex::generated_by(self.facets.iter().chain(other.facets.iter()).cloned())
    }

    /// `f_{k-1} = C(f_0, k)`.
    pub fn is_k_neighbourly(&self, k: usize) -> bool {
        let n = self.num_vertices();
        if k == 0 {
            return true;
        }
        let fk = self.lattice().faces(k - 1).len();
        fk as u128 == binomial(n as u128, k as u128)
    }

    pub fn is_neighbourly(&self) -> bool {
        self.is_k_neighbourly(2)
    }

    /// Codimension-one faces lying in exactly one facet, as a complex.
    /// Meaningful for pure complexes.
    pub fn boundary(&self) -> SimplicialComplex {
        let mut count: HashMap<Face, usize> = HashMap::new();
        for f in &self.facets {
            for &v in f.vertices() {
                *count.entry(f.without(v)).or_default() += 1;
            }
        }
        SimplicialComplex::generated_by(
            count
                .into_iter()
                .filter(|(f, c)| *c == 1 && !f.is_empty())
                .map(|(f, _)| f),
        )
    }

    /// Adjacency lists of the 1-skeleton, isolated vertices included.
    pub fn graph(&self) -> BTreeMap<VertexId, BTreeSet<VertexId>> {
        let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> = self
            .vertices
            .iter()
            .map(|&v| (v, BTreeSet::new()))
            .collect();
        for e in self.lattice().faces(1) {
            let (a, b) = (e.vertices()[0], e.vertices()[1]);
            adj.get_mut(&a).unwrap().insert(b);
            adj.get_mut(&b).unwrap().insert(a);
        }
        adj
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self
            .lattice()
            .faces(1)
            .iter()
            .filter(|e| e.contains(v))
            .count())
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let adj = self.graph();
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[&v] {
                    if seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Number of components `K` of `(X^x)_y` such that `x` is adjacent in
    /// `X_y` to some vertex of `K`.
    pub fn c_count(&self, x: VertexId, y: VertexId) -> Result<usize> {
        if x == y {
            return Err(Error::InvalidParameter(format!(
                "c_count needs distinct vertices, got {x} twice"
            )));
        }
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        let link_y = self.link(y)?;
        if !link_y.has_vertex(x) {
            return Ok(0);
        }
        let neighbours = link_y.graph()[&x].clone();
        let deleted = link_y.antistar(x)?;
        Ok(deleted
            .components()
            .iter()
            .filter(|k| k.iter().any(|v| neighbours.contains(v)))
            .count())
    }

    /// Renames vertices through `map` (which must be injective on `V(X)`).
    pub fn relabel(&self, map: impl Fn(VertexId) -> VertexId) -> Result<SimplicialComplex> {
        let facets = self
            .facets
            .iter()
            .map(|f| f.map(&map))
            .collect::<Result<Vec<_>>>()?;
        let out = SimplicialComplex::from_maximal(facets);
        if out.num_vertices() != self.num_vertices() {
            return Err(Error::InvalidParameter(
                "relabelling is not injective".into(),
            ));
        }
        Ok(out)
    }

    /// Relabels vertices to `0..n` in increasing order.
    pub fn normalized(&self) -> SimplicialComplex {
        let pos: HashMap<VertexId, VertexId> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as VertexId))
            .collect();
        self.relabel(|v| pos[&v]).expect("order-preserving relabel")
    }
}
