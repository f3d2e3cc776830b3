//! Simplicial chain complexes indexed by the face lattice.
//!
//! Faces of each dimension are numbered in lattice (lexicographic) order, so
//! the chain space of an induced subcomplex embeds by coordinate inclusion:
//! a face lies in `X[A]` exactly when its vertex mask is a subset of `A`.

use crate::complex::SimplicialComplex;

use super::field::FieldSpec;
use super::linalg::{sparse_rank, SparseCol};

/// Vertex subset of a complex, as a bitmask over vertex positions.
pub(crate) type Mask = u64;

/// Which faces of the complex take part in a computation.
#[derive(Clone, Copy)]
pub(crate) enum Sel<'a> {
    All,
    /// Induced subcomplex on a vertex mask (requires f₀ ≤ 64).
    Mask(Mask),
    /// Arbitrary subcomplex, by (dimension, face index).
    Pred(&'a dyn Fn(usize, usize) -> bool),
}

#[derive(Clone, Debug)]
pub(crate) struct ChainComplex {
    /// `boundary[k][j]`: signed boundary of the j-th k-face, as rows into
    /// the (k−1)-faces. Empty for k = 0 (unreduced).
    boundary: Vec<Vec<Vec<(u32, i8)>>>,
    /// Vertex-position masks per face; only when f₀ ≤ 64.
    masks: Option<Vec<Vec<Mask>>>,
}

impl ChainComplex {
    pub(crate) fn build(x: &SimplicialComplex) -> ChainComplex {
        let lattice = x.lattice();
        let top = lattice.top_dim();
        let mut boundary = Vec::new();
        for k in 0..=top.max(-1) {
            let k = k as usize;
            let col = lattice
                .faces(k)
                .iter()
                .map(|f| {
                    if k == 0 {
                        return Vec::new();
                    }
                    (0..f.len())
                        .map(|i| {
                            let sub = f.without(f.vertices()[i]);
                            let row = lattice.index_of(&sub).expect("closed under subfaces");
                            (row as u32, if i % 2 == 0 { 1 } else { -1 })
                        })
                        .collect()
                })
                .collect();
            boundary.push(col);
        }
        let masks = (x.num_vertices() <= 64).then(|| {
            (0..boundary.len())
                .map(|k| {
                    lattice
                        .faces(k)
                        .iter()
                        .map(|f| {
                            f.vertices().iter().fold(0, |m, &v| {
                                m | 1 << x.vertex_position(v).expect("vertex of x")
                            })
                        })
                        .collect()
                })
                .collect()
        });
        ChainComplex { boundary, masks }
    }

    /// Number of dimensions carrying faces (dim + 1).
    pub(crate) fn levels(&self) -> usize {
        self.boundary.len()
    }

    pub(crate) fn count(&self, k: usize) -> usize {
        self.boundary.get(k).map_or(0, Vec::len)
    }

    pub(crate) fn has_masks(&self) -> bool {
        self.masks.is_some()
    }

    fn in_subset(&self, k: usize, j: usize, sel: Sel<'_>) -> bool {
        match sel {
            Sel::All => true,
            Sel::Mask(a) => self.masks.as_ref().expect("masks available")[k][j] & !a == 0,
            Sel::Pred(f) => f(k, j),
        }
    }

    /// Face indices of dimension k lying in the selected subcomplex, and a
    /// reindexing table for them.
    fn selection(&self, k: usize, subset: Sel<'_>) -> (usize, Vec<u32>) {
        let n = self.count(k);
        let mut map = vec![u32::MAX; n];
        let mut next = 0u32;
        for (j, slot) in map.iter_mut().enumerate() {
            if self.in_subset(k, j, subset) {
                *slot = next;
                next += 1;
            }
        }
        (next as usize, map)
    }

    /// Number of k-faces in the selection.
    pub(crate) fn selected_count(&self, k: usize, subset: Sel<'_>) -> usize {
        (0..self.count(k))
            .filter(|&j| self.in_subset(k, j, subset))
            .count()
    }

    /// Columns of ∂_k restricted to the selection.
    fn columns(&self, k: usize, subset: Sel<'_>) -> (usize, Vec<SparseCol>) {
        let (nrows, rows) = self.selection(k - 1, subset);
        let cols = self.boundary[k]
            .iter()
            .enumerate()
            .filter(|(j, _)| self.in_subset(k, *j, subset))
            .map(|(_, c)| {
                c.iter()
                    .map(|&(r, s)| (rows[r as usize], s as i64))
                    .collect()
            })
            .collect();
        (nrows, cols)
    }

    /// Rank of ∂_k on the selected subcomplex; zero for k = 0 or k out of range.
    pub(crate) fn boundary_rank(&self, k: usize, subset: Sel<'_>, field: FieldSpec) -> usize {
        if k == 0 || k >= self.levels() {
            return 0;
        }
        let (nrows, cols) = self.columns(k, subset);
        sparse_rank(nrows, &cols, field)
    }

    /// Rank of ∂_k of the whole complex with the rows of (k−1)-faces inside
    /// the selection deleted.
    pub(crate) fn boundary_rank_outside(
        &self,
        k: usize,
        subset: Sel<'_>,
        field: FieldSpec,
    ) -> usize {
        if k == 0 || k >= self.levels() {
            return 0;
        }
        let mut map = vec![u32::MAX; self.count(k - 1)];
        let mut next = 0u32;
        for (j, slot) in map.iter_mut().enumerate() {
            if !self.in_subset(k - 1, j, subset) {
                *slot = next;
                next += 1;
            }
        }
        let cols: Vec<SparseCol> = self.boundary[k]
            .iter()
            .map(|c| {
                c.iter()
                    .filter(|(r, _)| map[*r as usize] != u32::MAX)
                    .map(|&(r, s)| (map[r as usize], s as i64))
                    .collect()
            })
            .collect();
        sparse_rank(next as usize, &cols, field)
    }

    /// Unreduced Betti numbers β₀..β_top of the selection.
    pub(crate) fn betti(&self, subset: Sel<'_>, field: FieldSpec) -> Vec<i64> {
        let ranks: Vec<usize> = (0..=self.levels())
            .map(|k| self.boundary_rank(k, subset, field))
            .collect();
        (0..self.levels())
            .map(|k| self.selected_count(k, subset) as i64 - ranks[k] as i64 - ranks[k + 1] as i64)
            .collect()
    }

    /// Dense boundary matrix ∂_k (rows: (k−1)-faces, columns: k-faces).
    pub(crate) fn dense_boundary(&self, k: usize) -> Vec<Vec<i64>> {
        if k == 0 || k >= self.levels() {
            return Vec::new();
        }
        let mut m = vec![vec![0i64; self.count(k)]; self.count(k - 1)];
        for (j, col) in self.boundary[k].iter().enumerate() {
            for &(r, s) in col {
                m[r as usize][j] = s as i64;
            }
        }
        m
    }

    pub(crate) fn sparse_boundary(&self, k: usize) -> (usize, Vec<SparseCol>) {
        if k == 0 || k >= self.levels() {
            return (self.count(k.saturating_sub(1)), Vec::new());
        }
        self.columns(k, Sel::All)
    }
}
