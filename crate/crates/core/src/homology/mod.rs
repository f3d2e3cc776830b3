//! Exact simplicial homology and induced-map injectivity.
//!
//! Betti numbers come from ranks of boundary matrices over GF(p) or Q;
//! integral homology from Smith normal form. Reduced degree-0 values follow
//! β̃₀(Y) = β₀(Y) − 1 for every Y, so the empty complex has β̃₀ = −1.

pub(crate) mod chain;
mod field;
mod linalg;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::complex::{SimplicialComplex, VertexId};
use crate::error::{Error, Result};

use chain::{Mask, Sel};

pub use field::{format_rational, parse_rational, ExactScalar, FieldSpec};
pub(crate) use field::{serialize_rational, serialize_rationals};
pub use linalg::{rank, smith_diagonal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub field: FieldSpec,
    pub reduced: bool,
    pub values: Vec<i64>,
}

impl BettiVector {
    pub fn get(&self, i: usize) -> i64 {
        self.values.get(i).copied().unwrap_or(0)
    }

    /// Euler characteristic (reduced if the vector is reduced).
    pub fn euler(&self) -> i64 {
        self.values
            .iter()
            .enumerate()
            .map(|(i, b)| if i % 2 == 0 { *b } else { -*b })
            .sum()
    }
}

/// One degree of integral homology: ℤ^free ⊕ ⊕ ℤ/t.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_ints")]
    pub torsion: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralHomology {
    pub degrees: Vec<IntegralGroup>,
}

impl IntegralHomology {
    /// Primes dividing some torsion coefficient, in increasing order.
    pub fn torsion_primes(&self) -> Vec<u64> {
        let mut out = BTreeSet::new();
        for g in &self.degrees {
            for t in &g.torsion {
                let mut t = t.to_u64().unwrap_or(0);
                let mut p = 2;
                while t > 1 && p * p <= t {
                    while t % p == 0 {
                        out.insert(p);
                        t /= p;
                    }
                    p += 1;
                }
                if t > 1 {
                    out.insert(t);
                }
            }
        }
        out.into_iter().collect()
    }
}

impl std::fmt::Display for IntegralGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.free_rank)
            });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn serialize_ints<S: Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        match x.to_u64() {
            Some(v) => seq.serialize_element(&v)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

/// Betti numbers of `x` over `field`, indexed 0..=dim (at least one entry).
pub fn betti(x: &SimplicialComplex, field: FieldSpec, reduced: bool) -> BettiVector {
    let mut values = x.chains().betti(Sel::All, field);
    if values.is_empty() {
        values.push(0);
    }
    if reduced {
        values[0] -= 1;
    }
    BettiVector {
        field,
        reduced,
        values,
    }
}

/// Reduced Betti numbers of the induced subcomplex on a vertex mask,
/// padded to the levels of `x`.
pub(crate) fn reduced_betti_masked(
    x: &SimplicialComplex,
    mask: Mask,
    field: FieldSpec,
) -> Vec<i64> {
    let chains = x.chains();
    let mut values = if mask == 0 {
        vec![0; chains.levels()]
    } else {
        chains.betti(Sel::Mask(mask), field)
    };
    if values.is_empty() {
        values.push(0);
    }
    values[0] -= 1;
    values
}

/// Integral homology via Smith normal form of each boundary matrix.
pub fn integral_homology(x: &SimplicialComplex) -> IntegralHomology {
    let chains = x.chains();
    let levels = chains.levels();
    let factors: Vec<Vec<BigInt>> = (0..=levels)
        .map(|k| {
            let (nrows, cols) = chains.sparse_boundary(k);
            if cols.is_empty() {
                Vec::new()
            } else {
                linalg::invariant_factors(nrows, &cols)
            }
        })
        .collect();
    let degrees = (0..levels)
        .map(|k| IntegralGroup {
            free_rank: chains.count(k) - factors[k].len() - factors[k + 1].len(),
            torsion: factors[k + 1]
                .iter()
                .filter(|t| !t.is_one())
                .cloned()
                .collect(),
        })
        .collect();
    IntegralHomology { degrees }
}

/// Whether the top homology over `field` is nonzero. Requires a pure complex.
pub fn orientable(x: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if x.is_empty() {
        return Ok(false);
    }
    if !x.is_pure() {
        return Err(Error::NotPure);
    }
    let d = x.dim() as usize;
    Ok(betti(x, field, false).get(d) != 0)
}

/// Dense boundary matrix ∂_k of `x`: rows are the (k−1)-faces and columns
/// the k-faces, both in lattice order. Empty for k = 0 or k > dim.
pub fn boundary_matrix(x: &SimplicialComplex, k: usize) -> Vec<Vec<i64>> {
    x.chains().dense_boundary(k)
}

/// Decides whether H_degree(X[A]) → H_degree(X) is injective (unreduced
/// homology).
///
/// Boundaries of X that are supported on X[A] automatically lie in
/// Z(X[A]), and form the kernel of ∂ followed by the projection onto
/// chains outside A. So Z(X[A]) ∩ B(X) has dimension
/// rank ∂ − rank(∂ with rows in A deleted), and the map is injective iff
/// that equals rank ∂ of X[A].
pub fn induced_map_injective(
    x: &SimplicialComplex,
    subset: &[VertexId],
    degree: usize,
    field: FieldSpec,
) -> Result<bool> {
    for &v in subset {
        x.check_vertex(v)?;
    }
    if x.dim() < 0 || degree as isize > x.dim() {
        return Err(Error::DimensionOutOfRange {
            requested: degree as i64,
            max: x.dim() as i64,
        });
    }
    let chains = x.chains();
    if chains.has_masks() {
        let mask = subset.iter().fold(0u64, |m, &v| {
            m | 1 << x.vertex_position(v).expect("checked")
        });
        return Ok(injective_masked(x, mask, degree, field));
    }
    let set: BTreeSet<VertexId> = subset.iter().copied().collect();
    let inside = |k: usize, j: usize| x.faces(k)[j].vertices().iter().all(|v| set.contains(v));
    Ok(injective_sel(x, Sel::Pred(&inside), degree, field))
}

pub(crate) fn injective_masked(
    x: &SimplicialComplex,
    mask: Mask,
    degree: usize,
    field: FieldSpec,
) -> bool {
    if mask == 0 {
        return true;
    }
    injective_sel(x, Sel::Mask(mask), degree, field)
}

fn injective_sel(x: &SimplicialComplex, sel: Sel<'_>, degree: usize, field: FieldSpec) -> bool {
    let chains = x.chains();
    let k = degree + 1;
    let meet =
        chains.boundary_rank(k, Sel::All, field) - chains.boundary_rank_outside(k, sel, field);
    meet == chains.boundary_rank(k, sel, field)
}
