//! Sigma and mu invariants.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::homology::{reduced_betti_masked, serialize_rational, serialize_rationals, FieldSpec};

/// Largest vertex count `sigma_vector` enumerates by default.
pub const DEFAULT_SIGMA_CAP: usize = 24;

#[derive(Clone, Copy, Debug)]
pub struct SigmaOptions {
    pub cap: usize,
    pub strategy: Strategy,
}

impl Default for SigmaOptions {
    fn default() -> Self {
        SigmaOptions {
            cap: DEFAULT_SIGMA_CAP,
            strategy: Strategy::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaVector {
    pub field: FieldSpec,
    #[serde(serialize_with = "serialize_rationals")]
    pub sigma: Vec<BigRational>,
    #[serde(serialize_with = "serialize_rationals")]
    pub sigma_star: Vec<BigRational>,
}

impl SigmaVector {
    pub fn star(&self, i: usize) -> BigRational {
        self.sigma_star
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }
}

pub(crate) fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// σ_i = Σ_A β̃_i(X[A]) / C(n, |A|) over all vertex subsets A, including
/// the empty set (β̃₀(∅) = −1) and V(X).
pub fn sigma_vector(x: &SimplicialComplex, field: FieldSpec) -> Result<SigmaVector> {
    sigma_vector_with(x, field, SigmaOptions::default())
}

pub fn sigma_vector_with(
    x: &SimplicialComplex,
    field: FieldSpec,
    opts: SigmaOptions,
) -> Result<SigmaVector> {
    let n = x.num_vertices();
    if n > opts.cap {
        return Err(Error::CapExceeded {
            what: "sigma enumeration",
            vertices: n,
            cap: opts.cap,
            hint: "raise the cap explicitly or use the closed forms for connected sums",
        });
    }
    if n >= 64 {
        return Err(Error::TooManyVertices(n));
    }
    let levels = (x.dim() + 1).max(1) as usize;
    // sums[c][i] = Σ_{|A| = c} β̃_i(X[A])
    let ranges = exec::chunks(1u64 << n, 1 << 10);
    let partials = exec::map(&ranges, opts.strategy, |r| {
        let mut sums = vec![vec![0i64; levels]; n + 1];
        for mask in r.clone() {
            let b = reduced_betti_masked(x, mask, field);
            let row = &mut sums[mask.count_ones() as usize];
            for (acc, v) in row.iter_mut().zip(b) {
                *acc += v;
            }
        }
        sums
    });
    let mut sums = vec![vec![0i64; levels]; n + 1];
    for part in partials {
        for (row, prow) in sums.iter_mut().zip(part) {
            for (a, b) in row.iter_mut().zip(prow) {
                *a += b;
            }
        }
    }
    let sigma: Vec<BigRational> = (0..levels)
        .map(|i| {
            (0..=n).fold(BigRational::zero(), |acc, c| {
                acc + BigRational::new(
                    sums[c][i].into(),
                    binomial(BigInt::from(n), BigInt::from(c)),
                )
            })
        })
        .collect();
    let scale = BigRational::from_integer(BigInt::from(n + 1));
    let sigma_star = sigma.iter().map(|s| s / &scale).collect();
    Ok(SigmaVector {
        field,
        sigma,
        sigma_star,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuVector {
    pub field: FieldSpec,
    #[serde(serialize_with = "serialize_rationals")]
    pub mu: Vec<BigRational>,
    /// 1 + Σ_x σ₀*(X_x), reported when X is neighbourly (then equal to μ₁).
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "serialize_opt"
    )]
    pub mu1_neighbourly: Option<BigRational>,
}

fn serialize_opt<S: serde::Serializer>(
    r: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => serialize_rational(r, s),
        None => s.serialize_none(),
    }
}

/// μ₀ = Σ_x 1/(1 + f₀(X_x)), μ_i = δ_{i1}μ₀ + Σ_x σ*_{i−1}(X_x).
pub fn mu_vector(x: &SimplicialComplex, field: FieldSpec) -> Result<MuVector> {
    mu_vector_with(x, field, SigmaOptions::default())
}

pub fn mu_vector_with(
    x: &SimplicialComplex,
    field: FieldSpec,
    opts: SigmaOptions,
) -> Result<MuVector> {
    let levels = (x.dim() + 1).max(1) as usize;
    let per_vertex = exec::map(
        x.vertices(),
        opts.strategy,
        |&v| -> Result<(usize, SigmaVector)> {
            let link = x.link(v)?;
            let inner = SigmaOptions {
                strategy: Strategy::Sequential,
                ..opts
            };
            Ok((link.num_vertices(), sigma_vector_with(&link, field, inner)?))
        },
    );
    let per_vertex: Vec<(usize, SigmaVector)> = per_vertex.into_iter().collect::<Result<_>>()?;
    let mu0 = per_vertex.iter().fold(BigRational::zero(), |acc, (f0, _)| {
        acc + ratio(1, *f0 as i64 + 1)
    });
    let mut mu = vec![mu0.clone()];
    for i in 1..levels {
        let mut m = per_vertex
            .iter()
            .fold(BigRational::zero(), |acc, (_, s)| acc + s.star(i - 1));
        if i == 1 {
            m += &mu0;
        }
        mu.push(m);
    }
    let mu1_neighbourly = (x.is_neighbourly() && levels > 1).then(|| {
        BigRational::one()
            + per_vertex
                .iter()
                .fold(BigRational::zero(), |acc, (_, s)| acc + s.star(0))
    });
    Ok(MuVector {
        field,
        mu,
        mu1_neighbourly,
    })
}

/// σ₀*(k·I # ℓ·S²₄) = 617/1716·k + ℓ/20 − 1/4, where I is the icosahedron
/// boundary and S²₄ the tetrahedron boundary.
pub fn closed_form_sigma0(k: u64, l: u64) -> Result<BigRational> {
    if k == 0 && l == 0 {
        return Err(Error::InvalidParameter(
            "a connected sum needs at least one summand".into(),
        ));
    }
    Ok(ratio(617, 1716) * BigRational::from_integer(k.into())
        + ratio(1, 20) * BigRational::from_integer(l.into())
        - ratio(1, 4))
}

/// σ₀* of a connected sum of two d-spheres from the summands' values.
pub fn connected_sum_sigma0(s1: &BigRational, s2: &BigRational, d: usize) -> BigRational {
    s1 + s2 + ratio(1, d as i64 + 2)
}

/// σ_i*(X) computed as σ_i*(X₁) + σ_i*(X₂) − σ_i*(Y) for X = X₁ ∪ X₂ with
/// X₁, X₂ induced and Y = X₁ ∩ X₂ (i+2)-neighbourly.
pub fn sigma_star_by_union(
    x: &SimplicialComplex,
    x1: &SimplicialComplex,
    x2: &SimplicialComplex,
    i: usize,
    field: FieldSpec,
) -> Result<BigRational> {
    if x1.union(x2) != *x {
        return Err(Error::Precondition(
            "X is not the union of the two parts".into(),
        ));
    }
    for part in [x1, x2] {
        if x.induced_subcomplex(part.vertices())? != *part {
            return Err(Error::Precondition(
                "a part is not an induced subcomplex".into(),
            ));
        }
    }
    let common: Vec<_> = x1
        .vertices()
        .iter()
        .copied()
        .filter(|v| x2.has_vertex(*v))
        .collect();
    let y = x.induced_subcomplex(&common)?;
    if !y.is_k_neighbourly(i + 2) {
        return Err(Error::Precondition(format!(
            "the intersection is not {}-neighbourly",
            i + 2
        )));
    }
    let s = |c: &SimplicialComplex| sigma_vector(c, field).map(|v| v.star(i));
    Ok(s(x1)? + s(x2)? - s(&y)?)
}

/// Both sides of Σ_{i=0}^p C(p,i)/C(p+q+r, i+r) = (p+q+r+1)/((q+r+1)·C(q+r,r)).
pub fn binomial_identity_sides(p: u64, q: u64, r: u64) -> (BigRational, BigRational) {
    let b = |n: u64, k: u64| binomial(BigInt::from(n), BigInt::from(k));
    let lhs = (0..=p).fold(BigRational::zero(), |acc, i| {
        acc + BigRational::new(b(p, i), b(p + q + r, i + r))
    });
    let rhs = BigRational::new(
        BigInt::from(p + q + r + 1),
        BigInt::from(q + r + 1) * b(q + r, r),
    );
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixtures;

    #[test]
    fn tetrahedron_boundary_anchor() {
        let s = SimplicialComplex::simplex_boundary([0, 1, 2, 3]).unwrap();
        let v = sigma_vector(&s, FieldSpec::Q).unwrap();
        assert_eq!(v.sigma_star[0], ratio(-1, 5));
    }

    #[test]
    fn simplex_boundaries() {
        // S^{d-1}_{d+1}: boundary of the d-simplex
        for d in 2..=5u32 {
            let s = SimplicialComplex::simplex_boundary(0..d + 1).unwrap();
            let v = sigma_vector(&s, FieldSpec::GF2).unwrap();
            assert_eq!(v.sigma_star[0], ratio(-1, d as i64 + 2));
        }
    }

    #[test]
    fn torus_sigma() {
        let t = fixtures::torus7();
        for f in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Q] {
            let v = sigma_vector(&t, f).unwrap();
            assert_eq!(v.sigma, vec![ratio(-1, 1), ratio(8, 1), ratio(1, 1)]);
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_sigma0(1, 0).unwrap(), ratio(47, 429));
        assert_eq!(closed_form_sigma0(0, 1).unwrap(), ratio(-1, 5));
        assert_eq!(closed_form_sigma0(0, 2).unwrap(), ratio(-3, 20));
        assert!(closed_form_sigma0(0, 0).is_err());
        let m = ratio(-1, 5);
        assert_eq!(connected_sum_sigma0(&m, &m, 2), ratio(-3, 20));
    }

    #[test]
    fn cap_refusal() {
        let s = SimplicialComplex::simplex_boundary(0..6).unwrap();
        let opts = SigmaOptions {
            cap: 5,
            ..Default::default()
        };
        assert!(sigma_vector_with(&s, FieldSpec::Q, opts)
            .unwrap_err()
            .is_cap_refusal());
    }

    #[test]
    fn binomial_identity_small() {
        let (l, r) = binomial_identity_sides(2, 1, 1);
        assert_eq!(l, r);
    }
}
