//! Integer feasibility conditions for ℤ₂-tight triangulated 3-manifolds,
//! and regeneration of the small-parameter tables.
//!
//! For a ℤ₂-tight closed 3-manifold with n vertices and β₁ = β₁(M; ℤ₂),
//! summing the vertex-link closed forms gives
//! 429((n−4)(n−5) − 20β₁) = 776k, where k counts icosahedron summands over
//! all vertex links and 0 ≤ k ≤ n⌊(n−4)/9⌋.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::serialize_rational;

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

/// (n−4)(n−5)
fn quad(n: u64) -> BigInt {
    big(n - 4) * big(n - 5)
}

/// Largest possible k: n⌊(n−4)/9⌋.
fn k_max(n: u64) -> BigInt {
    big(n) * big((n - 4) / 9)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamFlags {
    /// (n−4)(n−5) ≡ 20β₁ (mod 776)
    pub congruence_776: bool,
    /// (n−4)(n−5) ≥ 20β₁
    pub lower_bound: bool,
    /// (n−4)(n−5) = 20β₁, the stacked case
    pub lower_bound_stacked_equality: bool,
    /// 429(n−4)(n−5) − 776n⌊(n−4)/9⌋ ≤ 8580β₁
    pub upper_bound_b: bool,
    pub upper_bound_b_equality: bool,
    /// (n−4)(617n − 3861) ≤ 15444β₁
    pub upper_bound_512: bool,
    /// equality in the previous bound: locally icosian
    pub icosian_equality: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamReport {
    pub n: u64,
    pub beta1: u64,
    /// 429((n−4)(n−5) − 20β₁)/776 when integral.
    #[serde(serialize_with = "serialize_opt_int")]
    pub k: Option<BigInt>,
    pub flags: ParamFlags,
    /// All necessary conditions hold.
    pub feasible: bool,
}

fn serialize_opt_int<S: serde::Serializer>(
    k: &Option<BigInt>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match k {
        Some(k) => s.collect_str(k),
        None => s.serialize_none(),
    }
}

pub fn check_parameters(n: u64, beta1: u64) -> Result<ParamReport> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "n = {n} must be at least 5"
        )));
    }
    let q = quad(n);
    let b = big(beta1);
    let delta = &q - big(20) * &b;
    let congruence_776 = delta.mod_floor(&big(776)).is_zero();
    let num = big(429) * &delta;
    let k = num.is_multiple_of(&big(776)).then(|| &num / big(776));
    let lhs_b = big(429) * &q - big(776) * k_max(n);
    let rhs_b = big(8580) * &b;
    let lhs_512 = big(n - 4) * (big(617) * big(n) - big(3861));
    let rhs_512 = big(15444) * &b;
    let flags = ParamFlags {
        congruence_776,
        lower_bound: !delta.is_negative(),
        lower_bound_stacked_equality: delta.is_zero(),
        upper_bound_b: lhs_b <= rhs_b,
        upper_bound_b_equality: lhs_b == rhs_b,
        upper_bound_512: lhs_512 <= rhs_512,
        icosian_equality: lhs_512 == rhs_512,
    };
    let feasible =
        flags.congruence_776 && flags.lower_bound && flags.upper_bound_b && flags.upper_bound_512;
    Ok(ParamReport {
        n,
        beta1,
        k,
        flags,
        feasible,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u64,
    pub beta1: u64,
    /// Total number of icosahedron summands over all vertex links.
    pub k: u64,
}

fn require_nmax(n_max: u64) -> Result<()> {
    if n_max < 5 {
        return Err(Error::InvalidParameter(format!(
            "n_max = {n_max} must be at least 5"
        )));
    }
    Ok(())
}

fn exact_div(num: &BigInt, den: u64) -> Option<u64> {
    let (q, r) = num.div_rem(&big(den));
    if r.is_zero() && !q.is_negative() {
        q.try_into().ok()
    } else {
        None
    }
}

/// Locally icosian parameters: n ≡ 4 (mod 9) and equality in
/// (n−4)(617n − 3861) ≤ 15444β₁.
pub fn enumerate_table1(n_max: u64) -> Result<Vec<TableRow>> {
    require_nmax(n_max)?;
    Ok((13..=n_max)
        .step_by(9)
        .filter_map(|n| {
            let num = big(n - 4) * (big(617) * big(n) - big(3861));
            let beta1 = exact_div(&num, 15444)?;
            Some(TableRow {
                n,
                beta1,
                k: n * ((n - 4) / 9),
            })
        })
        .collect())
}

/// All β₁ feasible for a non-stacked manifold on n vertices, increasing.
pub fn table2_candidates(n: u64) -> Vec<TableRow> {
    if n < 5 {
        return Vec::new();
    }
    let q = quad(n);
    let m_max: u64 = (k_max(n) / big(429)).try_into().unwrap_or(0);
    (1..=m_max)
        .rev()
        .filter_map(|m| {
            let beta1 = exact_div(&(&q - big(776 * m)), 20)?;
            let r = check_parameters(n, beta1).ok()?;
            r.feasible.then_some(TableRow {
                n,
                beta1,
                k: 429 * m,
            })
        })
        .collect()
}

/// Non-stacked ℤ₂-tight parameters: the minimal feasible β₁ for each n.
pub fn enumerate_table2(n_max: u64) -> Result<Vec<TableRow>> {
    require_nmax(n_max)?;
    Ok((5..=n_max)
        .filter_map(|n| table2_candidates(n).into_iter().next())
        .collect())
}

/// Like [`enumerate_table2`] but listing every feasible β₁.
pub fn enumerate_table2_verbose(n_max: u64) -> Result<Vec<TableRow>> {
    require_nmax(n_max)?;
    Ok((5..=n_max).flat_map(table2_candidates).collect())
}

/// Parameters with equality in 429(n−4)(n−5) − 776n⌊(n−4)/9⌋ ≤ 8580β₁ and
/// at least one icosahedron summand.
pub fn enumerate_table3(n_max: u64) -> Result<Vec<TableRow>> {
    require_nmax(n_max)?;
    Ok((5..=n_max)
        .filter_map(|n| {
            let k = n * ((n - 4) / 9);
            if k == 0 {
                return None;
            }
            let num = big(429) * quad(n) - big(776) * big(k);
            let beta1 = exact_div(&num, 8580)?;
            Some(TableRow { n, beta1, k })
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyEntry {
    pub k: u64,
    pub n: u64,
    pub homeomorphism_types: Vec<String>,
}

/// Values k ≤ beta1_max for which (n−4)(n−5) = 20k has an integer solution
/// n ≥ 5: the possible β₁ of stacked tight 3-manifolds.
pub fn cor514_topology_list(beta1_max: u64) -> Vec<TopologyEntry> {
    let mut out = Vec::new();
    let mut n = 5u64;
    loop {
        let q = (n - 4) * (n - 5);
        if q > 20 * beta1_max {
            break;
        }
        if q.is_multiple_of(20) {
            let k = q / 20;
            let homeomorphism_types = if k == 0 {
                vec!["S^3".to_string()]
            } else {
                vec![
                    format!("(S^2 x S^1)^#{k}"),
                    format!("(S^2 twisted-x S^1)^#{k}"),
                ]
            };
            out.push(TopologyEntry {
                k,
                n,
                homeomorphism_types,
            });
        }
        n += 1;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpreerBound {
    pub n: u64,
    pub ell: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub exact: BigRational,
    /// Ceiling of `exact`.
    pub value: u64,
}

/// ⌈C(⌊n/2⌋−1, ℓ+1)·C(⌈n/2⌉−1, ℓ+1) / C(n−1, ℓ+1)⌉, the lower bound on
/// β_ℓ for tight (ℓ−1)-connected (2ℓ+1)-manifolds on n vertices.
pub fn spreer_min_beta(n: u64, ell: u64) -> Result<SpreerBound> {
    if ell < 1 {
        return Err(Error::InvalidParameter("ell must be at least 1".into()));
    }
    if n < 2 * ell + 4 {
        return Err(Error::InvalidParameter(format!(
            "n must be at least {}",
            2 * ell + 4
        )));
    }
    let b = |a: u64| binomial(big(a), big(ell + 1));
    let exact = BigRational::new(b(n / 2 - 1) * b(n.div_ceil(2) - 1), b(n - 1));
    let value = exact
        .ceil()
        .to_integer()
        .try_into()
        .map_err(|_| Error::InvalidParameter("bound exceeds 64 bits".into()))?;
    Ok(SpreerBound {
        n,
        ell,
        exact,
        value,
    })
}
