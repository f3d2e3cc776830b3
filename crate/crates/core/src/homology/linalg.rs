//! Exact rank computations over GF(2), GF(p) and Q.
//!
//! Matrices are passed column-sparse: each column lists `(row, value)` pairs
//! with distinct rows. Ranks over Q use fraction-free (Bareiss) elimination
//! on `i128`, restarting over `BigInt` if an intermediate would overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

use super::field::FieldSpec;

pub(crate) type SparseCol = Vec<(u32, i64)>;

/// Rank of a column-sparse matrix with `nrows` rows over `field`.
pub(crate) fn sparse_rank(nrows: usize, cols: &[SparseCol], field: FieldSpec) -> usize {
    if nrows == 0 || cols.is_empty() {
        return 0;
    }
    match field {
        FieldSpec::Prime(2) => rank_gf2(nrows, cols),
        FieldSpec::Prime(p) => rank_mod_p(nrows, cols, p),
        FieldSpec::Rationals => rank_rational(nrows, cols),
    }
}

/// Rank of a dense matrix given as rows.
pub fn rank(rows: &[Vec<i64>], field: FieldSpec) -> usize {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let cols: Vec<SparseCol> = (0..ncols)
        .map(|j| {
            rows.iter()
                .enumerate()
                .filter_map(|(i, r)| r.get(j).filter(|v| **v != 0).map(|&v| (i as u32, v)))
                .collect()
        })
        .collect();
    sparse_rank(rows.len(), &cols, field)
}

fn rank_gf2(nrows: usize, cols: &[SparseCol]) -> usize {
    let words = nrows.div_ceil(64);
    // basis[r] holds a reduced vector whose lowest set bit is r
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; nrows];
    let mut rank = 0;
    for col in cols {
        let mut v = vec![0u64; words];
        for &(r, x) in col {
            if x & 1 == 1 {
                v[r as usize / 64] ^= 1 << (r % 64);
            }
        }
        while let Some(low) = lowest_bit(&v) {
            match &basis[low] {
                Some(b) => {
                    for (a, b) in v.iter_mut().zip(b) {
                        *a ^= b;
                    }
                }
                None => {
                    basis[low] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn rank_mod_p(nrows: usize, cols: &[SparseCol], p: u64) -> usize {
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; nrows];
    let mut rank = 0;
    for col in cols {
        let mut v = vec![0u64; nrows];
        for &(r, x) in col {
            v[r as usize] = x.rem_euclid(p as i64) as u64;
        }
        let mut start = 0;
        while let Some(low) = (start..nrows).find(|&i| v[i] != 0) {
            match &basis[low] {
                Some(b) => {
                    // b is normalized so b[low] == 1
                    let c = v[low];
                    for i in low..nrows {
                        if b[i] != 0 {
                            v[i] = (v[i] + (p - c) * b[i]) % p;
                        }
                    }
                    start = low + 1;
                }
                None => {
                    let inv = super::field::pow_mod(v[low], p - 2, p);
                    for x in v.iter_mut().skip(low) {
                        *x = *x * inv % p;
                    }
                    basis[low] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn rank_rational(nrows: usize, cols: &[SparseCol]) -> usize {
    // Work on the transpose when it is smaller; rank is invariant.
    let dense_rows: Vec<Vec<i64>> = {
        let mut m = vec![vec![0i64; cols.len()]; nrows];
        for (j, col) in cols.iter().enumerate() {
            for &(r, x) in col {
                m[r as usize][j] = x;
            }
        }
        m
    };
    let small: Vec<Vec<i128>> = dense_rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if let Some(r) = bareiss(small) {
        return r;
    }
    let big: Vec<Vec<BigInt>> = dense_rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss(big).expect("BigInt arithmetic cannot overflow")
}

/// Fraction-free Gaussian elimination. Returns `None` on overflow.
fn bareiss<T>(mut a: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Integer + CheckedMul + CheckedSub,
{
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..n {
        if rank == m {
            break;
        }
        let Some(piv) = (rank..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let (top, rest) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        let p = prow[col].clone();
        for row in rest.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..n {
                let x = row[j].checked_mul(&p)?;
                let y = if lead.is_zero() || prow[j].is_zero() {
                    T::zero()
                } else {
                    lead.checked_mul(&prow[j])?
                };
                let num = x.checked_sub(&y)?;
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                row[j] = q;
            }
            row[col] = T::zero();
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

/// Invariant factors (> 0) of an integer matrix given column-sparse, via
/// Smith normal form. The result is sorted so each divides the next.
pub(crate) fn invariant_factors(nrows: usize, cols: &[SparseCol]) -> Vec<BigInt> {
    let mut dense = vec![vec![0i64; cols.len()]; nrows];
    for (j, col) in cols.iter().enumerate() {
        for &(r, x) in col {
            dense[r as usize][j] = x;
        }
    }
    smith_diagonal(&dense)
}

/// Nonzero Smith invariant factors of a dense integer matrix.
pub fn smith_diagonal(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if let Some(d) = smith(small) {
        return d.into_iter().map(BigInt::from).collect();
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    smith(big).expect("BigInt arithmetic cannot overflow")
}

fn smith<T>(mut a: Vec<Vec<T>>) -> Option<Vec<T>>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        break;
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            // clear column t
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (top, rest) = a.split_at_mut(i);
                let prow = &top[t];
                let row = &mut rest[0];
                for j in t..n {
                    if !prow[j].is_zero() {
                        row[j] = row[j].checked_sub(&q.checked_mul(&prow[j])?)?;
                    }
                }
                if !row[t].is_zero() {
                    clean = false;
                }
            }
            // clear row t
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    if !row[t].is_zero() {
                        row[j] = row[j].checked_sub(&q.checked_mul(&row[t])?)?;
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest leftover in row/column t to the pivot
                let mut bi = t;
                let mut bj = t;
                for i in t + 1..m {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[bi][bj].abs() {
                        bi = i;
                        bj = t;
                    }
                }
                for j in t + 1..n {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[bi][bj].abs() {
                        bi = t;
                        bj = j;
                    }
                }
                a.swap(t, bi);
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
                continue;
            }
            // divisibility: fold a bad row into row t and retry
            let piv = a[t][t].clone();
            let bad =
                (t + 1..m).find(|&i| a[i][t + 1..].iter().any(|x| !x.mod_floor(&piv).is_zero()));
            match bad {
                Some(i) => {
                    let src = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(src) {
                        *x = x.clone() + y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    Some(diag)
}
