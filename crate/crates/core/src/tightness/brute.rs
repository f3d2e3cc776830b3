//! Tightness by exhaustive injectivity checks over induced subcomplexes.

use itertools::Itertools;

use crate::complex::{SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::homology::{injective_masked, FieldSpec};

use super::{Method, TightnessReport, Verdict, Witness};

/// Largest vertex count `brute_force_tight` enumerates by default.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 16;

#[derive(Clone, Copy, Debug)]
pub struct BruteForceOptions {
    pub cap: usize,
    pub strategy: Strategy,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions {
            cap: DEFAULT_BRUTE_FORCE_CAP,
            strategy: Strategy::default(),
        }
    }
}

pub fn brute_force_tight(x: &SimplicialComplex, field: FieldSpec) -> Result<TightnessReport> {
    brute_force_tight_with(x, field, BruteForceOptions::default())
}

/// Checks every proper nonempty vertex subset A and every degree i that
/// H_i(X[A]) → H_i(X) is injective. Subsets are visited by increasing size,
/// then lexicographically, so the witness is the first failure in that
/// order whatever the strategy.
pub fn brute_force_tight_with(
    x: &SimplicialComplex,
    field: FieldSpec,
    opts: BruteForceOptions,
) -> Result<TightnessReport> {
    let n = x.num_vertices();
    if n > opts.cap {
        return Err(Error::CapExceeded {
            what: "brute-force tightness",
            vertices: n,
            cap: opts.cap,
            hint: "use criterion mode for closed 3-manifolds",
        });
    }
    if n >= 64 {
        return Err(Error::TooManyVertices(n));
    }
    let mut report = TightnessReport::new(Method::BruteForce, field);
    if !x.is_connected() {
        report.verdict = Verdict::NotTight;
        report.witness = Some(Witness::Disconnected);
        return Ok(report);
    }
    let dim = x.dim().max(0) as usize;
    for size in 1..n {
        let masks: Vec<u64> = (0..n)
            .combinations(size)
            .map(|c| c.into_iter().fold(0u64, |m, i| m | 1 << i))
            .collect();
        let hit = exec::find_map_first(&masks, opts.strategy, |&mask| {
            (0..=dim)
                .find(|&i| !injective_masked(x, mask, i, field))
                .map(|i| (mask, i))
        });
        if let Some((mask, degree)) = hit {
            let vertices: Vec<VertexId> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| x.vertices()[i])
                .collect();
            report.verdict = Verdict::NotTight;
            report.witness = Some(Witness::NonInjective { vertices, degree });
            return Ok(report);
        }
    }
    report.verdict = Verdict::Tight;
    Ok(report)
}
