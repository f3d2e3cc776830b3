//! Tightness and stackedness of closed 3-manifolds from checkable criteria.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::binomial;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::complex::manifold::{is_closed_3manifold, is_closed_surface};
use crate::complex::{induced_cycles, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::homology::{betti, format_rational, orientable, FieldSpec};
use crate::sphere::{link_profile, LinkProfile};

use super::sigma::closed_form_sigma0;
use super::{Method, TightnessReport, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StackedVerdict {
    Stacked,
    NotStacked,
    Inconclusive,
}

/// Outcome of the binomial stackedness test C(n−4, 2) = 10·β₁, with the
/// hypotheses under which it decides stackedness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StackednessReport {
    pub verdict: StackedVerdict,
    pub field: FieldSpec,
    pub vertices: usize,
    pub beta1: i64,
    /// C(n−4, 2)
    pub lhs: u64,
    /// 10·β₁
    pub rhs: i64,
    pub locally_stacked: bool,
    pub neighbourly: bool,
    pub orientable: bool,
}

fn require_3manifold(m: &SimplicialComplex) -> Result<()> {
    if is_closed_3manifold(m) {
        Ok(())
    } else {
        Err(Error::NotClosed3Manifold)
    }
}

pub fn stackedness_criterion(m: &SimplicialComplex, field: FieldSpec) -> Result<StackednessReport> {
    require_3manifold(m)?;
    let profile = link_profile(m)?;
    stackedness_from(m, field, &profile)
}

fn stackedness_from(
    m: &SimplicialComplex,
    field: FieldSpec,
    profile: &LinkProfile,
) -> Result<StackednessReport> {
    let n = m.num_vertices();
    let beta1 = betti(m, field, false).get(1);
    let lhs = binomial(n as u64 - 4, 2);
    let rhs = 10 * beta1;
    let locally_stacked = profile.is_locally_stacked;
    let neighbourly = m.is_neighbourly();
    let orientable = orientable(m, field)?;
    let verdict = if !locally_stacked {
        // stacked manifolds are locally stacked
        StackedVerdict::NotStacked
    } else if neighbourly && orientable {
        if lhs as i64 == rhs {
            StackedVerdict::Stacked
        } else {
            StackedVerdict::NotStacked
        }
    } else {
        StackedVerdict::Inconclusive
    };
    Ok(StackednessReport {
        verdict,
        field,
        vertices: n,
        beta1,
        lhs,
        rhs,
        locally_stacked,
        neighbourly,
        orientable,
    })
}

/// Criterion-mode tightness of a closed 3-manifold.
///
/// Odd characteristic or Q: tight iff orientable, neighbourly and stacked
/// (by the binomial criterion). Characteristic 2: a neighbourly M whose
/// links are sums of tetrahedron and icosahedron boundaries is tight iff
/// β₁ = μ₁, with μ₁ from the closed form for such sums.
pub fn tightness_criterion_3manifold(
    m: &SimplicialComplex,
    field: FieldSpec,
) -> Result<TightnessReport> {
    require_3manifold(m)?;
    let mut report = TightnessReport::new(Method::Criterion, field);
    let neighbourly = m.is_neighbourly();
    report.trace("neighbourly", neighbourly, neighbourly.to_string());
    let profile = link_profile(m)?;
    report.trace(
        "link screen (every link a sum of tetrahedron and icosahedron boundaries)",
        profile.link_screen_pass,
        format!("k = {}", profile.k_total),
    );
    report.trace(
        "locally stacked",
        profile.is_locally_stacked,
        profile.is_locally_stacked.to_string(),
    );

    if field.characteristic() != 2 {
        let st = stackedness_from(m, field, &profile)?;
        report.trace("orientable", st.orientable, st.orientable.to_string());
        let stacked = st.verdict == StackedVerdict::Stacked;
        report.trace(
            "stacked (by criterion C(n-4,2) = 10 b1)",
            stacked,
            format!("{} vs {} ({:?})", st.lhs, st.rhs, st.verdict),
        );
        report.verdict = if neighbourly && st.orientable && stacked {
            Verdict::Tight
        } else {
            Verdict::NotTight
        };
        return Ok(report);
    }

    if !neighbourly {
        report.verdict = Verdict::NotTight;
        return Ok(report);
    }
    if !profile.link_screen_pass {
        report.verdict = Verdict::NotTight;
        return Ok(report);
    }
    let beta1 = betti(m, field, false).get(1);
    let mut mu1 = BigRational::one();
    for p in &profile.vertices {
        mu1 += closed_form_sigma0(p.k as u64, p.l as u64)?;
    }
    let b1 = BigRational::from_integer(beta1.into());
    report.trace(
        "b1 <= mu1",
        b1 <= mu1,
        format!("b1 = {beta1}, mu1 = {}", format_rational(&mu1)),
    );
    let equal = b1 == mu1;
    report.trace("b1 = mu1", equal, equal.to_string());
    report.verdict = if equal {
        Verdict::Tight
    } else {
        Verdict::NotTight
    };
    Ok(report)
}

/// The induced subcomplex on a vertex and an induced cycle of its link,
/// with the checks that hold for it when the ambient complex is tight.
#[derive(Clone, Debug, Serialize)]
pub struct InducedSurface {
    #[serde(skip)]
    pub surface: SimplicialComplex,
    pub vertex: VertexId,
    pub cycle: Vec<VertexId>,
    pub is_closed_surface: bool,
    pub is_neighbourly: bool,
    pub euler_characteristic: i64,
    /// Cycle length is not 1 mod 3 (required for characteristic-2 tightness).
    pub mod3_ok: bool,
    /// Cycle length avoids 0, 1, 4, 5, 7, 8, 9, 10 mod 12 (odd characteristic).
    pub mod12_ok: bool,
}

pub(crate) fn mod3_ok(n: usize) -> bool {
    n % 3 != 1
}

pub(crate) fn mod12_ok(n: usize) -> bool {
    ![0, 1, 4, 5, 7, 8, 9, 10].contains(&(n % 12))
}

/// Builds M[V(C) ∪ {x}] for a cycle C given in cyclic order, which must be
/// an induced cycle of the link of x.
pub fn induced_surface(
    m: &SimplicialComplex,
    x: VertexId,
    cycle: &[VertexId],
) -> Result<InducedSurface> {
    let link = m.link(x)?;
    let n = cycle.len();
    let distinct: BTreeSet<VertexId> = cycle.iter().copied().collect();
    if n < 3 || distinct.len() != n {
        return Err(Error::NotInducedCycle(format!("{cycle:?} is not a cycle")));
    }
    if let Some(v) = cycle.iter().find(|v| !link.has_vertex(**v)) {
        return Err(Error::NotInducedCycle(format!(
            "{v} is not in the link of {x}"
        )));
    }
    let sub = link.induced_subcomplex(cycle)?;
    let graph = sub.graph();
    let is_cycle = sub.dim() == 1
        && (0..n).all(|i| graph[&cycle[i]].contains(&cycle[(i + 1) % n]))
        && graph.values().all(|nb| nb.len() == 2);
    if !is_cycle {
        return Err(Error::NotInducedCycle(format!(
            "{cycle:?} is not an induced cycle in the link of {x}"
        )));
    }
    let mut vs: Vec<VertexId> = cycle.to_vec();
    vs.push(x);
    let surface = m.induced_subcomplex(&vs)?;
    Ok(InducedSurface {
        is_closed_surface: is_closed_surface(&surface),
        is_neighbourly: surface.is_neighbourly(),
        euler_characteristic: surface.euler_characteristic(),
        vertex: x,
        cycle: cycle.to_vec(),
        mod3_ok: mod3_ok(n),
        mod12_ok: mod12_ok(n),
        surface,
    })
}

/// Induced-cycle lengths of every vertex link, with the lengths that
/// tightness over the field rules out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkCycleScreen {
    pub field: FieldSpec,
    /// vertex → (cycle length → count)
    pub lengths: BTreeMap<VertexId, BTreeMap<usize, usize>>,
    /// (vertex, length) pairs forbidden for a tight complex.
    pub violations: Vec<(VertexId, usize)>,
}

impl LinkCycleScreen {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn link_cycle_screen(m: &SimplicialComplex, field: FieldSpec) -> Result<LinkCycleScreen> {
    let mut lengths = BTreeMap::new();
    let mut violations = Vec::new();
    for &v in m.vertices() {
        let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
        for c in induced_cycles(&m.link(v)?, None) {
            *hist.entry(c.len()).or_default() += 1;
        }
        for &len in hist.keys() {
            let ok = if field.characteristic() == 2 {
                mod3_ok(len)
            } else {
                mod12_ok(len)
            };
            if !ok {
                violations.push((v, len));
            }
        }
        lengths.insert(v, hist);
    }
    Ok(LinkCycleScreen {
        field,
        lengths,
        violations,
    })
}
