//! Tightness: sigma/mu invariants, exhaustive certification, and the
//! criteria for closed 3-manifolds.

mod brute;
mod criterion;
mod sigma;

use serde::Serialize;

use crate::complex::VertexId;
use crate::homology::FieldSpec;

pub use brute::{
    brute_force_tight, brute_force_tight_with, BruteForceOptions, DEFAULT_BRUTE_FORCE_CAP,
};
pub use criterion::{
    induced_surface, link_cycle_screen, stackedness_criterion, tightness_criterion_3manifold,
    InducedSurface, LinkCycleScreen, StackedVerdict, StackednessReport,
};
pub use sigma::{
    binomial_identity_sides, closed_form_sigma0, connected_sum_sigma0, mu_vector, mu_vector_with,
    sigma_star_by_union, sigma_vector, sigma_vector_with, MuVector, SigmaOptions, SigmaVector,
    DEFAULT_SIGMA_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Tight,
    NotTight,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    BruteForce,
    Criterion,
}

/// Why a complex fails tightness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Tightness requires connectedness.
    Disconnected,
    /// H_degree(X[vertices]) → H_degree(X) is not injective.
    NonInjective {
        vertices: Vec<VertexId>,
        degree: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceItem {
    pub condition: String,
    pub pass: bool,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightnessReport {
    pub verdict: Verdict,
    pub method: Method,
    pub field: FieldSpec,
    pub witness: Option<Witness>,
    pub criteria_trace: Vec<TraceItem>,
}

impl TightnessReport {
    fn new(method: Method, field: FieldSpec) -> TightnessReport {
        TightnessReport {
            verdict: Verdict::Inconclusive,
            method,
            field,
            witness: None,
            criteria_trace: Vec::new(),
        }
    }

    fn trace(&mut self, condition: &str, pass: bool, value: String) {
        self.criteria_trace.push(TraceItem {
            condition: condition.to_string(),
            pass,
            value,
        });
    }

    pub fn is_tight(&self) -> bool {
        self.verdict == Verdict::Tight
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{faces, SimplicialComplex};
    use crate::homology::induced_map_injective;
    use crate::io::fixtures;

    #[test]
    fn rp2_tight_over_gf2_only() {
        let x = fixtures::rp2_6();
        assert!(brute_force_tight(&x, FieldSpec::GF2).unwrap().is_tight());
        let r = brute_force_tight(&x, FieldSpec::Q).unwrap();
        assert_eq!(r.verdict, Verdict::NotTight);
        let Some(Witness::NonInjective { vertices, degree }) = r.witness else {
            panic!("expected a witness")
        };
        assert!(!induced_map_injective(&x, &vertices, degree, FieldSpec::Q).unwrap());
    }

    #[test]
    fn disconnected_is_not_tight() {
        let x = SimplicialComplex::from_facets(faces(&[&[1, 2], &[3, 4]])).unwrap();
        let r = brute_force_tight(&x, FieldSpec::GF2).unwrap();
        assert_eq!(r.witness, Some(Witness::Disconnected));
    }

    #[test]
    fn strategies_agree() {
        let x = fixtures::rp2_6();
        let run = |strategy| {
            brute_force_tight_with(
                &x,
                FieldSpec::Q,
                BruteForceOptions {
                    strategy,
                    ..Default::default()
                },
            )
            .unwrap()
        };
        assert_eq!(
            run(crate::Strategy::Sequential),
            run(crate::Strategy::Parallel)
        );
    }

    #[test]
    fn cap_refusal_mentions_criterion() {
        let x = SimplicialComplex::simplex_boundary(0..5).unwrap();
        let opts = BruteForceOptions {
            cap: 4,
            ..Default::default()
        };
        let e = brute_force_tight_with(&x, FieldSpec::GF2, opts).unwrap_err();
        assert!(e.is_cap_refusal());
        assert!(e.to_string().contains("criterion"));
    }
}
