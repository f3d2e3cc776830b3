//! Complex documents (JSON) and the fixture catalog.
//!
//! A document is a JSON object with a `name`, optional `vertices`, and
//! either explicit `facets` or an `orbit` section (`generators` in cycle
//! notation plus `seeds`). An optional `f_vector` is checked against the
//! realized complex.
//!
//! ```json
//! {"name": "walkup-j", "vertices": [0,1,2,3,4,5,6,7,8,9],
//!  "orbit": {"generators": ["(0 1 2 3 4 5 6 7 8 9)"], "seeds": [[1,2,3,4,5]]},
//!  "f_vector": [10, 40, 60, 40, 10]}
//! ```

pub mod fixtures;

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::{
    orbit_complex_capped, Face, PermutationSpec, SimplicialComplex, VertexId, DEFAULT_ORBIT_CAP,
};
use crate::error::{Error, Result};
use crate::homology::FieldSpec;

/// Environment variable holding the default comma-separated prime list.
pub const PRIMES_ENV: &str = "TIGHTKIT_PRIMES";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSection {
    pub generators: Vec<String>,
    pub seeds: Vec<Vec<VertexId>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<VertexId>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit: Option<OrbitSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_vector: Option<Vec<usize>>,
}

fn faces_of(lists: &[Vec<VertexId>]) -> Result<Vec<Face>> {
    lists.iter().map(|f| Face::new(f.iter().copied())).collect()
}

impl ComplexDocument {
    pub fn from_complex(name: &str, x: &SimplicialComplex) -> ComplexDocument {
        ComplexDocument {
            name: name.to_string(),
            vertices: Some(x.vertices().to_vec()),
            facets: Some(x.facets().iter().map(|f| f.vertices().to_vec()).collect()),
            orbit: None,
            f_vector: Some(x.f_vector()),
        }
    }

    pub fn parse(text: &str) -> Result<ComplexDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Builds the complex, expanding orbits (at most `orbit_cap` facets).
    pub fn realize_capped(&self, orbit_cap: usize) -> Result<SimplicialComplex> {
        let x = match (&self.facets, &self.orbit) {
            (Some(_), Some(_)) => {
                return Err(Error::InvalidParameter(
                    "a document has either facets or an orbit, not both".into(),
                ))
            }
            (None, None) => {
                return Err(Error::InvalidParameter(
                    "document has no facets or orbit".into(),
                ))
            }
            (Some(facets), None) => SimplicialComplex::from_facets(faces_of(facets)?)?,
            (None, Some(orbit)) => {
                let seeds = faces_of(&orbit.seeds)?;
                let labels: Vec<VertexId> = match &self.vertices {
                    Some(v) => v.clone(),
                    None => seeds
                        .iter()
                        .flat_map(|f| f.vertices().iter().copied())
                        .collect::<BTreeSet<_>>()
                        .into_iter()
                        .collect(),
                };
                let gens: Vec<&str> = orbit.generators.iter().map(String::as_str).collect();
                let spec = PermutationSpec::parse(&labels, &gens)?;
                orbit_complex_capped(&spec, &seeds, orbit_cap)?
            }
        };
        if let Some(vs) = &self.vertices {
            let declared: BTreeSet<VertexId> = vs.iter().copied().collect();
            if declared.len() != vs.len()
                || !declared.iter().copied().eq(x.vertices().iter().copied())
            {
                return Err(Error::Corrupt(format!(
                    "declared vertices {vs:?} differ from the vertices of the facets"
                )));
            }
        }
        if let Some(fv) = &self.f_vector {
            let computed = x.f_vector();
            if *fv != computed {
                return Err(Error::FVectorMismatch {
                    declared: fv.clone(),
                    computed,
                });
            }
        }
        Ok(x)
    }

    pub fn realize(&self) -> Result<SimplicialComplex> {
        self.realize_capped(DEFAULT_ORBIT_CAP)
    }
}

/// Parses and realizes a document.
pub fn load_str(text: &str) -> Result<SimplicialComplex> {
    ComplexDocument::parse(text)?.realize()
}

pub fn load(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    load_str(&std::fs::read_to_string(path)?)
}

/// Writes `x` as an explicit-facet document with its f-vector.
pub fn emit(x: &SimplicialComplex, name: &str, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(
        path,
        ComplexDocument::from_complex(name, x).to_json() + "\n",
    )?;
    Ok(())
}

/// Fields used when none are requested: the primes from the environment
/// (default 2, 3, 5, 7) followed by Q.
pub fn default_fields() -> Result<Vec<FieldSpec>> {
    let primes = std::env::var(PRIMES_ENV).unwrap_or_else(|_| "2,3,5,7".to_string());
    parse_prime_list(&primes)
}

pub fn parse_prime_list(s: &str) -> Result<Vec<FieldSpec>> {
    let mut out = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let p: u64 = tok
            .parse()
            .map_err(|_| Error::UnknownField(tok.to_string()))?;
        out.push(FieldSpec::prime(p)?);
    }
    out.push(FieldSpec::Rationals);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn facets_document() {
        let x = load_str(r#"{"name": "x", "facets": [[1,2,3],[2,3,4],[1,4]]}"#).unwrap();
        assert_eq!(x.f_vector(), vec![4, 6, 2]);
    }

    #[test]
    fn orbit_document() {
        let doc = r#"{"name": "walkup-j", "vertices": [0,1,2,3,4,5,6,7,8,9],
            "orbit": {"generators": ["(0 1 2 3 4 5 6 7 8 9)"], "seeds": [[1,2,3,4,5]]},
            "f_vector": [10, 40, 60, 40, 10]}"#;
        assert_eq!(load_str(doc).unwrap().num_vertices(), 10);
    }

    #[test]
    fn malformed_face() {
        let e = load_str(r#"{"name": "x", "facets": [[1,1,2]]}"#).unwrap_err();
        assert!(matches!(e, Error::DuplicateVertex { vertex: 1, .. }));
    }

    #[test]
    fn parse_error_position() {
        let e = load_str("{\"name\": \"x\",\n \"facets\": [[1,2,]]}").unwrap_err();
        let Error::Parse { line, .. } = e else {
            panic!("{e:?}")
        };
        assert_eq!(line, 2);
    }

    #[test]
    fn declared_f_vector_checked() {
        let e = load_str(r#"{"name": "x", "facets": [[1,2]], "f_vector": [3, 1]}"#).unwrap_err();
        assert!(matches!(e, Error::FVectorMismatch { .. }));
    }

    #[test]
    fn orbit_cap() {
        let doc = ComplexDocument::parse(
            r#"{"name": "j", "vertices": [0,1,2,3,4,5,6,7,8,9], "orbit": {"generators": ["(0 1 2 3 4 5 6 7 8 9)"], "seeds": [[0,1,2]]}}"#,
        )
        .unwrap();
        assert!(doc.realize_capped(3).unwrap_err().is_cap_refusal());
    }

    #[test]
    fn prime_lists() {
        assert_eq!(
            parse_prime_list("2, 3").unwrap(),
            vec![FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Q]
        );
        assert!(parse_prime_list("4").is_err());
    }
}
