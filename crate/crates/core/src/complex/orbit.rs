use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use super::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Default bound on the number of facets an orbit closure may produce.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// A bijection of a finite label set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    map: BTreeMap<VertexId, VertexId>,
}

impl Permutation {
    pub fn from_map(labels: &[VertexId], map: BTreeMap<VertexId, VertexId>) -> Result<Permutation> {
        let domain: BTreeSet<VertexId> = labels.iter().copied().collect();
        let mut full = BTreeMap::new();
        for &v in &domain {
            full.insert(v, map.get(&v).copied().unwrap_or(v));
        }
        for k in map.keys() {
            if !domain.contains(k) {
                return Err(Error::InvalidPermutation(format!("{k} is not a label")));
            }
        }
        let image: BTreeSet<VertexId> = full.values().copied().collect();
        if image != domain {
            return Err(Error::InvalidPermutation(
                "map is not a bijection of the label set".into(),
            ));
        }
        Ok(Permutation { map: full })
    }

    /// Parses cycle notation (`(1 2 3)(4 5)`, `(1,2,3)`, or compact
    /// single-digit `(12345678)`) or one-line notation `[3,1,2]`, which
    /// lists the images of the sorted labels.
    pub fn parse(text: &str, labels: &[VertexId]) -> Result<Permutation> {
        let s = text.trim();
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::InvalidPermutation(format!("unterminated '{s}'")))?;
            let images = parse_list(inner, s)?;
            if images.len() != sorted.len() {
                return Err(Error::InvalidPermutation(format!(
                    "'{s}' has {} images for {} labels",
                    images.len(),
                    sorted.len()
                )));
            }
            return Permutation::from_map(labels, sorted.iter().copied().zip(images).collect());
        }
        let mut map = BTreeMap::new();
        let mut seen = BTreeSet::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in '{s}'")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unterminated cycle in '{s}'")))?;
            let body = &open[..close];
            let cycle = parse_list(body, s)?;
            for &v in &cycle {
                if !seen.insert(v) {
                    return Err(Error::InvalidPermutation(format!("{v} repeated in '{s}'")));
                }
            }
            for (i, &v) in cycle.iter().enumerate() {
                map.insert(v, cycle[(i + 1) % cycle.len()]);
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_map(labels, map)
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.map.get(&v).copied().unwrap_or(v)
    }

    pub fn apply_face(&self, f: &Face) -> Face {
        f.map(|v| self.apply(v))
            .expect("bijection keeps faces simple")
    }
}

fn parse_list(body: &str, whole: &str) -> Result<Vec<VertexId>> {
    let body = body.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let bad = || Error::InvalidPermutation(format!("cannot read '{whole}'"));
    if body.contains(|c: char| c == ',' || c.is_whitespace()) {
        body.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<VertexId>().map_err(|_| bad()))
            .collect()
    } else {
        body.chars()
            .map(|c| c.to_digit(10).ok_or_else(bad))
            .collect()
    }
}

/// A label set with generating permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationSpec {
    labels: Vec<VertexId>,
    generators: Vec<Permutation>,
}

impl PermutationSpec {
    pub fn new(labels: Vec<VertexId>, generators: Vec<Permutation>) -> PermutationSpec {
        PermutationSpec { labels, generators }
    }

    pub fn parse(labels: &[VertexId], generators: &[&str]) -> Result<PermutationSpec> {
        Ok(PermutationSpec {
            labels: labels.to_vec(),
            generators: generators
                .iter()
                .map(|g| Permutation::parse(g, labels))
                .collect::<Result<_>>()?,
        })
    }

    /// Labels `0..n` with the rotation `i ↦ i+1 (mod n)`.
    pub fn cyclic(n: u32) -> PermutationSpec {
        let labels: Vec<VertexId> = (0..n).collect();
        let map = labels.iter().map(|&i| (i, (i + 1) % n)).collect();
        PermutationSpec {
            generators: vec![Permutation::from_map(&labels, map).expect("rotation")],
            labels,
        }
    }

    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }
}

/// Closes `seeds` under the generators (work-queue to a fixpoint) and returns
/// the generated complex.
pub fn orbit_complex(spec: &PermutationSpec, seeds: &[Face]) -> Result<SimplicialComplex> {
    orbit_complex_capped(spec, seeds, DEFAULT_ORBIT_CAP)
}

pub fn orbit_complex_capped(
    spec: &PermutationSpec,
    seeds: &[Face],
    cap: usize,
) -> Result<SimplicialComplex> {
    let labels: BTreeSet<VertexId> = spec.labels.iter().copied().collect();
    let mut seen: HashSet<Face> = HashSet::new();
    let mut queue: VecDeque<Face> = VecDeque::new();
    for s in seeds {
        if let Some(v) = s.vertices().iter().find(|v| !labels.contains(v)) {
            return Err(Error::UnknownVertex(*v));
        }
        if seen.insert(s.clone()) {
            queue.push_back(s.clone());
        }
    }
    while let Some(f) = queue.pop_front() {
        for g in &spec.generators {
            let img = g.apply_face(&f);
            if seen.insert(img.clone()) {
                if seen.len() > cap {
                    return Err(Error::OrbitTooLarge { cap });
                }
                queue.push_back(img);
            }
        }
    }
    SimplicialComplex::from_facets(seen)
}
