//! Named example complexes.
//!
//! Builders return complexes directly; [`load_fixture`] also runs each
//! fixture's self-check (f-vector and manifold flags) and fails loudly if it
//! does not hold.
//!
//! Labellings: the icosahedron has apex 0, upper ring 1..5, lower ring
//! 6..10 (vertex 5+i sits below the edge between i and i+1), and bottom 11.
//! The 7-vertex torus is the ℤ₇-orbit of 124 and 134 on 0..6.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::manifold::{is_closed_3manifold, is_closed_surface, is_pseudomanifold};
use crate::complex::{
    connected_sum, faces, orbit_complex, Face, PermutationSpec, SimplicialComplex, VertexId,
};
use crate::error::{Error, Result};
use crate::homology::{betti, orientable, FieldSpec};
use crate::sphere::is_2sphere;

pub fn std_sphere(d: u32) -> SimplicialComplex {
    SimplicialComplex::simplex_boundary(0..d + 2).expect("nonempty simplex")
}

pub fn icosahedron() -> SimplicialComplex {
    let ring = |i: u32| (i - 1) % 5 + 1;
    let mut fs = Vec::new();
    for i in 1..=5 {
        let (u, u1) = (ring(i), ring(i + 1));
        let (l, l1) = (u + 5, u1 + 5);
        fs.push(vec![0, u, u1]);
        fs.push(vec![11, l, l1]);
        fs.push(vec![u, u1, l]);
        fs.push(vec![u1, l, l1]);
    }
    SimplicialComplex::from_facets(fs.into_iter().map(|f| Face::new(f).expect("distinct")))
        .expect("nonempty")
}

pub fn rp2_6() -> SimplicialComplex {
    SimplicialComplex::from_facets(faces(&[
        &[1, 2, 3],
        &[1, 3, 4],
        &[1, 4, 5],
        &[1, 5, 6],
        &[1, 2, 6],
        &[2, 3, 5],
        &[2, 4, 5],
        &[2, 4, 6],
        &[3, 4, 6],
        &[3, 5, 6],
    ]))
    .expect("nonempty")
}

fn cyclic_orbit(n: u32, seeds: &[&[VertexId]]) -> SimplicialComplex {
    orbit_complex(&PermutationSpec::cyclic(n), &faces(seeds)).expect("small orbit")
}

pub fn torus7() -> SimplicialComplex {
    cyclic_orbit(7, &[&[1, 2, 4], &[1, 3, 4]])
}

pub fn walkup_j() -> SimplicialComplex {
    cyclic_orbit(10, &[&[1, 2, 3, 4, 5]])
}

pub fn walkup_k() -> SimplicialComplex {
    walkup_j().boundary()
}

pub fn lutz_l() -> SimplicialComplex {
    cyclic_orbit(
        10,
        &[&[1, 2, 3, 6], &[1, 2, 3, 7], &[1, 2, 5, 7], &[1, 3, 6, 8]],
    )
}

/// Generators of a PGL(2,7) action on 1..8. The often-quoted triple
/// (12345678), (132645), (16)(23)(45)(78) generates all of S₈ (whose orbit
/// of 1235 is every 4-set), so the 6-cycle is taken as (134625) and the
/// involution, which lies in no order-336 group containing the 8-cycle, is
/// dropped.
pub const EMCH_GENERATORS: [&str; 2] = ["(12345678)", "(134625)"];

pub fn emch_p() -> SimplicialComplex {
    let labels: Vec<VertexId> = (1..=8).collect();
    let spec = PermutationSpec::parse(&labels, &EMCH_GENERATORS).expect("valid generators");
    orbit_complex(&spec, &faces(&[&[1, 2, 3, 5]])).expect("small orbit")
}

/// Neighbourly 2-complex with maximal faces 123, 234, 14.
pub fn triangle_pair() -> SimplicialComplex {
    SimplicialComplex::from_facets(faces(&[&[1, 2, 3], &[2, 3, 4], &[1, 4]])).expect("nonempty")
}

/// Cone with apex 7 over the 6-vertex projective plane, plus the 5-simplex
/// on the base vertices.
pub fn cone_rp2() -> SimplicialComplex {
    let cone = rp2_6().cone(7).expect("7 is fresh");
    cone.union(&SimplicialComplex::simplex(1..=6).expect("nonempty"))
}

/// Boundary of the ℤ₉-orbit of 01234: a neighbourly 9-vertex triangulation
/// of the twisted S²-bundle over S¹.
pub fn twisted_s2s1_9() -> SimplicialComplex {
    cyclic_orbit(9, &[&[0, 1, 2, 3, 4]]).boundary()
}

/// Random stacked 2-sphere on `n ≥ 4` vertices: repeated subdivision of
/// random triangles, starting from the tetrahedron boundary on 0..3.
pub fn random_stacked_sphere(n: usize, seed: u64) -> Result<SimplicialComplex> {
    if n < 4 {
        return Err(Error::InvalidParameter(
            "a stacked 2-sphere needs at least 4 vertices".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut facets: Vec<[VertexId; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    for v in 4..n as VertexId {
        let t = facets.swap_remove(rng.gen_range(0..facets.len()));
        facets.push([t[0], t[1], v]);
        facets.push([t[0], t[2], v]);
        facets.push([t[1], t[2], v]);
    }
    SimplicialComplex::from_facets(
        facets
            .iter()
            .map(|f| Face::new(f.iter().copied()).expect("distinct")),
    )
}

/// Connected sum of `k ≥ 1` icosahedra along random facets with random
/// orientation-compatible pairings.
pub fn icosian_sum(k: usize, seed: u64) -> Result<SimplicialComplex> {
    random_sum(k, seed, &icosahedron())
}

/// Connected sum of `k ≥ 1` copies of `piece` along random facets.
pub fn random_sum(k: usize, seed: u64, piece: &SimplicialComplex) -> Result<SimplicialComplex> {
    if k == 0 {
        return Err(Error::InvalidParameter("need at least one summand".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = piece.clone();
    for _ in 1..k {
        let sigma = acc.facets().choose(&mut rng).expect("nonempty").clone();
        let tau = piece.facets().choose(&mut rng).expect("nonempty").clone();
        let mut image = tau.vertices().to_vec();
        image.rotate_left(rng.gen_range(0..3));
        if rng.gen_bool(0.5) {
            image.swap(0, 1);
        }
        let psi: Vec<(VertexId, VertexId)> = sigma.vertices().iter().copied().zip(image).collect();
        acc = connected_sum(&acc, &sigma, piece, &tau, &psi)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureInfo {
    pub name: &'static str,
    pub description: &'static str,
}

pub fn catalog() -> Vec<FixtureInfo> {
    let e = |name, description| FixtureInfo { name, description };
    vec![
        e("std-sphere:<d>", "boundary of the (d+1)-simplex on 0..d+1"),
        e("icosahedron", "boundary of the icosahedron, 12 vertices"),
        e("rp2-6", "6-vertex real projective plane"),
        e("torus-7", "7-vertex torus"),
        e(
            "walkup-j",
            "Walkup's locally stacked 4-manifold with boundary, 10 vertices",
        ),
        e(
            "walkup-k",
            "boundary of walkup-j, a stacked S2 x S1 on 10 vertices",
        ),
        e(
            "lutz-l",
            "Lutz's neighbourly locally stacked S2 x S1 on 10 vertices",
        ),
        e(
            "emch-p",
            "Emch's 8-vertex 3-pseudomanifold with torus links",
        ),
        e(
            "triangle-pair-4",
            "neighbourly 2-complex with maximal faces 123, 234, 14",
        ),
        e(
            "cone-rp2",
            "cone over rp2-6 with apex 7, plus the simplex 123456",
        ),
        e(
            "twisted-s2s1-9",
            "9-vertex neighbourly stacked twisted S2 x S1",
        ),
        e(
            "stacked-sphere:<n>",
            "random stacked 2-sphere on n vertices (uses --seed)",
        ),
        e(
            "icosian-sum:<k>",
            "random connected sum of k icosahedra (uses --seed)",
        ),
    ]
}

fn check(name: &str, ok: bool, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::FixtureCheck {
            name: name.to_string(),
            reason: reason.to_string(),
        })
    }
}

fn check_f(name: &str, x: &SimplicialComplex, f: &[usize]) -> Result<()> {
    check(
        name,
        x.f_vector() == f,
        &format!("f-vector {:?}, expected {f:?}", x.f_vector()),
    )
}

fn param<T: std::str::FromStr>(name: &str, arg: Option<&str>) -> Result<T> {
    arg.and_then(|a| a.parse().ok()).ok_or_else(|| {
        Error::InvalidParameter(format!("fixture '{name}' needs a numeric parameter"))
    })
}

/// Builds a catalog fixture by name and runs its self-check.
pub fn load_fixture(name: &str, seed: u64) -> Result<SimplicialComplex> {
    let (base, arg) = match name.split_once(':') {
        Some((b, a)) => (b, Some(a)),
        None => (name, None),
    };
    let x = match base {
        "std-sphere" => {
            let d: u32 = param(name, arg)?;
            if !(1..=12).contains(&d) {
                return Err(Error::InvalidParameter(
                    "std-sphere dimension must be in 1..=12".into(),
                ));
            }
            std_sphere(d)
        }
        "icosahedron" => {
            let x = icosahedron();
            check_f(name, &x, &[12, 30, 20])?;
            check(
                name,
                is_2sphere(&x) && x.graph().values().all(|n| n.len() == 5),
                "not a 5-regular 2-sphere",
            )?;
            x
        }
        "rp2-6" => {
            let x = rp2_6();
            check_f(name, &x, &[6, 15, 10])?;
            check(
                name,
                is_closed_surface(&x) && x.euler_characteristic() == 1,
                "not a projective plane",
            )?;
            x
        }
        "torus-7" => {
            let x = torus7();
            check_f(name, &x, &[7, 21, 14])?;
            check(
                name,
                is_closed_surface(&x)
                    && x.is_neighbourly()
                    && x.euler_characteristic() == 0
                    && orientable(&x, FieldSpec::Q)?
                    && betti(&x, FieldSpec::Q, false).values == [1, 2, 1],
                "not a neighbourly orientable torus",
            )?;
            x
        }
        "walkup-j" => {
            let x = walkup_j();
            check_f(name, &x, &[10, 40, 60, 40, 10])?;
            x
        }
        "walkup-k" => {
            let x = walkup_k();
            check_f(name, &x, &[10, 40, 60, 30])?;
            check(name, is_closed_3manifold(&x), "not a closed 3-manifold")?;
            x
        }
        "lutz-l" => {
            let x = lutz_l();
            check_f(name, &x, &[10, 45, 70, 35])?;
            check(
                name,
                is_closed_3manifold(&x) && x.is_neighbourly(),
                "not a neighbourly 3-manifold",
            )?;
            x
        }
        "emch-p" => {
            let x = emch_p();
            check_f(name, &x, &[8, 28, 56, 28])?;
            check(name, is_pseudomanifold(&x), "not a pseudomanifold")?;
            x
        }
        "triangle-pair-4" => {
            let x = triangle_pair();
            check_f(name, &x, &[4, 6, 2])?;
            x
        }
        "cone-rp2" => {
            let x = cone_rp2();
            check(
                name,
                x.num_vertices() == 7 && x.dim() == 5,
                "expected 7 vertices and dimension 5",
            )?;
            x
        }
        "twisted-s2s1-9" => {
            let x = twisted_s2s1_9();
            check_f(name, &x, &[9, 36, 54, 27])?;
            check(
                name,
                is_closed_3manifold(&x) && x.is_neighbourly(),
                "not a neighbourly 3-manifold",
            )?;
            x
        }
        "stacked-sphere" => {
            let n: usize = param(name, arg)?;
            let x = random_stacked_sphere(n, seed)?;
            check(
                name,
                is_2sphere(&x) && x.num_vertices() == n,
                "not a 2-sphere on n vertices",
            )?;
            x
        }
        "icosian-sum" => {
            let k: usize = param(name, arg)?;
            let x = icosian_sum(k, seed)?;
            check(
                name,
                is_2sphere(&x) && x.num_vertices() == 9 * k + 3,
                "not a 2-sphere on 9k+3 vertices",
            )?;
            x
        }
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    Ok(x)
}

/// Every fixed (non-parametric) fixture name.
pub fn fixed_names() -> Vec<&'static str> {
    catalog()
        .into_iter()
        .map(|f| f.name)
        .filter(|n| !n.contains('<'))
        .collect()
}
