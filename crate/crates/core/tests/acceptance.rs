//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines are always visible. The
//! process fails if any criterion is red, except for red results listed in
//! `KNOWN_RED`, which must reproduce their recorded detail exactly (so a
//! change in how or where they fail is still caught).

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tightkit::complex::{connected_sum, induced_cycles, manifold_check};
use tightkit::feasibility::{
    check_parameters, cor514_topology_list, enumerate_table1, enumerate_table2, enumerate_table3,
    TableRow,
};
use tightkit::homology::{betti, induced_map_injective, integral_homology, orientable, FieldSpec};
use tightkit::io::fixtures;
use tightkit::sphere::{
    is_stacked_2sphere, link_profile, missing_facet_sets, primitive_decomposition,
};
use tightkit::tightness::{
    binomial_identity_sides, brute_force_tight, closed_form_sigma0, connected_sum_sigma0,
    induced_surface, mu_vector, sigma_star_by_union, sigma_vector, stackedness_criterion,
    tightness_criterion_3manifold, StackedVerdict, Verdict, Witness,
};
use tightkit::{Face, SimplicialComplex, VertexId};

type Check = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

const Q: FieldSpec = FieldSpec::Q;
const GF2: FieldSpec = FieldSpec::GF2;
const GF3: FieldSpec = FieldSpec::GF3;

/// A reported witness must itself fail injectivity.
fn witness_reverifies(
    x: &SimplicialComplex,
    w: &Option<Witness>,
    field: FieldSpec,
) -> Result<(Vec<VertexId>, usize), String> {
    match w {
        Some(Witness::NonInjective { vertices, degree }) => {
            let inj =
                induced_map_injective(x, vertices, *degree, field).map_err(|e| e.to_string())?;
            ensure!(
                !inj,
                "witness {vertices:?} in degree {degree} is injective after all"
            );
            Ok((vertices.clone(), *degree))
        }
        other => Err(format!("expected a non-injectivity witness, got {other:?}")),
    }
}

fn criterion1() -> Check {
    let s24 = fixtures::std_sphere(2);
    for f in [Q, GF2, GF3] {
        let v = sigma_vector(&s24, f).map_err(|e| e.to_string())?;
        ensure!(
            v.star(0) == q(-1, 5),
            "sigma0*(S2_4) over {f} = {}",
            v.star(0)
        );
        let v = sigma_vector(&fixtures::icosahedron(), f).map_err(|e| e.to_string())?;
        ensure!(
            v.star(0) == q(47, 429),
            "sigma0*(I) over {f} = {}",
            v.star(0)
        );
    }
    for d in 2..=5u32 {
        // S^{d-1} on d+1 vertices
        let s = fixtures::std_sphere(d - 1);
        let v = sigma_vector(&s, Q).map_err(|e| e.to_string())?;
        ensure!(
            v.star(0) == q(-1, d as i64 + 2),
            "d = {d}: sigma0* = {}",
            v.star(0)
        );
    }
    let t = fixtures::torus7();
    for f in [GF2, GF3, Q] {
        let v = sigma_vector(&t, f).map_err(|e| e.to_string())?;
        ensure!(
            v.sigma == vec![int(-1), int(8), int(1)],
            "sigma(T2_7) over {f} = {:?}",
            v.sigma
        );
    }
    Ok("sigma0*(S2_4) = -1/5, sigma0*(I) = 47/429, sigma0*(S^{d-1}_{d+1}) = -1/(d+2) for d = 2..5, sigma(T2_7) = (-1, 8, 1) over z2, z3, q".into())
}

fn criterion2() -> Check {
    let p = fixtures::emch_p();
    ensure!(
        p.f_vector() == vec![8, 28, 56, 28],
        "f-vector {:?}",
        p.f_vector()
    );
    for f in [Q, GF2, GF3] {
        let b = betti(&p, f, false);
        ensure!(
            b.values == vec![1, 0, 8, 1],
            "betti over {f}: {:?}",
            b.values
        );
        let m = mu_vector(&p, f).map_err(|e| e.to_string())?;
        ensure!(
            m.mu == vec![int(1), int(0), int(8), int(1)],
            "mu over {f}: {:?}",
            m.mu
        );
    }
    for f in [GF2, GF3] {
        let r = brute_force_tight(&p, f).map_err(|e| e.to_string())?;
        ensure!(
            r.verdict == Verdict::Tight,
            "brute force over {f}: {:?}",
            r.verdict
        );
    }
    let m = manifold_check(&p);
    ensure!(
        m.is_pseudomanifold && !m.is_closed_3manifold,
        "manifold flags {m:?}"
    );
    let mut pairs = 0;
    for &x in p.vertices() {
        for &y in p.vertices() {
            if x < y {
                let (a, b) = (p.c_count(x, y).unwrap(), p.c_count(y, x).unwrap());
                ensure!(a == b, "c({x},{y}) = {a} but c({y},{x}) = {b}");
                pairs += 1;
            }
        }
    }
    ensure!(pairs == 28, "checked {pairs} pairs");
    Ok("f = (8,28,56,28); betti and mu = (1,0,8,1) over q, z2, z3; brute force TIGHT over z2, z3; pseudomanifold, not a 3-manifold; c symmetric on 28 pairs".into())
}

fn criterion3() -> Check {
    let k = fixtures::walkup_k();
    ensure!(
        k.f_vector() == vec![10, 40, 60, 30],
        "K f-vector {:?}",
        k.f_vector()
    );
    let prof = link_profile(&k).map_err(|e| e.to_string())?;
    ensure!(prof.is_locally_stacked, "K not locally stacked");
    ensure!(!k.is_neighbourly(), "K is neighbourly");
    for f in [GF2, GF3, Q] {
        let r = brute_force_tight(&k, f).map_err(|e| e.to_string())?;
        ensure!(
            r.verdict == Verdict::NotTight,
            "K brute force over {f}: {:?}",
            r.verdict
        );
        witness_reverifies(&k, &r.witness, f)?;
        let c = tightness_criterion_3manifold(&k, f).map_err(|e| e.to_string())?;
        ensure!(
            c.verdict == Verdict::NotTight,
            "K criterion over {f}: {:?}",
            c.verdict
        );
    }

    let l = fixtures::lutz_l();
    ensure!(l.is_neighbourly(), "L not neighbourly");
    let prof = link_profile(&l).map_err(|e| e.to_string())?;
    ensure!(prof.is_locally_stacked, "L not locally stacked");
    ensure!(
        prof.vertices
            .iter()
            .all(|v| v.k == 0 && v.l == 6 && v.other == 0),
        "L link profile {:?}",
        prof.vertices
    );
    for f in [GF2, GF3, Q] {
        let s = stackedness_criterion(&l, f).map_err(|e| e.to_string())?;
        ensure!(s.beta1 == 1, "beta1(L; {f}) = {}", s.beta1);
        ensure!(
            s.lhs == 15 && s.rhs == 10,
            "L criterion {} vs {}",
            s.lhs,
            s.rhs
        );
        ensure!(
            s.verdict == StackedVerdict::NotStacked,
            "L verdict {:?}",
            s.verdict
        );
    }
    let m = mu_vector(&l, GF2).map_err(|e| e.to_string())?;
    ensure!(m.mu[1] == q(3, 2), "mu1(L) = {}", m.mu[1]);
    let closed = int(1) + int(10) * closed_form_sigma0(0, 6).map_err(|e| e.to_string())?;
    ensure!(closed == q(3, 2), "closed form mu1 = {closed}");
    let r = brute_force_tight(&l, GF2).map_err(|e| e.to_string())?;
    ensure!(
        r.verdict == Verdict::NotTight,
        "L brute force {:?}",
        r.verdict
    );
    let (w, deg) = witness_reverifies(&l, &r.witness, GF2)?;
    let c = tightness_criterion_3manifold(&l, GF2).map_err(|e| e.to_string())?;
    ensure!(
        c.verdict == Verdict::NotTight,
        "L criterion over z2: {:?}",
        c.verdict
    );
    Ok(format!(
        "K: f = (10,40,60,30), locally stacked, not neighbourly, NOT_TIGHT; L: neighbourly, locally stacked, beta1 = 1, 15 != 10, mu1 = 3/2 (direct and closed form), NOT_TIGHT over z2 with witness {w:?} in degree {deg} re-verified"
    ))
}

fn criterion4() -> Check {
    let x = fixtures::rp2_6();
    let r = brute_force_tight(&x, GF2).map_err(|e| e.to_string())?;
    ensure!(r.verdict == Verdict::Tight, "z2 verdict {:?}", r.verdict);
    let r = brute_force_tight(&x, Q).map_err(|e| e.to_string())?;
    ensure!(r.verdict == Verdict::NotTight, "q verdict {:?}", r.verdict);
    let (first, deg) = witness_reverifies(&x, &r.witness, Q)?;
    let mut fives = 0;
    for v in x.vertices() {
        let s: Vec<VertexId> = x.vertices().iter().copied().filter(|u| u != v).collect();
        let inj = induced_map_injective(&x, &s, 1, Q).map_err(|e| e.to_string())?;
        ensure!(!inj, "5-vertex subset {s:?} is injective in degree 1");
        let mobius = x.induced_subcomplex(&s).unwrap();
        ensure!(
            betti(&mobius, Q, false).values == vec![1, 1, 0],
            "antistar of {v} is not a Moebius band"
        );
        fives += 1;
    }
    let h = integral_homology(&x);
    ensure!(
        h.degrees[1].free_rank == 0 && h.degrees[1].torsion == vec![2.into()],
        "H1 = {}",
        h.degrees[1]
    );
    Ok(format!(
        "TIGHT over z2; NOT_TIGHT over q: every one of the {fives} 5-vertex subsets (Moebius bands) is a degree-1 witness, canonical first witness {first:?} in degree {deg} re-verified; H1 torsion (2)"
    ))
}

const TABLE1: [(u64, u64); 8] = [
    (1408, 78625),
    (3865, 595186),
    (5269, 1106970),
    (8320, 2762081),
    (9724, 3773610),
    (12181, 5922778),
    (13585, 7367441),
    (15448, 9527555),
];
const TABLE2: [(u64, u64); 15] = [
    (72, 189),
    (77, 224),
    (92, 344),
    (96, 341),
    (97, 389),
    (101, 388),
    (108, 458),
    (112, 539),
    (113, 511),
    (116, 544),
    (117, 594),
    (121, 601),
    (128, 685),
    (132, 774),
    (133, 748),
];
const TABLE3: [(u64, u64); 10] = [
    (825, 26871),
    (1296, 66637),
    (1408, 78625),
    (1760, 123049),
    (1881, 140677),
    (1989, 157336),
    (2145, 183109),
    (2580, 264924),
    (3168, 399817),
    (3276, 427582),
];
const COR514_K: [u64; 13] = [0, 1, 12, 19, 21, 30, 63, 78, 82, 99, 154, 177, 183];

fn compare(name: &str, got: &[TableRow], printed: &[(u64, u64)]) -> Vec<String> {
    let got: Vec<(u64, u64)> = got.iter().map(|r| (r.n, r.beta1)).collect();
    let mut out = Vec::new();
    if got.len() != printed.len() {
        out.push(format!(
            "{name}: {} rows computed, {} printed",
            got.len(),
            printed.len()
        ));
    }
    for (g, p) in got.iter().zip(printed) {
        if g != p {
            out.push(format!(
                "{name} n={}: printed {}, computed {} (n={})",
                p.0, p.1, g.1, g.0
            ));
        }
    }
    out
}

fn criterion5() -> Check {
    let t1 = enumerate_table1(15448).map_err(|e| e.to_string())?;
    let t2 = enumerate_table2(133).map_err(|e| e.to_string())?;
    let t3 = enumerate_table3(3276).map_err(|e| e.to_string())?;
    let mut bad = compare("table1", &t1, &TABLE1);
    bad.extend(compare("table2", &t2, &TABLE2));
    bad.extend(compare("table3", &t3, &TABLE3));
    let ks: Vec<u64> = cor514_topology_list(188).iter().map(|e| e.k).collect();
    if ks != COR514_K {
        bad.push(format!("topology k-list {ks:?}"));
    }
    if bad.is_empty() {
        Ok("tables 1, 2, 3 and the topology k-list reproduced row for row".into())
    } else {
        Err(bad.join("; "))
    }
}

/// S²₄-sums: stellar subdivisions or explicit connected sums of tetrahedra.
fn stacked_case(seed: u64) -> SimplicialComplex {
    let n = 4 + (seed % 11) as usize;
    if seed.is_multiple_of(2) {
        fixtures::random_stacked_sphere(n, seed).unwrap()
    } else {
        fixtures::random_sum(n - 3, seed, &fixtures::std_sphere(2)).unwrap()
    }
}

/// Spheres with a non-tetrahedral summand: I, sums of I, and I glued to a
/// stacked sphere.
fn nonstacked_case(seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match seed % 3 {
        0 if seed == 0 => fixtures::icosahedron(),
        0 => fixtures::icosian_sum(2, seed).unwrap(),
        _ => {
            let a = fixtures::icosahedron();
            let b = fixtures::random_stacked_sphere(rng.gen_range(4..=8), seed).unwrap();
            let s = a.facets().choose(&mut rng).unwrap().clone();
            let t = b.facets().choose(&mut rng).unwrap().clone();
            let psi: Vec<_> = s
                .vertices()
                .iter()
                .copied()
                .zip(t.vertices().iter().copied())
                .collect();
            connected_sum(&a, &s, &b, &t, &psi).unwrap()
        }
    }
}

fn sphere_characterisations(
    s: &SimplicialComplex,
) -> Result<(bool, bool, bool, usize, usize), String> {
    let stacked = is_stacked_2sphere(s).map_err(|e| e.to_string())?;
    let lens: BTreeSet<usize> = [4, 5].into();
    let no_cycles = induced_cycles(s, Some(&lens)).is_empty();
    let tree = primitive_decomposition(s).map_err(|e| e.to_string())?;
    let all_tet = tree.standard_count() == tree.classes.len();
    ensure!(tree.is_tree(), "decomposition is not a tree");
    let missing = missing_facet_sets(s).map_err(|e| e.to_string())?.len();
    Ok((stacked, no_cycles, all_tet, tree.classes.len(), missing))
}

/// X = X₁ ∪ X₂ glued along a common neighbourly base Y.
fn glued_case(
    seed: u64,
) -> (
    SimplicialComplex,
    SimplicialComplex,
    SimplicialComplex,
    usize,
) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let i = (seed % 2) as usize;
    let m = rng.gen_range(2..=4u32);
    let mut base: Vec<Face> = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            base.push(Face::new([a, b]).unwrap());
            for c in b + 1..m {
                // i = 1 needs a 3-neighbourly base
                if i == 1 || rng.gen_bool(0.5) {
                    base.push(Face::new([a, b, c]).unwrap());
                }
            }
        }
    }
    if m == 1 || base.is_empty() {
        base.push(Face::new([0]).unwrap());
    }
    let y = SimplicialComplex::generated_by(base.clone());
    let y_faces: Vec<Face> = (0..=y.dim() as usize)
        .flat_map(|d| y.faces(d).to_vec())
        .collect();
    let mut side = |offset: u32| {
        let extra = rng.gen_range(1..=4u32);
        let mut faces = base.clone();
        for _ in 0..rng.gen_range(2..=6) {
            let mut v: Vec<VertexId> = (0..extra)
                .filter(|_| rng.gen_bool(0.5))
                .take(2)
                .map(|t| offset + t)
                .collect();
            if v.is_empty() {
                v.push(offset);
            }
            if rng.gen_bool(0.8) {
                v.extend(y_faces.choose(&mut rng).unwrap().vertices());
            }
            faces.push(Face::new(v).unwrap());
        }
        SimplicialComplex::generated_by(faces)
    };
    let x1 = side(10);
    let x2 = side(20);
    (x1.union(&x2), x1, x2, i)
}

fn criterion6() -> Check {
    // stacked spheres: three characterisations agree
    let mut positives = 0;
    let mut decomposed = 0;
    for seed in 0..200 {
        let s = stacked_case(seed);
        let (a, b, c, parts, missing) = sphere_characterisations(&s)?;
        ensure!(
            a && b && c,
            "stacked case {seed}: stacked = {a}, no 4/5-cycles = {b}, all S2_4 = {c}"
        );
        ensure!(
            parts == s.num_vertices() - 3,
            "case {seed}: {parts} summands on {} vertices",
            s.num_vertices()
        );
        ensure!(
            parts == 1 + missing,
            "case {seed}: {parts} summands, {missing} missing triangles"
        );
        positives += 1;
        decomposed += 1;
    }
    let mut negatives = 0;
    for seed in 0..60 {
        let s = nonstacked_case(seed);
        let (a, b, c, parts, missing) = sphere_characterisations(&s)?;
        ensure!(
            !a && !b && !c,
            "non-stacked case {seed}: stacked = {a}, no 4/5-cycles = {b}, all S2_4 = {c}"
        );
        ensure!(
            parts == 1 + missing,
            "case {seed}: {parts} summands, {missing} missing triangles"
        );
        negatives += 1;
        decomposed += 1;
    }
    for name in ["lutz-l", "walkup-k", "twisted-s2s1-9", "std-sphere:3"] {
        let m = fixtures::load_fixture(name, 0).unwrap();
        for &v in m.vertices() {
            let (_, _, _, parts, missing) = sphere_characterisations(&m.link(v).unwrap())?;
            ensure!(parts == 1 + missing, "{name} link of {v}");
            decomposed += 1;
        }
    }

    // union recursion against direct enumeration
    let mut unions = 0;
    for seed in 0..200 {
        let (x, x1, x2, i) = glued_case(seed);
        let f = [GF2, Q, GF3][(seed % 3) as usize];
        let by_union =
            sigma_star_by_union(&x, &x1, &x2, i, f).map_err(|e| format!("case {seed}: {e}"))?;
        let direct = sigma_vector(&x, f).map_err(|e| e.to_string())?.star(i);
        ensure!(
            by_union == direct,
            "case {seed} (i = {i}, {f}): union {by_union} vs direct {direct}"
        );
        unions += 1;
    }
    // connected sums of 2-spheres and the closed form for kI # lS2_4
    for seed in 0..12 {
        let s1 = fixtures::random_stacked_sphere(4 + (seed % 4) as usize, seed).unwrap();
        let s2 = if seed % 3 == 0 {
            fixtures::icosahedron()
        } else {
            fixtures::random_stacked_sphere(5, seed + 100).unwrap()
        };
        let t = s2.facets()[0].clone();
        let s = s1.facets()[seed as usize % s1.facets().len()].clone();
        let psi: Vec<_> = s
            .vertices()
            .iter()
            .copied()
            .zip(t.vertices().iter().copied())
            .collect();
        let sum = connected_sum(&s1, &s, &s2, &t, &psi).unwrap();
        let v = |c: &SimplicialComplex| sigma_vector(c, GF2).unwrap().star(0);
        ensure!(
            v(&sum) == connected_sum_sigma0(&v(&s1), &v(&s2), 2),
            "connected sum case {seed}"
        );
    }
    for (k, l) in [(1u64, 0u64), (0, 1), (0, 5), (1, 1), (1, 2)] {
        let s = if k == 0 {
            fixtures::random_sum(l as usize, 3, &fixtures::std_sphere(2)).unwrap()
        } else if l == 0 {
            fixtures::icosahedron()
        } else {
            let mut acc = fixtures::icosahedron();
            for j in 0..l {
                let t = fixtures::std_sphere(2);
                let s = acc.facets()[j as usize].clone();
                let tf = t.facets()[0].clone();
                let psi: Vec<_> = s
                    .vertices()
                    .iter()
                    .copied()
                    .zip(tf.vertices().iter().copied())
                    .collect();
                acc = connected_sum(&acc, &s, &t, &tf, &psi).unwrap();
            }
            acc
        };
        let direct = sigma_vector(&s, GF2).unwrap().star(0);
        let closed = closed_form_sigma0(k, l).unwrap();
        ensure!(
            direct == closed,
            "closed form for k = {k}, l = {l}: {closed} vs {direct}"
        );
    }

    let mut identities = 0;
    for p in 0..=12 {
        for qq in 0..=12 {
            for r in 0..=12 {
                let (lhs, rhs) = binomial_identity_sides(p, qq, r);
                ensure!(lhs == rhs, "binomial identity fails at ({p}, {qq}, {r})");
                identities += 1;
            }
        }
    }
    ensure!(identities == 2197, "identity count {identities}");
    Ok(format!(
        "{positives} stacked and {negatives} non-stacked spheres agree on all three characterisations; #B = 1 + #A on {decomposed} decompositions; union recursion exact on {unions} glued complexes (plus sum and closed-form anchors); binomial identity on {identities} triples"
    ))
}

fn lemma_suite(
    name: &str,
    x: &SimplicialComplex,
    field: FieldSpec,
    rng: &mut ChaCha8Rng,
) -> Result<(), String> {
    let r = brute_force_tight(x, field).map_err(|e| e.to_string())?;
    ensure!(
        r.verdict == Verdict::Tight,
        "{name} over {field}: {:?}",
        r.verdict
    );
    ensure!(x.is_neighbourly(), "{name} is tight but not neighbourly");
    for _ in 0..100 {
        let a: Vec<VertexId> = loop {
            let a: Vec<VertexId> = x
                .vertices()
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            if !a.is_empty() {
                break a;
            }
        };
        let sub = x.induced_subcomplex(&a).unwrap();
        let r = brute_force_tight(&sub, field).map_err(|e| e.to_string())?;
        ensure!(
            r.verdict == Verdict::Tight,
            "{name}[{a:?}] over {field}: {:?}",
            r.verdict
        );
    }
    for k in 1..x.dim().max(0) as usize {
        let s = x.skeleton(k).unwrap();
        let r = brute_force_tight(&s, field).map_err(|e| e.to_string())?;
        ensure!(
            r.verdict == Verdict::Tight,
            "skel_{k}({name}) over {field}: {:?}",
            r.verdict
        );
    }
    let b1 = betti(x, field, false).get(1);
    for &v in x.vertices() {
        let link = betti(&x.link(v).unwrap(), field, true).get(0);
        let anti = betti(&x.antistar(v).unwrap(), field, false).get(1);
        ensure!(
            b1 == link + anti,
            "{name}, vertex {v}: {b1} != {link} + {anti}"
        );
    }
    for &u in x.vertices() {
        for &v in x.vertices() {
            if u != v {
                ensure!(
                    x.c_count(u, v).unwrap() == x.c_count(v, u).unwrap(),
                    "{name}: c({u},{v}) asymmetric"
                );
            }
        }
    }
    Ok(())
}

fn criterion7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let p = fixtures::emch_p();
    let skel = p.skeleton(2).unwrap();
    ensure!(
        skel.f_vector() == vec![8, 28, 56],
        "skel2(P) f-vector {:?}",
        skel.f_vector()
    );
    let cases: Vec<(&str, SimplicialComplex, FieldSpec)> = vec![
        ("P", p.clone(), GF2),
        ("P", p.clone(), GF3),
        ("P", p.clone(), Q),
        ("RP2_6", fixtures::rp2_6(), GF2),
        ("triangle-pair", fixtures::triangle_pair(), GF2),
        ("triangle-pair", fixtures::triangle_pair(), Q),
        ("skel2(P)", skel, GF2),
    ];
    for (name, x, f) in &cases {
        lemma_suite(name, x, *f, &mut rng)?;
    }

    // induced surfaces from link cycles
    let five: BTreeSet<usize> = [5].into();
    let three: BTreeSet<usize> = [3].into();
    let mut five_cycles = 0;
    let mut three_surfaces = 0;
    for &v in p.vertices() {
        let link = p.link(v).unwrap();
        five_cycles += induced_cycles(&link, Some(&five)).len();
        for c in induced_cycles(&link, Some(&three)) {
            let s = induced_surface(&p, v, c.vertices()).map_err(|e| e.to_string())?;
            ensure!(
                s.is_closed_surface && s.is_neighbourly,
                "surface from {v} and {:?}",
                c.vertices()
            );
            ensure!(
                s.surface.num_vertices() == 4 && s.euler_characteristic == 2,
                "not S2_4"
            );
            ensure!(s.mod3_ok, "3-cycle flagged by the mod 3 screen");
            three_surfaces += 1;
        }
    }
    let rp2 = fixtures::rp2_6();
    let link = rp2.link(1).unwrap();
    let cyc: Vec<VertexId> = {
        // walk the link cycle in order
        let g = link.graph();
        let mut walk = vec![link.vertices()[0]];
        while walk.len() < link.num_vertices() {
            let last = *walk.last().unwrap();
            let next = g[&last]
                .iter()
                .copied()
                .find(|w| !walk.contains(w))
                .unwrap();
            walk.push(next);
        }
        walk
    };
    let s = induced_surface(&rp2, 1, &cyc).map_err(|e| e.to_string())?;
    ensure!(
        s.is_closed_surface
            && s.is_neighbourly
            && s.surface.num_vertices() == 6
            && s.surface == rp2,
        "6-vertex induced surface check failed"
    );
    ensure!(
        !orientable(&s.surface, Q).unwrap(),
        "the 6-vertex surface is orientable"
    );
    Ok(format!(
        "P (z2, z3, q), RP2_6 (z2), triangle-pair (z2, q), skel2(P) (z2): neighbourly, 100 random induced subcomplexes tight, skeleta tight, b1 recursion at every vertex, c symmetric; P links carry {five_cycles} induced 5-cycles, {three_surfaces} link 3-cycles give closed neighbourly S2_4; the 5-cycle link of RP2_6 gives the closed neighbourly 6-vertex surface RP2_6"
    ))
}

fn criterion8() -> Check {
    // feasibility reports are arithmetic only: no field claims existence
    let r = check_parameters(1408, 78625).map_err(|e| e.to_string())?;
    let v = serde_json::to_value(&r).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    ensure!(
        keys == ["beta1", "feasible", "flags", "k", "n"],
        "report keys {keys:?}"
    );
    ensure!(
        r.flags.icosian_equality,
        "(1408, 78625) should meet the icosian equality"
    );
    Ok("excluded by scope: existence of a non-stacked z2-tight 3-manifold, strong minimality, realisation of table parameters; feasibility output carries arithmetic flags only".into())
}

/// Red results that are understood and recorded, matched verbatim.
const KNOWN_RED: &[(u32, &str)] = &[(5, "table1 n=3865: printed 595186, computed 595211 (n=3865)")];

const ANALYSIS_5: &str = "the printed cell violates the mod-776 congruence the table is derived from: \
(3865-4)(3865-5) - 20*595186 = 2999740 is not divisible by 776, while 595211 satisfies both the congruence \
and the locally icosian equality; every other cell of all three tables matches";

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (1, "exact invariant anchors", criterion1),
        (2, "Emch P end to end", criterion2),
        (3, "negative controls K and L", criterion3),
        (4, "RP2_6 field dependence", criterion4),
        (5, "table regeneration", criterion5),
        (6, "structural equivalences", criterion6),
        (7, "tightness lemma suite", criterion7),
        (8, "exclusions", criterion8),
    ];
    let start = Instant::now();
    let mut unexpected = 0;
    for (id, title, run) in criteria {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {id} {title} [{secs:.1}s]: {detail}"),
            Err(detail) => {
                let known = KNOWN_RED.iter().any(|&(k, d)| k == id && d == detail);
                if known {
                    println!("FAIL {id} {title} [{secs:.1}s]: {detail} (known; {ANALYSIS_5})");
                } else {
                    unexpected += 1;
                    println!("FAIL {id} {title} [{secs:.1}s]: {detail}");
                }
            }
        }
    }
    let total = start.elapsed().as_secs_f64();
    println!("acceptance finished in {total:.1}s, {unexpected} unexpected failure(s)");
    if unexpected == 0 && total < 300.0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
