use num_bigint::BigInt;
use num_traits::Zero;

use tightkit::complex::manifold_check;
use tightkit::homology::{betti, integral_homology, orientable, FieldSpec};
use tightkit::io::{fixtures, load_str, ComplexDocument};

const FIELDS: [FieldSpec; 4] = [
    FieldSpec::GF2,
    FieldSpec::GF3,
    FieldSpec::Prime(5),
    FieldSpec::Q,
];

fn all_fixtures() -> Vec<(String, tightkit::SimplicialComplex)> {
    let mut v: Vec<_> = fixtures::fixed_names()
        .into_iter()
        .map(|n| (n.to_string(), fixtures::load_fixture(n, 0).unwrap()))
        .collect();
    for name in [
        "std-sphere:1",
        "std-sphere:4",
        "stacked-sphere:11",
        "icosian-sum:2",
    ] {
        v.push((name.into(), fixtures::load_fixture(name, 9).unwrap()));
    }
    v
}

#[test]
fn every_fixture_round_trips() {
    for (name, x) in all_fixtures() {
        let text = ComplexDocument::from_complex(&name, &x).to_json();
        assert_eq!(load_str(&text).unwrap(), x, "{name}");
    }
}

#[test]
fn euler_characteristic_is_field_independent() {
    for (name, x) in all_fixtures() {
        for f in FIELDS {
            assert_eq!(
                betti(&x, f, false).euler(),
                x.euler_characteristic(),
                "{name} over {f}"
            );
        }
    }
}

#[test]
fn poincare_duality_on_closed_3_manifolds() {
    for (name, x) in all_fixtures() {
        let r = manifold_check(&x);
        if !r.is_closed_3manifold {
            continue;
        }
        assert_eq!(r.dehn_sommerville_ok, Some(true), "{name}");
        // mod 2 duality holds for every closed manifold
        let b = betti(&x, FieldSpec::GF2, false);
        assert_eq!(
            b.values,
            b.values.iter().rev().copied().collect::<Vec<_>>(),
            "{name}"
        );
        if orientable(&x, FieldSpec::Q).unwrap() {
            for f in FIELDS {
                let b = betti(&x, f, false);
                assert_eq!(b.get(0), b.get(3), "{name} over {f}");
                assert_eq!(b.get(1), b.get(2), "{name} over {f}");
            }
        }
    }
}

/// β_k(F_p) = free rank of H_k + #(p-torsion in H_k) + #(p-torsion in H_{k−1}).
#[test]
fn universal_coefficients() {
    for (name, x) in all_fixtures() {
        let h = integral_homology(&x);
        for p in [2u64, 3, 5] {
            let b = betti(&x, FieldSpec::Prime(p), false);
            let divisible = |k: usize| {
                h.degrees[k]
                    .torsion
                    .iter()
                    .filter(|t| (*t % BigInt::from(p)).is_zero())
                    .count() as i64
            };
            for k in 0..h.degrees.len() {
                let below = if k == 0 { 0 } else { divisible(k - 1) };
                let expect = h.degrees[k].free_rank as i64 + divisible(k) + below;
                assert_eq!(b.get(k), expect, "{name}, degree {k}, p = {p}");
            }
        }
        let q = betti(&x, FieldSpec::Q, false);
        for (k, g) in h.degrees.iter().enumerate() {
            assert_eq!(q.get(k), g.free_rank as i64, "{name}, degree {k}");
        }
    }
}

#[test]
fn rp2_integral_homology() {
    let h = integral_homology(&fixtures::rp2_6());
    assert_eq!(h.degrees[1].free_rank, 0);
    assert_eq!(h.degrees[1].torsion, vec![BigInt::from(2)]);
    assert_eq!(h.degrees[2].free_rank, 0);
    assert_eq!(h.torsion_primes(), vec![2]);
    assert_eq!(
        betti(&fixtures::rp2_6(), FieldSpec::GF2, false).values,
        vec![1, 1, 1]
    );
    assert_eq!(
        betti(&fixtures::rp2_6(), FieldSpec::Q, false).values,
        vec![1, 0, 0]
    );
}

#[test]
fn reduced_betti_of_the_empty_complex_and_spheres() {
    for d in 1..=4 {
        let s = fixtures::std_sphere(d);
        let b = betti(&s, FieldSpec::Q, true);
        let mut expect = vec![0; d as usize + 1];
        expect[d as usize] = 1;
        assert_eq!(b.values, expect, "S^{d}");
    }
}

#[test]
fn known_manifold_flags() {
    let k = fixtures::walkup_k();
    let r = manifold_check(&k);
    assert!(r.is_closed_3manifold && !k.is_neighbourly());
    assert!(manifold_check(&fixtures::lutz_l()).is_closed_3manifold);
    assert!(orientable(&fixtures::lutz_l(), FieldSpec::Q).unwrap());
    assert!(!orientable(&fixtures::twisted_s2s1_9(), FieldSpec::Q).unwrap());
    let p = manifold_check(&fixtures::emch_p());
    assert!(p.is_pseudomanifold && !p.is_closed_3manifold);
    assert!(manifold_check(&fixtures::torus7()).is_closed_surface);
    assert!(orientable(&fixtures::torus7(), FieldSpec::Q).unwrap());
    assert!(!orientable(&fixtures::rp2_6(), FieldSpec::Q).unwrap());
    assert!(orientable(&fixtures::rp2_6(), FieldSpec::GF2).unwrap());
}
