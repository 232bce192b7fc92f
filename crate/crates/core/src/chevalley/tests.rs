use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;

fn jacobi(alg: &ChevalleyAlgebra, a: usize, b: usize, c: usize) -> bool {
    let (x, y, z) = (
        ChevalleyElement::basis(a),
        ChevalleyElement::basis(b),
        ChevalleyElement::basis(c),
    );
    let t1 = alg.bracket(&x, &alg.bracket(&y, &z));
    let t2 = alg.bracket(&y, &alg.bracket(&z, &x));
    let t3 = alg.bracket(&z, &alg.bracket(&x, &y));
    t1.add(&t2).add(&t3).is_zero()
}

#[test]
fn jacobi_exhaustive_small() {
    for t in ["A2", "B2", "G2", "B3", "C3", "A3xA1"] {
        let alg = ChevalleyAlgebra::parse(t).unwrap();
        let d = alg.dim();
        for a in 0..d {
            for b in a + 1..d {
                for c in b + 1..d {
                    assert!(jacobi(&alg, a, b, c), "{t}: {a} {b} {c}");
                }
            }
        }
    }
}

#[test]
fn jacobi_sampled_exceptional() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in ["F4", "E6", "E7", "E8"] {
        let alg = ChevalleyAlgebra::parse(t).unwrap();
        let d = alg.dim();
        for _ in 0..1000 {
            let (a, b, c) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
            assert!(jacobi(&alg, a, b, c), "{t}: {a} {b} {c}");
        }
    }
}

#[test]
fn chevalley_relations() {
    for t in ["G2", "F4", "E6"] {
        let alg = ChevalleyAlgebra::parse(t).unwrap();
        let rs = alg.root_system().clone();
        let roots: Vec<RootVector> = rs
            .positive_roots()
            .iter()
            .cloned()
            .chain(rs.positive_roots().iter().map(|r| r.neg()))
            .collect();
        for a in &roots {
            let h = alg.bracket(&alg.x(a).unwrap(), &alg.x(&a.neg()).unwrap());
            let expect = alg.cartan_element(&rs.coroot_coeffs(a).iter().map(|&c| c as i64).collect::<Vec<_>>());
            assert_eq!(h, expect, "{t} {a}");
            for b in &roots {
                if let Some(n) = alg.structure_constant(a, b) {
                    let mut p = 0;
                    let mut cur = b.sub(a);
                    while rs.is_root(&cur) {
                        p += 1;
                        cur = cur.sub(a);
                    }
                    assert_eq!(n.abs(), p + 1, "{t} {a} {b}");
                    assert_eq!(alg.structure_constant(b, a), Some(-n));
                    assert_eq!(alg.structure_constant(&a.neg(), &b.neg()), Some(-n));
                }
            }
        }
    }
}

#[test]
fn g2_extraspecial_signs() {
    let alg = ChevalleyAlgebra::parse("G2").unwrap();
    let r = |a: i32, b: i32| RootVector::from_slice(&[a, b]);
    assert_eq!(alg.structure_constant(&r(1, 0), &r(0, 1)), Some(1));
    assert_eq!(alg.structure_constant(&r(1, 0), &r(1, 1)), Some(2));
    assert_eq!(alg.structure_constant(&r(1, 0), &r(2, 1)), Some(3));
    assert_eq!(alg.structure_constant(&r(0, 1), &r(3, 1)), Some(1));
}

#[test]
fn ad_exp_and_centralizer() {
    let alg = ChevalleyAlgebra::parse("A2").unwrap();
    let e1 = alg.x(&RootVector::from_slice(&[1, 0])).unwrap();
    let f1 = alg.x(&RootVector::from_slice(&[-1, 0])).unwrap();
    // exp(ad e) f = f + h - e
    let got = alg.ad_exp(&e1, &f1).unwrap();
    let expect = f1.add(&alg.h(0)).sub(&e1);
    assert_eq!(got, expect);
    assert!(alg.ad_exp(&alg.h(0), &e1).is_err());

    let e6 = ChevalleyAlgebra::parse("E6").unwrap();
    let all: Vec<ChevalleyElement> = (0..e6.dim()).map(ChevalleyElement::basis).collect();
    assert_eq!(e6.centralizer(&all).unwrap().dim(), 0);
    let torus: Vec<ChevalleyElement> = (0..6).map(|i| e6.h(i)).collect();
    assert_eq!(e6.centralizer(&torus).unwrap().dim(), 6);
    let a1 = e6.x(&RootVector::unit(6, 0)).unwrap();
    let a3 = e6.x(&RootVector::unit(6, 2)).unwrap();
    assert_eq!(e6.centralizer(&[a1, a3]).unwrap_err(), Error::NotSubalgebra);
}

#[test]
fn generated_subalgebra_dimensions() {
    let alg = ChevalleyAlgebra::parse("F4").unwrap();
    let gens: Vec<ChevalleyElement> = (0..4)
        .flat_map(|i| {
            let mut r = RootVector::unit(4, i);
            let x = alg.x(&r).unwrap();
            r = r.neg();
            [x, alg.x(&r).unwrap()]
        })
        .collect();
    assert_eq!(alg.generated_subalgebra(&gens).dim(), 52);
    assert_eq!(alg.span_rank(&gens, Some(1_000_003)).unwrap(), 8);
}
