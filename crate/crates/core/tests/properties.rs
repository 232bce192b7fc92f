use std::sync::OnceLock;

use liebranch_core::characters::{decompose, multiplicity_of, Budget};
use liebranch_core::chevalley::{ChevalleyAlgebra, ChevalleyElement};
use liebranch_core::data::Session;
use liebranch_core::linalg::q;
use liebranch_core::rootsys::{RootSystem, RootVector, Weight};
use proptest::prelude::*;

fn session() -> &'static Session {
    static S: OnceLock<Session> = OnceLock::new();
    S.get_or_init(|| Session::builtin().unwrap())
}

const PAIRS: &[(&str, &str)] = &[
    ("G2", "A2"),
    ("F4", "B4"),
    ("E6", "A5xA1"),
    ("E6", "D5xT1"),
    ("E6", "C4"),
    ("E6", "F4"),
    ("E7", "A7"),
    ("E7", "E6xT1"),
    ("E7", "D6xA1"),
    ("E7", "A1xF4"),
];

fn weight(v: &[i32]) -> Weight {
    Weight(v.iter().copied().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn restriction_is_additive(p in 0..PAIRS.len(), a in prop::collection::vec(-5i32..6, 7), b in prop::collection::vec(-5i32..6, 7)) {
        let (g, h) = PAIRS[p];
        let e = session().embedding(&g.parse().unwrap(), &h.parse().unwrap()).unwrap();
        let n = e.g().rank();
        let (a, b) = (weight(&a[..n.min(7)]), weight(&b[..n.min(7)]));
        let ra = e.restrict_weight(&a).unwrap();
        let rb = e.restrict_weight(&b).unwrap();
        let rs = e.restrict_weight(&a.add(&b)).unwrap();
        prop_assert_eq!(rs.weight, ra.weight.add(&rb.weight));
        prop_assert_eq!(rs.charge, ra.charge + rb.charge);
    }

    #[test]
    fn reflections_are_involutions(t in prop::sample::select(vec!["G2", "F4", "E6", "E7", "E8", "B5", "C4xA2"]),
                                   v in prop::collection::vec(-6i32..7, 8), i in 0usize..8) {
        let rs = RootSystem::parse(t).unwrap();
        let w = weight(&v[..rs.rank()]);
        let i = i % rs.rank();
        prop_assert_eq!(rs.reflect(&rs.reflect(&w, i), i), w.clone());
        prop_assert_eq!(rs.height2(&rs.dominant_conjugate(&w).0), rs.height2(&rs.dominant_conjugate(&rs.reflect(&w, i)).0));
    }

    #[test]
    fn dual_weight_is_an_involution_preserving_dimension(t in prop::sample::select(vec!["A4", "D5", "E6", "E7", "G2"]),
                                                          v in prop::collection::vec(0i32..3, 7)) {
        let rs = RootSystem::parse(t).unwrap();
        let w = weight(&v[..rs.rank()]);
        let d = rs.dual_weight(&w);
        prop_assert_eq!(rs.dual_weight(&d), w.clone());
        prop_assert_eq!(rs.weyl_dimension(&d).unwrap(), rs.weyl_dimension(&w).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn freudenthal_agrees_with_weyl(t in prop::sample::select(vec!["G2", "B3", "C3", "F4", "A3xA1", "D4"]),
                                    v in prop::collection::vec(0i32..3, 4)) {
        let rs = RootSystem::parse(t).unwrap();
        let w = weight(&v[..rs.rank()]);
        let ch = rs.freudenthal(&w).unwrap();
        prop_assert_eq!(ch.dimension(&rs).unwrap(), rs.weyl_dimension(&w).unwrap());
        for (mu, m) in &ch.weights {
            prop_assert!(rs.is_dominant(mu));
            prop_assert!(*m >= 1);
        }
    }
}

fn nilpotent(alg: &ChevalleyAlgebra, coeffs: &[i64]) -> ChevalleyElement {
    let mut x = ChevalleyElement::zero();
    for (r, c) in alg.root_system().positive_roots().iter().zip(coeffs) {
        let idx = alg.root_index(r).unwrap();
        x.add_term(idx, q(*c));
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn ad_exp_of_negative_is_inverse(t in prop::sample::select(vec!["G2", "B3", "F4"]),
                                     coeffs in prop::collection::vec(-3i64..4, 24),
                                     target in 0usize..52) {
        let alg = ChevalleyAlgebra::parse(t).unwrap();
        let n = nilpotent(&alg, &coeffs);
        let v = ChevalleyElement::basis(target % alg.dim());
        let there = alg.ad_exp(&n, &v).unwrap();
        let back = alg.ad_exp(&n.scale(&q(-1)), &there).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn modular_rank_matches_exact(t in prop::sample::select(vec!["G2", "A3", "B3"]),
                                  rows in prop::collection::vec(prop::collection::vec(-4i64..5, 4), 1..10)) {
        let alg = ChevalleyAlgebra::parse(t).unwrap();
        let d = alg.dim();
        let vs: Vec<ChevalleyElement> = rows
            .iter()
            .enumerate()
            .map(|(k, r)| {
                let mut x = ChevalleyElement::zero();
                for (j, c) in r.iter().enumerate() {
                    x.add_term((k * 3 + j * 5) % d, q(*c));
                }
                x
            })
            .collect();
        let exact = alg.span_rank(&vs, None).unwrap();
        prop_assert_eq!(alg.span_rank(&vs, Some(1_000_000_007)).unwrap(), exact);
        // rank is invariant under an elementary row operation
        let mut shifted = vs.clone();
        if shifted.len() > 1 {
            shifted[0] = shifted[0].add(&shifted[1].scale(&q(3)));
        }
        prop_assert_eq!(alg.span_rank(&shifted, None).unwrap(), exact);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn signed_sum_matches_peeling(p in prop::sample::select(vec![0usize, 1, 3, 5, 7]),
                                  i in 0usize..7, j in 0usize..7) {
        let (g, h) = PAIRS[p];
        let e = session().embedding(&g.parse().unwrap(), &h.parse().unwrap()).unwrap();
        let n = e.g().rank();
        let mut w = e.g().zero_weight();
        w.0[i % n] += 1;
        w.0[j % n] += 1;
        let budget = Budget { max_dim: 60_000 };
        let dec = match decompose(&e, &w, budget) {
            Ok(d) => d,
            Err(_) => return Ok(()),
        };
        prop_assert!(!dec.is_empty());
        for (target, m) in dec.iter().take(6) {
            prop_assert_eq!(multiplicity_of(&e, &w, target, budget).unwrap(), *m);
        }
    }
}

#[test]
fn simple_reflections_permute_other_positive_roots() {
    for t in ["G2", "F4", "E8"] {
        let rs = RootSystem::parse(t).unwrap();
        for i in 0..rs.rank() {
            let a = RootVector::unit(rs.rank(), i);
            for r in rs.positive_roots() {
                if *r == a {
                    continue;
                }
                let c = rs.pair_roots(r, &a);
                let mut s = r.clone();
                s.0[i] -= c;
                assert!(rs.is_root(&s) && s.is_positive(), "{t} {r:?}");
            }
        }
    }
}
