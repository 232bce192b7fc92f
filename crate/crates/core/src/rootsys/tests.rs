use std::collections::HashSet;

use num_bigint::BigUint;

use super::*;

fn rs(s: &str) -> RootSystem {
    RootSystem::parse(s).unwrap()
}

fn w(v: &[i32]) -> Weight {
    Weight::from_slice(v)
}

#[test]
fn root_counts_and_highest_roots() {
    let cases: &[(&str, &[i32])] = &[
        ("A4", &[1, 1, 1, 1]),
        ("B3", &[1, 2, 2]),
        ("C3", &[2, 2, 1]),
        ("D5", &[1, 2, 2, 1, 1]),
        ("G2", &[3, 2]),
        ("F4", &[2, 3, 4, 2]),
        ("E6", &[1, 2, 2, 3, 2, 1]),
        ("E7", &[2, 2, 3, 4, 3, 2, 1]),
        ("E8", &[2, 3, 4, 6, 5, 4, 3, 2]),
    ];
    for (t, hi) in cases {
        let r = rs(t);
        let (fam, n) = r.spec().simple_factors().next().unwrap();
        assert_eq!(r.n_positive(), positive_root_count(fam, n), "{t}");
        assert_eq!(r.highest_roots()[0], RootVector::from_slice(hi), "{t}");
    }
    assert_eq!(rs("A5xA1").n_positive(), 16);
    assert_eq!(rs("A5xA1").highest_roots().len(), 2);
}

#[test]
fn weyl_dimensions() {
    let cases: &[(&str, &[i32], u64)] = &[
        ("G2", &[1, 0], 7),
        ("G2", &[0, 1], 14),
        ("F4", &[0, 0, 0, 1], 26),
        ("F4", &[1, 0, 0, 0], 52),
        ("E6", &[1, 0, 0, 0, 0, 0], 27),
        ("E6", &[0, 1, 0, 0, 0, 0], 78),
        ("E7", &[0, 0, 0, 0, 0, 0, 1], 56),
        ("E7", &[1, 0, 0, 0, 0, 0, 0], 133),
        ("E8", &[0, 0, 0, 0, 0, 0, 0, 1], 248),
        ("E8", &[1, 0, 0, 0, 0, 0, 0, 0], 3875),
        ("A2", &[1, 1], 8),
        ("B3", &[0, 0, 1], 8),
        ("C3", &[0, 1, 0], 14),
        ("D5", &[0, 0, 0, 0, 1], 16),
    ];
    for (t, l, d) in cases {
        assert_eq!(rs(t).weyl_dimension(&w(l)).unwrap(), BigUint::from(*d), "{t} {l:?}");
    }
    assert!(rs("A2").weyl_dimension(&w(&[-1, 0])).is_err());
}

#[test]
fn flag_and_borel_dimensions() {
    assert_eq!(
        (1..=7).map(|i| rs("E7").flag_dimension(i).unwrap()).collect::<Vec<_>>(),
        vec![33, 42, 47, 53, 50, 42, 27]
    );
    assert!(rs("E7").flag_dimension(0).is_err());
    assert!(rs("E7").flag_dimension(8).is_err());
    assert_eq!(rs("D5xT1").borel_dimension(), 26);
    assert_eq!(rs("A1xF4").borel_dimension(), 30);
}

#[test]
fn dominant_conjugates() {
    let g2 = rs("G2");
    let s1 = g2.reflect(&w(&[1, 0]), 0);
    assert_eq!(s1, w(&[-1, 1]));
    assert_eq!(g2.dominant_conjugate(&s1), (w(&[1, 0]), 1));
    let a2 = rs("A2");
    assert_eq!(a2.dominant_conjugate_shifted(&w(&[-1, 0])), Shifted::Singular);
    assert_eq!(
        a2.dominant_conjugate_shifted(&w(&[-2, 1])),
        Shifted::Regular {
            weight: w(&[0, 0]),
            sign: -1
        }
    );
    assert_eq!(
        a2.dominant_conjugate_shifted(&w(&[-3, 0])),
        Shifted::Regular {
            weight: w(&[0, 0]),
            sign: 1
        }
    );
}

#[test]
fn duality() {
    let e6 = rs("E6");
    assert_eq!(e6.dual_node(1).unwrap(), 6);
    assert_eq!(e6.dual_node(3).unwrap(), 5);
    assert_eq!(e6.dual_node(2).unwrap(), 2);
    assert_eq!(e6.dual_node(4).unwrap(), 4);
    for t in ["G2", "F4", "E7", "E8"] {
        let r = rs(t);
        for i in 1..=r.rank() {
            assert_eq!(r.dual_node(i).unwrap(), i, "{t}");
        }
    }
    let l = w(&[1, 2, 0, 3, 0, 1]);
    assert_eq!(e6.dual_weight(&e6.dual_weight(&l)), l);
}

fn orbit_oracle(r: &RootSystem, l: &Weight) -> HashSet<Weight> {
    let mut seen = HashSet::from([l.clone()]);
    let mut stack = vec![l.clone()];
    while let Some(m) = stack.pop() {
        for i in 0..r.rank() {
            let n = r.reflect(&m, i);
            if seen.insert(n.clone()) {
                stack.push(n);
            }
        }
    }
    seen
}

#[test]
fn orbits_match_oracle() {
    for (t, l) in [
        ("F4", vec![0, 0, 0, 1]),
        ("G2", vec![1, 1]),
        ("E6", vec![1, 0, 0, 0, 0, 1]),
        ("B3", vec![0, 1, 1]),
        ("A3xA1", vec![1, 0, 1, 1]),
    ] {
        let r = rs(t);
        let l = w(&l);
        let orbit = r.weyl_orbit(&l).unwrap();
        let set: HashSet<Weight> = orbit.iter().cloned().collect();
        assert_eq!(set.len(), orbit.len(), "duplicates in {t}");
        assert_eq!(set, orbit_oracle(&r, &l), "{t}");
        assert_eq!(BigUint::from(orbit.len()), r.orbit_size(&l).unwrap(), "{t}");
    }
    assert_eq!(rs("F4").weyl_orbit(&w(&[0, 0, 0, 1])).unwrap().len(), 24);
    assert_eq!(rs("E8").weyl_orbit(&w(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap().len(), 240);
    assert_eq!(rs("E7").orbit_size(&w(&[0; 7])).unwrap(), BigUint::from(1u32));
}

#[test]
fn freudenthal_known_values() {
    let e8 = rs("E8");
    let adj = e8.freudenthal(&w(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
    assert_eq!(adj.multiplicity(&w(&[0; 8])), 8);
    assert_eq!(adj.dimension(&e8).unwrap(), BigUint::from(248u32));
    let e6 = rs("E6");
    let adj = e6.freudenthal(&w(&[0, 1, 0, 0, 0, 0])).unwrap();
    assert_eq!(adj.multiplicity(&w(&[0; 6])), 6);
    let g2 = rs("G2");
    let c = g2.freudenthal(&w(&[2, 0])).unwrap();
    assert_eq!(c.dimension(&g2).unwrap(), BigUint::from(27u32));
    // sl3 adjoint squared: weight zero of V(2,2) has multiplicity 3
    let a2 = rs("A2");
    assert_eq!(a2.freudenthal(&w(&[2, 2])).unwrap().multiplicity(&w(&[0, 0])), 3);
}

#[test]
fn freudenthal_agrees_with_weyl_on_samples() {
    for t in ["G2", "B3", "C3", "F4", "E6", "A2xA1"] {
        let r = rs(t);
        for k in 0..r.rank() {
            for m in 1..=2 {
                let mut l = r.zero_weight();
                l.0[k] = m;
                l.0[(k + 1) % r.rank()] += 1;
                let c = r.freudenthal(&l).unwrap();
                assert_eq!(c.dimension(&r).unwrap(), r.weyl_dimension(&l).unwrap(), "{t} {l}");
            }
        }
    }
}
