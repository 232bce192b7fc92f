//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria that cannot be met because the reference values themselves are wrong stay red;
//! they are listed in `KNOWN_RED` and the run fails if that list drifts in either direction.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use liebranch_core::branching::{self, verify_rule};
use liebranch_core::characters::{decompose, decomposition_dimension, multiplicity_of, Budget};
use liebranch_core::chevalley::{ChevalleyAlgebra, ChevalleyElement};
use liebranch_core::data::Session;
use liebranch_core::embeddings::HWeight;
use liebranch_core::linalg::q;
use liebranch_core::rootsys::{parse_weight, RootSystem, RootVector, TypeSpec, Weight};
use liebranch_core::sphericity::{
    self, build_setup, dense_orbit_test, generic_translate_test, invariant_ring_dim, module_search, Policy, Sampling,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIMIT_DIMS: Duration = Duration::from_secs(1);
const LIMIT_CLASSIFY: Duration = Duration::from_secs(600);
const LIMIT_WITNESSES: Duration = Duration::from_secs(10);
const LIMIT_INVARIANTS: Duration = Duration::from_secs(60);
const LIMIT_RULES: Duration = Duration::from_secs(1800);

/// Criteria whose reference values are misprinted; see the decisions ledger.
const KNOWN_RED: &[&str] = &["1b", "5b", "6a", "6b", "6c"];

fn ts(s: &str) -> TypeSpec {
    s.parse().unwrap()
}

struct Line {
    id: &'static str,
    what: String,
    pass: bool,
    detail: String,
}

struct Suite {
    lines: Vec<Line>,
}

impl Suite {
    fn check(&mut self, id: &'static str, what: &str, pass: bool, detail: String) {
        self.lines.push(Line {
            id,
            what: what.into(),
            pass,
            detail,
        });
    }

    fn timed<F: FnOnce() -> (bool, String)>(&mut self, id: &'static str, what: &str, limit: Duration, f: F) {
        let t = Instant::now();
        let (ok, detail) = f();
        let el = t.elapsed();
        let within = el <= limit;
        let detail = format!("{detail} ({:.2} s, limit {} s)", el.as_secs_f64(), limit.as_secs());
        self.check(id, what, ok && within, detail);
    }
}

fn flag_dims(g: &str) -> Vec<usize> {
    let rs = RootSystem::parse(g).unwrap();
    (1..=rs.rank()).map(|i| rs.flag_dimension(i).unwrap()).collect()
}

fn criterion_1(suite: &mut Suite) {
    let printed: &[(&str, &[usize])] = &[
        ("G2", &[5, 5]),
        ("F4", &[15, 20, 20, 15]),
        ("E6", &[16, 21, 25, 29, 25, 16]),
        ("E7", &[33, 42, 47, 53, 50, 42, 27]),
        ("E8", &[78, 92, 98, 106, 104, 97, 83, 57]),
    ];
    suite.timed("1a", "dim G/P_i tables", LIMIT_DIMS, || {
        let bad: Vec<String> = printed
            .iter()
            .filter(|(g, d)| flag_dims(g) != *d)
            .map(|(g, _)| g.to_string())
            .collect();
        (
            bad.is_empty(),
            if bad.is_empty() {
                String::new()
            } else {
                format!("differs for {}", bad.join(","))
            },
        )
    });

    let borel: &[(&str, &str, usize)] = &[
        ("G2", "A1xA1", 4),
        ("G2", "A1", 2),
        ("F4", "A1xC3", 14),
        ("F4", "A2xA2", 10),
        ("F4", "A3xA1", 11),
        ("F4", "A1xG2", 10),
        ("F4", "A1", 2),
        ("E6", "A5xA1", 22),
        ("E6", "A2xA2xA2", 15),
        ("E6", "D5xT1", 26),
        ("E6", "A2xG2", 13),
        ("E6", "G2", 8),
        ("E6", "A2", 5),
        ("E6", "F4", 28),
        ("E6", "C4", 20),
        ("E7", "A7", 35),
        ("E7", "E6xT1", 43),
        ("E7", "A3xA3xA1", 20),
        ("E7", "A5xA2", 25),
        ("E7", "D6xA1", 38),
        ("E7", "A1xA1", 4),
        ("E7", "A1xG2", 10),
        ("E7", "G2xC3", 20),
        ("E7", "A1xF4", 30),
        ("E7", "A1", 2),
        ("E7", "A2", 5),
        ("E8", "E7xA1", 72),
        ("E8", "E6xA2", 47),
        ("E8", "A3xD5", 34),
        ("E8", "A4xA4", 28),
        ("E8", "A5xA2xA1", 27),
        ("E8", "A7xA1", 37),
        ("E8", "D8", 72),
        ("E8", "A8", 44),
        ("E8", "G2xF4", 36),
        ("E8", "A2xA1", 6),
        ("E8", "B2", 6),
        ("E8", "A1", 2),
    ];
    let mut bad = Vec::new();
    for (g, h, d) in borel {
        let got = RootSystem::parse(h).unwrap().borel_dimension();
        if got != *d {
            bad.push(format!("{g}/{h} printed {d} computed {got}"));
        }
    }
    // the two misprints are the only differences
    suite.check("1b", "dim B_H tables as printed", bad.is_empty(), bad.join("; "));
}

fn spherical_set(s: &Session, g: &str) -> BTreeSet<(String, usize)> {
    sphericity::classify(s, &ts(g), &Policy::default())
        .unwrap()
        .into_iter()
        .filter(|v| v.is_spherical())
        .map(|v| (v.h.to_string(), v.node))
        .collect()
}

fn criterion_2(suite: &mut Suite, s: &Session) {
    let expected: &[(&str, &[(&str, &[usize])])] = &[
        ("G2", &[("A2", &[1, 2])]),
        ("F4", &[("B4", &[1, 2, 3, 4])]),
        (
            "E6",
            &[
                ("A5xA1", &[1, 6]),
                ("D5xT1", &[1, 2, 3, 5, 6]),
                ("C4", &[1, 6]),
                ("F4", &[1, 2, 3, 5, 6]),
            ],
        ),
        ("E7", &[("A7", &[7]), ("E6xT1", &[1, 2, 7]), ("D6xA1", &[7])]),
        ("E8", &[]),
    ];
    let t = Instant::now();
    let mut all_ok = true;
    let mut detail = Vec::new();
    for (g, rows) in expected {
        let want: BTreeSet<(String, usize)> = rows
            .iter()
            .flat_map(|(h, ns)| ns.iter().map(move |n| (h.to_string(), *n)))
            .collect();
        let got = spherical_set(s, g);
        if got != want {
            all_ok = false;
            detail.push(format!(
                "{g}: extra {:?} missing {:?}",
                got.difference(&want),
                want.difference(&got)
            ));
        } else {
            detail.push(format!("{g} {}", got.len()));
        }
    }
    let el = t.elapsed();
    suite.check(
        "2",
        "spherical triples (E8 at a modular rank)",
        all_ok && el <= LIMIT_CLASSIFY,
        format!(
            "{} ({:.2} s, limit {} s)",
            detail.join(", "),
            el.as_secs_f64(),
            LIMIT_CLASSIFY.as_secs()
        ),
    );
}

type Witness = (&'static str, &'static str, usize, &'static [&'static [i32]]);

const WITNESSES: &[Witness] = &[
    ("G2", "A2", 1, &[&[1, 1], &[2, 1]]),
    (
        "F4",
        "B4",
        2,
        &[&[1, 1, 2, 1], &[0, 1, 2, 1], &[1, 1, 1, 1], &[1, 2, 3, 1]],
    ),
    (
        "F4",
        "B4",
        3,
        &[&[1, 2, 3, 1], &[1, 2, 2, 1], &[1, 1, 1, 1], &[0, 1, 2, 1]],
    ),
    ("E6", "A5xA1", 1, &[&[1, 1, 2, 3, 2, 1], &[1, 1, 1, 1, 1, 1]]),
    ("E6", "F4", 2, &[&[1, 1, 1, 2, 2, 1]]),
    ("E6", "F4", 3, &[&[1, 1, 1, 2, 2, 1], &[0, 1, 1, 2, 1, 1]]),
    ("E6", "C4", 1, &[&[1, 1, 2, 3, 2, 1], &[1, 1, 1, 1, 1, 1]]),
    (
        "E7",
        "A7",
        7,
        &[&[1, 1, 2, 3, 3, 2, 1], &[1, 1, 2, 2, 1, 1, 1], &[0, 1, 0, 1, 1, 1, 1]],
    ),
    ("E7", "D6xA1", 7, &[&[1, 2, 2, 3, 2, 1, 1], &[1, 0, 1, 1, 1, 1, 1]]),
];

fn criterion_3(suite: &mut Suite, s: &Session) {
    suite.timed("3", "printed dense-orbit witnesses", LIMIT_WITNESSES, || {
        let mut bad = Vec::new();
        for (g, h, node, roots) in WITNESSES {
            let st = build_setup(s.embedding(&ts(g), &ts(h)).unwrap(), *node).unwrap();
            let alg = st.embedding().algebra();
            let mut x = ChevalleyElement::zero();
            for r in *roots {
                x.add_term(alg.root_index(&RootVector::from_slice(r).neg()).unwrap(), q(1));
            }
            if !dense_orbit_test(&st, &x).unwrap() || dense_orbit_test(&st, &ChevalleyElement::zero()).unwrap() {
                bad.push(format!("{g}/{h} P{node}"));
            }
        }
        (
            bad.is_empty(),
            format!(
                "{} of {} witnesses dense, zero never",
                WITNESSES.len() - bad.len(),
                WITNESSES.len()
            ),
        )
    });
}

fn criterion_4(suite: &mut Suite, s: &Session) {
    let want: &[(&str, &str, usize, usize)] = &[
        ("G2", "A2", 1, 3),
        ("G2", "A2", 2, 3),
        ("F4", "B4", 1, 2),
        ("F4", "B4", 2, 5),
        ("F4", "B4", 3, 5),
        ("F4", "B4", 4, 3),
        ("E6", "A5xA1", 6, 3),
        ("E6", "F4", 1, 2),
        ("E6", "F4", 2, 2),
        ("E6", "F4", 3, 3),
        ("E6", "F4", 5, 3),
        ("E6", "F4", 6, 2),
        ("E6", "C4", 1, 3),
        ("E7", "A7", 7, 4),
        ("E7", "D6xA1", 7, 3),
    ];
    suite.timed("4", "invariant-ring dimensions s", LIMIT_INVARIANTS, || {
        let mut bad = Vec::new();
        for (g, h, node, s_want) in want {
            let st = build_setup(s.embedding(&ts(g), &ts(h)).unwrap(), *node).unwrap();
            let got = invariant_ring_dim(&st, &Sampling::default()).unwrap();
            if got != *s_want {
                bad.push(format!("{g}/{h} P{node}: {got} != {s_want}"));
            }
        }
        (
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} values", want.len())
            } else {
                bad.join("; ")
            },
        )
    });
}

fn kmax(g: &TypeSpec) -> u32 {
    match g.to_string().as_str() {
        "G2" => 5,
        "F4" => 3,
        _ => 2,
    }
}

fn rule_triples(s: &Session) -> Vec<(TypeSpec, TypeSpec, usize)> {
    let mut t: Vec<_> = s
        .data()
        .rules
        .iter()
        .map(|r| (r.g.clone(), r.h.clone(), r.node))
        .collect();
    t.sort();
    t.dedup();
    t
}

fn criterion_5(suite: &mut Suite, s: &Session) {
    let triples = rule_triples(s);
    suite.timed(
        "5a",
        "rule rows (corrected where misprinted) match, charges included",
        LIMIT_RULES,
        || {
            let mut bad = Vec::new();
            for (g, h, i) in &triples {
                let v = branching::reference_variant(s, g, h, *i);
                let r = verify_rule(s, g, h, *i, kmax(g), &v, Budget::unlimited()).unwrap();
                if !r.matches() {
                    bad.push(format!("{g}/{h} P{i}"));
                }
            }
            (
                bad.is_empty() && triples.len() == 25,
                format!("{} of {} rows", triples.len() - bad.len(), triples.len()),
            )
        },
    );
    let mut bad = Vec::new();
    for (g, h, i) in &triples {
        let r = verify_rule(s, g, h, *i, kmax(g), "table", Budget::unlimited()).unwrap();
        if !r.matches() {
            bad.push(format!("{g}/{h} P{i}"));
        }
    }
    suite.check(
        "5b",
        "rule rows exactly as printed",
        bad.is_empty(),
        format!("mismatch: {}", bad.join(", ")),
    );
}

fn criterion_6(suite: &mut Suite, s: &Session) {
    let cases: &[(&'static str, &str, &str, usize, &str)] = &[
        ("6a", "E6", "A5xA1", 2, "2l3+3l6"),
        ("6b", "E7", "A7", 1, "l4"),
        ("6c", "E7", "D6xA1", 1, "2l6+2l7"),
        ("6d", "E7", "A1xF4", 7, "4l1+l5"),
    ];
    let mut first_at_four = true;
    for (id, g, h, node, target) in cases {
        let e = s.embedding(&ts(g), &ts(h)).unwrap();
        let lambda = e.g().fundamental(*node).unwrap().scale(4);
        let t = HWeight {
            weight: parse_weight(target, e.h().rank()).unwrap(),
            charge: 0,
        };
        let m = multiplicity_of(&e, &lambda, &t, Budget::unlimited()).unwrap();
        let d = decompose(&e, &lambda, Budget::unlimited()).unwrap();
        let doubled: Vec<String> = d
            .iter()
            .filter(|(_, m)| **m > 1)
            .map(|(w, m)| format!("{m}x{}", liebranch_core::rootsys::format_weight(&w.weight, 'l')))
            .collect();
        for k in 1..4 {
            let lower = decompose(&e, &e.g().fundamental(*node).unwrap().scale(k), Budget::unlimited()).unwrap();
            first_at_four &= lower.values().all(|&m| m == 1);
        }
        first_at_four &= !doubled.is_empty();
        suite.check(
            id,
            &format!("[res V(4w{node}) : V({target})] = 2 for {g}/{h}"),
            m == 2,
            format!("got {m}; multiplicities above 1: {}", doubled.join(", ")),
        );
    }
    suite.check(
        "6e",
        "each of the four is multiplicity-free up to k = 3 and not at k = 4",
        first_at_four,
        String::new(),
    );
}

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

fn criterion_7(suite: &mut Suite, s: &Session) {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut fails = 0;
    for t in ["G2", "F4", "E6", "E7", "E8"] {
        let alg = ChevalleyAlgebra::parse(t).unwrap();
        let d = alg.dim();
        for _ in 0..1000 {
            if !jacobi(&alg, rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d)) {
                fails += 1;
            }
        }
    }
    suite.check(
        "7a",
        "Jacobi identity, 1000 sampled triples per algebra",
        fails == 0,
        format!("{fails} failures"),
    );

    // height bound: coordinate sum at most `b`
    let mut bad = Vec::new();
    for (t, b) in [
        ("G2", 6),
        ("F4", 3),
        ("E6", 3),
        ("E7", 2),
        ("E8", 2),
        ("A5xA1", 4),
        ("D6xA1", 3),
        ("B4", 4),
        ("C4", 3),
    ] {
        let rs = RootSystem::parse(t).unwrap();
        for _ in 0..50 {
            let mut w = rs.zero_weight();
            for _ in 0..rng.gen_range(0..=b) {
                w.0[rng.gen_range(0..rs.rank())] += 1;
            }
            let ch = rs.freudenthal(&w).unwrap();
            if ch.dimension(&rs).unwrap() != rs.weyl_dimension(&w).unwrap() {
                bad.push(format!("{t} {w}"));
            }
        }
    }
    suite.check(
        "7b",
        "Freudenthal against Weyl, 50 random weights per type",
        bad.is_empty(),
        bad.join("; "),
    );

    let mut bad = Vec::new();
    let mut n = 0;
    for (g, h, i) in rule_triples(s) {
        let e = s.embedding(&g, &h).unwrap();
        for k in 1..=kmax(&g) {
            let lambda = e.g().fundamental(i).unwrap().scale(k as i32);
            let d = decompose(&e, &lambda, Budget::unlimited()).unwrap();
            n += 1;
            if decomposition_dimension(e.h(), &d).unwrap() != e.g().weyl_dimension(&lambda).unwrap() {
                bad.push(format!("{g}/{h} {k}w{i}"));
            }
        }
    }
    suite.check(
        "7c",
        "dimension conservation of every verified restriction",
        bad.is_empty(),
        format!("{n} restrictions {}", bad.join("; ")),
    );

    let mut bad = Vec::new();
    let mut n = 0;
    let sm = Sampling::default();
    for d in &s.data().embeddings {
        let e = s.embedding(&d.g, &d.h).unwrap();
        for i in 1..=e.g().rank() {
            if e.h().borel_dimension() < e.g().flag_dimension(i).unwrap() {
                continue;
            }
            n += 1;
            let a = module_search(&build_setup(e.clone(), i).unwrap(), &sm).unwrap().full();
            let b = generic_translate_test(&e, i, &sm).unwrap().full();
            if a != b {
                bad.push(format!("{}/{} P{i}", d.g, d.h));
            }
        }
    }
    suite.check(
        "7d",
        "N-module and generic-translate tests agree",
        bad.is_empty(),
        format!("{n} triples {}", bad.join("; ")),
    );

    let mut bad = Vec::new();
    for t in ["A5", "D5", "D6", "E6", "E7", "E8", "F4", "G2", "A5xA1", "D5xT1"] {
        let rs = RootSystem::parse(t).unwrap();
        for _ in 0..50 {
            let w = Weight((0..rs.rank()).map(|_| rng.gen_range(0..4)).collect());
            let d = rs.dual_weight(&w);
            if rs.dual_weight(&d) != w || rs.weyl_dimension(&d).unwrap() != rs.weyl_dimension(&w).unwrap() {
                bad.push(format!("{t} {w}"));
            }
        }
        for i in 1..=rs.rank() {
            if rs.dual_node(rs.dual_node(i).unwrap()).unwrap() != i {
                bad.push(format!("{t} node {i}"));
            }
        }
    }
    suite.check(
        "7e",
        "duality is an involution preserving dimensions",
        bad.is_empty(),
        bad.join("; "),
    );
}

#[test]
fn acceptance() {
    let s = Session::builtin().unwrap();
    let mut suite = Suite { lines: Vec::new() };
    criterion_1(&mut suite);
    criterion_2(&mut suite, &s);
    criterion_3(&mut suite, &s);
    criterion_4(&mut suite, &s);
    criterion_5(&mut suite, &s);
    criterion_6(&mut suite, &s);
    criterion_7(&mut suite, &s);

    println!();
    for l in &suite.lines {
        let tag = if l.pass { "PASS" } else { "FAIL" };
        let known = if !l.pass && KNOWN_RED.contains(&l.id) {
            " [known red]"
        } else {
            ""
        };
        let sep = if l.detail.trim().is_empty() { "" } else { ": " };
        println!("{tag} {:<3} {}{known}{sep}{}", l.id, l.what, l.detail.trim());
    }
    let red: BTreeSet<&str> = suite.lines.iter().filter(|l| !l.pass).map(|l| l.id).collect();
    let known: BTreeSet<&str> = KNOWN_RED.iter().copied().collect();
    assert_eq!(red, known, "red criteria differ from the recorded list");
}
