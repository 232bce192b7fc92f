//! Branching rules as free semigroups of highest weights: generator sets, expansion,
//! verification against computed decompositions, and discovery from low degrees.

mod parse;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use parse::{parse_rules, Bound, LinForm, Pattern, RuleRow};

use crate::characters::{decompose, Budget, Decomposition};
use crate::data::Session;
use crate::embeddings::{Embedding, HWeight};
use crate::rootsys::{TypeSpec, Weight};
use crate::{Error, Result};

/// One generator of the semigroup: a highest weight (with charge) appearing in degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub degree: u32,
    pub weight: HWeight,
}

/// Generators `(d_j, eta_j)`; `res V_{k omega}` is the sum over `sum a_j d_j = k` of `V_{sum a_j eta_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub g: TypeSpec,
    pub h: TypeSpec,
    pub node: usize,
    pub source: String,
    pub generators: Vec<Generator>,
}

/// Which highest weight a row describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reading {
    /// `V_{k omega_i}`
    Direct,
    /// `V_{k omega_i^*}`
    Dual,
}

impl Reading {
    pub fn weight(self, e: &Embedding, node: usize, k: i32) -> Result<Weight> {
        let w = e.g().fundamental(node)?.scale(k);
        Ok(match self {
            Reading::Direct => w,
            Reading::Dual => e.g().dual_weight(&w),
        })
    }
}

/// Builds the generator set of a rule row along an embedding.
pub fn generators_from_row(row: &RuleRow, e: &Embedding) -> Result<GeneratorSet> {
    if &row.g != e.g().spec() || &row.h != e.h().spec() {
        return Err(Error::UnsupportedTriple(format!(
            "row for {}/{} used with {}/{}",
            row.g,
            row.h,
            e.g().spec(),
            e.h().spec()
        )));
    }
    let m = row.degrees.len();
    let mut generators = Vec::with_capacity(m + 1);
    for j in 0..m {
        let weight = match &row.pattern {
            Pattern::H(terms) => {
                let mut w = e.h().zero_weight();
                for (form, idx) in terms {
                    w.0[*idx] += form[j] as i32;
                }
                let charge = row.charge.as_ref().map_or(0, |c| c[j]);
                HWeight { weight: w, charge }
            }
            Pattern::G(terms) => {
                let mut w = e.g().zero_weight();
                for (form, idx) in terms {
                    w.0[*idx] += form[j] as i32;
                }
                e.restrict_weight(&w)?
            }
        };
        if weight.weight.0.iter().any(|&x| x < 0) {
            return Err(Error::InvalidWeight(format!(
                "generator a{} of row at line {} is not dominant",
                j + 1,
                row.line
            )));
        }
        generators.push(Generator {
            degree: row.degrees[j] as u32,
            weight,
        });
    }
    if row.bound == Bound::Le {
        generators.push(Generator {
            degree: 1,
            weight: HWeight {
                weight: e.h().zero_weight(),
                charge: 0,
            },
        });
    }
    Ok(GeneratorSet {
        g: row.g.clone(),
        h: row.h.clone(),
        node: row.node,
        source: row.variant.clone(),
        generators,
    })
}

/// Rows for a triple and variant from the session's data.
pub fn find_row<'a>(s: &'a Session, g: &TypeSpec, h: &TypeSpec, node: usize, variant: &str) -> Result<&'a RuleRow> {
    s.data()
        .rules
        .iter()
        .find(|r| &r.g == g && &r.h == h && r.node == node && r.variant == variant)
        .ok_or_else(|| Error::UnsupportedTriple(format!("no {variant} rule for {g}/{h} node {node}")))
}

/// Variants available for a triple, `table` first.
pub fn variants(s: &Session, g: &TypeSpec, h: &TypeSpec, node: usize) -> Vec<String> {
    let mut v: Vec<String> = s
        .data()
        .rules
        .iter()
        .filter(|r| &r.g == g && &r.h == h && r.node == node)
        .map(|r| r.variant.clone())
        .collect();
    v.sort_by_key(|x| (x != "table", x.clone()));
    v.dedup();
    v
}

/// Variant to hold a triple to: the erratum where one exists, else the printed row.
pub fn reference_variant(s: &Session, g: &TypeSpec, h: &TypeSpec, node: usize) -> String {
    let v = variants(s, g, h, node);
    if v.iter().any(|x| x == "erratum") {
        "erratum".into()
    } else {
        "table".into()
    }
}

/// The printed generator set of a row.
pub fn printed_rules(s: &Session, g: &TypeSpec, h: &TypeSpec, node: usize) -> Result<GeneratorSet> {
    let row = find_row(s, g, h, node, "table")?;
    generators_from_row(row, &*s.embedding(g, h)?)
}

/// Result of expanding a rule at one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub decomposition: Decomposition,
    /// True when two solutions gave the same highest weight.
    pub merged: bool,
}

/// All `V_{sum a_j eta_j}` with `sum a_j d_j = k`.
pub fn expand_rule(gs: &GeneratorSet, k: u32) -> Expansion {
    let mut out = Decomposition::new();
    let mut merged = false;
    let n = gs.generators.len();
    let rank = gs.generators.first().map_or(0, |g| g.weight.weight.0.len());
    fn rec(
        gs: &GeneratorSet,
        j: usize,
        left: u32,
        acc: &mut (Vec<i32>, i64),
        out: &mut Decomposition,
        merged: &mut bool,
        n: usize,
    ) {
        if j == n {
            if left == 0 {
                let key = HWeight {
                    weight: Weight::from_slice(&acc.0),
                    charge: acc.1,
                };
                let e = out.entry(key).or_insert(0);
                if *e > 0 {
                    *merged = true;
                }
                *e += 1;
            }
            return;
        }
        let g = &gs.generators[j];
        let d = g.degree;
        let mut a = 0;
        loop {
            rec(gs, j + 1, left - a * d, acc, out, merged, n);
            if (a + 1) * d > left || d == 0 {
                break;
            }
            a += 1;
            for (x, y) in acc.0.iter_mut().zip(&g.weight.weight.0) {
                *x += y;
            }
            acc.1 += g.weight.charge;
        }
        for (x, y) in acc.0.iter_mut().zip(&g.weight.weight.0) {
            *x -= y * a as i32;
        }
        acc.1 -= g.weight.charge * a as i64;
    }
    let mut acc = (vec![0; rank], 0);
    rec(gs, 0, k, &mut acc, &mut out, &mut merged, n);
    Expansion {
        decomposition: out,
        merged,
    }
}

/// One differing summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffEntry {
    pub weight: HWeight,
    pub expected: u64,
    pub actual: u64,
}

fn diff(expected: &Decomposition, actual: &Decomposition) -> Vec<DiffEntry> {
    let keys: std::collections::BTreeSet<&HWeight> = expected.keys().chain(actual.keys()).collect();
    keys.into_iter()
        .filter_map(|k| {
            let (e, a) = (
                expected.get(k).copied().unwrap_or(0),
                actual.get(k).copied().unwrap_or(0),
            );
            (e != a).then(|| DiffEntry {
                weight: k.clone(),
                expected: e,
                actual: a,
            })
        })
        .collect()
}

/// Verification of one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub k: u32,
    pub merged: bool,
    pub direct_match: bool,
    pub dual_match: bool,
    pub direct_diff: Vec<DiffEntry>,
    pub dual_diff: Vec<DiffEntry>,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleReport {
    pub g: TypeSpec,
    pub h: TypeSpec,
    pub node: usize,
    pub variant: String,
    /// Reading that matches at every degree, if any (direct preferred).
    pub reading: Option<Reading>,
    pub degrees: Vec<DegreeReport>,
}

impl RuleReport {
    pub fn matches(&self) -> bool {
        self.reading.is_some() && self.degrees.iter().all(|d| !d.merged)
    }
}

/// Compares a rule row against computed decompositions for `k = 1..=k_max`, in both readings.
pub fn verify_rule(
    s: &Session,
    g: &TypeSpec,
    h: &TypeSpec,
    node: usize,
    k_max: u32,
    variant: &str,
    budget: Budget,
) -> Result<RuleReport> {
    let ks: Vec<u32> = (1..=k_max).collect();
    verify_rule_at(s, g, h, node, &ks, variant, budget)
}

/// As [`verify_rule`], at the listed degrees only.
pub fn verify_rule_at(
    s: &Session,
    g: &TypeSpec,
    h: &TypeSpec,
    node: usize,
    ks: &[u32],
    variant: &str,
    budget: Budget,
) -> Result<RuleReport> {
    let e = s.embedding(g, h)?;
    let gs = generators_from_row(find_row(s, g, h, node, variant)?, &e)?;
    let self_dual = e.g().dual_node(node)? == node;
    let mut degrees = Vec::new();
    for &k in ks {
        let t0 = Instant::now();
        let exp = expand_rule(&gs, k);
        let direct = decompose(&e, &Reading::Direct.weight(&e, node, k as i32)?, budget)?;
        let dual = if self_dual {
            direct.clone()
        } else {
            decompose(&e, &Reading::Dual.weight(&e, node, k as i32)?, budget)?
        };
        let direct_diff = diff(&exp.decomposition, &direct);
        let dual_diff = diff(&exp.decomposition, &dual);
        degrees.push(DegreeReport {
            k,
            merged: exp.merged,
            direct_match: direct_diff.is_empty(),
            dual_match: dual_diff.is_empty(),
            direct_diff,
            dual_diff,
            millis: t0.elapsed().as_millis() as u64,
        });
    }
    let reading = if degrees.iter().all(|d| d.direct_match) {
        Some(Reading::Direct)
    } else if degrees.iter().all(|d| d.dual_match) {
        Some(Reading::Dual)
    } else {
        None
    };
    Ok(RuleReport {
        g: g.clone(),
        h: h.clone(),
        node,
        variant: variant.to_string(),
        reading,
        degrees,
    })
}

/// Greedy reconstruction of generators from `decompose(k omega)` for `k = 1..=k_probe`,
/// stopping once `s` generators are known.
pub fn discover_generators(
    e: &Embedding,
    node: usize,
    reading: Reading,
    k_probe: u32,
    s: usize,
    budget: Budget,
) -> Result<GeneratorSet> {
    let mut gs = GeneratorSet {
        g: e.g().spec().clone(),
        h: e.h().spec().clone(),
        node,
        source: "discovered".into(),
        generators: Vec::new(),
    };
    for k in 1..=k_probe {
        if gs.generators.len() >= s {
            break;
        }
        let actual = decompose(e, &reading.weight(e, node, k as i32)?, budget)?;
        if let Some((w, m)) = actual.iter().find(|(_, m)| **m > 1) {
            return Err(Error::NotSpherical(format!(
                "{} occurs with multiplicity {m} in degree {k}",
                w.weight
            )));
        }
        let known = expand_rule(&gs, k);
        if known.merged {
            return Err(Error::NotSpherical(format!("generators are not free in degree {k}")));
        }
        let mut new: BTreeMap<HWeight, ()> = BTreeMap::new();
        for w in actual.keys() {
            if !known.decomposition.contains_key(w) {
                new.insert(w.clone(), ());
            }
        }
        if let Some(w) = known.decomposition.keys().find(|w| !actual.contains_key(*w)) {
            return Err(Error::Consistency(format!(
                "product {} of known generators is missing in degree {k}",
                w.weight
            )));
        }
        for w in new.into_keys() {
            gs.generators.push(Generator { degree: k, weight: w });
        }
    }
    gs.generators.sort();
    Ok(gs)
}
