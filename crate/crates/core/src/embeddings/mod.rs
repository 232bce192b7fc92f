//! Reductive subgroups `H < G` given by explicit Lie-algebra data, and restriction of weights.
//!
//! Every embedding is reduced to Chevalley generators `(X_i, Y_i, H_i)` of `h` inside `g`,
//! which are checked against the Cartan matrix of `H` and the Serre relations.

mod catalog;
mod parse;
mod subsystem;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use catalog::{catalog, catalog_for, CatalogEntry, DataSource, SubgroupClass};
pub use parse::{format_embeddings, parse_embeddings, EmbeddingData, ImageSpec};
pub use subsystem::subsystem_data;

use crate::chevalley::{ChevalleyAlgebra, ChevalleyElement};
use crate::linalg::{self, q, Q};
use crate::rootsys::{RootSystem, RootVector, Weight};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmbeddingKind {
    /// Maximal-rank subgroup spanned by root subgroups.
    Subsystem,
    /// Levi factor of a maximal parabolic, with its central torus.
    Levi,
    /// Fixed points of a diagram automorphism, given by Chevalley generators.
    Folded,
    /// Generators partly obtained as a centralizer.
    Derived,
}

impl fmt::Display for EmbeddingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmbeddingKind::Subsystem => "subsystem",
            EmbeddingKind::Levi => "levi",
            EmbeddingKind::Folded => "folded",
            EmbeddingKind::Derived => "derived",
        })
    }
}

impl FromStr for EmbeddingKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "subsystem" => EmbeddingKind::Subsystem,
            "levi" => EmbeddingKind::Levi,
            "folded" => EmbeddingKind::Folded,
            "derived" => EmbeddingKind::Derived,
            _ => return Err(Error::InvalidEmbedding(format!("unknown kind `{s}`"))),
        })
    }
}

/// A weight of `H`: semisimple part in fundamental coordinates plus the central charge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HWeight {
    pub weight: Weight,
    pub charge: i64,
}

/// Root vectors and Cartan elements spanning `h` inside `g`.
#[derive(Clone, Debug)]
pub struct Realization {
    /// `H_i` for the simple roots of `H`, then the central torus element if any.
    pub cartan: Vec<ChevalleyElement>,
    /// Root vectors of the positive roots of `H`, in the order of `H`'s positive roots.
    pub positive: Vec<ChevalleyElement>,
    pub negative: Vec<ChevalleyElement>,
}

impl Realization {
    /// Basis of the Borel subalgebra `b_H`.
    pub fn borel(&self) -> Vec<ChevalleyElement> {
        self.cartan.iter().chain(&self.positive).cloned().collect()
    }

    pub fn all(&self) -> Vec<ChevalleyElement> {
        self.cartan
            .iter()
            .chain(&self.positive)
            .chain(&self.negative)
            .cloned()
            .collect()
    }
}

/// A validated embedding of `H` in `G`.
#[derive(Clone, Debug)]
pub struct Embedding {
    alg: Arc<ChevalleyAlgebra>,
    h: RootSystem,
    data: EmbeddingData,
    gens: Vec<[ChevalleyElement; 3]>,
    restriction: Vec<Vec<i32>>,
    coweight: Option<Vec<i64>>,
    real: Realization,
}

fn cartan_coeffs(alg: &ChevalleyAlgebra, x: &ChevalleyElement) -> Option<Vec<Q>> {
    let rank = alg.root_system().rank();
    if x.support().any(|k| !alg.is_cartan_index(k)) {
        return None;
    }
    Some((0..rank).map(|i| x.coeff(alg.cartan_index(i))).collect())
}

fn root_sum(alg: &ChevalleyAlgebra, terms: &[(i64, RootVector)], dual: bool) -> Result<ChevalleyElement> {
    let mut e = ChevalleyElement::zero();
    for (c, r) in terms {
        let (root, coeff) = if dual {
            (r.neg(), Q::new(1.into(), (*c).into()))
        } else {
            (r.clone(), q(*c))
        };
        let idx = alg
            .root_index(&root)
            .ok_or_else(|| Error::InvalidEmbedding(format!("{root} is not a root of G")))?;
        e.add_term(idx, coeff);
    }
    Ok(e)
}

impl Embedding {
    pub fn new(data: EmbeddingData, alg: Arc<ChevalleyAlgebra>) -> Result<Self> {
        let g = alg.root_system();
        if g.spec() != &data.g {
            return Err(Error::InvalidEmbedding(format!(
                "data is for {} but the algebra is {}",
                data.g,
                g.spec()
            )));
        }
        let h = RootSystem::new(&data.h);
        let n = h.rank();
        let mut gens: Vec<Option<[ChevalleyElement; 3]>> = vec![None; n];
        let mut central = Vec::new();
        for (i, im) in data.images.iter().enumerate() {
            let (x, y) = match im {
                ImageSpec::Root(r) => {
                    let terms = [(1, r.clone())];
                    (root_sum(&alg, &terms, false)?, root_sum(&alg, &terms, true)?)
                }
                ImageSpec::Chevalley(t) => (root_sum(&alg, t, false)?, root_sum(&alg, t, true)?),
                ImageSpec::Centralizer => {
                    central.push(i);
                    continue;
                }
            };
            let hh = alg.bracket(&x, &y);
            if cartan_coeffs(&alg, &hh).is_none() {
                return Err(Error::InvalidEmbedding(format!(
                    "[X_{0}, Y_{0}] is not in the Cartan subalgebra",
                    i + 1
                )));
            }
            gens[i] = Some([x, y, hh]);
        }
        if central.len() > 1 {
            return Err(Error::InvalidEmbedding("at most one centralizer node".into()));
        }
        if let Some(&i) = central.first() {
            let others: Vec<ChevalleyElement> = gens
                .iter()
                .flatten()
                .flat_map(|t| [t[0].clone(), t[1].clone()])
                .collect();
            gens[i] = Some(centralizer_sl2(&alg, &others)?);
        }
        let gens: Vec<[ChevalleyElement; 3]> = gens.into_iter().map(|g| g.expect("filled")).collect();
        check_relations(&alg, &h, &gens)?;

        let mut restriction = Vec::with_capacity(n);
        for (i, t) in gens.iter().enumerate() {
            let c = cartan_coeffs(&alg, &t[2]).expect("checked");
            let row: Option<Vec<i32>> = c
                .iter()
                .map(|x| {
                    if linalg::is_integral(x) {
                        x.to_integer().to_i32()
                    } else {
                        None
                    }
                })
                .collect();
            restriction
                .push(row.ok_or_else(|| Error::InvalidEmbedding(format!("coroot of node {} is not integral", i + 1)))?);
        }

        let mut cartan: Vec<ChevalleyElement> = gens.iter().map(|t| t[2].clone()).collect();
        if let Some(c) = &data.coweight {
            let t = alg.cartan_element(c);
            for (i, gi) in gens.iter().enumerate() {
                if !alg.bracket(&t, &gi[0]).is_zero() {
                    return Err(Error::InvalidEmbedding(format!(
                        "coweight does not commute with node {}",
                        i + 1
                    )));
                }
            }
            let mut span = cartan.clone();
            span.push(t.clone());
            if alg.span_rank(&span, None)? != n + 1 {
                return Err(Error::InvalidEmbedding(
                    "coweight lies in the span of the coroots".into(),
                ));
            }
            cartan.push(t);
        }

        let positive = root_vectors(&alg, &h, &gens, 0)?;
        let negative = root_vectors(&alg, &h, &gens, 1)?;
        let coweight = data.coweight.clone();
        Ok(Embedding {
            alg,
            h,
            data,
            gens,
            restriction,
            coweight,
            real: Realization {
                cartan,
                positive,
                negative,
            },
        })
    }

    pub fn algebra(&self) -> &Arc<ChevalleyAlgebra> {
        &self.alg
    }

    pub fn g(&self) -> &RootSystem {
        self.alg.root_system()
    }

    pub fn h(&self) -> &RootSystem {
        &self.h
    }

    pub fn kind(&self) -> EmbeddingKind {
        self.data.kind
    }

    pub fn data(&self) -> &EmbeddingData {
        &self.data
    }

    /// `(X_i, Y_i, H_i)` for each simple root of `H`.
    pub fn generators(&self) -> &[[ChevalleyElement; 3]] {
        &self.gens
    }

    /// Row `j` holds the coefficients of the coroot `beta_j^vee` in the simple coroots of `G`.
    pub fn restriction_matrix(&self) -> &[Vec<i32>] {
        &self.restriction
    }

    pub fn coweight(&self) -> Option<&[i64]> {
        self.coweight.as_deref()
    }

    pub fn realization(&self) -> &Realization {
        &self.real
    }

    /// Image of the root system of `H` inside that of `G`, when every root vector is a root vector of `G`.
    pub fn root_images(&self) -> Option<Vec<RootVector>> {
        self.data
            .images
            .iter()
            .map(|im| match im {
                ImageSpec::Root(r) => Some(r.clone()),
                _ => None,
            })
            .collect()
    }

    /// Restriction of a weight of `G` to `H`.
    pub fn restrict_weight(&self, w: &Weight) -> Result<HWeight> {
        self.g().check_weight(w)?;
        Ok(self.restrict_unchecked(w))
    }

    pub(crate) fn restrict_unchecked(&self, w: &Weight) -> HWeight {
        let weight = Weight(
            self.restriction
                .iter()
                .map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum())
                .collect(),
        );
        let charge = self
            .coweight
            .as_ref()
            .map_or(0, |c| c.iter().zip(&w.0).map(|(a, b)| a * *b as i64).sum());
        HWeight { weight, charge }
    }
}

fn check_relations(alg: &ChevalleyAlgebra, h: &RootSystem, gens: &[[ChevalleyElement; 3]]) -> Result<()> {
    let c = h.cartan();
    let fail = |m: String| Err(Error::InvalidEmbedding(m));
    for i in 0..gens.len() {
        for j in 0..gens.len() {
            let cij = q(c[i][j] as i64);
            let (hi, xj, yj) = (&gens[i][2], &gens[j][0], &gens[j][1]);
            if alg.bracket(hi, xj) != xj.scale(&cij) {
                return fail(format!(
                    "X_{} is not a weight vector of weight {} under H_{}",
                    j + 1,
                    c[i][j],
                    i + 1
                ));
            }
            if alg.bracket(hi, yj) != yj.scale(&-cij) {
                return fail(format!("Y_{} has the wrong weight under H_{}", j + 1, i + 1));
            }
            let xy = alg.bracket(&gens[i][0], yj);
            let expect = if i == j {
                gens[i][2].clone()
            } else {
                ChevalleyElement::zero()
            };
            if xy != expect {
                return fail(format!("[X_{}, Y_{}] has the wrong value", i + 1, j + 1));
            }
            if i != j {
                for s in 0..2 {
                    let mut v = gens[j][s].clone();
                    for _ in 0..(1 - c[i][j]) {
                        v = alg.bracket(&gens[i][s], &v);
                    }
                    if !v.is_zero() {
                        return fail(format!("Serre relation fails for nodes {} and {}", i + 1, j + 1));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Root vectors for the positive (`side = 0`) or negative (`side = 1`) roots of `H`.
fn root_vectors(
    alg: &ChevalleyAlgebra,
    h: &RootSystem,
    gens: &[[ChevalleyElement; 3]],
    side: usize,
) -> Result<Vec<ChevalleyElement>> {
    let n = h.rank();
    let mut out: Vec<ChevalleyElement> = Vec::with_capacity(h.n_positive());
    for (k, r) in h.positive_roots().iter().enumerate() {
        if r.height() == 1 {
            let i = r.0.iter().position(|&x| x == 1).expect("simple");
            out.push(gens[i][side].clone());
            continue;
        }
        let (i, prev) = (0..n)
            .find_map(|i| {
                let mut d = r.clone();
                d.0[i] -= 1;
                h.root_index(&d).map(|p| (i, p))
            })
            .expect("non-simple root has a predecessor");
        let v = alg.bracket(&gens[i][side], &out[prev]);
        if v.is_zero() {
            return Err(Error::InvalidEmbedding(format!("root vector for H-root {r} vanishes")));
        }
        debug_assert_eq!(out.len(), k);
        out.push(v);
    }
    Ok(out)
}

/// The `sl2` triple commuting with `others`, normalised so that its coroot is dominant.
fn centralizer_sl2(alg: &ChevalleyAlgebra, others: &[ChevalleyElement]) -> Result<[ChevalleyElement; 3]> {
    let bad = |m: &str| Error::InvalidEmbedding(format!("centralizer: {m}"));
    let cent = centralizer_of_generators(alg, others);
    if cent.len() != 3 {
        return Err(bad(&format!("dimension {} instead of 3", cent.len())));
    }
    let nroot = alg.dim() - alg.root_system().rank();
    let rows: Vec<Vec<Q>> = (0..nroot).map(|r| cent.iter().map(|b| b.coeff(r)).collect()).collect();
    let ker = linalg::nullspace(&rows, cent.len());
    if ker.len() != 1 {
        return Err(bad("toral part is not one-dimensional"));
    }
    let mut h0 = ChevalleyElement::zero();
    for (b, c) in cent.iter().zip(&ker[0]) {
        h0.add_scaled(b, c);
    }
    let rank = alg.root_system().rank();
    let hc: Vec<Q> = (0..rank).map(|i| h0.coeff(alg.cartan_index(i))).collect();
    if hc.iter().sum::<Q>().is_negative() {
        h0 = h0.scale(&q(-1));
    }
    let eig = |idx: usize| -> Q {
        let x = ChevalleyElement::basis(idx);
        alg.bracket(&h0, &x).coeff(idx)
    };
    let (mut e, mut f) = (ChevalleyElement::zero(), ChevalleyElement::zero());
    for b in &cent {
        for k in b.support() {
            if alg.is_cartan_index(k) {
                continue;
            }
            let ev = eig(k);
            if ev.is_positive() && e.is_zero() {
                e = b.filter(|j| !alg.is_cartan_index(j) && eig(j).is_positive());
            } else if ev.is_negative() && f.is_zero() {
                f = b.filter(|j| !alg.is_cartan_index(j) && eig(j).is_negative());
            }
        }
    }
    if e.is_zero() || f.is_zero() {
        return Err(bad("no root vectors"));
    }
    let lam = alg
        .bracket(&h0, &e)
        .terms()
        .next()
        .map(|(k, c)| c / e.coeff(k))
        .expect("nonzero");
    let hh = h0.scale(&(q(2) / lam));
    let ef = alg.bracket(&e, &f);
    let (k, c) = hh.terms().next().expect("nonzero");
    let ratio = ef.coeff(k) / c;
    if ratio.is_zero() || ef != hh.scale(&ratio) {
        return Err(bad("[e, f] is not proportional to h"));
    }
    let f = f.scale(&ratio.recip());
    Ok([e, f, hh])
}

/// Elements of `g` commuting with every element of `gens`.
pub fn centralizer_of_generators(alg: &ChevalleyAlgebra, gens: &[ChevalleyElement]) -> Vec<ChevalleyElement> {
    let dim = alg.dim();
    let cols: Vec<Vec<Q>> = (0..dim)
        .map(|j| {
            let e = ChevalleyElement::basis(j);
            gens.iter().flat_map(|s| alg.dense(&alg.bracket(&e, s))).collect()
        })
        .collect();
    let m = cols.first().map_or(0, |c| c.len());
    let mut ech = linalg::Echelon::new(dim);
    let mut rows = Vec::new();
    for r in 0..m {
        let row: Vec<Q> = (0..dim).map(|j| cols[j][r].clone()).collect();
        if row.iter().any(|x| !x.is_zero()) && ech.insert(&row) {
            rows.push(row);
        }
    }
    linalg::nullspace(&rows, dim)
        .into_iter()
        .map(|v| ChevalleyElement::from_dense(&v))
        .collect()
}
