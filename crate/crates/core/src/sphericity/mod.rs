//! Sphericity of flag varieties `G/P_i` under a reductive subgroup `H`.
//!
//! Two independent tests are provided.  The module test works with the base point `eP_i`,
//! whose stabiliser in `H` is a parabolic with Levi factor `L`: `G/P_i` is `H`-spherical
//! iff `B_L` has an open orbit on `N = g / (p_i + h)`.  The translate test asks whether
//! `b_H + Ad(u) p_i = g` for a random `u` in the opposite unipotent radical.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chevalley::{ChevalleyAlgebra, ChevalleyElement};
use crate::data::Session;
use crate::embeddings::{catalog_for, DataSource, Embedding, EmbeddingKind};
use crate::linalg::{self, Echelon, Q};
use crate::rootsys::{RootSystem, RootVector, TypeSpec};
use crate::{Error, Result};

/// Data attached to the base point `eP_i`.
#[derive(Clone, Debug)]
pub struct ParabolicSetup {
    node: usize,
    embedding: Arc<Embedding>,
    /// Algebra indices of `X_{-alpha}` spanning `g/p`, one per coordinate.
    m: Vec<usize>,
    m_coord: HashMap<usize, usize>,
    /// Image of `h` in `g/p`.
    h_image: Echelon,
    /// Coordinates of `g/p` forming the basis of `N`.
    n_coords: Vec<usize>,
    l_positive: Vec<ChevalleyElement>,
    l_roots: Vec<usize>,
    torus: Vec<ChevalleyElement>,
    dim_qu: usize,
    roots_in_g: bool,
}

fn negative_index(alg: &ChevalleyAlgebra, r: &RootVector) -> usize {
    alg.root_index(&r.neg()).expect("negative of a root")
}

impl ParabolicSetup {
    pub fn node(&self) -> usize {
        self.node
    }

    pub fn embedding(&self) -> &Arc<Embedding> {
        &self.embedding
    }

    pub fn dim_n(&self) -> usize {
        self.n_coords.len()
    }

    /// `dim H/(H cap P_i)`.
    pub fn dim_qu(&self) -> usize {
        self.dim_qu
    }

    /// True when every root vector of `H` is a root vector of `G`; `N` is then spanned by root vectors.
    pub fn roots_in_g(&self) -> bool {
        self.roots_in_g
    }

    /// Positive roots `alpha` with `X_{-alpha}` in the chosen basis of `N`.
    pub fn n_roots(&self) -> Vec<RootVector> {
        let alg = self.embedding.algebra();
        self.n_coords
            .iter()
            .map(|&c| alg.root_of(self.m[c]).expect("root").neg())
            .collect()
    }

    /// Positive roots of `L`, as roots of `H`.
    pub fn l_roots(&self) -> Vec<RootVector> {
        self.l_roots
            .iter()
            .map(|&k| self.embedding.h().positive_roots()[k].clone())
            .collect()
    }

    /// Basis of the nilradical `u_L` of `b_L`.
    pub fn l_positive(&self) -> &[ChevalleyElement] {
        &self.l_positive
    }

    /// Coordinates in `N` of the image of `x`.
    pub fn project(&self, x: &ChevalleyElement) -> Vec<Q> {
        let mut v = vec![Q::default(); self.m.len()];
        for (k, c) in x.terms() {
            if let Some(&j) = self.m_coord.get(&k) {
                v[j] = c.clone();
            }
        }
        let r = self.h_image.reduce(&v);
        self.n_coords.iter().map(|&j| r[j].clone()).collect()
    }

    /// The element `sum c_j X_{-alpha_j}` over the basis of `N`.
    pub fn element(&self, coords: &[i64]) -> ChevalleyElement {
        let mut x = ChevalleyElement::zero();
        for (&j, &c) in self.n_coords.iter().zip(coords) {
            if c != 0 {
                x.add_term(self.m[j], linalg::q(c));
            }
        }
        x
    }

    fn check_in_slice(&self, x: &ChevalleyElement) -> Result<()> {
        match x.support().find(|k| !self.m_coord.contains_key(k)) {
            Some(k) => Err(Error::NotInSlice(format!(
                "{:?} is not in g/p",
                self.embedding.algebra().label(k)
            ))),
            None => Ok(()),
        }
    }

    /// Rank of `{[b, x]}` in `N`, for `b` running over `u_L` and, optionally, the torus of `H`.
    pub fn orbit_rank(&self, x: &ChevalleyElement, with_torus: bool, modulus: Option<u64>) -> Result<usize> {
        self.check_in_slice(x)?;
        let alg = self.embedding.algebra();
        let acting = self
            .l_positive
            .iter()
            .chain(if with_torus { &self.torus[..] } else { &[] });
        let rows: Vec<Vec<Q>> = acting.map(|b| self.project(&alg.bracket(b, x))).collect();
        rank(&rows, modulus)
    }
}

fn rank(rows: &[Vec<Q>], modulus: Option<u64>) -> Result<usize> {
    match modulus {
        None => Ok(linalg::rank(rows)),
        Some(p) => linalg::rank_mod_p(rows, p),
    }
}

/// Builds `L`, `N` and the projection `g -> N` for node `node` (1-based).
pub fn build_setup(e: Arc<Embedding>, node: usize) -> Result<ParabolicSetup> {
    let alg = e.algebra().clone();
    let g = alg.root_system();
    g.check_node(node)?;
    let k = node - 1;
    let m: Vec<usize> = g
        .positive_roots()
        .iter()
        .filter(|r| r.0[k] != 0)
        .map(|r| negative_index(&alg, r))
        .collect();
    let m_coord: HashMap<usize, usize> = m.iter().enumerate().map(|(j, &i)| (i, j)).collect();

    let real = e.realization();
    let mut h_image = Echelon::new(m.len());
    let mut l_positive = Vec::new();
    let mut l_roots = Vec::new();
    let mut dim_qu = 0;
    for (j, y) in real.negative.iter().enumerate() {
        if y.support().all(|i| !m_coord.contains_key(&i)) {
            l_positive.push(real.positive[j].clone());
            l_roots.push(j);
        } else {
            // Image in g/p: constituents lying in p drop out.
            let mut v = vec![Q::default(); m.len()];
            for (i, c) in y.terms() {
                if let Some(&t) = m_coord.get(&i) {
                    v[t] = c.clone();
                }
            }
            h_image.insert(&v);
            dim_qu += 1;
        }
    }
    if h_image.rank() != dim_qu {
        return Err(Error::Consistency("root vectors of H are dependent modulo p".into()));
    }
    let pivots: Vec<usize> = h_image.pivots().collect();
    let n_coords: Vec<usize> = (0..m.len()).filter(|j| !pivots.contains(j)).collect();
    let roots_in_g = real.positive.iter().chain(&real.negative).all(|x| x.len() == 1);
    Ok(ParabolicSetup {
        node,
        embedding: e.clone(),
        m,
        m_coord,
        h_image,
        n_coords,
        l_positive,
        l_roots,
        torus: real.cartan.clone(),
        dim_qu,
        roots_in_g,
    })
}

/// True iff `[b_L, x]` spans `N`, i.e. `x` lies in the open `B_L`-orbit.
pub fn dense_orbit_test(setup: &ParabolicSetup, x: &ChevalleyElement) -> Result<bool> {
    Ok(setup.orbit_rank(x, true, None)? == setup.dim_n())
}

/// Sampling parameters shared by the randomised tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sampling {
    pub trials: usize,
    pub seed: u64,
    /// Prime for modular ranks; exact rational ranks when absent.
    pub modulus: Option<u64>,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            trials: 8,
            seed: 0,
            modulus: None,
        }
    }
}

/// Entries of random samples are uniform in `[-SAMPLE_RANGE, SAMPLE_RANGE]`.
pub const SAMPLE_RANGE: i64 = 9;

fn sample(rng: &mut ChaCha8Rng, n: usize) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE)).collect()
}

/// Deterministic per-triple stream, so results do not depend on evaluation order.
fn rng_for(seed: u64, g: &TypeSpec, h: &TypeSpec, node: usize, tag: &str) -> ChaCha8Rng {
    let mut x: u64 = 0xcbf2_9ce4_8422_2325;
    for b in format!("{g}/{h}/{node}/{tag}").bytes() {
        x = (x ^ b as u64).wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ x)
}

fn setup_rng(setup: &ParabolicSetup, s: &Sampling, tag: &str) -> ChaCha8Rng {
    let e = &setup.embedding;
    rng_for(s.seed, e.g().spec(), e.h().spec(), setup.node, tag)
}

/// Largest `U_L`-orbit dimension over the samples.
pub fn generic_orbit_dim(setup: &ParabolicSetup, s: &Sampling) -> Result<usize> {
    let mut rng = setup_rng(setup, s, "orbit");
    let mut best = 0;
    for _ in 0..s.trials.max(1) {
        let x = setup.element(&sample(&mut rng, setup.dim_n()));
        best = best.max(setup.orbit_rank(&x, false, s.modulus)?);
        if best == setup.l_positive.len().min(setup.dim_n()) {
            break;
        }
    }
    Ok(best)
}

/// `dim N - dim(generic U_L-orbit) + 1`: the number of generators of the `U_H`-invariants
/// of the cone over `G/P_i` when the variety is spherical.
pub fn invariant_ring_dim(setup: &ParabolicSetup, s: &Sampling) -> Result<usize> {
    Ok(setup.dim_n() - generic_orbit_dim(setup, s)? + 1)
}

/// Outcome of a randomised full-rank search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankSearch {
    pub target: usize,
    pub ranks: Vec<usize>,
    /// Coordinates of the first full-rank sample.
    pub witness: Option<Vec<i64>>,
}

impl RankSearch {
    pub fn full(&self) -> bool {
        self.witness.is_some()
    }
}

/// Samples `x` in `N` until `[b_L, x] = N`.
pub fn module_search(setup: &ParabolicSetup, s: &Sampling) -> Result<RankSearch> {
    let mut rng = setup_rng(setup, s, "module");
    let target = setup.dim_n();
    let mut ranks = Vec::new();
    for _ in 0..s.trials.max(1) {
        let c = sample(&mut rng, target);
        let r = setup.orbit_rank(&setup.element(&c), true, s.modulus)?;
        ranks.push(r);
        if r == target {
            return Ok(RankSearch {
                target,
                ranks,
                witness: Some(c),
            });
        }
    }
    Ok(RankSearch {
        target,
        ranks,
        witness: None,
    })
}

fn opposite_radical(alg: &ChevalleyAlgebra, node: usize) -> Vec<usize> {
    let g = alg.root_system();
    g.positive_roots()
        .iter()
        .filter(|r| r.0[node - 1] != 0)
        .map(|r| negative_index(alg, r))
        .collect()
}

fn translate_element(m: &[usize], c: &[i64]) -> ChevalleyElement {
    let mut n = ChevalleyElement::zero();
    for (&i, &x) in m.iter().zip(c) {
        if x != 0 {
            n.add_term(i, linalg::q(x));
        }
    }
    n
}

/// Rank of the projection of `exp(ad n) b_H` to `g/p_i`, where `n = sum c_j X_{-alpha_j}` over the
/// positive roots `alpha_j` with nonzero `alpha_i`-coefficient, in root order.
pub fn translate_rank(e: &Embedding, node: usize, c: &[i64], modulus: Option<u64>) -> Result<usize> {
    let alg = e.algebra();
    e.g().check_node(node)?;
    let m = opposite_radical(alg, node);
    if c.len() != m.len() {
        return Err(Error::NotInSlice(format!(
            "expected {} coefficients, got {}",
            m.len(),
            c.len()
        )));
    }
    let coord: HashMap<usize, usize> = m.iter().enumerate().map(|(j, &i)| (i, j)).collect();
    let n = translate_element(&m, c);
    let rows: Vec<Vec<Q>> = e
        .realization()
        .borel()
        .par_iter()
        .map(|b| {
            let v = alg.ad_exp(&n, b)?;
            let mut row = vec![Q::default(); m.len()];
            for (k, x) in v.terms() {
                if let Some(&j) = coord.get(&k) {
                    row[j] = x.clone();
                }
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    rank(&rows, modulus)
}

/// Samples `n` in the opposite unipotent radical until `exp(ad n) b_H` spans `g/p_i`.
///
/// Equivalent to `b_H + exp(-ad n) p_i = g`; the projected form keeps the matrices small.
pub fn generic_translate_test(e: &Embedding, node: usize, s: &Sampling) -> Result<RankSearch> {
    e.g().check_node(node)?;
    let target = opposite_radical(e.algebra(), node).len();
    let mut rng = rng_for(s.seed, e.g().spec(), e.h().spec(), node, "translate");
    let mut ranks = Vec::new();
    for _ in 0..s.trials.max(1) {
        let c = sample(&mut rng, target);
        let r = translate_rank(e, node, &c, s.modulus)?;
        ranks.push(r);
        if r == target {
            return Ok(RankSearch {
                target,
                ranks,
                witness: Some(c),
            });
        }
    }
    Ok(RankSearch {
        target,
        ranks,
        witness: None,
    })
}

/// The same test in its literal form: rank of `b_H` together with `exp(ad n) p_i` in `g`.
pub fn generic_translate_literal(e: &Embedding, node: usize, s: &Sampling) -> Result<RankSearch> {
    let alg = e.algebra();
    e.g().check_node(node)?;
    let m = opposite_radical(alg, node);
    let in_m: std::collections::HashSet<usize> = m.iter().copied().collect();
    let p: Vec<ChevalleyElement> = (0..alg.dim())
        .filter(|i| !in_m.contains(i))
        .map(ChevalleyElement::basis)
        .collect();
    let mut rng = rng_for(s.seed, e.g().spec(), e.h().spec(), node, "translate");
    let mut ranks = Vec::new();
    for _ in 0..s.trials.max(1) {
        let c = sample(&mut rng, m.len());
        let n = translate_element(&m, &c).scale(&linalg::q(-1));
        let mut vs = e.realization().borel();
        for b in &p {
            vs.push(alg.ad_exp(&n, b)?);
        }
        let r = alg.span_rank(&vs, s.modulus)?;
        ranks.push(r);
        if r == alg.dim() {
            return Ok(RankSearch {
                target: alg.dim(),
                ranks,
                witness: Some(c),
            });
        }
    }
    Ok(RankSearch {
        target: alg.dim(),
        ranks,
        witness: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Spherical,
    NotSpherical,
    DimensionPruned,
    TypeOnlyUndecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Spherical => "spherical",
            Verdict::NotSpherical => "not-spherical",
            Verdict::DimensionPruned => "dimension-pruned",
            Verdict::TypeOnlyUndecided => "type-only-undecided",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DimensionCount,
    NModule,
    GenericTranslate,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Confidence {
    Exact,
    MonteCarlo,
}

/// One term `c X_{-alpha}` of a witness.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WitnessTerm {
    pub coeff: i64,
    /// The positive root `alpha`.
    pub root: RootVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericityVerdict {
    pub g: TypeSpec,
    pub h: TypeSpec,
    pub node: usize,
    pub verdict: Verdict,
    pub method: Method,
    pub confidence: Confidence,
    pub witness: Option<Vec<WitnessTerm>>,
    pub ranks: Vec<usize>,
    pub target: Option<usize>,
    pub borel_dim: usize,
    pub flag_dim: usize,
    pub seed: u64,
    pub modulus: Option<u64>,
}

impl SphericityVerdict {
    pub fn is_spherical(&self) -> bool {
        self.verdict == Verdict::Spherical
    }
}

/// Which test decides a triple when both could.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodChoice {
    /// Module test for explicitly given subsystem and Levi embeddings, translate test otherwise.
    #[default]
    Auto,
    NModule,
    GenericTranslate,
}

/// Modular arithmetic policy for ranks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModPolicy {
    /// Modular ranks only for `G` of rank at least 8.
    #[default]
    Auto,
    Off,
    Prime(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Policy {
    pub trials: usize,
    pub seed: u64,
    pub method: MethodChoice,
    pub modulus: ModPolicy,
}

impl Default for Policy {
    fn default() -> Self {
        Policy {
            trials: 8,
            seed: 0,
            method: MethodChoice::Auto,
            modulus: ModPolicy::Auto,
        }
    }
}

impl Policy {
    /// Prime for a group, if any.
    pub fn modulus_for(&self, g: &RootSystem) -> Result<Option<u64>> {
        match self.modulus {
            ModPolicy::Off => Ok(None),
            ModPolicy::Prime(p) if linalg::is_prime(p) => Ok(Some(p)),
            ModPolicy::Prime(p) => Err(Error::NonPrimeModulus(p)),
            ModPolicy::Auto if g.rank() >= 8 => {
                Ok(Some(linalg::random_prime(&mut ChaCha8Rng::seed_from_u64(self.seed))))
            }
            ModPolicy::Auto => Ok(None),
        }
    }
}

/// Decides one triple.
pub fn decide(
    session: &Session,
    g: &TypeSpec,
    h: &TypeSpec,
    node: usize,
    policy: &Policy,
) -> Result<SphericityVerdict> {
    let entry = catalog_for(g).into_iter().find(|e| &e.h == h);
    let grs = session.algebra(g);
    let grs = grs.root_system();
    let flag_dim = grs.flag_dimension(node)?;
    let borel_dim = RootSystem::new(h).borel_dimension();
    let modulus = policy.modulus_for(grs)?;
    let mut v = SphericityVerdict {
        g: g.clone(),
        h: h.clone(),
        node,
        verdict: Verdict::DimensionPruned,
        method: Method::DimensionCount,
        confidence: Confidence::Exact,
        witness: None,
        ranks: Vec::new(),
        target: None,
        borel_dim,
        flag_dim,
        seed: policy.seed,
        modulus,
    };
    if borel_dim < flag_dim {
        return Ok(v);
    }
    let explicit = session.data().embedding_data(g, h).is_some();
    let buildable = explicit || entry.as_ref().is_some_and(|e| e.removal.is_some());
    if !buildable {
        v.verdict = Verdict::TypeOnlyUndecided;
        v.method = Method::None;
        return Ok(v);
    }
    let e = session.embedding(g, h)?;
    let use_module = match policy.method {
        MethodChoice::NModule => true,
        MethodChoice::GenericTranslate => false,
        MethodChoice::Auto => {
            explicit
                && matches!(e.kind(), EmbeddingKind::Subsystem | EmbeddingKind::Levi)
                && entry.is_none_or(|x| x.source == DataSource::Explicit)
        }
    };
    let s = Sampling {
        trials: policy.trials,
        seed: policy.seed,
        modulus,
    };
    if use_module {
        let setup = build_setup(e.clone(), node)?;
        let res = module_search(&setup, &s)?;
        v.method = Method::NModule;
        v.target = Some(res.target);
        v.ranks = res.ranks;
        if let Some(c) = res.witness {
            v.verdict = Verdict::Spherical;
            v.confidence = if modulus.is_some() {
                Confidence::MonteCarlo
            } else {
                Confidence::Exact
            };
            let roots = setup.n_roots();
            v.witness = Some(
                c.iter()
                    .zip(roots)
                    .filter(|(c, _)| **c != 0)
                    .map(|(&coeff, root)| WitnessTerm { coeff, root })
                    .collect(),
            );
        } else {
            v.verdict = Verdict::NotSpherical;
            v.confidence = Confidence::MonteCarlo;
        }
    } else {
        let res = generic_translate_test(&e, node, &s)?;
        v.method = Method::GenericTranslate;
        v.target = Some(res.target);
        v.verdict = if res.full() {
            Verdict::Spherical
        } else {
            Verdict::NotSpherical
        };
        v.ranks = res.ranks;
        v.confidence = Confidence::MonteCarlo;
        // the witness is the translating element n, not a point of N
        v.witness = res.witness.map(|c| {
            let roots = grs.positive_roots().iter().filter(|r| r.0[node - 1] != 0);
            c.iter()
                .zip(roots)
                .filter(|(c, _)| **c != 0)
                .map(|(&coeff, root)| WitnessTerm {
                    coeff,
                    root: root.clone(),
                })
                .collect()
        });
    }
    Ok(v)
}

/// Every catalogued subgroup of `G` at every node, sorted by subgroup and node.
pub fn classify(session: &Session, g: &TypeSpec, policy: &Policy) -> Result<Vec<SphericityVerdict>> {
    let rs = RootSystem::new(g);
    if !g.is_simple() || !matches!(g.to_string().as_str(), "G2" | "F4" | "E6" | "E7" | "E8") {
        return Err(Error::InvalidType(format!("{g} is not an exceptional group")));
    }
    let jobs: Vec<(TypeSpec, usize)> = catalog_for(g)
        .into_iter()
        .flat_map(|e| (1..=rs.rank()).map(move |i| (e.h.clone(), i)))
        .collect();
    let mut out: Vec<SphericityVerdict> = jobs
        .par_iter()
        .map(|(h, i)| decide(session, g, h, *i, policy))
        .collect::<Result<_>>()?;
    let order: Vec<TypeSpec> = catalog_for(g).into_iter().map(|e| e.h).collect();
    out.sort_by_key(|v| (order.iter().position(|h| h == &v.h), v.node));
    Ok(out)
}
