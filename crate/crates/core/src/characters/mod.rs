//! Restriction of characters along an embedding and decomposition into irreducibles.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embeddings::{Embedding, HWeight};
use crate::rootsys::{DominantCharacter, RootSystem, Shifted, Weight};
use crate::{Error, Result};

/// Default ceiling on `dim V_lambda` for unflagged requests.
pub const DEFAULT_MAX_DIM: u64 = 250_000;

/// Work limit for character computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_dim: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_dim: DEFAULT_MAX_DIM,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_dim: u64::MAX }
    }

    pub fn check(&self, rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
        let d = rs.weyl_dimension(lambda)?;
        if d > BigUint::from(self.max_dim) {
            return Err(Error::BudgetExceeded(format!(
                "dim V = {d} exceeds {}; pass --enable-heavy to proceed",
                self.max_dim
            )));
        }
        Ok(d)
    }
}

/// Multiplicities of irreducible `H`-modules, keyed by highest weight and charge.
pub type Decomposition = BTreeMap<HWeight, u64>;

/// Total dimension of a decomposition.
pub fn decomposition_dimension(h: &RootSystem, d: &Decomposition) -> Result<BigUint> {
    let mut total = BigUint::default();
    for (w, m) in d {
        total += h.weyl_dimension(&w.weight)? * BigUint::from(*m);
    }
    Ok(total)
}

/// Streams every weight of `V_lambda` (with multiplicity) through `f`, in parallel over
/// dominant weights, and merges the per-thread accumulators.
fn fold_weights<T, F, M>(g: &RootSystem, ch: &DominantCharacter, init: fn() -> T, f: F, merge: M) -> T
where
    T: Send,
    F: Fn(&mut T, &Weight, u64) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    ch.weights
        .par_iter()
        .fold(init, |mut acc, (mu, m)| {
            g.for_each_in_orbit(mu, |nu| f(&mut acc, nu, *m)).expect("dominant");
            acc
        })
        .reduce(init, merge)
}

fn merge_maps<K: std::hash::Hash + Eq>(mut a: HashMap<K, i64>, b: HashMap<K, i64>) -> HashMap<K, i64> {
    if a.len() < b.len() {
        return merge_maps(b, a);
    }
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Full restricted character: every weight of `V_lambda` restricted to `H`.
pub fn restrict_character(e: &Embedding, lambda: &Weight, budget: Budget) -> Result<BTreeMap<HWeight, u64>> {
    budget.check(e.g(), lambda)?;
    let ch = e.g().freudenthal(lambda)?;
    let map = fold_weights(
        e.g(),
        &ch,
        HashMap::new,
        |acc: &mut HashMap<HWeight, i64>, nu, m| {
            *acc.entry(e.restrict_unchecked(nu)).or_insert(0) += m as i64;
        },
        merge_maps,
    );
    Ok(map.into_iter().map(|(k, v)| (k, v as u64)).collect())
}

/// `H`-dominant part of the restricted character.
fn restricted_dominant(e: &Embedding, lambda: &Weight) -> Result<HashMap<HWeight, i64>> {
    let ch = e.g().freudenthal(lambda)?;
    Ok(fold_weights(
        e.g(),
        &ch,
        HashMap::new,
        |acc: &mut HashMap<HWeight, i64>, nu, m| {
            let r = e.restrict_unchecked(nu);
            if r.weight.0.iter().all(|&x| x >= 0) {
                *acc.entry(r).or_insert(0) += m as i64;
            }
        },
        merge_maps,
    ))
}

/// Decomposes `res V_lambda` by peeling off irreducible characters of `H` from the top.
pub fn decompose(e: &Embedding, lambda: &Weight, budget: Budget) -> Result<Decomposition> {
    budget.check(e.g(), lambda)?;
    let h = e.h();
    let mut rem = restricted_dominant(e, lambda)?;
    let mut out = Decomposition::new();
    let mut cache: HashMap<Weight, DominantCharacter> = HashMap::new();
    loop {
        rem.retain(|_, v| *v != 0);
        let Some(top) = rem
            .keys()
            .max_by(|a, b| {
                h.height2(&a.weight)
                    .cmp(&h.height2(&b.weight))
                    .then_with(|| a.weight.cmp(&b.weight))
                    .then_with(|| a.charge.cmp(&b.charge))
            })
            .cloned()
        else {
            break;
        };
        let m = rem[&top];
        if m < 0 {
            return Err(Error::Consistency(format!(
                "negative multiplicity {m} at {} while decomposing",
                top.weight
            )));
        }
        if !cache.contains_key(&top.weight) {
            cache.insert(top.weight.clone(), h.freudenthal(&top.weight)?);
        }
        for (w, k) in &cache[&top.weight].weights {
            let key = HWeight {
                weight: w.clone(),
                charge: top.charge,
            };
            *rem.entry(key).or_insert(0) -= m * *k as i64;
        }
        out.insert(top, m as u64);
    }
    Ok(out)
}

/// Multiplicity of one irreducible of `H` in `res V_lambda`, by the signed Weyl-group sum
/// `sum_mu m(mu) sign(w)` over restricted weights with `w(mu + rho_H) - rho_H = target`.
pub fn multiplicity_of(e: &Embedding, lambda: &Weight, target: &HWeight, budget: Budget) -> Result<u64> {
    budget.check(e.g(), lambda)?;
    e.h().check_dominant(&target.weight)?;
    let ch = e.g().freudenthal(lambda)?;
    let h = e.h();
    let total: i128 = fold_weights(
        e.g(),
        &ch,
        || 0i128,
        |acc: &mut i128, nu, m| {
            let r = e.restrict_unchecked(nu);
            if r.charge != target.charge {
                return;
            }
            if let Shifted::Regular { weight, sign } = h.dominant_conjugate_shifted(&r.weight) {
                if weight == target.weight {
                    *acc += sign as i128 * m as i128;
                }
            }
        },
        |a, b| a + b,
    );
    if total < 0 {
        return Err(Error::Consistency(format!("signed multiplicity sum is {total}")));
    }
    total
        .to_u64()
        .ok_or_else(|| Error::Consistency("multiplicity overflow".into()))
}

/// True when every irreducible of `H` occurs at most once in `res V_lambda`.
pub fn is_multiplicity_free(e: &Embedding, lambda: &Weight, budget: Budget) -> Result<bool> {
    Ok(decompose(e, lambda, budget)?.values().all(|&m| m <= 1))
}
