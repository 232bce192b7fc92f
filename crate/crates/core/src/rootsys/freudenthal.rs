use std::collections::HashMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{RootSystem, Weight};
use crate::{Error, Result};

/// Dominant weights of an irreducible module with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominantCharacter {
    pub highest: Weight,
    /// Ordered by decreasing height, then lexicographically decreasing.
    pub weights: Vec<(Weight, u64)>,
}

impl DominantCharacter {
    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.weights.iter().find(|(x, _)| x == w).map_or(0, |(_, m)| *m)
    }

    /// `sum m(mu) |W mu|`.
    pub fn dimension(&self, rs: &RootSystem) -> Result<BigUint> {
        let mut total = BigUint::default();
        for (w, m) in &self.weights {
            total += rs.orbit_size(w)? * BigUint::from(*m);
        }
        Ok(total)
    }
}

impl RootSystem {
    /// Freudenthal's recursion on dominant weights, in exact integer arithmetic.
    pub fn freudenthal(&self, lambda: &Weight) -> Result<DominantCharacter> {
        let dom = self.dominant_weights(lambda)?;
        let rho = self.rho();
        let lr = lambda.add(&rho);
        let top = self.inner_scaled(&lr, &lr) as i128;
        let mut mult: HashMap<Weight, u64> = HashMap::with_capacity(dom.len());
        mult.insert(lambda.clone(), 1);
        let mut out = vec![(lambda.clone(), 1u64)];
        for mu in dom.iter().skip(1) {
            let mut num: i128 = 0;
            for rw in &self.root_weights {
                let mut nu = mu.add(rw);
                loop {
                    let (d, _) = self.dominant_conjugate(&nu);
                    let Some(&m) = mult.get(&d) else { break };
                    num += m as i128 * self.inner_scaled(&nu, rw) as i128;
                    nu = nu.add(rw);
                }
            }
            let mr = mu.add(&rho);
            let den = top - self.inner_scaled(&mr, &mr) as i128;
            if den <= 0 || (2 * num) % den != 0 {
                return Err(Error::Consistency(format!("Freudenthal step at {mu} is not integral")));
            }
            let m = (2 * num / den) as u64;
            mult.insert(mu.clone(), m);
            out.push((mu.clone(), m));
        }
        Ok(DominantCharacter {
            highest: lambda.clone(),
            weights: out,
        })
    }
}
