use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::One;

use super::{identify_cartan, weyl_group_order, RootSystem, Weight};
use crate::Result;

/// Outcome of moving `mu + rho` into the dominant chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shifted {
    /// `mu + rho` lies on a wall; the term vanishes.
    Singular,
    /// `w(mu + rho) - rho` together with `sign(w)`.
    Regular { weight: Weight, sign: i32 },
}

impl RootSystem {
    /// `s_i(mu)` for a 0-based node.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let mi = w.0[i];
        let mut out = w.clone();
        if mi != 0 {
            for j in 0..self.rank() {
                out.0[j] -= mi * self.cartan[j][i];
            }
        }
        out
    }

    fn reflect_in_place(&self, w: &mut Weight, i: usize) {
        let mi = w.0[i];
        if mi != 0 {
            for j in 0..self.rank() {
                w.0[j] -= mi * self.cartan[j][i];
            }
        }
    }

    /// Dominant element of the Weyl orbit of `mu`, with the length of the word used.
    pub fn dominant_conjugate(&self, w: &Weight) -> (Weight, usize) {
        let mut out = w.clone();
        let mut len = 0;
        while let Some(i) = out.0.iter().position(|&x| x < 0) {
            self.reflect_in_place(&mut out, i);
            len += 1;
        }
        (out, len)
    }

    /// Dot-action conjugation used by Brauer-Klimyk style sums.
    pub fn dominant_conjugate_shifted(&self, w: &Weight) -> Shifted {
        let mut v = w.clone();
        for x in v.0.iter_mut() {
            *x += 1;
        }
        let mut len = 0usize;
        loop {
            if v.0.contains(&0) {
                return Shifted::Singular;
            }
            match v.0.iter().position(|&x| x < 0) {
                Some(i) => {
                    self.reflect_in_place(&mut v, i);
                    len += 1;
                }
                None => break,
            }
        }
        for x in v.0.iter_mut() {
            *x -= 1;
        }
        Shifted::Regular {
            weight: v,
            sign: if len.is_multiple_of(2) { 1 } else { -1 },
        }
    }

    /// Calls `f` on every element of the Weyl orbit of a dominant weight, each exactly once.
    ///
    /// Walks the tree whose parent map sends `nu` to `s_j nu` for the least `j` with `nu_j < 0`;
    /// no visited set is needed.
    pub fn for_each_in_orbit<F: FnMut(&Weight)>(&self, lambda: &Weight, mut f: F) -> Result<()> {
        self.check_dominant(lambda)?;
        let n = self.rank();
        let mut stack = vec![lambda.clone()];
        while let Some(mu) = stack.pop() {
            f(&mu);
            for i in 0..n {
                let mi = mu.0[i];
                if mi <= 0 {
                    continue;
                }
                let mut ok = true;
                for j in 0..i {
                    if mu.0[j] - mi * self.cartan[j][i] < 0 {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    stack.push(self.reflect(&mu, i));
                }
            }
        }
        Ok(())
    }

    pub fn weyl_orbit(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        let mut out = Vec::new();
        self.for_each_in_orbit(lambda, |w| out.push(w.clone()))?;
        Ok(out)
    }

    /// `|W lambda| = |W| / |W_J|` with `J` the nodes where `lambda` vanishes.
    pub fn orbit_size(&self, lambda: &Weight) -> Result<BigUint> {
        self.check_dominant(lambda)?;
        let j: Vec<usize> = (0..self.rank()).filter(|&i| lambda.0[i] == 0).collect();
        let sub: Vec<Vec<i32>> = j
            .iter()
            .map(|&a| j.iter().map(|&b| self.cartan[a][b]).collect())
            .collect();
        let mut stab = BigUint::one();
        for comp in identify_cartan(&sub)? {
            stab *= weyl_group_order(comp.family, comp.rank);
        }
        Ok(self.weyl_order() / stab)
    }

    /// Dominant weights of the irreducible module of highest weight `lambda`,
    /// ordered by decreasing height and then lexicographically.
    pub fn dominant_weights(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        self.check_dominant(lambda)?;
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            for rw in &self.root_weights {
                let nu = mu.sub(rw);
                if self.is_dominant(&nu) && !seen.contains(&nu) {
                    seen.insert(nu.clone());
                    queue.push_back(nu);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort_by(|a, b| self.height2(b).cmp(&self.height2(a)).then_with(|| b.cmp(a)));
        Ok(out)
    }
}
