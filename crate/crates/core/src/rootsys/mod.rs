//! Root systems, weights and Weyl group combinatorics for reductive types.
//!
//! Conventions: Bourbaki numbering, Cartan entries `C[i][j] = <alpha_i^vee, alpha_j>`,
//! weights in fundamental-weight coordinates, roots in simple-root coordinates.
//! Central tori carry no roots; their characters are tracked separately as charges.

mod dynkin;
mod freudenthal;
mod types;
mod weight;
mod weyl;

use std::collections::HashMap;
use std::ops::Range;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};
use smallvec::SmallVec;

pub use dynkin::{identify_cartan, Component};
pub use freudenthal::DominantCharacter;
pub use types::{cartan_matrix, positive_root_count, symmetrizer, weyl_group_order, Factor, Family, TypeSpec};
pub use weight::{format_weight, parse_weight, Coords, RootVector, Weight};
pub use weyl::Shifted;

use crate::{Error, Result};

/// A root system of a (possibly non-simple) reductive type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: TypeSpec,
    cartan: Vec<Vec<i32>>,
    sym: Vec<i32>,
    blocks: Vec<(Family, usize, Range<usize>)>,
    positive: Vec<RootVector>,
    lookup: HashMap<RootVector, usize>,
    root_weights: Vec<Weight>,
    root_norms: Vec<i32>,
    highest: Vec<RootVector>,
    height2_coeffs: Vec<i64>,
    form: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(spec: &TypeSpec) -> Self {
        let rank = spec.semisimple_rank();
        let mut cartan = vec![vec![0i32; rank]; rank];
        let mut sym = vec![0i32; rank];
        let mut blocks = Vec::new();
        let mut off = 0;
        for (fam, n) in spec.simple_factors() {
            let c = cartan_matrix(fam, n);
            let d = symmetrizer(fam, n);
            for i in 0..n {
                sym[off + i] = d[i];
                for j in 0..n {
                    cartan[off + i][off + j] = c[i][j];
                }
            }
            blocks.push((fam, n, off..off + n));
            off += n;
        }
        let mut rs = RootSystem {
            spec: spec.clone(),
            cartan,
            sym,
            blocks,
            positive: Vec::new(),
            lookup: HashMap::new(),
            root_weights: Vec::new(),
            root_norms: Vec::new(),
            highest: Vec::new(),
            height2_coeffs: Vec::new(),
            form: Vec::new(),
        };
        rs.generate_roots();
        rs.build_form();
        rs
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(RootSystem::new(&s.parse()?))
    }

    /// Positive roots by the string algorithm: `alpha + alpha_i` is a root iff `q > 0`
    /// where `q = p - <alpha, alpha_i^vee>` and `p` is the length of the downward string.
    fn generate_roots(&mut self) {
        let n = self.rank();
        let mut all: Vec<RootVector> = Vec::new();
        let mut seen: HashMap<RootVector, ()> = HashMap::new();
        let mut layer: Vec<RootVector> = (0..n).map(|i| RootVector::unit(n, i)).collect();
        for r in &layer {
            seen.insert(r.clone(), ());
        }
        while !layer.is_empty() {
            let mut next = Vec::new();
            for a in &layer {
                for i in 0..n {
                    let mut p = 0;
                    let mut down = a.clone();
                    loop {
                        down.0[i] -= 1;
                        if seen.contains_key(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pair: i32 = (0..n).map(|j| a.0[j] * self.cartan[i][j]).sum();
                    if p - pair > 0 {
                        let mut up = a.clone();
                        up.0[i] += 1;
                        if !seen.contains_key(&up) {
                            seen.insert(up.clone(), ());
                            next.push(up);
                        }
                    }
                }
            }
            all.append(&mut layer);
            layer = next;
        }
        all.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
        self.lookup = all.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        self.root_weights = all.iter().map(|r| self.weight_of_root(r)).collect();
        self.root_norms = all.iter().map(|r| self.norm_of(r)).collect();
        self.highest = self
            .blocks
            .iter()
            .map(|(_, _, range)| {
                all.iter()
                    .filter(|r| range.clone().any(|i| r.0[i] != 0))
                    .max_by_key(|r| r.height())
                    .cloned()
                    .expect("simple factor has roots")
            })
            .collect();
        let mut h2 = vec![0i64; n];
        for (r, &d) in all.iter().zip(&self.root_norms) {
            for i in 0..n {
                h2[i] += (r.0[i] * self.sym[i] / d) as i64;
            }
        }
        self.height2_coeffs = h2;
        self.positive = all;
    }

    /// Scaled Gram matrix of the fundamental weights, `M = diag(d) C^{-1}` times a common denominator.
    fn build_form(&mut self) {
        let n = self.rank();
        if n == 0 {
            return;
        }
        let mut a: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                let mut row: Vec<Ratio<i64>> = (0..n).map(|j| Ratio::from_integer(self.cartan[i][j] as i64)).collect();
                row.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .expect("Cartan matrix invertible");
            a.swap(col, piv);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col];
                    for c in 0..2 * n {
                        let v = a[col][c];
                        a[r][c] -= f * v;
                    }
                }
            }
        }
        let m: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| (0..n).map(|j| a[i][n + j] * self.sym[i] as i64).collect())
            .collect();
        let den = m.iter().flatten().fold(1i64, |l, x| num_integer::lcm(l, *x.denom()));
        self.form = m
            .iter()
            .map(|row| row.iter().map(|x| (x * den).to_integer()).collect())
            .collect();
    }

    pub fn spec(&self) -> &TypeSpec {
        &self.spec
    }

    /// Semisimple rank.
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn n_tori(&self) -> usize {
        self.spec.n_tori()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i32] {
        &self.sym
    }

    /// Simple factors with their node ranges.
    pub fn blocks(&self) -> &[(Family, usize, Range<usize>)] {
        &self.blocks
    }

    /// Positive roots ordered by height.
    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive
    }

    pub fn n_positive(&self) -> usize {
        self.positive.len()
    }

    /// Index of a positive root.
    pub fn root_index(&self, r: &RootVector) -> Option<usize> {
        self.lookup.get(r).copied()
    }

    pub fn is_root(&self, r: &RootVector) -> bool {
        self.lookup.contains_key(r) || self.lookup.contains_key(&r.neg())
    }

    /// Highest root of each simple factor.
    pub fn highest_roots(&self) -> &[RootVector] {
        &self.highest
    }

    /// Positive root `k` in fundamental-weight coordinates.
    pub fn root_weight(&self, k: usize) -> &Weight {
        &self.root_weights[k]
    }

    /// `(alpha, alpha)/2` for positive root `k`.
    pub fn root_norm(&self, k: usize) -> i32 {
        self.root_norms[k]
    }

    /// `(alpha, alpha)/2` for any element of the root lattice.
    pub fn norm_of(&self, r: &RootVector) -> i32 {
        self.root_inner2(r, r) / 2
    }

    /// `(alpha, beta)` with short simple roots normalised to length squared 2.
    pub fn root_inner2(&self, a: &RootVector, b: &RootVector) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a.0[i] * b.0[j] * self.sym[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// `<alpha, beta^vee>` for roots given in simple-root coordinates.
    pub fn pair_roots(&self, a: &RootVector, b: &RootVector) -> i32 {
        2 * self.root_inner2(a, b) / self.root_inner2(b, b)
    }

    /// Coefficients of `alpha^vee` in the basis of simple coroots.
    pub fn coroot_coeffs(&self, r: &RootVector) -> Vec<i32> {
        let d = self.norm_of(r);
        (0..self.rank()).map(|i| r.0[i] * self.sym[i] / d).collect()
    }

    /// A root-lattice element in fundamental-weight coordinates.
    pub fn weight_of_root(&self, r: &RootVector) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|j| (0..n).map(|i| r.0[i] * self.cartan[j][i]).sum())
                .collect(),
        )
    }

    /// `<lambda, alpha_k^vee>` for positive root `k`.
    pub fn pair_weight(&self, w: &Weight, k: usize) -> i64 {
        let r = &self.positive[k];
        let d = self.root_norms[k] as i64;
        let s: i64 = (0..self.rank())
            .map(|i| r.0[i] as i64 * self.sym[i] as i64 * w.0[i] as i64)
            .sum();
        s / d
    }

    /// Scaled inner product of two weights; the scale is fixed per root system.
    pub fn inner_scaled(&self, a: &Weight, b: &Weight) -> i64 {
        let n = self.rank();
        let mut s = 0i64;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            let ai = a.0[i] as i64;
            for j in 0..n {
                s += ai * self.form[i][j] * b.0[j] as i64;
            }
        }
        s
    }

    /// `2 <lambda, rho^vee>`; strictly decreases along `lambda - alpha` for positive `alpha`.
    pub fn height2(&self, w: &Weight) -> i64 {
        w.0.iter().zip(&self.height2_coeffs).map(|(a, c)| *a as i64 * c).sum()
    }

    pub fn rho(&self) -> Weight {
        Weight(SmallVec::from_elem(1, self.rank()))
    }

    pub fn zero_weight(&self) -> Weight {
        Weight(SmallVec::from_elem(0, self.rank()))
    }

    pub fn fundamental(&self, i: usize) -> Result<Weight> {
        self.check_node(i)?;
        let mut w = self.zero_weight();
        w.0[i - 1] = 1;
        Ok(w)
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.0.iter().all(|&x| x >= 0)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.0.len() != self.rank() {
            return Err(Error::InvalidWeight(format!(
                "{w} has {} coordinates, expected {}",
                w.0.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if !self.is_dominant(w) {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(())
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::NodeOutOfRange {
                node: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// `dim G/P_i`: number of positive roots with nonzero `alpha_i`-coefficient (1-based node).
    pub fn flag_dimension(&self, i: usize) -> Result<usize> {
        self.check_node(i)?;
        Ok(self.positive.iter().filter(|r| r.0[i - 1] != 0).count())
    }

    /// Dimension of a Borel subgroup, central tori included.
    pub fn borel_dimension(&self) -> usize {
        self.positive.len() + self.rank() + self.n_tori()
    }

    /// Dimension of the Lie algebra, central tori included.
    pub fn algebra_dimension(&self) -> usize {
        2 * self.positive.len() + self.rank() + self.n_tori()
    }

    pub fn weyl_order(&self) -> BigUint {
        self.blocks
            .iter()
            .fold(BigUint::one(), |acc, (f, n, _)| acc * weyl_group_order(*f, *n))
    }

    /// Weyl dimension formula for a dominant weight.
    pub fn weyl_dimension(&self, w: &Weight) -> Result<BigUint> {
        self.check_dominant(w)?;
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        let rho = self.rho();
        for k in 0..self.positive.len() {
            let p = self.pair_weight(&rho, k);
            num *= BigUint::from((self.pair_weight(w, k) + p) as u64);
            den *= BigUint::from(p as u64);
        }
        Ok(num / den)
    }

    /// Fundamental-weight coordinates of `-w0(lambda)`.
    pub fn dual_weight(&self, w: &Weight) -> Weight {
        let neg = Weight(w.0.iter().map(|x| -x).collect());
        self.dominant_conjugate(&neg).0
    }

    /// Node `j` with `omega_j = -w0(omega_i)` (1-based).
    pub fn dual_node(&self, i: usize) -> Result<usize> {
        let d = self.dual_weight(&self.fundamental(i)?);
        Ok(d.0.iter().position(|&x| x == 1).expect("dual of a fundamental weight") + 1)
    }
}

#[cfg(test)]
mod tests;
