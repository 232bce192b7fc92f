//! Chevalley bases with integral structure constants and the exact linear algebra built on them.
//!
//! Basis order: positive root vectors (by height), negative root vectors (same order), then `H_i`.
//! Signs follow the extraspecial-pair convention: `N(alpha, beta) = p + 1 > 0` on every
//! extraspecial pair, all other constants forced by the Chevalley relations.

mod element;

use std::collections::HashMap;

use num_rational::Ratio;
use num_traits::Zero;
use smallvec::SmallVec;

pub use element::ChevalleyElement;

use crate::linalg::{self, q, Echelon, Q};
use crate::rootsys::{RootSystem, RootVector};
use crate::{Error, Result};

/// Label of a basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    Root(RootVector),
    Cartan(usize),
}

/// A span of elements together with an echelon basis of its coordinates.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub basis: Vec<ChevalleyElement>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// The split Lie algebra of a semisimple root system in a Chevalley basis.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    np: usize,
    roots: Vec<RootVector>,
    lookup: HashMap<RootVector, usize>,
    sums: Vec<u32>,
    consts: Vec<i8>,
    coroots: Vec<Vec<i32>>,
    pairings: Vec<Vec<i32>>,
    norms2: Vec<i32>,
}

const NONE: u32 = u32::MAX;

impl ChevalleyAlgebra {
    pub fn new(rs: RootSystem) -> Self {
        let np = rs.n_positive();
        let mut roots: Vec<RootVector> = rs.positive_roots().to_vec();
        roots.extend(rs.positive_roots().iter().map(|r| r.neg()));
        let lookup: HashMap<RootVector, usize> = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        let nr = roots.len();
        let mut sums = vec![NONE; nr * nr];
        for a in 0..nr {
            for b in 0..nr {
                if let Some(&s) = lookup.get(&roots[a].add(&roots[b])) {
                    sums[a * nr + b] = s as u32;
                }
            }
        }
        let rank = rs.rank();
        let coroots = roots.iter().map(|r| rs.coroot_coeffs(r)).collect();
        let pairings = roots
            .iter()
            .map(|r| {
                (0..rank)
                    .map(|i| (0..rank).map(|j| r.0[j] * rs.cartan()[i][j]).sum())
                    .collect()
            })
            .collect();
        let norms2 = roots.iter().map(|r| rs.root_inner2(r, r)).collect();
        let mut alg = ChevalleyAlgebra {
            rs,
            np,
            roots,
            lookup,
            sums,
            consts: vec![0; nr * nr],
            coroots,
            pairings,
            norms2,
        };
        for a in 0..nr {
            for b in 0..nr {
                if alg.sums[a * nr + b] != NONE {
                    alg.compute_n(a, b);
                }
            }
        }
        alg
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(ChevalleyAlgebra::new(RootSystem::parse(s)?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.roots.len() + self.rs.rank()
    }

    pub fn n_positive(&self) -> usize {
        self.np
    }

    fn nr(&self) -> usize {
        self.roots.len()
    }

    fn neg(&self, a: usize) -> usize {
        if a < self.np {
            a + self.np
        } else {
            a - self.np
        }
    }

    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let s = self.sums[a * self.nr() + b];
        (s != NONE).then_some(s as usize)
    }

    /// Largest `p` with `beta - p alpha` a root.
    fn string_down(&self, a: usize, b: usize) -> i32 {
        let mut p = 0;
        let mut cur = self.roots[b].clone();
        loop {
            cur = cur.sub(&self.roots[a]);
            if self.lookup.contains_key(&cur) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// Extraspecial pair of a non-simple positive root.
    fn extraspecial(&self, xi: usize) -> (usize, usize) {
        for i in 0..self.rs.rank() {
            let d = self.roots[xi].sub(&self.roots[i]);
            if let Some(&b) = self.lookup.get(&d) {
                if b < self.np {
                    return (i, b);
                }
            }
        }
        unreachable!("non-simple positive root has an extraspecial pair")
    }

    fn compute_n(&mut self, a: usize, b: usize) -> i32 {
        let nr = self.nr();
        let cached = self.consts[a * nr + b];
        if cached != 0 {
            return cached as i32;
        }
        let s = self.sum(a, b).expect("sum is a root");
        let (pa, pb) = (a < self.np, b < self.np);
        let v = if pa && pb {
            let (e1, e2) = self.extraspecial(s);
            if (a, b) == (e1, e2) {
                self.string_down(a, b) + 1
            } else if (b, a) == (e1, e2) || a > b {
                -self.compute_n(b, a)
            } else {
                let (g, d) = (self.neg(e1), self.neg(e2));
                let ngd = self.compute_n(g, d);
                let mut t = Ratio::<i64>::zero();
                if let Some(bg) = self.sum(b, g) {
                    let x = self.compute_n(b, g) as i64 * self.compute_n(a, d) as i64;
                    t += Ratio::new(x, self.norms2[bg] as i64);
                }
                if let Some(ga) = self.sum(g, a) {
                    let x = self.compute_n(g, a) as i64 * self.compute_n(b, d) as i64;
                    t += Ratio::new(x, self.norms2[ga] as i64);
                }
                let r = -t * self.norms2[s] as i64 / ngd as i64;
                assert!(r.is_integer(), "structure constant not integral");
                r.to_integer() as i32
            }
        } else if !pa && !pb {
            let (na, nb) = (self.neg(a), self.neg(b));
            -self.compute_n(na, nb)
        } else {
            let c = self.neg(s);
            if (c < self.np) == pa {
                self.compute_n(c, a) * self.norms2[c] / self.norms2[b]
            } else {
                self.compute_n(b, c) * self.norms2[c] / self.norms2[a]
            }
        };
        debug_assert!(v != 0);
        self.consts[a * nr + b] = v as i8;
        v
    }

    /// `N(alpha, beta)` when `alpha + beta` is a root.
    pub fn structure_constant(&self, a: &RootVector, b: &RootVector) -> Option<i32> {
        let (ia, ib) = (*self.lookup.get(a)?, *self.lookup.get(b)?);
        self.sum(ia, ib).map(|_| self.consts[ia * self.nr() + ib] as i32)
    }

    /// Basis index of the root vector `X_r`.
    pub fn root_index(&self, r: &RootVector) -> Option<usize> {
        self.lookup.get(r).copied()
    }

    pub fn cartan_index(&self, i: usize) -> usize {
        self.nr() + i
    }

    pub fn label(&self, idx: usize) -> BasisLabel {
        if idx < self.nr() {
            BasisLabel::Root(self.roots[idx].clone())
        } else {
            BasisLabel::Cartan(idx - self.nr())
        }
    }

    /// Root of a root-vector basis index.
    pub fn root_of(&self, idx: usize) -> Option<&RootVector> {
        self.roots.get(idx)
    }

    pub fn is_cartan_index(&self, idx: usize) -> bool {
        idx >= self.nr()
    }

    pub fn x(&self, r: &RootVector) -> Result<ChevalleyElement> {
        self.root_index(r)
            .map(ChevalleyElement::basis)
            .ok_or_else(|| Error::InvalidEmbedding(format!("{r} is not a root")))
    }

    /// Simple coroot `H_i` (0-based).
    pub fn h(&self, i: usize) -> ChevalleyElement {
        ChevalleyElement::basis(self.cartan_index(i))
    }

    /// Element `sum c_i H_i`.
    pub fn cartan_element(&self, coeffs: &[i64]) -> ChevalleyElement {
        let mut e = ChevalleyElement::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            e.add_term(self.cartan_index(i), q(c));
        }
        e
    }

    /// Bracket of two basis vectors with integer coefficients.
    pub fn bracket_basis(&self, a: usize, b: usize) -> SmallVec<[(usize, i32); 8]> {
        let nr = self.nr();
        let mut out = SmallVec::new();
        match (a < nr, b < nr) {
            (true, true) => {
                if b == self.neg(a) {
                    for (i, &c) in self.coroots[a].iter().enumerate() {
                        if c != 0 {
                            out.push((nr + i, c));
                        }
                    }
                } else if let Some(s) = self.sum(a, b) {
                    out.push((s, self.consts[a * nr + b] as i32));
                }
            }
            (false, true) => {
                let c = self.pairings[b][a - nr];
                if c != 0 {
                    out.push((b, c));
                }
            }
            (true, false) => {
                let c = self.pairings[a][b - nr];
                if c != 0 {
                    out.push((a, -c));
                }
            }
            (false, false) => {}
        }
        out
    }

    pub fn bracket(&self, x: &ChevalleyElement, y: &ChevalleyElement) -> ChevalleyElement {
        let mut acc: HashMap<usize, Q> = HashMap::new();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                for (k, c) in self.bracket_basis(a, b) {
                    let v = ca * cb * q(c as i64);
                    *acc.entry(k).or_insert_with(Q::zero) += v;
                }
            }
        }
        let mut out = ChevalleyElement::zero();
        for (k, v) in acc {
            out.add_term(k, v);
        }
        out
    }

    pub fn dense(&self, x: &ChevalleyElement) -> Vec<Q> {
        x.to_dense(self.dim())
    }

    /// Rank of a family of elements, exactly or modulo a prime.
    pub fn span_rank(&self, vs: &[ChevalleyElement], modulus: Option<u64>) -> Result<usize> {
        let rows: Vec<Vec<Q>> = vs.iter().map(|v| self.dense(v)).collect();
        match modulus {
            None => Ok(linalg::rank(&rows)),
            Some(p) => linalg::rank_mod_p(&rows, p),
        }
    }

    /// `exp(ad n) v` for nilpotent `ad n`.
    pub fn ad_exp(&self, n: &ChevalleyElement, v: &ChevalleyElement) -> Result<ChevalleyElement> {
        let mut out = v.clone();
        let mut term = v.clone();
        for k in 1..=self.dim() + 1 {
            term = self.bracket(n, &term);
            if term.is_zero() {
                return Ok(out);
            }
            term = term.scale(&Q::new(1.into(), (k as i64).into()));
            out = out.add(&term);
        }
        Err(Error::NotNilpotent(self.dim()))
    }

    /// True when the span of `vs` is closed under the bracket.
    pub fn is_subalgebra(&self, vs: &[ChevalleyElement]) -> bool {
        let mut e = Echelon::new(self.dim());
        for v in vs {
            e.insert(&self.dense(v));
        }
        for (i, x) in vs.iter().enumerate() {
            for y in &vs[i + 1..] {
                if !e.contains(&self.dense(&self.bracket(x, y))) {
                    return false;
                }
            }
        }
        true
    }

    /// Basis of the subalgebra generated by `gens`.
    pub fn generated_subalgebra(&self, gens: &[ChevalleyElement]) -> Subspace {
        let mut e = Echelon::new(self.dim());
        let mut basis: Vec<ChevalleyElement> = Vec::new();
        for g in gens {
            if e.insert(&self.dense(g)) {
                basis.push(g.clone());
            }
        }
        let mut k = 0;
        while k < basis.len() {
            for gi in 0..gens.len() {
                let b = self.bracket(&gens[gi], &basis[k]);
                if !b.is_zero() && e.insert(&self.dense(&b)) {
                    basis.push(b);
                }
            }
            k += 1;
        }
        Subspace { basis }
    }

    /// Centralizer of a subalgebra given by a spanning set.
    pub fn centralizer(&self, sub: &[ChevalleyElement]) -> Result<Subspace> {
        if !self.is_subalgebra(sub) {
            return Err(Error::NotSubalgebra);
        }
        let dim = self.dim();
        let mut rows: Vec<Vec<Q>> = Vec::new();
        let cols: Vec<Vec<Q>> = (0..dim)
            .map(|j| {
                let e = ChevalleyElement::basis(j);
                sub.iter().flat_map(|s| self.dense(&self.bracket(&e, s))).collect()
            })
            .collect();
        let m = cols.first().map_or(0, |c| c.len());
        for r in 0..m {
            let row: Vec<Q> = (0..dim).map(|j| cols[j][r].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
        let basis = linalg::nullspace(&rows, dim)
            .into_iter()
            .map(|v| ChevalleyElement::from_dense(&v))
            .collect();
        Ok(Subspace { basis })
    }
}

#[cfg(test)]
mod tests;
