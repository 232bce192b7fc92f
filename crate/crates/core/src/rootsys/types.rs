use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Cartan-Killing family of a simple factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// One factor of a reductive type: a simple type or a one-dimensional central torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Factor {
    Simple(Family, usize),
    Torus,
}

impl Factor {
    pub fn rank(self) -> usize {
        match self {
            Factor::Simple(_, n) => n,
            Factor::Torus => 0,
        }
    }

    fn validate(self) -> bool {
        match self {
            Factor::Torus => true,
            Factor::Simple(f, n) => match f {
                Family::A => n >= 1,
                Family::B | Family::C => n >= 2,
                Family::D => n >= 4,
                Family::E => (6..=8).contains(&n),
                Family::F => n == 4,
                Family::G => n == 2,
            },
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Simple(fam, n) => write!(f, "{}{}", fam.letter(), n),
            Factor::Torus => write!(f, "T1"),
        }
    }
}

/// An ordered product of simple factors and central tori, e.g. `A5xA1` or `D5xT1`.
///
/// `C2` is normalised to `B2` on parsing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeSpec {
    factors: Vec<Factor>,
}

impl TypeSpec {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidType(String::new()));
        }
        let mut out = Vec::with_capacity(factors.len());
        for f in factors {
            if !f.validate() {
                return Err(Error::InvalidType(f.to_string()));
            }
            out.push(match f {
                Factor::Simple(Family::C, 2) => Factor::Simple(Family::B, 2),
                other => other,
            });
        }
        Ok(TypeSpec { factors: out })
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        TypeSpec::new(vec![Factor::Simple(family, rank)])
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Rank of the semisimple part.
    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank()).sum()
    }

    pub fn n_tori(&self) -> usize {
        self.factors.iter().filter(|f| matches!(f, Factor::Torus)).count()
    }

    pub fn simple_factors(&self) -> impl Iterator<Item = (Family, usize)> + '_ {
        self.factors.iter().filter_map(|f| match f {
            Factor::Simple(fam, n) => Some((*fam, *n)),
            Factor::Torus => None,
        })
    }

    /// True when both specs have the same multiset of factors.
    pub fn same_factors(&self, other: &TypeSpec) -> bool {
        let mut a = self.factors.clone();
        let mut b = other.factors.clone();
        a.sort();
        b.sort();
        a == b
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1 && !matches!(self.factors[0], Factor::Torus)
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "x")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl FromStr for TypeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidType(s.to_string());
        let cleaned = s.trim().replace('×', "x");
        if cleaned.is_empty() {
            return Err(bad());
        }
        let mut factors = Vec::new();
        for part in cleaned.split(['x', 'X', '*']) {
            let part = part.trim();
            let mut chars = part.chars();
            let letter = chars.next().ok_or_else(bad)?;
            let digits: String = chars.collect();
            let n: usize = digits.parse().map_err(|_| bad())?;
            if letter == 'T' || letter == 't' {
                if n != 1 {
                    return Err(bad());
                }
                factors.push(Factor::Torus);
                continue;
            }
            let fam = Family::from_letter(letter).ok_or_else(bad)?;
            factors.push(Factor::Simple(fam, n));
        }
        TypeSpec::new(factors).map_err(|_| bad())
    }
}

impl Serialize for TypeSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TypeSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Cartan matrix with `C[i][j] = <alpha_i^vee, alpha_j>` in Bourbaki numbering.
pub fn cartan_matrix(family: Family, n: usize) -> Vec<Vec<i32>> {
    let mut c = vec![vec![0i32; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, cij: i32, cji: i32| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    match family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => {
            link(0, 1, -3, -1);
        }
    }
    c
}

/// Symmetrizer `d_i = (alpha_i, alpha_i)/2`, short roots having `d = 1`.
pub fn symmetrizer(family: Family, n: usize) -> Vec<i32> {
    match family {
        Family::A | Family::D | Family::E => vec![1; n],
        Family::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            d
        }
        Family::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            d
        }
        Family::F => vec![2, 2, 1, 1],
        Family::G => vec![1, 3],
    }
}

/// Order of the Weyl group of a simple type.
pub fn weyl_group_order(family: Family, n: usize) -> BigUint {
    let fact = |m: usize| (1..=m).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k));
    match family {
        Family::A => fact(n + 1),
        Family::B | Family::C => fact(n) << n,
        Family::D => fact(n) << (n - 1),
        Family::E => BigUint::from(match n {
            6 => 51_840u64,
            7 => 2_903_040,
            _ => 696_729_600,
        }),
        Family::F => BigUint::from(1152u32),
        Family::G => BigUint::from(12u32),
    }
}

/// Number of positive roots of a simple type.
pub fn positive_root_count(family: Family, n: usize) -> usize {
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let t: TypeSpec = "A5xA1".parse().unwrap();
        assert_eq!(t.to_string(), "A5xA1");
        assert_eq!(t.semisimple_rank(), 6);
        let t: TypeSpec = "D5xT1".parse().unwrap();
        assert_eq!(t.n_tori(), 1);
        assert_eq!(t.semisimple_rank(), 5);
        assert_eq!("C2".parse::<TypeSpec>().unwrap().to_string(), "B2");
        for bad in ["", "E9", "G3", "D3", "Q2", "T2", "A0", "E", "A1x"] {
            assert!(bad.parse::<TypeSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn symmetrizer_symmetrizes() {
        for (fam, n) in [
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 4),
            (Family::D, 5),
            (Family::E, 8),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let c = cartan_matrix(fam, n);
            let d = symmetrizer(fam, n);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(d[i] * c[i][j], d[j] * c[j][i], "{fam:?}{n} {i} {j}");
                }
            }
        }
    }
}
