use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::{Error, Result};

pub type Coords = SmallVec<[i32; 8]>;

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Coords);

/// An element of the root lattice in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Coords);

impl Weight {
    pub fn from_slice(v: &[i32]) -> Self {
        Weight(SmallVec::from_slice(v))
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl RootVector {
    pub fn from_slice(v: &[i32]) -> Self {
        RootVector(SmallVec::from_slice(v))
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v: Coords = SmallVec::from_elem(0, n);
        v[i] = 1;
        RootVector(v)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> RootVector {
        RootVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn add(&self, o: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.iter().any(|&x| x > 0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[i32]) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in v.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Formats a weight as a sum of fundamental weights, e.g. `3w1+w2`; the zero weight is `0`.
pub fn format_weight(w: &Weight, letter: char) -> String {
    let mut out = String::new();
    for (i, &c) in w.0.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push(letter);
        out.push_str(&(i + 1).to_string());
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses `3w1+w2`, `2l3-l1`, `0` or a coordinate tuple `(1,0,2)` into a weight of the given rank.
///
/// Either `w` or `l` may name the fundamental weights.
pub fn parse_weight(s: &str, rank: usize) -> Result<Weight> {
    let bad = |m: &str| Error::InvalidWeight(format!("`{s}`: {m}"));
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(bad("empty"));
    }
    if let Some(inner) = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
        let v: Vec<i32> = inner
            .split(',')
            .map(|x| x.parse::<i32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("bad coordinate"))?;
        if v.len() != rank {
            return Err(bad(&format!("expected {rank} coordinates")));
        }
        return Ok(Weight::from_slice(&v));
    }
    let mut w: Coords = SmallVec::from_elem(0, rank);
    if t == "0" {
        return Ok(Weight(w));
    }
    let bytes: Vec<char> = t.chars().collect();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = 1;
        if bytes[pos] == '+' || bytes[pos] == '-' {
            if bytes[pos] == '-' {
                sign = -1;
            }
            pos += 1;
        } else if pos > 0 {
            return Err(bad("expected + or -"));
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coeff: i32 = if pos > start {
            bytes[start..pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| bad("coefficient"))?
        } else {
            1
        };
        if pos < bytes.len() && bytes[pos] == '*' {
            pos += 1;
        }
        if pos >= bytes.len() || !matches!(bytes[pos], 'w' | 'l' | 'W' | 'L' | 'ω' | 'λ') {
            return Err(bad("expected w<i> or l<i>"));
        }
        pos += 1;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let idx: usize = bytes[start..pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| bad("index"))?;
        if idx == 0 || idx > rank {
            return Err(bad(&format!("index {idx} out of range 1..={rank}")));
        }
        w[idx - 1] += sign * coeff;
    }
    Ok(Weight(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let w = parse_weight("3w1+w2", 2).unwrap();
        assert_eq!(w, Weight::from_slice(&[3, 1]));
        assert_eq!(format_weight(&w, 'w'), "3w1+w2");
        let w = parse_weight("2l3 - l1", 4).unwrap();
        assert_eq!(format_weight(&w, 'l'), "-l1+2l3");
        assert_eq!(parse_weight("0", 3).unwrap(), Weight::from_slice(&[0, 0, 0]));
        assert_eq!(parse_weight("(1,0,2)", 3).unwrap(), Weight::from_slice(&[1, 0, 2]));
        for bad in ["", "w0", "w5", "3x1", "(1,2)", "w1w2"] {
            assert!(parse_weight(bad, 4).is_err(), "{bad}");
        }
    }
}
