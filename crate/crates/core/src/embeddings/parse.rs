use std::fmt::Write as _;

use crate::rootsys::{RootVector, TypeSpec};
use crate::{Error, Result};

use super::EmbeddingKind;

/// How one simple root of `H` is realised inside `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ImageSpec {
    /// A root of `G`; `X_i = X_beta`, `Y_i = X_{-beta}`.
    Root(RootVector),
    /// `X_i = sum c X_gamma`, `Y_i = sum c^{-1} X_{-gamma}`.
    Chevalley(Vec<(i64, RootVector)>),
    /// The `sl2` commuting with the other simple roots.
    Centralizer,
}

/// Parsed contents of one `embed` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingData {
    pub g: TypeSpec,
    pub h: TypeSpec,
    pub kind: EmbeddingKind,
    pub images: Vec<ImageSpec>,
    pub coweight: Option<Vec<i64>>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_vec(s: &str, line: usize, len: usize) -> Result<Vec<i32>> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| perr(line, format!("expected (..) vector, got `{s}`")))?;
    let v: Vec<i32> = inner
        .split(',')
        .map(|x| x.trim().parse::<i32>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| perr(line, format!("bad vector `{s}`")))?;
    if v.len() != len {
        return Err(perr(
            line,
            format!("vector `{s}` has {} entries, expected {len}", v.len()),
        ));
    }
    Ok(v)
}

fn parse_chev(s: &str, line: usize, len: usize) -> Result<Vec<(i64, RootVector)>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let open = rest.find('(').ok_or_else(|| perr(line, "expected (..) term"))?;
        let close = rest.find(')').ok_or_else(|| perr(line, "unclosed ("))?;
        let coeff_str: String = rest[..open].chars().filter(|c| !c.is_whitespace()).collect();
        let coeff: i64 = match coeff_str.as_str() {
            "" | "+" => 1,
            "-" => -1,
            c => c
                .trim_end_matches('*')
                .parse()
                .map_err(|_| perr(line, format!("bad coefficient `{c}`")))?,
        };
        if coeff == 0 {
            return Err(perr(line, "zero coefficient"));
        }
        let v = parse_vec(&rest[open..=close], line, len)?;
        out.push((coeff, RootVector::from_slice(&v)));
        rest = rest[close + 1..].trim();
    }
    if out.is_empty() {
        return Err(perr(line, "empty generator"));
    }
    Ok(out)
}

struct Block {
    header_line: usize,
    g: TypeSpec,
    h: TypeSpec,
    kind: EmbeddingKind,
    images: Vec<Option<ImageSpec>>,
    coweight: Option<Vec<i64>>,
}

impl Block {
    fn finish(self) -> Result<EmbeddingData> {
        let line = self.header_line;
        let images: Vec<ImageSpec> = self
            .images
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| perr(line, format!("missing image for node {}", i + 1))))
            .collect::<Result<_>>()?;
        for im in &images {
            let ok = match (self.kind, im) {
                (EmbeddingKind::Subsystem | EmbeddingKind::Levi, ImageSpec::Root(_)) => true,
                (EmbeddingKind::Folded, ImageSpec::Chevalley(_)) => true,
                (EmbeddingKind::Derived, ImageSpec::Chevalley(_) | ImageSpec::Centralizer) => true,
                _ => false,
            };
            if !ok {
                return Err(perr(line, format!("directive not allowed for kind {}", self.kind)));
            }
        }
        match (self.h.n_tori(), &self.coweight) {
            (0, None) | (1, Some(_)) => {}
            (0, Some(_)) => return Err(perr(line, "coweight given but H has no torus")),
            (1, None) => return Err(perr(line, "H has a torus but no coweight")),
            _ => return Err(perr(line, "at most one central torus is supported")),
        }
        Ok(EmbeddingData {
            g: self.g,
            h: self.h,
            kind: self.kind,
            images,
            coweight: self.coweight,
        })
    }
}

/// Parses a file of `embed` blocks.
pub fn parse_embeddings(text: &str) -> Result<Vec<EmbeddingData>> {
    let mut out = Vec::new();
    let mut cur: Option<Block> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        let (head, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        if head == "embed" {
            if let Some(b) = cur.take() {
                out.push(b.finish()?);
            }
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 4 || parts[1] != "in" {
                return Err(perr(line, "expected `embed <H> in <G> kind=<kind>`"));
            }
            let h: TypeSpec = parts[0].parse().map_err(|e: Error| perr(line, e.to_string()))?;
            let g: TypeSpec = parts[2].parse().map_err(|e: Error| perr(line, e.to_string()))?;
            let kind = parts[3]
                .strip_prefix("kind=")
                .ok_or_else(|| perr(line, "expected kind=<kind>"))?
                .parse::<EmbeddingKind>()
                .map_err(|e| perr(line, e.to_string()))?;
            cur = Some(Block {
                header_line: line,
                images: vec![None; h.semisimple_rank()],
                g,
                h,
                kind,
                coweight: None,
            });
            continue;
        }
        let b = cur
            .as_mut()
            .ok_or_else(|| perr(line, "directive before `embed` header"))?;
        let g_rank = b.g.semisimple_rank();
        let node = |s: &str| -> Result<usize> {
            let i: usize = s.trim().parse().map_err(|_| perr(line, format!("bad node `{s}`")))?;
            if i == 0 || i > b.images.len() {
                return Err(perr(line, format!("node {i} out of range")));
            }
            Ok(i - 1)
        };
        match head {
            "root" | "chev" => {
                let (n, v) = rest.split_once('=').ok_or_else(|| perr(line, "expected `=`"))?;
                let i = node(n)?;
                let im = if head == "root" {
                    ImageSpec::Root(RootVector::from_slice(&parse_vec(v, line, g_rank)?))
                } else {
                    ImageSpec::Chevalley(parse_chev(v, line, g_rank)?)
                };
                if b.images[i].replace(im).is_some() {
                    return Err(perr(line, format!("node {} given twice", i + 1)));
                }
            }
            "centralizer" => {
                let i = node(rest)?;
                if b.images[i].replace(ImageSpec::Centralizer).is_some() {
                    return Err(perr(line, format!("node {} given twice", i + 1)));
                }
            }
            "coweight" => {
                let v = rest.strip_prefix('=').ok_or_else(|| perr(line, "expected `=`"))?;
                if b.coweight.is_some() {
                    return Err(perr(line, "coweight given twice"));
                }
                b.coweight = Some(parse_vec(v, line, g_rank)?.into_iter().map(i64::from).collect());
            }
            other => return Err(perr(line, format!("unknown directive `{other}`"))),
        }
    }
    if let Some(b) = cur.take() {
        out.push(b.finish()?);
    }
    Ok(out)
}

fn fmt_vec(v: &[i32]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Serialises blocks back into the text format.
pub fn format_embeddings(data: &[EmbeddingData]) -> String {
    let mut s = String::new();
    for d in data {
        let _ = writeln!(s, "embed {} in {} kind={}", d.h, d.g, d.kind);
        for (i, im) in d.images.iter().enumerate() {
            match im {
                ImageSpec::Root(r) => {
                    let _ = writeln!(s, "root {} = {}", i + 1, fmt_vec(&r.0));
                }
                ImageSpec::Chevalley(terms) => {
                    let body: Vec<String> = terms
                        .iter()
                        .map(|(c, r)| match c {
                            1 => format!("+{}", fmt_vec(&r.0)),
                            -1 => format!("-{}", fmt_vec(&r.0)),
                            c if *c > 0 => format!("+{c}{}", fmt_vec(&r.0)),
                            c => format!("{c}{}", fmt_vec(&r.0)),
                        })
                        .collect();
                    let _ = writeln!(s, "chev {} = {}", i + 1, body.join(" "));
                }
                ImageSpec::Centralizer => {
                    let _ = writeln!(s, "centralizer {}", i + 1);
                }
            }
        }
        if let Some(c) = &d.coweight {
            let v: Vec<i32> = c.iter().map(|&x| x as i32).collect();
            let _ = writeln!(s, "coweight = {}", fmt_vec(&v));
        }
        s.push('\n');
    }
    s
}
