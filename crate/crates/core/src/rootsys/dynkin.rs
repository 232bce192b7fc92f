use super::{cartan_matrix, Family};
use crate::{Error, Result};

/// A connected component of a Cartan matrix identified with a standard type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
    /// Every labelling `l` with `input[l[a]][l[b]] == standard[a][b]`; `l[a]` is an input node.
    pub labelings: Vec<Vec<usize>>,
}

fn candidates(n: usize) -> Vec<Family> {
    let mut out = vec![Family::A];
    if n >= 2 {
        out.push(Family::B);
    }
    if n >= 3 {
        out.push(Family::C);
    }
    if n >= 4 {
        out.push(Family::D);
    }
    if (6..=8).contains(&n) {
        out.push(Family::E);
    }
    if n == 4 {
        out.push(Family::F);
    }
    if n == 2 {
        out.push(Family::G);
    }
    out
}

fn search(
    input: &[Vec<i32>],
    nodes: &[usize],
    std: &[Vec<i32>],
    partial: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let a = partial.len();
    if a == std.len() {
        out.push(partial.clone());
        return;
    }
    for (k, &cand) in nodes.iter().enumerate() {
        if used[k] {
            continue;
        }
        let ok = (0..a).all(|b| input[cand][partial[b]] == std[a][b] && input[partial[b]][cand] == std[b][a]);
        if ok {
            used[k] = true;
            partial.push(cand);
            search(input, nodes, std, partial, used, out);
            partial.pop();
            used[k] = false;
        }
    }
}

/// Splits a Cartan matrix into connected components and identifies each with a
/// standard Bourbaki-labelled type. Components are ordered by their least node.
pub fn identify_cartan(c: &[Vec<i32>]) -> Result<Vec<Component>> {
    let n = c.len();
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![start];
        comp_of[start] = id;
        let mut k = 0;
        while k < members.len() {
            let a = members[k];
            for b in 0..n {
                if comp_of[b] == usize::MAX && (c[a][b] != 0 || c[b][a] != 0) {
                    comp_of[b] = id;
                    members.push(b);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        comps.push(members);
    }
    let mut out = Vec::new();
    for nodes in comps {
        let r = nodes.len();
        let mut found = None;
        for fam in candidates(r) {
            let std = cartan_matrix(fam, r);
            let mut labelings = Vec::new();
            search(c, &nodes, &std, &mut Vec::new(), &mut vec![false; r], &mut labelings);
            if !labelings.is_empty() {
                found = Some(Component {
                    family: fam,
                    rank: r,
                    labelings,
                });
                break;
            }
        }
        out.push(
            found.ok_or_else(|| {
                Error::InvalidType(format!("Cartan submatrix on nodes {nodes:?} is not of finite type"))
            })?,
        );
    }
    Ok(out)
}
