use crate::rootsys::{identify_cartan, Factor, RootSystem, RootVector, TypeSpec};
use crate::{Error, Result};

use super::{EmbeddingData, EmbeddingKind, ImageSpec};

fn min_support(r: &RootVector) -> usize {
    r.0.iter().position(|&x| x != 0).expect("nonzero root")
}

/// Maximal-rank subsystem obtained by deleting node `node` (1-based) from the extended
/// Dynkin diagram of a simple `G`.
///
/// Its roots are those whose `alpha_node`-coefficient is divisible by the mark of the node.
/// Simple roots are labelled by minimising, per factor, the sequence of
/// (least supporting node of `G`, height); factors are ordered by their least such key.
/// When `expected` has the same factors in another order, that order is used.
pub fn subsystem_data(g: &RootSystem, node: usize, expected: Option<&TypeSpec>) -> Result<EmbeddingData> {
    if !g.spec().is_simple() {
        return Err(Error::InvalidEmbedding(format!("{} is not simple", g.spec())));
    }
    g.check_node(node)?;
    let k = node - 1;
    let mark = g.highest_roots()[0].0[k];
    let pos: Vec<&RootVector> = g.positive_roots().iter().filter(|r| r.0[k] % mark == 0).collect();
    let simple: Vec<RootVector> = pos
        .iter()
        .filter(|r| {
            !pos.iter().any(|a| {
                let d = r.sub(a);
                d.is_positive() && pos.iter().any(|b| **b == d)
            })
        })
        .map(|r| (*r).clone())
        .collect();
    let n = simple.len();
    let cartan: Vec<Vec<i32>> = (0..n)
        .map(|a| (0..n).map(|b| g.pair_roots(&simple[b], &simple[a])).collect())
        .collect();
    let key = |l: &[usize]| -> Vec<(usize, i32)> {
        l.iter()
            .map(|&i| (min_support(&simple[i]), simple[i].height()))
            .collect()
    };
    let mut factors: Vec<(Vec<(usize, i32)>, Factor, Vec<usize>)> = identify_cartan(&cartan)?
        .into_iter()
        .map(|c| {
            let best = c.labelings.iter().min_by_key(|l| key(l)).expect("labelling").clone();
            let mut ks = key(&best);
            ks.sort();
            (ks, Factor::Simple(c.family, c.rank), best)
        })
        .collect();
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    if let Some(exp) = expected {
        let got = TypeSpec::new(factors.iter().map(|f| f.1).collect())?;
        if !got.same_factors(exp) {
            return Err(Error::InvalidEmbedding(format!(
                "removing node {node} of {} gives {got}, not {exp}",
                g.spec()
            )));
        }
        let mut ordered = Vec::new();
        for f in exp.factors() {
            let pos = factors.iter().position(|x| x.1 == *f).expect("same factors");
            ordered.push(factors.remove(pos));
        }
        factors = ordered;
    }
    let h = TypeSpec::new(factors.iter().map(|f| f.1).collect())?;
    let images = factors
        .iter()
        .flat_map(|f| f.2.iter().map(|&i| ImageSpec::Root(simple[i].clone())))
        .collect();
    Ok(EmbeddingData {
        g: g.spec().clone(),
        h,
        kind: EmbeddingKind::Subsystem,
        images,
        coweight: None,
    })
}
