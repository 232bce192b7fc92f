use crate::rootsys::TypeSpec;
use crate::{Error, Result};

/// Linear form in the summation variables `a_1..a_m`, stored densely.
pub type LinForm = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    /// `sum d_j a_j = k`
    Eq,
    /// `sum d_j a_j <= k`, i.e. one extra trivial generator of degree one.
    Le,
}

/// Highest-weight pattern of a rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// `sum form * l_j` in fundamental weights of `H` (index 0-based, across all factors).
    H(Vec<(LinForm, usize)>),
    /// `sum form * w_j` in fundamental weights of `G`, restricted along the embedding.
    G(Vec<(LinForm, usize)>),
}

/// One row of a rule file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleRow {
    pub g: TypeSpec,
    pub h: TypeSpec,
    pub node: usize,
    pub variant: String,
    pub degrees: Vec<i64>,
    pub bound: Bound,
    pub pattern: Pattern,
    pub charge: Option<LinForm>,
    pub line: usize,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Splits at top-level `+`/`-`, keeping the sign with each piece.
fn split_terms(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0;
    for c in s.chars().filter(|c| !c.is_whitespace()) {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && !cur.is_empty() => {
                out.push(std::mem::take(&mut cur));
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn strip_sign(t: &str) -> (i64, &str) {
    if let Some(r) = t.strip_prefix('-') {
        (-1, r)
    } else {
        (1, t.strip_prefix('+').unwrap_or(t))
    }
}

fn parse_index(s: &str, prefix: char, line: usize) -> Result<usize> {
    let rest = s
        .strip_prefix(prefix)
        .ok_or_else(|| perr(line, format!("expected {prefix}<j>, got `{s}`")))?;
    let j: usize = rest.parse().map_err(|_| perr(line, format!("bad index in `{s}`")))?;
    if j == 0 {
        return Err(perr(line, "indices start at 1"));
    }
    Ok(j - 1)
}

/// Parses `a1 + 2*a2 - (a3 + a4)` into `(variable, coefficient)` pairs.
fn parse_form(s: &str, line: usize) -> Result<Vec<(usize, i64)>> {
    let mut out = Vec::new();
    for t in split_terms(s) {
        let (sign, body) = strip_sign(&t);
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            out.extend(parse_form(inner, line)?.into_iter().map(|(v, c)| (v, sign * c)));
            continue;
        }
        let (coeff, var) = match body.find('a') {
            Some(0) => (1, body),
            Some(p) => {
                let c: i64 = body[..p]
                    .trim_end_matches('*')
                    .parse()
                    .map_err(|_| perr(line, format!("bad coefficient in `{t}`")))?;
                (c, &body[p..])
            }
            None => return Err(perr(line, format!("expected a<j> in `{t}`"))),
        };
        out.push((parse_index(var, 'a', line)?, sign * coeff));
    }
    if out.is_empty() {
        return Err(perr(line, "empty linear form"));
    }
    Ok(out)
}

fn densify(f: &[(usize, i64)], m: usize, line: usize) -> Result<LinForm> {
    let mut v = vec![0; m];
    for &(j, c) in f {
        if j >= m {
            return Err(perr(line, format!("a{} is not a summation variable", j + 1)));
        }
        v[j] += c;
    }
    Ok(v)
}

fn parse_pattern(s: &str, m: usize, line: usize) -> Result<Pattern> {
    let (is_g, body) = match s.trim().strip_prefix("gweight") {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let prefix = if is_g { 'w' } else { 'l' };
    let mut terms = Vec::new();
    for t in split_terms(body) {
        let (sign, body) = strip_sign(&t);
        let star = body
            .rfind('*')
            .ok_or_else(|| perr(line, format!("expected <form>*{prefix}<j> in `{t}`")))?;
        let idx = parse_index(&body[star + 1..], prefix, line)?;
        let form: LinForm = densify(&parse_form(&body[..star], line)?, m, line)?
            .into_iter()
            .map(|c| sign * c)
            .collect();
        terms.push((form, idx));
    }
    if terms.is_empty() {
        return Err(perr(line, "empty pattern"));
    }
    Ok(if is_g { Pattern::G(terms) } else { Pattern::H(terms) })
}

fn parse_line(l: &str, line: usize) -> Result<RuleRow> {
    let (head, body) = l.split_once(':').ok_or_else(|| perr(line, "expected `:`"))?;
    let hp: Vec<&str> = head.split_whitespace().collect();
    if hp.len() < 4 || hp.len() > 5 || hp[0] != "rule" {
        return Err(perr(line, "expected `rule <G> <H> <i> [variant=<tag>] :`"));
    }
    let g: TypeSpec = hp[1].parse().map_err(|e: Error| perr(line, e.to_string()))?;
    let h: TypeSpec = hp[2].parse().map_err(|e: Error| perr(line, e.to_string()))?;
    let node: usize = hp[3].parse().map_err(|_| perr(line, "bad node"))?;
    if node == 0 || node > g.semisimple_rank() {
        return Err(perr(line, format!("node {node} out of range")));
    }
    let variant = match hp.get(4) {
        Some(v) => v
            .strip_prefix("variant=")
            .filter(|t| !t.is_empty())
            .ok_or_else(|| perr(line, "expected variant=<tag>"))?
            .to_string(),
        None => "table".to_string(),
    };
    let (lhs, rhs) = body.split_once("->").ok_or_else(|| perr(line, "expected `->`"))?;
    let (deg, bound) = if let Some((d, k)) = lhs.split_once("<=") {
        (d, (Bound::Le, k))
    } else if let Some((d, k)) = lhs.split_once('=') {
        (d, (Bound::Eq, k))
    } else {
        return Err(perr(line, "expected `= k` or `<= k`"));
    };
    if bound.1.trim() != "k" {
        return Err(perr(line, "right-hand side of the constraint must be k"));
    }
    let deg = parse_form(deg, line)?;
    let m = deg.len();
    let mut degrees = vec![0i64; m];
    for (j, c) in deg {
        if j >= m || degrees[j] != 0 || c <= 0 {
            return Err(perr(
                line,
                "constraint must use a1..am once each with positive coefficients",
            ));
        }
        degrees[j] = c;
    }
    let (pat, charge) = match rhs.split_once('@') {
        Some((p, c)) => (p, Some(densify(&parse_form(c, line)?, m, line)?)),
        None => (rhs, None),
    };
    let pattern = parse_pattern(pat, m, line)?;
    if matches!(pattern, Pattern::G(_)) && charge.is_some() {
        return Err(perr(line, "a gweight pattern determines the charge itself"));
    }
    let limit = match &pattern {
        Pattern::H(_) => h.semisimple_rank(),
        Pattern::G(_) => g.semisimple_rank(),
    };
    let (Pattern::H(t) | Pattern::G(t)) = &pattern;
    if let Some((_, j)) = t.iter().find(|(_, j)| *j >= limit) {
        return Err(perr(line, format!("weight index {} out of range", j + 1)));
    }
    Ok(RuleRow {
        g,
        h,
        node,
        variant,
        degrees,
        bound: bound.0,
        pattern,
        charge,
        line,
    })
}

/// Parses a rule file: one `rule` per line, `#` comments.
pub fn parse_rules(text: &str) -> Result<Vec<RuleRow>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let l = raw.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        out.push(parse_line(l, k + 1)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rows() {
        let r = parse_rules(
            "rule E6 D5xT1 3 : a1+a2+a3+a4+a5+a6 = k -> (a1+a6)*l1 + a2*l2 + a3*l3 + (a4+a6)*l4 + a5*l5 @ 2*a1-4*a2+2*a3+5*a4-a5-3*a6\n\
             rule G2 A2 1 variant=x : a1 + a2 <= k -> a1*l1 + a2*l2\n\
             rule E6 D5xT1 1 variant=proof : a1 + a2 + a3 = k -> gweight (a3-a1-a2)*w1 + a2*w3 + a1*w6",
        )
        .unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r[0].charge, Some(vec![2, -4, 2, 5, -1, -3]));
        assert_eq!(r[0].variant, "table");
        assert_eq!(
            r[0].pattern,
            Pattern::H(vec![
                (vec![1, 0, 0, 0, 0, 1], 0),
                (vec![0, 1, 0, 0, 0, 0], 1),
                (vec![0, 0, 1, 0, 0, 0], 2),
                (vec![0, 0, 0, 1, 0, 1], 3),
                (vec![0, 0, 0, 0, 1, 0], 4),
            ])
        );
        assert_eq!(r[1].bound, Bound::Le);
        assert_eq!(
            r[2].pattern,
            Pattern::G(vec![(vec![-1, -1, 1], 0), (vec![0, 1, 0], 2), (vec![1, 0, 0], 5)])
        );
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "rule G2 A2 1 a1 + a2 <= k -> a1*l1",
            "rule G2 A2 3 : a1 <= k -> a1*l1",
            "rule G2 A2 1 : a1 + a1 = k -> a1*l1",
            "rule G2 A2 1 : a1 = 3 -> a1*l1",
            "rule G2 A2 1 : a1 = k -> a2*l1",
            "rule G2 A2 1 : a1 = k -> a1*l3",
            "rule G2 A2 1 : a1 = k -> a1*w1",
            "rule G2 A2 1 : -a1 = k -> a1*l1",
            "rul G2 A2 1 : a1 = k -> a1*l1",
        ] {
            assert!(parse_rules(bad).is_err(), "{bad}");
        }
    }
}
