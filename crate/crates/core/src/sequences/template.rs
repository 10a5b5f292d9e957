//! Loading and instantiating the case table in `data/cases.toml`.

use std::sync::OnceLock;

use serde::Deserialize;

use super::{cycle_terms, EdgeSum, SequenceError};

const CASES_TOML: &str = include_str!("../../data/cases.toml");

#[derive(Debug, Deserialize)]
struct CaseTable {
    bicyclic: Vec<CaseRow>,
    dumbbell: Vec<CaseRow>,
}

#[derive(Debug, Deserialize)]
pub(crate) struct CaseRow {
    #[serde(default)]
    k: Option<usize>,
    #[serde(default)]
    k_min: Option<usize>,
    #[serde(default)]
    k_max: Option<usize>,
    m: usize,
    n: usize,
    #[serde(default)]
    mirror: bool,
    #[serde(default)]
    seq: Vec<String>,
}

impl CaseRow {
    fn matches(&self, k: Option<usize>, m: usize, n: usize) -> bool {
        self.m == m % 3
            && self.n == n % 3
            && match k {
                None => self.k.is_none(),
                Some(k) => {
                    self.k == Some(k % 3)
                        && self.k_min.is_none_or(|lo| k >= lo)
                        && self.k_max.is_none_or(|hi| k <= hi)
                }
            }
    }

    fn restriction(&self) -> String {
        match (self.k_min, self.k_max) {
            (_, Some(hi)) if self.k_min.unwrap_or(0) == hi => format!(", k={hi}"),
            (Some(lo), None) => format!(", k≥{lo}"),
            _ => String::new(),
        }
    }
}

fn table() -> Result<&'static CaseTable, SequenceError> {
    static TABLE: OnceLock<Result<CaseTable, String>> = OnceLock::new();
    TABLE
        .get_or_init(|| toml::from_str(CASES_TOML).map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| SequenceError::Table(e.clone()))
}

/// Vertex indices the template symbols resolve to.
pub(crate) struct Roles {
    /// First cycle, starting at its junction vertex.
    pub q: Vec<usize>,
    /// Second cycle, starting at its junction vertex.
    pub p: Vec<usize>,
    /// Path `z[0] ..= z[k+1]`; empty for the vertex join.
    pub z: Vec<usize>,
}

impl Roles {
    fn mirrored(self) -> Self {
        let mut z = self.z;
        z.reverse();
        Roles {
            q: self.p,
            p: self.q,
            z,
        }
    }
}

/// Resolved row: the template to expand and the tag naming its case.
pub(crate) struct Selected {
    pub tag: String,
    pub seq: &'static [String],
    pub mirror: bool,
}

pub(crate) fn select(family: &str, k: Option<usize>, m: usize, n: usize) -> Result<Selected, SequenceError> {
    let t = table()?;
    let rows = if k.is_some() { &t.dumbbell } else { &t.bicyclic };
    let find = |m: usize, n: usize| {
        let hits: Vec<&CaseRow> = rows.iter().filter(|r| r.matches(k, m, n)).collect();
        match hits.as_slice() {
            [row] => Ok(*row),
            [] => Err(SequenceError::NoCase(format!("{family} k={k:?} m={m} n={n}"))),
            _ => Err(SequenceError::Table(format!(
                "{} rows match {family} k={k:?} m={m} n={n}",
                hits.len()
            ))),
        }
    };
    let row = find(m, n)?;
    let k_part = k.map(|k| format!(" k≡{}", k % 3)).unwrap_or_default();
    let tag = format!("{family}{k_part} m≡{} n≡{}", m % 3, n % 3);
    if row.mirror {
        let target = find(n, m)?;
        if target.mirror || target.seq.is_empty() {
            return Err(SequenceError::Table(format!("mirror row for {tag} has no template")));
        }
        return Ok(Selected {
            tag: tag + &target.restriction() + ", mirrored",
            seq: &target.seq,
            mirror: true,
        });
    }
    if row.seq.is_empty() {
        return Err(SequenceError::Table(format!("row {tag} has an empty template")));
    }
    Ok(Selected {
        tag: tag + &row.restriction(),
        seq: &row.seq,
        mirror: false,
    })
}

/// Expands a template over the given roles; `k` is the path length.
pub(crate) fn expand(seq: &[String], roles: Roles, mirror: bool, k: usize) -> Result<Vec<EdgeSum>, SequenceError> {
    let roles = if mirror { roles.mirrored() } else { roles };
    let ctx = Context {
        q: cycle_terms(&roles.q),
        p: cycle_terms(&roles.p),
        z: roles.z,
        k: k as i64,
    };
    let mut out = Vec::new();
    for item in seq {
        ctx.item(item.trim(), &mut out)
            .map_err(|e| SequenceError::Table(format!("in {item:?}: {e}")))?;
    }
    Ok(out)
}

struct Context {
    q: Vec<EdgeSum>,
    p: Vec<EdgeSum>,
    z: Vec<usize>,
    k: i64,
}

impl Context {
    fn cycle(&self, name: &str) -> Result<&[EdgeSum], String> {
        match name {
            "q" => Ok(&self.q),
            "p" => Ok(&self.p),
            other => Err(format!("unknown sequence {other:?}")),
        }
    }

    /// Integer expression over `k` or `L` (last index of `seq`).
    fn eval(&self, expr: &str, last: Option<i64>) -> Result<i64, String> {
        let expr = expr.replace(' ', "");
        let split = expr[1..].find(['+', '-']).map(|i| i + 1);
        let (atom, rest) = match split {
            Some(i) => expr.split_at(i),
            None => (expr.as_str(), ""),
        };
        let base = match atom {
            "k" => self.k,
            "L" => last.ok_or("L is only defined inside q[..] or p[..]")?,
            num => num.parse::<i64>().map_err(|_| format!("bad index {num:?}"))?,
        };
        if rest.is_empty() {
            return Ok(base);
        }
        let offset: i64 = rest[1..].parse().map_err(|_| format!("bad offset {rest:?}"))?;
        Ok(if rest.starts_with('+') { base + offset } else { base - offset })
    }

    fn z(&self, expr: &str) -> Result<usize, String> {
        let j = self.eval(expr, None)?;
        self.z
            .get(usize::try_from(j).map_err(|_| format!("z index {j} < 0"))?)
            .copied()
            .ok_or_else(|| format!("z index {j} beyond the path"))
    }

    fn item(&self, item: &str, out: &mut Vec<EdgeSum>) -> Result<(), String> {
        if let Some(args) = item.strip_prefix("chain(").and_then(|s| s.strip_suffix(')')) {
            let (a, b) = args.split_once(',').ok_or("chain needs two bounds")?;
            let (a, b) = (self.eval(a, None)?, self.eval(b, None)?);
            if b < a || (b - a) % 3 != 0 {
                return Err(format!("chain({a},{b}) does not split into blocks of three"));
            }
            let zi = |j: i64| self.z(&j.to_string());
            let mut j = a;
            while j + 3 <= b {
                out.push(vec![(zi(j + 1)?, zi(j + 2)?)]);
                out.push(vec![(zi(j)?, zi(j + 1)?), (zi(j + 2)?, zi(j + 3)?)]);
                j += 3;
            }
            return Ok(());
        }
        if let Some((name, range)) = item
            .strip_suffix(']')
            .and_then(|s| s.split_once('['))
            .filter(|(_, r)| *r == "all" || r.contains(".."))
        {
            let seq = self.cycle(name)?;
            let last = seq.len() as i64 - 1;
            let (a, b) = match range {
                "all" => (0, last),
                r => {
                    let (a, b) = r.split_once("..").unwrap();
                    (self.eval(a, Some(last))?, self.eval(b, Some(last))?)
                }
            };
            for i in a..=b {
                let i = usize::try_from(i).map_err(|_| format!("index {i} < 0"))?;
                out.push(seq.get(i).ok_or(format!("index {i} beyond {name}"))?.clone());
            }
            return Ok(());
        }
        let mut sum = EdgeSum::new();
        for term in split_top_level(item) {
            let term = term.trim();
            if let Some((l, r)) = term.split_once('*') {
                let inner = |t: &str| -> Result<usize, String> {
                    let idx = t
                        .strip_prefix("z[")
                        .and_then(|s| s.strip_suffix(']'))
                        .ok_or(format!("bad path term {t:?}"))?;
                    self.z(idx)
                };
                sum.push((inner(l.trim())?, inner(r.trim())?));
            } else {
                let (name, idx) = term
                    .strip_suffix(']')
                    .and_then(|s| s.split_once('['))
                    .ok_or(format!("bad term {term:?}"))?;
                let seq = self.cycle(name)?;
                let i = self.eval(idx, Some(seq.len() as i64 - 1))?;
                let i = usize::try_from(i).map_err(|_| format!("index {i} < 0"))?;
                sum.extend(seq.get(i).ok_or(format!("index {i} beyond {name}"))?);
            }
        }
        out.push(sum);
        Ok(())
    }
}

/// Splits on `+` outside brackets, so `z[k+1]` stays whole.
fn split_top_level(item: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in item.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            '+' if depth == 0 => {
                parts.push(&item[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&item[start..]);
    parts
}
