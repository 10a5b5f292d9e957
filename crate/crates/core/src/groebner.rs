//! Buchberger's algorithm, multivariate division and radical-membership tests.
//!
//! Pairs are selected by the normal strategy (smallest lcm degree first) and
//! pairs with coprime leading monomials are skipped. Every run carries an
//! S-pair budget; exhausting it is an error, never a silent answer.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::polyalg::{add_scaled, AlgebraError, Monomial, Polynomial, PrimeField, Ring, Term, TermOrder};

/// Environment variable overriding [`GroebnerConfig::spair_budget`].
pub const SPAIR_BUDGET_ENV: &str = "EDGEIDEAL_SPAIR_BUDGET";
pub const DEFAULT_SPAIR_BUDGET: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("S-pair budget of {budget} exhausted")]
    ResourceLimit { budget: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub spair_budget: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        Self {
            spair_budget: DEFAULT_SPAIR_BUDGET,
        }
    }
}

impl GroebnerConfig {
    /// Default budget, overridden by `EDGEIDEAL_SPAIR_BUDGET` when it holds
    /// a valid integer.
    pub fn from_env() -> Self {
        let mut cfg = Self::default();
        if let Some(b) = std::env::var(SPAIR_BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            cfg.spair_budget = b;
        }
        cfg
    }

    pub fn with_budget(spair_budget: usize) -> Self {
        Self { spair_budget }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GroebnerStats {
    /// S-pairs actually formed and reduced.
    pub pairs_processed: usize,
    /// Pairs dropped by the coprime criterion.
    pub pairs_skipped: usize,
    pub zero_reductions: usize,
    pub max_basis_len: usize,
}

impl GroebnerStats {
    pub fn merge(&mut self, other: &GroebnerStats) {
        self.pairs_processed += other.pairs_processed;
        self.pairs_skipped += other.pairs_skipped;
        self.zero_reductions += other.zero_reductions;
        self.max_basis_len = self.max_basis_len.max(other.max_basis_len);
    }
}

/// Reduced Gröbner basis: monic generators, no leading monomial dividing
/// another, tails fully reduced.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    stats: GroebnerStats,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &TermOrder {
        self.ring.order()
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn stats(&self) -> GroebnerStats {
        self.stats
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_unit()
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial, GroebnerError> {
        normal_form(f, &self.generators)
    }

    /// Ideal membership: the normal form against a Gröbner basis is zero.
    pub fn contains(&self, f: &Polynomial) -> Result<bool, GroebnerError> {
        Ok(self.reduce(f)?.is_zero())
    }
}

/// Basis element with its divisibility prefilter.
struct Elem {
    terms: Vec<Term>,
    mask: u32,
}

impl Elem {
    fn new(terms: Vec<Term>) -> Self {
        let mask = terms[0].mono.support_mask();
        Self { terms, mask }
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }
}

struct Reducer<'a> {
    k: PrimeField,
    order: &'a TermOrder,
}

impl Reducer<'_> {
    fn make_monic(&self, mut terms: Vec<Term>) -> Vec<Term> {
        if let Some(lead) = terms.first() {
            if lead.coeff != 1 {
                let inv = self.k.inv(lead.coeff).expect("nonzero");
                for t in &mut terms {
                    t.coeff = self.k.mul(t.coeff, inv);
                }
            }
        }
        terms
    }

    /// Full reduction of `f` by monic basis elements. `skip` excludes one
    /// element (used when interreducing).
    fn reduce(&self, f: Vec<Term>, basis: &[Elem], skip: Option<usize>) -> Vec<Term> {
        let mut rem: Vec<Term> = Vec::new();
        let mut p = f;
        let mut start = 0;
        while start < p.len() {
            let lt = p[start];
            let mask = lt.mono.support_mask();
            let divisor = basis.iter().enumerate().find(|(i, g)| {
                Some(*i) != skip && g.mask & !mask == 0 && g.lm().divides(&lt.mono)
            });
            match divisor {
                Some((_, g)) => {
                    let q = lt.mono.quotient(g.lm()).expect("divisor checked");
                    let c = self.k.neg(lt.coeff);
                    p = add_scaled(self.k, self.order, &p[start..], c, Some(&q), &g.terms);
                    start = 0;
                }
                None => {
                    rem.push(lt);
                    start += 1;
                }
            }
        }
        rem
    }

    fn spoly(&self, f: &[Term], g: &[Term]) -> Vec<Term> {
        let lf = &f[0];
        let lg = &g[0];
        let lcm = lf.mono.lcm(&lg.mono);
        let qf = lcm.quotient(&lf.mono).expect("lcm");
        let qg = lcm.quotient(&lg.mono).expect("lcm");
        let cf = self.k.inv(lf.coeff).expect("nonzero");
        let cg = self.k.neg(self.k.inv(lg.coeff).expect("nonzero"));
        let a = add_scaled(self.k, self.order, &[], cf, Some(&qf), f);
        add_scaled(self.k, self.order, &a, cg, Some(&qg), g)
    }
}

fn check_ring<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Result<Option<Arc<Ring>>, GroebnerError> {
    let mut ring: Option<Arc<Ring>> = None;
    for p in polys {
        match &ring {
            None => ring = Some(p.ring().clone()),
            Some(r) => r.compatible(p.ring())?,
        }
    }
    Ok(ring)
}

/// `(L/LT(f))·f − (L/LT(g))·g` with `L` the lcm of the leading monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, GroebnerError> {
    if f.is_zero() || g.is_zero() {
        return Err(GroebnerError::DegenerateInput("S-polynomial of zero"));
    }
    f.ring().compatible(g.ring())?;
    let r = Reducer {
        k: f.ring().field(),
        order: f.ring().order(),
    };
    let s = r.spoly(f.terms(), g.terms());
    Ok(Polynomial::from_sorted(f.ring(), s))
}

/// Remainder of multivariate division of `f` by `basis` (every term of the
/// result is irreducible). Zero basis entries are ignored.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial, GroebnerError> {
    check_ring(std::iter::once(f).chain(basis))?;
    let r = Reducer {
        k: f.ring().field(),
        order: f.ring().order(),
    };
    let elems: Vec<Elem> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Elem::new(r.make_monic(g.terms().to_vec())))
        .collect();
    let rem = r.reduce(f.terms().to_vec(), &elems, None);
    Ok(Polynomial::from_sorted(f.ring(), rem))
}

enum Outcome {
    Complete(Vec<Elem>),
    Unit,
}

fn run(
    ring: &Arc<Ring>,
    generators: &[Polynomial],
    config: &GroebnerConfig,
    stop_on_unit: bool,
    stats: &mut GroebnerStats,
) -> Result<Outcome, GroebnerError> {
    let r = Reducer {
        k: ring.field(),
        order: ring.order(),
    };
    let mut basis: Vec<Elem> = Vec::new();
    let mut pairs: BinaryHeap<Reverse<(u32, usize, usize, usize)>> = BinaryHeap::new();
    let mut seq = 0usize;

    let mut push_elem = |basis: &mut Vec<Elem>,
                         pairs: &mut BinaryHeap<Reverse<(u32, usize, usize, usize)>>,
                         terms: Vec<Term>| {
        let e = Elem::new(terms);
        let idx = basis.len();
        for (j, other) in basis.iter().enumerate() {
            let deg = e.lm().lcm(other.lm()).degree();
            pairs.push(Reverse((deg, seq, j, idx)));
            seq += 1;
        }
        basis.push(e);
    };

    for g in generators {
        if g.is_zero() {
            continue;
        }
        if g.is_unit() {
            return Ok(Outcome::Unit);
        }
        let reduced = r.reduce(g.terms().to_vec(), &basis, None);
        if reduced.is_empty() {
            continue;
        }
        if reduced[0].mono.is_one() {
            return Ok(Outcome::Unit);
        }
        push_elem(&mut basis, &mut pairs, r.make_monic(reduced));
    }
    stats.max_basis_len = stats.max_basis_len.max(basis.len());

    while let Some(Reverse((_, _, i, j))) = pairs.pop() {
        if basis[i].lm().is_coprime(basis[j].lm()) {
            stats.pairs_skipped += 1;
            continue;
        }
        if stats.pairs_processed >= config.spair_budget {
            return Err(GroebnerError::ResourceLimit {
                budget: config.spair_budget,
            });
        }
        stats.pairs_processed += 1;
        let s = r.spoly(&basis[i].terms, &basis[j].terms);
        let h = r.reduce(s, &basis, None);
        if h.is_empty() {
            stats.zero_reductions += 1;
            continue;
        }
        if h[0].mono.is_one() && stop_on_unit {
            return Ok(Outcome::Unit);
        }
        push_elem(&mut basis, &mut pairs, r.make_monic(h));
        stats.max_basis_len = stats.max_basis_len.max(basis.len());
    }

    if basis.iter().any(|e| e.lm().is_one()) {
        return Ok(Outcome::Unit);
    }
    Ok(Outcome::Complete(interreduce(&r, basis)))
}

/// Drops elements whose leading monomial is divisible by another's, then
/// tail-reduces each survivor against the rest.
fn interreduce(r: &Reducer<'_>, mut basis: Vec<Elem>) -> Vec<Elem> {
    basis.sort_by(|a, b| r.order.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<Elem> = Vec::new();
    for e in basis {
        if !minimal.iter().any(|m| m.lm().divides(e.lm())) {
            minimal.push(e);
        }
    }
    for i in 0..minimal.len() {
        let terms = std::mem::take(&mut minimal[i].terms);
        let lead = terms[0];
        let tail = r.reduce(terms[1..].to_vec(), &minimal, Some(i));
        let mut full = Vec::with_capacity(tail.len() + 1);
        full.push(lead);
        full.extend(tail);
        minimal[i] = Elem::new(full);
    }
    minimal.sort_by(|a, b| r.order.cmp(b.lm(), a.lm()));
    minimal
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
pub fn buchberger(
    generators: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<GroebnerBasis, GroebnerError> {
    let ring = check_ring(generators)?
        .ok_or(GroebnerError::DegenerateInput("empty generator list"))?;
    let mut stats = GroebnerStats::default();
    let generators = match run(&ring, generators, config, false, &mut stats)? {
        Outcome::Unit => vec![Polynomial::constant(&ring, 1)],
        Outcome::Complete(elems) => elems
            .into_iter()
            .map(|e| Polynomial::from_sorted(&ring, e.terms))
            .collect(),
    };
    Ok(GroebnerBasis {
        ring,
        generators,
        stats,
    })
}

/// Whether the generators span the unit ideal, stopping as soon as a
/// nonzero constant appears.
pub fn ideal_contains_one(
    generators: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<bool, GroebnerError> {
    ideal_contains_one_with_stats(generators, config).map(|(b, _)| b)
}

pub fn ideal_contains_one_with_stats(
    generators: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<(bool, GroebnerStats), GroebnerError> {
    let ring = check_ring(generators)?
        .ok_or(GroebnerError::DegenerateInput("empty generator list"))?;
    let mut stats = GroebnerStats::default();
    let unit = matches!(run(&ring, generators, config, true, &mut stats)?, Outcome::Unit);
    Ok((unit, stats))
}

/// Outcome of a Rabinowitsch test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalCertificate {
    pub member: bool,
    pub stats: GroebnerStats,
}

/// Decides `f ∈ √(generators)` by checking `1 ∈ (generators, 1 − t·f)` in the
/// ring extended by a fresh lowest-ranked variable `t`. Over a prime field
/// the answer holds over its algebraic closure as well.
pub fn radical_membership(
    f: &Polynomial,
    generators: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<bool, GroebnerError> {
    radical_certificate(f, generators, config).map(|c| c.member)
}

pub fn radical_certificate(
    f: &Polynomial,
    generators: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<RadicalCertificate, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::DegenerateInput("radical test of zero"));
    }
    let ring = f.ring();
    check_ring(std::iter::once(f).chain(generators))?;
    let mut name = "t".to_string();
    while ring.var_index(&name).is_some() {
        name.push('\'');
    }
    let ext = ring.extend(&name)?;
    let t = Polynomial::var(&ext, ext.nvars() - 1)?;
    let one = Polynomial::constant(&ext, 1);
    let tf = t.checked_mul(&f.embed(&ext)?)?;
    let mut gens = Vec::with_capacity(generators.len() + 1);
    for g in generators {
        gens.push(g.embed(&ext)?);
    }
    gens.push(one.checked_sub(&tf)?);
    let (member, stats) = ideal_contains_one_with_stats(&gens, config)?;
    Ok(RadicalCertificate { member, stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, n: usize) -> Arc<Ring> {
        Ring::numbered(PrimeField::new(p).unwrap(), n).unwrap()
    }

    fn polys(r: &Arc<Ring>, srcs: &[&str]) -> Vec<Polynomial> {
        srcs.iter().map(|s| r.parse(s).unwrap()).collect()
    }

    fn cfg() -> GroebnerConfig {
        GroebnerConfig::default()
    }

    #[test]
    fn spoly_of_monomials_vanishes() {
        let r = ring(32003, 3);
        let s = s_polynomial(&r.parse("x1*x2").unwrap(), &r.parse("x2*x3").unwrap()).unwrap();
        assert!(s.is_zero());
        let f = r.parse("x1*x2 + 3*x3^2").unwrap();
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
        assert!(s_polynomial(&f, &Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn spoly_of_overlapping_binomials() {
        // f = x1x6 + x2x3 (lead x2x3), g = x2x3 + x4x5 (lead x2x3):
        // lcm = x2x3, so S = f - g by the defining formula.
        let r = ring(32003, 6);
        let f = r.parse("x1*x6 + x2*x3").unwrap();
        let g = r.parse("x2*x3 + x4*x5").unwrap();
        assert_eq!(f.leading_monomial(), r.parse("x2*x3").unwrap().leading_monomial());
        let s = s_polynomial(&f, &g).unwrap();
        assert_eq!(s, f.checked_sub(&g).unwrap());
        assert_eq!(s, r.parse("x1*x6 - x4*x5").unwrap());
        assert!(s.total_degree() <= 4);
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(32003, 6);
        let nf = |f: &str, b: &[&str]| normal_form(&r.parse(f).unwrap(), &polys(&r, b)).unwrap();
        assert!(nf("x1*x2*x3", &["x1*x2"]).is_zero());
        assert_eq!(nf("x1*x3", &["x1*x2", "x2*x3"]), r.parse("x1*x3").unwrap());

        let f = r.parse("x2^2*x3^2").unwrap();
        let g = r.parse("x2*x3 + x4*x5").unwrap();
        let rem = normal_form(&f, std::slice::from_ref(&g)).unwrap();
        assert_eq!(rem, r.parse("x4^2*x5^2").unwrap());
        // quotient (x2x3 - x4x5): f = q*g + rem
        let q = r.parse("x2*x3 - x4*x5").unwrap();
        assert_eq!(q.checked_mul(&g).unwrap().checked_add(&rem).unwrap(), f);
    }

    #[test]
    fn buchberger_examples() {
        let r = ring(32003, 4);
        let gb = buchberger(&polys(&r, &["x1*x2"]), &cfg()).unwrap();
        assert_eq!(gb.generators(), &polys(&r, &["x1*x2"])[..]);

        let gb = buchberger(&polys(&r, &["x1", "1 - x1"]), &cfg()).unwrap();
        assert!(gb.is_unit_ideal());

        let c4 = polys(&r, &["x1*x2", "x2*x3", "x3*x4", "x1*x4"]);
        let gb = buchberger(&c4, &cfg()).unwrap();
        let mut got: Vec<String> = gb.generators().iter().map(|g| g.to_string()).collect();
        let mut want: Vec<String> = c4.iter().map(|g| g.to_string()).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        assert!(buchberger(&[], &cfg()).is_err());
    }

    #[test]
    fn unit_ideal_tests() {
        let r = ring(32003, 2);
        assert!(ideal_contains_one(&polys(&r, &["x1", "x1 + 1"]), &cfg()).unwrap());
        assert!(!ideal_contains_one(&polys(&r, &["x1*x2"]), &cfg()).unwrap());
    }

    #[test]
    fn radical_of_pentagon_sequence() {
        // q0, q1, q2 for the 5-cycle
        let r = ring(32003, 5);
        let gens = polys(&r, &["x1*x2", "x2*x3 + x4*x5", "x1*x5 + x3*x4"]);
        let x1x5 = r.parse("x1*x5").unwrap();
        assert!(radical_membership(&x1x5, &gens, &cfg()).unwrap());

        let t_gens = {
            let ext = r.extend("t").unwrap();
            let mut g: Vec<Polynomial> = gens.iter().map(|g| g.embed(&ext).unwrap()).collect();
            g.push(ext.parse("1 - t*x1*x5").unwrap());
            g
        };
        assert!(ideal_contains_one(&t_gens, &cfg()).unwrap());
    }

    #[test]
    fn radical_self_membership_and_chord() {
        let r = ring(3, 4);
        let f = r.parse("x1*x2 + x3^2").unwrap();
        assert!(radical_membership(&f, std::slice::from_ref(&f), &cfg()).unwrap());
        let c4_seq = polys(&r, &["x1*x2", "x1*x4 + x2*x3", "x3*x4"]);
        assert!(!radical_membership(&r.parse("x1*x3").unwrap(), &c4_seq, &cfg()).unwrap());
    }

    #[test]
    fn budget_is_reported() {
        let r = ring(32003, 5);
        let gens = polys(&r, &["x1*x2", "x2*x3 + x4*x5", "x1*x5 + x3*x4"]);
        let err = radical_membership(
            &r.parse("x1*x5").unwrap(),
            &gens,
            &GroebnerConfig::with_budget(1),
        )
        .unwrap_err();
        assert_eq!(err, GroebnerError::ResourceLimit { budget: 1 });
    }
}
