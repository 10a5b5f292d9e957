//! Exact multivariate polynomials over prime fields under a graded reverse
//! lexicographic term order.

mod field;
mod monomial;
mod order;
mod poly;
mod text;

pub use field::{is_prime, PrimeField};
pub use monomial::{monomial_ops, Monomial, MonomialOps, MAX_VARS};
pub use order::{compare, TermOrder};
pub(crate) use poly::add_scaled;
pub use poly::{poly_arith, PolyArith, Polynomial, Ring, Term};
pub use text::{PolyJson, TermJson};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds 32 bits")]
    ModulusTooLarge(u64),
    #[error("dimension mismatch: {0} vs {1} variables")]
    DimensionMismatch(usize, usize),
    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u64, u64),
    #[error("{0} variables exceed the supported maximum of {MAX_VARS}")]
    TooManyVariables(usize),
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("invalid variable priority {0:?}")]
    InvalidPriority(Vec<usize>),
    #[error("parse error: {0}")]
    Parse(String),
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use proptest::prelude::*;

    use super::*;

    fn ring(p: u64, n: usize) -> Arc<Ring> {
        Ring::numbered(PrimeField::new(p).unwrap(), n).unwrap()
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let r = ring(32003, 6);
        let f = r.parse("x1*x6 + x2*x3").unwrap();
        let zero = Polynomial::zero(&r);
        assert_eq!(f.checked_add(&zero).unwrap(), f);
        assert!(f.checked_sub(&f).unwrap().is_zero());
    }

    /// Schoolbook convolution over i64 with a final reduction, kept apart
    /// from the merge-based product it checks.
    fn naive_product(f: &Polynomial, g: &Polynomial) -> Vec<(i64, Vec<u16>)> {
        let p = f.ring().field().modulus() as i64;
        let mut acc: std::collections::BTreeMap<Vec<u16>, i64> = Default::default();
        for a in f.terms() {
            for b in g.terms() {
                let e: Vec<u16> = a
                    .mono
                    .exponents()
                    .iter()
                    .zip(b.mono.exponents())
                    .map(|(x, y)| x + y)
                    .collect();
                *acc.entry(e).or_default() += a.coeff as i64 * b.coeff as i64;
            }
        }
        acc.into_iter()
            .map(|(e, c)| (c.rem_euclid(p), e))
            .filter(|(c, _)| *c != 0)
            .collect()
    }

    #[test]
    fn product_of_conjugate_binomials_mod_three() {
        let r = ring(3, 6);
        let f = r.parse("x1*x6 + x2*x3").unwrap();
        let g = r.parse("x1*x6 - x2*x3").unwrap();
        let h = f.checked_mul(&g).unwrap();
        assert_eq!(h, r.parse("x1^2*x6^2 + 2*x2^2*x3^2").unwrap());

        let mut oracle = naive_product(&f, &g);
        oracle.sort_by(|a, b| a.1.cmp(&b.1));
        let mut got: Vec<(i64, Vec<u16>)> = h
            .terms()
            .iter()
            .map(|t| (t.coeff as i64, t.mono.exponents().to_vec()))
            .collect();
        got.sort_by(|a, b| a.1.cmp(&b.1));
        assert_eq!(got, oracle);
    }

    #[test]
    fn mixed_moduli_rejected() {
        let f = ring(2, 2).parse("x1").unwrap();
        let g = ring(3, 2).parse("x1").unwrap();
        assert_eq!(f.checked_add(&g), Err(AlgebraError::FieldMismatch(2, 3)));
        assert!(poly_arith(&f, &g).is_err());
    }

    #[test]
    fn brute_force_degree_two_order() {
        // Oracle: grevlex on degree-2 monomials in 4 variables is decided by
        // comparing exponent vectors from the last variable backwards, where
        // a smaller entry means a larger monomial.
        let o = TermOrder::grevlex(4);
        let mut monos = Vec::new();
        for i in 0..4 {
            for j in i..4 {
                let mut e = [0u16; 4];
                e[i] += 1;
                e[j] += 1;
                monos.push(e);
            }
        }
        for a in &monos {
            for b in &monos {
                let ra: Vec<i32> = a.iter().rev().map(|&x| -(x as i32)).collect();
                let rb: Vec<i32> = b.iter().rev().map(|&x| -(x as i32)).collect();
                let ma = Monomial::from_exponents(a).unwrap();
                let mb = Monomial::from_exponents(b).unwrap();
                assert_eq!(compare(&o, &ma, &mb), ra.cmp(&rb), "{a:?} vs {b:?}");
            }
        }
        let x2x3 = Monomial::from_exponents(&[0, 1, 1, 0]).unwrap();
        let x1x4 = Monomial::from_exponents(&[1, 0, 0, 1]).unwrap();
        assert_eq!(compare(&o, &x2x3, &x1x4), std::cmp::Ordering::Greater);
    }

    fn arb_poly(p: u64, n: usize) -> impl Strategy<Value = Polynomial> {
        let r = ring(p, n);
        prop::collection::vec(
            (any::<i16>(), prop::collection::vec(0u16..3, n)),
            0..6,
        )
        .prop_map(move |terms| {
            Polynomial::from_terms(
                &r,
                terms
                    .into_iter()
                    .map(|(c, e)| (c as i64, Monomial::from_exponents(&e).unwrap())),
            )
            .unwrap()
        })
    }

    fn sorted_invariant(f: &Polynomial) -> bool {
        let o = f.ring().order();
        f.terms().iter().all(|t| t.coeff != 0 && t.coeff < f.ring().field().modulus())
            && f.terms()
                .windows(2)
                .all(|w| o.cmp(&w[0].mono, &w[1].mono) == std::cmp::Ordering::Greater)
    }

    fn ring_axioms(f: Polynomial, g: Polynomial, h: Polynomial) -> Result<(), TestCaseError> {
        let fg = f.checked_mul(&g).unwrap();
        prop_assert_eq!(&fg, &g.checked_mul(&f).unwrap());
        prop_assert_eq!(f.checked_add(&g).unwrap(), g.checked_add(&f).unwrap());
        prop_assert_eq!(
            fg.checked_mul(&h).unwrap(),
            f.checked_mul(&g.checked_mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.checked_mul(&g.checked_add(&h).unwrap()).unwrap(),
            fg.checked_add(&f.checked_mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.checked_add(&g).unwrap().checked_add(&h).unwrap(),
            f.checked_add(&g.checked_add(&h).unwrap()).unwrap()
        );
        prop_assert!(sorted_invariant(&fg));
        prop_assert!(sorted_invariant(&f.checked_sub(&h).unwrap()));
        Ok(())
    }

    proptest! {
        #[test]
        fn ring_axioms_gf2(f in arb_poly(2, 4), g in arb_poly(2, 4), h in arb_poly(2, 4)) {
            ring_axioms(f, g, h)?;
        }

        #[test]
        fn ring_axioms_gf3(f in arb_poly(3, 4), g in arb_poly(3, 4), h in arb_poly(3, 4)) {
            ring_axioms(f, g, h)?;
        }

        #[test]
        fn ring_axioms_gf32003(f in arb_poly(32003, 4), g in arb_poly(32003, 4), h in arb_poly(32003, 4)) {
            ring_axioms(f, g, h)?;
        }

        #[test]
        fn divides_iff_lcm_is_target(a in prop::collection::vec(0u16..4, 5), b in prop::collection::vec(0u16..4, 5)) {
            let a = Monomial::from_exponents(&a).unwrap();
            let b = Monomial::from_exponents(&b).unwrap();
            prop_assert_eq!(a.divides(&b), a.lcm(&b) == b);
        }

        #[test]
        fn order_is_strict_total(sample in prop::collection::vec(prop::collection::vec(0u16..3, 4), 2..12)) {
            let o = TermOrder::grevlex(4);
            let ms: Vec<Monomial> = sample.iter().map(|e| Monomial::from_exponents(e).unwrap()).collect();
            use std::cmp::Ordering::*;
            for a in &ms {
                for b in &ms {
                    let ab = o.cmp(a, b);
                    prop_assert_eq!(ab, o.cmp(b, a).reverse());
                    prop_assert_eq!(ab == Equal, a == b);
                    for c in &ms {
                        if ab == Greater && o.cmp(b, c) == Greater {
                            prop_assert_eq!(o.cmp(a, c), Greater);
                        }
                    }
                    // multiplicative compatibility
                    for c in &ms {
                        prop_assert_eq!(o.cmp(&a.product(c), &b.product(c)), ab);
                    }
                }
            }
        }
    }
}
