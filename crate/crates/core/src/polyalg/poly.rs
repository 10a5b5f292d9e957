use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::{AlgebraError, Monomial, PrimeField, TermOrder, MAX_VARS};

/// Coefficient field, variable names and term order shared by a family of
/// polynomials. Polynomials hold an `Arc<Ring>`; two rings are compatible
/// when field and order agree (names are presentation only).
#[derive(Clone, Debug)]
pub struct Ring {
    field: PrimeField,
    order: TermOrder,
    names: Vec<String>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.order == other.order
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(field: PrimeField, names: Vec<String>) -> Result<Arc<Ring>, AlgebraError> {
        let order = TermOrder::grevlex(names.len());
        Self::with_order(field, names, order)
    }

    pub fn with_order(
        field: PrimeField,
        names: Vec<String>,
        order: TermOrder,
    ) -> Result<Arc<Ring>, AlgebraError> {
        if names.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(names.len()));
        }
        if order.nvars() != names.len() {
            return Err(AlgebraError::DimensionMismatch(order.nvars(), names.len()));
        }
        Ok(Arc::new(Ring {
            field,
            order,
            names,
        }))
    }

    /// Ring with variables `x1..xn`.
    pub fn numbered(field: PrimeField, n: usize) -> Result<Arc<Ring>, AlgebraError> {
        Self::new(field, (1..=n).map(|i| format!("x{i}")).collect())
    }

    /// Appends one variable, ranked lowest in the term order.
    pub fn extend(&self, name: &str) -> Result<Arc<Ring>, AlgebraError> {
        let mut names = self.names.clone();
        names.push(name.to_string());
        Self::with_order(self.field, names, self.order.extended())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn compatible(&self, other: &Ring) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch(
                self.field.modulus(),
                other.field.modulus(),
            ));
        }
        if self.order != other.order {
            return Err(AlgebraError::DimensionMismatch(self.nvars(), other.nvars()));
        }
        Ok(())
    }
}

/// A nonzero coefficient times a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: u64,
    pub mono: Monomial,
}

/// Sparse polynomial: terms strictly descending in the ring's order, no zero
/// coefficients. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

/// Result of [`poly_arith`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyArith {
    pub sum: Polynomial,
    pub difference: Polynomial,
    pub product: Polynomial,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: i64) -> Self {
        let c = ring.field.from_i64(c);
        let mut p = Self::zero(ring);
        if c != 0 {
            p.terms.push(Term {
                coeff: c,
                mono: Monomial::one(ring.nvars()).expect("ring size checked at construction"),
            });
        }
        p
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Result<Self, AlgebraError> {
        Ok(Self::monomial(ring, Monomial::var(ring.nvars(), i)?))
    }

    pub fn monomial(ring: &Arc<Ring>, mono: Monomial) -> Self {
        debug_assert_eq!(mono.nvars(), ring.nvars());
        Self {
            ring: ring.clone(),
            terms: vec![Term { coeff: 1, mono }],
        }
    }

    /// Builds a polynomial from arbitrary `(coefficient, monomial)` pairs,
    /// combining duplicates and dropping zeros.
    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (i64, Monomial)>,
    {
        let k = ring.field;
        let mut raw = Vec::new();
        for (c, m) in terms {
            if m.nvars() != ring.nvars() {
                return Err(AlgebraError::DimensionMismatch(m.nvars(), ring.nvars()));
            }
            raw.push(Term {
                coeff: k.from_i64(c),
                mono: m,
            });
        }
        Ok(Self::normalize(ring, raw))
    }

    pub(crate) fn normalize(ring: &Arc<Ring>, mut raw: Vec<Term>) -> Self {
        let k = ring.field;
        let order = &ring.order;
        raw.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = k.add(last.coeff, t.coeff),
                _ => terms.push(t),
            }
        }
        terms.retain(|t| t.coeff != 0);
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Wraps terms already sorted and normalized.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| {
            ring.order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater
        }));
        debug_assert!(terms.iter().all(|t| t.coeff != 0));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Number of terms; `is_zero` is the emptiness test.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.mono)
    }

    pub fn neg(&self) -> Self {
        let k = self.ring.field;
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: k.neg(t.coeff),
                    mono: t.mono,
                })
                .collect(),
        }
    }

    /// Multiplies by a field constant.
    pub fn scale(&self, c: u64) -> Self {
        let k = self.ring.field;
        let c = c % k.modulus();
        if c == 0 {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: k.mul(t.coeff, c),
                    mono: t.mono,
                })
                .collect(),
        }
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => self.scale(self.ring.field.inv(t.coeff).expect("nonzero")),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.ring.compatible(&other.ring)?;
        let terms = add_scaled(
            self.ring.field,
            &self.ring.order,
            &self.terms,
            1,
            None,
            &other.terms,
        );
        Ok(Self::from_sorted(&self.ring, terms))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.ring.compatible(&other.ring)?;
        let k = self.ring.field;
        let terms = add_scaled(
            k,
            &self.ring.order,
            &self.terms,
            k.neg(1),
            None,
            &other.terms,
        );
        Ok(Self::from_sorted(&self.ring, terms))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.ring.compatible(&other.ring)?;
        let k = self.ring.field;
        let order = &self.ring.order;
        let mut acc: Vec<Term> = Vec::new();
        for t in &self.terms {
            acc = add_scaled(k, order, &acc, t.coeff, Some(&t.mono), &other.terms);
        }
        Ok(Self::from_sorted(&self.ring, acc))
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, c: u64, m: &Monomial) -> Self {
        let k = self.ring.field;
        if c.is_multiple_of(k.modulus()) {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: k.mul(t.coeff, c),
                    mono: t.mono.product(m),
                })
                .collect(),
        }
    }

    /// Raises every term's monomial to the power `e`; only meaningful for
    /// single-term inputs (used for exponentiated SV summands).
    pub fn pow(&self, e: u32) -> Result<Self, AlgebraError> {
        let mut acc = Polynomial::constant(&self.ring, 1);
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Moves the polynomial into `ring`, which must extend this one's ring
    /// by trailing variables with the same field.
    pub fn embed(&self, ring: &Arc<Ring>) -> Result<Self, AlgebraError> {
        if ring.field != self.ring.field {
            return Err(AlgebraError::FieldMismatch(
                self.ring.field.modulus(),
                ring.field.modulus(),
            ));
        }
        if ring.nvars() < self.ring.nvars()
            || ring.order.priority()[..self.ring.nvars()] != *self.ring.order.priority()
        {
            return Err(AlgebraError::DimensionMismatch(self.ring.nvars(), ring.nvars()));
        }
        let mut raw = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            raw.push(Term {
                coeff: t.coeff,
                mono: t.mono.embed(ring.nvars())?,
            });
        }
        // grevlex restricted to the old variables agrees with the old order,
        // and new variables are absent, so the term order is preserved.
        Ok(Self::from_sorted(ring, raw))
    }

    /// Same coefficients read in a different prime field (coefficients
    /// are lifted through their symmetric representatives).
    pub fn change_field(&self, ring: &Arc<Ring>) -> Result<Self, AlgebraError> {
        if ring.order != self.ring.order {
            return Err(AlgebraError::DimensionMismatch(self.ring.nvars(), ring.nvars()));
        }
        let k = self.ring.field;
        Self::from_terms(ring, self.terms.iter().map(|t| (k.signed(t.coeff), t.mono)))
    }
}

/// `a + c * m * b` for sorted term lists (m = 1 when `None`).
pub(crate) fn add_scaled(
    k: PrimeField,
    order: &TermOrder,
    a: &[Term],
    c: u64,
    m: Option<&Monomial>,
    b: &[Term],
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let shifted = |t: &Term| Term {
        coeff: k.mul(t.coeff, c),
        mono: match m {
            Some(m) => t.mono.product(m),
            None => t.mono,
        },
    };
    while i < a.len() && j < b.len() {
        let bj = shifted(&b[j]);
        match order.cmp(&a[i].mono, &bj.mono) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                if bj.coeff != 0 {
                    out.push(bj);
                }
                j += 1;
            }
            Ordering::Equal => {
                let s = k.add(a[i].coeff, bj.coeff);
                if s != 0 {
                    out.push(Term {
                        coeff: s,
                        mono: a[i].mono,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let t = shifted(t);
        if t.coeff != 0 {
            out.push(t);
        }
    }
    out
}

/// Sum, difference and product of two polynomials over the same ring.
pub fn poly_arith(f: &Polynomial, g: &Polynomial) -> Result<PolyArith, AlgebraError> {
    Ok(PolyArith {
        sum: f.checked_add(g)?,
        difference: f.checked_sub(g)?,
        product: f.checked_mul(g)?,
    })
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mono = t.mono.render(&self.ring.names);
            match (t.coeff, t.mono.is_one()) {
                (c, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{mono}")?,
                (c, false) => write!(f, "{c}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self, self.ring.field)
    }
}
