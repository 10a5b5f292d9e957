use std::fmt;

use super::AlgebraError;

/// Hard cap on ambient variables. Graph rings here stay well below it,
/// including the extra variable added for radical tests.
pub const MAX_VARS: usize = 32;

/// Dense exponent vector over a fixed number of variables.
///
/// Slots beyond `nvars` are always zero, so embedding into a ring with more
/// variables is a change of `nvars` only.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    degree: u32,
}

/// Result of [`monomial_ops`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOps {
    pub product: Monomial,
    pub divides: bool,
    pub lcm: Monomial,
}

impl Monomial {
    pub fn one(nvars: usize) -> Result<Self, AlgebraError> {
        if nvars > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(nvars));
        }
        Ok(Self {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
            degree: 0,
        })
    }

    pub fn from_exponents(exps: &[u16]) -> Result<Self, AlgebraError> {
        let mut m = Self::one(exps.len())?;
        m.exps[..exps.len()].copy_from_slice(exps);
        m.degree = exps.iter().map(|&e| e as u32).sum();
        Ok(m)
    }

    /// The monomial `x_i` (zero-based).
    pub fn var(nvars: usize, i: usize) -> Result<Self, AlgebraError> {
        let mut m = Self::one(nvars)?;
        if i >= nvars {
            return Err(AlgebraError::VariableOutOfRange { index: i, nvars });
        }
        m.exps[i] = 1;
        m.degree = 1;
        Ok(m)
    }

    /// Squarefree product `x_i x_j`, the shape of every edge generator.
    pub fn edge(nvars: usize, i: usize, j: usize) -> Result<Self, AlgebraError> {
        let a = Self::var(nvars, i)?;
        let b = Self::var(nvars, j)?;
        Ok(a.product(&b))
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents().iter().all(|&e| e <= 1)
    }

    /// Bit `i` is set when `x_i` occurs; a cheap necessary test for divisibility.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Same monomial viewed in a ring with `nvars` variables.
    pub fn embed(&self, nvars: usize) -> Result<Self, AlgebraError> {
        if nvars > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(nvars));
        }
        if nvars < self.nvars() && self.exps[nvars..self.nvars()].iter().any(|&e| e > 0) {
            return Err(AlgebraError::DimensionMismatch(self.nvars(), nvars));
        }
        let mut m = *self;
        m.nvars = nvars as u8;
        Ok(m)
    }

    #[inline]
    pub fn product(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for i in 0..self.nvars as usize {
            out.exps[i] += other.exps[i];
        }
        out.degree += other.degree;
        out
    }

    /// Componentwise `self <= other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars, other.nvars);
        self.degree <= other.degree
            && (0..self.nvars as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    #[inline]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        let mut degree = 0;
        for i in 0..self.nvars as usize {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            degree += out.exps[i] as u32;
        }
        out.degree = degree;
        out
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    #[inline]
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for i in 0..self.nvars as usize {
            out.exps[i] -= other.exps[i];
        }
        out.degree -= other.degree;
        Some(out)
    }

    /// True when the two monomials share no variable.
    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.nvars as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    pub fn pow(&self, e: u16) -> Monomial {
        let mut out = *self;
        for i in 0..self.nvars as usize {
            out.exps[i] *= e;
        }
        out.degree *= e as u32;
        out
    }

    /// Renders with the given variable names, e.g. `x1*x2^2`; `1` for the unit.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exponents().iter().enumerate() {
            let name = names.get(i).cloned().unwrap_or_else(|| format!("v{i}"));
            match e {
                0 => {}
                1 => parts.push(name),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// Checked product, divisibility and lcm of two monomials.
pub fn monomial_ops(a: &Monomial, b: &Monomial) -> Result<MonomialOps, AlgebraError> {
    if a.nvars() != b.nvars() {
        return Err(AlgebraError::DimensionMismatch(a.nvars(), b.nvars()));
    }
    Ok(MonomialOps {
        product: a.product(b),
        divides: a.divides(b),
        lcm: a.lcm(b),
    })
}
