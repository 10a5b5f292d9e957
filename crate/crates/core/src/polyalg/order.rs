use std::cmp::Ordering;

use super::{AlgebraError, Monomial};

/// Graded reverse lexicographic order over a variable priority list.
///
/// `priority[0]` is the most significant variable. Ties in total degree are
/// broken at the least significant variable where the exponents differ: the
/// monomial with the *smaller* exponent there is the larger one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    priority: Vec<usize>,
    identity: bool,
}

impl TermOrder {
    /// Grevlex with `x_0 > x_1 > ... > x_{n-1}`.
    pub fn grevlex(nvars: usize) -> Self {
        Self {
            priority: (0..nvars).collect(),
            identity: true,
        }
    }

    pub fn with_priority(priority: Vec<usize>) -> Result<Self, AlgebraError> {
        let n = priority.len();
        let mut seen = vec![false; n];
        for &v in &priority {
            if v >= n || seen[v] {
                return Err(AlgebraError::InvalidPriority(priority.clone()));
            }
            seen[v] = true;
        }
        let identity = priority.iter().enumerate().all(|(i, &v)| i == v);
        Ok(Self { priority, identity })
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// Same order with one more variable ranked below all existing ones.
    pub fn extended(&self) -> Self {
        let mut priority = self.priority.clone();
        priority.push(priority.len());
        Self {
            priority,
            identity: self.identity,
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        if self.identity {
            for i in (0..self.priority.len()).rev() {
                match a.exponent(i).cmp(&b.exponent(i)) {
                    Ordering::Equal => continue,
                    other => return other.reverse(),
                }
            }
        } else {
            for &i in self.priority.iter().rev() {
                match a.exponent(i).cmp(&b.exponent(i)) {
                    Ordering::Equal => continue,
                    other => return other.reverse(),
                }
            }
        }
        Ordering::Equal
    }
}

/// Compares two monomials under `order`.
pub fn compare(order: &TermOrder, a: &Monomial, b: &Monomial) -> Ordering {
    order.cmp(a, b)
}
