//! Power products of a fixed set of variables and admissible term orders.
//!
//! A monomial is an exponent vector; the ring arity is the vector length.
//! Variables are ranked by declaration order, so `x1 > x2 > ... > xn` in
//! every supported order.

use std::cmp::Ordering;

/// Errors from monomial arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum MonomialError {
    /// Operands have different arities.
    #[error("monomial arity mismatch")]
    ArityMismatch,
    /// `div` was asked for a quotient that does not exist.
    #[error("monomial is not divisible by the given divisor")]
    NotDivisible,
}

/// An exponent vector of fixed arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial (all exponents zero).
    pub fn one(arity: usize) -> Self {
        Monomial { exps: vec![0; arity] }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Total degree: the sum of all exponents.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    fn check(&self, other: &Monomial) -> Result<(), MonomialError> {
        if self.exps.len() == other.exps.len() {
            Ok(())
        } else {
            Err(MonomialError::ArityMismatch)
        }
    }

    /// Exponent-wise sum.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.check(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// True when `self` divides `other` (exponent-wise ≤).
    pub fn divides(&self, other: &Monomial) -> Result<bool, MonomialError> {
        self.check(other)?;
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    /// Exponent-wise difference `self / other`.
    pub fn div(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        if !other.divides(self)? {
            return Err(MonomialError::NotDivisible);
        }
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Exponent-wise maximum.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.check(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        })
    }
}

/// The supported admissible orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OrderKind {
    Lex,
    GrLex,
    #[default]
    GrevLex,
}

/// A term order over a ring of fixed arity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub arity: usize,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, arity: usize) -> Self {
        MonomialOrder { kind, arity }
    }

    /// Graded reverse lexicographic order, the conventional default.
    pub fn grevlex(arity: usize) -> Self {
        MonomialOrder { kind: OrderKind::GrevLex, arity }
    }

    /// Compares two monomials under this order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, MonomialError> {
        if a.arity() != self.arity || b.arity() != self.arity {
            return Err(MonomialError::ArityMismatch);
        }
        Ok(match self.kind {
            OrderKind::Lex => lex_cmp(a.exps(), b.exps()),
            OrderKind::GrLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| lex_cmp(a.exps(), b.exps())),
            OrderKind::GrevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_tail_cmp(a.exps(), b.exps())),
        })
    }
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Grevlex tie-break at equal total degree: the monomial whose last
/// differing exponent is smaller is the greater one.
fn revlex_tail_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}
