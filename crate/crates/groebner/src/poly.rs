//! Sparse multivariate polynomials as ordered term lists.
//!
//! Terms are kept strictly descending in the active order with no zero
//! coefficients, so the leading term is always `terms[0]` and equality is
//! structural. The zero polynomial is the empty list.

use std::cmp::Ordering;

use crate::field::{CoefficientField, FieldElement, FieldError};
use crate::monomial::{Monomial, MonomialError, MonomialOrder};

/// Errors from polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolynomialError {
    /// A head-term query or S-polynomial on the zero polynomial.
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    /// Operands carry different ring contexts (field, order or arity).
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
}

/// A polynomial over one coefficient field and term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: CoefficientField,
    order: MonomialOrder,
    terms: Vec<(FieldElement, Monomial)>,
}

fn cmp_in(order: &MonomialOrder, a: &Monomial, b: &Monomial) -> Ordering {
    order.cmp(a, b).expect("uniform arity inside a polynomial")
}

impl Polynomial {
    /// The zero polynomial of the given ring.
    pub fn zero(field: CoefficientField, order: MonomialOrder) -> Self {
        Polynomial { field, order, terms: Vec::new() }
    }

    /// Builds a polynomial from arbitrary terms: merges duplicates, drops
    /// zeros and sorts descending.
    pub fn from_terms(
        field: CoefficientField,
        order: MonomialOrder,
        mut terms: Vec<(FieldElement, Monomial)>,
    ) -> Result<Self, PolynomialError> {
        for (c, m) in &terms {
            if !field.contains(c) {
                return Err(FieldError::FieldMismatch.into());
            }
            if m.arity() != order.arity {
                return Err(MonomialError::ArityMismatch.into());
            }
        }
        terms.sort_by(|a, b| cmp_in(&order, &b.1, &a.1));
        let mut merged: Vec<(FieldElement, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match merged.last_mut() {
                Some(last) if last.1 == m => {
                    last.0 = field.add(&last.0, &c)?;
                }
                _ => merged.push((c, m)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        Ok(Polynomial { field, order, terms: merged })
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(FieldElement, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        self.field == other.field && self.order == other.order
    }

    /// Leading power product.
    pub fn lpp(&self) -> Result<&Monomial, PolynomialError> {
        self.terms
            .first()
            .map(|(_, m)| m)
            .ok_or(PolynomialError::ZeroPolynomial)
    }

    /// Leading coefficient.
    pub fn lc(&self) -> Result<&FieldElement, PolynomialError> {
        self.terms
            .first()
            .map(|(c, _)| c)
            .ok_or(PolynomialError::ZeroPolynomial)
    }

    /// Leading term.
    pub fn lm(&self) -> Result<(&FieldElement, &Monomial), PolynomialError> {
        self.terms
            .first()
            .map(|(c, m)| (c, m))
            .ok_or(PolynomialError::ZeroPolynomial)
    }

    /// Total degree: the maximum term degree.
    pub fn degree(&self) -> Result<u32, PolynomialError> {
        self.terms
            .iter()
            .map(|(_, m)| m.degree())
            .max()
            .ok_or(PolynomialError::ZeroPolynomial)
    }

    /// True when every term has the same total degree (vacuously for zero).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, head)) => {
                let d = head.degree();
                self.terms.iter().all(|(_, m)| m.degree() == d)
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolynomialError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(PolynomialError::RingMismatch)
        }
    }

    /// `self + other` by linear merge of the sorted term lists.
    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolynomialError> {
        self.check_ring(other)?;
        let one = self.field.one();
        let unit = Monomial::one(self.order.arity);
        self.add_scaled(&one, &unit, other)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolynomialError> {
        self.check_ring(other)?;
        let minus_one = self.field.neg(&self.field.one())?;
        let unit = Monomial::one(self.order.arity);
        self.add_scaled(&minus_one, &unit, other)
    }

    pub fn neg(&self) -> Result<Polynomial, PolynomialError> {
        let mut out = self.clone();
        for (c, _) in &mut out.terms {
            *c = self.field.neg(c)?;
        }
        Ok(out)
    }

    /// `c · x^m · self` (term-wise scaling; zero `c` gives zero).
    pub fn scale_mono(&self, c: &FieldElement, m: &Monomial) -> Result<Polynomial, PolynomialError> {
        if c.is_zero() {
            return Ok(Polynomial::zero(self.field, self.order));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (tc, tm) in &self.terms {
            terms.push((self.field.mul(tc, c)?, tm.mul(m)?));
        }
        Ok(Polynomial { field: self.field, order: self.order, terms })
    }

    /// `self + c · x^m · other` in a single merge; the workhorse of every
    /// reduction loop.
    pub fn add_scaled(
        &self,
        c: &FieldElement,
        m: &Monomial,
        other: &Polynomial,
    ) -> Result<Polynomial, PolynomialError> {
        self.check_ring(other)?;
        if c.is_zero() || other.is_zero() {
            return Ok(self.clone());
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        let mut b_head: Option<(FieldElement, Monomial)> = None;
        loop {
            if b_head.is_none() {
                if let Some((bc, bm)) = b.next() {
                    b_head = Some((self.field.mul(bc, c)?, bm.mul(m)?));
                }
            }
            match (a.peek(), &b_head) {
                (None, None) => break,
                (Some((ac, am)), None) => {
                    out.push(((*ac).clone(), am.clone()));
                    a.next();
                }
                (None, Some(_)) => {
                    out.push(b_head.take().unwrap());
                }
                (Some((ac, am)), Some((bc, bm))) => match cmp_in(&self.order, am, bm) {
                    Ordering::Greater => {
                        out.push(((*ac).clone(), am.clone()));
                        a.next();
                    }
                    Ordering::Less => {
                        out.push(b_head.take().unwrap());
                    }
                    Ordering::Equal => {
                        let sum = self.field.add(ac, bc)?;
                        if !sum.is_zero() {
                            out.push((sum, am.clone()));
                        }
                        a.next();
                        b_head = None;
                    }
                },
            }
        }
        Ok(Polynomial { field: self.field, order: self.order, terms: out })
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Result<Polynomial, PolynomialError> {
        match self.lc() {
            Err(_) => Ok(self.clone()),
            Ok(lc) => {
                let inv = self.field.inv(lc)?;
                self.scale_mono(&inv, &Monomial::one(self.order.arity))
            }
        }
    }
}

/// The cofactors that cancel the leading terms of `f` and `g`: each side
/// `coef · x^mono · poly` has leading term exactly `1 · lcm`.
pub fn spoly_cofactors(
    f: &Polynomial,
    g: &Polynomial,
) -> Result<((FieldElement, Monomial), (FieldElement, Monomial), Monomial), PolynomialError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolynomialError::ZeroPolynomial);
    }
    f.check_ring(g)?;
    let lcm = f.lpp()?.lcm(g.lpp()?)?;
    let u = (f.field().inv(f.lc()?)?, lcm.div(f.lpp()?)?);
    let v = (g.field().inv(g.lc()?)?, lcm.div(g.lpp()?)?);
    Ok((u, v, lcm))
}

/// The S-polynomial `u·f − v·g`, with cofactors per [`spoly_cofactors`];
/// the leading terms cancel by construction.
pub fn spoly_plain(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolynomialError> {
    let ((uc, um), (vc, vm), _) = spoly_cofactors(f, g)?;
    let left = f.scale_mono(&uc, &um)?;
    let neg_vc = f.field().neg(&vc)?;
    left.add_scaled(&neg_vc, &vm, g)
}

/// Fully reduces `f` modulo `basis`: no monomial of the result is divisible
/// by any basis leading power product. Zero basis members are skipped.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    normal_form_counting(f, basis, &mut 0)
}

/// [`normal_form`] that also counts reduction steps.
pub fn normal_form_counting(f: &Polynomial, basis: &[Polynomial], steps: &mut u64) -> Polynomial {
    let field = f.field();
    let mut tail = f.clone();
    let mut out: Vec<(FieldElement, Monomial)> = Vec::new();
    'head: while let Some((c, t)) = tail.terms.first().cloned() {
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let glpp = g.lpp().expect("nonzero");
            if glpp.divides(&t).expect("uniform arity") {
                let gamma = t.div(glpp).expect("divides");
                let coef = field
                    .neg(&field.div(&c, g.lc().expect("nonzero")).expect("same field"))
                    .expect("same field");
                tail = tail.add_scaled(&coef, &gamma, g).expect("same ring");
                *steps += 1;
                continue 'head;
            }
        }
        // Head term irreducible: it is part of the normal form.
        out.push((c, t));
        tail.terms.remove(0);
    }
    Polynomial { field, order: f.order(), terms: out }
}
