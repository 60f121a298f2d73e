//! Signatures and labeled polynomials.
//!
//! A signature `x^α·e_i` is the leading module term of a polynomial's
//! (never materialized) representation in terms of the input generators.
//! Signatures are compared position-over-term: a smaller generator index
//! always wins, so `e_1` is the greatest unit vector; equal indices fall
//! back to the monomial order.

use std::cmp::Ordering;

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// A module monomial `x^α·e_index` with `index` in `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub monomial: Monomial,
    pub index: usize,
}

impl Signature {
    pub fn new(monomial: Monomial, index: usize) -> Self {
        Signature { monomial, index }
    }

    /// The unit signature `e_index`.
    pub fn unit(arity: usize, index: usize) -> Self {
        Signature { monomial: Monomial::one(arity), index }
    }

    /// Position-over-term comparison under the given monomial order.
    pub fn cmp_in(&self, other: &Signature, ord: &MonomialOrder) -> Ordering {
        other
            .index
            .cmp(&self.index)
            .then_with(|| ord.cmp(&self.monomial, &other.monomial).expect("uniform arity"))
    }

    /// The signature of `x^m · F` when `F` carries this signature.
    pub fn mul(&self, m: &Monomial) -> Signature {
        Signature {
            monomial: self.monomial.mul(m).expect("uniform arity"),
            index: self.index,
        }
    }

    /// Signature divisibility: same index and dividing monomial part.
    pub fn divides(&self, other: &Signature) -> bool {
        self.index == other.index
            && self.monomial.divides(&other.monomial).expect("uniform arity")
    }
}

/// A signature, a polynomial (possibly zero) and a creation ordinal.
///
/// The signature and ordinal are fixed at creation: reduction changes only
/// the polynomial part. Zero-polynomial members stay in the basis because
/// their signatures still matter to the rewritten criterion.
#[derive(Debug, Clone)]
pub struct LabeledPoly {
    pub sig: Signature,
    pub poly: Polynomial,
    pub gen: u64,
}

impl LabeledPoly {
    pub fn new(sig: Signature, poly: Polynomial, gen: u64) -> Self {
        LabeledPoly { sig, poly, gen }
    }
}

/// Whether the product `c·x^m·F` is divisible by `B`: some member with a
/// nonzero polynomial and a strictly larger signature index has a leading
/// power product dividing `m · F.sig.monomial`. Such a signature is
/// reachable by a trivial syzygy, so work at it is redundant. The
/// coefficient `c` plays no role beyond being nonzero.
pub fn is_divisible(_c: &crate::field::FieldElement, m: &Monomial, f: &LabeledPoly, basis: &[LabeledPoly]) -> bool {
    let t = f.sig.monomial.mul(m).expect("uniform arity");
    basis.iter().any(|g| {
        g.sig.index > f.sig.index
            && !g.poly.is_zero()
            && g.poly.lpp().expect("nonzero").divides(&t).expect("uniform arity")
    })
}

/// Whether the product `c·x^m·F` is rewritable by `B`: some member created
/// later than `F` has a signature dividing the product's signature. The
/// later member subsumes the work; zero-polynomial members count too.
pub fn is_rewritable(_c: &crate::field::FieldElement, m: &Monomial, f: &LabeledPoly, basis: &[LabeledPoly]) -> bool {
    let t = f.sig.mul(m);
    basis.iter().any(|g| g.gen > f.gen && g.sig.divides(&t))
}
