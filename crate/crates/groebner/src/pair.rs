//! Critical pairs of labeled polynomials.
//!
//! A pair is oriented so its first side carries the larger multiplied
//! signature, which is then the signature of the pair's S-polynomial. When
//! both sides multiply to the same signature the true signature of the
//! difference is unknowable without full module vectors, so such pairs
//! cannot produce a labeled S-polynomial.

use std::cmp::Ordering;

use crate::field::FieldElement;
use crate::monomial::Monomial;
use crate::poly::{spoly_cofactors, PolynomialError};
use crate::signature::{LabeledPoly, Signature};
use crate::EngineError;

/// An oriented critical pair: `u·lm(f) = v·lm(g) = 1·lcm`.
#[derive(Debug, Clone)]
pub struct CriticalPair {
    pub u: (FieldElement, Monomial),
    pub f: LabeledPoly,
    pub v: (FieldElement, Monomial),
    pub g: LabeledPoly,
    pub lcm: Monomial,
    pub degree: u32,
    /// Creation sequence number, used for oldest-first tie-breaks.
    pub seq: u64,
}

impl CriticalPair {
    /// Signature of the first (larger) side's product.
    pub fn sig_first(&self) -> Signature {
        self.f.sig.mul(&self.u.1)
    }

    /// Signature of the second side's product.
    pub fn sig_second(&self) -> Signature {
        self.g.sig.mul(&self.v.1)
    }

    /// True when both sides multiply to the same signature.
    pub fn is_signature_tie(&self) -> bool {
        let ord = self.f.poly.order();
        self.sig_first().cmp_in(&self.sig_second(), &ord) == Ordering::Equal
    }

    /// The smaller of the two generator indices involved.
    pub fn min_index(&self) -> usize {
        self.f.sig.index.min(self.g.sig.index)
    }
}

/// Builds the critical pair of two nonzero labeled polynomials, oriented so
/// the first side has the greater (or equal) multiplied signature.
pub fn make_pair(f: &LabeledPoly, g: &LabeledPoly) -> Result<CriticalPair, PolynomialError> {
    let (u, v, lcm) = spoly_cofactors(&f.poly, &g.poly)?;
    let ord = f.poly.order();
    let su = f.sig.mul(&u.1);
    let sv = g.sig.mul(&v.1);
    let degree = lcm.degree();
    let pair = if su.cmp_in(&sv, &ord) == Ordering::Less {
        CriticalPair { u: v, f: g.clone(), v: u, g: f.clone(), lcm, degree, seq: 0 }
    } else {
        CriticalPair { u, f: f.clone(), v, g: g.clone(), lcm, degree, seq: 0 }
    };
    Ok(pair)
}

/// The labeled S-polynomial of a pair: polynomial part `u·f − v·g`,
/// signature taken from the dominating side, creation ordinal `gen`.
pub fn spoly_labeled(pair: &CriticalPair, gen: u64) -> Result<LabeledPoly, EngineError> {
    if pair.is_signature_tie() {
        return Err(EngineError::SignatureTie);
    }
    let field = pair.f.poly.field();
    let left = pair
        .f
        .poly
        .scale_mono(&pair.u.0, &pair.u.1)
        .expect("pair sides share a ring");
    let neg_vc = field.neg(&pair.v.0).expect("canonical coefficient");
    let poly = left
        .add_scaled(&neg_vc, &pair.v.1, &pair.g.poly)
        .expect("pair sides share a ring");
    Ok(LabeledPoly::new(pair.sig_first(), poly, gen))
}
