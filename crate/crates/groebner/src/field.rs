//! Coefficient fields: the rationals and prime fields GF(p).
//!
//! Elements are kept in canonical form at all times: rationals in lowest
//! terms with a positive denominator, modular residues in `0..p`. Every
//! operation takes the field explicitly so mixing elements of different
//! fields is a checked error rather than silent nonsense.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arithmetic errors raised by field operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    /// The operands belong to different fields.
    #[error("mixed elements of different coefficient fields")]
    FieldMismatch,
    /// Division by or inversion of zero.
    #[error("division by zero")]
    DivisionByZero,
    /// A prime field was requested with a composite or trivial modulus.
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
}

/// A coefficient field: ℚ or GF(p) for a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    /// The rational numbers with arbitrary-precision coefficients.
    Rationals,
    /// The integers modulo a prime.
    Prime(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b).
fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

impl CoefficientField {
    /// Builds GF(p), verifying primality of the modulus by trial division.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if is_prime(p) {
            Ok(CoefficientField::Prime(p))
        } else {
            Err(FieldError::CompositeModulus(p))
        }
    }

    /// The additive identity.
    pub fn zero(&self) -> FieldElement {
        match self {
            CoefficientField::Rationals => FieldElement::Rational(BigRational::zero()),
            CoefficientField::Prime(_) => FieldElement::Modular(0),
        }
    }

    /// The multiplicative identity.
    pub fn one(&self) -> FieldElement {
        match self {
            CoefficientField::Rationals => FieldElement::Rational(BigRational::one()),
            CoefficientField::Prime(_) => FieldElement::Modular(1),
        }
    }

    /// Embeds a signed integer; negative values are reduced to the
    /// canonical residue over GF(p).
    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self {
            CoefficientField::Rationals => {
                FieldElement::Rational(BigRational::from_integer(BigInt::from(n)))
            }
            CoefficientField::Prime(p) => {
                FieldElement::Modular(n.rem_euclid(*p as i64) as u64)
            }
        }
    }

    /// Builds a rational from a numerator/denominator pair, or the residue
    /// num * den^-1 over GF(p).
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElement, FieldError> {
        if den == 0 {
            return Err(FieldError::DivisionByZero);
        }
        match self {
            CoefficientField::Rationals => Ok(FieldElement::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            CoefficientField::Prime(_) => {
                self.div(&self.from_i64(num), &self.from_i64(den))
            }
        }
    }

    /// True when the element belongs to this field and is canonical.
    pub fn contains(&self, a: &FieldElement) -> bool {
        match (self, a) {
            (CoefficientField::Rationals, FieldElement::Rational(r)) => {
                r.denom().is_positive()
                    && r.numer().gcd(r.denom()).is_one()
            }
            (CoefficientField::Prime(p), FieldElement::Modular(r)) => r < p,
            _ => false,
        }
    }

    fn check(&self, a: &FieldElement, b: &FieldElement) -> Result<(), FieldError> {
        if self.contains(a) && self.contains(b) {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a, b)?;
        Ok(match (a, b) {
            (FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x + y)
            }
            (FieldElement::Modular(x), FieldElement::Modular(y)) => {
                let p = self.modulus();
                FieldElement::Modular((x + y) % p)
            }
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.add(a, &self.neg(b)?)
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a, a)?;
        Ok(match a {
            FieldElement::Rational(x) => FieldElement::Rational(-x),
            FieldElement::Modular(x) => {
                let p = self.modulus();
                FieldElement::Modular(if *x == 0 { 0 } else { p - x })
            }
        })
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a, b)?;
        Ok(match (a, b) {
            (FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x * y)
            }
            (FieldElement::Modular(x), FieldElement::Modular(y)) => {
                let p = self.modulus() as u128;
                FieldElement::Modular(((*x as u128 * *y as u128) % p) as u64)
            }
            _ => unreachable!(),
        })
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a, a)?;
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match a {
            FieldElement::Rational(x) => FieldElement::Rational(x.recip()),
            FieldElement::Modular(x) => {
                let p = self.modulus();
                let (_, s, _) = extended_gcd(*x as i64, p as i64);
                FieldElement::Modular(s.rem_euclid(p as i64) as u64)
            }
        })
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.mul(a, &self.inv(b)?)
    }

    fn modulus(&self) -> u64 {
        match self {
            CoefficientField::Prime(p) => *p,
            CoefficientField::Rationals => unreachable!("modulus of the rationals"),
        }
    }
}

/// A canonical element of a [`CoefficientField`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    /// A rational in lowest terms with positive denominator.
    Rational(BigRational),
    /// A residue in `0..p`.
    Modular(u64),
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Modular(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Modular(r) => *r == 1,
        }
    }
}
