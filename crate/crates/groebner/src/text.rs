//! Text form of rings, polynomials and input systems.
//!
//! A system file is a header followed by one polynomial per line:
//!
//! ```text
//! # comment
//! vars: x y z
//! field: gf 23        (or: field: q)
//! order: grevlex      (or: lex, grlex)
//! x^2 + 18*x*y + 7*z^2
//! ```
//!
//! Monomials are written `x^2*y*z^3` with explicit `*`; coefficients are
//! integers or fractions like `3/2`. The renderer emits exactly this
//! format, so printed polynomials parse back unchanged.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::{CoefficientField, FieldElement};
use crate::monomial::{Monomial, MonomialOrder, OrderKind};
use crate::poly::Polynomial;
use crate::signature::Signature;

/// A parse failure with its position in the input text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError { line, col, msg: msg.into() }
    }
}

/// A polynomial ring context: named variables, coefficient field and term
/// order. Variable declaration order fixes the variable ranking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<String>,
    field: CoefficientField,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(vars: Vec<String>, field: CoefficientField, kind: OrderKind) -> Result<Self, ParseError> {
        if vars.is_empty() {
            return Err(ParseError::new(1, 1, "no variables declared"));
        }
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(ParseError::new(1, 1, format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(ParseError::new(1, 1, format!("duplicate variable `{v}`")));
            }
        }
        let order = MonomialOrder::new(kind, vars.len());
        Ok(Ring { vars, field, order })
    }

    /// Builds a ring from the textual header values, e.g.
    /// `("x y z", "gf 23", "grevlex")`.
    pub fn parse_header(vars: &str, field: &str, order: &str) -> Result<Self, ParseError> {
        let vars = parse_vars_value(vars, 1, 1)?;
        let field = parse_field_value(field, 1, 1)?;
        let kind = parse_order_value(order, 1, 1)?;
        Ring::new(vars, field, kind)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_vars_value(s: &str, line: usize, col: usize) -> Result<Vec<String>, ParseError> {
    let vars: Vec<String> = s.split_whitespace().map(str::to_owned).collect();
    if vars.is_empty() {
        return Err(ParseError::new(line, col, "expected at least one variable"));
    }
    for (i, v) in vars.iter().enumerate() {
        if !is_identifier(v) {
            return Err(ParseError::new(line, col, format!("invalid variable name `{v}`")));
        }
        if vars[..i].contains(v) {
            return Err(ParseError::new(line, col, format!("duplicate variable `{v}`")));
        }
    }
    Ok(vars)
}

fn parse_field_value(s: &str, line: usize, col: usize) -> Result<CoefficientField, ParseError> {
    let words: Vec<&str> = s.split_whitespace().collect();
    match words.as_slice() {
        ["q"] | ["Q"] => Ok(CoefficientField::Rationals),
        ["gf", p] | ["GF", p] | ["Gf", p] => {
            let modulus: u64 = p
                .parse()
                .map_err(|_| ParseError::new(line, col, format!("invalid modulus `{p}`")))?;
            CoefficientField::prime(modulus)
                .map_err(|_| ParseError::new(line, col, format!("modulus {modulus} is not prime")))
        }
        _ => Err(ParseError::new(line, col, format!("unknown field `{s}`, expected `q` or `gf P`"))),
    }
}

fn parse_order_value(s: &str, line: usize, col: usize) -> Result<OrderKind, ParseError> {
    match s.trim() {
        "lex" => Ok(OrderKind::Lex),
        "grlex" => Ok(OrderKind::GrLex),
        "grevlex" => Ok(OrderKind::GrevLex),
        other => Err(ParseError::new(
            line,
            col,
            format!("unknown order `{other}`, expected lex, grlex or grevlex"),
        )),
    }
}

/// Parses a complete system file into its ring and generator list.
pub fn parse_system(text: &str) -> Result<(Ring, Vec<Polynomial>), ParseError> {
    let mut ring: Option<Ring> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut field: Option<CoefficientField> = None;
    let mut order: Option<OrderKind> = None;
    let mut polys: Vec<Polynomial> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        if ring.is_none() {
            let (key, value, value_col) = split_header(content, line_no)?;
            match key {
                "vars" => vars = Some(parse_vars_value(value, line_no, value_col)?),
                "field" => field = Some(parse_field_value(value, line_no, value_col)?),
                "order" => order = Some(parse_order_value(value, line_no, value_col)?),
                other => {
                    return Err(ParseError::new(
                        line_no,
                        1,
                        format!("unknown header key `{other}` (expected vars, field, order)"),
                    ))
                }
            }
            if let (Some(v), Some(f), Some(o)) = (&vars, &field, &order) {
                ring = Some(Ring::new(v.clone(), *f, *o)?);
            }
            continue;
        }
        let r = ring.as_ref().unwrap();
        let poly = parse_polynomial_at(r, content, line_no)?;
        if poly.is_zero() {
            return Err(ParseError::new(line_no, 1, "zero generator"));
        }
        polys.push(poly);
    }

    let ring = ring.ok_or_else(|| {
        ParseError::new(
            text.lines().count().max(1),
            1,
            "incomplete header: vars, field and order are all required",
        )
    })?;
    if polys.is_empty() {
        return Err(ParseError::new(
            text.lines().count().max(1),
            1,
            "empty system: no generator polynomials",
        ))
    }
    Ok((ring, polys))
}

fn split_header(content: &str, line: usize) -> Result<(&str, &str, usize), ParseError> {
    match content.split_once(':') {
        Some((key, value)) => {
            let value_col = content.find(':').unwrap() + 2;
            Ok((key.trim(), value.trim(), value_col))
        }
        None => Err(ParseError::new(
            line,
            1,
            "expected a `key: value` header line before the first polynomial",
        )),
    }
}

/// Parses one polynomial in the ring's variables.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, ParseError> {
    parse_polynomial_at(ring, text, 1)
}

fn parse_polynomial_at(ring: &Ring, text: &str, line: usize) -> Result<Polynomial, ParseError> {
    PolyParser { ring, line, chars: text.char_indices().collect(), pos: 0 }.parse()
}

struct PolyParser<'a> {
    ring: &'a Ring,
    line: usize,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn col(&self) -> usize {
        match self.chars.get(self.pos) {
            Some(&(byte, _)) => byte + 1,
            None => self.chars.last().map_or(1, |&(byte, _)| byte + 2),
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col(), msg)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn parse(mut self) -> Result<Polynomial, ParseError> {
        let mut terms: Vec<(FieldElement, Monomial)> = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.err("empty polynomial"));
        }
        let mut negative = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let (c, m) = self.parse_term(negative)?;
            terms.push((c, m));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => {
                    self.bump();
                    negative = false;
                }
                Some('-') => {
                    self.bump();
                    negative = true;
                }
                Some(c) => return Err(self.err(format!("expected `+` or `-`, found `{c}`"))),
            }
        }
        Polynomial::from_terms(self.ring.field(), self.ring.order(), terms)
            .map_err(|e| ParseError::new(self.line, 1, e.to_string()))
    }

    fn parse_term(&mut self, negative: bool) -> Result<(FieldElement, Monomial), ParseError> {
        self.skip_ws();
        let field = self.ring.field();
        let mut coef: Option<FieldElement> = None;
        let mut exps = vec![0u32; self.ring.arity()];
        let mut saw_factor = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    if coef.is_some() || saw_factor {
                        return Err(self.err("unexpected number inside a term"));
                    }
                    let num = self.parse_integer()?;
                    let value = if self.peek() == Some('/') {
                        self.bump();
                        let den_col = self.col();
                        let den = self.parse_integer()?;
                        if den.is_zero() {
                            return Err(ParseError::new(self.line, den_col, "zero denominator"));
                        }
                        ratio_element(&field, num, den)
                    } else {
                        bigint_element(&field, num)
                    };
                    coef = Some(value);
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let (idx, exp) = self.parse_factor()?;
                    exps[idx] += exp;
                    saw_factor = true;
                }
                _ => {
                    return Err(self.err("expected a coefficient or variable"));
                }
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
            } else {
                break;
            }
        }
        let mut c = coef.unwrap_or_else(|| field.one());
        if negative {
            c = field.neg(&c).expect("canonical element");
        }
        Ok((c, Monomial::new(exps)))
    }

    fn parse_integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Ok(digits.parse().expect("digits form an integer"))
    }

    fn parse_factor(&mut self) -> Result<(usize, u32), ParseError> {
        let name_col = self.col();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        let idx = self.ring.var_index(&name).ok_or_else(|| {
            ParseError::new(self.line, name_col, format!("unknown variable `{name}`"))
        })?;
        let exp = if self.peek() == Some('^') {
            self.bump();
            let exp_col = self.col();
            let n = self.parse_integer()?;
            n.to_u32()
                .ok_or_else(|| ParseError::new(self.line, exp_col, "exponent too large"))?
        } else {
            1
        };
        Ok((idx, exp))
    }
}

fn bigint_element(field: &CoefficientField, n: BigInt) -> FieldElement {
    match field {
        CoefficientField::Rationals => FieldElement::Rational(BigRational::from_integer(n)),
        CoefficientField::Prime(p) => {
            let m = BigInt::from(*p);
            let r = ((n % &m) + &m) % &m;
            FieldElement::Modular(r.to_u64().expect("residue fits"))
        }
    }
}

fn ratio_element(field: &CoefficientField, num: BigInt, den: BigInt) -> FieldElement {
    match field {
        CoefficientField::Rationals => FieldElement::Rational(BigRational::new(num, den)),
        CoefficientField::Prime(_) => {
            let n = bigint_element(field, num);
            let d = bigint_element(field, den);
            field.div(&n, &d).expect("nonzero denominator checked")
        }
    }
}

/// Renders a monomial like `x^2*y*z^3`; the unit monomial renders as `1`.
pub fn render_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (name, &e) in ring.vars().iter().zip(m.exps()) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".to_owned()
    } else {
        parts.join("*")
    }
}

/// Renders a signature like `z*e2` (`e2` when the monomial part is 1).
pub fn render_signature(ring: &Ring, sig: &Signature) -> String {
    if sig.monomial.is_one() {
        format!("e{}", sig.index)
    } else {
        format!("{}*e{}", render_monomial(ring, &sig.monomial), sig.index)
    }
}

/// Renders a polynomial in descending term order; parses back unchanged.
pub fn render_polynomial(ring: &Ring, f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (i, (c, m)) in f.terms().iter().enumerate() {
        let (negative, abs) = coefficient_string(c);
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if m.is_one() {
            out.push_str(&abs);
        } else if abs == "1" {
            out.push_str(&render_monomial(ring, m));
        } else {
            out.push_str(&abs);
            out.push('*');
            out.push_str(&render_monomial(ring, m));
        }
    }
    out
}

/// Splits a coefficient into a sign flag and its absolute-value text.
/// Modular residues are already canonical and never negative.
fn coefficient_string(c: &FieldElement) -> (bool, String) {
    match c {
        FieldElement::Modular(r) => (false, r.to_string()),
        FieldElement::Rational(r) => {
            let abs = r.abs();
            let text = if abs.denom().is_one() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            (r.is_negative(), text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_prime_field_header_example() {
        let (ring, polys) = parse_system(
            "vars: x y z\nfield: gf 23\norder: grevlex\nx^2 + 18*x*y + 19*y^2 + 8*x*z + 5*y*z + 7*z^2\n",
        )
        .unwrap();
        assert_eq!(ring.field(), CoefficientField::Prime(23));
        assert_eq!(ring.order().kind, OrderKind::GrevLex);
        assert_eq!(polys.len(), 1);
        assert_eq!(
            render_polynomial(&ring, &polys[0]),
            "x^2 + 18*x*y + 19*y^2 + 8*x*z + 5*y*z + 7*z^2"
        );
    }

    #[test]
    fn parses_the_rational_header_example() {
        let (ring, polys) =
            parse_system("vars: x y\nfield: q\norder: grevlex\nx^2 + x*y\n").unwrap();
        assert_eq!(ring.field(), CoefficientField::Rationals);
        assert_eq!(render_polynomial(&ring, &polys[0]), "x^2 + x*y");
    }

    #[test]
    fn zero_generator_is_rejected() {
        let err = parse_system("vars: x\nfield: q\norder: lex\n0\n").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.msg.contains("zero generator"), "{}", err.msg);
        // Cancellation to zero is caught the same way.
        let err = parse_system("vars: x\nfield: q\norder: lex\nx - x\n").unwrap_err();
        assert!(err.msg.contains("zero generator"));
    }

    #[test]
    fn header_faults_carry_positions() {
        let err = parse_system("vars: x\nfield: gf 10\norder: lex\nx\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.msg.contains("not prime"), "{}", err.msg);

        let err = parse_system("vars: x\nfield: q\norder: fancy\nx\n").unwrap_err();
        assert_eq!(err.line, 3);

        let err = parse_system("vars: x y x\nfield: q\norder: lex\nx\n").unwrap_err();
        assert!(err.msg.contains("duplicate variable"));

        let err = parse_system("vars: x\nfield: q\norder: lex\n").unwrap_err();
        assert!(err.msg.contains("empty system"));
    }

    #[test]
    fn unknown_variables_are_located() {
        let ring = Ring::parse_header("x y", "q", "grevlex").unwrap();
        let err = parse_polynomial(&ring, "x^2 + 3*w").unwrap_err();
        assert_eq!((err.line, err.col), (1, 9));
        assert!(err.msg.contains("unknown variable `w`"));
    }

    #[test]
    fn malformed_terms_are_located() {
        let ring = Ring::parse_header("x y", "q", "grevlex").unwrap();
        assert!(parse_polynomial(&ring, "x + ").is_err());
        assert!(parse_polynomial(&ring, "x ^ 2").is_err());
        assert!(parse_polynomial(&ring, "2*3*x").is_err());
        assert!(parse_polynomial(&ring, "x y").is_err());
        let err = parse_polynomial(&ring, "1/0").unwrap_err();
        assert!(err.msg.contains("zero denominator"));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let (_, polys) = parse_system(
            "# leading comment\n\nvars: x y\nfield: q\norder: lex\n\nx + y # trailing\n# done\n",
        )
        .unwrap();
        assert_eq!(polys.len(), 1);
    }

    #[test]
    fn negative_and_fractional_coefficients() {
        let ring = Ring::parse_header("x y", "q", "grevlex").unwrap();
        let f = parse_polynomial(&ring, "-x^2 + 3/2*x*y - 7").unwrap();
        assert_eq!(render_polynomial(&ring, &f), "-x^2 + 3/2*x*y - 7");
        // Over GF(7), negatives fold into canonical residues.
        let rp = Ring::parse_header("x y", "gf 7", "grevlex").unwrap();
        let g = parse_polynomial(&rp, "-x + 10*y").unwrap();
        assert_eq!(render_polynomial(&rp, &g), "6*x + 3*y");
    }

    #[test]
    fn rendering_round_trips() {
        let ring = Ring::parse_header("x y z", "q", "grevlex").unwrap();
        for text in [
            "x^2*y + x*z^2 - 1/3",
            "-2*x + y - z",
            "x^3 - x^2*y + x*y^2 - y^3",
            "42",
            "0",
        ] {
            let f = parse_polynomial(&ring, text).unwrap();
            let printed = render_polynomial(&ring, &f);
            let g = parse_polynomial(&ring, &printed).unwrap();
            assert_eq!(f, g, "round trip through `{printed}`");
        }
    }

    #[test]
    fn signature_rendering() {
        let ring = Ring::parse_header("x y z", "gf 23", "grevlex").unwrap();
        let z = Monomial::new(vec![0, 0, 1]);
        assert_eq!(render_signature(&ring, &Signature::new(z, 2)), "z*e2");
        assert_eq!(
            render_signature(&ring, &Signature::new(Monomial::one(3), 1)),
            "e1"
        );
    }

    #[test]
    fn terms_render_in_descending_order() {
        let ring = Ring::parse_header("x y z", "q", "grevlex").unwrap();
        let f = parse_polynomial(&ring, "z + y + x + x*z + y^2").unwrap();
        assert_eq!(render_polynomial(&ring, &f), "y^2 + x*z + x + y + z");
    }
}
