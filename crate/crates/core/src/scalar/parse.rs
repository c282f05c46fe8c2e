//! Scalar expression grammar:
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := factor ("*" factor)*
//! factor   := rational | "zeta" ("^" integer)? | "(" expr ")" | "-" factor
//! rational := integer ("/" positive-integer)?
//! ```
//!
//! Whitespace is insignificant. `zeta` is only legal in a cyclotomic field;
//! exponents may be negative.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{Cyclo, Field, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("parse error at byte {offset}: expected {}", expected.join(" | "))]
    Syntax { offset: usize, expected: Vec<&'static str> },
    #[error("`zeta` at byte {offset} is not an element of the rational field")]
    FieldMismatch { offset: usize },
    #[error("division by zero at byte {offset}")]
    ZeroDenominator { offset: usize },
}

impl ScalarParseError {
    pub fn offset(&self) -> usize {
        match self {
            ScalarParseError::Syntax { offset, .. }
            | ScalarParseError::FieldMismatch { offset }
            | ScalarParseError::ZeroDenominator { offset } => *offset,
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: FieldSpec,
}

type PResult = Result<Cyclo, ScalarParseError>;

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail(&self, expected: Vec<&'static str>) -> ScalarParseError {
        ScalarParseError::Syntax { offset: self.pos, expected }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).ok()?;
        s.parse().ok()
    }

    fn expr(&mut self) -> PResult {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add_ref(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub_ref(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul_ref(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> PResult {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.fail(vec!["\")\"", "\"+\"", "\"-\"", "\"*\""]));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'z') => {
                let start = self.pos;
                if !self.src[self.pos..].starts_with(b"zeta") {
                    return Err(self.fail(vec!["\"zeta\""]));
                }
                self.pos += 4;
                if self.field.order == 1 {
                    return Err(ScalarParseError::FieldMismatch { offset: start });
                }
                let mut exp: i64 = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let neg = if self.peek() == Some(b'-') {
                        self.pos += 1;
                        true
                    } else {
                        false
                    };
                    let e = self.digits().ok_or_else(|| self.fail(vec!["integer"]))?;
                    let e = (e % BigInt::from(self.field.order)).to_string().parse::<i64>().unwrap_or(0);
                    exp = if neg { -e } else { e };
                }
                Ok(Cyclo::zeta_pow(self.field.order, exp))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits().expect("digit present");
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    let den = self.digits().ok_or_else(|| self.fail(vec!["positive integer"]))?;
                    if den.is_zero() {
                        return Err(ScalarParseError::ZeroDenominator { offset: at });
                    }
                    Ok(Cyclo::from_rational(BigRational::new(num, den)))
                } else {
                    Ok(Cyclo::from_rational(BigRational::new(num, BigInt::one())))
                }
            }
            _ => Err(self.fail(vec!["integer", "\"zeta\"", "\"(\"", "\"-\""])),
        }
    }
}

/// Parse a scalar expression into the canonical element of `field`.
pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<Cyclo, ScalarParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, field };
    let value = p.expr()?;
    if p.peek().is_some() {
        return Err(p.fail(vec!["\"+\"", "\"-\"", "\"*\"", "end of input"]));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(parse_scalar("3/4", FieldSpec::RATIONAL).unwrap(), Cyclo::from_ratio(3, 4));
        assert_eq!(parse_scalar("zeta^2", FieldSpec::cyclotomic(4)).unwrap(), Cyclo::from_int(-1));
        assert!(matches!(
            parse_scalar("1 - 2*zeta", FieldSpec::RATIONAL),
            Err(ScalarParseError::FieldMismatch { offset: 6 })
        ));
    }

    #[test]
    fn grammar_corners() {
        let f = FieldSpec::cyclotomic(3);
        assert_eq!(parse_scalar(" - ( 1 + zeta ) ", f).unwrap(), -(Cyclo::one() + Cyclo::zeta(3)));
        assert_eq!(parse_scalar("--2", f).unwrap(), Cyclo::from_int(2));
        assert_eq!(parse_scalar("zeta^-1", f).unwrap(), Cyclo::zeta_pow(3, 2));
        assert_eq!(parse_scalar("2*3/4*zeta", f).unwrap(), Cyclo::from_ratio(3, 2).mul_ref(&Cyclo::zeta(3)));
    }

    #[test]
    fn errors_carry_offsets() {
        let f = FieldSpec::cyclotomic(4);
        let e = parse_scalar("1 + ", f).unwrap_err();
        assert_eq!(e.offset(), 4);
        let e = parse_scalar("1/0", f).unwrap_err();
        assert_eq!(e, ScalarParseError::ZeroDenominator { offset: 2 });
        let e = parse_scalar("(1 + 2", f).unwrap_err();
        assert!(matches!(e, ScalarParseError::Syntax { offset: 6, .. }));
        let e = parse_scalar("1 2", f).unwrap_err();
        assert!(matches!(e, ScalarParseError::Syntax { offset: 2, .. }));
        assert!(parse_scalar("zet", f).is_err());
        assert!(parse_scalar("", f).is_err());
    }

    fn arb_scalar(order: u32) -> impl Strategy<Value = Cyclo> {
        let deg = super::super::cyclotomic_polynomial(order).len() - 1;
        proptest::collection::vec((-20i64..20, 1i64..7), deg).prop_map(move |cs| {
            let coeffs = cs.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect();
            Cyclo::from_poly(order, coeffs)
        })
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(
            (order, x) in prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8])
                .prop_flat_map(|o| (Just(o), arb_scalar(o)))
        ) {
            let back = parse_scalar(&x.to_string(), FieldSpec::cyclotomic(order)).unwrap();
            prop_assert_eq!(back, x);
        }
    }
}
