//! Recursive-descent parser for the scalar grammar:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' uint)?
//! atom  := uint | 'z1' | 'z2' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::{Param, ParamScalar, Rational};
use crate::error::{KzError, Result};

pub fn parse_scalar(text: &str) -> Result<ParamScalar> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> KzError {
        KzError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<ParamScalar> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<ParamScalar> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                &acc * &rhs
            } else {
                acc.checked_div(&rhs).map_err(|_| KzError::Syntax {
                    position: at,
                    message: "division by zero".to_string(),
                })?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ParamScalar> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<ParamScalar> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("exponent must be a non-negative integer"));
            }
            let e: i32 = digits
                .parse()
                .map_err(|_| self.error("exponent too large"))?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<ParamScalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().parse().expect("ascii digits");
                Ok(ParamScalar::from_rational(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                match name.as_str() {
                    "z1" => Ok(ParamScalar::param(Param::Z1)),
                    "z2" => Ok(ParamScalar::param(Param::Z2)),
                    _ => Err(KzError::UnknownVariable {
                        name,
                        position: start,
                    }),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        let a = parse_scalar("(3/5)*z1^2*z2").unwrap();
        assert_eq!(a.render(), "(3/5)*z1^2*z2");
        let b = parse_scalar("z1 - z2").unwrap();
        assert_eq!(b.numer().len(), 2);
        let c = parse_scalar("(z1^2 - z2^2)/(z1 - z2)").unwrap();
        assert_eq!(c.render(), "z1 + z2");
        assert_eq!(parse_scalar("  - 3 /  5 ").unwrap().render(), "-3/5");
    }

    #[test]
    fn errors_carry_positions() {
        match parse_scalar("z1 + x3") {
            Err(KzError::UnknownVariable { name, position }) => {
                assert_eq!(name, "x3");
                assert_eq!(position, 5);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_scalar("(z1"), Err(KzError::Syntax { position: 3, .. })));
        assert!(matches!(parse_scalar("z1^-2"), Err(KzError::Syntax { .. })));
        assert!(matches!(parse_scalar("z1 2"), Err(KzError::Syntax { .. })));
        assert!(matches!(parse_scalar("1/(z1 - z1)"), Err(KzError::Syntax { .. })));
        assert!(parse_scalar("").is_err());
    }
}
