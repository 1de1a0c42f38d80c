use thiserror::Error;

use super::expr::RingExpr;
use crate::arith::Integer;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {pos}: {msg}")]
pub struct ExprParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(Integer),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ExprParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push((start + 1, Tok::Int(text.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start + 1, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*^()".contains(c) {
            out.push((start + 1, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ExprParseError {
                pos: start + 1,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprParseError> {
        Err(ExprParseError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn sum(&mut self) -> Result<RingExpr, ExprParseError> {
        let mut terms = vec![self.product()?];
        loop {
            if self.eat('+') {
                terms.push(self.product()?);
            } else if self.eat('-') {
                terms.push(RingExpr::neg(self.product()?));
            } else {
                return Ok(RingExpr::add(terms));
            }
        }
    }

    fn product(&mut self) -> Result<RingExpr, ExprParseError> {
        let mut factors = vec![self.unary()?];
        while self.eat('*') {
            factors.push(self.unary()?);
        }
        Ok(RingExpr::mul(factors))
    }

    fn unary(&mut self) -> Result<RingExpr, ExprParseError> {
        if self.eat('-') {
            return Ok(RingExpr::neg(self.unary()?));
        }
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                let Ok(n) = i64::try_from(n) else {
                    return self.err("exponent too large");
                };
                Ok(RingExpr::pow(base, if negative { -n } else { n }))
            }
            _ => self.err("expected an integer exponent"),
        }
    }

    fn primary(&mut self) -> Result<RingExpr, ExprParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(RingExpr::Int(n))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if name == "inv" && self.peek() == Some(&Tok::Sym('(')) {
                    self.expect('(')?;
                    let e = self.sum()?;
                    self.expect(')')?;
                    Ok(RingExpr::inv(e))
                } else {
                    Ok(RingExpr::atom(name))
                }
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an infix expression: integers, identifiers, `+ - *`, `^n` with
/// `n` possibly negative, parentheses and `inv(...)`.
pub fn parse_expr(s: &str) -> Result<RingExpr, ExprParseError> {
    let mut p = Parser {
        toks: lex(s)?,
        at: 0,
        end: s.chars().count() + 1,
    };
    let e = p.sum()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        assert_eq!(parse_expr("a*(a+1)").unwrap().to_string(), "a (a + 1)");
        assert_eq!(parse_expr("5*eps").unwrap().to_string(), "5 eps");
        assert_eq!(
            parse_expr("inv(1 - t)^2").unwrap().to_string(),
            "(1 - t)^-1 (1 - t)^-1"
        );
        assert_eq!(parse_expr("x^-1").unwrap().to_string(), "x^-1");
        assert_eq!(parse_expr("-a - -b").unwrap().to_string(), "-a + b");
        assert_eq!(parse_expr("w_x").unwrap(), RingExpr::atom("w_x"));
    }

    #[test]
    fn reports_positions() {
        assert_eq!(parse_expr("a + ").unwrap_err().pos, 5);
        assert_eq!(parse_expr("a $ b").unwrap_err().pos, 3);
        assert_eq!(parse_expr("(a").unwrap_err().msg, "expected `)`");
        assert!(parse_expr("a b").is_err());
        assert!(parse_expr("a^b").is_err());
        assert!(parse_expr("").is_err());
    }
}
