//! Expression grammar shared by scalars and algebra elements.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' ['-'] integer)?
//! atom  := integer | 'q' | 'x' digit digit | 'det' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hopf::GlqElement;
use crate::mq::{det_q, MqElement};
use crate::scalars::{Rational, Scalar};

#[derive(Debug, Clone, PartialEq)]
enum Expr {
    Int(BigInt),
    Q,
    Gen(usize, usize),
    Det,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token::Int(text.parse().map_err(|_| Error::Parse(format!("bad integer {}", text)))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else if c == '\u{2212}' {
            out.push(Token::Op('-'));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{}'", c)));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_op('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat_op('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat_op('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat_op('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_op('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat_op('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat_op('^') {
            return Ok(base);
        }
        let neg = self.eat_op('-');
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Int(k)) => {
                self.pos += 1;
                let k: i64 = k.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }))
            }
            _ => Err(Error::Parse("expected integer exponent".into())),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self.tokens.get(self.pos).cloned().ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Token::Int(v) => Ok(Expr::Int(v)),
            Token::Ident(name) => ident(&name),
            Token::Op('(') => {
                let e = self.expr()?;
                if !self.eat_op(')') {
                    return Err(Error::Parse("expected ')'".into()));
                }
                Ok(e)
            }
            Token::Op(c) => Err(Error::Parse(format!("unexpected '{}'", c))),
        }
    }
}

fn ident(name: &str) -> Result<Expr> {
    if name == "q" {
        return Ok(Expr::Q);
    }
    if name == "det" {
        return Ok(Expr::Det);
    }
    let b = name.as_bytes();
    if b.len() == 3 && b[0] == b'x' && b[1].is_ascii_digit() && b[2].is_ascii_digit() {
        return Ok(Expr::Gen((b[1] - b'0') as usize, (b[2] - b'0') as usize));
    }
    Err(Error::Parse(format!("unknown identifier '{}'", name)))
}

fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser { tokens: tokenize(s)?, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input in '{}'", s)));
    }
    Ok(e)
}

fn eval_scalar(e: &Expr) -> Result<Scalar> {
    Ok(match e {
        Expr::Int(v) => Scalar::from_rational(Rational::from_integer(v.clone())),
        Expr::Q => Scalar::q(),
        Expr::Gen(..) | Expr::Det => return Err(Error::Parse("generator in scalar expression".into())),
        Expr::Add(a, b) => eval_scalar(a)? + eval_scalar(b)?,
        Expr::Sub(a, b) => eval_scalar(a)? - eval_scalar(b)?,
        Expr::Mul(a, b) => eval_scalar(a)? * eval_scalar(b)?,
        Expr::Div(a, b) => eval_scalar(a)?.checked_div(&eval_scalar(b)?)?,
        Expr::Neg(a) => -eval_scalar(a)?,
        Expr::Pow(a, k) => eval_scalar(a)?.pow(i32::try_from(*k).map_err(|_| Error::Parse("exponent too large".into()))?)?,
    })
}

fn eval_mq(e: &Expr, n: usize) -> Result<MqElement> {
    if let Ok(s) = eval_scalar(e) {
        return Ok(MqElement::constant(n, s));
    }
    Ok(match e {
        Expr::Gen(i, j) => MqElement::generator(n, *i, *j)?,
        Expr::Det => det_q(n),
        Expr::Add(a, b) => eval_mq(a, n)?.try_add(&eval_mq(b, n)?)?,
        Expr::Sub(a, b) => eval_mq(a, n)?.try_add(&-&eval_mq(b, n)?)?,
        Expr::Mul(a, b) => eval_mq(a, n)?.try_mul(&eval_mq(b, n)?)?,
        Expr::Div(a, b) => eval_mq(a, n)?.scale(&eval_scalar(b)?.inv()?),
        Expr::Neg(a) => -&eval_mq(a, n)?,
        Expr::Pow(a, k) if *k >= 0 => eval_mq(a, n)?.pow(*k as usize),
        Expr::Pow(..) => return Err(Error::Parse("negative power of a non-scalar".into())),
        Expr::Int(_) | Expr::Q => unreachable!("handled as scalars"),
    })
}

fn det_power(e: &Expr) -> Option<i64> {
    match e {
        Expr::Det => Some(1),
        Expr::Pow(b, k) if **b == Expr::Det => Some(*k),
        _ => None,
    }
}

fn eval_glq(e: &Expr, n: usize) -> Result<GlqElement> {
    if let Ok(m) = eval_mq(e, n) {
        return Ok(GlqElement::from_mq(m));
    }
    Ok(match e {
        Expr::Pow(b, k) if **b == Expr::Det && *k < 0 => GlqElement::det_inverse_pow(n, k.unsigned_abs() as u32),
        Expr::Add(a, b) => eval_glq(a, n)?.try_add(&eval_glq(b, n)?)?,
        Expr::Sub(a, b) => eval_glq(a, n)?.try_add(&eval_glq(b, n)?.neg())?,
        Expr::Mul(a, b) => eval_glq(a, n)?.try_mul(&eval_glq(b, n)?)?,
        Expr::Div(a, b) => {
            if let Ok(s) = eval_scalar(b) {
                eval_glq(a, n)?.scale(&s.inv()?)
            } else if let Some(k) = det_power(b) {
                let inv = if k >= 0 {
                    GlqElement::det_inverse_pow(n, k as u32)
                } else {
                    GlqElement::from_mq(crate::mq::det_q_pow(n, k.unsigned_abs() as usize))
                };
                eval_glq(a, n)?.try_mul(&inv)?
            } else {
                return Err(Error::Parse("only scalars and powers of det can divide".into()));
            }
        }
        Expr::Neg(a) => eval_glq(a, n)?.neg(),
        Expr::Pow(a, k) if *k >= 0 => {
            let base = eval_glq(a, n)?;
            let mut acc = GlqElement::one(n);
            for _ in 0..*k {
                acc = acc.try_mul(&base)?;
            }
            acc
        }
        _ => return Err(Error::Parse("expression is not an element of O(GL_q)".into())),
    })
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    eval_scalar(&parse_expr(s)?)
}

pub fn parse_mq(s: &str, n: usize) -> Result<MqElement> {
    eval_mq(&parse_expr(s)?, n)
}

/// Parse an element of O(GL_q); `det^-k` and division by powers of `det`
/// are allowed.
pub fn parse_glq(s: &str, n: usize) -> Result<GlqElement> {
    eval_glq(&parse_expr(s)?, n)
}

/// Parse a rational number, rejecting anything that depends on `q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let v = parse_scalar(s)?;
    v.as_rational().ok_or_else(|| Error::Parse(format!("'{}' is not a rational constant", s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn precedence_and_unary_minus() {
        assert_eq!(parse_scalar("-q^2 + 1").unwrap(), Scalar::one() - Scalar::q_pow(2));
        assert_eq!(parse_scalar("2*q^-1").unwrap(), Scalar::from_int(2) * Scalar::q_pow(-1));
        assert_eq!(parse_scalar("(q^2-1)/(q+1)").unwrap(), Scalar::q() - Scalar::one());
    }

    #[test]
    fn errors() {
        assert!(parse_scalar("q +").is_err());
        assert!(parse_scalar("x11").is_err());
        assert!(parse_scalar("1/(q-q)").is_err());
        assert!(parse_mq("x11^-1", 2).is_err());
        assert!(parse_mq("y12", 2).is_err());
        assert!(parse_mq("x31", 2).is_err());
        assert!(parse_rational("q").is_err());
    }

    #[test]
    fn det_inverse_in_glq() {
        let a = parse_glq("x11*x22*det^-1", 2).unwrap();
        let b = parse_glq("x11*x22/det", 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.detpow(), 1);
    }
}
