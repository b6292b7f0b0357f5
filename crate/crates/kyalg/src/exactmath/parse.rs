use super::{rat_from_str, MathError, Poly, Result};

/// Parse a polynomial expression in one variable.
///
/// Accepts `+ - * / ^ ( )`, implicit multiplication (`2α^2`, `(a+1)(a-1)`),
/// the Unicode minus sign, and any of `a`, `α`, `x`, `d`, `δ` as the
/// variable.  Division is only by nonzero constants or exact divisors.
pub fn parse_poly(s: &str) -> Result<Poly> {
    let toks = lex(s)?;
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(MathError::Parse(format!("trailing input in {s:?}")));
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Var,
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut it = s.chars().peekable();
    while let Some(&c) = it.peek() {
        match c {
            c if c.is_whitespace() => {
                it.next();
            }
            '0'..='9' => {
                let mut n = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_digit() {
                        n.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Num(n));
            }
            'a' | 'α' | 'x' | 'd' | 'δ' => {
                it.next();
                out.push(Tok::Var);
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                it.next();
                out.push(Tok::Op(c));
            }
            '−' => {
                it.next();
                out.push(Tok::Op('-'));
            }
            '·' => {
                it.next();
                out.push(Tok::Op('*'));
            }
            _ => return Err(MathError::Parse(format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Var) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                if d.is_zero() {
                    return Err(MathError::DivisionByZero);
                }
                acc = acc.exact_div(&d)?;
            } else if self.starts_factor() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.primary()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.parse().map_err(|_| MathError::Parse(format!("bad exponent {n}")))?;
                    Ok(base.pow(e))
                }
                _ => Err(MathError::Parse("exponent must be a nonnegative integer".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Poly> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(rat_from_str(&n)?))
            }
            Some(Tok::Var) => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(MathError::Parse("missing ')'".into()));
                }
                Ok(v)
            }
            t => Err(MathError::Parse(format!("unexpected token {t:?}"))),
        }
    }
}
